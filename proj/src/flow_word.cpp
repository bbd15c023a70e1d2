#include "orbitkit/flow_word.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

std::pair<Vec, std::vector<IntegralCurve>> flow_word_apply(const FlowWord& word, const Vec& x0,
                                                           const FieldFamily& family,
                                                           const IntegratorConfig& cfg) {
  Vec x = x0;
  std::vector<IntegralCurve> curves;
  curves.reserve(word.letters.size());
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    const auto& letter = word.letters[i];
    const VectorField& X = family.by_label(letter.field);
    IntegralCurve curve = integrate(X, x, letter.duration, cfg);
    if (!curve.reached(letter.duration))
      throw EscapedSubsetError("flow word: letter " + std::to_string(i) + " (" + letter.field +
                                   ", t=" + std::to_string(letter.duration) + ") terminated with " +
                                   to_string(curve.termination(letter.duration)),
                               static_cast<int>(i));
    x = curve.endpoint(letter.duration);
    curves.push_back(std::move(curve));
  }
  return {x, std::move(curves)};
}

Vec flow_word_endpoint(const FlowWord& word, const Vec& x0, const FieldFamily& family,
                       const IntegratorConfig& cfg) {
  Vec x = x0;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    const auto& letter = word.letters[i];
    const VectorField& X = family.by_label(letter.field);
    IntegralCurve curve = integrate(X, x, letter.duration, cfg);
    if (!curve.reached(letter.duration))
      throw EscapedSubsetError("flow word: letter " + std::to_string(i) + " terminated early",
                               static_cast<int>(i));
    x = curve.endpoint(letter.duration);
  }
  return x;
}

} // namespace orbitkit
