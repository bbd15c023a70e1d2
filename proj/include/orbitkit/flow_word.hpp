#ifndef ORBITKIT_FLOW_WORD_HPP
#define ORBITKIT_FLOW_WORD_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitkit/field_family.hpp"
#include "orbitkit/integrator.hpp"

namespace orbitkit {

/// One letter of a flow word: follow the labeled field for the given
/// (signed) duration.
struct FlowLetter {
  std::string field;
  double duration = 0.0;
};

/// Finite composition of flows, applied left to right: the first letter
/// acts first. The empty word is the identity.
struct FlowWord {
  std::vector<FlowLetter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
};

/// Endpoint of the composed flow together with the per-letter curves.
/// Throws EscapedSubsetError (with the offending letter index) if any
/// letter's integration terminates before its duration elapses.
std::pair<Vec, std::vector<IntegralCurve>> flow_word_apply(const FlowWord& word, const Vec& x0,
                                                           const FieldFamily& family,
                                                           const IntegratorConfig& cfg);

/// Endpoint only; same failure contract as flow_word_apply.
Vec flow_word_endpoint(const FlowWord& word, const Vec& x0, const FieldFamily& family,
                       const IntegratorConfig& cfg);

} // namespace orbitkit

#endif
