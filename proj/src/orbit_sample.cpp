#include "orbitkit/orbit_sample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "orbitkit/errors.hpp"
#include "orbitkit/rng.hpp"

namespace orbitkit {

namespace {

// Canonical cloud order: shorter words first, then letterwise (family index,
// duration), then lexicographic endpoint.
struct EntryLess {
  const FieldFamily& family;

  bool operator()(const OrbitSample::Entry& a, const OrbitSample::Entry& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    for (std::size_t i = 0; i < a.word.size(); ++i) {
      const auto ia = family.index_of(a.word.letters[i].field);
      const auto ib = family.index_of(b.word.letters[i].field);
      if (ia != ib) return ia < ib;
      if (a.word.letters[i].duration != b.word.letters[i].duration)
        return a.word.letters[i].duration < b.word.letters[i].duration;
    }
    for (int i = 0; i < a.point.size(); ++i)
      if (a.point[i] != b.point[i]) return a.point[i] < b.point[i];
    return false;
  }
};

} // namespace

OrbitSample accessible_sample(const FieldFamily& family, const Vec& x0, const SamplerOptions& opts,
                              const IntegratorConfig& cfg) {
  if (family.empty()) throw std::invalid_argument("accessible_sample: empty field family");
  const SubsetModel& model = family.fields()[0].domain;
  if (!model.contains(x0, cfg.escape_tol))
    throw InputError("accessible_sample: base point not in the model");
  if (opts.word_count < 0 || opts.max_letters < 1 || !(opts.time_scale > 0))
    throw std::invalid_argument("accessible_sample: bad sampler options");

  OrbitSample out;
  out.base_point = x0;
  out.model = model;
  out.cloud.push_back({x0, FlowWord{}});

  Rng rng(opts.seed);
  for (int w = 0; w < opts.word_count; ++w) {
    FlowWord word;
    const int len = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(opts.max_letters)));
    for (int i = 0; i < len; ++i) {
      const auto fi = rng.index(family.size());
      const double dur = rng.real(-opts.time_scale, opts.time_scale);
      word.letters.push_back({family.fields()[fi].label, dur});
    }
    try {
      Vec endpoint = flow_word_endpoint(word, x0, family, cfg);
      out.cloud.push_back({std::move(endpoint), std::move(word)});
    } catch (const EscapedSubsetError&) {
      ++out.dropped_words;
    }
  }

  std::stable_sort(out.cloud.begin(), out.cloud.end(), EntryLess{family});

  // Re-verify every point by replaying its word.
  for (const auto& e : out.cloud) {
    const Vec again = e.word.empty() ? x0 : flow_word_endpoint(e.word, x0, family, cfg);
    const double err = (again - e.point).norm();
    out.replay_residual = std::max(out.replay_residual, err);
    if (err > 1e-6 * std::max(1.0, e.point.norm()))
      throw std::runtime_error("accessible_sample: replay verification failed");
  }
  return out;
}

void OrbitSample::write_cloud_csv(std::ostream& os) const {
  const int n = static_cast<int>(base_point.size());
  os << "word_id";
  for (int i = 0; i < n; ++i) os << ",x" << (i + 1);
  os << "\n";
  char buf[32];
  for (std::size_t id = 0; id < cloud.size(); ++id) {
    os << id;
    for (int i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", cloud[id].point[i]);
      os << "," << buf;
    }
    os << "\n";
  }
}

void OrbitSample::write_words_json(std::ostream& os) const {
  nlohmann::ordered_json j;
  for (std::size_t id = 0; id < cloud.size(); ++id) {
    nlohmann::ordered_json letters = nlohmann::ordered_json::array();
    for (const auto& l : cloud[id].word.letters)
      letters.push_back({{"field", l.field}, {"t", l.duration}});
    j[std::to_string(id)] = std::move(letters);
  }
  os << j.dump(2) << "\n";
}

} // namespace orbitkit
