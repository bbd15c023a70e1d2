#ifndef ORBITKIT_ORBIT_SAMPLE_HPP
#define ORBITKIT_ORBIT_SAMPLE_HPP

#include <cstdint>
#include <iosfwd>

#include "orbitkit/flow_word.hpp"

namespace orbitkit {

/// Sampled accessible set: a point cloud where every point carries the flow
/// word that generated it. Entry 0 is always the base point with the empty
/// word. The order is canonical (words compared by length, letters, then
/// endpoints), so results do not depend on evaluation order.
struct OrbitSample {
  struct Entry {
    Vec point;
    FlowWord word;
  };

  Vec base_point;
  std::vector<Entry> cloud;
  SubsetModel model = SubsetModel::full_space(1);
  int dropped_words = 0;        // words that escaped the model mid-flow
  double replay_residual = 0.0; // worst re-verification error observed

  std::size_t size() const { return cloud.size(); }

  /// CSV with header word_id,x1,...,xn; word_id is the row index.
  void write_cloud_csv(std::ostream& os) const;
  /// JSON sidecar mapping word_id -> letter list.
  void write_words_json(std::ostream& os) const;
};

struct SamplerOptions {
  int word_count = 200;
  int max_letters = 4;
  double time_scale = 1.0;
  std::uint64_t seed = 0;
};

/// Draw random flow words (uniform letters, durations uniform in
/// [-time_scale, time_scale]) and collect the surviving endpoints. Words
/// whose flow escapes the model are dropped and counted. Every surviving
/// point is re-verified by replaying its word.
OrbitSample accessible_sample(const FieldFamily& family, const Vec& x0, const SamplerOptions& opts,
                              const IntegratorConfig& cfg);

} // namespace orbitkit

#endif
