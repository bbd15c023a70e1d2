#ifndef ORBITKIT_FIELD_FAMILY_HPP
#define ORBITKIT_FIELD_FAMILY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "orbitkit/vector_field.hpp"

namespace orbitkit {

/// Labeled list of vector fields on a common ambient space. Labels are
/// unique; flow words refer to fields through them.
class FieldFamily {
public:
  FieldFamily() = default;
  explicit FieldFamily(std::vector<VectorField> fields) : fields_(std::move(fields)) {
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (fields_[i].dim() != fields_[0].dim())
        throw std::invalid_argument("field family: ambient dimension mismatch");
      for (std::size_t j = 0; j < i; ++j)
        if (fields_[j].label == fields_[i].label)
          throw std::invalid_argument("field family: duplicate label '" + fields_[i].label + "'");
    }
  }

  const std::vector<VectorField>& fields() const { return fields_; }
  bool empty() const { return fields_.empty(); }
  std::size_t size() const { return fields_.size(); }
  int dim() const { return fields_.empty() ? 0 : fields_[0].dim(); }

  bool has(const std::string& label) const {
    for (const auto& f : fields_)
      if (f.label == label) return true;
    return false;
  }

  const VectorField& by_label(const std::string& label) const {
    for (const auto& f : fields_)
      if (f.label == label) return f;
    throw std::invalid_argument("field family: unknown label '" + label + "'");
  }

  /// Position of a label in the family; used for canonical word ordering.
  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < fields_.size(); ++i)
      if (fields_[i].label == label) return i;
    throw std::invalid_argument("field family: unknown label '" + label + "'");
  }

private:
  std::vector<VectorField> fields_;
};

} // namespace orbitkit

#endif
