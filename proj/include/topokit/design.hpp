#pragma once

#include <cstdint>
#include <vector>

namespace topokit {

// Hard 0/1 material indicator per element. There are no intermediate
// densities anywhere in the pipeline; a design is a set of solid elements.
class DesignField {
 public:
  DesignField() = default;
  // n elements, all solid or all void.
  explicit DesignField(int n, bool solid = true);
  explicit DesignField(std::vector<std::uint8_t> values);

  int size() const { return static_cast<int>(values_.size()); }
  int solid_count() const { return solid_count_; }
  double volume_fraction() const {
    return values_.empty() ? 0.0 : static_cast<double>(solid_count_) / size();
  }

  bool is_solid(int e) const { return values_[static_cast<std::size_t>(e)] != 0; }
  void set(int e, bool solid);

  const std::vector<std::uint8_t>& values() const { return values_; }

  bool operator==(const DesignField& other) const { return values_ == other.values_; }

 private:
  std::vector<std::uint8_t> values_;
  int solid_count_ = 0;
};

// Number of elements whose state differs between the two designs.
// Throws std::invalid_argument on size mismatch.
int hamming_distance(const DesignField& a, const DesignField& b);

}  // namespace topokit
