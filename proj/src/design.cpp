#include "topokit/design.hpp"

#include <stdexcept>

namespace topokit {

DesignField::DesignField(int n, bool solid)
    : values_(static_cast<std::size_t>(n), solid ? 1 : 0),
      solid_count_(solid ? n : 0) {
  if (n < 0) throw std::invalid_argument("DesignField: negative element count");
}

DesignField::DesignField(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto& v : values_) {
    if (v > 1) throw std::invalid_argument("DesignField: values must be 0 or 1");
    solid_count_ += v;
  }
}

void DesignField::set(int e, bool solid) {
  auto& v = values_[static_cast<std::size_t>(e)];
  solid_count_ += (solid ? 1 : 0) - (v ? 1 : 0);
  v = solid ? 1 : 0;
}

int hamming_distance(const DesignField& a, const DesignField& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: size mismatch");
  int d = 0;
  for (int e = 0; e < a.size(); ++e) d += a.is_solid(e) != b.is_solid(e);
  return d;
}

}  // namespace topokit
