#include "mcgdim/dimension_formulas.hpp"

#include <bit>
#include <string>

namespace mcgdim {

MappingClassGroup::MappingClassGroup(int genus, int punctures)
    : genus_(genus), punctures_(punctures) {
  if (genus < 0 || punctures < 0) {
    throw std::invalid_argument("Mod_g^n needs g >= 0 and n >= 0, got g=" + std::to_string(genus) +
                                " n=" + std::to_string(punctures));
  }
}

int vcd_mcg(const MappingClassGroup& group) noexcept {
  const int g = group.genus();
  const int n = group.punctures();
  if (g == 0) return n < 3 ? 0 : n - 3;
  if (n == 0) return g == 1 ? 1 : 4 * g - 5;
  return 4 * g - 4 + n;
}

int gd_mcg(const MappingClassGroup& group, GdOptions options) {
  if (group.genus() >= 1 && group.punctures() == 0 && !options.allow_closed_surface) {
    throw ExternalResult("gd(Mod_" + std::to_string(group.genus()) +
                         ") for a closed surface is covered by Aramayona-Martinez Perez, "
                         "not by this library");
  }
  return vcd_mcg(group);
}

int vcd_spherical_braid(int strands) {
  if (strands < 1) throw std::invalid_argument("spherical braid group needs n >= 1");
  return strands > 3 ? strands - 3 : 0;
}

int omega(std::int64_t value) {
  if (value < 1) throw std::invalid_argument("omega needs a positive integer");
  int count = 0;
  for (std::int64_t p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      value /= p;
      ++count;
    }
  }
  return value > 1 ? count + 1 : count;
}

Log2Bound length_upper_bound(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  const int floor_log2 = std::bit_width(static_cast<std::uint64_t>(order)) - 1;
  return {order, floor_log2};
}

bool pow2_at_least(std::int64_t exponent, std::uint64_t value) noexcept {
  if (exponent < 0) return value == 0;
  if (exponent >= 64) return true;
  return (std::uint64_t{1} << exponent) >= value;
}

}  // namespace mcgdim
