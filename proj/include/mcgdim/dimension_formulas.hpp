#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcgdim {

/// Mod_g^n: orientation-preserving mapping classes of a genus-g surface with
/// n (permutable) punctures.
class MappingClassGroup {
 public:
  MappingClassGroup(int genus, int punctures);

  int genus() const noexcept { return genus_; }
  int punctures() const noexcept { return punctures_; }

  friend bool operator==(const MappingClassGroup&, const MappingClassGroup&) = default;
  friend auto operator<=>(const MappingClassGroup&, const MappingClassGroup&) = default;

 private:
  int genus_;
  int punctures_;
};

/// Raised when a dimension is only known through a result outside this library.
class ExternalResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GdOptions {
  // Closed surfaces of genus >= 1 are settled elsewhere; when set, Harer's vcd
  // is returned for them instead of throwing.
  bool allow_closed_surface = false;
};

/// Harer's virtual cohomological dimension of Mod_g^n.
int vcd_mcg(const MappingClassGroup& group) noexcept;

/// Proper geometric dimension. Equals vcd_mcg for every n >= 1.
int gd_mcg(const MappingClassGroup& group, GdOptions options = {});

/// vcd of the full spherical braid group B_n(S_0), n >= 1.
int vcd_spherical_braid(int strands);

/// Number of prime factors of `value`, counted with multiplicity.
int omega(std::int64_t value);

/// Exact form of log2(order): the largest l with 2^l <= order.
struct Log2Bound {
  std::int64_t order;
  int floor_log2;

  /// True iff 2^length <= order, i.e. length <= log2(order).
  bool admits(int length) const noexcept { return length >= 0 && length <= floor_log2; }
};

Log2Bound length_upper_bound(std::int64_t order);

/// 2^exponent >= value, evaluated without overflow. Negative exponents are
/// allowed (2^e < 1 then).
bool pow2_at_least(std::int64_t exponent, std::uint64_t value) noexcept;

}  // namespace mcgdim
