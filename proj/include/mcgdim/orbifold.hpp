#pragma once

// Quotient-orbifold arithmetic for a finite group F acting on a punctured
// surface: signatures, Riemann-Hurwitz, and the exact puncture-placement
// solver behind n_F.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace mcgdim {

using Rational = boost::rational<std::int64_t>;

class InconsistentSignature : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (g_F; p_1, ..., p_{o_F}).
class OrbifoldSignature {
 public:
  OrbifoldSignature(int quotient_genus, std::vector<int> periods);

  int quotient_genus() const noexcept { return quotient_genus_; }
  const std::vector<int>& periods() const noexcept { return periods_; }
  int elliptic_count() const noexcept { return static_cast<int>(periods_.size()); }

  /// "(0;2,2,4)", "(1;-)" when there are no elliptic points.
  std::string to_string() const;

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;

 private:
  int quotient_genus_;
  std::vector<int> periods_;
};

/// Whether punctures may, must, or must not sit on a given elliptic orbit.
enum class Occupancy { free, required, forbidden };

/// One Occupancy per elliptic point; an empty rule leaves every point free.
using PlacementRule = std::vector<Occupancy>;

struct PunctureDistribution {
  std::vector<int> occupied;  // elliptic-point indices, ascending
  int free_orbits = 0;
  int n_f = 0;  // o_F + free_orbits

  friend bool operator==(const PunctureDistribution&, const PunctureDistribution&) = default;
  friend auto operator<=>(const PunctureDistribution&, const PunctureDistribution&) = default;
};

/// 2 - 2*total_genus == order * (2 - 2*g_F - sum(1 - 1/p_i)), exactly.
bool riemann_hurwitz_check(int total_genus, std::int64_t order, const OrbifoldSignature& sig);

/// Every way to write n = a*|F| + sum_{i in occupied} |F|/p_i, each elliptic
/// orbit used at most once. Placements that differ only by swapping elliptic
/// points of equal period and equal rule are reported once (lowest indices).
std::vector<PunctureDistribution> feasible_distributions(std::int64_t order,
                                                         const OrbifoldSignature& sig,
                                                         std::int64_t n,
                                                         const PlacementRule& rule = {});

std::set<int> nf_values(std::int64_t order, const OrbifoldSignature& sig, std::int64_t n,
                        const PlacementRule& rule = {});

/// vcd of the Weyl group: vcd(Mod_{g_F}^{n_F}).
int vcd_weyl(int quotient_genus, int n_f);

/// Upper bound n/r - 1 on vcd(W(g)) for an order-r element of Mod_0^n.
Rational centralizer_vcd_bound(std::int64_t n, std::int64_t r);

}  // namespace mcgdim
