#include "mcgdim/orbifold.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mcgdim/dimension_formulas.hpp"

namespace mcgdim {

namespace {

// Hard cap on elliptic points; the subset enumeration is 2^o_F.
constexpr int kMaxEllipticPoints = 20;

}  // namespace

OrbifoldSignature::OrbifoldSignature(int quotient_genus, std::vector<int> periods)
    : quotient_genus_(quotient_genus), periods_(std::move(periods)) {
  if (quotient_genus < 0) throw std::invalid_argument("quotient genus must be >= 0");
  for (int p : periods_) {
    if (p < 2) throw std::invalid_argument("elliptic periods must be >= 2");
  }
}

std::string OrbifoldSignature::to_string() const {
  std::ostringstream out;
  out << '(' << quotient_genus_ << ';';
  if (periods_.empty()) out << '-';
  for (std::size_t i = 0; i < periods_.size(); ++i) out << (i ? "," : "") << periods_[i];
  out << ')';
  return out.str();
}

bool riemann_hurwitz_check(int total_genus, std::int64_t order, const OrbifoldSignature& sig) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  Rational orbifold_chi(2 - 2 * sig.quotient_genus());
  for (int p : sig.periods()) orbifold_chi -= Rational(1) - Rational(1, p);
  return Rational(2 - 2 * total_genus) == Rational(order) * orbifold_chi;
}

std::vector<PunctureDistribution> feasible_distributions(std::int64_t order,
                                                         const OrbifoldSignature& sig,
                                                         std::int64_t n,
                                                         const PlacementRule& rule) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (n < 0) throw std::invalid_argument("puncture count must be >= 0");
  const int points = sig.elliptic_count();
  if (points > kMaxEllipticPoints) throw std::invalid_argument("too many elliptic points");
  if (!rule.empty() && static_cast<int>(rule.size()) != points) {
    throw std::invalid_argument("placement rule needs one entry per elliptic point");
  }
  std::vector<std::int64_t> orbit_size(points);
  for (int i = 0; i < points; ++i) {
    const int p = sig.periods()[i];
    if (order % p != 0) {
      throw InconsistentSignature("period " + std::to_string(p) + " does not divide |F|=" +
                                  std::to_string(order));
    }
    orbit_size[i] = order / p;
  }
  auto rule_at = [&](int i) { return rule.empty() ? Occupancy::free : rule[i]; };

  // Canonical key: (free orbits, sorted (period, rule) of occupied points).
  std::map<std::pair<std::int64_t, std::vector<std::pair<int, int>>>, PunctureDistribution> unique;
  for (std::uint32_t subset = 0; subset < (1u << points); ++subset) {
    std::int64_t on_elliptic = 0;
    bool allowed = true;
    for (int i = 0; i < points && allowed; ++i) {
      const bool used = subset >> i & 1;
      const Occupancy r = rule_at(i);
      if ((used && r == Occupancy::forbidden) || (!used && r == Occupancy::required)) {
        allowed = false;
      }
      if (used) on_elliptic += orbit_size[i];
    }
    if (!allowed || on_elliptic > n || (n - on_elliptic) % order != 0) continue;

    PunctureDistribution d;
    d.free_orbits = static_cast<int>((n - on_elliptic) / order);
    d.n_f = points + d.free_orbits;
    std::vector<std::pair<int, int>> key;
    for (int i = 0; i < points; ++i) {
      if (subset >> i & 1) {
        d.occupied.push_back(i);
        key.emplace_back(sig.periods()[i], static_cast<int>(rule_at(i)));
      }
    }
    std::sort(key.begin(), key.end());
    // Subsets are visited in increasing bitmask order, so the first hit for a
    // key is not necessarily the lowest-index choice; keep the smaller one.
    auto [it, inserted] = unique.try_emplace({d.free_orbits, key}, d);
    if (!inserted && d.occupied < it->second.occupied) it->second = d;
  }
  std::vector<PunctureDistribution> out;
  out.reserve(unique.size());
  for (auto& [key, d] : unique) out.push_back(std::move(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> nf_values(std::int64_t order, const OrbifoldSignature& sig, std::int64_t n,
                        const PlacementRule& rule) {
  std::set<int> values;
  for (const auto& d : feasible_distributions(order, sig, n, rule)) values.insert(d.n_f);
  return values;
}

int vcd_weyl(int quotient_genus, int n_f) {
  return vcd_mcg(MappingClassGroup(quotient_genus, n_f));
}

Rational centralizer_vcd_bound(std::int64_t n, std::int64_t r) {
  if (n < 3) throw std::invalid_argument("centralizer bound needs n >= 3");
  if (r < 2) throw std::invalid_argument("element order must be >= 2");
  if (r > n) {
    throw std::invalid_argument("a finite-order element of Mod_0^n has order r <= n, got r=" +
                                std::to_string(r) + " n=" + std::to_string(n));
  }
  return Rational(n, r) - 1;
}

}  // namespace mcgdim
