#pragma once

// Exact finite-group computations for groups of order <= 60, realized as
// permutation groups. Elements are indexed through a Cayley table so that
// subgroups fit in a single 64-bit mask.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace mcgdim {

inline constexpr std::size_t kMaxGroupOrder = 60;

class OrderBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegralBurnsideSum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bijection of {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t degree);
  /// Cycle notation helper, e.g. from_cycles(4, {{0, 1, 2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint16_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint16_t operator()(std::size_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  /// (a * b)(x) = b(a(x)): apply a first.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t fixed_points() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

/// All elements, sorted, identity first. Throws OrderBoundExceeded past 60.
std::vector<Permutation> enumerate_elements(const PermutationGroup& group);

using ElementMask = std::uint64_t;

/// A group of order <= 60 as a Cayley table.
class CayleyTable {
 public:
  explicit CayleyTable(const PermutationGroup& group);

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t multiply(std::size_t a, std::size_t b) const noexcept { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const noexcept { return inverses_[a]; }
  std::size_t index_of(const Permutation& p) const;
  ElementMask all() const noexcept;

  /// Smallest subgroup containing every element of `mask`.
  ElementMask generated(ElementMask mask) const;
  bool is_subgroup(ElementMask mask) const;
  ElementMask derived_subgroup(ElementMask subgroup) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> inverses_;
};

class SubgroupLattice {
 public:
  struct Subgroup {
    ElementMask elements;
    std::size_t order;
  };

  explicit SubgroupLattice(const CayleyTable& table);

  /// Subgroups sorted by order then mask; index 0 is trivial, back() is the whole group.
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t full_index() const noexcept { return subgroups_.size() - 1; }
  /// inner <= outer as subgroups (set inclusion).
  bool contains(std::size_t outer, std::size_t inner) const noexcept;
  /// Longest strictly increasing chain from the trivial group to the whole group.
  int longest_chain() const;

 private:
  std::vector<Subgroup> subgroups_;
};

SubgroupLattice subgroup_lattice(const PermutationGroup& group);

/// Length lambda(G) of the group.
int chain_length(const PermutationGroup& group);

bool is_solvable(const PermutationGroup& group);

/// Orbits of the marked set via Burnside: (1/|G|) * sum of fixed points.
/// `element_actions` lists the image of every group element as a permutation
/// of the marked set (one entry per element, repeats allowed for
/// non-faithful actions).
int burnside_orbit_count(std::span<const Permutation> element_actions);
/// The natural action of `group` on its points.
int burnside_orbit_count(const PermutationGroup& group);

/// Concrete permutation models of the groups used in the catalogs.
namespace models {
PermutationGroup trivial(std::size_t degree = 1);
PermutationGroup cyclic(std::size_t m);
/// Dihedral group of order 2m (m >= 2); m = 2 is the Klein four-group on 4 points.
PermutationGroup dihedral(std::size_t m);
PermutationGroup klein_four();
PermutationGroup alternating4();
PermutationGroup symmetric4();
PermutationGroup alternating5();
}  // namespace models

}  // namespace mcgdim
