#include "mcgdim/permutation_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace mcgdim {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw std::invalid_argument("permutation images must be a bijection of 0..degree-1");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint16_t>>& cycles) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw std::invalid_argument("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw std::invalid_argument("degree mismatch");
  std::vector<std::uint16_t> images(degree());
  for (std::size_t x = 0; x < degree(); ++x) images[x] = next.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> images(degree());
  for (std::size_t x = 0; x < degree(); ++x) images[images_[x]] = static_cast<std::uint16_t>(x);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept { return fixed_points() == degree(); }

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t count = 0;
  for (std::size_t x = 0; x < degree(); ++x) count += images_[x] == x;
  return count;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw std::invalid_argument("permutation group needs degree >= 1");
  for (const auto& g : generators_) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator acts on " + std::to_string(g.degree()) +
                                  " points, expected " + std::to_string(degree));
    }
  }
}

std::vector<Permutation> enumerate_elements(const PermutationGroup& group) {
  std::set<Permutation> seen{Permutation::identity(group.degree())};
  std::deque<Permutation> frontier{Permutation::identity(group.degree())};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : group.generators()) {
      auto next = current.then(g);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxGroupOrder) {
          throw OrderBoundExceeded("group order exceeds " + std::to_string(kMaxGroupOrder));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

CayleyTable::CayleyTable(const PermutationGroup& group) : elements_(enumerate_elements(group)) {
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table_[a * n + b] = static_cast<std::uint8_t>(index_of(elements_[a].then(elements_[b])));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    inverses_[a] = static_cast<std::uint8_t>(index_of(elements_[a].inverse()));
  }
}

std::size_t CayleyTable::index_of(const Permutation& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::invalid_argument("not an element of the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

ElementMask CayleyTable::all() const noexcept {
  return order() == 64 ? ~ElementMask{0} : (ElementMask{1} << order()) - 1;
}

namespace {

template <typename F>
void for_each_bit(ElementMask mask, F&& f) {
  while (mask) {
    const int bit = std::countr_zero(mask);
    f(static_cast<std::size_t>(bit));
    mask &= mask - 1;
  }
}

}  // namespace

ElementMask CayleyTable::generated(ElementMask mask) const {
  ElementMask result = mask | 1;  // identity has index 0
  std::vector<std::size_t> frontier;
  for_each_bit(result, [&](std::size_t e) { frontier.push_back(e); });
  std::vector<std::size_t> gens;
  for_each_bit(mask, [&](std::size_t e) { gens.push_back(e); });
  while (!frontier.empty()) {
    const std::size_t a = frontier.back();
    frontier.pop_back();
    for (std::size_t g : gens) {
      const std::size_t product = multiply(a, g);
      const ElementMask bit = ElementMask{1} << product;
      if (!(result & bit)) {
        result |= bit;
        frontier.push_back(product);
      }
    }
  }
  return result;
}

bool CayleyTable::is_subgroup(ElementMask mask) const {
  if (!(mask & 1)) return false;
  bool closed = true;
  for_each_bit(mask, [&](std::size_t a) {
    if (!(mask >> inverse(a) & 1)) closed = false;
    for_each_bit(mask, [&](std::size_t b) {
      if (!(mask >> multiply(a, b) & 1)) closed = false;
    });
  });
  return closed;
}

ElementMask CayleyTable::derived_subgroup(ElementMask subgroup) const {
  ElementMask commutators = 1;
  for_each_bit(subgroup, [&](std::size_t a) {
    for_each_bit(subgroup, [&](std::size_t b) {
      const std::size_t c = multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
      commutators |= ElementMask{1} << c;
    });
  });
  return generated(commutators);
}

SubgroupLattice::SubgroupLattice(const CayleyTable& table) {
  std::unordered_set<ElementMask> seen;
  std::deque<ElementMask> queue;
  auto visit = [&](ElementMask h) {
    if (seen.insert(h).second) queue.push_back(h);
  };
  visit(1);
  while (!queue.empty()) {
    const ElementMask h = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < table.order(); ++g) {
      if (!(h >> g & 1)) visit(table.generated(h | ElementMask{1} << g));
    }
  }
  subgroups_.reserve(seen.size());
  for (ElementMask h : seen) {
    subgroups_.push_back({h, static_cast<std::size_t>(std::popcount(h))});
  }
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order != b.order ? a.order < b.order : a.elements < b.elements;
  });
}

bool SubgroupLattice::contains(std::size_t outer, std::size_t inner) const noexcept {
  return (subgroups_[inner].elements & ~subgroups_[outer].elements) == 0;
}

int SubgroupLattice::longest_chain() const {
  std::vector<int> length(subgroups_.size(), 0);
  for (std::size_t i = 1; i < subgroups_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (subgroups_[j].order < subgroups_[i].order && contains(i, j)) {
        length[i] = std::max(length[i], length[j] + 1);
      }
    }
  }
  return length.back();
}

SubgroupLattice subgroup_lattice(const PermutationGroup& group) {
  return SubgroupLattice(CayleyTable(group));
}

int chain_length(const PermutationGroup& group) { return subgroup_lattice(group).longest_chain(); }

bool is_solvable(const PermutationGroup& group) {
  const CayleyTable table(group);
  ElementMask current = table.all();
  while (current != 1) {
    const ElementMask next = table.derived_subgroup(current);
    if (next == current) return false;
    current = next;
  }
  return true;
}

int burnside_orbit_count(std::span<const Permutation> element_actions) {
  if (element_actions.empty()) throw std::invalid_argument("action needs at least the identity");
  std::size_t fixed_total = 0;
  for (const auto& p : element_actions) fixed_total += p.fixed_points();
  if (fixed_total % element_actions.size() != 0) {
    throw NonIntegralBurnsideSum("sum of fixed points " + std::to_string(fixed_total) +
                                 " is not divisible by " +
                                 std::to_string(element_actions.size()));
  }
  return static_cast<int>(fixed_total / element_actions.size());
}

int burnside_orbit_count(const PermutationGroup& group) {
  const auto elements = enumerate_elements(group);
  return burnside_orbit_count(std::span<const Permutation>(elements));
}

namespace models {

PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree, {}); }

PermutationGroup cyclic(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cyclic group needs m >= 1");
  std::vector<std::uint16_t> cycle(m);
  std::iota(cycle.begin(), cycle.end(), std::uint16_t{0});
  return PermutationGroup(m, {Permutation::from_cycles(m, {cycle})});
}

PermutationGroup dihedral(std::size_t m) {
  if (m < 2) throw std::invalid_argument("dihedral group D_{2m} needs m >= 2");
  if (m == 2) return klein_four();
  std::vector<std::uint16_t> rotation(m), reflection(m);
  for (std::size_t i = 0; i < m; ++i) {
    rotation[i] = static_cast<std::uint16_t>((i + 1) % m);
    reflection[i] = static_cast<std::uint16_t>((m - i) % m);
  }
  return PermutationGroup(m, {Permutation(rotation), Permutation(reflection)});
}

PermutationGroup klein_four() {
  return PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                              Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

// Rotations of a tetrahedron acting on its 4 vertices.
PermutationGroup alternating4() {
  return PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                              Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
}

PermutationGroup symmetric4() {
  return PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                              Permutation::from_cycles(4, {{0, 1}})});
}

PermutationGroup alternating5() {
  return PermutationGroup(5, {Permutation::from_cycles(5, {{0, 1, 2}}),
                              Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
}

}  // namespace models

}  // namespace mcgdim
