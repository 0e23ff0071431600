#pragma once

// Classification catalogs of finite subgroups of Mod_0^n, Mod_1^n and Mod_2^n.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mcgdim/dimension_formulas.hpp"
#include "mcgdim/orbifold.hpp"
#include "mcgdim/permutation_group.hpp"

namespace mcgdim {

namespace family {
struct Cyclic {
  int m;
};
/// D_{2(m)}, order 2m.
struct Dihedral {
  int m;
};
struct Tetrahedral {};  // A_4
struct Octahedral {};   // S_4
struct Icosahedral {};  // A_5
/// (Z/s x Z/t) semidirect Z/m acting on the torus.
struct WallpaperTorus {
  int s, t, m;
};
/// A row of Broughton's genus-2 classification, kept as data.
struct BroughtonRow {
  std::string label;
  int order;
};
}  // namespace family

using GroupFamily = std::variant<family::Cyclic, family::Dihedral, family::Tetrahedral,
                                 family::Octahedral, family::Icosahedral,
                                 family::WallpaperTorus, family::BroughtonRow>;

class FiniteGroupSpec {
 public:
  /// Builds the spec with its order, solvability and (where small enough)
  /// a permutation model.
  explicit FiniteGroupSpec(GroupFamily family);

  const GroupFamily& family() const noexcept { return family_; }
  int order() const noexcept { return order_; }
  bool solvable() const noexcept { return solvable_; }
  const std::optional<PermutationGroup>& permutation_model() const noexcept { return model_; }

  /// Human label in appendix notation: Z/4, D_{2(5)}, A_4, S_4, A_5, ...
  std::string label() const;
  /// Mechanical family name: cyclic, dihedral, A4, S4, A5, wallpaper, broughton.
  std::string family_name() const;

 private:
  GroupFamily family_;
  int order_;
  bool solvable_;
  std::optional<PermutationGroup> model_;
};

struct CatalogEntry {
  FiniteGroupSpec group;
  MappingClassGroup ambient;
  OrbifoldSignature signature;
  PlacementRule placement;  // empty: unconstrained
  int class_count = 1;
  std::string case_label;  // "(1)", "(2.1)", ..., "(poly)", "wallpaper", "broughton"
  std::string source;
};

/// Maximal finite subgroups of Mod_0^n (n >= 3), up to isomorphism.
std::vector<FiniteGroupSpec> maximal_genus0(int n);

/// Nontrivial finite subgroups of Mod_0^n, one entry per placement case.
/// Cyclic and dihedral entries come from the rotation subgroups of Z/(n-1),
/// D_{2n}, D_{2(n-2)}; polyhedral entries are kept where a placement exists.
std::vector<CatalogEntry> subgroups_genus0(int n);

/// Every (s, t, m) with st | n and m in {1,2,3,4,6}.
std::vector<CatalogEntry> families_genus1(int n);

/// The 20 rows of Broughton's genus-2 table; ambient punctures are set to n.
std::vector<CatalogEntry> broughton_genus2(int n = 0);

/// Number of conjugacy classes of subgroups isomorphic to `group` in Mod_0^n.
int conjugacy_class_count(const FiniteGroupSpec& group, int n);

/// lambda(F): Omega(|F|) for solvable groups, lattice search otherwise.
int group_length(const FiniteGroupSpec& group);

/// Stable schema: {family, label, params, order, solvable,
/// signature:{genus, periods[]}, ambient:{genus, punctures}, class_count, case, source}.
nlohmann::json to_json(const FiniteGroupSpec& spec);
nlohmann::json to_json(const CatalogEntry& entry);

}  // namespace mcgdim
