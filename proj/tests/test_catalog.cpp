#include <doctest.h>

#include <algorithm>

#include "mcgdim/catalog.hpp"
#include "mcgdim/dimension_formulas.hpp"
#include "mcgdim/permutation_group.hpp"
#include "oracles.hpp"

using namespace mcgdim;

namespace {

std::vector<std::string> labels(const std::vector<FiniteGroupSpec>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) out.push_back(s.label());
  return out;
}

bool has_label(const std::vector<CatalogEntry>& entries, const std::string& label) {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const CatalogEntry& e) { return e.group.label() == label; });
}

}  // namespace

TEST_CASE("FiniteGroupSpec orders and labels") {
  CHECK(FiniteGroupSpec(family::Cyclic{7}).order() == 7);
  CHECK(FiniteGroupSpec(family::Dihedral{5}).order() == 10);
  CHECK(FiniteGroupSpec(family::Dihedral{5}).label() == "D_{2(5)}");
  CHECK(FiniteGroupSpec(family::Tetrahedral{}).order() == 12);
  CHECK(FiniteGroupSpec(family::Octahedral{}).order() == 24);
  CHECK(FiniteGroupSpec(family::Icosahedral{}).order() == 60);
  CHECK_FALSE(FiniteGroupSpec(family::Icosahedral{}).solvable());
  CHECK(FiniteGroupSpec(family::WallpaperTorus{2, 3, 4}).order() == 24);
  CHECK(FiniteGroupSpec(family::BroughtonRow{"SL_2(3)", 24}).order() == 24);
}

TEST_CASE("permutation models match the family order") {
  std::vector<FiniteGroupSpec> specs = {FiniteGroupSpec(family::Tetrahedral{}),
                                        FiniteGroupSpec(family::Octahedral{}),
                                        FiniteGroupSpec(family::Icosahedral{})};
  for (int m = 2; m <= 30; ++m) {
    specs.emplace_back(family::Cyclic{m});
    specs.emplace_back(family::Dihedral{m});
  }
  for (const auto& s : specs) {
    REQUIRE(s.permutation_model());
    CHECK(enumerate_elements(*s.permutation_model()).size() == static_cast<std::size_t>(s.order()));
    if (s.solvable()) CHECK(chain_length(*s.permutation_model()) == omega(s.order()));
    CHECK(group_length(s) == chain_length(*s.permutation_model()));
  }
}

TEST_CASE("maximal_genus0") {
  CHECK(labels(maximal_genus0(5)) == std::vector<std::string>{"Z/4", "D_{2(5)}", "D_{2(3)}"});
  const auto twelve = labels(maximal_genus0(12));
  CHECK(std::count(twelve.begin(), twelve.end(), "S_4") == 1);
  CHECK(std::count(twelve.begin(), twelve.end(), "A_5") == 1);
  CHECK(labels(maximal_genus0(4)) == std::vector<std::string>{"D_{2(4)}", "A_4"});
  CHECK_THROWS(maximal_genus0(2));
}

TEST_CASE("subgroups_genus0") {
  const auto eight = subgroups_genus0(8);
  std::vector<std::string> cyclic_dihedral;
  for (const auto& e : eight) {
    if (e.case_label != "(poly)") cyclic_dihedral.push_back(e.group.label());
  }
  CHECK(cyclic_dihedral == std::vector<std::string>{"Z/7", "Z/8", "Z/4", "Z/2", "D_{2(8)}",
                                                    "D_{2(4)}", "D_{2(2)}", "Z/6", "Z/3", "Z/2",
                                                    "D_{2(6)}", "D_{2(3)}", "D_{2(2)}"});
  CHECK(subgroups_genus0(5).size() == 6);
  const auto ten = subgroups_genus0(10);
  auto a4 = std::find_if(ten.begin(), ten.end(), [](const auto& e) { return e.group.label() == "A_4"; });
  REQUIRE(a4 != ten.end());
  CHECK(a4->signature == OrbifoldSignature(0, {2, 3, 3}));
}

TEST_CASE("every catalog entry satisfies Riemann-Hurwitz") {
  for (int n = 3; n <= 120; ++n) {
    for (const auto& e : subgroups_genus0(n)) {
      CHECK(riemann_hurwitz_check(0, e.group.order(), e.signature));
      CHECK(e.class_count == conjugacy_class_count(e.group, n));
    }
  }
  for (int n = 1; n <= 60; ++n) {
    for (const auto& e : families_genus1(n)) CHECK(riemann_hurwitz_check(1, e.group.order(), e.signature));
  }
  for (const auto& e : broughton_genus2()) CHECK(riemann_hurwitz_check(2, e.group.order(), e.signature));
}

TEST_CASE("polyhedral entries follow the maximality congruences") {
  for (int n = 3; n <= 240; ++n) {
    const auto entries = subgroups_genus0(n);
    const std::vector<int> s4 = {0, 2, 6, 8, 12, 14, 18, 20};
    const std::vector<int> a5 = {0, 2, 12, 20, 30, 32, 42, 50};
    CHECK(has_label(entries, "S_4") == (std::find(s4.begin(), s4.end(), n % 24) != s4.end()));
    CHECK(has_label(entries, "A_5") == (std::find(a5.begin(), a5.end(), n % 60) != a5.end()));
    CHECK(has_label(entries, "A_4") == (n % 2 == 0 && n >= 4));
  }
}

TEST_CASE("conjugacy_class_count") {
  CHECK(conjugacy_class_count(FiniteGroupSpec(family::Cyclic{2}), 10) == 2);
  CHECK(conjugacy_class_count(FiniteGroupSpec(family::Dihedral{4}), 8) == 2);
  CHECK(conjugacy_class_count(FiniteGroupSpec(family::Cyclic{5}), 11) == 1);
  CHECK(conjugacy_class_count(FiniteGroupSpec(family::Dihedral{3}), 9) == 1);
}

TEST_CASE("families_genus1") {
  const auto four = families_genus1(4);
  auto hit = std::find_if(four.begin(), four.end(), [](const CatalogEntry& e) {
    const auto& w = std::get<family::WallpaperTorus>(e.group.family());
    return w.s == 1 && w.t == 1 && w.m == 2;
  });
  REQUIRE(hit != four.end());
  CHECK(hit->group.order() == 2);
  CHECK(hit->signature == OrbifoldSignature(0, {2, 2, 2, 2}));
  const auto six = families_genus1(6);
  CHECK(std::any_of(six.begin(), six.end(), [](const CatalogEntry& e) {
    const auto& w = std::get<family::WallpaperTorus>(e.group.family());
    return w.s == 2 && w.t == 3 && w.m == 1 && e.group.order() == 6 &&
           e.signature == OrbifoldSignature(1, {});
  }));
  for (const auto& e : families_genus1(2)) {
    const auto& w = std::get<family::WallpaperTorus>(e.group.family());
    CHECK(2 % (w.s * w.t) == 0);
  }
  for (int n = 1; n <= 100; ++n) {
    std::size_t pairs = 0;
    for (int s = 1; s <= n; ++s) {
      for (int t = 1; t <= n; ++t) pairs += n % (s * t) == 0 ? 1 : 0;
    }
    CHECK(families_genus1(n).size() == 5 * pairs);
  }
}

TEST_CASE("broughton_genus2") {
  const auto rows = broughton_genus2();
  REQUIRE(rows.size() == 20);
  CHECK(rows[0].group.label() == "Z/2");
  CHECK(rows[1].signature == OrbifoldSignature(1, {2, 2}));
  CHECK(rows[5].group.label() == "Z/5");
  CHECK(rows[5].signature == OrbifoldSignature(0, {5, 5, 5}));
  CHECK(rows.back().group.order() == 48);
  for (const auto& r : rows) CHECK(r.group.solvable());
}

TEST_CASE("group_length") {
  CHECK(group_length(FiniteGroupSpec(family::Icosahedral{})) == 4);
  CHECK(group_length(FiniteGroupSpec(family::BroughtonRow{"GL_2(4)", 48})) == 5);
  CHECK(group_length(FiniteGroupSpec(family::WallpaperTorus{2, 2, 6})) == 4);
}

TEST_CASE("catalog JSON schema") {
  const auto j = to_json(subgroups_genus0(8).front());
  for (const char* key : {"family", "order", "signature", "ambient", "class_count", "source"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["signature"]["genus"] == 0);
  CHECK(j["ambient"]["punctures"] == 8);
  const auto d = to_json(FiniteGroupSpec(family::Dihedral{4}));
  CHECK(d["family"] == "dihedral");
  CHECK(d["order"] == 8);
}
