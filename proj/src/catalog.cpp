#include "mcgdim/catalog.hpp"

#include <array>

namespace mcgdim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int family_order(const GroupFamily& f) {
  return std::visit(overloaded{
                        [](const family::Cyclic& c) { return c.m; },
                        [](const family::Dihedral& d) { return 2 * d.m; },
                        [](const family::Tetrahedral&) { return 12; },
                        [](const family::Octahedral&) { return 24; },
                        [](const family::Icosahedral&) { return 60; },
                        [](const family::WallpaperTorus& w) { return w.s * w.t * w.m; },
                        [](const family::BroughtonRow& b) { return b.order; },
                    },
                    f);
}

std::optional<PermutationGroup> family_model(const GroupFamily& f) {
  return std::visit(
      overloaded{
          [](const family::Cyclic& c) -> std::optional<PermutationGroup> {
            if (c.m > static_cast<int>(kMaxGroupOrder)) return std::nullopt;
            return models::cyclic(static_cast<std::size_t>(c.m));
          },
          [](const family::Dihedral& d) -> std::optional<PermutationGroup> {
            if (2 * d.m > static_cast<int>(kMaxGroupOrder)) return std::nullopt;
            return models::dihedral(static_cast<std::size_t>(d.m));
          },
          [](const family::Tetrahedral&) -> std::optional<PermutationGroup> {
            return models::alternating4();
          },
          [](const family::Octahedral&) -> std::optional<PermutationGroup> {
            return models::symmetric4();
          },
          [](const family::Icosahedral&) -> std::optional<PermutationGroup> {
            return models::alternating5();
          },
          [](const auto&) -> std::optional<PermutationGroup> { return std::nullopt; },
      },
      f);
}

// Signature of the rotation/polyhedral group acting on the sphere.
OrbifoldSignature sphere_signature(const GroupFamily& f) {
  return std::visit(overloaded{
                        [](const family::Cyclic& c) { return OrbifoldSignature(0, {c.m, c.m}); },
                        [](const family::Dihedral& d) { return OrbifoldSignature(0, {2, 2, d.m}); },
                        [](const family::Tetrahedral&) { return OrbifoldSignature(0, {2, 3, 3}); },
                        [](const family::Octahedral&) { return OrbifoldSignature(0, {2, 3, 4}); },
                        [](const family::Icosahedral&) { return OrbifoldSignature(0, {2, 3, 5}); },
                        [](const auto&) -> OrbifoldSignature {
                          throw std::invalid_argument("not a spherical rotation group");
                        },
                    },
                    f);
}

OrbifoldSignature torus_signature(int m) {
  switch (m) {
    case 1: return OrbifoldSignature(1, {});
    case 2: return OrbifoldSignature(0, {2, 2, 2, 2});
    case 3: return OrbifoldSignature(0, {3, 3, 3});
    case 4: return OrbifoldSignature(0, {2, 4, 4});
    case 6: return OrbifoldSignature(0, {2, 3, 6});
    default: throw std::invalid_argument("torus rotation order must be 1, 2, 3, 4 or 6");
  }
}

constexpr auto F = Occupancy::free;
constexpr auto R = Occupancy::required;
constexpr auto X = Occupancy::forbidden;

struct BroughtonData {
  const char* label;
  int order;
  int quotient_genus;
  std::vector<int> periods;
};

const std::vector<BroughtonData>& broughton_rows() {
  static const std::vector<BroughtonData> rows = {
      {"Z/2", 2, 0, {2, 2, 2, 2, 2, 2}},
      {"Z/2", 2, 1, {2, 2}},
      {"Z/3", 3, 0, {3, 3, 3, 3}},
      {"Z/2xZ/2", 4, 0, {2, 2, 2, 2, 2}},
      {"Z/4", 4, 0, {2, 2, 4, 4}},
      {"Z/5", 5, 0, {5, 5, 5}},
      {"Z/6", 6, 0, {3, 6, 6}},
      {"Z/6", 6, 0, {2, 2, 3, 3}},
      {"D_{2(3)}", 6, 0, {2, 2, 3, 3}},
      {"Z/8", 8, 0, {2, 8, 8}},
      {"~D_2", 8, 0, {4, 4, 4}},
      {"D_{2(4)}", 8, 0, {2, 2, 2, 4}},
      {"Z/10", 10, 0, {2, 5, 10}},
      {"Z/2xZ/6", 12, 0, {2, 6, 6}},
      {"D_{4,3,-1}", 12, 0, {3, 4, 4}},
      {"D_{2(6)}", 12, 0, {2, 2, 2, 3}},
      {"D_{2,8,3}", 16, 0, {2, 4, 8}},
      {"Z/2x|(Z/2xZ/2xZ/3)", 24, 0, {2, 4, 6}},
      {"SL_2(3)", 24, 0, {3, 3, 4}},
      // Printed as GL_2(4); the order-48 group with this signature is GL(2,3).
      {"GL_2(4)", 48, 0, {2, 3, 8}},
  };
  return rows;
}

}  // namespace

FiniteGroupSpec::FiniteGroupSpec(GroupFamily family)
    : family_(std::move(family)),
      order_(family_order(family_)),
      solvable_(!std::holds_alternative<family::Icosahedral>(family_)),
      model_(family_model(family_)) {
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  std::visit(overloaded{
                 [](const family::Dihedral& d) {
                   if (d.m < 2) throw std::invalid_argument("D_{2(m)} needs m >= 2");
                 },
                 [](const family::WallpaperTorus& w) {
                   if (w.s < 1 || w.t < 1) throw std::invalid_argument("s, t must be >= 1");
                   torus_signature(w.m);
                 },
                 [](const auto&) {},
             },
             family_);
}

std::string FiniteGroupSpec::label() const {
  return std::visit(
      overloaded{
          [](const family::Cyclic& c) { return "Z/" + std::to_string(c.m); },
          [](const family::Dihedral& d) { return "D_{2(" + std::to_string(d.m) + ")}"; },
          [](const family::Tetrahedral&) { return std::string("A_4"); },
          [](const family::Octahedral&) { return std::string("S_4"); },
          [](const family::Icosahedral&) { return std::string("A_5"); },
          [](const family::WallpaperTorus& w) {
            std::string base = "Z/" + std::to_string(w.s) + "xZ/" + std::to_string(w.t);
            return w.m == 1 ? base : "(" + base + ")x|Z/" + std::to_string(w.m);
          },
          [](const family::BroughtonRow& b) { return b.label; },
      },
      family_);
}

std::string FiniteGroupSpec::family_name() const {
  static constexpr std::array<const char*, 7> names = {
      "cyclic", "dihedral", "A4", "S4", "A5", "wallpaper", "broughton"};
  return names[family_.index()];
}

std::vector<FiniteGroupSpec> maximal_genus0(int n) {
  if (n < 3) throw std::invalid_argument("maximal_genus0 needs n >= 3");
  std::vector<FiniteGroupSpec> out;
  if (n != 4) out.emplace_back(family::Cyclic{n - 1});
  out.emplace_back(family::Dihedral{n});
  if (n == 5 || n >= 7) out.emplace_back(family::Dihedral{n - 2});
  if (n % 12 == 4 || n % 12 == 10) out.emplace_back(family::Tetrahedral{});
  static constexpr std::array<int, 8> s4 = {0, 2, 6, 8, 12, 14, 18, 20};
  static constexpr std::array<int, 8> a5 = {0, 2, 12, 20, 30, 32, 42, 50};
  if (std::find(s4.begin(), s4.end(), n % 24) != s4.end()) {
    out.emplace_back(family::Octahedral{});
  }
  if (std::find(a5.begin(), a5.end(), n % 60) != a5.end()) {
    out.emplace_back(family::Icosahedral{});
  }
  return out;
}

int conjugacy_class_count(const FiniteGroupSpec& group, int n) {
  if (const auto* c = std::get_if<family::Cyclic>(&group.family())) {
    return c->m == 2 && n % 2 == 0 ? 2 : 1;
  }
  if (const auto* d = std::get_if<family::Dihedral>(&group.family())) {
    const int order = 2 * d->m;
    return n % order == 0 || (n - 2) % order == 0 ? 2 : 1;
  }
  return 1;
}

std::vector<CatalogEntry> subgroups_genus0(int n) {
  if (n < 3) throw std::invalid_argument("subgroups_genus0 needs n >= 3");
  const MappingClassGroup ambient(0, n);
  std::vector<CatalogEntry> out;

  // Rotation subgroup Z/N, poles_used of the two poles carry a puncture.
  auto add_cyclic = [&](const char* case_label, int rotation_order, int poles_used) {
    for (int m = rotation_order; m >= 2; --m) {
      if (rotation_order % m != 0) continue;
      FiniteGroupSpec spec(family::Cyclic{m});
      PlacementRule rule = poles_used == 0   ? PlacementRule{X, X}
                           : poles_used == 1 ? PlacementRule{R, X}
                                             : PlacementRule{R, R};
      out.push_back({spec, ambient, sphere_signature(spec.family()), rule,
                     conjugacy_class_count(spec, n), case_label,
                     std::string("stukow") + case_label});
    }
  };
  // D_{2m} inside D_{2N}; the order-m elliptic orbit is the pair of poles.
  auto add_dihedral = [&](const char* case_label, int rotation_order, bool poles_used) {
    for (int m = rotation_order; m >= 2; --m) {
      if (rotation_order % m != 0) continue;
      FiniteGroupSpec spec(family::Dihedral{m});
      out.push_back({spec, ambient, sphere_signature(spec.family()),
                     PlacementRule{F, F, poles_used ? R : X}, conjugacy_class_count(spec, n),
                     case_label, std::string("stukow") + case_label});
    }
  };

  add_cyclic("(1)", n - 1, 1);
  add_cyclic("(2.1)", n, 0);
  add_dihedral("(2.2)", n, false);
  add_cyclic("(3.1)", n - 2, 2);
  add_dihedral("(3.2)", n - 2, true);

  for (GroupFamily f : {GroupFamily{family::Icosahedral{}}, GroupFamily{family::Octahedral{}},
                        GroupFamily{family::Tetrahedral{}}}) {
    FiniteGroupSpec spec(f);
    auto sig = sphere_signature(f);
    if (feasible_distributions(spec.order(), sig, n).empty()) continue;
    out.push_back({spec, ambient, sig, {}, 1, "(poly)", "stukow-polyhedral"});
  }
  return out;
}

std::vector<CatalogEntry> families_genus1(int n) {
  if (n < 1) throw std::invalid_argument("families_genus1 needs n >= 1");
  const MappingClassGroup ambient(1, n);
  std::vector<CatalogEntry> out;
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; s * t <= n; ++t) {
      if (n % (s * t) != 0) continue;
      for (int m : {1, 2, 3, 4, 6}) {
        FiniteGroupSpec spec(family::WallpaperTorus{s, t, m});
        out.push_back({spec, ambient, torus_signature(m), {}, 1, "wallpaper", "wallpaper-torus"});
      }
    }
  }
  return out;
}

std::vector<CatalogEntry> broughton_genus2(int n) {
  const MappingClassGroup ambient(2, n);
  std::vector<CatalogEntry> out;
  int row = 0;
  for (const auto& data : broughton_rows()) {
    ++row;
    FiniteGroupSpec spec(family::BroughtonRow{data.label, data.order});
    out.push_back({spec, ambient, OrbifoldSignature(data.quotient_genus, data.periods), {}, 1,
                   "broughton", "broughton-row-" + std::to_string(row)});
  }
  return out;
}

int group_length(const FiniteGroupSpec& group) {
  if (group.solvable()) return omega(group.order());
  if (std::holds_alternative<family::Icosahedral>(group.family())) {
    static const int a5_length = chain_length(models::alternating5());
    return a5_length;
  }
  if (group.permutation_model()) return chain_length(*group.permutation_model());
  throw std::invalid_argument("no way to compute the length of " + group.label());
}

nlohmann::json to_json(const FiniteGroupSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  std::visit(overloaded{
                 [&](const family::Cyclic& c) { params["m"] = c.m; },
                 [&](const family::Dihedral& d) { params["m"] = d.m; },
                 [&](const family::WallpaperTorus& w) {
                   params["s"] = w.s;
                   params["t"] = w.t;
                   params["m"] = w.m;
                 },
                 [&](const family::BroughtonRow& b) { params["label"] = b.label; },
                 [](const auto&) {},
             },
             spec.family());
  return {{"family", spec.family_name()},
          {"label", spec.label()},
          {"params", params},
          {"order", spec.order()},
          {"solvable", spec.solvable()}};
}

nlohmann::json to_json(const CatalogEntry& entry) {
  nlohmann::json j = to_json(entry.group);
  j["signature"] = {{"genus", entry.signature.quotient_genus()},
                    {"periods", entry.signature.periods()}};
  j["ambient"] = {{"genus", entry.ambient.genus()}, {"punctures", entry.ambient.punctures()}};
  j["class_count"] = entry.class_count;
  j["case"] = entry.case_label;
  j["source"] = entry.source;
  return j;
}

}  // namespace mcgdim
