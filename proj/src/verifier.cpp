#include "mcgdim/verifier.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "mcgdim/orbifold.hpp"

namespace mcgdim {

std::string to_string(RecordStatus status) {
  switch (status) {
    case RecordStatus::pass: return "PASS";
    case RecordStatus::fail: return "FAIL";
    case RecordStatus::unrealizable: return "UNREALIZABLE";
  }
  return "?";
}

nlohmann::json to_json(const VerificationRecord& r) {
  nlohmann::json j = {{"ambient", {{"genus", r.ambient.genus()}, {"punctures", r.ambient.punctures()}}},
                      {"case", r.case_label},
                      {"group", r.group_label},
                      {"order", r.order},
                      {"nF", nullptr},
                      {"vcdWF", r.vcd_wf},
                      {"lambda", r.lambda_f},
                      {"sum", r.sum},
                      {"budget", r.budget},
                      {"pass", r.pass()},
                      {"status", to_string(r.status)}};
  if (r.n_f) j["nF"] = *r.n_f;
  return j;
}

bool in_theorem_range(int genus, int n) noexcept {
  switch (genus) {
    case 0: return n == 5 || n >= 7;
    case 1: return n >= 2;
    case 2: return n >= 1;
    default: return false;
  }
}

namespace {

std::vector<CatalogEntry> catalog_for(int genus, int n) {
  switch (genus) {
    case 0: return subgroups_genus0(n);
    case 1: return families_genus1(n);
    case 2: {
      auto rows = broughton_genus2(n);
      if (rows.empty()) throw std::logic_error("genus-2 table failed to load");
      return rows;
    }
    default:
      throw std::invalid_argument("inequality checks cover genus 0, 1, 2; use verify_genus_ge3");
  }
}

}  // namespace

std::vector<VerificationRecord> verify_inequality(int genus, int n, Mode mode) {
  if (n < 1) throw std::invalid_argument("verify_inequality needs n >= 1");
  if (mode == Mode::strict && !in_theorem_range(genus, n)) {
    throw OutsideTheoremRange("(g,n)=(" + std::to_string(genus) + "," + std::to_string(n) +
                              ") is outside the theorem range; use report mode");
  }
  if (genus == 0 && n < 3) {
    throw std::invalid_argument("Mod_0^n is finite for n < 3; nothing to verify");
  }
  const MappingClassGroup ambient(genus, n);
  const int budget = vcd_mcg(ambient);
  std::vector<VerificationRecord> records;
  for (const auto& entry : catalog_for(genus, n)) {
    VerificationRecord base;
    base.ambient = ambient;
    base.case_label = entry.case_label;
    base.group_label = entry.group.label();
    base.order = entry.group.order();
    base.lambda_f = group_length(entry.group);
    base.budget = budget;
    const auto values = nf_values(entry.group.order(), entry.signature, n, entry.placement);
    if (values.empty()) {
      base.status = RecordStatus::unrealizable;
      records.push_back(base);
      continue;
    }
    for (int value : values) {
      VerificationRecord r = base;
      r.n_f = value;
      r.vcd_wf = vcd_weyl(entry.signature.quotient_genus(), value);
      r.sum = r.vcd_wf + r.lambda_f;
      r.status = r.sum <= budget ? RecordStatus::pass : RecordStatus::fail;
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<VerificationRecord> verify_range_serial(int genus, int lo, int hi, Mode mode) {
  std::vector<VerificationRecord> out;
  for (int n = lo; n <= hi; ++n) {
    auto part = verify_inequality(genus, n, mode);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<VerificationRecord> verify_range(int genus, int lo, int hi, Mode mode, int jobs) {
  if (hi < lo) return {};
  const int count = hi - lo + 1;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<std::vector<VerificationRecord>> parts(count);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    try {
      parts[i] = verify_inequality(genus, lo + i, mode);
    } catch (...) {
#pragma omp critical(mcgdim_verify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<VerificationRecord> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool all_pass(const std::vector<VerificationRecord>& records) noexcept {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass(); });
}

nlohmann::json to_json(const BranchReport& report) {
  nlohmann::json j = {{"branch", report.branch_id},
                      {"threshold", report.threshold},
                      {"range", {report.range_lo, report.range_hi}},
                      {"holds", report.holds},
                      {"monotone", report.monotone},
                      {"witness_failures", report.witness_failures},
                      {"witness_below", nullptr},
                      {"assumed", report.assumed}};
  if (report.witness_below) j["witness_below"] = *report.witness_below;
  return j;
}

bool BranchInequality::holds_at(long long n) const noexcept {
  if (n < 1) return false;
  // slack = (n - 3) - (n/2 + offset) = e/2
  const long long e = n - 6 - twice_offset;
  if (e < 0) return false;
  if (!with_log) return true;
  // e/2 >= log2 n  <=>  2^e >= n^2
  const auto nn = static_cast<std::uint64_t>(n);
  return pow2_at_least(e, nn * nn);
}

bool BranchInequality::slack_nondecreasing_at(long long n) const noexcept {
  if (!with_log) return true;
  // 1/2 >= log2((n+1)/n)  <=>  2n^2 >= (n+1)^2  <=>  n(n-2) >= 1  <=>  n-2 >= ceil(1/n)
  if (n < 1) return false;
  const long long ceil_inv = 1 / n + (1 % n != 0 ? 1 : 0);
  return n - 2 >= ceil_inv;
}

const std::vector<BranchInequality>& genus0_branches() {
  static const std::vector<BranchInequality> branches = {
      {"cyclic", 11, -2, true},
      {"dihedral", 14, 0, true},
      {"polyhedral-lambda3", 10, 4, false},
      {"polyhedral-lambda4", 12, 6, false},
  };
  return branches;
}

namespace {

BranchReport make_report(const BranchInequality& branch, long long lo, long long hi) {
  BranchReport r;
  r.branch_id = branch.id;
  r.threshold = branch.threshold;
  r.range_lo = lo;
  r.range_hi = hi;
  return r;
}

}  // namespace

BranchReport check_branch_serial(const BranchInequality& branch, long long lo, long long hi) {
  BranchReport r = make_report(branch, lo, hi);
  for (long long n = lo; n <= hi; ++n) {
    if (!branch.holds_at(n)) r.witness_failures.push_back(n);
    if (n < hi && !branch.slack_nondecreasing_at(n)) r.monotone = false;
  }
  r.holds = r.witness_failures.empty();
  return r;
}

BranchReport check_branch(const BranchInequality& branch, long long lo, long long hi, int jobs) {
  BranchReport r = make_report(branch, lo, hi);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  bool monotone = true;
#pragma omp parallel num_threads(threads) reduction(&& : monotone)
  {
    std::vector<long long> local;
#pragma omp for schedule(static)
    for (long long n = lo; n <= hi; ++n) {
      if (!branch.holds_at(n)) local.push_back(n);
      if (n < hi && !branch.slack_nondecreasing_at(n)) monotone = false;
    }
#pragma omp critical(mcgdim_branch_merge)
    r.witness_failures.insert(r.witness_failures.end(), local.begin(), local.end());
  }
  std::sort(r.witness_failures.begin(), r.witness_failures.end());
  r.monotone = monotone;
  r.holds = r.witness_failures.empty();
  return r;
}

std::vector<BranchReport> verify_branch_genus0(long long n_max, int jobs) {
  std::vector<BranchReport> out;
  for (const auto& branch : genus0_branches()) {
    BranchReport r = check_branch(branch, branch.threshold, n_max, jobs);
    for (long long n = branch.threshold - 1; n >= 1; --n) {
      if (!branch.holds_at(n)) {
        r.witness_below = n;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

BranchReport verify_genus_ge3(int g_max, int n_max, int g_min, int n_min) {
  if (g_min < 3 || n_min < 1) throw std::invalid_argument("genus >= 3 identity needs g >= 3, n >= 1");
  BranchReport r;
  r.branch_id = "genus-ge3-identity";
  r.threshold = 3;
  r.range_lo = g_min;
  r.range_hi = g_max;
  r.assumed = {
      "Aramayona-Martinez Perez: vcd(WF) + lambda(F) <= vcd(Mod_g) for closed genus g >= 3",
      "vcd(B_n(S_g)) <= n + 1 for the full surface braid group",
  };
  for (int g = g_min; g <= g_max; ++g) {
    const int closed = vcd_mcg(MappingClassGroup(g, 0));
    for (int n = n_min; n <= n_max; ++n) {
      if (closed + surface_braid_vcd_bound(n) != vcd_mcg(MappingClassGroup(g, n))) {
        // failing pair packed as g * 10^6 + n
        r.witness_failures.push_back(static_cast<long long>(g) * 1'000'000 + n);
      }
    }
  }
  r.holds = r.witness_failures.empty();
  return r;
}

std::string to_string(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::inequality: return "inequality";
    case Mechanism::external_argument: return "external-argument";
    case Mechanism::genus_ge3_identity: return "genus-ge3-identity";
  }
  return "?";
}

MainTheoremSummary main_theorem_report(int genus, int n) {
  if (n < 1) throw std::invalid_argument("the main theorem covers n >= 1 only");
  const MappingClassGroup group(genus, n);
  const int dimension = gd_mcg(group);
  if (genus == 0 && n <= 3) {
    return {group, Mechanism::external_argument, dimension, true, "Mod_0^n is finite"};
  }
  if (genus == 0 && n == 4) {
    return {group, Mechanism::external_argument, dimension, true,
            "virtually free: proper action on a tree"};
  }
  if (genus == 0 && n == 6) {
    return {group, Mechanism::external_argument, dimension, true,
            "quotient of Mod_2 by the hyperelliptic involution: 3-dimensional model"};
  }
  if (genus == 1 && n == 1) {
    return {group, Mechanism::external_argument, dimension, true, "SL(2,Z) is virtually free"};
  }
  if (genus == 1 && n == 2) {
    return {group, Mechanism::external_argument, dimension, true,
            "extension of Mod_1 by Z/2*Z/2*Z/2: product of two trees"};
  }
  if (genus >= 3) {
    const bool ok = verify_genus_ge3(genus, n, genus, n).holds;
    return {group, Mechanism::genus_ge3_identity, dimension, ok,
            "Birman exact sequence over the closed-surface bound"};
  }
  const auto records = verify_inequality(genus, n, Mode::strict);
  const bool ok = all_pass(records);
  return {group, Mechanism::inequality, dimension, ok,
          std::to_string(records.size()) + " records checked"};
}

}  // namespace mcgdim
