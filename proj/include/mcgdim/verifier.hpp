#pragma once

// Proof-obligation checks: vcd(WF) + lambda(F) <= vcd(Mod_g^n) over the
// catalogs, the asymptotic genus-0 branch inequalities, and the genus >= 3
// arithmetic. Range sweeps come in two flavours: a serial reference and an
// OpenMP kernel. Both return identical, deterministically ordered results.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgdim/catalog.hpp"
#include "mcgdim/dimension_formulas.hpp"

namespace mcgdim {

class OutsideTheoremRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RecordStatus { pass, fail, unrealizable };

struct VerificationRecord {
  MappingClassGroup ambient{0, 0};
  std::string case_label;
  std::string group_label;
  int order = 1;
  std::optional<int> n_f;  // empty iff unrealizable
  int vcd_wf = 0;
  int lambda_f = 0;
  int sum = 0;
  int budget = 0;
  RecordStatus status = RecordStatus::pass;

  bool pass() const noexcept { return status != RecordStatus::fail; }
  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

std::string to_string(RecordStatus status);
nlohmann::json to_json(const VerificationRecord& record);

enum class Mode {
  strict,  // (g, n) must lie in the theorem range
  report,  // any (g, n); failures are reported, not raised
};

/// g = 0: n = 5 or n >= 7; g = 1: n >= 2; g = 2: n >= 1.
bool in_theorem_range(int genus, int n) noexcept;

/// One record per (catalog entry, feasible n_F); entries without a feasible
/// placement become a single unrealizable record.
std::vector<VerificationRecord> verify_inequality(int genus, int n, Mode mode = Mode::strict);

/// verify_inequality for every n in [lo, hi], concatenated in n order.
std::vector<VerificationRecord> verify_range_serial(int genus, int lo, int hi, Mode mode);
/// Same result as verify_range_serial; `jobs` <= 0 uses the OpenMP default.
std::vector<VerificationRecord> verify_range(int genus, int lo, int hi, Mode mode, int jobs = 0);

bool all_pass(const std::vector<VerificationRecord>& records) noexcept;

struct BranchReport {
  std::string branch_id;
  int threshold = 0;
  long long range_lo = 0;
  long long range_hi = 0;
  bool holds = false;
  std::vector<long long> witness_failures;   // failures inside [range_lo, range_hi]
  std::optional<long long> witness_below;    // largest failing n below the threshold
  bool monotone = true;                      // slack never decreases across the range
  std::vector<std::string> assumed;          // cited results taken as axioms
};

nlohmann::json to_json(const BranchReport& report);

/// n/2 + offset + (log2 n if with_log) <= n - 3 with offset = twice_offset/2.
struct BranchInequality {
  std::string id;
  int threshold;
  int twice_offset;
  bool with_log;

  /// Exact integer test at one n.
  bool holds_at(long long n) const noexcept;
  /// slack(n+1) >= slack(n), where slack = (n - 3) - bound(n).
  bool slack_nondecreasing_at(long long n) const noexcept;
};

/// The genus-0 branches, in order: cyclic (>= 11), dihedral (>= 14),
/// polyhedral with lambda = 3 (>= 10), polyhedral with lambda = 4 (>= 12).
const std::vector<BranchInequality>& genus0_branches();

BranchReport check_branch_serial(const BranchInequality& branch, long long lo, long long hi);
BranchReport check_branch(const BranchInequality& branch, long long lo, long long hi, int jobs = 0);

/// Every branch over [threshold, n_max], with the largest failure below the threshold.
std::vector<BranchReport> verify_branch_genus0(long long n_max, int jobs = 0);

/// Bound n + 1 on vcd of the full surface braid group B_n(S_g), taken from the literature.
inline int surface_braid_vcd_bound(int strands) noexcept { return strands + 1; }

/// vcd(Mod_g^0) + vcd bound of B_n(S_g) == vcd(Mod_g^n) for 3 <= g <= g_max, 1 <= n <= n_max.
BranchReport verify_genus_ge3(int g_max, int n_max, int g_min = 3, int n_min = 1);

enum class Mechanism { inequality, external_argument, genus_ge3_identity };

std::string to_string(Mechanism mechanism);

struct MainTheoremSummary {
  MappingClassGroup group;
  Mechanism mechanism;
  int claimed_dimension;
  bool passed;
  std::string note;
};

MainTheoremSummary main_theorem_report(int genus, int n);

}  // namespace mcgdim
