#pragma once

// Regeneration of the reference tables (genus-0 subgroups for 5 <= n <= 13 and
// the genus-2 bound table) with Markdown, CSV and JSON renderers.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgdim/orbifold.hpp"
#include "mcgdim/verifier.hpp"

namespace mcgdim {

class OutOfTableRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Appendix { A, B };
enum class TableFormat { markdown, csv, json };

struct TableSpec {
  Appendix appendix = Appendix::A;
  std::optional<int> n;  // required for A (5..13); for B, evaluates the bounds at n
  TableFormat format = TableFormat::markdown;
  bool printed_order = false;
};

/// One row of a genus-0 table: (case, F, n_F, vcd(WF), lambda(F)).
struct TableRow {
  std::string case_label;
  std::string family;    // cyclic, dihedral, A4, S4, A5
  std::optional<int> m;  // cyclic/dihedral parameter
  int order = 1;
  int n_f = 0;
  int vcd_wf = 0;
  int lambda = 0;

  std::string group_label() const;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows for Mod_0^n. Canonical order: case label, then descending |F|, then
/// ascending n_F. printed_order lists the polyhedral rows first as S_4, A_4, A_5.
std::vector<TableRow> appendix_a_rows(int n, bool printed_order = false);

/// a/divisor + constant in the variable n.
struct LinearBound {
  int divisor = 1;
  int constant = 0;

  Rational at(std::int64_t n) const { return Rational(n, divisor) + constant; }
  /// "n/2+6", "n/5", "n/48-1".
  std::string to_string() const;
  friend bool operator==(const LinearBound&, const LinearBound&) = default;
};

struct BroughtonBoundRow {
  std::string group_label;
  int order = 1;
  OrbifoldSignature signature;
  LinearBound n_f_bound;    // n/|F| + o_F
  LinearBound vcd_bound;    // vcd(Mod_{g_F}^{n_F bound})
  int lambda_bound = 0;     // Omega(|F|)
  bool riemann_hurwitz = false;
};

std::vector<BroughtonBoundRow> appendix_b_rows();

std::string render_table(const TableSpec& spec);

nlohmann::json to_json(const TableRow& row);
TableRow table_row_from_json(const nlohmann::json& j);
std::vector<TableRow> table_rows_from_json(const std::string& text);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

std::string rational_to_string(const Rational& value);

/// Records as CSV with header, sorted by ambient, case, descending |F|, n_F.
std::string records_to_csv(std::vector<VerificationRecord> records);

}  // namespace mcgdim
