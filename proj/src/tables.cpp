#include "mcgdim/tables.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "mcgdim/catalog.hpp"

namespace mcgdim {

std::string TableRow::group_label() const {
  if (family == "cyclic") return "Z/" + std::to_string(m.value_or(0));
  if (family == "dihedral") return "D_{2(" + std::to_string(m.value_or(0)) + ")}";
  if (family == "A4") return "A_4";
  if (family == "S4") return "S_4";
  if (family == "A5") return "A_5";
  return family;
}

std::vector<TableRow> appendix_a_rows(int n, bool printed_order) {
  if (n < 5 || n > 13) {
    throw OutOfTableRange("appendix A covers 5 <= n <= 13, got n=" + std::to_string(n));
  }
  std::vector<TableRow> rows;
  for (const auto& entry : subgroups_genus0(n)) {
    std::optional<int> m;
    if (const auto* c = std::get_if<family::Cyclic>(&entry.group.family())) m = c->m;
    if (const auto* d = std::get_if<family::Dihedral>(&entry.group.family())) m = d->m;
    const int lambda = group_length(entry.group);
    for (int value : nf_values(entry.group.order(), entry.signature, n, entry.placement)) {
      rows.push_back({entry.case_label, entry.group.family_name(), m, entry.group.order(), value,
                      vcd_weyl(0, value), lambda});
    }
  }
  auto canonical = [](const TableRow& a, const TableRow& b) {
    return std::tuple(a.case_label, -a.order, a.n_f) < std::tuple(b.case_label, -b.order, b.n_f);
  };
  std::sort(rows.begin(), rows.end(), canonical);
  if (printed_order) {
    // Printed layout: polyhedral rows first, as S_4, A_4, A_5.
    auto rank = [](const TableRow& r) {
      if (r.family == "S4") return 0;
      if (r.family == "A4") return 1;
      if (r.family == "A5") return 2;
      return 3;
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const TableRow& a, const TableRow& b) { return rank(a) < rank(b); });
  }
  return rows;
}

std::string LinearBound::to_string() const {
  std::string out = divisor == 1 ? "n" : "n/" + std::to_string(divisor);
  if (constant > 0) out += "+" + std::to_string(constant);
  if (constant < 0) out += std::to_string(constant);
  return out;
}

std::vector<BroughtonBoundRow> appendix_b_rows() {
  std::vector<BroughtonBoundRow> rows;
  for (const auto& entry : broughton_genus2()) {
    const int o_f = entry.signature.elliptic_count();
    const int order = entry.group.order();
    // g_F = 0: vcd = n_F - 3; g_F = 1: vcd = n_F.
    const int vcd_shift = entry.signature.quotient_genus() == 0 ? -3 : 0;
    rows.push_back({entry.group.label(), order, entry.signature, LinearBound{order, o_f},
                    LinearBound{order, o_f + vcd_shift}, group_length(entry.group),
                    riemann_hurwitz_check(2, order, entry.signature)});
  }
  return rows;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rational_to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

nlohmann::json to_json(const TableRow& row) {
  nlohmann::json group = {{"family", row.family}};
  if (row.m) group["m"] = *row.m;
  return {{"case", row.case_label}, {"group", group},       {"label", row.group_label()},
          {"order", row.order},     {"nF", row.n_f},        {"vcdWF", row.vcd_wf},
          {"lambda", row.lambda}};
}

TableRow table_row_from_json(const nlohmann::json& j) {
  TableRow row;
  row.case_label = j.at("case").get<std::string>();
  row.family = j.at("group").at("family").get<std::string>();
  if (j.at("group").contains("m")) row.m = j.at("group").at("m").get<int>();
  row.order = j.at("order").get<int>();
  row.n_f = j.at("nF").get<int>();
  row.vcd_wf = j.at("vcdWF").get<int>();
  row.lambda = j.at("lambda").get<int>();
  return row;
}

std::vector<TableRow> table_rows_from_json(const std::string& text) {
  std::vector<TableRow> rows;
  for (const auto& item : nlohmann::json::parse(text)) rows.push_back(table_row_from_json(item));
  return rows;
}

namespace {

std::string markdown(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& body) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
    out << '\n';
  };
  line(header);
  out << '|';
  for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : body) line(row);
  return out.str();
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& body) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(header);
  for (const auto& row : body) line(row);
  return out.str();
}

std::string render_a(const TableSpec& spec) {
  if (!spec.n) throw OutOfTableRange("appendix A needs --n in 5..13");
  const auto rows = appendix_a_rows(*spec.n, spec.printed_order);
  if (spec.format == TableFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({r.case_label, r.group_label(), std::to_string(r.n_f),
                    std::to_string(r.vcd_wf), std::to_string(r.lambda)});
  }
  if (spec.format == TableFormat::csv) return csv({"case", "group", "nF", "vcdWF", "lambda"}, body);
  return "Finite subgroups of Mod_0^" + std::to_string(*spec.n) + "\n\n" +
         markdown({"case", "F", "n_F", "vcd(WF)", "lambda(F)"}, body);
}

std::string render_b(const TableSpec& spec) {
  const auto rows = appendix_b_rows();
  if (spec.format == TableFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json item = {
          {"group", r.group_label},
          {"order", r.order},
          {"signature", {{"genus", r.signature.quotient_genus()}, {"periods", r.signature.periods()}}},
          {"nF_bound", r.n_f_bound.to_string()},
          {"vcdWF_bound", r.vcd_bound.to_string()},
          {"lambda_bound", r.lambda_bound},
          {"riemann_hurwitz", r.riemann_hurwitz}};
      if (spec.n) {
        item["at_n"] = {{"n", *spec.n},
                        {"nF_bound", rational_to_string(r.n_f_bound.at(*spec.n))},
                        {"vcdWF_bound", rational_to_string(r.vcd_bound.at(*spec.n))}};
      }
      j.push_back(item);
    }
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = {"group", "order", "signature", "nF_bound", "vcdWF_bound",
                                     "lambda_bound"};
  if (spec.n) {
    header.push_back("nF_at_n");
    header.push_back("vcdWF_at_n");
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    std::vector<std::string> cells = {r.group_label, std::to_string(r.order), r.signature.to_string(),
                                      r.n_f_bound.to_string(), r.vcd_bound.to_string(),
                                      std::to_string(r.lambda_bound)};
    if (spec.n) {
      cells.push_back(rational_to_string(r.n_f_bound.at(*spec.n)));
      cells.push_back(rational_to_string(r.vcd_bound.at(*spec.n)));
    }
    body.push_back(std::move(cells));
  }
  if (spec.format == TableFormat::csv) return csv(header, body);
  std::string title = "Finite non-trivial subgroups of Mod_2^n";
  if (spec.n) title += " (bounds evaluated at n=" + std::to_string(*spec.n) + ")";
  return title + "\n\n" + markdown(header, body);
}

}  // namespace

std::string render_table(const TableSpec& spec) {
  return spec.appendix == Appendix::A ? render_a(spec) : render_b(spec);
}

std::string records_to_csv(std::vector<VerificationRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.ambient, a.case_label, -a.order, a.group_label, a.n_f.value_or(-1)) <
           std::tuple(b.ambient, b.case_label, -b.order, b.group_label, b.n_f.value_or(-1));
  });
  std::vector<std::vector<std::string>> body;
  for (const auto& r : records) {
    body.push_back({std::to_string(r.ambient.genus()), std::to_string(r.ambient.punctures()),
                    r.case_label, r.group_label, std::to_string(r.order),
                    r.n_f ? std::to_string(*r.n_f) : "", std::to_string(r.vcd_wf),
                    std::to_string(r.lambda_f), std::to_string(r.sum), std::to_string(r.budget),
                    to_string(r.status)});
  }
  return csv({"genus", "punctures", "case", "group", "order", "nF", "vcdWF", "lambda", "sum",
              "budget", "status"},
             body);
}

}  // namespace mcgdim
