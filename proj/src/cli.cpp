#include "mcgdim/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mcgdim/catalog.hpp"
#include "mcgdim/dimension_formulas.hpp"
#include "mcgdim/tables.hpp"
#include "mcgdim/verifier.hpp"

namespace mcgdim {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("not an integer: '" + text + "'");
  return value;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

struct VcdArgs {
  int genus = 0;
  int n = 0;
  bool gd = false;
  bool braid = false;
  bool allow_closed = false;
};

int cmd_vcd(const VcdArgs& a, std::ostream& out) {
  if (a.genus < 0 || a.n < 0) throw UsageError("genus and punctures must be non-negative");
  if (a.braid) {
    if (a.genus != 0) throw UsageError("--braid requires genus 0");
    out << vcd_spherical_braid(a.n) << '\n';
    return kExitOk;
  }
  const MappingClassGroup group(a.genus, a.n);
  if (a.gd) {
    out << gd_mcg(group, GdOptions{a.allow_closed}) << '\n';
  } else {
    out << vcd_mcg(group) << '\n';
  }
  return kExitOk;
}

struct TableArgs {
  std::string appendix;
  std::optional<int> n;
  std::string format = "markdown";
  bool printed_order = false;
  std::string out_path;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  TableSpec spec;
  if (a.appendix == "A" || a.appendix == "a") {
    spec.appendix = Appendix::A;
  } else if (a.appendix == "B" || a.appendix == "b") {
    spec.appendix = Appendix::B;
  } else {
    throw UsageError("appendix must be A or B");
  }
  if (a.format == "markdown" || a.format == "md") {
    spec.format = TableFormat::markdown;
  } else if (a.format == "csv") {
    spec.format = TableFormat::csv;
  } else if (a.format == "json") {
    spec.format = TableFormat::json;
  } else {
    throw UsageError("unknown format '" + a.format + "'");
  }
  spec.n = a.n;
  spec.printed_order = a.printed_order;
  std::string text;
  try {
    text = render_table(spec);
  } catch (const OutOfTableRange& e) {
    throw UsageError(e.what());
  }
  if (a.out_path.empty()) {
    out << text;
  } else {
    auto file = open_output(a.out_path);
    file << text;
    if (!file) throw IoError("write failed for '" + a.out_path + "'");
  }
  return kExitOk;
}

struct VerifyArgs {
  int genus = 0;
  std::string range;
  bool report_mode = false;
  int jobs = 0;
  std::string out_path;
  std::string csv_path;
  bool branches = false;
  long long branch_max = 1'000'000;
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto [lo, hi] = parse_range(a.range);
  if (a.genus < 0 || lo < 0) throw UsageError("genus and punctures must be non-negative");
  const Mode mode = a.report_mode ? Mode::report : Mode::strict;
  bool failed = false;
  nlohmann::json summary;

  std::vector<VerificationRecord> records;
  if (a.genus >= 3) {
    if (lo < 1) throw UsageError("genus >= 3 needs n >= 1");
    const auto report = verify_genus_ge3(a.genus, hi, a.genus, lo);
    out << (report.holds ? "PASS" : "FAIL") << ' ' << report.branch_id << " g=" << a.genus
        << " n=" << lo << ".." << hi << '\n';
    failed = !report.holds;
    if (!a.out_path.empty()) {
      auto file = open_output(a.out_path);
      file << to_json(report).dump() << '\n';
    }
  } else {
    if (!a.report_mode) {
      for (int n = lo; n <= hi; ++n) {
        if (!in_theorem_range(a.genus, n)) {
          throw UsageError("(g,n)=(" + std::to_string(a.genus) + "," + std::to_string(n) +
                           ") is outside the theorem range; use --report-mode");
        }
      }
    }
    try {
      records = verify_range(a.genus, lo, hi, mode, a.jobs);
    } catch (const OutsideTheoremRange& e) {
      throw UsageError(e.what());
    }
    int passed = 0;
    int fails = 0;
    int unrealizable = 0;
    for (const auto& r : records) {
      if (r.status == RecordStatus::pass) {
        ++passed;
        continue;
      }
      if (r.status == RecordStatus::fail) {
        ++fails;
        out << "FAIL";
      } else {
        ++unrealizable;
        out << "UNREALIZABLE";
      }
      out << " g=" << r.ambient.genus() << " n=" << r.ambient.punctures() << ' ' << r.case_label
          << ' ' << r.group_label << " |F|=" << r.order;
      if (r.n_f) {
        out << " nF=" << *r.n_f << ' ' << r.vcd_wf << '+' << r.lambda_f << '=' << r.sum << " > "
            << r.budget;
      } else {
        out << " (no feasible puncture distribution)";
      }
      out << '\n';
    }
    out << "checked " << records.size() << " records for g=" << a.genus << " n=" << lo << ".."
        << hi << ": " << passed << " pass, " << fails << " fail, " << unrealizable
        << " unrealizable\n";
    failed = fails > 0 && !a.report_mode;
    if (!a.out_path.empty()) {
      auto file = open_output(a.out_path);
      for (const auto& r : records) file << to_json(r).dump() << '\n';
      if (!file) throw IoError("write failed for '" + a.out_path + "'");
    }
    if (!a.csv_path.empty()) {
      auto file = open_output(a.csv_path);
      file << records_to_csv(records);
      if (!file) throw IoError("write failed for '" + a.csv_path + "'");
    }
  }

  if (a.branches) {
    if (a.branch_max < 14) throw UsageError("--branch-max must be at least 14");
    for (const auto& report : verify_branch_genus0(a.branch_max, a.jobs)) {
      out << (report.holds ? "PASS" : "FAIL") << " branch " << report.branch_id << " n="
          << report.range_lo << ".." << report.range_hi;
      if (report.witness_below) out << " witness_below=" << *report.witness_below;
      out << (report.monotone ? "" : " non-monotone") << '\n';
      failed = failed || !report.holds || !report.monotone;
    }
  }
  return failed ? kExitVerifyFail : kExitOk;
}

struct CatalogArgs {
  int genus = 0;
  int n = 0;
  std::string out_path;
};

int cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  std::vector<CatalogEntry> entries;
  if (a.genus == 0) {
    if (a.n < 3) throw UsageError("genus-0 catalog needs n >= 3");
    entries = subgroups_genus0(a.n);
  } else if (a.genus == 1) {
    if (a.n < 1) throw UsageError("genus-1 catalog needs n >= 1");
    entries = families_genus1(a.n);
  } else if (a.genus == 2) {
    entries = broughton_genus2(a.n);
  } else {
    throw UsageError("catalogs exist for genus 0, 1 and 2 only");
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries) j.push_back(to_json(e));
  if (a.out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    auto file = open_output(a.out_path);
    file << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_theorem(int genus, int n, std::ostream& out) {
  if (genus < 0 || n < 1) throw UsageError("theorem needs g >= 0 and n >= 1");
  const auto s = main_theorem_report(genus, n);
  out << "Mod_" << genus << "^" << n << ": gd = vcd = " << s.claimed_dimension << " via "
      << to_string(s.mechanism) << (s.passed ? " (pass)" : " (FAIL)");
  if (!s.note.empty()) out << "; " << s.note;
  out << '\n';
  return s.passed ? kExitOk : kExitVerifyFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper geometric dimension checks for mapping class groups", "mcgdim"};
  app.require_subcommand(1);

  VcdArgs vcd;
  auto* vcd_cmd = app.add_subcommand("vcd", "print vcd(Mod_g^n)");
  vcd_cmd->add_option("g", vcd.genus, "genus")->required();
  vcd_cmd->add_option("n", vcd.n, "punctures")->required();
  vcd_cmd->add_flag("--gd", vcd.gd, "print the proper geometric dimension instead");
  vcd_cmd->add_flag("--braid", vcd.braid, "print vcd of the spherical braid group on n strands");
  vcd_cmd->add_flag("--allow-closed", vcd.allow_closed, "accept closed surfaces with --gd");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "regenerate an appendix table");
  table_cmd->add_option("appendix", table.appendix, "A or B")->required();
  table_cmd->add_option("--n", table.n, "number of punctures");
  table_cmd->add_option("--format", table.format, "markdown, csv or json");
  table_cmd->add_flag("--paper-order", table.printed_order, "polyhedral rows first");
  table_cmd->add_option("--out", table.out_path, "write to file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check the main inequality over a range of n");
  verify_cmd->add_option("g", verify.genus, "genus")->required();
  verify_cmd->add_option("range", verify.range, "a..b or a single n")->required();
  verify_cmd->add_flag("--report-mode", verify.report_mode, "report failures without failing");
  verify_cmd->add_option("--jobs", verify.jobs, "OpenMP threads (0 = default)");
  verify_cmd->add_option("--out", verify.out_path, "JSON-lines record file");
  verify_cmd->add_option("--csv", verify.csv_path, "sorted CSV record file");
  verify_cmd->add_flag("--branches", verify.branches, "also check the genus-0 branch inequalities");
  verify_cmd->add_option("--branch-max", verify.branch_max, "upper end of the branch range");

  CatalogArgs catalog;
  auto* catalog_cmd = app.add_subcommand("catalog", "dump a finite-subgroup catalog as JSON");
  catalog_cmd->add_option("g", catalog.genus, "genus (0, 1 or 2)")->required();
  catalog_cmd->add_option("n", catalog.n, "punctures");
  catalog_cmd->add_option("--out", catalog.out_path, "write to file");

  int theorem_g = 0;
  int theorem_n = 0;
  auto* theorem_cmd = app.add_subcommand("theorem", "report how gd = vcd is established");
  theorem_cmd->add_option("g", theorem_g, "genus")->required();
  theorem_cmd->add_option("n", theorem_n, "punctures")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*vcd_cmd) return cmd_vcd(vcd, out);
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*catalog_cmd) return cmd_catalog(catalog, out);
    if (*theorem_cmd) return cmd_theorem(theorem_g, theorem_n, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExternalResult& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mcgdim
