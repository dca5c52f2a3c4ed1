// pgl2orbits: orbit-closure invariants of binary forms from the command line.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgl2/analyze.hpp"
#include "pgl2/classification.hpp"
#include "pgl2/oracle.hpp"
#include "pgl2/parse.hpp"
#include "pgl2/report_json.hpp"
#include "pgl2/stabilizer.hpp"

namespace {

using nlohmann::json;
using namespace pgl2;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitInconsistent = 4;

// Composites above this degree are not run through the exact pipeline by `special`.
constexpr int kSpecialPipelineMaxDegree = 400;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::Field:
    case ErrorCode::Domain: return kExitInput;
    case ErrorCode::Numeric: return kExitNumeric;
    case ErrorCode::NotDivisible:
    case ErrorCode::Inconsistent: return kExitInconsistent;
  }
  return kExitInconsistent;
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_str(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        if (i + 1 < r.size()) os << "  ";
      }
      os << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_report(const ReportDocument& doc, std::ostream& os) {
  const OrbitReport& r = doc.report;
  Table kv({"form", doc.form});
  if (doc.minpoly) kv.add({"minpoly", *doc.minpoly});
  kv.add({"degree d", std::to_string(doc.degree_d)});
  kv.add({"profile", r.profile.format()});
  kv.add({"s", std::to_string(r.profile.s())});
  kv.add({"dimension", std::to_string(r.dimension)});
  kv.add({"predegree", std::to_string(r.predegree)});
  std::string st = doc.stabilizer_source == "infinite" ? "infinite" : opt_str(r.stabilizer_order);
  if (doc.stabilizer_source == "numeric") st += r.stabilizer_certified ? " (numeric, certified)" : " (numeric)";
  else if (doc.stabilizer_source == "user") st += " (given)";
  kv.add({"stabilizer", st});
  kv.add({"degree", opt_str(r.degree)});
  kv.add({"smooth", opt_str(r.smooth)});
  kv.add({"smooth in codim 1", opt_str(r.smooth_codim1)});
  std::string ext;
  for (auto [k, n] : r.external_profile) ext += (ext.empty() ? "" : ", ") + std::to_string(k) + "x" + std::to_string(n);
  kv.add({"external hessian", ext.empty() ? "-" : ext});
  if (doc.numeric_hessian_check) kv.add({"numeric hessian", *doc.numeric_hessian_check});
  kv.print(os);
  if (r.boundary.empty()) return;
  os << '\n';
  Table bt({"boundary orbit", "dim", "premultiplicity", "multiplicity"});
  for (const auto& e : r.boundary)
    bt.add({e.orbit.format(), std::to_string(e.orbit.dimension()), opt_str(e.premultiplicity), opt_str(e.multiplicity)});
  bt.print(os);
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw ParseError("bad partition entry '" + item + "'");
      m.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad partition entry '" + item + "'");
    }
  }
  if (m.empty()) throw ParseError("empty partition");
  return m;
}

int cmd_analyze(const std::string& text, const AnalyzeOptions& opt, bool as_json) {
  const ReportDocument doc = analyze_text(text, opt);
  if (as_json) std::cout << to_json(doc).dump(2) << '\n';
  else print_report(doc, std::cout);
  return kExitOk;
}

template <class Field>
int special_on(const Field& field, const GroupId& g, const Integer& a, const Integer& b, const Integer& c, bool fast,
               bool as_json) {
  const AbcMultiplicities tab = abc_multiplicities(g, a, b, c);
  const auto deg = g.orbit_degrees();
  const Integer d = a * deg[0] + b * deg[1] + c * deg[2];
  const bool small = d <= kSpecialPipelineMaxDegree;
  std::optional<BinaryForm<Field>> F;
  if (small) F = composite(field, g, static_cast<int>(a.get_si()), static_cast<int>(b.get_si()), static_cast<int>(c.get_si()));
  std::vector<AbcCheck> checks;
  const bool run = !fast && small;
  if (run)
    checks = abc_pipeline_check(*F, g, {static_cast<int>(a.get_si()), static_cast<int>(b.get_si()),
                                        static_cast<int>(c.get_si())}, tab);
  bool ok = true;
  for (const auto& ch : checks) ok = ok && ch.agrees;

  const char* letters = "ABC";
  if (as_json) {
    json j;
    j["group"] = g.name();
    j["exponents"] = {a.get_str(), b.get_str(), c.get_str()};
    j["degree_d"] = d.get_str();
    j["form"] = F ? json(F->format()) : json(nullptr);
    json m = json::object();
    for (int k = 0; k < 3; ++k) {
      const auto& v = tab.mult[static_cast<std::size_t>(k)];
      m[std::string(1, letters[k])] = v.value ? json({{"value", *v.value}, {"lower_bound", v.lower_bound}}) : json(nullptr);
    }
    j["multiplicities"] = m;
    j["warnings"] = tab.warnings;
    j["effective_c"] = tab.effective_c ? json(*tab.effective_c) : json(nullptr);
    json cj = json::array();
    for (const auto& ch : checks)
      cj.push_back({{"exponent", ch.exponent}, {"orbits", ch.orbits}, {"pipeline", ch.pipeline},
                    {"tabulated", ch.tabulated}, {"lower_bound", ch.lower_bound}, {"agrees", ch.agrees}});
    j["pipeline_check"] = run ? cj : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "group " << g.name() << ", exponents (" << a << ", " << b << ", " << c << "), degree " << d << '\n';
    if (F) std::cout << "form " << F->format() << '\n';
    Table t({"orbit", "multiplicity"});
    for (int k = 0; k < 3; ++k) t.add({std::string(1, letters[k]), tab.mult[static_cast<std::size_t>(k)].format()});
    t.print(std::cout);
    for (const auto& w : tab.warnings) std::cout << "warning: " << w << '\n';
    if (tab.effective_c) std::cout << "effective C-multiplicity (larger stabilizer): " << *tab.effective_c << '\n';
    if (!fast && !small) std::cout << "pipeline check skipped: degree above " << kSpecialPipelineMaxDegree << '\n';
    if (run) {
      std::cout << '\n';
      Table ct({"exponent", "orbits", "pipeline", "tabulated", "agrees"});
      for (const auto& ch : checks)
        ct.add({std::to_string(ch.exponent), ch.orbits, std::to_string(ch.pipeline),
                (ch.lower_bound ? ">=" : "") + std::to_string(ch.tabulated), ch.agrees ? "yes" : "NO"});
      ct.print(std::cout);
    }
  }
  return ok ? kExitOk : kExitInconsistent;
}

int cmd_special(const std::string& group, std::optional<int> n, const std::vector<std::string>& abc, bool fast,
                bool as_json) {
  const GroupId g = GroupId::parse(group, n);
  if (abc.size() != 3) throw ParseError("special needs three exponents a b c");
  std::array<Integer, 3> e;
  for (std::size_t i = 0; i < 3; ++i) {
    for (char ch : abc[i])
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad exponent '" + abc[i] + "'");
    if (abc[i].empty()) throw ParseError("empty exponent");
    e[i] = Integer(abc[i]);
  }
  if (g.kind == GroupKind::A4) return special_on(sqrt_minus_three_field(), g, e[0], e[1], e[2], fast, as_json);
  return special_on(RationalField{}, g, e[0], e[1], e[2], fast, as_json);
}

int cmd_catalog(int d_max, std::uint64_t seed, bool as_json) {
  if (d_max < 1) throw DomainError("catalog needs dmax >= 1");
  std::mt19937_64 rng(seed);
  Table t({"d", "profile", "s", "dim", "predegree", "oracle", "degree", "boundary (premult/mult)", "stab", "sample",
           "flag"});
  json rows = json::array();
  for (int d = 1; d <= d_max; ++d)
    for (const auto& m : partitions(d)) {
      const PartitionRow row = partition_row(MultiplicityProfile(m), rng);
      std::string bd;
      for (const auto& e : row.report.boundary)
        bd += (bd.empty() ? "" : " ") + e.orbit.format() + ":" + opt_str(e.premultiplicity) + "/" +
              opt_str(e.multiplicity);
      const std::string flag = row.flagged ? "*" : "";
      if (as_json) {
        json b = json::array();
        for (const auto& e : row.report.boundary)
          b.push_back({{"orbit", e.orbit.format()},
                       {"premultiplicity", e.premultiplicity ? json(*e.premultiplicity) : json(nullptr)},
                       {"multiplicity", e.multiplicity ? json(*e.multiplicity) : json(nullptr)}});
        rows.push_back({{"d", d},
                        {"profile", row.profile.multiplicities()},
                        {"s", row.profile.s()},
                        {"dimension", row.dimension},
                        {"predegree", row.predegree},
                        {"oracle_predegree", row.oracle},
                        {"degree", row.report.degree ? json(*row.report.degree) : json(nullptr)},
                        {"boundary", b},
                        {"stabilizer", row.report.stabilizer_order ? json(*row.report.stabilizer_order) : json(nullptr)},
                        {"sample", row.sample},
                        {"trivial_stabilizer", row.trivial_stabilizer},
                        {"simple_hessian", row.simple_hessian},
                        {"flagged", row.flagged}});
      } else {
        t.add({std::to_string(d), row.profile.format(), std::to_string(row.profile.s()), std::to_string(row.dimension),
               std::to_string(row.predegree), std::to_string(row.oracle), opt_str(row.report.degree), bd,
               row.profile.s() <= 2 ? "inf" : opt_str(row.report.stabilizer_order), row.sample, flag});
      }
    }
  if (as_json) {
    std::cout << json({{"seed", seed}, {"rows", rows}}).dump(2) << '\n';
  } else {
    t.print(std::cout);
    std::cout << "\nseed " << seed
              << "; stab, degree for s >= 3, premultiplicities and multiplicities come from the sample; "
                 "* marks a sample whose stabilizer is not trivial (s >= 5) or whose external hessian is not simple\n";
  }
  return kExitOk;
}

template <class Field>
int stabilizer_on(const BinaryForm<Field>& F, double tol, bool as_json) {
  const StabilizerResult st = stabilizer(F, tol);
  if (as_json) {
    json els = json::array();
    for (const auto& m : st.elements) els.push_back(m.format());
    std::cout << json({{"form", F.format()},
                       {"order", st.order},
                       {"certified", st.certified},
                       {"min_separation", st.min_separation},
                       {"worst_accepted", st.worst_accepted},
                       {"elements", els}})
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << "form " << F.format() << "\norder " << st.order << (st.certified ? " (certified)" : "") << '\n';
  for (const auto& m : st.elements) std::cout << "  " << m.format() << '\n';
  return kExitOk;
}

int cmd_stabilizer(const std::string& text, const std::optional<std::string>& minpoly, double tol, bool as_json) {
  if (minpoly) return stabilizer_on(parse_form(text, number_field_from_text(*minpoly)), tol, as_json);
  return stabilizer_on(parse_form(text, RationalField{}), tol, as_json);
}

int cmd_oracle(const std::string& text, bool as_json) {
  const MultiplicityProfile P(parse_partition(text));
  const std::int64_t closed = predegree(P), oracle = oracle_predegree(P);
  std::optional<PairCount> pc;
  if (P.s() == 2) pc = oracle_pair_count(P);
  const bool agree = closed == oracle && (!pc || pc->degree == curve_or_surface_degree(P));
  if (as_json) {
    json j{{"profile", P.multiplicities()}, {"predegree", closed}, {"oracle_predegree", oracle}, {"agree", agree}};
    if (pc) j["pair_count"] = {{"ordered_pairs", pc->ordered_pairs}, {"covering_degree", pc->covering_degree},
                               {"degree", pc->degree}, {"formula", curve_or_surface_degree(P)}};
    std::cout << j.dump(2) << '\n';
  } else {
    Table t({"profile", P.format()});
    t.add({"predegree (closed form)", std::to_string(closed)});
    t.add({"predegree (ordered triples)", std::to_string(oracle)});
    if (pc) {
      t.add({"surface degree (formula)", std::to_string(curve_or_surface_degree(P))});
      t.add({"surface degree (ordered pairs)", std::to_string(pc->ordered_pairs) + " / " +
                                                   std::to_string(pc->covering_degree) + " = " +
                                                   std::to_string(pc->degree)});
    }
    t.add({"agree", agree ? "yes" : "NO"});
    t.print(std::cout);
  }
  return agree ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit-closure invariants of binary forms under PGL(2)"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of a table");

  std::string form_text;
  std::optional<std::string> minpoly;
  std::optional<std::int64_t> stab_order;
  bool no_numeric = false;
  double tol = 1e-9;

  auto* analyze = app.add_subcommand("analyze", "Invariants of one form");
  analyze->add_option("form", form_text, "Binary form in x, y (and t with --minpoly)")->required();
  analyze->add_option("--minpoly", minpoly, "Minimal polynomial of t for coefficients in Q(t)");
  auto* stab_opt = analyze->add_option("--stab", stab_order, "Stabilizer order, skips the numeric search")
                       ->check(CLI::PositiveNumber);
  analyze->add_flag("--no-numeric", no_numeric, "No floating point; multiplicities are left undetermined")
      ->excludes(stab_opt);
  analyze->add_option("--tol", tol, "Root matching tolerance for the stabilizer search")->check(CLI::PositiveNumber);
  analyze->add_flag("--json", as_json, "Emit JSON");

  std::string group;
  std::optional<int> group_n;
  std::vector<std::string> abc;
  bool fast = false;
  auto* special = app.add_subcommand("special", "Special-orbit composite A^a B^b C^c of a finite group");
  special->add_option("group", group, "Dn, D<n>, A4, S4 or A5")->required();
  special->add_option("--n", group_n, "n for Dn");
  special->add_option("abc", abc, "Exponents a b c")->expected(3)->required();
  special->add_flag("--fast", fast, "Skip the exact pipeline cross-check");
  special->add_flag("--json", as_json, "Emit JSON");

  int d_max = 0;
  std::uint64_t seed = 1;
  auto* catalog = app.add_subcommand("catalog", "One row per partition of every d <= dmax");
  catalog->add_option("dmax", d_max, "Largest degree")->required()->check(CLI::Range(1, 40));
  catalog->add_option("--seed", seed, "Seed for the random sample configurations");
  catalog->add_flag("--json", as_json, "Emit JSON");

  auto* stabc = app.add_subcommand("stabilizer", "Numeric stabilizer of a form (at least three distinct points)");
  stabc->add_option("form", form_text, "Binary form")->required();
  stabc->add_option("--minpoly", minpoly, "Minimal polynomial of t");
  stabc->add_option("--tol", tol, "Root matching tolerance")->check(CLI::PositiveNumber);
  stabc->add_flag("--json", as_json, "Emit JSON");

  std::string partition;
  auto* oracle = app.add_subcommand("oracle", "Predegree by closed form and by counting");
  oracle->add_option("partition", partition, "Comma-separated multiplicities, e.g. 2,1,1")->required();
  oracle->add_flag("--json", as_json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      AnalyzeOptions opt;
      opt.minpoly = minpoly;
      opt.stabilizer = stab_order;
      opt.numeric = !no_numeric;
      opt.tol = tol;
      return cmd_analyze(form_text, opt, as_json);
    }
    if (*special) return cmd_special(group, group_n, abc, fast, as_json);
    if (*catalog) return cmd_catalog(d_max, seed, as_json);
    if (*stabc) return cmd_stabilizer(form_text, minpoly, tol, as_json);
    if (*oracle) return cmd_oracle(partition, as_json);
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kExitOk;
}
