#pragma once

// End-to-end analysis of one form: parse, exact invariants, stabilizer,
// multiplicities, smoothness, numeric Hessian cross-check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "invariants.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "report_json.hpp"
#include "stabilizer.hpp"

namespace pgl2 {

struct AnalyzeOptions {
  std::optional<std::string> minpoly;
  /// User-supplied stabilizer order (skips the numeric search).
  std::optional<std::int64_t> stabilizer;
  /// When false, no floating point is used at all.
  bool numeric = true;
  double tol = 1e-9;
  double hessian_tol = 1e-8;
};

template <class Field>
ReportDocument analyze_form(const BinaryForm<Field>& F, const AnalyzeOptions& opt, std::string input = {}) {
  ReportDocument doc;
  doc.input = input.empty() ? F.format() : std::move(input);
  doc.minpoly = opt.minpoly;
  doc.form = F.format();
  doc.degree_d = F.degree();
  const auto P = profile(F);
  StabilizerInput stab;
  if (P.s() <= 2) {
    doc.stabilizer_source = "infinite";
  } else if (opt.stabilizer) {
    stab.order = *opt.stabilizer;
    doc.stabilizer_source = "user";
  } else if (opt.numeric) {
    const auto st = stabilizer(F, opt.tol);
    stab.order = st.order;
    stab.certified = st.certified;
    doc.stabilizer_source = "numeric";
    doc.tolerance = opt.tol;
  }
  doc.report = assemble_report(F, stab);
  if (opt.numeric && F.degree() >= 2)
    doc.numeric_hessian_check = outcome_name(numeric_hessian_check(F, opt.hessian_tol).outcome);
  return doc;
}

/// Parses the form (over Q, or over Q(t)/(minpoly)) and analyzes it.
inline ReportDocument analyze_text(const std::string& text, const AnalyzeOptions& opt) {
  if (opt.minpoly) {
    const NumberField K = number_field_from_text(*opt.minpoly);
    return analyze_form(parse_form(text, K), opt, text);
  }
  return analyze_form(parse_form(text, RationalField{}), opt, text);
}

/// prod (x - p_i y)^{m_i} for distinct random rationals p_i (and possibly
/// the point at infinity), drawn from a seeded generator.
inline BinaryForm<RationalField> random_configuration(const MultiplicityProfile& P, std::mt19937_64& rng) {
  const RationalField QQ;
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  std::vector<Rational> pts;
  while (pts.size() < static_cast<std::size_t>(P.s())) {
    Rational p(num(rng), den(rng));
    p.canonicalize();
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  BinaryForm<RationalField> F(QQ, {Rational(1)});
  for (std::size_t i = 0; i < pts.size(); ++i)
    F = F * BinaryForm<RationalField>::from_rationals(QQ, {Rational(1), -pts[i]}).pow(P.multiplicities()[i]);
  return F;
}

/// One catalog row: partition-only invariants, then the data of one random
/// configuration with that partition.
struct PartitionRow {
  MultiplicityProfile profile;
  int dimension = 0;
  std::int64_t predegree = 0;
  std::int64_t oracle = 0;
  std::string sample;
  OrbitReport report;
  /// The sample has a trivial stabilizer (s >= 5 only; smaller s are never generic).
  bool trivial_stabilizer = false;
  /// The external Hessian of the sample is squarefree.
  bool simple_hessian = false;
  /// A genericity check failed for this sample.
  bool flagged = false;
};

inline PartitionRow partition_row(const MultiplicityProfile& P, std::mt19937_64& rng, double tol = 1e-9) {
  PartitionRow row;
  row.profile = P;
  row.dimension = orbit_dimension(P);
  row.predegree = predegree(P);
  row.oracle = oracle_predegree(P);
  const auto F = random_configuration(P, rng);
  row.sample = F.format();
  StabilizerInput stab;
  if (P.s() >= 3) {
    const auto st = stabilizer(F, tol);
    stab = {st.order, st.certified};
    row.trivial_stabilizer = st.order == 1 && st.certified;
  }
  row.report = assemble_report(F, stab);
  row.simple_hessian = true;
  for (auto [k, n] : row.report.external_profile) row.simple_hessian = row.simple_hessian && k == 1;
  row.flagged = !row.simple_hessian || (P.s() >= 5 && !row.trivial_stabilizer);
  return row;
}

}  // namespace pgl2
