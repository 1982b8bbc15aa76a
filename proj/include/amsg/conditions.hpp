#pragma once

// The Abhyankar-Moh conditions (G1)(G2)(G3) on an n-minimal generator
// sequence, the closed conductor formula valid under G1+G2, and the
// delta/gamma bookkeeping behind the conductor bound c <= (n-1)(n-2).

#include <string>
#include <vector>

#include "amsg/core.hpp"

namespace amsg {

// Candidate n-minimal generator sequence bbar_0 = n, bbar_1, ..., bbar_h.
// Invariant: degree == terms[0] > 1, h >= 1, all terms >= 1. Terms stay in
// construction order; bbar_1 is often smaller than bbar_0.
struct AmSequence {
  Int degree = 0;
  std::vector<Int> terms;

  Int h() const { return Int(terms.size()) - 1; }
  bool operator==(const AmSequence&) const = default;
};

inline AmSequence am_sequence(std::vector<Int> terms) {
  if (terms.size() < 2)
    throw input_error("sequence needs at least two terms (h >= 1)");
  if (terms.front() <= 1)
    throw input_error("degree must exceed 1, got " +
                      std::to_string(terms.front()));
  for (Int x : terms)
    if (x < 1) throw input_error("sequence terms must be positive");
  checked_mul(terms.front(), terms.front());  // n^2 must be representable
  return AmSequence{terms.front(), std::move(terms)};
}

inline AmSequence am_sequence(const NMinimalSequence& seq) {
  return am_sequence(seq.terms);
}

// e_k = gcd(bbar_0, ..., bbar_k) and n_k = e_{k-1}/e_k.
struct StructuralConstants {
  std::vector<Int> e;       // size h+1, e[0] = n
  std::vector<Int> nratio;  // size h; nratio[k-1] is n_k

  Int nk(Int k) const { return nratio[size_t(k - 1)]; }
};

inline StructuralConstants structural_constants(const AmSequence& seq) {
  StructuralConstants sc;
  Int g = 0;
  for (Int x : seq.terms) {
    g = std::gcd(g, x);
    sc.e.push_back(g);
  }
  for (size_t k = 1; k < sc.e.size(); ++k)
    sc.nratio.push_back(sc.e[k - 1] / sc.e[k]);
  return sc;
}

// Verdict on (G1)(G2)(G3), with the compared products kept for reporting.
// The standard G3 reading is n_h * bbar_h < n^2 (equal to e_{h-1} * bbar_h
// when e_h = 1); the literal reading n_{h-1} * bbar_h < n^2 is only defined
// for h >= 2 and is surfaced separately.
struct AmCheckReport {
  bool g1 = false;
  bool g2 = false;
  bool g3 = false;
  bool g3_literal = false;
  bool g3_literal_defined = false;
  bool literal_mode = false;  // which reading decided is_am
  bool is_am = false;
  Int g3_lhs = 0;          // n_h * bbar_h
  Int g3_literal_lhs = 0;  // n_{h-1} * bbar_h, 0 when undefined
  Int degree_squared = 0;
};

inline AmCheckReport check_conditions(const AmSequence& seq,
                                      bool literal_g3 = false) {
  const StructuralConstants sc = structural_constants(seq);
  const Int h = seq.h();
  AmCheckReport rep;
  rep.degree_squared = checked_mul(seq.degree, seq.degree);
  rep.literal_mode = literal_g3;

  rep.g1 = sc.e[size_t(h)] == 1;
  for (Int k = 1; k <= h; ++k)
    if (sc.nk(k) <= 1) rep.g1 = false;

  rep.g2 = true;
  for (Int k = 2; k <= h; ++k)
    if (checked_mul(sc.nk(k - 1), seq.terms[size_t(k - 1)]) >=
        seq.terms[size_t(k)])
      rep.g2 = false;

  rep.g3_lhs = checked_mul(sc.nk(h), seq.terms[size_t(h)]);
  rep.g3 = rep.g3_lhs < rep.degree_squared;

  rep.g3_literal_defined = h >= 2;
  if (rep.g3_literal_defined) {
    rep.g3_literal_lhs = checked_mul(sc.nk(h - 1), seq.terms[size_t(h)]);
    rep.g3_literal = rep.g3_literal_lhs < rep.degree_squared;
  }

  rep.is_am = rep.g1 && rep.g2 && (literal_g3 ? rep.g3_literal : rep.g3);
  return rep;
}

// c = sum_{k=1..h} (n_k - 1) * bbar_k - bbar_0 + 1. Only valid under G1+G2.
inline Int conductor_formula(const AmSequence& seq) {
  const AmCheckReport rep = check_conditions(seq);
  if (!rep.g1 || !rep.g2)
    throw input_error("conductor formula requires conditions G1 and G2");
  const StructuralConstants sc = structural_constants(seq);
  Int c = 0;
  for (Int k = 1; k <= seq.h(); ++k)
    c = checked_add(c, checked_mul(sc.nk(k) - 1, seq.terms[size_t(k)]));
  return checked_add(checked_sub(c, seq.degree), 1);
}

// delta_0 = n, delta_k = n^2/e_{k-1} - bbar_k, and
// gamma = sum (n_k - 1) delta_k - delta_0 + 1 = (n-1)(n-2) - c.
struct DeltaReport {
  std::vector<Int> delta;  // size h+1
  Int gamma = 0;
  Int conductor = 0;  // by the closed formula
  Int bound = 0;      // (n-1)(n-2)
  bool extremal = false;
};

inline DeltaReport delta_report(const AmSequence& seq) {
  const AmCheckReport rep = check_conditions(seq);
  if (!rep.is_am)
    throw input_error("delta report requires an Abhyankar-Moh sequence");
  const StructuralConstants sc = structural_constants(seq);
  const Int n2 = rep.degree_squared;

  DeltaReport dr;
  dr.delta.push_back(seq.degree);
  for (Int k = 1; k <= seq.h(); ++k) {
    // e_{k-1} divides n, so the division is exact.
    const Int d = n2 / sc.e[size_t(k - 1)] - seq.terms[size_t(k)];
    if (d <= 0)
      throw std::logic_error("nonpositive delta despite G3 holding");
    dr.delta.push_back(d);
  }
  for (Int k = 1; k <= seq.h(); ++k)
    dr.gamma = checked_add(dr.gamma,
                           checked_mul(sc.nk(k) - 1, dr.delta[size_t(k)]));
  dr.gamma = checked_add(checked_sub(dr.gamma, dr.delta[0]), 1);
  dr.conductor = conductor_formula(seq);
  dr.bound = checked_mul(seq.degree - 1, seq.degree - 2);
  dr.extremal = dr.gamma == 0;
  return dr;
}

// Full verdict on the conductor bound: c <= (n-1)(n-2), the identity
// gamma = (n-1)(n-2) - c, and the equality characterization
// gamma = 0  <=>  bbar_k = n^2/e_{k-1} - e_k for all k  <=>  delta_k = e_k.
// None of the clauses can fail for a genuine AM sequence; a false flag here
// means an implementation bug, which is exactly what the verify suites look
// for.
struct BoundVerdict {
  StructuralConstants constants;
  DeltaReport report;
  Int conductor_oracle = 0;
  std::vector<Int> extremal_terms;  // n^2/e_{k-1} - e_k, k = 1..h
  bool formula_matches_oracle = false;
  bool bound_holds = false;
  bool identity_holds = false;
  bool terms_match_extremal = false;
  bool delta_equals_e = false;
  bool equality_case_consistent = false;

  bool ok() const {
    return formula_matches_oracle && bound_holds && identity_holds &&
           equality_case_consistent;
  }
};

inline BoundVerdict conductor_bound_check(const AmSequence& seq) {
  BoundVerdict v;
  v.constants = structural_constants(seq);
  v.report = delta_report(seq);  // throws unless seq is AM

  const Int n2 = checked_mul(seq.degree, seq.degree);
  for (Int k = 1; k <= seq.h(); ++k)
    v.extremal_terms.push_back(n2 / v.constants.e[size_t(k - 1)] -
                               v.constants.e[size_t(k)]);

  v.conductor_oracle =
      build_table(normalize_generators(seq.terms)).conductor;
  v.formula_matches_oracle = v.conductor_oracle == v.report.conductor;
  v.bound_holds = v.report.conductor <= v.report.bound;
  v.identity_holds =
      v.report.gamma == checked_sub(v.report.bound, v.report.conductor);

  v.terms_match_extremal = true;
  for (Int k = 1; k <= seq.h(); ++k)
    if (seq.terms[size_t(k)] != v.extremal_terms[size_t(k - 1)])
      v.terms_match_extremal = false;
  v.delta_equals_e = true;
  for (Int k = 0; k <= seq.h(); ++k)
    if (v.report.delta[size_t(k)] != v.constants.e[size_t(k)])
      v.delta_equals_e = false;

  v.equality_case_consistent =
      v.report.extremal == v.terms_match_extremal &&
      v.report.extremal == v.delta_equals_e;
  return v;
}

// True iff n_k * delta_k is an N-combination of delta_0, ..., delta_{k-1}.
// This is where AM sequences differ from their delta shadows: the analogous
// statement for n_k * bbar_k always holds under G1+G2, but this one can fail.
inline bool delta_membership(const AmSequence& seq, Int k) {
  if (k < 1 || k > seq.h())
    throw input_error("delta_membership index out of range");
  const AmCheckReport rep = check_conditions(seq);
  if (!rep.is_am)
    throw input_error("delta membership requires an Abhyankar-Moh sequence");
  const DeltaReport dr = delta_report(seq);
  const StructuralConstants sc = structural_constants(seq);

  std::vector<Int> prefix(dr.delta.begin(), dr.delta.begin() + k);
  std::sort(prefix.begin(), prefix.end());
  const Int target = checked_mul(sc.nk(k), dr.delta[size_t(k)]);
  return reachable(prefix, checked_add(target, 1))[size_t(target)];
}

}  // namespace amsg
