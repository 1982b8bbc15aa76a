#pragma once

// Exhaustive verification suites. Each suite replays one family of closed
// claims against the brute-force engine and reports any mismatch as a
// counterexample; on a correct build every suite comes back clean.

#include <sstream>
#include <string>
#include <vector>

#include "amsg/classify.hpp"

namespace amsg {

struct Counterexample {
  std::string suite;
  Int degree = 0;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  Int degree = 0;   // 0 for suites not tied to one degree
  Int checked = 0;  // number of objects examined
  std::vector<Counterexample> failures;

  bool ok() const { return failures.empty(); }
};

namespace detail {
inline std::string join(const std::vector<Int>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}
}  // namespace detail

// Conductor bound suite, one degree: every enumerated AM sequence must pass
// the bound verdict (formula == oracle, c <= (n-1)(n-2), the gamma identity,
// the equality characterization) plus the delta-sequence side conditions:
// gcd(delta_0..delta_k) = e_k, delta_1 < delta_0, delta_k < n_{k-1} delta_{k-1},
// strictly increasing products e_{k-1} bbar_k, and agreement of the two G3
// readings' right-hand products when e_h = 1.
inline SuiteResult verify_conductor_bound(Int n) {
  SuiteResult res{"conductor_bound", n, 0, {}};
  auto fail = [&](const AmSequence& seq, const std::string& what) {
    res.failures.push_back(
        {res.suite, n, "sequence (" + detail::join(seq.terms) + "): " + what});
  };

  for (const AmSequence& seq : enumerate_am_sequences(n)) {
    ++res.checked;
    const BoundVerdict v = conductor_bound_check(seq);
    if (!v.formula_matches_oracle)
      fail(seq, "conductor formula " + std::to_string(v.report.conductor) +
                    " != oracle " + std::to_string(v.conductor_oracle));
    if (!v.bound_holds) fail(seq, "conductor exceeds (n-1)(n-2)");
    if (!v.identity_holds) fail(seq, "gamma != (n-1)(n-2) - c");
    if (!v.equality_case_consistent)
      fail(seq, "equality characterization out of sync");

    const StructuralConstants& sc = v.constants;
    const std::vector<Int>& d = v.report.delta;
    const Int h = seq.h();

    Int g = 0;
    for (Int k = 0; k <= h; ++k) {
      g = std::gcd(g, d[size_t(k)]);
      if (g != sc.e[size_t(k)]) fail(seq, "gcd(delta_0..delta_k) != e_k");
    }
    if (!(d[1] < d[0])) fail(seq, "delta_1 >= delta_0");
    for (Int k = 2; k <= h; ++k)
      if (!(d[size_t(k)] < checked_mul(sc.nk(k - 1), d[size_t(k - 1)])))
        fail(seq, "delta_k >= n_{k-1} delta_{k-1}");
    for (Int k = 2; k <= h; ++k)
      if (checked_mul(sc.e[size_t(k - 1)], seq.terms[size_t(k)]) <=
          checked_mul(sc.e[size_t(k - 2)], seq.terms[size_t(k - 1)]))
        fail(seq, "products e_{k-1} bbar_k not strictly increasing");
    if (sc.e[size_t(h)] == 1 &&
        (sc.nk(h) != sc.e[size_t(h - 1)] ||
         (checked_mul(sc.nk(h), seq.terms[size_t(h)]) <
          checked_mul(n, n)) !=
             (checked_mul(sc.e[size_t(h - 1)], seq.terms[size_t(h)]) <
              checked_mul(n, n))))
      fail(seq, "G3 readings disagree despite e_h = 1");
  }
  return res;
}

// Extremal classification suite, one degree: the extremal subset of the
// enumerated sequences equals the chain-built family, with one semigroup per
// chain.
inline SuiteResult verify_extremal_family(Int n) {
  SuiteResult res{"extremal_classification", n, 0, {}};
  const ExtremalMatchVerdict v = verify_extremal_classification(n);
  res.checked = v.chain_count;
  if (!v.ok)
    for (const std::string& m : v.mismatches)
      res.failures.push_back({res.suite, n, m});
  return res;
}

// Multiplicity suite, one degree: for every chain, gcd(n, n') = n - n',
// n - n' divides n, and n' = n - e_1.
inline SuiteResult verify_multiplicity_gcd(Int n) {
  SuiteResult res{"multiplicity_gcd", n, 0, {}};
  for (const ClassificationRecord& rec : classify_extremal(n)) {
    ++res.checked;
    if (!am11_check(rec))
      res.failures.push_back(
          {res.suite, n,
           "chain (" + detail::join(rec.extremal.chain.e) +
               "): gcd(n, n') != n - n' for n' = " + std::to_string(rec.nprime)});
    if (!rec.nprime_is_degree_minus_e1)
      res.failures.push_back({res.suite, n,
                              "chain (" + detail::join(rec.extremal.chain.e) +
                                  "): n' != n - e_1"});
  }
  return res;
}

// Minimal-system suite, one degree: exactly one of n = beta_1, n = 2 beta_0
// holds per chain, the case generator pattern regenerates the semigroup, and
// the eps ladder matches the chain (shifted by one in the 2 beta_0 case).
inline SuiteResult verify_minimal_system_case(Int n) {
  SuiteResult res{"minimal_system_case", n, 0, {}};
  auto fail = [&](const ClassificationRecord& rec, const std::string& what) {
    res.failures.push_back(
        {res.suite, n,
         "chain (" + detail::join(rec.extremal.chain.e) + "): " + what});
  };

  for (const ClassificationRecord& rec : classify_extremal(n)) {
    ++res.checked;
    if (rec.am21_case == MinimalSystemCase::violation) {
      fail(rec, "neither or both minimal-system cases hold");
      continue;
    }
    if (!rec.case_regenerates)
      fail(rec, "case generator pattern does not regenerate the semigroup");

    const std::vector<Int>& eps = rec.epsilon;
    const std::vector<Int>& e = rec.extremal.chain.e;
    if (rec.am21_case == MinimalSystemCase::degree_is_beta1) {
      for (size_t k = 1; k < eps.size(); ++k)
        if (k >= e.size() || eps[k] != e[k]) fail(rec, "eps_k != e_k");
      if (eps.size() != e.size()) fail(rec, "eps ladder length mismatch");
      if (rec.minimal_system.front() != n - e[1]) fail(rec, "beta_0 != n - e_1");
    } else {
      if (eps.size() + 1 != e.size()) fail(rec, "eps ladder length mismatch");
      for (size_t k = 0; k < eps.size(); ++k)
        if (k + 1 >= e.size() || eps[k] != e[k + 1]) fail(rec, "eps_k != e_{k+1}");
      if (n != 2 * e[1]) fail(rec, "n != 2 e_1");
    }
  }
  return res;
}

// Two-generator sanity suite: for all coprime pairs 2 <= a < b <= cap, the
// oracle conductor equals (a-1)(b-1).
inline SuiteResult verify_two_generator_conductor(Int cap) {
  SuiteResult res{"two_generator_conductor", 0, 0, {}};
  for (Int a = 2; a <= cap; ++a) {
    for (Int b = a + 1; b <= cap; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++res.checked;
      const Int c = build_table(normalize_generators({a, b})).conductor;
      if (c != checked_mul(a - 1, b - 1))
        res.failures.push_back(
            {res.suite, 0,
             "pair (" + std::to_string(a) + "," + std::to_string(b) +
                 "): conductor " + std::to_string(c) + " != (a-1)(b-1)"});
    }
  }
  return res;
}

// The whole battery: enumeration-based suites up to max_enum_degree,
// classification-only suites up to max_degree, plus the pair suite.
inline std::vector<SuiteResult> verify_all(Int max_degree,
                                           Int max_enum_degree,
                                           Int pair_cap = 40) {
  std::vector<SuiteResult> out;
  for (Int n = 2; n <= max_enum_degree; ++n) {
    out.push_back(verify_conductor_bound(n));
    out.push_back(verify_extremal_family(n));
  }
  for (Int n = 2; n <= max_degree; ++n) {
    out.push_back(verify_multiplicity_gcd(n));
    out.push_back(verify_minimal_system_case(n));
  }
  out.push_back(verify_two_generator_conductor(pair_cap));
  return out;
}

}  // namespace amsg
