#pragma once

// Divisor chains of a degree n, the maximal-conductor semigroups built from
// them, exhaustive enumeration of all Abhyankar-Moh sequences of a degree,
// and the per-chain classification records (minimal system, gcd ladder,
// which of the two minimal-system cases holds, regeneration checks).

#include <map>
#include <set>
#include <string>
#include <vector>

#include "amsg/conditions.hpp"

namespace amsg {

// n = e_0 > e_1 > ... > e_h = 1, each term dividing its predecessor.
struct DivisorChain {
  std::vector<Int> e;

  Int degree() const { return e.front(); }
  Int h() const { return Int(e.size()) - 1; }
  bool operator==(const DivisorChain&) const = default;
};

inline DivisorChain divisor_chain(std::vector<Int> e) {
  if (e.size() < 2 || e.front() <= 1 || e.back() != 1)
    throw input_error("divisor chain must run from a degree > 1 down to 1");
  for (size_t k = 1; k < e.size(); ++k)
    if (e[k] <= 0 || e[k] >= e[k - 1] || e[k - 1] % e[k] != 0)
      throw input_error("divisor chain must strictly decrease through divisors");
  return DivisorChain{std::move(e)};
}

namespace detail {
inline std::vector<Int> proper_divisors(Int v) {
  std::vector<Int> low, high;
  for (Int i = 1; i * i <= v; ++i) {
    if (v % i != 0) continue;
    if (i < v) low.push_back(i);
    const Int j = v / i;
    if (j != i && j < v) high.push_back(j);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline void extend_chains(std::vector<Int>& prefix, Int v,
                          std::vector<DivisorChain>& out) {
  if (v == 1) {
    out.push_back(DivisorChain{prefix});
    return;
  }
  for (Int d : proper_divisors(v)) {
    prefix.push_back(d);
    extend_chains(prefix, d, out);
    prefix.pop_back();
  }
}
}  // namespace detail

// All divisor chains of n, in lexicographic order.
inline std::vector<DivisorChain> divisor_chains(Int n) {
  if (n <= 1) throw input_error("degree must exceed 1");
  std::vector<Int> prefix{n};
  std::vector<DivisorChain> out;
  detail::extend_chains(prefix, n, out);
  return out;
}

// The semigroup G(e_0, ..., e_h) generated by n, n - e_1, ...,
// n^2/e_{k-1} - e_k, ..., n^2/e_{h-1} - 1. Its conductor is (n-1)(n-2) and
// its generator tuple is its own n-minimal sequence; both facts are
// re-derived from the brute-force engine here rather than assumed.
struct ExtremalSemigroup {
  Int degree = 0;
  DivisorChain chain;
  std::vector<Int> generators;  // in sequence order, not sorted
  Int conductor = 0;            // oracle-computed
};

inline ExtremalSemigroup build_extremal(const DivisorChain& chain) {
  const Int n = chain.degree();
  const Int n2 = checked_mul(n, n);
  ExtremalSemigroup ex;
  ex.degree = n;
  ex.chain = chain;
  ex.generators.push_back(n);
  for (Int k = 1; k <= chain.h(); ++k)
    ex.generators.push_back(n2 / chain.e[size_t(k - 1)] -
                            chain.e[size_t(k)]);

  const GeneratorSet gens = normalize_generators(ex.generators);
  ex.conductor = build_table(gens).conductor;
  if (ex.conductor != checked_mul(n - 1, n - 2))
    throw std::logic_error("extremal construction missed the conductor bound");
  if (n_minimal_sequence(gens, n).terms != ex.generators)
    throw std::logic_error(
        "extremal generators are not their own n-minimal sequence");
  const AmSequence seq = am_sequence(ex.generators);
  if (!check_conditions(seq).is_am || !delta_report(seq).extremal)
    throw std::logic_error("extremal construction failed the AM conditions");
  return ex;
}

// Exhaustive search for all sequences of degree n satisfying G1-G3 (standard
// G3 reading). The gcd ladder of a valid sequence is a divisor chain, and
// e_{k-1} * bbar_k increases in k with e_{h-1} * bbar_h < n^2, so each
// bbar_k ranges over gcd(e_{k-1}, bbar_k) = e_k with
// n_{k-1} * bbar_{k-1} < bbar_k (k >= 2) and bbar_k < n^2/e_{k-1}.
// Results come back in lexicographic order of the term tuples.
inline std::vector<AmSequence> enumerate_am_sequences(Int n) {
  if (n <= 1) throw input_error("degree must exceed 1");
  const Int n2 = checked_mul(n, n);
  std::vector<AmSequence> out;

  for (const DivisorChain& chain : divisor_chains(n)) {
    const Int h = chain.h();
    std::vector<Int> terms{n};
    auto rec = [&](auto&& self, Int k) -> void {
      if (k > h) {
        out.push_back(AmSequence{n, terms});
        return;
      }
      const Int ek1 = chain.e[size_t(k - 1)];
      const Int ek = chain.e[size_t(k)];
      Int lo = 1;
      if (k >= 2) {
        const Int nk1 = chain.e[size_t(k - 2)] / ek1;
        lo = checked_add(checked_mul(nk1, terms[size_t(k - 1)]), 1);
      }
      for (Int x = lo; checked_mul(ek1, x) < n2; ++x) {
        if (std::gcd(ek1, x) != ek) continue;
        terms.push_back(x);
        self(self, k + 1);
        terms.pop_back();
      }
    };
    rec(rec, 1);
  }

  std::sort(out.begin(), out.end(),
            [](const AmSequence& a, const AmSequence& b) {
              return a.terms < b.terms;
            });

  // Every emitted sequence must be the n-minimal sequence of the semigroup
  // it generates (a consequence of G1+G2 and bbar_1 < n), and distinct
  // sequences must generate distinct semigroups. Both are re-checked.
  std::set<std::vector<Int>> seen;
  for (const AmSequence& seq : out) {
    const GeneratorSet gens = normalize_generators(seq.terms);
    if (n_minimal_sequence(gens, n).terms != seq.terms)
      throw std::logic_error(
          "enumerated sequence is not the n-minimal sequence of its "
          "semigroup");
    if (!seen.insert(minimal_generators(gens).elements).second)
      throw std::logic_error(
          "two distinct enumerated sequences generate the same semigroup");
  }
  return out;
}

enum class MinimalSystemCase {
  degree_is_beta1,        // n equals the second-smallest minimal generator
  degree_is_twice_beta0,  // n equals twice the multiplicity
  violation,              // neither or both; must never occur
};

inline std::string to_string(MinimalSystemCase c) {
  switch (c) {
    case MinimalSystemCase::degree_is_beta1: return "n_equals_beta1";
    case MinimalSystemCase::degree_is_twice_beta0: return "n_equals_2beta0";
    default: return "violation";
  }
}

// Per-chain classification of the maximal-conductor semigroup: its minimal
// system beta_0 < ... < beta_g, the gcd ladder eps_k = gcd(beta_0..beta_k),
// which description case applies, and whether the case's generator pattern
// n^2/eps_{k-1} - eps_k regenerates the semigroup. The variant pattern with
// n^2/eps_1 - eps_1 as the first interior term is evaluated alongside; where
// it differs, the replaced generator set can lose gcd 1 entirely (e.g.
// {6,4,16} on the chain (6,2,1)).
struct ClassificationRecord {
  ExtremalSemigroup extremal;
  std::vector<Int> minimal_system;
  std::vector<Int> epsilon;
  MinimalSystemCase am21_case = MinimalSystemCase::violation;
  Int nprime = 0;  // min(G \ {0}) = beta_0
  bool nprime_is_degree_minus_e1 = false;
  bool am11_ok = false;  // gcd(n, n') == n - n' and (n - n') | n
  std::vector<Int> case_generators;  // regeneration list for the case
  bool case_regenerates = false;
  std::vector<Int> literal_generators;
  bool literal_differs = false;
  bool literal_regenerates = false;
};

// gcd(n, n') = n - n', and in particular n - n' divides n.
inline bool am11_check(const ClassificationRecord& rec) {
  const Int n = rec.extremal.degree;
  const Int np = rec.nprime;
  const Int diff = n - np;
  return diff > 0 && std::gcd(n, np) == diff && n % diff == 0;
}

inline ClassificationRecord classify_chain(const DivisorChain& chain) {
  ClassificationRecord rec;
  rec.extremal = build_extremal(chain);
  const Int n = rec.extremal.degree;
  const Int n2 = checked_mul(n, n);
  const GeneratorSet gens = normalize_generators(rec.extremal.generators);

  rec.minimal_system = minimal_generators(gens).elements;
  Int g = 0;
  for (Int b : rec.minimal_system) {
    g = std::gcd(g, b);
    rec.epsilon.push_back(g);
  }
  rec.nprime = rec.minimal_system.front();
  rec.nprime_is_degree_minus_e1 = rec.nprime == n - chain.e[1];

  const bool beta1 = rec.minimal_system.size() >= 2 &&
                     rec.minimal_system[1] == n;
  const bool twice = 2 * rec.minimal_system.front() == n;
  if (beta1 == twice) {
    rec.am21_case = MinimalSystemCase::violation;
    return rec;
  }
  rec.am21_case = beta1 ? MinimalSystemCase::degree_is_beta1
                        : MinimalSystemCase::degree_is_twice_beta0;
  rec.am11_ok = am11_check(rec);

  // Rebuild the generators from the eps ladder alone. In the beta1 case the
  // ladder matches the chain from index 1 on; in the other case it is the
  // chain shifted by one and the n term is redundant (n = 2 beta_0).
  const std::vector<Int>& eps = rec.epsilon;
  const Int gidx = Int(eps.size()) - 1;
  if (beta1) {
    rec.case_generators = {n, n - eps[1]};
    for (Int k = 2; k <= gidx; ++k)
      rec.case_generators.push_back(n2 / eps[size_t(k - 1)] -
                                    eps[size_t(k)]);
  } else {
    rec.case_generators = {n - eps[0]};
    for (Int k = 1; k <= gidx; ++k)
      rec.case_generators.push_back(n2 / eps[size_t(k - 1)] -
                                    eps[size_t(k)]);
  }
  rec.case_regenerates =
      same_semigroup(normalize_generators(rec.case_generators), gens);

  rec.literal_generators = rec.case_generators;
  if (beta1 && gidx >= 2)
    rec.literal_generators[2] = n2 / eps[1] - eps[1];
  rec.literal_differs = rec.literal_generators != rec.case_generators;
  if (rec.literal_differs) {
    const GeneratorSet lit = normalize_generators(rec.literal_generators);
    rec.literal_regenerates = lit.gcd() == 1 && same_semigroup(lit, gens);
  } else {
    rec.literal_regenerates = rec.case_regenerates;
  }
  return rec;
}

inline std::vector<ClassificationRecord> classify_extremal(Int n) {
  std::vector<ClassificationRecord> out;
  for (const DivisorChain& chain : divisor_chains(n))
    out.push_back(classify_chain(chain));
  return out;
}

// Verdict that the extremal subset of the enumerated AM sequences and the
// chain-built semigroups agree: every chain yields exactly one extremal
// sequence (term for term the chain formula), distinct chains yield distinct
// semigroups, and no extremal sequence falls outside the chain images.
struct ExtremalMatchVerdict {
  Int degree = 0;
  Int chain_count = 0;
  Int extremal_sequence_count = 0;
  bool ok = false;
  std::vector<std::string> mismatches;
};

inline ExtremalMatchVerdict verify_extremal_classification(Int n) {
  ExtremalMatchVerdict v;
  v.degree = n;
  const std::vector<DivisorChain> chains = divisor_chains(n);
  v.chain_count = Int(chains.size());

  std::map<std::vector<Int>, std::vector<Int>> extremal_by_chain;
  for (const AmSequence& seq : enumerate_am_sequences(n)) {
    const DeltaReport dr = delta_report(seq);
    if (!dr.extremal) continue;
    ++v.extremal_sequence_count;
    const StructuralConstants sc = structural_constants(seq);
    extremal_by_chain[sc.e] = seq.terms;
  }

  std::vector<ExtremalSemigroup> built;
  for (const DivisorChain& chain : chains) built.push_back(build_extremal(chain));

  v.ok = true;
  for (const ExtremalSemigroup& ex : built) {
    auto it = extremal_by_chain.find(ex.chain.e);
    if (it == extremal_by_chain.end()) {
      v.ok = false;
      v.mismatches.push_back("no extremal sequence found for a chain");
      continue;
    }
    if (it->second != ex.generators) {
      v.ok = false;
      v.mismatches.push_back("extremal sequence differs from chain formula");
    }
  }
  if (v.extremal_sequence_count != v.chain_count) {
    v.ok = false;
    v.mismatches.push_back("extremal sequence count != chain count");
  }
  // Distinct chains must give distinct semigroups.
  for (size_t i = 0; i < built.size(); ++i) {
    for (size_t j = i + 1; j < built.size(); ++j) {
      if (same_semigroup(normalize_generators(built[i].generators),
                         normalize_generators(built[j].generators))) {
        v.ok = false;
        v.mismatches.push_back("two chains generate the same semigroup");
      }
    }
  }
  return v;
}

}  // namespace amsg
