#pragma once

// Brute-force engine for numerical semigroups: membership tables, conductor,
// gaps, minimal generating systems and n-minimal generator sequences, all by
// exact dynamic programming. This is the oracle layer; every closed formula
// in the rest of the library is cross-checked against it.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "amsg/checked.hpp"

namespace amsg {

// Hard cap on membership table size. Everything this library is meant for
// lives at desk scale (conductors in the thousands); the cap only guards
// against runaway inputs like <2, 10^12 + 1>.
inline constexpr Int kTableCap = Int(1) << 28;

// Finite set of positive integers generating a subsemigroup of N.
// Invariant: nonempty, sorted ascending, distinct, all elements >= 1.
// Construct via normalize_generators().
struct GeneratorSet {
  std::vector<Int> elements;

  Int smallest() const { return elements.front(); }
  Int largest() const { return elements.back(); }
  Int gcd() const { return gcd_all(elements); }
  bool operator==(const GeneratorSet&) const = default;
};

inline GeneratorSet normalize_generators(std::vector<Int> raw,
                                         bool require_coprime = false) {
  if (raw.empty()) throw input_error("generator list is empty");
  for (Int x : raw)
    if (x <= 0)
      throw input_error("generators must be positive, got " +
                        std::to_string(x));
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (require_coprime && gcd_all(raw) != 1)
    throw input_error(
        "generators have gcd " + std::to_string(gcd_all(raw)) +
        " > 1: not a numerical semigroup with finite complement");
  return GeneratorSet{std::move(raw)};
}

// DP table of N-combinations of `gens` on [0, bound). The generators must be
// sorted ascending; their gcd may exceed 1.
inline std::vector<bool> reachable(std::span<const Int> gens, Int bound) {
  if (bound > kTableCap)
    throw overflow_error("membership table would exceed the size cap");
  std::vector<bool> r(size_t(std::max<Int>(bound, 0)), false);
  if (bound <= 0) return r;
  r[0] = true;
  for (Int i = 1; i < bound; ++i) {
    for (Int g : gens) {
      if (g > i) break;
      if (r[size_t(i - g)]) {
        r[size_t(i)] = true;
        break;
      }
    }
  }
  return r;
}

// True iff x is a nonnegative integer combination of the generators.
// Unlike the conductor machinery this works for gcd > 1 as well.
inline bool membership(const GeneratorSet& gens, Int x) {
  if (x < 0) throw input_error("membership argument must be nonnegative");
  return reachable(gens.elements, checked_add(x, 1))[size_t(x)];
}

// Membership table of a gcd-1 generator set on [0, bound), with the
// conductor: the least c such that every integer >= c is a member.
// bound == conductor + smallest generator + 1, so the table always covers
// the smallest generator and one full period past the conductor.
struct MembershipTable {
  Int bound = 0;
  std::vector<bool> member;
  Int conductor = 0;

  bool contains(Int x) const {
    return x >= bound ? true : (x >= 0 && member[size_t(x)]);
  }
};

// Grows the DP table in blocks until a run of min(gens) consecutive members
// appears. Such a run, say starting at s, forces membership of everything
// >= s (keep adding the smallest generator), so its start is the conductor;
// no a-priori Frobenius bound is needed.
inline MembershipTable build_table(const GeneratorSet& gens) {
  if (gens.gcd() != 1)
    throw input_error("generators have gcd " + std::to_string(gens.gcd()) +
                      " > 1: no conductor exists");
  const Int m = gens.smallest();
  const Int block = checked_add(gens.largest(), 1);

  MembershipTable t;
  std::vector<bool>& r = t.member;
  Int bound = block;
  r.assign(size_t(bound), false);
  r[0] = true;
  Int run = 1;  // consecutive members ending at the last processed index
  Int conductor = (run == m) ? 0 : -1;
  for (Int i = 1; conductor < 0; ++i) {
    if (i == bound) {
      bound = checked_add(bound, block);
      if (bound > kTableCap)
        throw overflow_error("conductor search exceeded the table size cap");
      r.resize(size_t(bound), false);
    }
    bool in = false;
    for (Int g : gens.elements) {
      if (g > i) break;
      if (r[size_t(i - g)]) {
        in = true;
        break;
      }
    }
    r[size_t(i)] = in;
    run = in ? run + 1 : 0;
    if (run == m) conductor = i - m + 1;
  }

  // Trim/extend to the canonical bound; everything at or past the conductor
  // is a member, including any indices the block loop never reached.
  const Int want = checked_add(checked_add(conductor, m), 1);
  r.resize(size_t(want), false);
  for (Int x = conductor; x < want; ++x) r[size_t(x)] = true;
  t.bound = want;
  t.conductor = conductor;
  return t;
}

// The nonmembers below the conductor; their count is the genus.
inline std::vector<Int> gaps(const GeneratorSet& gens) {
  const MembershipTable t = build_table(gens);
  std::vector<Int> out;
  for (Int x = 1; x < t.conductor; ++x)
    if (!t.member[size_t(x)]) out.push_back(x);
  return out;
}

inline bool same_semigroup(const GeneratorSet& a, const GeneratorSet& b) {
  const MembershipTable ta = build_table(a);
  const MembershipTable tb = build_table(b);
  if (ta.conductor != tb.conductor) return false;
  for (Int x = 1; x < ta.conductor; ++x)
    if (ta.member[size_t(x)] != tb.member[size_t(x)]) return false;
  return true;
}

// The unique minimal generating system: nonzero members not expressible as a
// sum of two nonzero members. The smallest nonzero member always qualifies;
// any member >= conductor + smallest splits off the smallest, so the scan
// stops there.
inline GeneratorSet minimal_generators(const GeneratorSet& gens) {
  const MembershipTable t = build_table(gens);
  const Int m = gens.smallest();
  std::vector<Int> out{m};
  for (Int x = m + 1; x < t.conductor + m; ++x) {
    if (!t.member[size_t(x)]) continue;
    bool decomposable = false;
    for (Int u = m; u <= x / 2; ++u) {
      if (t.member[size_t(u)] && t.member[size_t(x - u)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  GeneratorSet result{std::move(out)};
  if (!same_semigroup(result, gens))
    throw std::logic_error(
        "minimal_generators failed to regenerate its input semigroup");
  return result;
}

// Greedy generator sequence anchored at a designated member n: bbar_0 = n,
// and each next term is the least member of G outside the partial semigroup.
// Stored in construction order; bbar_1 may be smaller than bbar_0.
struct NMinimalSequence {
  Int degree = 0;
  std::vector<Int> terms;

  bool operator==(const NMinimalSequence&) const = default;
};

inline NMinimalSequence n_minimal_sequence(const GeneratorSet& gens, Int n) {
  if (n < 1) throw input_error("degree must be positive");
  const MembershipTable t = build_table(gens);
  if (!t.contains(n))
    throw input_error("degree " + std::to_string(n) +
                      " is not a member of the semigroup");
  const Int B = t.bound;
  std::vector<Int> terms{n};
  std::vector<Int> sorted_terms{n};
  for (;;) {
    const std::vector<bool> dp = reachable(sorted_terms, B);
    // The partial semigroup is contained in G, so the first index where the
    // tables differ is the least member of G missing from it. Agreement on
    // all of [0, B) forces equality: the table covers index min(gens) and a
    // full run [conductor, conductor + min) of members.
    Int next = -1;
    for (Int x = 1; x < B; ++x) {
      if (bool(t.member[size_t(x)]) != bool(dp[size_t(x)])) {
        next = x;
        break;
      }
    }
    if (next < 0) break;
    terms.push_back(next);
    sorted_terms.insert(
        std::upper_bound(sorted_terms.begin(), sorted_terms.end(), next),
        next);
    if (Int(terms.size()) > B)
      throw std::logic_error("n_minimal_sequence failed to terminate");
  }
  return NMinimalSequence{n, std::move(terms)};
}

}  // namespace amsg
