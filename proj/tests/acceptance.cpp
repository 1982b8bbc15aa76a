// Acceptance suite. Runs every top-level criterion at its stated tolerance
// (all exact integer comparisons) and prints one pass/fail line per
// criterion. Exit status is the number of failed criteria.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "amsg.hpp"

using amsg::Int;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(AMSG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  const int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

Int chain_count_recurrence(Int n) {
  std::vector<Int> a(size_t(n + 1), 0);
  a[1] = 1;
  for (Int v = 2; v <= n; ++v)
    for (Int d = 1; d < v; ++d)
      if (v % d == 0) a[size_t(v)] += a[size_t(d)];
  return a[size_t(n)];
}

int failures = 0;

void report(int idx, const char* name, bool pass, double ms,
            const std::string& note = "") {
  std::cout << "criterion " << idx << " (" << name << "): "
            << (pass ? "PASS" : "FAIL") << "  [" << ms << " ms]"
            << (note.empty() ? "" : "  " + note) << "\n";
  if (!pass) ++failures;
}

// 1. The worked instance end to end through the CLI: check --degree 6 2 17
// must report sequence (6,2,17), e = (6,2,1), delta = (6,4,1), is_am, and
// n_2 delta_2 = 2 outside <6,4>. Under one second.
void criterion1() {
  const auto t0 = Clock::now();
  const CliResult r = run_cli("check --degree 6 --json 2 17");
  const double ms = ms_since(t0);
  bool ok = r.status == 0;
  std::string note;
  try {
    const json j = json::parse(r.out);
    ok = ok && j["sequence"] == json::array({6, 2, 17});
    ok = ok && j["e"] == json::array({6, 2, 1});
    ok = ok && j["delta"] == json::array({6, 4, 1});
    ok = ok && j["is_am"] == true;
    ok = ok && j["delta_membership"] == json::array({true, false});
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  ok = ok && ms < 1000.0;
  report(1, "worked instance (6,2,17) end to end", ok, ms, note);
}

// 2. For every degree 2..12, every enumerated AM sequence satisfies
// (a) oracle conductor == formula, (b) c <= (n-1)(n-2),
// (c) gamma == (n-1)(n-2) - c, (d) equality iff the chain formula terms.
void criterion2() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  Int checked = 0;
  for (Int n = 2; n <= 12 && ok; ++n) {
    for (const amsg::AmSequence& seq : amsg::enumerate_am_sequences(n)) {
      ++checked;
      const amsg::BoundVerdict v = amsg::conductor_bound_check(seq);
      if (!v.formula_matches_oracle || !v.bound_holds || !v.identity_holds ||
          !v.equality_case_consistent) {
        ok = false;
        note = "failing sequence of degree " + std::to_string(n);
        break;
      }
    }
  }
  report(2, "conductor bound, exhaustive 2..12", ok, ms_since(t0),
         note.empty() ? std::to_string(checked) + " sequences" : note);
}

// 3. The extremal subset of the enumeration equals the chain-built family,
// with cardinality a(n); frozen spot values a(4)=2, a(6)=3, a(12)=8.
void criterion3() {
  const auto t0 = Clock::now();
  bool ok = chain_count_recurrence(4) == 2 && chain_count_recurrence(6) == 3 &&
            chain_count_recurrence(12) == 8;
  std::string note = ok ? "" : "recurrence spot values";
  for (Int n = 2; n <= 12 && ok; ++n) {
    const amsg::ExtremalMatchVerdict v = amsg::verify_extremal_classification(n);
    if (!v.ok || v.chain_count != chain_count_recurrence(n)) {
      ok = false;
      note = "degree " + std::to_string(n);
    }
  }
  report(3, "extremal family = chain family, 2..12", ok, ms_since(t0), note);
}

// 4. For every degree 2..30 and chain: gcd(n, n') = n - n', n - n' | n,
// and n' = n - e_1.
void criterion4() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  for (Int n = 2; n <= 30 && ok; ++n) {
    for (const amsg::ClassificationRecord& rec : amsg::classify_extremal(n)) {
      if (!amsg::am11_check(rec) || !rec.nprime_is_degree_minus_e1 ||
          rec.nprime != n - rec.extremal.chain.e[1]) {
        ok = false;
        note = "degree " + std::to_string(n);
        break;
      }
    }
  }
  report(4, "multiplicity gcd property, 2..30", ok, ms_since(t0), note);
}

// 5. For every degree 2..30 and chain: exactly one of n = beta_1,
// n = 2 beta_0, and the case pattern regenerates the semigroup.
void criterion5() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  for (Int n = 2; n <= 30 && ok; ++n) {
    for (const amsg::ClassificationRecord& rec : amsg::classify_extremal(n)) {
      if (rec.am21_case == amsg::MinimalSystemCase::violation ||
          !rec.case_regenerates) {
        ok = false;
        note = "degree " + std::to_string(n);
        break;
      }
    }
  }
  report(5, "minimal-system case + regeneration, 2..30", ok, ms_since(t0),
         note);
}

// 6. Conductor oracle sanity: all coprime pairs 2 <= a < b <= 40 give
// conductor (a-1)(b-1).
void criterion6() {
  const auto t0 = Clock::now();
  bool ok = true;
  Int checked = 0;
  std::string note;
  for (Int a = 2; a <= 40 && ok; ++a) {
    for (Int b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++checked;
      if (amsg::build_table(amsg::normalize_generators({a, b})).conductor !=
          (a - 1) * (b - 1)) {
        ok = false;
        note = "pair " + std::to_string(a) + "," + std::to_string(b);
        break;
      }
    }
  }
  report(6, "two-generator conductor closed form", ok, ms_since(t0),
         note.empty() ? std::to_string(checked) + " pairs" : note);
}

// 7. G3 reading regression: (6,2,17) passes the default reading and fails
// the literal one (51 >= 36); (6,5) has no literal value (h = 1) and passes
// the default.
void criterion7() {
  const auto t0 = Clock::now();
  const amsg::AmCheckReport a =
      amsg::check_conditions(amsg::am_sequence({6, 2, 17}));
  const amsg::AmCheckReport al =
      amsg::check_conditions(amsg::am_sequence({6, 2, 17}), true);
  const amsg::AmCheckReport b =
      amsg::check_conditions(amsg::am_sequence({6, 5}));
  const bool ok = a.is_am && a.g3 && a.g3_literal_defined && !a.g3_literal &&
                  a.g3_literal_lhs == 51 && !al.is_am && b.is_am && b.g3 &&
                  !b.g3_literal_defined;
  report(7, "G3 reading regression", ok, ms_since(t0));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures;
}
