// amsg: numerical-semigroup calculator for Abhyankar-Moh sequences.
//
// Verbs: check, chains, classify, enumerate, verify. Every verb renders a
// human-readable report by default and a canonical JSON object with --json.
// Exit codes: 0 success, 1 verification failure (or internal consistency
// bug), 2 usage/input error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amsg.hpp"

using amsg::Int;
using json = nlohmann::ordered_json;

namespace {

json int_array(const std::vector<Int>& xs) {
  json a = json::array();
  for (Int x : xs) a.push_back(x);
  return a;
}

std::string join(const std::vector<Int>& xs, const char* sep = " ") {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Canonical per-sequence report. Key order is part of the output contract;
// see README.
json sequence_report(const amsg::AmSequence& seq, bool literal_mode,
                     Int conductor_oracle) {
  const amsg::AmCheckReport std_rep = amsg::check_conditions(seq, false);
  const amsg::AmCheckReport rep = amsg::check_conditions(seq, literal_mode);
  const amsg::StructuralConstants sc = amsg::structural_constants(seq);

  json j;
  j["degree"] = seq.degree;
  j["sequence"] = int_array(seq.terms);
  j["e"] = int_array(sc.e);
  j["nratio"] = int_array(sc.nratio);
  j["g1"] = rep.g1;
  j["g2"] = rep.g2;
  j["g3"] = rep.g3;
  j["g3_literal"] =
      rep.g3_literal_defined ? json(rep.g3_literal) : json(nullptr);
  j["g3_mode"] = literal_mode ? "literal" : "default";
  j["is_am"] = rep.is_am;
  j["conductor_oracle"] = conductor_oracle;
  if (rep.g1 && rep.g2)
    j["conductor_formula"] = amsg::conductor_formula(seq);
  else
    j["conductor_formula"] = nullptr;
  if (std_rep.is_am) {
    const amsg::DeltaReport dr = amsg::delta_report(seq);
    j["delta"] = int_array(dr.delta);
    j["gamma"] = dr.gamma;
    j["bound"] = dr.bound;
    j["extremal"] = dr.extremal;
  } else {
    j["delta"] = nullptr;
    j["gamma"] = nullptr;
    j["bound"] = amsg::checked_mul(seq.degree - 1, seq.degree - 2);
    j["extremal"] = nullptr;
  }
  return j;
}

void print_sequence_report(const amsg::AmSequence& seq, bool literal_mode,
                           Int conductor_oracle) {
  const amsg::AmCheckReport rep = amsg::check_conditions(seq, literal_mode);
  const amsg::StructuralConstants sc = amsg::structural_constants(seq);

  std::cout << "degree:              " << seq.degree << "\n";
  std::cout << "n-minimal sequence:  " << join(seq.terms) << "\n";
  std::cout << "e (prefix gcds):     " << join(sc.e) << "\n";
  std::cout << "n_k (e ratios):      " << join(sc.nratio) << "\n";
  std::cout << "G1: " << (rep.g1 ? "pass" : "fail") << "\n";
  std::cout << "G2: " << (rep.g2 ? "pass" : "fail") << "\n";
  std::cout << "G3: " << (rep.g3 ? "pass" : "fail") << " (n_h*bbar_h = "
            << rep.g3_lhs << (rep.g3 ? " < " : " >= ") << rep.degree_squared
            << ")\n";
  if (rep.g3_literal_defined)
    std::cout << "G3 literal reading: " << (rep.g3_literal ? "pass" : "fail")
              << " (n_{h-1}*bbar_h = " << rep.g3_literal_lhs
              << (rep.g3_literal ? " < " : " >= ") << rep.degree_squared
              << ")\n";
  else
    std::cout << "G3 literal reading: undefined (h = 1)\n";
  std::cout << "AM sequence (" << (literal_mode ? "literal" : "default")
            << " G3): " << (rep.is_am ? "yes" : "no") << "\n";
  std::cout << "conductor (oracle):  " << conductor_oracle << "\n";
  if (rep.g1 && rep.g2)
    std::cout << "conductor (formula): " << amsg::conductor_formula(seq)
              << "\n";
  else
    std::cout << "conductor (formula): n/a (needs G1+G2)\n";
  if (amsg::check_conditions(seq).is_am) {
    const amsg::DeltaReport dr = amsg::delta_report(seq);
    std::cout << "delta:               " << join(dr.delta) << "\n";
    std::cout << "gamma:               " << dr.gamma << "\n";
    std::cout << "bound (n-1)(n-2):    " << dr.bound << "\n";
    std::cout << "extremal:            " << (dr.extremal ? "yes" : "no")
              << "\n";
    std::cout << "n_k*delta_k in <delta_0..delta_{k-1}>:";
    for (Int k = 1; k <= seq.h(); ++k)
      std::cout << " k=" << k << ":"
                << (amsg::delta_membership(seq, k) ? "yes" : "no");
    std::cout << "\n";
  }
}

int run_check(Int degree, const std::vector<Int>& raw, bool literal,
              bool as_json) {
  if (degree <= 1) throw amsg::input_error("degree must exceed 1");
  const amsg::GeneratorSet gens = amsg::normalize_generators(raw, true);
  const amsg::NMinimalSequence nm = amsg::n_minimal_sequence(gens, degree);
  const amsg::AmSequence seq = amsg::am_sequence(nm);
  const Int oracle = amsg::build_table(gens).conductor;

  if (as_json) {
    json j = sequence_report(seq, literal, oracle);
    if (amsg::check_conditions(seq).is_am) {
      json dm = json::array();
      for (Int k = 1; k <= seq.h(); ++k)
        dm.push_back(amsg::delta_membership(seq, k));
      j["delta_membership"] = dm;
    } else {
      j["delta_membership"] = nullptr;
    }
    emit(j);
  } else {
    std::cout << "generators:          " << join(gens.elements) << "\n";
    print_sequence_report(seq, literal, oracle);
  }
  return 0;
}

int run_chains(Int degree, bool as_json) {
  const std::vector<amsg::DivisorChain> chains = amsg::divisor_chains(degree);
  if (as_json) {
    json j;
    j["degree"] = degree;
    j["count"] = Int(chains.size());
    json arr = json::array();
    for (const auto& c : chains) arr.push_back(int_array(c.e));
    j["chains"] = arr;
    emit(j);
  } else {
    std::cout << "degree " << degree << ": " << chains.size()
              << " divisor chain" << (chains.size() == 1 ? "" : "s") << "\n";
    for (const auto& c : chains) std::cout << "  " << join(c.e) << "\n";
  }
  return 0;
}

int run_classify(Int degree, bool as_json) {
  const std::vector<amsg::ClassificationRecord> records =
      amsg::classify_extremal(degree);
  if (as_json) {
    json j;
    j["degree"] = degree;
    j["count"] = Int(records.size());
    json arr = json::array();
    for (const auto& r : records) {
      json rec;
      rec["chain"] = int_array(r.extremal.chain.e);
      rec["generators"] = int_array(r.extremal.generators);
      rec["conductor"] = r.extremal.conductor;
      rec["minimal_system"] = int_array(r.minimal_system);
      rec["epsilon"] = int_array(r.epsilon);
      rec["am21_case"] = amsg::to_string(r.am21_case);
      rec["nprime"] = r.nprime;
      rec["am11_ok"] = r.am11_ok;
      rec["case_generators"] = int_array(r.case_generators);
      rec["case_regenerates"] = r.case_regenerates;
      rec["literal_generators"] = int_array(r.literal_generators);
      rec["literal_differs"] = r.literal_differs;
      rec["literal_regenerates"] = r.literal_regenerates;
      arr.push_back(rec);
    }
    j["records"] = arr;
    emit(j);
  } else {
    std::cout << "degree " << degree << ": " << records.size()
              << " maximal-conductor semigroup"
              << (records.size() == 1 ? "" : "s") << "\n";
    for (const auto& r : records) {
      std::cout << "chain " << join(r.extremal.chain.e) << "\n";
      std::cout << "  generators:     " << join(r.extremal.generators)
                << "  (conductor " << r.extremal.conductor << ")\n";
      std::cout << "  minimal system: " << join(r.minimal_system) << "\n";
      std::cout << "  epsilon:        " << join(r.epsilon) << "\n";
      std::cout << "  case:           " << amsg::to_string(r.am21_case)
                << "  n' = " << r.nprime << "  am11 "
                << (r.am11_ok ? "ok" : "FAIL") << "\n";
      std::cout << "  case pattern:   " << join(r.case_generators)
                << (r.case_regenerates ? "  regenerates"
                                       : "  DOES NOT regenerate")
                << "\n";
      if (r.literal_differs)
        std::cout << "  printed pattern " << join(r.literal_generators)
                  << (r.literal_regenerates ? " also regenerates"
                                            : " does not regenerate")
                  << "\n";
    }
  }
  return 0;
}

int run_enumerate(Int degree, bool as_json) {
  const std::vector<amsg::AmSequence> seqs =
      amsg::enumerate_am_sequences(degree);
  if (as_json) {
    json j;
    j["degree"] = degree;
    j["count"] = Int(seqs.size());
    json arr = json::array();
    for (const auto& seq : seqs) {
      const amsg::BoundVerdict v = amsg::conductor_bound_check(seq);
      json rec = sequence_report(seq, false, v.conductor_oracle);
      json bc;
      bc["formula_matches_oracle"] = v.formula_matches_oracle;
      bc["bound_holds"] = v.bound_holds;
      bc["identity_holds"] = v.identity_holds;
      bc["equality_case_consistent"] = v.equality_case_consistent;
      bc["ok"] = v.ok();
      rec["bound_check"] = bc;
      arr.push_back(rec);
    }
    j["sequences"] = arr;
    emit(j);
  } else {
    std::cout << "degree " << degree << ": " << seqs.size()
              << " Abhyankar-Moh sequence" << (seqs.size() == 1 ? "" : "s")
              << ", bound (n-1)(n-2) = "
              << amsg::checked_mul(degree - 1, degree - 2) << "\n";
    for (const auto& seq : seqs) {
      const amsg::BoundVerdict v = amsg::conductor_bound_check(seq);
      std::cout << "  (" << join(seq.terms, ",") << ")  c = "
                << v.report.conductor << "  gamma = " << v.report.gamma
                << (v.report.extremal ? "  extremal" : "")
                << (v.ok() ? "" : "  BOUND CHECK FAILED") << "\n";
    }
  }
  return 0;
}

int run_verify(Int max_degree, Int max_enum, bool as_json) {
  if (max_degree <= 1 || max_enum <= 1)
    throw amsg::input_error("degree bounds must exceed 1");
  const std::vector<amsg::SuiteResult> results =
      amsg::verify_all(max_degree, max_enum);
  bool all_ok = true;
  Int total_failures = 0;
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    total_failures += Int(r.failures.size());
  }

  if (as_json) {
    json j;
    j["max_degree"] = max_degree;
    j["max_enum_degree"] = max_enum;
    j["ok"] = all_ok;
    json arr = json::array();
    for (const auto& r : results) {
      json s;
      s["suite"] = r.suite;
      s["degree"] = r.degree;
      s["checked"] = r.checked;
      s["ok"] = r.ok();
      json fails = json::array();
      for (const auto& f : r.failures) {
        json fj;
        fj["suite"] = f.suite;
        fj["degree"] = f.degree;
        fj["detail"] = f.detail;
        fails.push_back(fj);
      }
      s["failures"] = fails;
      arr.push_back(s);
    }
    j["suites"] = arr;
    emit(j);
  } else {
    for (const auto& r : results) {
      std::cout << r.suite;
      if (r.degree > 0) std::cout << " n=" << r.degree;
      std::cout << ": " << r.checked << " checked, "
                << (r.ok() ? "ok" : "FAILED") << "\n";
      for (const auto& f : r.failures) std::cout << "    " << f.detail << "\n";
    }
    std::cout << (all_ok ? "all suites passed" : "FAILURES: ")
              << (all_ok ? "" : std::to_string(total_failures)) << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "numerical semigroups: Abhyankar-Moh sequence checks, divisor-chain "
      "classification, exhaustive verification"};
  app.require_subcommand(1);

  Int check_degree = 0;
  std::vector<Int> check_gens;
  bool check_literal = false;
  bool check_json = false;
  auto* check = app.add_subcommand(
      "check", "analyze the n-minimal sequence of a generator set");
  check->add_option("--degree", check_degree, "degree n (> 1)")->required();
  check->add_option("generators", check_gens, "generators of the semigroup")
      ->required();
  check->add_flag("--g3-literal", check_literal,
                  "decide is_am with the literal G3 reading");
  check->add_flag("--json", check_json, "machine-readable output");

  Int chains_degree = 0;
  bool chains_json = false;
  auto* chains = app.add_subcommand("chains", "list divisor chains of n");
  chains->add_option("degree", chains_degree, "degree n (> 1)")->required();
  chains->add_flag("--json", chains_json, "machine-readable output");

  Int classify_degree = 0;
  bool classify_json = false;
  auto* classify = app.add_subcommand(
      "classify", "classify the maximal-conductor semigroups of degree n");
  classify->add_option("degree", classify_degree, "degree n (> 1)")
      ->required();
  classify->add_flag("--json", classify_json, "machine-readable output");

  Int enum_degree = 0;
  bool enum_json = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "enumerate all Abhyankar-Moh sequences of degree n");
  enumerate->add_option("degree", enum_degree, "degree n (> 1)")->required();
  enumerate->add_flag("--json", enum_json, "machine-readable output");

  Int verify_max_degree = 30;
  Int verify_max_enum = 12;
  bool verify_json = false;
  auto* verify = app.add_subcommand(
      "verify", "run every verification suite; exit 1 on any counterexample");
  auto* vmax = verify->add_option("--max-degree", verify_max_degree,
                                  "classification suites up to this degree "
                                  "(default 30; also bounds enumeration "
                                  "suites unless --max-enum is given)");
  auto* venum = verify->add_option(
      "--max-enum", verify_max_enum,
      "enumeration suites up to this degree (default 12)");
  verify->add_flag("--json", verify_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(check_degree, check_gens, check_literal, check_json);
    if (chains->parsed()) return run_chains(chains_degree, chains_json);
    if (classify->parsed()) return run_classify(classify_degree, classify_json);
    if (enumerate->parsed()) return run_enumerate(enum_degree, enum_json);
    if (verify->parsed()) {
      // --max-degree alone drives both suite families.
      if (vmax->count() > 0 && venum->count() == 0)
        verify_max_enum = verify_max_degree;
      return run_verify(verify_max_degree, verify_max_enum, verify_json);
    }
  } catch (const amsg::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const amsg::overflow_error& e) {
    std::cerr << "error: " << e.what()
              << " (inputs exceed the exact 64-bit working range)\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
