// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.  Usage: acceptance [--data-dir DIR]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "klatlas/cortez.hpp"
#include "klatlas/singular_locus.hpp"
#include "klatlas/verify.hpp"
#include "oracle_rpoly.hpp"

using namespace klatlas;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && limit_s > 0 && secs > limit_s) {
    ok = false;
    note = "time limit exceeded (" + std::to_string(limit_s) + "s)";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %02d %-34s (%6.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              name.c_str(), secs, note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool suite_ok(const SuiteResult& res, std::string& note, size_t min_passed = 1) {
  if (!res.ok() || res.passed < min_passed) {
    note = res.suite + ": " + std::to_string(res.failed) + " failed, " +
           std::to_string(res.passed) + " passed";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = "data";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--data-dir" && i + 1 < argc) data_dir = argv[++i];
  }

  SuiteConfig cfg7;
  cfg7.n = 7;
  VerifyContext ctx7(cfg7);
  SuiteConfig cfg6;
  cfg6.n = 6;
  VerifyContext ctx6(cfg6);

  criterion(1, "nine-letter-example-fidelity", 1.0, [](std::string& note) {
    const CortezData t = cortez_data(parse_permutation("817396254"));
    const bool ok = t.emb.a == 3 && t.emb.b == 5 && t.emb.c == 7 && t.emb.d == 8 &&
                    t.emb.alpha == 7 && t.emb.beta == 9 && t.emb.gamma == 2 &&
                    t.emb.delta == 5 && t.emb.height == 2 && t.alpha_prime == 8 &&
                    t.delta_prime == 4 && t.kappa == 5 &&
                    t.v == parse_permutation("514398276") &&
                    t.sigma == parse_permutation("173452689") &&
                    t.u == parse_permutation("816392754") && t.M == 4 && t.N == 7 &&
                    length(t.u) == 19 && length(t.v) == 15;
    if (!ok) note = "derived data mismatch";
    return ok;
  });

  criterion(2, "component-counts-and-pattern-order", 1.0, [](std::string& note) {
    const size_t m1 = ms(parse_permutation("4631725")).size();
    const size_t m2 = ms(parse_permutation("47318625")).size();
    const bool leq = pattern_leq(parse_permutation("4631725"), parse_permutation("47318625"));
    if (m1 != 2 || m2 != 1 || !leq) {
      note = "|ms|=" + std::to_string(m1) + "," + std::to_string(m2) +
             " leq=" + std::to_string(leq);
      return false;
    }
    return true;
  });

  criterion(3, "kl2-characterization", 0, [&](std::string& note) {
    if (!suite_ok(verify_kl2_sweep(ctx6), note)) return false;
    if (!suite_ok(verify_kl2_sweep(ctx7), note)) return false;
    const SuiteResult pats = verify_kl2_patterns(ctx7);
    return suite_ok(pats, note, 66) && pats.records.size() == 66;
  });

  criterion(4, "main-theorem-both-directions", 0, [&](std::string& note) {
    return suite_ok(verify_theorem_main(ctx7), note);
  });

  criterion(5, "corollary-full-u-sweep", 600.0, [&](std::string& note) {
    return suite_ok(verify_corollary(ctx6), note);
  });

  criterion(6, "ms-equals-kl-oracle", 0, [&](std::string& note) {
    KLTable& table = ctx6.table(6);
    table.build_full();
    for (const Permutation& w : all_permutations(6))
      if (ms(w) != ms_oracle_via_kl(w, table)) {
        note = "mismatch at w=" + w.str();
        return false;
      }
    return true;
  });

  criterion(7, "dotted-filter-counts-components", 0, [](std::string& note) {
    for (const Permutation& w : all_permutations(7))
      if (dotted_filter_occurrences(w).size() != ms(w).size()) {
        note = "mismatch at w=" + w.str();
        return false;
      }
    return true;
  });

  criterion(8, "component-pattern-witnesses", 0, [&](std::string& note) {
    return suite_ok(verify_lemma_me(ctx7, 1), note) && suite_ok(verify_lemma_me(ctx7, 2), note);
  });

  criterion(9, "small-kl-stat-structure", 0, [&](std::string& note) {
    return suite_ok(verify_conjecture1(ctx7), note);
  });

  criterion(10, "independent-oracle-equivalence", 60.0, [](std::string& note) {
    KLTable table(5);
    table.build_full();
    testing::RPolyOracle oracle(5);
    size_t pairs = 0;
    for (const Permutation& w : all_permutations(5))
      for (const auto& [u, p] : oracle.kl_column(w)) {
        if (table.kl_poly(u, w) != p) {
          note = "mismatch at u=" + u.str() + " w=" + w.str();
          return false;
        }
        ++pairs;
      }
    note = std::to_string(pairs) + " pairs checked";
    return pairs > 2000;
  });

  criterion(11, "region-and-rank-lemmas", 0, [&](std::string& note) {
    return suite_ok(verify_region_lemmas(ctx7), note);
  });

  criterion(12, "module-property-suites", 0, [&](std::string& note) {
    // polynomial ring laws
    const PolyQ p = PolyQ::from_coeffs({1, 0, 2}), q = PolyQ::from_coeffs({0, 1});
    if (mul(p, q) != mul(q, p) || add(p, q) != add(q, p)) {
      note = "polynomial arithmetic laws";
      return false;
    }
    // order axioms on S4
    for (const Permutation& u : all_permutations(4))
      for (const Permutation& w : all_permutations(4))
        if (bruhat_leq(u, w) && bruhat_leq(w, u) && u != w) {
          note = "bruhat antisymmetry";
          return false;
        }
    // embeddings against a brute-force enumeration
    const Permutation host = parse_permutation("35142");
    size_t brute = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (int k = j + 1; k <= 5; ++k)
          if (flatten(host, {i, j, k}) == parse_permutation("231")) ++brute;
    if (embeddings(parse_permutation("231"), host).size() != brute) {
      note = "embedding enumeration";
      return false;
    }
    // shipped data files parse, checksum-verify, and match the built-ins
    if (parse_pattern_list_file(read_file(data_dir + "/patterns6.txt")) != six_patterns()) {
      note = "patterns6.txt mismatch";
      return false;
    }
    if (parse_pattern_list_file(read_file(data_dir + "/patterns66.txt")) !=
        sixty_six_patterns()) {
      note = "patterns66.txt mismatch";
      return false;
    }
    const std::string dotted = read_file(data_dir + "/dotted13.txt");
    const std::string body = dotted_list_body(dotted_patterns());
    if (dotted != checksum_header(body) + body) {
      note = "dotted13.txt mismatch";
      return false;
    }
    // table persistence round trip
    {
      const std::string path = "acceptance_cache_roundtrip.jsonl";
      KLTable t(4);
      t.save(path);
      KLTable loaded = KLTable::load(path);
      std::remove(path.c_str());
      KLTable fresh(4);
      fresh.build_full();
      for (const Permutation& w : all_permutations(4))
        for (const Permutation& u : all_permutations(4))
          if (loaded.kl_poly(u, w) != fresh.kl_poly(u, w)) {
            note = "save/load round trip";
            return false;
          }
    }
    // report determinism across job counts
    std::string one, two;
    for (int jobs : {1, 2}) {
      SuiteConfig cfg;
      cfg.n = 5;
      cfg.jobs = jobs;
      VerifyContext ctx(cfg);
      std::ostringstream out;
      emit_jsonl(out, verify_theorem_main(ctx));
      (jobs == 1 ? one : two) = out.str();
    }
    if (one != two) {
      note = "jsonl determinism";
      return false;
    }
    return true;
  });

  if (g_failures > 0) {
    std::printf("%d of 12 acceptance criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 12 acceptance criteria passed\n");
  return 0;
}
