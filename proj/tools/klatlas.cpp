// klatlas: command-line interface to the symmetric-group Kazhdan-Lusztig and
// Schubert singular-locus toolkit.
//
// Usage:
//   klatlas verify <suite> [--n N] [--jobs J] [--format text|json]
//                  [--cache PATH] [--allow-long] [--k K]
//   klatlas compute <op> <perm> [<perm>] [--format text|json]
//
// Exit codes: 0 success, 1 verification failure, 2 usage/precondition error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "klatlas/cortez.hpp"
#include "klatlas/kl_table.hpp"
#include "klatlas/singular_locus.hpp"
#include "klatlas/verify.hpp"

namespace {

using namespace klatlas;

int run_verify(const std::string& suite, const SuiteConfig& cfg, int k) {
  VerifyContext ctx(cfg);
  std::vector<SuiteResult> results;
  auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
  if (want("theorem-main")) results.push_back(verify_theorem_main(ctx));
  if (want("corollary")) results.push_back(verify_corollary(ctx));
  if (want("kl2")) {
    results.push_back(verify_kl2_sweep(ctx));
    results.push_back(verify_kl2_patterns(ctx));
  }
  if (want("ms-crosschecks")) results.push_back(verify_ms_crosschecks(ctx));
  if (want("lemma-me")) results.push_back(verify_lemma_me(ctx, k));
  if (want("conjecture1")) results.push_back(verify_conjecture1(ctx));
  if (want("region-lemmas")) results.push_back(verify_region_lemmas(ctx));
  if (results.empty()) {
    std::cerr << "unknown suite '" << suite
              << "' (expected theorem-main, corollary, kl2, ms-crosschecks, "
                 "lemma-me, conjecture1, region-lemmas, or all)\n";
    return 2;
  }
  bool ok = true;
  for (const SuiteResult& res : results) {
    if (cfg.format == "json")
      emit_jsonl(std::cout, res);
    else
      emit_text(std::cout, res);
    ok = ok && res.ok();
  }
  return ok ? 0 : 1;
}

nlohmann::json coess_json(const Permutation& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CoessEntry& e : coessential_set(w))
    arr.push_back({{"p", e.p}, {"q", e.q}, {"r", e.r}, {"inclusion", e.inclusion}});
  return arr;
}

std::string set_str(const std::set<Permutation>& s) {
  std::string out;
  for (const Permutation& u : s) {
    if (!out.empty()) out += "  ";
    out += u.str();
  }
  return out.empty() ? "(none)" : out;
}

int run_compute(const std::string& op, const std::vector<std::string>& args,
                const std::string& format) {
  const bool json = format == "json";
  auto need = [&](size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("operation '" + op + "' takes " + std::to_string(count) +
                                  " permutation argument(s)");
  };
  if (op == "kl") {
    need(2);
    const Permutation u = parse_permutation(args[0]), w = parse_permutation(args[1]);
    if (u.size() != w.size()) throw std::invalid_argument("kl: permutations must have equal size");
    KLTable table(w.size());
    const PolyQ p = table.kl_poly(u, w);
    if (json)
      std::cout << nlohmann::json{{"u", u.str()}, {"w", w.str()}, {"kl", p.str()},
                                  {"coeffs", p.coeffs()}}.dump()
                << "\n";
    else
      std::cout << p.str() << "\n";
    return 0;
  }
  if (op == "klstat") {
    need(1);
    const Permutation w = parse_permutation(args[0]);
    KLTable table(w.size());
    const long long s = table.kl_stat(w);
    if (json)
      std::cout << nlohmann::json{{"w", w.str()}, {"kl_stat", s}}.dump() << "\n";
    else
      std::cout << s << "\n";
    return 0;
  }
  if (op == "ms") {
    need(1);
    const Permutation w = parse_permutation(args[0]);
    const std::set<Permutation> labels = ms(w);
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Permutation& u : labels) arr.push_back(u.str());
      std::cout << nlohmann::json{{"w", w.str()}, {"ms", arr}}.dump() << "\n";
    } else {
      std::cout << set_str(labels) << "\n";
    }
    return 0;
  }
  if (op == "coess") {
    need(1);
    const Permutation w = parse_permutation(args[0]);
    if (json) {
      std::cout << nlohmann::json{{"w", w.str()}, {"coessential", coess_json(w)}}.dump() << "\n";
    } else {
      for (const CoessEntry& e : coessential_set(w))
        std::cout << "(p=" << e.p << ", q=" << e.q << ", r=" << e.r << ")"
                  << (e.inclusion ? " inclusion" : "") << "\n";
    }
    return 0;
  }
  if (op == "min3412") {
    need(1);
    const Permutation w = parse_permutation(args[0]);
    const auto e = min_3412_embedding(w);
    if (!e) {
      if (json)
        std::cout << nlohmann::json{{"w", w.str()}, {"embedding", nullptr}}.dump() << "\n";
      else
        std::cout << "none (covexillary)\n";
      return 0;
    }
    if (json)
      std::cout << nlohmann::json{{"w", w.str()},       {"a", e->a},
                                  {"b", e->b},          {"c", e->c},
                                  {"d", e->d},          {"alpha", e->alpha},
                                  {"beta", e->beta},    {"gamma", e->gamma},
                                  {"delta", e->delta},  {"height", e->height},
                                  {"amplitude", e->amplitude}}.dump()
                << "\n";
    else
      std::cout << "a=" << e->a << " b=" << e->b << " c=" << e->c << " d=" << e->d
                << " alpha=" << e->alpha << " beta=" << e->beta << " gamma=" << e->gamma
                << " delta=" << e->delta << " height=" << e->height
                << " amplitude=" << e->amplitude << "\n";
    return 0;
  }
  if (op == "cortez") {
    need(1);
    const Permutation w = parse_permutation(args[0]);
    const CortezData t = cortez_data(w);
    if (json) {
      std::cout << nlohmann::json{{"w", w.str()},
                                  {"a", t.emb.a},
                                  {"b", t.emb.b},
                                  {"c", t.emb.c},
                                  {"d", t.emb.d},
                                  {"alpha", t.emb.alpha},
                                  {"beta", t.emb.beta},
                                  {"gamma", t.emb.gamma},
                                  {"delta", t.emb.delta},
                                  {"height", t.emb.height},
                                  {"alpha_prime", t.alpha_prime},
                                  {"delta_prime", t.delta_prime},
                                  {"kappa", t.kappa},
                                  {"v", t.v.str()},
                                  {"sigma", t.sigma.str()},
                                  {"u", t.u.str()},
                                  {"M", t.M},
                                  {"N", t.N}}.dump()
                << "\n";
    } else {
      std::cout << "a=" << t.emb.a << " b=" << t.emb.b << " c=" << t.emb.c << " d=" << t.emb.d
                << "\n"
                << "alpha=" << t.emb.alpha << " beta=" << t.emb.beta << " gamma=" << t.emb.gamma
                << " delta=" << t.emb.delta << " h=" << t.emb.height << "\n"
                << "alpha'=" << t.alpha_prime << " delta'=" << t.delta_prime
                << " kappa=" << t.kappa << "\n"
                << "v=" << t.v.str() << "\n"
                << "sigma=" << t.sigma.str() << " u=" << t.u.str() << "\n"
                << "M=" << t.M << " N=" << t.N << "\n";
    }
    return 0;
  }
  std::cerr << "unknown compute operation '" << op
            << "' (expected kl, klstat, ms, coess, min3412, cortez)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-group Kazhdan-Lusztig and Schubert singular-locus toolkit"};
  app.require_subcommand(1);

  std::string suite, format = "text", cache;
  int n = 5, jobs = 1, k = 2;
  bool allow_long = false;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite over S_n");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--n", n, "symmetric group size")->check(CLI::Range(1, 8));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--cache", cache, "kl-table cache file path");
  verify->add_flag("--allow-long", allow_long, "permit n = 8 sweeps");
  verify->add_option("--k", k, "component count for the lemma-me suite")
      ->check(CLI::Range(1, 8));

  std::string op;
  std::vector<std::string> perms;
  std::string cformat = "text";
  CLI::App* compute = app.add_subcommand("compute", "compute a single quantity");
  compute->add_option("op", op, "kl, klstat, ms, coess, min3412, cortez")->required();
  compute->add_option("perm", perms, "permutation literal(s)")->expected(1, 2);
  compute->add_option("--format", cformat, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      klatlas::SuiteConfig cfg;
      cfg.n = n;
      cfg.jobs = jobs;
      cfg.format = format;
      cfg.cache = cache;
      cfg.allow_long = allow_long;
      return run_verify(suite, cfg, k);
    }
    return run_compute(op, perms, cformat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
