#pragma once

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "klatlas/cortez.hpp"
#include "klatlas/kl_table.hpp"
#include "klatlas/pattern_data.hpp"
#include "klatlas/patterns.hpp"
#include "klatlas/permutation.hpp"
#include "klatlas/polyq.hpp"
#include "klatlas/singular_locus.hpp"

namespace klatlas {

inline constexpr const char* kVersion = "1.0.0";

struct SuiteConfig {
  int n = 5;
  int jobs = 1;
  std::string format = "text";  // "text" or "json"
  std::string cache;            // optional kl-table cache path
  bool allow_long = false;      // gates n = 8 sweeps
};

struct VerificationRecord {
  std::string suite;
  int n = 0;
  Permutation w;
  std::string status;  // "pass", "fail", "skip"
  nlohmann::json detail;
};

struct SuiteResult {
  std::string suite;
  int n = 0;
  size_t passed = 0, failed = 0, skipped = 0;
  std::vector<VerificationRecord> records;  // sorted by w (lexicographic word order)

  bool ok() const { return failed == 0; }
  void tally() {
    passed = failed = skipped = 0;
    for (const auto& r : records) {
      if (r.status == "pass") ++passed;
      else if (r.status == "fail") ++failed;
      else ++skipped;
    }
  }
};

namespace detail {

inline void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& f) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 32) {
    for (size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  for (auto& th : workers) th.join();
}

}  // namespace detail

/// Shared state across suites: one KL table per group size, built on demand
/// and optionally persisted at the configured cache path.
class VerifyContext {
public:
  explicit VerifyContext(SuiteConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.n < 1 || cfg_.n > 8) throw std::invalid_argument("suite n must be in 1..8");
    if (cfg_.n == 8 && !cfg_.allow_long)
      throw std::invalid_argument("n = 8 sweeps require --allow-long");
  }

  const SuiteConfig& cfg() const { return cfg_; }

  /// Lazily constructed table for group size m; the table for cfg.n is fully
  /// built (and cached to disk when a cache path is configured).
  KLTable& table(int m) {
    auto it = tables_.find(m);
    if (it != tables_.end()) return *it->second;
    std::unique_ptr<KLTable> t;
    if (m == cfg_.n && !cfg_.cache.empty() && std::ifstream(cfg_.cache).good()) {
      t = std::make_unique<KLTable>(KLTable::load(cfg_.cache));
      if (t->n() != m) throw std::runtime_error("cache file holds a table for a different n");
    } else {
      t = std::make_unique<KLTable>(m);
      if (m == cfg_.n) {
        t->build_full(cfg_.jobs);
        if (!cfg_.cache.empty()) t->save(cfg_.cache);
      }
    }
    it = tables_.emplace(m, std::move(t)).first;
    return *it->second;
  }

private:
  SuiteConfig cfg_;
  std::map<int, std::unique_ptr<KLTable>> tables_;
};

namespace detail {

/// Sweep all w in S_n in lexicographic order, one record per w, parallel and
/// deterministic (records land in pre-assigned slots).
inline SuiteResult sweep(const std::string& suite, VerifyContext& ctx,
                         const std::function<void(const Permutation&, VerificationRecord&)>& body) {
  SuiteResult res;
  res.suite = suite;
  res.n = ctx.cfg().n;
  const std::vector<Permutation> all = all_permutations(res.n);
  res.records.resize(all.size());
  parallel_for(all.size(), ctx.cfg().jobs, [&](size_t i) {
    VerificationRecord& rec = res.records[i];
    rec.suite = suite;
    rec.n = res.n;
    rec.w = all[i];
    rec.status = "pass";
    body(all[i], rec);
  });
  res.tally();
  return res;
}

inline bool avoids_all(const Permutation& w, const std::vector<Permutation>& pats) {
  for (const Permutation& p : pats)
    if (contains(w, p)) return false;
  return true;
}

}  // namespace detail

/// P_{id,w} = 1 + q^h whenever the singular locus has one component and w
/// avoids the six patterns; conversely P_{id,w}(1) = 2 forces the hypothesis.
inline SuiteResult verify_theorem_main(VerifyContext& ctx) {
  KLTable& table = ctx.table(ctx.cfg().n);
  table.build_full(ctx.cfg().jobs);
  const Permutation id = Permutation::identity(ctx.cfg().n);
  return detail::sweep("theorem-main", ctx, [&](const Permutation& w, VerificationRecord& rec) {
    const bool hyp = ms(w).size() == 1 && detail::avoids_all(w, six_patterns());
    const PolyQ p = table.kl_poly(id, w);
    bool ok = true;
    nlohmann::json why;
    if (hyp) {
      const PolyQ expected = add(PolyQ::one(), PolyQ::q_power(min_height(w)));
      if (p != expected) {
        ok = false;
        why["forward"] = {{"kl", p.str()}, {"expected", expected.str()}};
      }
    }
    if (p.eval_at_one() == 2 && !hyp) {
      ok = false;
      why["converse"] = {{"kl", p.str()},
                         {"ms_size", ms(w).size()},
                         {"avoids_six", detail::avoids_all(w, six_patterns())}};
    }
    if (!hyp && p.eval_at_one() != 2) rec.status = "skip";
    if (!ok) {
      rec.status = "fail";
      rec.detail = why;
    }
  });
}

/// For hypothesis-satisfying w with singular-locus label v: P_{u,w} = 1 + q^h
/// when u <= v and P_{u,w} = 1 otherwise, for every u <= w.
inline SuiteResult verify_corollary(VerifyContext& ctx) {
  KLTable& table = ctx.table(ctx.cfg().n);
  table.build_full(ctx.cfg().jobs);
  return detail::sweep("corollary", ctx, [&](const Permutation& w, VerificationRecord& rec) {
    const std::set<Permutation> labels = ms(w);
    if (labels.size() != 1 || !detail::avoids_all(w, six_patterns())) {
      rec.status = "skip";
      return;
    }
    const KLTable::Id wid = table.id_of_perm(w);
    const KLTable::Id vid = table.id_of_perm(*labels.begin());
    const PolyQ expected = add(PolyQ::one(), PolyQ::q_power(min_height(w)));
    size_t below_v = 0;
    for (KLTable::Id u = 0; u < table.element_count(); ++u)
      if (table.leq_ids(u, vid)) ++below_v;
    const auto& col = table.nontrivial_column(wid);
    bool ok = col.size() == below_v;
    for (const auto& [u, p] : col) {
      if (!table.leq_ids(u, vid) || p != expected) {
        ok = false;
        rec.detail["bad_u"] = table.perm_of_id(u).str();
        rec.detail["kl"] = p.str();
        break;
      }
    }
    if (!ok) {
      rec.status = "fail";
      rec.detail["v"] = table.perm_of_id(vid).str();
      rec.detail["expected"] = expected.str();
      rec.detail["nontrivial_count"] = col.size();
      rec.detail["below_v_count"] = below_v;
    }
  });
}

/// The sweep half of the KL_2 characterization: P_{id,w}(1) <= 2 iff w avoids
/// the 66 patterns.
inline SuiteResult verify_kl2_sweep(VerifyContext& ctx) {
  KLTable& table = ctx.table(ctx.cfg().n);
  table.build_full(ctx.cfg().jobs);
  return detail::sweep("kl2-sweep", ctx, [&](const Permutation& w, VerificationRecord& rec) {
    const bool in_kl2 = table.kl_stat(w) <= 2;
    const bool avoids66 = !pattern_list_member(w, PatternList::SIXTY_SIX);
    if (in_kl2 != avoids66) {
      rec.status = "fail";
      rec.detail = {{"kl_stat", table.kl_stat(w)}, {"avoids_66", avoids66}};
    }
  });
}

/// The pattern-list half: each of the 66 patterns lies outside KL_2, and every
/// one-entry deletion lies inside (minimality; KL_2 is containment-closed).
inline SuiteResult verify_kl2_patterns(VerifyContext& ctx) {
  SuiteResult res;
  res.suite = "kl2-patterns";
  res.n = ctx.cfg().n;
  for (const Permutation& v : sixty_six_patterns()) {
    VerificationRecord rec;
    rec.suite = res.suite;
    rec.n = v.size();
    rec.w = v;
    rec.status = "pass";
    const long long stat = ctx.table(v.size()).kl_stat(v);
    if (stat <= 2) {
      rec.status = "fail";
      rec.detail["kl_stat"] = stat;
    }
    for (int drop = 1; drop <= v.size() && rec.status == "pass"; ++drop) {
      Embedding z;
      for (int i = 1; i <= v.size(); ++i)
        if (i != drop) z.push_back(i);
      const Permutation sub = flatten(v, z);
      const long long sub_stat = ctx.table(sub.size()).kl_stat(sub);
      if (sub_stat > 2) {
        rec.status = "fail";
        rec.detail["not_minimal_at"] = sub.str();
        rec.detail["sub_kl_stat"] = sub_stat;
      }
    }
    res.records.push_back(std::move(rec));
  }
  res.tally();
  return res;
}

/// ms(w) agrees with the Deodhar-criterion KL oracle, and the dotted-pattern
/// filter leaves exactly |ms(w)| occurrences of 4231/3412.
inline SuiteResult verify_ms_crosschecks(VerifyContext& ctx) {
  KLTable& table = ctx.table(ctx.cfg().n);
  table.build_full(ctx.cfg().jobs);
  return detail::sweep("ms-crosschecks", ctx, [&](const Permutation& w, VerificationRecord& rec) {
    const std::set<Permutation> direct = ms(w);
    const std::set<Permutation> oracle = ms_oracle_via_kl(w, table);
    const size_t survivors = dotted_filter_occurrences(w).size();
    if (direct != oracle || survivors != direct.size()) {
      rec.status = "fail";
      nlohmann::json d = nlohmann::json::array(), o = nlohmann::json::array();
      for (const auto& u : direct) d.push_back(u.str());
      for (const auto& u : oracle) o.push_back(u.str());
      rec.detail = {{"ms", d}, {"ms_oracle", o}, {"dotted_survivors", survivors}};
    }
  });
}

namespace detail {

// Search for k components whose 4-index witness cores union to a set Z with
// |ms(flatten(w, Z))| >= k.  Tries the first witness of each component across
// all k-subsets, then all witness-core combinations, capped.
inline bool lemma_me_witness(const Permutation& w, const std::vector<Component>& comps, int k,
                             Embedding& z_out) {
  const size_t m = comps.size();
  std::vector<size_t> subset;
  size_t attempts = 0;
  std::function<bool(size_t, bool)> try_subsets = [&](size_t start, bool all_witnesses) -> bool {
    if (subset.size() == static_cast<size_t>(k)) {
      std::vector<size_t> wit_idx(subset.size(), 0);
      for (;;) {
        if (++attempts > 20000) return false;
        std::set<int> zset;
        for (size_t t = 0; t < subset.size(); ++t) {
          const Embedding core = witness_core(comps[subset[t]].witnesses[wit_idx[t]]);
          zset.insert(core.begin(), core.end());
        }
        const Embedding z(zset.begin(), zset.end());
        if (static_cast<int>(z.size()) <= 4 * k &&
            ms(flatten(w, z)).size() >= static_cast<size_t>(k)) {
          z_out = z;
          return true;
        }
        if (!all_witnesses) return false;
        // advance the witness-choice odometer
        size_t t = 0;
        while (t < subset.size()) {
          if (++wit_idx[t] < comps[subset[t]].witnesses.size()) break;
          wit_idx[t++] = 0;
        }
        if (t == subset.size()) return false;
      }
    }
    for (size_t i = start; i < m; ++i) {
      subset.push_back(i);
      if (try_subsets(i + 1, all_witnesses)) return true;
      subset.pop_back();
    }
    return false;
  };
  if (try_subsets(0, false)) return true;
  subset.clear();
  return try_subsets(0, true);
}

}  // namespace detail

/// For every w with at least k singular components there is a subpattern on
/// at most 4k entries that still has at least k singular components.
inline SuiteResult verify_lemma_me(VerifyContext& ctx, int k) {
  if (k < 1) throw std::invalid_argument("verify_lemma_me: k must be >= 1");
  const std::string suite = "lemma-me-k" + std::to_string(k);
  return detail::sweep(suite, ctx, [&](const Permutation& w, VerificationRecord& rec) {
    const std::vector<Component> comps = singular_components(w);
    if (comps.size() < static_cast<size_t>(k)) {
      rec.status = "skip";
      return;
    }
    Embedding z;
    if (detail::lemma_me_witness(w, comps, k, z)) {
      rec.detail = {{"z_size", z.size()}, {"pattern", flatten(w, z).str()}};
    } else {
      rec.status = "fail";
      rec.detail["components"] = comps.size();
    }
  });
}

/// The four conjectured implications tying P_{id,w}(1) <= 3 to |ms(w)|.
inline SuiteResult verify_conjecture1(VerifyContext& ctx) {
  KLTable& table = ctx.table(ctx.cfg().n);
  table.build_full(ctx.cfg().jobs);
  const Permutation id = Permutation::identity(ctx.cfg().n);
  return detail::sweep("conjecture1", ctx, [&](const Permutation& w, VerificationRecord& rec) {
    const PolyQ p = table.kl_poly(id, w);
    const long long stat = p.eval_at_one();
    if (stat > 3) {
      rec.status = "skip";
      return;
    }
    const size_t m = ms(w).size();
    bool ok = m <= 3;
    std::string which = ok ? "" : "kl_stat<=3 but |ms|>3";
    if (ok && stat == 3) {
      // coefficient multiset above the constant term
      std::vector<long long> extra;
      for (int e = 1; e <= p.degree(); ++e)
        if (p.coefficient(e) != 0) extra.push_back(p.coefficient(e));
      const bool two_singles = extra.size() == 2 && extra[0] == 1 && extra[1] == 1;
      const bool one_double = extra.size() == 1 && extra[0] == 2;
      if ((m == 1 || m == 2) && !two_singles) {
        ok = false;
        which = "expected 1+q^a+q^b";
      } else if (m == 3 && !one_double) {
        ok = false;
        which = "expected 1+2q^a";
      }
    }
    if (!ok) {
      rec.status = "fail";
      rec.detail = {{"kl", p.str()}, {"ms_size", m}, {"violation", which},
                    {"note", "research finding, not necessarily a bug"}};
    }
  });
}

/// The exhaustive region/rank/length identities around the distinguished 3412
/// embedding and the covexillary coessential analysis.
inline SuiteResult verify_region_lemmas(VerifyContext& ctx) {
  static const Permutation p53241 = parse_permutation("53241");
  static const Permutation p52431 = parse_permutation("52431");
  static const Permutation p632541 = parse_permutation("632541");
  static const Permutation p653421 = parse_permutation("653421");
  static const Permutation p526413 = parse_permutation("526413");
  return detail::sweep("region-lemmas", ctx, [&](const Permutation& w, VerificationRecord& rec) {
    nlohmann::json fails = nlohmann::json::array();
    bool applicable = false;
    const size_t ms_size = ms(w).size();
    if (is_covexillary(w)) {
      if (ms_size == 1) {
        applicable = true;
        if (contains(w, p53241) && contains(w, p52431) && !contains(w, p632541))
          fails.push_back("covexonecomp");
        const CovexReport rep = covex_report(w);
        if (rep.non_inclusion_indices.size() != 1) {
          fails.push_back("unique-non-inclusion");
        } else {
          const int i = rep.non_inclusion_indices[0];
          const CoessEntry& e = rep.entries[static_cast<size_t>(i)];
          if (avoids(w, p653421) && std::min(e.p, e.q) != e.r + 1)
            fails.push_back("covexfibub");
          const int r_prev = i > 0 ? rep.entries[static_cast<size_t>(i - 1)].r : 0;
          if (avoids(w, p53241) && r_prev != e.r - 1) fails.push_back("covexfiblb");
        }
      }
    } else {
      applicable = true;
      if (!check_rv_formula(w).empty()) fails.push_back("rv-formula");
      const CortezData t = cortez_data(w);
      if (ms_size == 1) {
        if (!check_onecompempty(w).empty()) fails.push_back("onecompempty");
        if (!check_MNempty(w).ok()) fails.push_back("MNempty");
        if (t.emb.height > 1 && avoids(w, p526413)) {
          if (length(t.u) != length(w) - t.emb.height || !bruhat_leq(t.u, w))
            fails.push_back("exccomb-length");
          // the chain corners (w^{-1}(delta+i), delta+i), i < h, sit inside R
          // by construction; only other graph points would obstruct
          const Permutation winv = inverse(w);
          std::set<std::pair<int, int>> chain;
          for (int i = 1; i < t.emb.height; ++i)
            chain.insert({winv(t.emb.delta + i), t.emb.delta + i});
          for (const auto& [p, q] : exceptional_R_region(w))
            if (w(p) == q && !chain.count({p, q})) {
              fails.push_back("exccomb-graph-point");
              break;
            }
        }
      }
      if (t.emb.height > 1) {
        // rank identity r_u = r_w + 1 on R, equal elsewhere (unconditional)
        const RankMatrix rw(w), ru(t.u);
        std::set<std::pair<int, int>> r_cells;
        for (const auto& cell : exceptional_R_region(w)) r_cells.insert(cell);
        for (int p = 1; p <= w.size(); ++p)
          for (int q = 1; q <= w.size(); ++q) {
            const int want = rw(p, q) + (r_cells.count({p, q}) ? 1 : 0);
            if (ru(p, q) != want) {
              fails.push_back("exccomb-rank");
              p = q = w.size() + 1;
            }
          }
      }
    }
    if (!applicable && fails.empty()) {
      rec.status = "skip";
      return;
    }
    if (!fails.empty()) {
      rec.status = "fail";
      rec.detail = {{"violations", fails}};
    }
  });
}

/// JSONL emission: header record, then one record per w in lexicographic
/// order.  Byte-identical for identical inputs regardless of jobs.
inline void emit_jsonl(std::ostream& out, const SuiteResult& res) {
  nlohmann::json header = {
      {"suite", res.suite},
      {"n", res.n},
      {"version", kVersion},
      {"checksums",
       {{"patterns6", fnv1a(pattern_list_body(six_patterns()))},
        {"patterns66", fnv1a(pattern_list_body(sixty_six_patterns()))},
        {"dotted13", fnv1a(dotted_list_body(dotted_patterns()))}}},
      {"passed", res.passed},
      {"failed", res.failed},
      {"skipped", res.skipped}};
  out << header.dump() << "\n";
  for (const VerificationRecord& r : res.records) {
    nlohmann::json rec = {{"suite", r.suite}, {"n", r.n}, {"w", r.w.str()}, {"status", r.status}};
    if (!r.detail.is_null()) rec["detail"] = r.detail;
    out << rec.dump() << "\n";
  }
}

inline void emit_text(std::ostream& out, const SuiteResult& res) {
  out << "suite " << res.suite << " (n=" << res.n << "): " << res.passed << " passed, "
      << res.failed << " failed, " << res.skipped << " skipped\n";
  size_t shown = 0;
  for (const VerificationRecord& r : res.records) {
    if (r.status != "fail") continue;
    out << "  FAIL w=" << r.w.str() << " " << r.detail.dump() << "\n";
    if (++shown == 20) {
      out << "  ... further failures elided\n";
      break;
    }
  }
}

}  // namespace klatlas
