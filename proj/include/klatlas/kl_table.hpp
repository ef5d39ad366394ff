#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "klatlas/permutation.hpp"
#include "klatlas/polyq.hpp"

namespace klatlas {

/// Which descent of w the recursion reduces by.  Results are independent of
/// the choice; Largest exists so tests can verify that.
enum class DescentRule { Smallest, Largest };

/// Memoized table of Kazhdan-Lusztig polynomials P_{u,w} for S_n.
///
/// Columns (fixed w) are computed by the standard descent recursion: for a
/// descent s of w and v = ws,
///   P_{u,w} = q^{1-c} P_{us,v} + q^c P_{u,v}
///             - sum over z < v with zs < z of mu(z,v) q^{(l(w)-l(z))/2} P_{u,z}
/// with c = 1 if us < u and c = 0 otherwise.  Only entries with P != 1 are
/// stored; lookups fall back to 1 for comparable pairs and 0 otherwise.
class KLTable {
public:
  static constexpr int kMaxN = 9;
  static constexpr int kFormatVersion = 1;

  explicit KLTable(int n, DescentRule rule = DescentRule::Smallest)
      : n_(n), rule_(rule) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("KLTable: n out of supported range");
    fact_ = 1;
    for (int i = 2; i <= n; ++i) fact_ *= static_cast<size_t>(i);
    init_static_tables();
    cols_.resize(fact_);
  }

  int n() const { return n_; }

  PolyQ kl_poly(const Permutation& u, const Permutation& w) {
    if (u.size() != n_ || w.size() != n_) throw std::invalid_argument("kl_poly: size mismatch");
    const Id ui = id_of(u.word()), wi = id_of(w.word());
    ensure_column(wi);
    return lookup(ui, wi);
  }

  /// Coefficient of q^((l(w)-l(z)-1)/2) in P_{z,w}; 0 at non-integral exponent.
  long long mu(const Permutation& z, const Permutation& w) {
    if (z.size() != n_ || w.size() != n_) throw std::invalid_argument("mu: size mismatch");
    const Id zi = id_of(z.word()), wi = id_of(w.word());
    if (zi == wi || !leq(zi, wi)) throw std::invalid_argument("mu: requires z < w");
    const int d = len_[wi] - len_[zi];
    if (d % 2 == 0) return 0;
    ensure_column(wi);
    return lookup(zi, wi).coefficient((d - 1) / 2);
  }

  long long kl_stat(const Permutation& w) {
    return kl_poly(Permutation::identity(n_), w).eval_at_one();
  }

  bool kl_member(const Permutation& w, long long m) { return kl_stat(w) <= m; }

  /// Computes every column, level by level in length; levels may be processed
  /// with several workers since a column depends only on shorter columns.
  void build_full(int jobs = 1) {
    if (jobs < 1) jobs = 1;
    std::vector<std::vector<Id>> by_len(static_cast<size_t>(n_ * (n_ - 1) / 2 + 1));
    for (Id w = 0; w < fact_; ++w) by_len[len_[w]].push_back(w);
    for (const std::vector<Id>& level : by_len) {
      if (level.empty()) continue;
      if (jobs == 1 || level.size() < 16) {
        for (Id w : level)
          if (!cols_[w]) cols_[w] = compute_column(w);
      } else {
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t)
          workers.emplace_back([&] {
            for (;;) {
              size_t i = next.fetch_add(1);
              if (i >= level.size()) return;
              Id w = level[i];
              if (!cols_[w]) cols_[w] = compute_column(w);
            }
          });
        for (auto& th : workers) th.join();
      }
    }
  }

  bool complete() const {
    for (const auto& c : cols_)
      if (!c) return false;
    return true;
  }

  size_t stored_nontrivial() const {
    size_t s = 0;
    for (const auto& c : cols_)
      if (c) s += c->nontrivial.size();
    return s;
  }

  /// JSON lines: a header record, then one record per comparable pair.
  void save(const std::string& path) {
    build_full();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    nlohmann::json header = {{"format", "kl-table"}, {"version", kFormatVersion}, {"n", n_}};
    out << header.dump() << "\n";
    std::vector<int> uw(static_cast<size_t>(n_)), ww(static_cast<size_t>(n_));
    for (Id w = 0; w < fact_; ++w) {
      word_of(w, ww);
      for (Id u = 0; u < fact_; ++u) {
        if (!leq(u, w)) continue;
        word_of(u, uw);
        const PolyQ p = lookup(u, w);
        nlohmann::json rec = {{"n", n_}, {"u", uw}, {"w", ww}, {"coeffs", p.coeffs()}};
        out << rec.dump() << "\n";
      }
    }
    if (!out) throw std::runtime_error("write failure on '" + path + "'");
  }

  static KLTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("kl-table file is empty");
    nlohmann::json header;
    try {
      header = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("corrupt kl-table header: ") + e.what());
    }
    if (header.value("format", "") != "kl-table")
      throw std::runtime_error("not a kl-table file");
    if (header.value("version", -1) != kFormatVersion)
      throw std::runtime_error("kl-table version mismatch");
    const int n = header.value("n", 0);
    KLTable table(n);
    for (Id w = 0; w < table.fact_; ++w) table.cols_[w] = std::make_unique<Column>();
    size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      nlohmann::json rec;
      try {
        rec = nlohmann::json::parse(line);
        if (rec.at("n").get<int>() != n) throw std::runtime_error("record n mismatch");
        Permutation u(rec.at("u").get<std::vector<int>>());
        Permutation w(rec.at("w").get<std::vector<int>>());
        PolyQ p = PolyQ::from_coeffs(rec.at("coeffs").get<std::vector<long long>>());
        if (p.coefficient(0) != 1) throw std::runtime_error("constant term is not 1");
        const Id ui = table.id_of(u.word()), wi = table.id_of(w.word());
        if (!table.leq(ui, wi)) throw std::runtime_error("record pair is not Bruhat-comparable");
        if (p != PolyQ::one()) table.cols_[wi]->nontrivial.emplace_back(ui, std::move(p));
      } catch (const std::exception& e) {
        throw std::runtime_error("corrupt kl-table record at line " + std::to_string(lineno) +
                                 ": " + e.what());
      }
    }
    for (auto& c : table.cols_) {
      std::sort(c->nontrivial.begin(), c->nontrivial.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      c->mu_support_ready = false;
    }
    return table;
  }

  // --- id-level interface used by the heavier sweeps -----------------------

  using Id = uint32_t;

  size_t element_count() const { return fact_; }
  Id id_of_perm(const Permutation& w) const { return id_of(w.word()); }
  Permutation perm_of_id(Id w) const {
    std::vector<int> word(static_cast<size_t>(n_));
    word_of(w, word);
    return Permutation(std::move(word));
  }
  int length_of(Id w) const { return len_[w]; }
  bool leq_ids(Id u, Id w) const { return leq(u, w); }

  PolyQ kl_poly_ids(Id u, Id w) {
    ensure_column(w);
    return lookup(u, w);
  }

  /// Entries of column w with P != 1, as (u, P) sorted by id.  Requires the
  /// column (lazily computed on demand).
  const std::vector<std::pair<Id, PolyQ>>& nontrivial_column(Id w) {
    ensure_column(w);
    return cols_[w]->nontrivial;
  }

private:
  struct Column {
    std::vector<std::pair<Id, PolyQ>> nontrivial;   // sorted by u id
    std::vector<std::pair<Id, long long>> mu_support;  // sorted by z id
    bool mu_support_ready = true;
  };

  void init_static_tables() {
    words_.resize(fact_ * static_cast<size_t>(n_));
    len_.resize(fact_);
    rankmat_.resize(fact_ * static_cast<size_t>(n_ * n_));
    std::vector<int> word(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) word[static_cast<size_t>(i)] = i + 1;
    Id id = 0;
    do {
      uint8_t* wp = &words_[static_cast<size_t>(id) * n_];
      int inv = 0;
      for (int i = 0; i < n_; ++i) {
        wp[i] = static_cast<uint8_t>(word[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n_; ++j)
          if (word[static_cast<size_t>(i)] > word[static_cast<size_t>(j)]) ++inv;
      }
      len_[id] = static_cast<uint8_t>(inv);
      uint8_t* rm = &rankmat_[static_cast<size_t>(id) * n_ * n_];
      for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
          rm[p * n_ + q] =
              static_cast<uint8_t>((p > 0 ? rm[(p - 1) * n_ + q] : 0) + (wp[p] <= q + 1 ? 1 : 0));
      ++id;
    } while (std::next_permutation(word.begin(), word.end()));
  }

  Id id_of(const std::vector<int>& word) const {
    // Lehmer code rank; ids are in lexicographic word order.
    size_t rank = 0, f = fact_;
    for (int i = 0; i < n_; ++i) {
      f /= static_cast<size_t>(n_ - i);
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j)
        if (word[static_cast<size_t>(j)] < word[static_cast<size_t>(i)]) ++smaller;
      rank += static_cast<size_t>(smaller) * f;
    }
    return static_cast<Id>(rank);
  }

  void word_of(Id id, std::vector<int>& out) const {
    const uint8_t* wp = &words_[static_cast<size_t>(id) * n_];
    for (int i = 0; i < n_; ++i) out[static_cast<size_t>(i)] = wp[i];
  }

  const uint8_t* word_ptr(Id id) const { return &words_[static_cast<size_t>(id) * n_]; }

  bool leq(Id u, Id w) const {
    if (u == w) return true;
    if (len_[u] >= len_[w]) return false;
    const uint8_t* ru = &rankmat_[static_cast<size_t>(u) * n_ * n_];
    const uint8_t* rw = &rankmat_[static_cast<size_t>(w) * n_ * n_];
    const int nn = n_ * n_;
    for (int i = 0; i < nn; ++i)
      if (ru[i] < rw[i]) return false;
    return true;
  }

  PolyQ lookup(Id u, Id w) const {
    if (u == w) return PolyQ::one();
    if (!leq(u, w)) return PolyQ();
    const Column* col = cols_[w].get();
    if (!col) throw std::logic_error("kl column not computed");
    auto it = std::lower_bound(col->nontrivial.begin(), col->nontrivial.end(), u,
                               [](const auto& e, Id v) { return e.first < v; });
    if (it != col->nontrivial.end() && it->first == u) return it->second;
    return PolyQ::one();
  }

  int descent_position(Id w) const {
    const uint8_t* wp = word_ptr(w);
    if (rule_ == DescentRule::Smallest) {
      for (int i = 0; i + 1 < n_; ++i)
        if (wp[i] > wp[i + 1]) return i + 1;
    } else {
      for (int i = n_ - 2; i >= 0; --i)
        if (wp[i] > wp[i + 1]) return i + 1;
    }
    throw std::logic_error("identity has no descent");
  }

  Id swap_positions(Id w, int s) const {
    // id of w with entries at positions s, s+1 (1-based) exchanged
    std::vector<int> word(static_cast<size_t>(n_));
    word_of(w, word);
    std::swap(word[static_cast<size_t>(s - 1)], word[static_cast<size_t>(s)]);
    return id_of(word);
  }

  std::vector<Id> down_ids(Id w) const {
    std::vector<Id> out;
    const int lw = len_[w];
    for (Id u = 0; u < fact_; ++u)
      if (len_[u] <= lw && leq(u, w)) out.push_back(u);
    return out;
  }

  const std::vector<std::pair<Id, long long>>& mu_support(Id v) {
    Column* col = cols_[v].get();
    if (!col) throw std::logic_error("kl column not computed");
    if (!col->mu_support_ready) {
      // loaded tables rebuild mu supports on demand (single-threaded use)
      col->mu_support = make_mu_support(v, *col);
      col->mu_support_ready = true;
    }
    return col->mu_support;
  }

  std::vector<std::pair<Id, long long>> make_mu_support(Id w, const Column& col) const {
    std::vector<std::pair<Id, long long>> out;
    const int lw = len_[w];
    for (Id z : down_ids(w)) {
      if (z == w) continue;
      const int d = lw - len_[z];
      if (d % 2 == 0) continue;
      long long m;
      if (d == 1) {
        m = 1;  // codimension one always has P = 1, mu = 1
      } else {
        auto it = std::lower_bound(col.nontrivial.begin(), col.nontrivial.end(), z,
                                   [](const auto& e, Id v) { return e.first < v; });
        m = (it != col.nontrivial.end() && it->first == z) ? it->second.coefficient((d - 1) / 2)
                                                           : 0;
      }
      if (m != 0) out.emplace_back(z, m);
    }
    return out;
  }

  std::unique_ptr<Column> compute_column(Id w) {
    auto col = std::make_unique<Column>();
    if (len_[w] == 0) return col;
    const int s = descent_position(w);
    const Id v = swap_positions(w, s);
    const Column* vcol = cols_[v].get();
    if (!vcol || !vcol->mu_support_ready) throw std::logic_error("kl column dependency missing");
    const int lw = len_[w];
    std::vector<int> word(static_cast<size_t>(n_));
    for (Id u : down_ids(w)) {
      if (u == w) continue;
      word_of(u, word);
      const bool us_below = word[static_cast<size_t>(s - 1)] > word[static_cast<size_t>(s)];
      std::swap(word[static_cast<size_t>(s - 1)], word[static_cast<size_t>(s)]);
      const Id us = id_of(word);
      const int c = us_below ? 1 : 0;
      PolyQ p = add(shift(lookup(us, v), 1 - c), shift(lookup(u, v), c));
      for (const auto& [z, m] : vcol->mu_support) {
        const uint8_t* zp = word_ptr(z);
        if (zp[s - 1] <= zp[s]) continue;  // need zs < z
        if (!leq(u, z)) continue;
        const int d = lw - len_[z];
        if (d % 2 != 0) throw std::logic_error("kl recursion: non-integral half exponent");
        p = sub(p, scale(shift(lookup(u, z), d / 2), m));
      }
      if (p.coefficient(0) != 1)
        throw std::logic_error("kl recursion: constant term is not 1");
      for (long long cf : p.coeffs())
        if (cf < 0) throw std::logic_error("kl recursion: negative coefficient");
      if (2 * p.degree() > lw - len_[u] - 1)
        throw std::logic_error("kl recursion: degree bound violated");
      if (p != PolyQ::one()) col->nontrivial.emplace_back(u, std::move(p));
    }
    std::sort(col->nontrivial.begin(), col->nontrivial.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    col->mu_support = make_mu_support(w, *col);
    return col;
  }

  void ensure_column(Id w) {
    if (cols_[w]) return;
    if (len_[w] > 0) {
      const int s = descent_position(w);
      const Id v = swap_positions(w, s);
      ensure_column(v);
      for (const auto& [z, m] : cols_[v]->mu_support) {
        (void)m;
        ensure_column(z);
      }
    }
    cols_[w] = compute_column(w);
  }

  int n_;
  DescentRule rule_;
  size_t fact_ = 1;
  std::vector<uint8_t> words_;
  std::vector<uint8_t> len_;
  std::vector<uint8_t> rankmat_;
  std::vector<std::unique_ptr<Column>> cols_;
};

}  // namespace klatlas
