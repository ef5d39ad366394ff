#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klatlas/patterns.hpp"
#include "klatlas/permutation.hpp"

namespace klatlas {

inline bool is_covexillary(const Permutation& w) {
  return avoids(w, parse_permutation("3412"));
}

/// The distinguished 3412 embedding: minimum height, then minimum amplitude,
/// remaining ties broken by lexicographically least (a, b, c, d).
struct MinEmbedding {
  int a = 0, b = 0, c = 0, d = 0;
  int alpha = 0, beta = 0, gamma = 0, delta = 0;
  int height = 0;     // alpha - delta
  int amplitude = 0;  // beta - gamma
};

inline std::optional<MinEmbedding> min_3412_embedding(const Permutation& w) {
  const int n = w.size();
  std::optional<MinEmbedding> best;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (w(b) <= w(a)) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (w(c) >= w(a)) continue;
        for (int d = c + 1; d <= n; ++d) {
          if (!(w(c) < w(d) && w(d) < w(a))) continue;
          MinEmbedding e;
          e.a = a, e.b = b, e.c = c, e.d = d;
          e.alpha = w(a), e.beta = w(b), e.gamma = w(c), e.delta = w(d);
          e.height = e.alpha - e.delta;
          e.amplitude = e.beta - e.gamma;
          if (!best || std::tuple(e.height, e.amplitude, e.a, e.b, e.c, e.d) <
                           std::tuple(best->height, best->amplitude, best->a, best->b,
                                      best->c, best->d))
            best = e;
        }
      }
    }
  return best;
}

/// Minimum height of a 3412 embedding; 1 when none exists.
inline int min_height(const Permutation& w) {
  const auto e = min_3412_embedding(w);
  return e ? e->height : 1;
}

/// The data attached to the distinguished 3412 embedding: the chain bounds
/// alpha', delta', the Grassmannian step kappa, the parabolic generator sets
/// I and J, the bundle fiber label v = w0^J w0^I w, the transposition product
/// sigma with u = sigma w, and the column bounds M, N.
struct CortezData {
  MinEmbedding emb;
  int alpha_prime = 0, delta_prime = 0;
  int a_prime = 0, d_prime = 0;  // positions of alpha', delta'
  int kappa = 0;
  std::set<int> I, J;  // simple-transposition indices
  Permutation v, sigma, u;
  int M = 0, N = 0;
};

inline CortezData cortez_data(const Permutation& w) {
  const auto embo = min_3412_embedding(w);
  if (!embo) throw std::invalid_argument("cortez_data: input avoids 3412");
  const int n = w.size();
  CortezData d;
  d.emb = *embo;
  const Permutation wi = inverse(w);
  const int alpha = d.emb.alpha, delta = d.emb.delta, gamma = d.emb.gamma;
  const int h = d.emb.height;

  // largest alpha' with positions of alpha', alpha'-1, ..., alpha strictly decreasing
  d.alpha_prime = alpha;
  while (d.alpha_prime + 1 <= n && wi(d.alpha_prime + 1) < wi(d.alpha_prime)) ++d.alpha_prime;
  // smallest delta' with positions of delta, delta-1, ..., delta' strictly increasing
  d.delta_prime = delta;
  while (d.delta_prime - 1 >= 1 && wi(d.delta_prime - 1) > wi(d.delta_prime)) --d.delta_prime;
  d.a_prime = wi(d.alpha_prime);
  d.d_prime = wi(d.delta_prime);
  d.kappa = d.delta_prime + d.alpha_prime - alpha;

  for (int s = d.delta_prime; s <= d.alpha_prime - 1; ++s) d.I.insert(s);
  d.J = d.I;
  d.J.erase(d.kappa);
  d.v = compose(longest_in_parabolic(n, d.J), compose(longest_in_parabolic(n, d.I), w));

  // sigma = t_h ... t_1 with t_1 = (gamma, delta+1) and t_i = (delta+i-1, delta+i):
  // the cycle sending gamma -> alpha, delta+i -> delta+i-1, delta+1 -> gamma.
  std::vector<int> sw(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) sw[static_cast<size_t>(x - 1)] = x;
  sw[static_cast<size_t>(gamma - 1)] = alpha;
  sw[static_cast<size_t>(delta)] = gamma;  // sigma(delta+1) = gamma
  for (int i = 2; i <= h; ++i) sw[static_cast<size_t>(delta + i - 1)] = delta + i - 1;
  d.sigma = Permutation(std::move(sw));
  d.u = compose(d.sigma, w);

  d.M = d.emb.a;
  for (int p = 1; p < d.emb.c; ++p)
    if (w(p) < d.delta_prime && p > d.M) d.M = p;
  d.N = 0;
  for (int p = 1; p <= n; ++p)
    if (w(p) < d.delta_prime) d.N = p;
  return d;
}

/// The twelve regions that are empty whenever the singular locus has a single
/// component.  Returns the identifiers (1..12) of violated regions.
inline std::vector<int> check_onecompempty(const Permutation& w) {
  const CortezData t = cortez_data(w);
  const int a = t.emb.a, b = t.emb.b, c = t.emb.c, d = t.emb.d;
  const int al = t.emb.alpha, be = t.emb.beta, ga = t.emb.gamma, de = t.emb.delta;
  const int ap = t.alpha_prime, dp = t.delta_prime;
  const int n = w.size();
  bool hit[13] = {};
  for (int p = 1; p <= n; ++p) {
    const int v = w(p);
    if (p < a && v > be) hit[1] = true;
    if (p < a && ap < v && v < be) hit[2] = true;
    if (a < p && p < b && al < v && v < be) hit[3] = true;
    if (b < p && p < c && al < v && v < be) hit[4] = true;
    if (b < p && p < c && be < v) hit[5] = true;
    if (p < b && dp < v && v < al) hit[6] = true;
    if (p > d && v < ga) hit[7] = true;
    if (p > d && ga < v && v < dp) hit[8] = true;
    if (c < p && p < d && ga < v && v < de) hit[9] = true;
    if (b < p && p < c && ga < v && v < de) hit[10] = true;
    if (b < p && p < c && v < ga) hit[11] = true;
    if (p > c && de < v && v < ap) hit[12] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= 12; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

/// Bounds and empty regions around the column markers M and N.
struct MNReport {
  int M = 0, N = 0;
  bool m_bounds = false;        // a <= M < b
  bool n_bounds = false;        // c <= N < d
  bool region_ii_empty = true;  // {p : a < p < M, w(p) > alpha'}
  bool region_iv_empty = true;  // {p : c < p < N, w(p) > alpha'}
  bool ok() const { return m_bounds && n_bounds && region_ii_empty && region_iv_empty; }
};

inline MNReport check_MNempty(const Permutation& w) {
  const CortezData t = cortez_data(w);
  MNReport r;
  r.M = t.M;
  r.N = t.N;
  r.m_bounds = t.emb.a <= t.M && t.M < t.emb.b;
  r.n_bounds = t.emb.c <= t.N && t.N < t.emb.d;
  for (int p = t.emb.a + 1; p < t.M; ++p)
    if (w(p) > t.alpha_prime) r.region_ii_empty = false;
  for (int p = t.emb.c + 1; p < t.N; ++p)
    if (w(p) > t.alpha_prime) r.region_iv_empty = false;
  return r;
}

/// Ordered coessential entries of a covexillary permutation, with the indices
/// (0-based into entries) of the non-inclusion elements marked.
struct CovexReport {
  std::vector<CoessEntry> entries;
  std::vector<int> non_inclusion_indices;
  bool totally_ordered = true;  // componentwise comparable along the list
};

inline CovexReport covex_report(const Permutation& w) {
  if (!is_covexillary(w)) throw std::invalid_argument("covex_report: input contains 3412");
  CovexReport r;
  r.entries = coessential_set(w);
  for (size_t i = 0; i < r.entries.size(); ++i) {
    if (!r.entries[i].inclusion) r.non_inclusion_indices.push_back(static_cast<int>(i));
    if (i > 0 && (r.entries[i].p < r.entries[i - 1].p || r.entries[i].q < r.entries[i - 1].q))
      r.totally_ordered = false;
  }
  return r;
}

/// The cells where the rank matrix of u = sigma w exceeds that of w by one:
/// the union over the transposition product of the swap rectangles
///   R_1 = {(p,q) : w^{-1}(delta+1) <= p < c,  gamma     <= q < delta+1}
///   R_i = {(p,q) : w^{-1}(delta+i) <= p < c,  delta+i-1 <= q < delta+i}.
/// Requires a 3412 embedding of height > 1.
inline std::vector<std::pair<int, int>> exceptional_R_region(const Permutation& w) {
  const auto embo = min_3412_embedding(w);
  if (!embo) throw std::invalid_argument("exceptional_R_region: input avoids 3412");
  if (embo->height <= 1)
    throw std::invalid_argument("exceptional_R_region: requires height > 1");
  const Permutation wi = inverse(w);
  const int c = embo->c, gamma = embo->gamma, delta = embo->delta, h = embo->height;
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= h; ++i) {
    const int qlo = (i == 1 ? gamma : delta + i - 1);
    for (int p = wi(delta + i); p < c; ++p)
      for (int q = qlo; q < delta + i; ++q) cells.emplace_back(p, q);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

/// Verifies the rank identity tying v to w at column kappa:
///   r_v(i, kappa) = r_w(i, alpha')                      for i < w^{-1}(alpha-1),
///                 = r_w(i, alpha') - j                  for w^{-1}(alpha-j) <= i < w^{-1}(alpha-j-1),
///                 = r_w(i, alpha') - alpha' + kappa     for i >= d'.
/// Returns the rows where it fails (empty = identity holds).
inline std::vector<int> check_rv_formula(const Permutation& w) {
  const CortezData t = cortez_data(w);
  const int n = w.size();
  const Permutation wi = inverse(w);
  const int alpha = t.emb.alpha;
  const int jmax = alpha - t.delta_prime;  // w^{-1}(alpha - jmax) = d'
  const RankMatrix rw(w), rv(t.v);
  std::vector<int> bad;
  for (int i = 1; i <= n; ++i) {
    int expected;
    if (i >= t.d_prime) {
      expected = rw(i, t.alpha_prime) - t.alpha_prime + t.kappa;
    } else {
      int j = 0;
      for (int jj = 1; jj <= jmax; ++jj)
        if (wi(alpha - jj) <= i) j = jj;
      expected = rw(i, t.alpha_prime) - j;
    }
    if (rv(i, t.kappa) != expected) bad.push_back(i);
  }
  return bad;
}

}  // namespace klatlas
