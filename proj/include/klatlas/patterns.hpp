#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klatlas/permutation.hpp"

namespace klatlas {

/// Strictly increasing 1-based positions into a host permutation.
using Embedding = std::vector<int>;

inline void check_embedding(const Permutation& w, const Embedding& z) {
  int prev = 0;
  for (int i : z) {
    if (i <= prev || i > w.size()) throw std::invalid_argument("invalid embedding indices");
    prev = i;
  }
}

/// The permutation of size |Z| order-isomorphic to w restricted to Z.
inline Permutation flatten(const Permutation& w, const Embedding& z) {
  check_embedding(w, z);
  const int m = static_cast<int>(z.size());
  std::vector<int> vals(static_cast<size_t>(m));
  for (int t = 0; t < m; ++t) vals[static_cast<size_t>(t)] = w(z[static_cast<size_t>(t)]);
  std::vector<int> word(static_cast<size_t>(m));
  for (int t = 0; t < m; ++t) {
    int r = 1;
    for (int s = 0; s < m; ++s)
      if (vals[static_cast<size_t>(s)] < vals[static_cast<size_t>(t)]) ++r;
    word[static_cast<size_t>(t)] = r;
  }
  return Permutation(std::move(word));
}

namespace detail {

// Backtracking over positions with prefix order-isomorphism pruning.
// Returns true once a single embedding is found when first_only is set.
inline bool embed_search(const Permutation& v, const Permutation& w, int t,
                         std::vector<int>& chosen, std::vector<Embedding>* out,
                         bool first_only) {
  const int m = v.size(), n = w.size();
  if (t == m) {
    if (out) out->push_back(chosen);
    return true;
  }
  const int lo = chosen.empty() ? 1 : chosen.back() + 1;
  for (int i = lo; i <= n - (m - t - 1); ++i) {
    bool ok = true;
    for (int s = 0; s < t && ok; ++s)
      ok = (v(s + 1) < v(t + 1)) == (w(chosen[static_cast<size_t>(s)]) < w(i));
    if (!ok) continue;
    chosen.push_back(i);
    bool found = embed_search(v, w, t + 1, chosen, out, first_only);
    chosen.pop_back();
    if (found && first_only) return true;
  }
  return false;
}

}  // namespace detail

/// All Z with flatten(w, Z) = v, in lexicographic order.
inline std::vector<Embedding> embeddings(const Permutation& v, const Permutation& w) {
  std::vector<Embedding> out;
  if (v.size() > w.size()) return out;
  std::vector<int> chosen;
  detail::embed_search(v, w, 0, chosen, &out, false);
  return out;
}

/// Early-exit containment test.
inline bool contains(const Permutation& w, const Permutation& v) {
  if (v.size() > w.size()) return false;
  std::vector<int> chosen;
  return detail::embed_search(v, w, 0, chosen, nullptr, true);
}

inline bool avoids(const Permutation& w, const Permutation& v) { return !contains(w, v); }

/// Non-strict pattern containment order; equal sizes compare by equality.
inline bool pattern_leq(const Permutation& v, const Permutation& w) {
  if (v.size() > w.size()) return false;
  if (v.size() == w.size()) return v == w;
  return contains(w, v);
}

/// A Bruhat interval [x, v] in a small symmetric group.
struct IntervalPattern {
  Permutation x;
  Permutation v;

  IntervalPattern(Permutation x_, Permutation v_) : x(std::move(x_)), v(std::move(v_)) {
    if (x.size() != v.size()) throw std::invalid_argument("interval pattern: size mismatch");
    if (!bruhat_leq(x, v)) throw std::invalid_argument("interval pattern: x must be <= v");
  }
  int size() const { return v.size(); }
};

/// All interval pattern embeddings of [x, v] into [u, w]: embeddings Z of v
/// into w whose induced u (entries at Z rearranged into pattern x) satisfies
/// l(v) - l(x) = l(w) - l(u).  The length criterion suffices for the interval
/// isomorphism.
inline std::vector<std::pair<Permutation, Embedding>> interval_embeddings(
    const IntervalPattern& pat, const Permutation& w) {
  std::vector<std::pair<Permutation, Embedding>> out;
  if (pat.size() > w.size()) return out;
  const int lw = length(w), ldiff = length(pat.v) - length(pat.x);
  for (const Embedding& z : embeddings(pat.v, w)) {
    const int m = static_cast<int>(z.size());
    std::vector<int> vals(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) vals[static_cast<size_t>(t)] = w(z[static_cast<size_t>(t)]);
    std::sort(vals.begin(), vals.end());
    std::vector<int> word = w.word();
    for (int t = 0; t < m; ++t)
      word[static_cast<size_t>(z[static_cast<size_t>(t)] - 1)] =
          vals[static_cast<size_t>(pat.x(t + 1) - 1)];
    Permutation u(std::move(word));
    if (lw - length(u) == ldiff) out.emplace_back(std::move(u), z);
  }
  return out;
}

inline bool interval_avoids(const Permutation& w, const IntervalPattern& pat) {
  return interval_embeddings(pat, w).empty();
}

}  // namespace klatlas
