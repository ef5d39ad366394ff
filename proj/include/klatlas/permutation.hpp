#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klatlas {

/// A permutation of {1..n} in one-line notation.  Positions and values are
/// 1-based throughout; the word itself is the canonical form.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : word_) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("word is not a permutation of 1..n");
      seen[static_cast<size_t>(v - 1)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }

  /// w(i), 1-based.
  int operator()(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("position out of range");
    return word_[static_cast<size_t>(i - 1)];
  }

  const std::vector<int>& word() const { return word_; }

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator!=(const Permutation& o) const { return word_ != o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(word_[i]);
    }
    return s;
  }

private:
  std::vector<int> word_;
};

inline int apply(const Permutation& w, int i) { return w(i); }

/// (a o b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(static_cast<size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) w[static_cast<size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> inv(static_cast<size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) inv[static_cast<size_t>(w(i) - 1)] = i;
  return Permutation(std::move(inv));
}

/// Coxeter length = number of inversions.
inline int length(const Permutation& w) {
  int n = w.size(), inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

/// Number of graph points (i, w(i)) weakly south-west of (p, q).
inline int rank(const Permutation& w, int p, int q) {
  if (p < 1 || p > w.size() || q < 1 || q > w.size())
    throw std::out_of_range("rank: position out of range");
  int r = 0;
  for (int i = 1; i <= p; ++i)
    if (w(i) <= q) ++r;
  return r;
}

/// Full table of r_w(p, q), row-major, 1-based accessor.
class RankMatrix {
public:
  explicit RankMatrix(const Permutation& w) : n_(w.size()), v_(static_cast<size_t>(n_ * n_)) {
    // r(p,q) = r(p-1,q) + [w(p) <= q]
    for (int p = 1; p <= n_; ++p)
      for (int q = 1; q <= n_; ++q)
        v_[idx(p, q)] = (p > 1 ? v_[idx(p - 1, q)] : 0) + (w(p) <= q ? 1 : 0);
  }
  int n() const { return n_; }
  int operator()(int p, int q) const { return v_[idx(p, q)]; }

private:
  size_t idx(int p, int q) const { return static_cast<size_t>((p - 1) * n_ + (q - 1)); }
  int n_;
  std::vector<int> v_;
};

/// Bruhat order: u <= w iff r_u(p,q) >= r_w(p,q) for all p, q.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = u.size();
  // running rank rows keep this O(n^2)
  std::vector<int> ru(static_cast<size_t>(n + 1), 0), rw(static_cast<size_t>(n + 1), 0);
  for (int p = 1; p <= n; ++p) {
    for (int q = u(p); q <= n; ++q) ++ru[static_cast<size_t>(q)];
    for (int q = w(p); q <= n; ++q) ++rw[static_cast<size_t>(q)];
    for (int q = 1; q <= n; ++q)
      if (ru[static_cast<size_t>(q)] < rw[static_cast<size_t>(q)]) return false;
  }
  return true;
}

/// Descent positions {i : w(i) > w(i+1)}.
inline std::vector<int> descents(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

/// Longest element of the parabolic subgroup generated by {s_i : i in gens}:
/// reverses each maximal consecutive run of generator indices.
inline Permutation longest_in_parabolic(int n, const std::set<int>& gens) {
  for (int g : gens)
    if (g < 1 || g >= n) throw std::invalid_argument("generator index out of range");
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  int i = 1;
  while (i < n) {
    if (!gens.count(i)) { ++i; continue; }
    int j = i;
    while (j < n && gens.count(j)) ++j;
    // run i..j-1 of generators: reverse positions i..j
    std::reverse(w.begin() + (i - 1), w.begin() + j);
    i = j + 1;
  }
  return Permutation(std::move(w));
}

struct CoessEntry {
  int p = 0;
  int q = 0;
  int r = 0;
  bool inclusion = false;  // r == min(p, q)
  bool operator==(const CoessEntry&) const = default;
};

/// Fulton's coessential set: all (p,q) with w(p) <= q < w(p+1) and
/// w^{-1}(q) <= p < w^{-1}(q+1), sorted by (p, q).  For covexillary w this
/// ordering is the componentwise total order.
inline std::vector<CoessEntry> coessential_set(const Permutation& w) {
  const int n = w.size();
  Permutation wi = inverse(w);
  std::vector<CoessEntry> out;
  for (int p = 1; p < n; ++p)
    for (int q = 1; q < n; ++q) {
      if (!(w(p) <= q && q < w(p + 1))) continue;
      if (!(wi(q) <= p && p < wi(q + 1))) continue;
      CoessEntry e;
      e.p = p;
      e.q = q;
      e.r = rank(w, p, q);
      e.inclusion = (e.r == std::min(p, q));
      out.push_back(e);
    }
  return out;  // already (p, q)-lexicographic by construction
}

/// {z : z <= w}, by breadth-first closure under inversion swaps (each swap of
/// an inversion pair is a length-decreasing transposition move).
inline std::set<Permutation> down_set(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::vector<Permutation> stack{w};
  const int n = w.size();
  while (!stack.empty()) {
    Permutation z = std::move(stack.back());
    stack.pop_back();
    std::vector<int> word = z.word();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (word[static_cast<size_t>(i)] <= word[static_cast<size_t>(j)]) continue;
        std::swap(word[static_cast<size_t>(i)], word[static_cast<size_t>(j)]);
        Permutation next(word);
        std::swap(word[static_cast<size_t>(i)], word[static_cast<size_t>(j)]);
        if (seen.insert(next).second) stack.push_back(next);
      }
  }
  return seen;
}

/// All permutations of {1..n} in lexicographic word order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Permutation literal: comma-separated one-line notation, or a compact digit
/// string when n <= 9.
inline Permutation parse_permutation(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty permutation literal");
  std::vector<int> word;
  if (s.find(',') == std::string::npos && s.size() <= 9 && s.size() > 1) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < '1' || s[i] > '9')
        throw std::invalid_argument("bad character at position " + std::to_string(i + 1) +
                                    " in compact literal '" + s + "'");
      word.push_back(s[i] - '0');
    }
  } else {
    size_t pos = 0;
    while (pos < s.size()) {
      size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size();
      const std::string tok = s.substr(pos, end - pos);
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing junk");
        word.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad entry at position " + std::to_string(pos + 1) +
                                    " in literal '" + s + "'");
      }
      pos = end + 1;
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("literal '" + s + "' is not a permutation of 1..n");
  }
}

}  // namespace klatlas

template <>
struct std::hash<klatlas::Permutation> {
  size_t operator()(const klatlas::Permutation& w) const {
    size_t h = 1469598103934665603ull;
    for (int v : w.word()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
