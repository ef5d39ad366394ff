#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klatlas/kl_table.hpp"
#include "klatlas/pattern_data.hpp"
#include "klatlas/patterns.hpp"
#include "klatlas/permutation.hpp"

namespace klatlas {

enum class ComponentKind { I, IIA, IIB };

inline std::string kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::I: return "I";
    case ComponentKind::IIA: return "IIA";
    case ComponentKind::IIB: return "IIB";
  }
  return "?";
}

/// The interval [x, v] from the singular-locus interval families.
/// Segment notation "j...i" descends; it is empty when j < i.
inline IntervalPattern family_interval(ComponentKind kind, int y, int z) {
  auto seg = [](std::vector<int>& out, int from, int to) {  // from, from-1, ..., to
    for (int t = from; t >= to; --t) out.push_back(t);
  };
  std::vector<int> x, v;
  switch (kind) {
    case ComponentKind::I:
      if (y < 1 || z < 1) throw std::invalid_argument("family I needs y, z > 0");
      seg(x, y + 1, 1);
      seg(x, y + z + 2, y + 2);
      v.push_back(y + z + 2);
      seg(v, y + 1, 2);
      seg(v, y + z + 1, y + 2);
      v.push_back(1);
      break;
    case ComponentKind::IIA:
      if (y < 0 || z < 0) throw std::invalid_argument("family IIA needs y, z >= 0");
      seg(x, y + 1, 1);
      x.push_back(y + 3);
      x.push_back(y + 2);
      seg(x, y + z + 4, y + 4);
      v.push_back(y + 3);
      seg(v, y + 1, 2);
      v.push_back(y + z + 4);
      v.push_back(1);
      seg(v, y + z + 3, y + 4);
      v.push_back(y + 2);
      break;
    case ComponentKind::IIB:
      if (y < 1) throw std::invalid_argument("family IIB needs y >= 1");
      x.push_back(1);
      seg(x, y + 3, 2);
      x.push_back(y + 4);
      v.push_back(y + 3);
      v.push_back(y + 4);
      seg(v, y + 2, 3);
      v.push_back(1);
      v.push_back(2);
      break;
  }
  return IntervalPattern(Permutation(std::move(x)), Permutation(std::move(v)));
}

/// A 3412 embedding i<j<k<m whose four critical regions hold no graph point.
struct Critical3412 {
  int i = 0, j = 0, k = 0, m = 0;
  bool operator==(const Critical3412&) const = default;
};

struct RegionData {
  std::vector<int> A1, A2, B;
};

inline bool critical_regions_empty(const Permutation& w, int i, int j, int k, int m) {
  const int wi = w(i), wj = w(j), wk = w(k), wm = w(m);
  for (int p = i + 1; p < j; ++p)
    if (wm < w(p) && w(p) < wi) return false;
  for (int p = j + 1; p < k; ++p) {
    if (wi < w(p) && w(p) < wj) return false;
    if (wk < w(p) && w(p) < wm) return false;
  }
  for (int p = k + 1; p < m; ++p)
    if (wm < w(p) && w(p) < wi) return false;
  return true;
}

inline std::vector<Critical3412> critical_3412_embeddings(const Permutation& w) {
  std::vector<Critical3412> out;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) <= w(i)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (w(k) >= w(i)) continue;
        for (int m = k + 1; m <= n; ++m) {
          if (!(w(k) < w(m) && w(m) < w(i))) continue;
          if (critical_regions_empty(w, i, j, k, m)) out.push_back({i, j, k, m});
        }
      }
    }
  return out;
}

inline RegionData regions(const Critical3412& c, const Permutation& w) {
  RegionData r;
  for (int p = c.i + 1; p < c.j; ++p)
    if (w(c.k) < w(p) && w(p) < w(c.m)) r.A1.push_back(p);
  for (int p = c.k + 1; p < c.m; ++p)
    if (w(c.i) < w(p) && w(p) < w(c.j)) r.A2.push_back(p);
  for (int p = c.j + 1; p < c.k; ++p)
    if (w(c.m) < w(p) && w(p) < w(c.i)) r.B.push_back(p);
  return r;
}

/// Reduced: the values over B strictly decrease (vacuous for empty B).
inline bool is_reduced(const Critical3412& c, const Permutation& w) {
  const RegionData r = regions(c, w);
  for (size_t t = 1; t < r.B.size(); ++t)
    if (w(r.B[t - 1]) < w(r.B[t])) return false;
  return true;
}

/// One witnessing interval embedding for a singular-locus component.
struct ComponentWitness {
  ComponentKind kind;
  int y = 0, z = 0;
  Embedding indices;  // the full interval embedding i < j_1..j_y < k_1..k_z < m, or the 3412
};

struct Component {
  Permutation u;
  ComponentKind kind;
  std::vector<ComponentWitness> witnesses;
};

/// The distinguished 4 indices inside a witness: the 3412 embedding for type
/// II witnesses, and the 4231 embedding (i, j_y, k_1, m) for type I.
inline Embedding witness_core(const ComponentWitness& wit) {
  const Embedding& Z = wit.indices;
  auto at = [&](int pos) { return Z[static_cast<size_t>(pos - 1)]; };
  switch (wit.kind) {
    case ComponentKind::I:
      return {at(1), at(wit.y + 1), at(wit.y + 2), at(wit.y + wit.z + 2)};
    case ComponentKind::IIA:
      return {at(1), at(wit.y + 2), at(wit.y + 3), at(wit.y + wit.z + 4)};
    case ComponentKind::IIB:
      return {at(1), at(2), at(wit.y + 3), at(wit.y + 4)};
  }
  throw std::logic_error("unreachable");
}

/// Irreducible components of the combinatorial singular locus: one per label
/// u arising from an interval-family embedding, witnesses accumulated.
inline std::vector<Component> singular_components(const Permutation& w) {
  const int n = w.size();
  std::map<Permutation, Component> by_label;
  auto add = [&](ComponentKind kind, int y, int z) {
    const IntervalPattern pat = family_interval(kind, y, z);
    if (pat.size() > n) return;
    for (auto& [u, emb] : interval_embeddings(pat, w)) {
      auto it = by_label.find(u);
      if (it == by_label.end())
        it = by_label.emplace(u, Component{u, kind, {}}).first;
      it->second.witnesses.push_back({kind, y, z, emb});
    }
  };
  for (int y = 1; y + 3 <= n; ++y)
    for (int z = 1; y + z + 2 <= n; ++z) add(ComponentKind::I, y, z);
  for (int y = 0; y + 4 <= n; ++y)
    for (int z = 0; y + z + 4 <= n; ++z) add(ComponentKind::IIA, y, z);
  for (int y = 1; y + 4 <= n; ++y) add(ComponentKind::IIB, y, 0);
  std::vector<Component> out;
  for (auto& [u, comp] : by_label) out.push_back(std::move(comp));
  return out;
}

/// Maximal singular locus: the component labels.
inline std::set<Permutation> ms(const Permutation& w) {
  std::set<Permutation> out;
  for (const Component& c : singular_components(w)) out.insert(c.u);
  return out;
}

inline bool singular_at(const Permutation& w, const Permutation& u) {
  if (u.size() != w.size()) throw std::invalid_argument("singular_at: size mismatch");
  for (const Permutation& v : ms(w))
    if (bruhat_leq(u, v)) return true;
  return false;
}

/// 4231/3412 occurrences of w that are not the dotted part of any embedding
/// of the 13 dotted patterns.
inline std::vector<Embedding> dotted_filter_occurrences(const Permutation& w) {
  static const Permutation p4231 = parse_permutation("4231");
  static const Permutation p3412 = parse_permutation("3412");
  std::set<Embedding> occ;
  for (const Embedding& z : embeddings(p4231, w)) occ.insert(z);
  for (const Embedding& z : embeddings(p3412, w)) occ.insert(z);
  std::set<Embedding> killed;
  for (const DottedPattern& d : dotted_patterns()) {
    for (const Embedding& zp : embeddings(d.word, w)) {
      Embedding part;
      for (int pos : d.dotted) part.push_back(zp[static_cast<size_t>(pos - 1)]);
      killed.insert(std::move(part));
    }
  }
  std::vector<Embedding> out;
  for (const Embedding& z : occ)
    if (!killed.count(z)) out.push_back(z);
  return out;
}

/// Deodhar-criterion oracle: Bruhat-maximal u <= w with P_{u,w} != 1.
inline std::set<Permutation> ms_oracle_via_kl(const Permutation& w, KLTable& table) {
  if (w.size() != table.n()) throw std::invalid_argument("ms_oracle_via_kl: size mismatch");
  const KLTable::Id wi = table.id_of_perm(w);
  std::vector<KLTable::Id> sing;
  for (const auto& [u, p] : table.nontrivial_column(wi)) {
    (void)p;
    sing.push_back(u);
  }
  // longest first, keep those not below an already-kept label
  std::sort(sing.begin(), sing.end(), [&](KLTable::Id a, KLTable::Id b) {
    return table.length_of(a) > table.length_of(b);
  });
  std::vector<KLTable::Id> maximal;
  for (KLTable::Id u : sing) {
    bool dominated = false;
    for (KLTable::Id m : maximal)
      if (table.leq_ids(u, m)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(u);
  }
  std::set<Permutation> out;
  for (KLTable::Id u : maximal) out.insert(table.perm_of_id(u));
  return out;
}

}  // namespace klatlas
