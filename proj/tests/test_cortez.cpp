#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <tuple>

#include "klatlas/cortez.hpp"
#include "klatlas/singular_locus.hpp"

using namespace klatlas;

TEST_CASE("covexillary predicate") {
  CHECK(is_covexillary(parse_permutation("4231")));
  CHECK(is_covexillary(Permutation::identity(4)));
  CHECK_FALSE(is_covexillary(parse_permutation("3412")));
  CHECK_FALSE(is_covexillary(parse_permutation("45312")));
}

TEST_CASE("distinguished 3412 embedding on the base case") {
  const auto e = min_3412_embedding(parse_permutation("3412"));
  REQUIRE(e.has_value());
  CHECK(e->a == 1);
  CHECK(e->b == 2);
  CHECK(e->c == 3);
  CHECK(e->d == 4);
  CHECK(e->alpha == 3);
  CHECK(e->beta == 4);
  CHECK(e->gamma == 1);
  CHECK(e->delta == 2);
  CHECK(e->height == 1);
  CHECK(e->amplitude == 3);
  CHECK_FALSE(min_3412_embedding(parse_permutation("4231")).has_value());
  CHECK(min_height(parse_permutation("4231")) == 1);
}

TEST_CASE("distinguished embedding agrees with a brute-force oracle over S6") {
  for (const Permutation& w : all_permutations(6)) {
    std::optional<std::tuple<int, int, int, int, int, int>> best;
    const int n = w.size();
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            if (!(w(c) < w(d) && w(d) < w(a) && w(a) < w(b))) continue;
            const std::tuple<int, int, int, int, int, int> key(
                w(a) - w(d), w(b) - w(c), a, b, c, d);
            if (!best || key < *best) best = key;
          }
    const auto e = min_3412_embedding(w);
    CHECK(e.has_value() == best.has_value());
    if (e && best) {
      CHECK(std::tuple(e->height, e->amplitude, e->a, e->b, e->c, e->d) == *best);
      CHECK(min_height(w) == std::get<0>(*best));
    }
  }
}

TEST_CASE("cortez_data on 3412") {
  const CortezData t = cortez_data(parse_permutation("3412"));
  CHECK(t.alpha_prime == 3);
  CHECK(t.delta_prime == 2);
  CHECK(t.kappa == 2);
  CHECK(t.I == std::set<int>{2});
  CHECK(t.J.empty());
  CHECK(t.v == parse_permutation("2413"));
  CHECK(t.sigma == parse_permutation("3214"));
  CHECK(t.u == parse_permutation("1432"));
  CHECK(t.M == 1);
  CHECK(t.N == 3);
  CHECK_THROWS_AS(cortez_data(parse_permutation("4231")), std::invalid_argument);
}

TEST_CASE("cortez_data on the nine-letter worked example") {
  const Permutation w = parse_permutation("817396254");
  const CortezData t = cortez_data(w);
  CHECK(t.emb.a == 3);
  CHECK(t.emb.b == 5);
  CHECK(t.emb.c == 7);
  CHECK(t.emb.d == 8);
  CHECK(t.emb.alpha == 7);
  CHECK(t.emb.beta == 9);
  CHECK(t.emb.gamma == 2);
  CHECK(t.emb.delta == 5);
  CHECK(t.emb.height == 2);
  CHECK(t.alpha_prime == 8);
  CHECK(t.delta_prime == 4);
  CHECK(t.kappa == 5);
  CHECK(t.I == std::set<int>{4, 5, 6, 7});
  CHECK(t.J == std::set<int>{4, 6, 7});
  CHECK(t.v == parse_permutation("514398276"));
  CHECK(t.sigma == parse_permutation("173452689"));
  CHECK(t.u == parse_permutation("816392754"));
  CHECK(t.M == 4);
  CHECK(t.N == 7);
  CHECK(length(w) == 21);
  CHECK(length(t.u) == 19);
  CHECK(length(t.v) == 15);
}

TEST_CASE("sigma drops the length by the embedding height") {
  // the length drop needs the one-component hypotheses: height above one and
  // no 526413 occurrence
  static const Permutation p526413 = parse_permutation("526413");
  size_t applicable = 0;
  for (const Permutation& w : all_permutations(6)) {
    if (is_covexillary(w)) continue;
    const CortezData t = cortez_data(w);
    if (t.emb.height <= 1 || contains(w, p526413) || ms(w).size() != 1) continue;
    ++applicable;
    CHECK(length(t.u) == length(w) - t.emb.height);
    CHECK(bruhat_leq(t.u, w));
  }
  CHECK(applicable > 0);
}

TEST_CASE("one-component emptiness report") {
  CHECK(check_onecompempty(parse_permutation("2574136")).empty());
  CHECK(check_onecompempty(parse_permutation("3412")).empty());
  // a single singular component forces all twelve regions empty (S6 sweep);
  // the converse is false, but the check must not be vacuous
  size_t nonempty_seen = 0;
  for (const Permutation& w : all_permutations(6)) {
    if (is_covexillary(w)) continue;
    if (ms(w).size() == 1)
      CHECK(check_onecompempty(w).empty());
    else if (!check_onecompempty(w).empty())
      ++nonempty_seen;
  }
  CHECK(nonempty_seen > 0);
}

TEST_CASE("M and N reports") {
  const MNReport r = check_MNempty(parse_permutation("817396254"));
  CHECK(r.M == 4);
  CHECK(r.N == 7);
  CHECK(r.ok());
  // bounds hold whenever the singular locus has one component (S6 sweep)
  for (const Permutation& w : all_permutations(6)) {
    if (is_covexillary(w)) continue;
    if (ms(w).size() != 1) continue;
    CHECK(check_MNempty(w).ok());
  }
}

TEST_CASE("covexillary coessential report") {
  CHECK_THROWS_AS(covex_report(parse_permutation("3412")), std::invalid_argument);
  const CovexReport r = covex_report(parse_permutation("4231"));
  CHECK(r.totally_ordered);
  REQUIRE(r.non_inclusion_indices.size() == 1);
  const CoessEntry& e = r.entries[static_cast<size_t>(r.non_inclusion_indices[0])];
  CHECK(e.p == 2);
  CHECK(e.q == 2);
  CHECK(e.r == 1);
  // identity: four diagonal inclusion entries, none of them non-inclusions
  const CovexReport rid = covex_report(Permutation::identity(5));
  CHECK(rid.entries.size() == 4);
  CHECK(rid.non_inclusion_indices.empty());
  // coessential sets of covexillary permutations are always totally ordered
  for (const Permutation& w : all_permutations(6))
    if (is_covexillary(w)) CHECK(covex_report(w).totally_ordered);
}

TEST_CASE("exceptional region matches the rank-matrix difference") {
  CHECK_THROWS_AS(exceptional_R_region(parse_permutation("4231")), std::invalid_argument);
  CHECK_THROWS_AS(exceptional_R_region(parse_permutation("3412")), std::invalid_argument);
  for (const char* s : {"817396254", "1267534", "2574136"}) {
    const Permutation w = parse_permutation(s);
    const CortezData t = cortez_data(w);
    if (t.emb.height <= 1) continue;
    const auto cells = exceptional_R_region(w);
    const RankMatrix rw(w), ru(t.u);
    std::vector<std::pair<int, int>> diff;
    for (int p = 1; p <= w.size(); ++p)
      for (int q = 1; q <= w.size(); ++q) {
        const int d = ru(p, q) - rw(p, q);
        CHECK((d == 0 || d == 1));
        if (d == 1) diff.emplace_back(p, q);
      }
    CHECK(cells == diff);
  }
}

TEST_CASE("exceptional region over S6, all heights above one") {
  for (const Permutation& w : all_permutations(6)) {
    if (is_covexillary(w)) continue;
    const CortezData t = cortez_data(w);
    if (t.emb.height <= 1) continue;
    const auto cells = exceptional_R_region(w);
    const RankMatrix rw(w), ru(t.u);
    std::vector<std::pair<int, int>> diff;
    for (int p = 1; p <= 6; ++p)
      for (int q = 1; q <= 6; ++q)
        if (ru(p, q) != rw(p, q)) diff.emplace_back(p, q);
    CHECK(cells == diff);
  }
}

TEST_CASE("rank formula for v holds over S6") {
  CHECK(check_rv_formula(parse_permutation("817396254")).empty());
  for (const Permutation& w : all_permutations(6)) {
    if (is_covexillary(w)) continue;
    CHECK(check_rv_formula(w).empty());
  }
}
