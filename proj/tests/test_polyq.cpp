#include <catch2/catch_amalgamated.hpp>

#include "klatlas/polyq.hpp"

using namespace klatlas;

TEST_CASE("construction and normalization") {
  CHECK(PolyQ().is_zero());
  CHECK(PolyQ(0).is_zero());
  CHECK(PolyQ::from_coeffs({0, 0, 0}).is_zero());
  CHECK(PolyQ::from_coeffs({1, 2, 0}) == PolyQ::from_coeffs({1, 2}));
  CHECK(PolyQ(5).coefficient(0) == 5);
  CHECK(PolyQ().degree() == -1);
  CHECK(PolyQ::q_power(3).degree() == 3);
  CHECK_THROWS_AS(PolyQ::q_power(-1), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  const PolyQ a = PolyQ::from_coeffs({1, 1});      // 1 + q
  const PolyQ b = PolyQ::from_coeffs({0, 2, 3});   // 2q + 3q^2
  CHECK(add(a, b) == PolyQ::from_coeffs({1, 3, 3}));
  CHECK(sub(a, a).is_zero());
  CHECK(sub(a, b) == PolyQ::from_coeffs({1, -1, -3}));
  CHECK(shift(a, 2) == PolyQ::from_coeffs({0, 0, 1, 1}));
  CHECK(shift(PolyQ(), 3).is_zero());
  CHECK_THROWS_AS(shift(a, -1), std::invalid_argument);
  CHECK(scale(a, 3) == PolyQ::from_coeffs({3, 3}));
  CHECK(scale(a, 0).is_zero());
  CHECK(mul(a, b) == PolyQ::from_coeffs({0, 2, 5, 3}));
  CHECK(mul(a, PolyQ()).is_zero());
  CHECK(a.eval_at_one() == 2);
  CHECK(b.eval_at_one() == 5);
}

TEST_CASE("arithmetic laws on sample values") {
  const PolyQ p = PolyQ::from_coeffs({1, 0, 2}), q = PolyQ::from_coeffs({0, 1}),
              r = PolyQ::from_coeffs({3, -1});
  CHECK(add(p, q) == add(q, p));
  CHECK(mul(p, q) == mul(q, p));
  CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
  CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
  CHECK(mul(p, PolyQ::q_power(4)) == shift(p, 4));
}

TEST_CASE("unimodality prefix predicate (diagnostic reading)") {
  CHECK(PolyQ::one().is_unimodal_symmetric_prefix());
  CHECK(PolyQ::from_coeffs({1, 2, 3, 2, 1}).is_unimodal_symmetric_prefix());
  CHECK(PolyQ::from_coeffs({1, 2, 2, 3}).is_unimodal_symmetric_prefix());
  CHECK_FALSE(PolyQ::from_coeffs({1, 0, 0, 1}).is_unimodal_symmetric_prefix());
  CHECK_FALSE(PolyQ::from_coeffs({1, 2, 1, 2}).is_unimodal_symmetric_prefix());
}

TEST_CASE("string form") {
  CHECK(PolyQ().str() == "0");
  CHECK(PolyQ::one().str() == "1");
  CHECK(add(PolyQ::one(), PolyQ::q_power(1)).str() == "1 + q");
  CHECK(PolyQ::from_coeffs({1, 1, 0, 2}).str() == "1 + q + 2*q^3");
  CHECK(PolyQ::from_coeffs({-1, 0, -2}).str() == "-1 - 2*q^2");
  CHECK(PolyQ::from_coeffs({0, 1}).str() == "q");
}
