#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "dgf/coeff_poly.hpp"
#include "support/reference.hpp"

using dgf::BigInt;
using dgf::CoeffMode;
using dgf::CoeffPoly;
using dgf::Term;

namespace {

const CoeffPoly w = CoeffPoly::w();
const CoeffPoly u = CoeffPoly::u();

CoeffPoly pw(long c, unsigned we, unsigned ue = 0) { return CoeffPoly::monomial(c, we, ue); }

}  // namespace

TEST_CASE("from_terms normalizes") {
  auto p = CoeffPoly::from_terms({Term{2, 0, 3}, Term{0, 1, 1}, Term{2, 0, -3}, Term{0, 0, 0}, Term{0, 1, 4}});
  REQUIRE(p.size() == 1);
  CHECK(p.coeff(0, 1) == 5);
  CHECK(p.coeff(2, 0) == 0);
  CHECK(CoeffPoly::from_terms({}).is_zero());
}

TEST_CASE("poly_add") {
  CHECK(poly_add(1 + w, 1 + w) == 2 + 2 * w);
  CHECK(poly_add(w, -w).is_zero());
  CHECK(poly_add(w, -w).terms().empty());
  CHECK(poly_add(u * u + 2 * w * u, 1) == 1 + 2 * w * u + u * u);
  CHECK(to_string(poly_add(u * u + 2 * w * u, 1)) == "1 + u^2 + 2*w*u");
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(1 + w, 1 + w) == 1 + 2 * w + w * w);
  CHECK(poly_mul(u - 1, u + 1) == u * u - 1);
  CHECK(poly_mul(0, 3 + w * u).is_zero());
  CHECK(poly_mul(BigInt(5), w) == 5 * w);
}

TEST_CASE("one_plus_w_pow") {
  CHECK(dgf::one_plus_w_pow(0) == CoeffPoly(1));
  CHECK(dgf::one_plus_w_pow(2) == 1 + 2 * w + w * w);
  CHECK(to_string(dgf::one_plus_w_pow(6)) == "1 + 6*w + 15*w^2 + 20*w^3 + 15*w^4 + 6*w^5 + w^6");
  for (unsigned k : {6u, 13u, 40u}) CHECK(ref::same(ref::one_plus_w_pow(k), dgf::one_plus_w_pow(k)));

  SUBCASE("exponent law for all 0 <= a, b <= 50") {
    for (unsigned a = 0; a <= 50; ++a)
      for (unsigned b = 0; b <= 50; ++b)
        REQUIRE(dgf::one_plus_w_pow(a + b) == dgf::one_plus_w_pow(a) * dgf::one_plus_w_pow(b));
  }

  SUBCASE("concurrent first use") {
    std::vector<std::thread> pool;
    std::vector<CoeffPoly> got(8);
    for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = dgf::one_plus_w_pow(300 + i % 2); });
    for (auto& t : pool) t.join();
    for (int i = 0; i < 8; ++i) CHECK(got[i] == dgf::one_plus_w_pow(300 + i % 2));
  }
}

TEST_CASE("poly_subst_u") {
  CHECK(poly_subst_u(u * u, -1) == u * u - 2 * u + 1);
  CHECK(poly_subst_u(u * u + 2 * w * u, 1) == u * u + 2 * u + 1 + 2 * w * u + 2 * w);
  CHECK(poly_subst_u(w, -1) == w);
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(1 + 2 * w, 1, 1) == 3);
  CHECK(poly_eval(2 * pw(1, 3) + 9 * pw(1, 4) + 6 * pw(1, 5) + pw(1, 6), 1, 1) == 18);
  CHECK(poly_eval(CoeffPoly{}, 7, -3) == 0);
  CHECK(poly_eval(w * w * u - 3, -2, 5) == 17);
  CHECK(poly_eval_u(u * u + 2 * w * u, 0) == CoeffPoly{});
  CHECK(poly_eval_u(u * u + 2 * w * u, 1) == 1 + 2 * w);
}

TEST_CASE("rendering") {
  CHECK(to_string(1 + 2 * w + w * w) == "1 + 2*w + w^2");
  CHECK(to_string(u * u + 2 * w * u) == "u^2 + 2*w*u");
  CHECK(to_string(CoeffPoly{}) == "0");
  CHECK(to_string(1 - w) == "1 - w");
  CHECK(to_string(-w - 3 * w * w * u) == "-w - 3*w^2*u");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20241017);
  for (int trial = 0; trial < 300; ++trial) {
    const CoeffPoly a = ref::random_poly(rng), b = ref::random_poly(rng), c = ref::random_poly(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == CoeffPoly{});
  }
}

TEST_CASE("u-substitution roundtrip and evaluation homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> point(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const CoeffPoly a = ref::random_poly(rng), b = ref::random_poly(rng);
    REQUIRE(poly_subst_u(poly_subst_u(a, 1), -1) == a);
    REQUIRE(poly_subst_u(poly_subst_u(a, 3), -3) == a);
    const BigInt x = point(rng), y = point(rng);
    REQUIRE(poly_eval(a + b, x, y) == poly_eval(a, x, y) + poly_eval(b, x, y));
    REQUIRE(poly_eval(a * b, x, y) == poly_eval(a, x, y) * poly_eval(b, x, y));
    REQUIRE(poly_eval(poly_subst_u(a, 2), x, y) == poly_eval(a, x, y + 2));
  }
}

TEST_CASE("CoeffMode") {
  const auto poly = CoeffMode::polynomial();
  const auto num = CoeffMode::numeric(2, -1);
  CHECK(poly.lift(1 + w * u) == 1 + w * u);
  CHECK(num.lift(1 + w * u) == CoeffPoly(-1));
  CHECK(num.shift_factor(3) == CoeffPoly(27));
  CHECK(poly.shift_factor(2) == 1 + 2 * w + w * w);

  CoeffPoly x = 5;
  CoeffMode::numeric(1, 1).apply_shift(x, 10);
  CHECK(x == CoeffPoly(5 * 1024));
  BigInt v = 2;
  num.apply_shift(v, 2);
  CHECK(v == 18);
  CHECK(!(poly == num));
  CHECK(CoeffMode::numeric(1, 0) == CoeffMode::numeric(1, 0));
}
