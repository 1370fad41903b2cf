#include <random>

#include "doctest.h"
#include "sgo/base_rings.hpp"
#include "sgo/error.hpp"

using namespace sgo;

namespace {

const RingKind ZI = RingKind::GaussianIntegers;
const RingKind Z = RingKind::RationalIntegers;

MaximalIdeal place(RingKind r, const char* g) { return parse_place(r, g); }

// Brute-force search for Gaussian integers of a given norm.
bool has_element_of_norm(Int n) {
  for (Int a = 0; a * a <= n; ++a)
    for (Int b = 0; a * a + b * b <= n; ++b)
      if (a * a + b * b == n) return true;
  return false;
}

}  // namespace

TEST_CASE("Gaussian integer parsing and printing") {
  CHECK(parse_gaussian("1+2i") == Gaussian{1, 2});
  CHECK(parse_gaussian("1-2i") == Gaussian{1, -2});
  CHECK(parse_gaussian("-i") == Gaussian{0, -1});
  CHECK(parse_gaussian("i") == Gaussian{0, 1});
  CHECK(parse_gaussian("-3") == Gaussian{-3, 0});
  CHECK(parse_gaussian(" 2 + 3i ") == Gaussian{2, 3});
  CHECK(to_string(Gaussian{1, -2}) == "1-2i");
  CHECK(to_string(Gaussian{0, -1}) == "-i");
  CHECK(to_string(Gaussian{5, 0}) == "5");
  CHECK_THROWS_AS(parse_gaussian("1+x"), InvalidArgument);
  CHECK(to_string(parse_gaussian_rational("(1+2i)/5")) == "(1+2i)/5");
  CHECK(parse_gaussian_rational("1/(1-2i)") == GaussianRational(Gaussian{1, 2}, Gaussian{5}));
}

TEST_CASE("first-quadrant normalization") {
  CHECK(normalize_first_quadrant({1, -2}) == Gaussian{2, 1});
  CHECK(normalize_first_quadrant({-1, -2}) == Gaussian{1, 2});
  CHECK(normalize_first_quadrant({0, 7}) == Gaussian{7, 0});
}

TEST_CASE("factor_rational_prime") {
  SUBCASE("5 splits in Z[i] as (1+2i)(1-2i)") {
    const auto f = factor_rational_prime(ZI, 5);
    REQUIRE(f.size() == 2);
    CHECK(f[0].second == 1);
    CHECK(f[1].second == 1);
    CHECK(f[0].first == place(ZI, "1+2i"));
    CHECK(f[1].first == place(ZI, "1-2i"));
    CHECK(f[0].first.label() == "(1+2i)");
    CHECK(f[1].first.label() == "(1-2i)");
    CHECK(f[0].first.residue_field_size == 5);
  }
  SUBCASE("primes stay prime in Z") {
    const auto f = factor_rational_prime(Z, 5);
    REQUIRE(f.size() == 1);
    CHECK(f[0].first.generator == Gaussian{5});
    CHECK(f[0].second == 1);
  }
  SUBCASE("2 ramifies in Z[i]") {
    const auto f = factor_rational_prime(ZI, 2);
    REQUIRE(f.size() == 1);
    CHECK(f[0].second == 2);
    const Gaussian pi = f[0].first.generator;
    // (1+i)^2 = 2i, a unit multiple of 2.
    const Gaussian sq = pi * pi;
    CHECK(sq.norm() == 4);
    CHECK(exact_divide(sq, Gaussian{2}).value().is_unit());
  }
  SUBCASE("7 is inert in Z[i]") {
    CHECK_FALSE(has_element_of_norm(7));
    const auto f = factor_rational_prime(ZI, 7);
    REQUIRE(f.size() == 1);
    CHECK(f[0].first.generator == Gaussian{7});
    CHECK(f[0].first.residue_field_size == 49);
  }
  CHECK_THROWS_AS(factor_rational_prime(ZI, 6), InvalidArgument);
}

TEST_CASE("factorization invariants over small primes") {
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    for (RingKind r : {Z, ZI}) {
      const auto f = factor_rational_prime(r, p);
      // Product of generators^e equals p up to a unit.
      Gaussian prod{1};
      Int size_product = 1;
      for (const auto& [m, e] : f) {
        for (int k = 0; k < e; ++k) prod = prod * m.generator;
        Int s = 1;
        for (int k = 0; k < e; ++k) s *= m.residue_field_size;
        size_product *= s;
        CHECK(valuation(Gaussian{p}, m) == e);
      }
      CHECK(exact_divide(prod, Gaussian{p}).value().is_unit());
      // Norms: prod N(m)^e = p^[K:Q].
      CHECK(size_product == (r == Z ? p : p * p));
    }
  }
}

TEST_CASE("valuation") {
  const auto p = place(ZI, "1+2i");
  CHECK(valuation(Gaussian{5}, p) == 1);
  CHECK(valuation(Gaussian{1}, p) == 0);
  CHECK(valuation(Gaussian{10}, place(ZI, "1+i")) == 2);
  CHECK(FractionalIdeal(ZI).valuation(p) == 0);
  CHECK(valuation(GaussianRational(Gaussian{1}, Gaussian{25}), p) == -2);
}

TEST_CASE("valuation is a homomorphism on random ideal pairs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> coef(-30, 30);
  const std::vector<MaximalIdeal> places = {place(ZI, "1+i"), place(ZI, "1+2i"), place(ZI, "1-2i"),
                                            place(ZI, "3"), place(ZI, "2+3i")};
  for (int trial = 0; trial < 200; ++trial) {
    Gaussian a{coef(rng), coef(rng)}, b{coef(rng), coef(rng)};
    if (a.is_zero() || b.is_zero()) continue;
    const auto I = FractionalIdeal::principal(ZI, a);
    const auto J = FractionalIdeal::principal(ZI, GaussianRational(Gaussian{1}, b));
    for (const auto& m : places) CHECK((I * J).valuation(m) == I.valuation(m) + J.valuation(m));
  }
}

TEST_CASE("is_principal") {
  const auto five = FractionalIdeal::principal(ZI, Gaussian{5});
  CHECK(FractionalIdeal::principal(ZI, is_principal(five).value()) == five);
  const auto pq = FractionalIdeal::from_factors(ZI, {{place(ZI, "1+2i"), 1}, {place(ZI, "1-2i"), 1}});
  CHECK(pq == five);
  const auto gen = is_principal(pq).value();
  // Generator equals 5 up to a unit.
  const auto ratio = gen / GaussianRational(Gaussian{5});
  CHECK(ratio.den == Gaussian{1});
  CHECK(ratio.num.is_unit());
  CHECK(is_principal(FractionalIdeal::from_factors(ZI, {{place(ZI, "1+2i"), 1}})).value() ==
        GaussianRational(Gaussian{1, 2}));
  const auto z6 = FractionalIdeal::principal(Z, Gaussian{6});
  CHECK(is_principal(z6).value() == GaussianRational(Gaussian{6}));
}
