#pragma once

// Exact arithmetic in the two supported base rings, Z and Z[i]: elements,
// maximal ideals, splitting of rational primes, valuations and fractional
// ideals. Both rings are PIDs, so every ideal also carries a generator.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgo {

using Int = std::int64_t;

enum class RingKind { RationalIntegers, GaussianIntegers };

std::string ring_name(RingKind kind);
RingKind parse_ring(const std::string& name);

/// A Gaussian integer a + b i. Rational integers are the b == 0 case.
struct Gaussian {
  Int re = 0;
  Int im = 0;

  constexpr Gaussian() = default;
  constexpr Gaussian(Int a, Int b = 0) : re(a), im(b) {}

  friend constexpr bool operator==(const Gaussian&, const Gaussian&) = default;
  friend constexpr auto operator<=>(const Gaussian&, const Gaussian&) = default;

  constexpr Gaussian conj() const { return {re, -im}; }
  constexpr Int norm() const { return re * re + im * im; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr bool is_unit() const { return norm() == 1; }
};

constexpr Gaussian operator+(Gaussian x, Gaussian y) { return {x.re + y.re, x.im + y.im}; }
constexpr Gaussian operator-(Gaussian x, Gaussian y) { return {x.re - y.re, x.im - y.im}; }
constexpr Gaussian operator-(Gaussian x) { return {-x.re, -x.im}; }
constexpr Gaussian operator*(Gaussian x, Gaussian y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

/// Exact quotient x / y if y divides x in Z[i].
std::optional<Gaussian> exact_divide(Gaussian x, Gaussian y);

/// The associate of z with re > 0 and im >= 0 (zero maps to zero).
Gaussian normalize_first_quadrant(Gaussian z);

/// Formats as "a+bi", "a-bi", "a", "bi", "i", "-i".
std::string to_string(Gaussian z);
/// Parses the format produced by to_string; also accepts whitespace.
Gaussian parse_gaussian(const std::string& text);

/// An element of the fraction field, num / den with den != 0.
struct GaussianRational {
  Gaussian num{1};
  Gaussian den{1};

  GaussianRational() = default;
  GaussianRational(Gaussian n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Gaussian n, Gaussian d);

  GaussianRational inverse() const;
  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.num * y.den == y.num * x.den;
  }
};

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator/(const GaussianRational& x, const GaussianRational& y);
std::string to_string(const GaussianRational& q);
/// Accepts "a+bi" or "num/den" with Gaussian num and den.
GaussianRational parse_gaussian_rational(const std::string& text);

bool is_rational_prime(Int p);
/// Prime factorization of |n|, n != 0, as (prime, exponent) pairs in increasing order.
std::vector<std::pair<Int, int>> factor_integer(Int n);

/// A maximal ideal of the base ring. The generator is kept in first-quadrant
/// normal form, so equality of ideals is equality of generators.
struct MaximalIdeal {
  RingKind ring = RingKind::RationalIntegers;
  Gaussian generator{2};
  Int residue_characteristic = 2;
  Int residue_field_size = 2;

  friend bool operator==(const MaximalIdeal& x, const MaximalIdeal& y) {
    return x.ring == y.ring && x.generator == y.generator;
  }
  friend std::strong_ordering operator<=>(const MaximalIdeal& x, const MaximalIdeal& y) {
    if (auto c = x.ring <=> y.ring; c != 0) return c;
    return x.generator <=> y.generator;
  }

  /// Display generator: for a split prime a +- bi the associate with
  /// 0 < a < |b| (so 5 = (1+2i)(1-2i)), otherwise the first-quadrant one.
  Gaussian display_generator() const;
  /// "(1+2i)", "(5)", ...
  std::string label() const;
};

/// The maximal ideal generated by a prime element of the ring.
MaximalIdeal maximal_ideal_from_generator(RingKind ring, Gaussian generator);
/// Parses a label such as "(1-2i)" or "1-2i".
MaximalIdeal parse_place(RingKind ring, const std::string& text);

/// Maximal ideals over p together with their ramification indices, so that
/// (p) = prod m^e. Sorted by ideal.
std::vector<std::pair<MaximalIdeal, int>> factor_rational_prime(RingKind ring, Int p);

/// Exponent of m in the element z (z != 0).
Int valuation(Gaussian z, const MaximalIdeal& m);
Int valuation(const GaussianRational& q, const MaximalIdeal& m);

/// A nonzero fractional ideal, stored by its factorization into maximal ideals.
class FractionalIdeal {
 public:
  explicit FractionalIdeal(RingKind ring) : ring_(ring) {}
  /// The principal ideal (q), q != 0.
  static FractionalIdeal principal(RingKind ring, const GaussianRational& q);
  static FractionalIdeal from_factors(RingKind ring,
                                      const std::vector<std::pair<MaximalIdeal, Int>>& factors);

  RingKind ring() const { return ring_; }
  const std::map<MaximalIdeal, Int>& factors() const { return factors_; }
  Int valuation(const MaximalIdeal& m) const;
  bool is_unit_ideal() const { return factors_.empty(); }

  FractionalIdeal operator*(const FractionalIdeal& other) const;
  FractionalIdeal inverse() const;
  friend bool operator==(const FractionalIdeal&, const FractionalIdeal&) = default;

 private:
  RingKind ring_;
  std::map<MaximalIdeal, Int> factors_;  // exponents are never zero
};

/// Both supported rings are PIDs, so this always returns a generator. The
/// generator is a product of first-quadrant prime generators.
std::optional<GaussianRational> is_principal(const FractionalIdeal& ideal);

std::string to_string(const FractionalIdeal& ideal);

}  // namespace sgo
