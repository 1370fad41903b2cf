#pragma once

// Tiled orders in split semisimple algebras and their fractional ideals.
//
// Locally (at one maximal ideal m) a tiled order is an exponent matrix
// lambda: the order is { (a_ij) : v_m(a_ij) >= lambda_ij }. A fractional
// ideal over it is another exponent matrix x. Sums of lattices take entrywise
// minima and products are min-plus matrix products. The zero ideal is the
// exponent kZero, which lets block-diagonal (semiprime) orders and
// block-monomial graded components live in the same representation.
//
// Globally an ideal matrix is stored place by place: one local exponent
// matrix for every maximal ideal where some entry has nonzero valuation.

#include <Eigen/Core>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgo/base_rings.hpp"
#include "sgo/error.hpp"

namespace sgo {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Exponent of the zero ideal. Absorbing under addition.
inline constexpr Int kZero = std::numeric_limits<Int>::max() / 4;

constexpr bool is_zero_exp(Int a) { return a >= kZero; }
constexpr Int add_exp(Int a, Int b) { return (is_zero_exp(a) || is_zero_exp(b)) ? kZero : a + b; }

/// (A*B)_ij = min_k (a_ik + b_kj), honouring kZero.
IntMatrix minplus(const IntMatrix& a, const IntMatrix& b);
/// Adds s to every finite entry (multiplication by a scalar of valuation s).
IntMatrix shifted(const IntMatrix& a, Int s);
/// Rows and columns selected by idx.
IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& idx);
std::string to_string(const IntMatrix& a);
/// s with x = lambda + s on a common support, if any.
std::optional<Int> constant_shift(const IntMatrix& x, const IntMatrix& lambda);

class ZeroDiagonalViolation : public ValidationError {
 public:
  explicit ZeroDiagonalViolation(int i);
  int index;
};

class ClosureViolation : public ValidationError {
 public:
  ClosureViolation(int i, int j, int k, const std::string& what);
  int i, j, k;
};

/// A validated local tiled order: lambda_ii = 0 and
/// lambda_ik + lambda_kj >= lambda_ij.
class ExponentMatrix {
 public:
  const IntMatrix& lambda() const { return lambda_; }
  int size() const { return static_cast<int>(lambda_.rows()); }
  const std::optional<MaximalIdeal>& place() const { return place_; }
  Int operator()(int i, int j) const { return lambda_(i, j); }

  /// Connected components of the support graph: the prime summands.
  std::vector<std::vector<int>> prime_blocks() const;
  bool is_prime() const { return prime_blocks().size() == 1; }

  friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) { return a.lambda_ == b.lambda_; }

 private:
  friend ExponentMatrix validate_order(const IntMatrix&, std::optional<MaximalIdeal>);
  IntMatrix lambda_;
  std::optional<MaximalIdeal> place_;
};

ExponentMatrix validate_order(const IntMatrix& lambda, std::optional<MaximalIdeal> place = std::nullopt);

/// Block-diagonal order with hereditary staircase blocks: one diagonal block
/// of zeros per entry of block_sizes, zeros above the block diagonal and
/// ones below it.
ExponentMatrix hereditary_staircase(const std::vector<int>& block_sizes,
                                    std::optional<MaximalIdeal> place = std::nullopt);
/// Direct sum of orders (block diagonal, kZero off the blocks).
ExponentMatrix direct_sum(const std::vector<ExponentMatrix>& parts);

/// A fractional ideal (two-sided lattice) of a local tiled order.
class IdealMatrix {
 public:
  IdealMatrix(ExponentMatrix order, IntMatrix entries);  // checks bimodule closure

  const ExponentMatrix& order() const { return order_; }
  const IntMatrix& entries() const { return entries_; }
  int size() const { return order_.size(); }
  Int operator()(int i, int j) const { return entries_(i, j); }

  friend bool operator==(const IdealMatrix& a, const IdealMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  ExponentMatrix order_;
  IntMatrix entries_;
};

IdealMatrix as_ideal(const ExponentMatrix& order);
IdealMatrix ideal_multiply(const IdealMatrix& x, const IdealMatrix& y);
IdealMatrix ideal_power(const IdealMatrix& x, int k);  // k >= 0
IdealMatrix scalar_multiple(const ExponentMatrix& order, Int s);

/// r_ij = lambda_ij + [lambda_ij + lambda_ji == 0].
IdealMatrix radical(const ExponentMatrix& order);
/// Left dual { y : y X in Delta }: y_ik = max_j (lambda_ij - x_kj).
IdealMatrix dual_ideal(const IdealMatrix& x);
/// Right dual { y : X y in Delta }: y_kj = max_i (lambda_ij - x_ik).
IdealMatrix right_dual_ideal(const IdealMatrix& x);
bool is_invertible(const IdealMatrix& x);

bool is_hereditary_local(const ExponentMatrix& order);

/// Classes of the relation lambda_ij + lambda_ji == 0 (column shift
/// equivalence), ordered so that each cycle of the radical permutation
/// is listed consecutively, cycles starting at their least index.
struct ProjectiveProfile {
  std::vector<std::vector<int>> classes;
  std::vector<int> block_sizes;
  int t() const { return static_cast<int>(block_sizes.size()); }
  friend bool operator==(const ProjectiveProfile&, const ProjectiveProfile&) = default;
};

ProjectiveProfile projective_profile(const ExponentMatrix& order);

/// Decomposition of an invertible ideal as a left module: multiplicity of
/// each indecomposable projective class, in projective_profile order.
struct ModuleClass {
  std::vector<int> multiplicities;
  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
};

ModuleClass left_module_class(const IdealMatrix& x);
/// Whether X is isomorphic to Delta as a left Delta-module.
bool is_left_free_rank_one(const IdealMatrix& x);

/// e Delta e for e choosing the least index of each projective class.
std::pair<ExponentMatrix, std::vector<int>> basic_idempotent_corner(const ExponentMatrix& order);

/// An ideal matrix over a global base ring, stored place by place.
class GlobalIdealMatrix {
 public:
  using Support = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

  GlobalIdealMatrix(RingKind ring, int n);
  /// Entries given as ideals; std::nullopt is the zero ideal.
  static GlobalIdealMatrix from_entries(RingKind ring,
                                        const std::vector<std::vector<std::optional<FractionalIdeal>>>& entries);
  /// The ideal matrix whose only nonzero valuations are at m, given by x.
  static GlobalIdealMatrix from_local(RingKind ring, const MaximalIdeal& m, const IntMatrix& x);
  /// Explicit support and per-place exponents (kZero off the support).
  static GlobalIdealMatrix from_locals(RingKind ring, const Support& support,
                                       const std::map<MaximalIdeal, IntMatrix>& local);

  RingKind ring() const { return ring_; }
  int size() const { return n_; }
  const Support& support() const { return support_; }
  /// Places where some entry has nonzero valuation.
  std::vector<MaximalIdeal> places() const;
  /// Exponent matrix at m (zeros at places not stored).
  IntMatrix local(const MaximalIdeal& m) const;
  /// Exponent matrix at any place outside places(): 0 on the support.
  IntMatrix generic_local() const;
  std::optional<FractionalIdeal> entry(int i, int j) const;

  void set_local(const MaximalIdeal& m, const IntMatrix& x);

  GlobalIdealMatrix operator*(const GlobalIdealMatrix& other) const;
  /// Multiplies by the principal ideal (c).
  GlobalIdealMatrix scaled(const FractionalIdeal& c) const;
  GlobalIdealMatrix submatrix(const std::vector<int>& idx) const;

  friend bool operator==(const GlobalIdealMatrix& a, const GlobalIdealMatrix& b);

 private:
  void prune();
  RingKind ring_;
  int n_;
  Support support_;
  std::map<MaximalIdeal, IntMatrix> local_;
};

/// A validated global tiled order (R on the diagonal, closed under products).
class GlobalTiledOrder {
 public:
  explicit GlobalTiledOrder(GlobalIdealMatrix data);
  const GlobalIdealMatrix& data() const { return data_; }
  RingKind ring() const { return data_.ring(); }
  int size() const { return data_.size(); }
  std::vector<MaximalIdeal> places() const { return data_.places(); }
  std::vector<std::vector<int>> prime_blocks() const;

 private:
  GlobalIdealMatrix data_;
};

ExponentMatrix localize(const GlobalTiledOrder& order, const MaximalIdeal& m);
/// A global ideal matrix over an order, at m, as a local ideal.
IdealMatrix localize(const GlobalTiledOrder& order, const GlobalIdealMatrix& x, const MaximalIdeal& m);

struct GlobalHereditaryResult {
  bool hereditary = true;
  std::vector<MaximalIdeal> failing;
};

GlobalHereditaryResult is_hereditary_global(const GlobalTiledOrder& order);

}  // namespace sgo
