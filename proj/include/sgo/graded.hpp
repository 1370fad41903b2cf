#pragma once

// Strongly graded orders Lambda = sum_g X_g t_g.
//
// Each component X_g is an ideal matrix in M_n(K); the symbols t_g are
// central and multiply as t_g t_h = sigma(g,h) t_gh for a K*-valued
// 2-cocycle sigma. A crossed product with u_g = W_g t_g (W_g monomial,
// normalizing Delta) and u_g u_h = tau(g,h) u_gh fits this shape with
// X_g = Delta W_g and sigma = tau / kappa, where W_g W_h = kappa(g,h) W_gh.
// The cyclic construction from an invertible bimodule X with X^n = c Delta
// uses X_{g^i} = X^i and sigma = c^-1 whenever the exponents wrap.

#include <optional>
#include <string>
#include <vector>

#include "sgo/groups.hpp"
#include "sgo/tiled.hpp"

namespace sgo {

/// Place of evaluation: std::nullopt is the global context.
using Context = std::optional<MaximalIdeal>;

std::string to_string(const Context& ctx);

struct GradedOrder {
  GroupPtr group;
  GlobalTiledOrder delta;
  std::vector<GlobalIdealMatrix> components;         // indexed like group->elements()
  std::vector<std::vector<GaussianRational>> twist;  // sigma(g, h)
  /// When set, the base ring is the localization at this place and only
  /// this place is ever examined.
  std::optional<MaximalIdeal> local_place;
  std::string kind = "explicit";
  std::vector<std::string> warnings;

  RingKind ring() const { return delta.ring(); }
  int size() const { return delta.size(); }
  const GlobalIdealMatrix& component(std::size_t g) const { return components[g]; }
  std::size_t element_index(const Perm& g) const { return group->index_of(g); }
  /// Places where Delta, some component or some twist value has nonzero
  /// valuation (just local_place in the local setting).
  std::vector<MaximalIdeal> relevant_places() const;
};

/// Shape checks plus the cocycle identity for sigma. Does not check strong
/// grading.
GradedOrder make_graded_order(GroupPtr group, GlobalTiledOrder delta, std::vector<GlobalIdealMatrix> components,
                              std::vector<std::vector<GaussianRational>> twist,
                              std::optional<MaximalIdeal> local_place = std::nullopt);

/// Trivial twist table for a group.
std::vector<std::vector<GaussianRational>> trivial_twist(const FiniteGroup& g);

class CocycleViolation : public ValidationError {
 public:
  CocycleViolation(std::size_t g, std::size_t h, std::size_t k, const std::string& what);
  std::size_t g, h, k;
};

class ActionDoesNotNormalize : public ValidationError {
 public:
  ActionDoesNotNormalize(std::size_t g, const std::string& what);
  std::size_t g;
};

class InvalidIdempotent : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct StrongGradingResult {
  bool strong = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (g, h)
  std::string detail;
};

StrongGradingResult validate_strong_grading(const GradedOrder& lambda);

/// Cyclic graded order with components X^0, ..., X^(n-1). With n unset the
/// least n with X^n = c Delta is used; a given n that is not minimal is
/// accepted with a warning.
GradedOrder construct_from_pic(const GlobalTiledOrder& delta, const GlobalIdealMatrix& x,
                               std::optional<int> n = std::nullopt,
                               std::optional<MaximalIdeal> local_place = std::nullopt);

/// A monomial matrix: row i has the scalar scalars[i] in column perm[i].
struct MonomialMatrix {
  Perm perm;
  std::vector<GaussianRational> scalars;
};

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix permutation_matrix(const Perm& p);

struct CrossedProductDatum {
  /// W for each generator of the group, in group->generators() order.
  std::vector<MonomialMatrix> generator_images;
  /// tau(g, h) as a unit table; empty means trivial.
  std::vector<std::vector<GaussianRational>> cocycle;
};

GradedOrder construct_crossed_product(const GlobalTiledOrder& delta, GroupPtr group, const CrossedProductDatum& datum,
                                      std::optional<MaximalIdeal> local_place = std::nullopt);

struct CrossedProductResult {
  bool crossed_product = true;
  std::vector<bool> free_rank_one;  // per group element
  std::optional<MaximalIdeal> failing_place;
};

/// Whether every component is free of rank one as a left Delta-module, tested
/// place by place (and at the generic place).
CrossedProductResult is_crossed_product(const GradedOrder& lambda);

struct InnerClassification {
  Subgroup subgroup;
  std::vector<std::size_t> inner;  // sorted element indices, a subgroup of H
  Context context;
  bool trivial() const { return inner.size() == 1; }
};

/// Bimodule triviality of X_g at ctx: X_g = c Delta (a constant valuation
/// shift of Delta at ctx, or at every place when global). Needs Delta prime.
bool is_inner(const GradedOrder& lambda, std::size_t g, const Context& ctx);
InnerClassification inner_classification(const GradedOrder& lambda, const Subgroup& h, const Context& ctx);

/// Corner e Lambda e for e = sum of e_ii, i in idx, graded by the subgroup h
/// (the whole group by default).
GradedOrder corner_graded_order(const GradedOrder& lambda, const std::vector<int>& idx,
                                const std::optional<Subgroup>& h = std::nullopt);

struct VerdictOptions {
  /// Index into all_sylow_subgroups(G_i, p); 0 is the lexicographically
  /// least Sylow subgroup.
  std::size_t sylow_choice = 0;
  /// Index of the representative within each orbit of central idempotents.
  std::size_t representative_choice = 0;
};

struct VerdictEntry {
  int orbit = 0;
  Int p = 0;
  MaximalIdeal place;
  std::vector<Perm> sylow;             // sorted elements
  std::optional<Perm> inner_witness;  // a non-identity inner element
};

struct HereditaryVerdict {
  bool hereditary = true;
  bool delta_hereditary = true;
  std::vector<MaximalIdeal> delta_failing;
  std::vector<VerdictEntry> breakdown;
};

/// The prime case: Delta hereditary and, for every p dividing |G| and every
/// place over p, the Sylow p-subgroup has trivial Inn at that place.
HereditaryVerdict prime_hereditary_verdict(const GradedOrder& lambda, const VerdictOptions& opts = {}, int orbit = 0);

/// Delta hereditary at one place.
bool delta_hereditary_at(const GradedOrder& lambda, const MaximalIdeal& m);

}  // namespace sgo
