#pragma once

// Semiprime identity components Delta = Delta_1 + ... + Delta_t: the action
// of G on the central idempotents, orbit corners, and the hereditary verdict.

#include <vector>

#include "sgo/graded.hpp"

namespace sgo {

class InconsistentBlockSupport : public ValidationError {
 public:
  InconsistentBlockSupport(std::size_t g, const std::string& what);
  std::size_t g;
};

/// Prime blocks of Delta (index sets), in order of least index.
std::vector<std::vector<int>> prime_blocks(const GradedOrder& lambda);

/// g sends block k to the block b with e_k Lambda_g = Lambda_g e_b.
GroupAction idempotent_action(const GradedOrder& lambda);

struct OrbitCorner {
  std::vector<int> orbit;  // block indices
  int representative = 0;
  Subgroup stabilizer;
  GradedOrder corner;  // e Lambda e for e the representative's block, graded by the stabilizer
};

/// representative_choice picks the k-th member (mod orbit size) of each orbit.
std::vector<OrbitCorner> orbit_decompose(const GradedOrder& lambda, std::size_t representative_choice = 0);

HereditaryVerdict main_hereditary_verdict(const GradedOrder& lambda, const VerdictOptions& opts = {});

/// The verdict for the completion at one place: Delta hereditary there and
/// every corner's Sylow subgroups (for the residue characteristic) outer
/// there.
bool local_hereditary_verdict(const GradedOrder& lambda, const MaximalIdeal& m);

/// Bimodule triviality on the full (possibly semiprime) order: X_g = c Delta
/// with c central, i.e. the same support and a constant shift on each block.
bool is_inner_full_order(const GradedOrder& lambda, std::size_t g, const Context& ctx);
InnerClassification inner_classification_full_order(const GradedOrder& lambda, const Subgroup& h, const Context& ctx);

}  // namespace sgo
