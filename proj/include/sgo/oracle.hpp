#pragma once

// Brute-force hereditariness test for an explicit order over the completion
// at one place, given by structure constants.
//
// The order is a free Z_p-module with basis b_0..b_{N-1}; products are kept
// modulo p^2, which is enough to decide whether the radical J is invertible
// (pA is contained in J, so J^-1 lies in p^-1 A). The radical of A/pA is
// computed without knowing anything about tiled orders: a Peirce
// decomposition along given orthogonal idempotents reduces it to the
// radicals of the corner algebras e_i A e_i, which are found with p-power
// traces (valid in every characteristic).

#include <string>
#include <vector>

#include "sgo/graded.hpp"

namespace sgo {

class RankCapExceeded : public Error {
 public:
  using Error::Error;
};

class AssociativityFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

inline constexpr int kOracleRankCap = 200;

/// A vector over Z/p^2 (or F_p): one coordinate per basis element.
using OracleVector = std::vector<Int>;

struct StructureConstantOrder {
  Int p = 2;
  int rank = 0;
  std::vector<std::string> labels;
  /// table[a * rank + b] lists (c, coefficient mod p^2) with b_a b_b = sum coef b_c.
  std::vector<std::vector<std::pair<int, Int>>> table;
  OracleVector one;
  /// Orthogonal idempotents summing to one (modulo p at least).
  std::vector<OracleVector> idempotents;

  Int modulus() const { return p * p; }
  /// Product modulo p^2.
  OracleVector multiply(const OracleVector& x, const OracleVector& y) const;
  OracleVector basis_vector(int a) const;
};

/// From a dense table c[a][b][k] of integers (reduced mod p^2). The
/// identity must be given; idempotents default to {one}.
StructureConstantOrder from_dense_table(Int p, const std::vector<std::vector<std::vector<Int>>>& c,
                                        const OracleVector& one, std::vector<OracleVector> idempotents = {});

/// Throws AssociativityFailure with a witness triple.
void check_associativity(const StructureConstantOrder& a);

/// The completion of Lambda at m as a Z_p-order with basis
/// p^(x_ij) e_ij t_g. Needs residue field F_p: any place of Z, or a split
/// place of Z[i] (the Hensel lift of i identifies the completion with Z_p).
StructureConstantOrder flatten(const GradedOrder& lambda, const MaximalIdeal& m);
/// Rank of the flattening, without building it.
int flattened_rank(const GradedOrder& lambda);

/// Basis (reduced row echelon form over F_p) of rad(A / pA).
std::vector<OracleVector> radical_mod_m(const StructureConstantOrder& a);

struct RadicalCertificate {
  bool ideal = false;
  bool nilpotent = false;
  int nilpotency_index = 0;
  bool quotient_semisimple = false;
  bool ok() const { return ideal && nilpotent && quotient_semisimple; }
};

RadicalCertificate certify_radical(const StructureConstantOrder& a, const std::vector<OracleVector>& rad);

/// Whether the radical is invertible: J^-1 J = A = J J^-1.
bool hereditary_oracle(const StructureConstantOrder& a);

}  // namespace sgo
