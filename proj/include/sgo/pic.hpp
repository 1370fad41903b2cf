#pragma once

// Central Picard groups of hereditary tiled orders. Locally the group is
// cyclic, generated by the radical; globally (PID base) it is the direct sum
// of the local groups over the places where the order is not maximal.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgo/tiled.hpp"

namespace sgo {

struct LocalPicent {
  ExponentMatrix order;
  int t = 1;  // order of the cyclic group
  IdealMatrix generator;  // the radical
};

struct GlobalPicent {
  std::vector<std::pair<MaximalIdeal, LocalPicent>> components;  // only t > 1
  /// Orders of the cyclic factors, in the order of components.
  std::vector<int> factor_orders() const;
};

/// "Z/5 at (1+2i) + Z/5 at (1-2i)" style description; "trivial" if empty.
std::string to_string(const GlobalPicent& g);

/// A class in the global group: residues mod t_m, zero entries omitted.
struct PicClass {
  std::map<MaximalIdeal, int> per_place;
  int at(const MaximalIdeal& m) const;
  friend bool operator==(const PicClass&, const PicClass&) = default;
};

std::string to_string(const PicClass& c);

/// Requires a prime hereditary order.
LocalPicent picent_local(const ExponentMatrix& order);
GlobalPicent picent_global(const GlobalTiledOrder& order);

/// The shift s with X = m^s Delta, if X is bimodule-isomorphic to Delta.
/// Needs a prime order (NotPrimeContext otherwise).
std::optional<Int> bimodule_trivial_local(const IdealMatrix& x);

/// For each non-maximal place, the k with X ~ rad^k up to a scalar.
PicClass pic_class_of(const GlobalTiledOrder& order, const GlobalIdealMatrix& x);
/// Local version: the k with x ~ rad^k at one place.
int pic_class_local(const IdealMatrix& x);

/// Delta with the rad^k pattern substituted at every target place.
GlobalIdealMatrix construct_class_representative(const GlobalTiledOrder& order, const PicClass& target);

}  // namespace sgo
