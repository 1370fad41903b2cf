#pragma once

// Finite permutation groups: element enumeration, subgroups, Sylow subgroups,
// conjugation, and permutation actions on finite sets.
//
// Permutations act on the right: x^(gh) = (x^g)^h, and the product g*h means
// "apply g, then h". This matches the way a grading group acts on central
// idempotents (e_i Lambda_g = Lambda_g e_{g(i)}).

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sgo {

/// Images of the points 0..n-1.
using Perm = std::vector<int>;

Perm identity_perm(int degree);
/// (a*b)[x] = b[a[x]]
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);
/// Cycle notation with 1-based points, "()" for the identity.
std::string to_cycle_string(const Perm& a);
Perm parse_cycles(const std::string& text, int degree);

/// Upper bound on |G| for the exhaustive algorithms used here.
inline constexpr std::size_t kMaxGroupOrder = 10080;

class FiniteGroup {
 public:
  /// Enumerates the group generated by gens; throws if it exceeds kMaxGroupOrder.
  FiniteGroup(int degree, std::vector<Perm> gens);

  static std::shared_ptr<const FiniteGroup> make(int degree, std::vector<Perm> gens);
  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> symmetric(int d);
  static std::shared_ptr<const FiniteGroup> trivial(int degree = 1);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::size_t order() const { return elements_.size(); }
  /// Element 0 is always the identity.
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t index) const { return elements_[index]; }
  /// Index of a permutation in elements(); throws if it is not a group element.
  std::size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const;
  std::size_t power(std::size_t a, long long k) const;
  std::size_t element_order(std::size_t a) const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::map<Perm, std::size_t> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  /// The subgroup of parent generated by the given element indices.
  static Subgroup generated(GroupPtr parent, const std::vector<std::size_t>& gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& generators() const { return gens_; }
  /// Sorted element indices into parent->elements().
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::size_t g) const;

  /// Elements as permutations, sorted lexicographically.
  std::vector<Perm> sorted_perms() const;
  /// The subgroup as a group in its own right (same degree).
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(GroupPtr parent, std::vector<std::size_t> gens, std::vector<std::size_t> elements);

  GroupPtr parent_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> elements_;
};

/// g^-1 H g.
Subgroup conjugate_subgroup(const Subgroup& h, std::size_t g);
Subgroup normalizer(const Subgroup& h);

/// A Sylow p-subgroup. Among all Sylow p-subgroups the one with the
/// lexicographically least sorted element list is returned. The trivial
/// subgroup is returned when p does not divide |G|.
Subgroup sylow_subgroup(const GroupPtr& g, long long p);
/// Every Sylow p-subgroup, in lexicographic order of sorted element lists.
std::vector<Subgroup> all_sylow_subgroups(const GroupPtr& g, long long p);

/// Prime divisors of |G| in increasing order.
std::vector<long long> prime_divisors_of_order(const FiniteGroup& g);

/// A right action of a group on {0..set_size-1}, given by the image
/// permutation of every group element.
struct GroupAction {
  GroupPtr group;
  int set_size = 0;
  std::vector<Perm> images;  // indexed like group->elements()
};

struct OrbitInfo {
  std::vector<int> orbit;  // sorted
  int representative = 0;  // least point
  Subgroup stabilizer;
};

/// Checks the action axioms (throws ValidationError naming a witness pair)
/// and returns the orbits ordered by representative.
std::vector<OrbitInfo> orbits_and_stabilizers(const GroupAction& action);
/// Stabilizer of an arbitrary point.
Subgroup stabilizer_of(const GroupAction& action, int point);

}  // namespace sgo
