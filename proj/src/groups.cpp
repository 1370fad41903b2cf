#include "sgo/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "sgo/base_rings.hpp"
#include "sgo/error.hpp"

namespace sgo {

Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[static_cast<std::size_t>(a[x])];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

bool is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != static_cast<int>(x)) return false;
  return true;
}

std::string to_cycle_string(const Perm& a) {
  std::ostringstream out;
  std::vector<bool> seen(a.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < a.size(); ++start) {
    if (seen[start] || a[start] == static_cast<int>(start)) continue;
    any = true;
    out << "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      out << (first ? "" : " ") << x + 1;
      first = false;
      x = static_cast<std::size_t>(a[x]);
    }
    out << ")";
  }
  return any ? out.str() : "()";
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm result = identity_perm(degree);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("bad permutation '" + text + "': " + why);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ') {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) fail("unterminated cycle");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream parts(tok);
      int v = 0;
      while (parts >> v) {
        if (v < 1 || v > degree) fail("point " + std::to_string(v) + " out of range");
        cycle.push_back(v - 1);
      }
    }
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) fail("repeated point in a cycle");
    Perm cyc = identity_perm(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      cyc[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    // Cycles are applied left to right.
    result = compose(result, cyc);
    pos = close + 1;
  }
  return result;
}

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens)) {
  if (degree < 1) throw InvalidArgument("group degree must be positive");
  for (const auto& g : gens_) {
    if (g.size() != static_cast<std::size_t>(degree)) throw InvalidArgument("generator has wrong degree");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(degree)) throw InvalidArgument("generator is not a permutation");
  }
  elements_.push_back(identity_perm(degree));
  index_.emplace(elements_.front(), 0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& s : gens_) {
      Perm next = compose(elements_[k], s);
      if (index_.count(next)) continue;
      if (elements_.size() >= kMaxGroupOrder)
        throw InvalidArgument("group order exceeds the cap of " + std::to_string(kMaxGroupOrder));
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
    }
  }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::make(int degree, std::vector<Perm> gens) {
  return std::make_shared<const FiniteGroup>(degree, std::move(gens));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  Perm c(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) c[static_cast<std::size_t>(x)] = (x + 1) % n;
  return make(n, n > 1 ? std::vector<Perm>{c} : std::vector<Perm>{});
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(int d) {
  std::vector<Perm> gens;
  if (d >= 2) {
    Perm t = identity_perm(d);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (d >= 3) {
    Perm c(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) c[static_cast<std::size_t>(x)] = (x + 1) % d;
    gens.push_back(c);
  }
  return make(d, gens);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::trivial(int degree) { return make(degree, {}); }

std::size_t FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InvalidArgument(to_cycle_string(p) + " is not an element of the group");
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(compose(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::inverse_of(std::size_t a) const { return index_of(sgo::inverse(elements_[a])); }

std::size_t FiniteGroup::power(std::size_t a, long long k) const {
  if (k < 0) return power(inverse_of(a), -k);
  std::size_t out = 0;
  for (long long i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> gens, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), gens_(std::move(gens)), elements_(std::move(elements)) {}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<std::size_t>& gens) {
  std::vector<char> in(parent->order(), 0);
  std::vector<std::size_t> elems{0};
  in[0] = 1;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t s : gens) {
      const std::size_t next = parent->multiply(elems[k], s);
      if (!in[next]) {
        in[next] = 1;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(std::move(parent), gens, std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<std::size_t> gens;
  for (const auto& g : parent->generators()) gens.push_back(parent->index_of(g));
  std::vector<std::size_t> elems(parent->order());
  std::iota(elems.begin(), elems.end(), 0);
  return Subgroup(std::move(parent), gens, elems);
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {}, {0}); }

bool Subgroup::contains(std::size_t g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

std::vector<Perm> Subgroup::sorted_perms() const {
  std::vector<Perm> out;
  out.reserve(elements_.size());
  for (std::size_t e : elements_) out.push_back(parent_->element(e));
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr Subgroup::as_group() const {
  std::vector<Perm> gens;
  for (std::size_t g : gens_) gens.push_back(parent_->element(g));
  return FiniteGroup::make(parent_->degree(), gens);
}

Subgroup conjugate_subgroup(const Subgroup& h, std::size_t g) {
  const auto& G = *h.parent();
  const std::size_t gi = G.inverse_of(g);
  std::vector<std::size_t> gens;
  for (std::size_t s : h.generators()) gens.push_back(G.multiply(G.multiply(gi, s), g));
  // Generators alone determine the subgroup, but conjugating every element is
  // cheap and avoids a second closure.
  std::vector<std::size_t> elems;
  elems.reserve(h.order());
  for (std::size_t x : h.elements()) elems.push_back(G.multiply(G.multiply(gi, x), g));
  std::sort(elems.begin(), elems.end());
  Subgroup out = Subgroup::generated(h.parent(), gens);
  if (out.elements() != elems) throw InternalError("conjugate subgroup closure mismatch");
  return out;
}

Subgroup normalizer(const Subgroup& h) {
  const auto& G = *h.parent();
  std::vector<std::size_t> norm;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const std::size_t gi = G.inverse_of(g);
    bool ok = true;
    for (std::size_t s : h.generators()) {
      if (!h.contains(G.multiply(G.multiply(gi, s), g))) {
        ok = false;
        break;
      }
    }
    if (ok) norm.push_back(g);
  }
  return Subgroup::generated(h.parent(), norm);
}

namespace {

long long sylow_order(std::size_t group_order, long long p) {
  long long q = 1;
  auto n = static_cast<long long>(group_order);
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

// Some Sylow p-subgroup, by ascent through normalizers: while P is not
// Sylow, p divides [N(P) : P] and any g in N(P) \ P with g^p in P extends P.
Subgroup some_sylow(const GroupPtr& group, long long p) {
  const long long target = sylow_order(group->order(), p);
  Subgroup current = Subgroup::trivial(group);
  while (static_cast<long long>(current.order()) < target) {
    const Subgroup norm = normalizer(current);
    bool extended = false;
    for (std::size_t g : norm.elements()) {
      if (current.contains(g)) continue;
      if (!current.contains(group->power(g, p))) continue;
      std::vector<std::size_t> gens = current.generators();
      gens.push_back(g);
      current = Subgroup::generated(group, gens);
      extended = true;
      break;
    }
    if (!extended) throw InternalError("Sylow ascent stalled");
  }
  return current;
}

}  // namespace

std::vector<Subgroup> all_sylow_subgroups(const GroupPtr& g, long long p) {
  if (!is_rational_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const Subgroup base = some_sylow(g, p);
  std::vector<Subgroup> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 0; x < g->order(); ++x) {
    Subgroup c = conjugate_subgroup(base, x);
    if (seen.insert(c.elements()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.sorted_perms() < b.sorted_perms(); });
  return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, long long p) { return all_sylow_subgroups(g, p).front(); }

std::vector<long long> prime_divisors_of_order(const FiniteGroup& g) {
  std::vector<long long> out;
  for (const auto& [p, e] : factor_integer(static_cast<Int>(g.order()))) out.push_back(p);
  return out;
}

namespace {

void check_action(const GroupAction& action) {
  const auto& G = *action.group;
  if (action.images.size() != G.order()) throw ValidationError("action must give an image for every group element");
  for (const auto& img : action.images) {
    if (img.size() != static_cast<std::size_t>(action.set_size))
      throw ValidationError("action image has the wrong size");
    Perm sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(action.set_size)) throw ValidationError("action image is not a permutation");
  }
  if (!is_identity(action.images[0])) throw ValidationError("identity acts nontrivially");
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (const auto& s : G.generators()) {
      const std::size_t si = G.index_of(s);
      const std::size_t gs = G.multiply(g, si);
      if (compose(action.images[g], action.images[si]) != action.images[gs]) {
        throw ValidationError("action is not compatible with composition at the pair (" +
                              to_cycle_string(G.element(g)) + ", " + to_cycle_string(s) + ")");
      }
    }
  }
}

}  // namespace

Subgroup stabilizer_of(const GroupAction& action, int point) {
  std::vector<std::size_t> stab;
  for (std::size_t g = 0; g < action.group->order(); ++g)
    if (action.images[g][static_cast<std::size_t>(point)] == point) stab.push_back(g);
  return Subgroup::generated(action.group, stab);
}

std::vector<OrbitInfo> orbits_and_stabilizers(const GroupAction& action) {
  check_action(action);
  std::vector<OrbitInfo> out;
  std::vector<bool> seen(static_cast<std::size_t>(action.set_size), false);
  for (int start = 0; start < action.set_size; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit;
    for (const auto& img : action.images) {
      const int y = img[static_cast<std::size_t>(start)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    Subgroup stab = stabilizer_of(action, start);
    if (orbit.size() * stab.order() != action.group->order())
      throw InternalError("orbit-stabilizer count mismatch");
    out.push_back(OrbitInfo{std::move(orbit), start, std::move(stab)});
  }
  return out;
}

}  // namespace sgo
