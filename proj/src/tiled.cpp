#include "sgo/tiled.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sgo {

IntMatrix minplus(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("min-plus product of mismatched shapes");
  IntMatrix out = IntMatrix::Constant(a.rows(), b.cols(), kZero);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero_exp(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) = std::min(out(i, j), add_exp(a(i, k), b(k, j)));
    }
  return out;
}

IntMatrix shifted(const IntMatrix& a, Int s) {
  return a.unaryExpr([s](Int v) { return add_exp(v, s); });
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  return out;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ",";
      if (is_zero_exp(a(i, j))) out << "inf";
      else out << a(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::optional<Int> constant_shift(const IntMatrix& x, const IntMatrix& lambda) {
  if (x.rows() != lambda.rows() || x.cols() != lambda.cols()) return std::nullopt;
  std::optional<Int> shift;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const bool zx = is_zero_exp(x(i, j));
      if (zx != is_zero_exp(lambda(i, j))) return std::nullopt;
      if (zx) continue;
      const Int s = x(i, j) - lambda(i, j);
      if (shift && *shift != s) return std::nullopt;
      shift = s;
    }
  return shift ? shift : std::optional<Int>(0);
}

ZeroDiagonalViolation::ZeroDiagonalViolation(int i)
    : ValidationError("ZeroDiagonalViolation: diagonal entry " + std::to_string(i + 1) + " is not 0"), index(i) {}

ClosureViolation::ClosureViolation(int i_, int j_, int k_, const std::string& what)
    : ValidationError("ClosureViolation at (i,j,k) = (" + std::to_string(i_ + 1) + "," + std::to_string(j_ + 1) +
                      "," + std::to_string(k_ + 1) + "): " + what),
      i(i_), j(j_), k(k_) {}

ExponentMatrix validate_order(const IntMatrix& lambda, std::optional<MaximalIdeal> place) {
  if (lambda.rows() != lambda.cols() || lambda.rows() == 0)
    throw ValidationError("exponent matrix must be square and nonempty");
  const int n = static_cast<int>(lambda.rows());
  for (int i = 0; i < n; ++i)
    if (lambda(i, i) != 0) throw ZeroDiagonalViolation(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (add_exp(lambda(i, k), lambda(k, j)) < lambda(i, j))
          throw ClosureViolation(i, j, k, "lambda_ik + lambda_kj < lambda_ij");
  ExponentMatrix out;
  out.lambda_ = lambda;
  out.place_ = std::move(place);
  return out;
}

std::vector<std::vector<int>> ExponentMatrix::prime_blocks() const {
  const int n = size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> blocks;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> block{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(blocks.size());
    for (std::size_t q = 0; q < block.size(); ++q) {
      const int i = block[q];
      for (int j = 0; j < n; ++j) {
        if (comp[static_cast<std::size_t>(j)] >= 0) continue;
        if (!is_zero_exp(lambda_(i, j)) || !is_zero_exp(lambda_(j, i))) {
          comp[static_cast<std::size_t>(j)] = static_cast<int>(blocks.size());
          block.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

ExponentMatrix hereditary_staircase(const std::vector<int>& block_sizes, std::optional<MaximalIdeal> place) {
  std::vector<int> block_of;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    if (block_sizes[b] <= 0) throw InvalidArgument("staircase block sizes must be positive");
    block_of.insert(block_of.end(), static_cast<std::size_t>(block_sizes[b]), static_cast<int>(b));
  }
  const auto n = static_cast<Eigen::Index>(block_of.size());
  if (n == 0) throw InvalidArgument("staircase needs at least one block");
  IntMatrix lambda(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      lambda(i, j) = block_of[static_cast<std::size_t>(i)] <= block_of[static_cast<std::size_t>(j)] ? 0 : 1;
  return validate_order(lambda, std::move(place));
}

ExponentMatrix direct_sum(const std::vector<ExponentMatrix>& parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of no orders");
  Eigen::Index n = 0;
  for (const auto& p : parts) n += p.size();
  IntMatrix lambda = IntMatrix::Constant(n, n, kZero);
  Eigen::Index offset = 0;
  for (const auto& p : parts) {
    lambda.block(offset, offset, p.size(), p.size()) = p.lambda();
    offset += p.size();
  }
  return validate_order(lambda, parts.front().place());
}

IdealMatrix::IdealMatrix(ExponentMatrix order, IntMatrix entries) : order_(std::move(order)), entries_(std::move(entries)) {
  const int n = order_.size();
  if (entries_.rows() != n || entries_.cols() != n) throw ValidationError("ideal matrix has the wrong size");
  const IntMatrix& l = order_.lambda();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (add_exp(l(i, k), entries_(k, j)) < entries_(i, j))
          throw ClosureViolation(i, j, k, "not a left module: lambda_ik + x_kj < x_ij");
        if (add_exp(entries_(i, k), l(k, j)) < entries_(i, j))
          throw ClosureViolation(i, j, k, "not a right module: x_ik + lambda_kj < x_ij");
      }
}

IdealMatrix as_ideal(const ExponentMatrix& order) { return IdealMatrix(order, order.lambda()); }

IdealMatrix ideal_multiply(const IdealMatrix& x, const IdealMatrix& y) {
  if (!(x.order() == y.order())) throw InvalidArgument("ideals over different orders");
  return IdealMatrix(x.order(), minplus(x.entries(), y.entries()));
}

IdealMatrix ideal_power(const IdealMatrix& x, int k) {
  if (k < 0) throw InvalidArgument("negative ideal power");
  IdealMatrix out = as_ideal(x.order());
  for (int i = 0; i < k; ++i) out = ideal_multiply(out, x);
  return out;
}

IdealMatrix scalar_multiple(const ExponentMatrix& order, Int s) {
  return IdealMatrix(order, shifted(order.lambda(), s));
}

IdealMatrix radical(const ExponentMatrix& order) {
  const IntMatrix& l = order.lambda();
  IntMatrix r = l;
  for (int i = 0; i < order.size(); ++i)
    for (int j = 0; j < order.size(); ++j)
      if (add_exp(l(i, j), l(j, i)) == 0) r(i, j) = l(i, j) + 1;
  return IdealMatrix(order, r);
}

namespace {

constexpr Int kUnbounded = std::numeric_limits<Int>::min() / 4;

Int dual_entry(Int lam, Int x) {
  if (is_zero_exp(x)) return kUnbounded;  // no constraint
  if (is_zero_exp(lam)) return kZero;
  return lam - x;
}

}  // namespace

IdealMatrix dual_ideal(const IdealMatrix& x) {
  const int n = x.size();
  const IntMatrix& l = x.order().lambda();
  IntMatrix y(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int best = kUnbounded;
      for (int j = 0; j < n; ++j) best = std::max(best, dual_entry(l(i, j), x(k, j)));
      if (best == kUnbounded) throw NotInvertible("left dual is unbounded: row " + std::to_string(k + 1) + " of X is zero");
      y(i, k) = best;
    }
  return IdealMatrix(x.order(), y);
}

IdealMatrix right_dual_ideal(const IdealMatrix& x) {
  const int n = x.size();
  const IntMatrix& l = x.order().lambda();
  IntMatrix y(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      Int best = kUnbounded;
      for (int i = 0; i < n; ++i) best = std::max(best, dual_entry(l(i, j), x(i, k)));
      if (best == kUnbounded) throw NotInvertible("right dual is unbounded: column " + std::to_string(k + 1) + " of X is zero");
      y(k, j) = best;
    }
  return IdealMatrix(x.order(), y);
}

bool is_invertible(const IdealMatrix& x) {
  try {
    const IdealMatrix delta = as_ideal(x.order());
    return ideal_multiply(dual_ideal(x), x) == delta && ideal_multiply(x, right_dual_ideal(x)) == delta;
  } catch (const NotInvertible&) {
    return false;
  }
}

bool is_hereditary_local(const ExponentMatrix& order) { return is_invertible(radical(order)); }

namespace {

std::vector<int> class_of_index(const ExponentMatrix& order, int& count) {
  const int n = order.size();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  count = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<std::size_t>(i)] >= 0) continue;
    for (int j = i; j < n; ++j)
      if (add_exp(order(i, j), order(j, i)) == 0) cls[static_cast<std::size_t>(j)] = count;
    ++count;
  }
  return cls;
}

// Whether column cx of x equals column cl of lambda up to a constant shift.
bool columns_shift_equal(const IntMatrix& x, int cx, const IntMatrix& lambda, int cl) {
  std::optional<Int> shift;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const bool zx = is_zero_exp(x(i, cx));
    const bool zl = is_zero_exp(lambda(i, cl));
    if (zx != zl) return false;
    if (zx) continue;
    const Int s = x(i, cx) - lambda(i, cl);
    if (shift && *shift != s) return false;
    shift = s;
  }
  return true;
}

}  // namespace

ProjectiveProfile projective_profile(const ExponentMatrix& order) {
  if (!is_hereditary_local(order)) throw NotHereditary("projective profile is defined for hereditary orders only");
  int count = 0;
  const std::vector<int> cls = class_of_index(order, count);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
  for (int i = 0; i < order.size(); ++i) members[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])].push_back(i);

  // The radical sends the projective of one class to the projective of the
  // next class in its cycle.
  const IntMatrix r = radical(order).entries();
  std::vector<int> successor(static_cast<std::size_t>(count), -1);
  for (int c = 0; c < count; ++c) {
    const int rep = members[static_cast<std::size_t>(c)].front();
    for (int d = 0; d < count; ++d)
      if (columns_shift_equal(r, rep, order.lambda(), members[static_cast<std::size_t>(d)].front())) successor[static_cast<std::size_t>(c)] = d;
    if (successor[static_cast<std::size_t>(c)] < 0) throw InternalError("radical column matches no projective class");
  }
  ProjectiveProfile profile;
  std::vector<bool> used(static_cast<std::size_t>(count), false);
  for (int start = 0; start < count; ++start) {
    for (int c = start; !used[static_cast<std::size_t>(c)]; c = successor[static_cast<std::size_t>(c)]) {
      used[static_cast<std::size_t>(c)] = true;
      profile.classes.push_back(members[static_cast<std::size_t>(c)]);
      profile.block_sizes.push_back(static_cast<int>(members[static_cast<std::size_t>(c)].size()));
    }
  }
  return profile;
}

ModuleClass left_module_class(const IdealMatrix& x) {
  const ProjectiveProfile profile = projective_profile(x.order());
  if (!is_invertible(x)) throw NotInvertible("left module class needs an invertible ideal");
  ModuleClass out;
  out.multiplicities.assign(profile.classes.size(), 0);
  for (int j = 0; j < x.size(); ++j) {
    bool found = false;
    for (std::size_t c = 0; c < profile.classes.size() && !found; ++c) {
      if (columns_shift_equal(x.entries(), j, x.order().lambda(), profile.classes[c].front())) {
        ++out.multiplicities[c];
        found = true;
      }
    }
    if (!found) throw InternalError("column " + std::to_string(j + 1) + " of an invertible ideal is not projective");
  }
  return out;
}

bool is_left_free_rank_one(const IdealMatrix& x) {
  return left_module_class(x).multiplicities == projective_profile(x.order()).block_sizes;
}

std::pair<ExponentMatrix, std::vector<int>> basic_idempotent_corner(const ExponentMatrix& order) {
  const ProjectiveProfile profile = projective_profile(order);
  std::vector<int> idx;
  for (const auto& c : profile.classes) idx.push_back(c.front());
  std::sort(idx.begin(), idx.end());
  return {validate_order(submatrix(order.lambda(), idx), order.place()), idx};
}

// ---------------------------------------------------------------------------

GlobalIdealMatrix::GlobalIdealMatrix(RingKind ring, int n) : ring_(ring), n_(n), support_(Support::Constant(n, n, true)) {
  if (n <= 0) throw InvalidArgument("ideal matrix size must be positive");
}

GlobalIdealMatrix GlobalIdealMatrix::from_entries(
    RingKind ring, const std::vector<std::vector<std::optional<FractionalIdeal>>>& entries) {
  const int n = static_cast<int>(entries.size());
  GlobalIdealMatrix out(ring, n);
  std::map<MaximalIdeal, IntMatrix> local;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != n) throw ValidationError("ideal matrix rows must have length n");
    for (int j = 0; j < n; ++j) {
      const auto& e = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out.support_(i, j) = e.has_value();
      if (!e) continue;
      if (e->ring() != ring) throw ValidationError("entry lives over another ring");
      for (const auto& [m, v] : e->factors()) {
        auto [it, fresh] = local.try_emplace(m, IntMatrix::Zero(n, n));
        it->second(i, j) = v;
      }
    }
  }
  for (auto& [m, x] : local) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!out.support_(i, j)) x(i, j) = kZero;
    out.local_.emplace(m, x);
  }
  return out;
}

GlobalIdealMatrix GlobalIdealMatrix::from_local(RingKind ring, const MaximalIdeal& m, const IntMatrix& x) {
  GlobalIdealMatrix out(ring, static_cast<int>(x.rows()));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) out.support_(i, j) = !is_zero_exp(x(i, j));
  out.set_local(m, x);
  return out;
}

void GlobalIdealMatrix::set_local(const MaximalIdeal& m, const IntMatrix& x) {
  if (m.ring != ring_) throw InvalidArgument("place " + m.label() + " lives over another ring");
  if (x.rows() != n_ || x.cols() != n_) throw InvalidArgument("local matrix has the wrong size");
  Support s(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s(i, j) = !is_zero_exp(x(i, j));
  if (!(s == support_)) {
    throw ValidationError("local data at " + m.label() + " has a different support");
  }
  local_[m] = x;
  prune();
}

void GlobalIdealMatrix::prune() {
  std::erase_if(local_, [this](const auto& kv) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (support_(i, j) && kv.second(i, j) != 0) return false;
    return true;
  });
}

GlobalIdealMatrix GlobalIdealMatrix::from_locals(RingKind ring, const Support& support,
                                                 const std::map<MaximalIdeal, IntMatrix>& local) {
  GlobalIdealMatrix out(ring, static_cast<int>(support.rows()));
  out.support_ = support;
  for (const auto& [m, x] : local) out.set_local(m, x);
  return out;
}

std::vector<MaximalIdeal> GlobalIdealMatrix::places() const {
  std::vector<MaximalIdeal> out;
  for (const auto& [m, x] : local_) out.push_back(m);
  return out;
}

IntMatrix GlobalIdealMatrix::local(const MaximalIdeal& m) const {
  if (auto it = local_.find(m); it != local_.end()) return it->second;
  return generic_local();
}

IntMatrix GlobalIdealMatrix::generic_local() const {
  IntMatrix x(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) x(i, j) = support_(i, j) ? 0 : kZero;
  return x;
}

std::optional<FractionalIdeal> GlobalIdealMatrix::entry(int i, int j) const {
  if (!support_(i, j)) return std::nullopt;
  std::vector<std::pair<MaximalIdeal, Int>> f;
  for (const auto& [m, x] : local_) f.emplace_back(m, x(i, j));
  return FractionalIdeal::from_factors(ring_, f);
}

GlobalIdealMatrix GlobalIdealMatrix::operator*(const GlobalIdealMatrix& other) const {
  if (ring_ != other.ring_ || n_ != other.n_) throw InvalidArgument("product of incompatible ideal matrices");
  GlobalIdealMatrix out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      bool any = false;
      for (int k = 0; k < n_ && !any; ++k) any = support_(i, k) && other.support_(k, j);
      out.support_(i, j) = any;
    }
  std::vector<MaximalIdeal> ps = places();
  for (const auto& m : other.places()) ps.push_back(m);
  for (const auto& m : ps) out.local_[m] = minplus(local(m), other.local(m));
  out.prune();
  return out;
}

GlobalIdealMatrix GlobalIdealMatrix::scaled(const FractionalIdeal& c) const {
  if (c.ring() != ring_) throw InvalidArgument("scalar ideal lives over another ring");
  GlobalIdealMatrix out = *this;
  for (const auto& [m, v] : c.factors()) out.local_[m] = shifted(local(m), v);
  out.prune();
  return out;
}

GlobalIdealMatrix GlobalIdealMatrix::submatrix(const std::vector<int>& idx) const {
  GlobalIdealMatrix out(ring_, static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out.support_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = support_(idx[i], idx[j]);
  for (const auto& [m, x] : local_) out.local_[m] = sgo::submatrix(x, idx);
  out.prune();
  return out;
}

bool operator==(const GlobalIdealMatrix& a, const GlobalIdealMatrix& b) {
  return a.ring_ == b.ring_ && a.n_ == b.n_ && a.support_ == b.support_ && a.local_ == b.local_;
}

GlobalTiledOrder::GlobalTiledOrder(GlobalIdealMatrix data) : data_(std::move(data)) {
  // The generic place carries the support pattern; every stored place must
  // give a valid local order.
  validate_order(data_.generic_local());
  for (const auto& m : data_.places()) validate_order(data_.local(m), m);
}

std::vector<std::vector<int>> GlobalTiledOrder::prime_blocks() const {
  return validate_order(data_.generic_local()).prime_blocks();
}

ExponentMatrix localize(const GlobalTiledOrder& order, const MaximalIdeal& m) {
  return validate_order(order.data().local(m), m);
}

IdealMatrix localize(const GlobalTiledOrder& order, const GlobalIdealMatrix& x, const MaximalIdeal& m) {
  return IdealMatrix(localize(order, m), x.local(m));
}

GlobalHereditaryResult is_hereditary_global(const GlobalTiledOrder& order) {
  GlobalHereditaryResult out;
  for (const auto& m : order.places()) {
    if (!is_hereditary_local(localize(order, m))) {
      out.hereditary = false;
      out.failing.push_back(m);
    }
  }
  return out;
}

}  // namespace sgo
