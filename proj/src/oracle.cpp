#include "sgo/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace sgo {

namespace {

using Eigen::Index;

Int md(Int a, Int q) {
  a %= q;
  return a < 0 ? a + q : a;
}

Int mulmod(Int a, Int b, Int q) { return static_cast<Int>(static_cast<__int128>(a) * b % q); }

Int inv_mod(Int a, Int q) {
  Int g = q, x = 0, r = md(a, q), y = 1;
  while (r != 0) {
    const Int t = g / r;
    std::tie(g, r) = std::make_pair(r, g - t * r);
    std::tie(x, y) = std::make_pair(y, x - t * y);
  }
  if (g != 1) throw InternalError("element is not invertible modulo " + std::to_string(q));
  return md(x, q);
}

Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Row-reduced echelon subspace of F_p^n.
class Subspace {
 public:
  Subspace(int n, Int p) : n_(n), p_(p) {}

  OracleVector reduce(OracleVector v) const {
    for (auto& x : v) x = md(x, p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Int c = v[static_cast<std::size_t>(piv_[k])];
      if (c == 0) continue;
      const auto& row = rows_[k];
      for (int j : support_[k]) v[static_cast<std::size_t>(j)] = md(v[static_cast<std::size_t>(j)] - c * row[static_cast<std::size_t>(j)], p_);
    }
    return v;
  }

  bool contains(const OracleVector& v) const { return is_zero(reduce(v)); }

  bool add(const OracleVector& v0) {
    OracleVector v = reduce(v0);
    int c = -1;
    for (int j = 0; j < n_; ++j)
      if (v[static_cast<std::size_t>(j)] != 0) {
        c = j;
        break;
      }
    if (c < 0) return false;
    const Int s = inv_mod(v[static_cast<std::size_t>(c)], p_);
    for (auto& x : v) x = mulmod(x, s, p_);
    const auto vs = nonzeros(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Int f = rows_[k][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j : vs) rows_[k][static_cast<std::size_t>(j)] = md(rows_[k][static_cast<std::size_t>(j)] - f * v[static_cast<std::size_t>(j)], p_);
      support_[k] = nonzeros(rows_[k]);
    }
    rows_.push_back(std::move(v));
    piv_.push_back(c);
    support_.push_back(vs);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return n_; }
  bool full() const { return rank() == n_; }

  // Rows sorted by pivot.
  std::vector<OracleVector> basis() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return piv_[a] < piv_[b]; });
    std::vector<OracleVector> out;
    for (auto k : order) out.push_back(rows_[k]);
    return out;
  }
  std::vector<int> pivots() const {
    auto p = piv_;
    std::sort(p.begin(), p.end());
    return p;
  }
  // Basis of { x : f(x) = 0 for every row f }.
  std::vector<OracleVector> annihilator() const {
    std::vector<bool> is_piv(static_cast<std::size_t>(n_), false);
    for (int c : piv_) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<OracleVector> out;
    for (int f = 0; f < n_; ++f) {
      if (is_piv[static_cast<std::size_t>(f)]) continue;
      OracleVector x(static_cast<std::size_t>(n_), 0);
      x[static_cast<std::size_t>(f)] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k)
        x[static_cast<std::size_t>(piv_[k])] = md(-rows_[k][static_cast<std::size_t>(f)], p_);
      out.push_back(std::move(x));
    }
    return out;
  }

  static bool is_zero(const OracleVector& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
  }

 private:
  static std::vector<int> nonzeros(const OracleVector& v) {
    std::vector<int> out;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) out.push_back(static_cast<int>(j));
    return out;
  }
  int n_;
  Int p_;
  std::vector<OracleVector> rows_;
  std::vector<int> piv_;
  std::vector<std::vector<int>> support_;
};

// Coefficient vectors c with sum_j c_j rows[j] = 0.
std::vector<OracleVector> left_kernel(const std::vector<OracleVector>& rows, std::size_t width, Int p) {
  const std::size_t r = rows.size();
  Subspace functionals(static_cast<int>(r), p);
  for (std::size_t col = 0; col < width; ++col) {
    OracleVector f(r, 0);
    bool nz = false;
    for (std::size_t j = 0; j < r; ++j) {
      f[j] = md(rows[j][col], p);
      nz = nz || f[j] != 0;
    }
    if (nz) functionals.add(f);
    if (functionals.full()) break;
  }
  return functionals.annihilator();
}

OracleVector mod_vec(OracleVector v, Int q) {
  for (auto& x : v) x = md(x, q);
  return v;
}

OracleVector combine(const std::vector<OracleVector>& basis, const OracleVector& coeffs, Int q, std::size_t n) {
  OracleVector out(n, 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] = md(out[k] + coeffs[j] * basis[j][k], q);
  }
  return out;
}

IntMatrix matmul_mod(const IntMatrix& a, const IntMatrix& b, Int q) {
  IntMatrix c = a * b;
  for (Index i = 0; i < c.size(); ++i) c.data()[i] = md(c.data()[i], q);
  return c;
}

Int trace_of_power(IntMatrix m, Int e, Int q) {
  IntMatrix r = IntMatrix::Identity(m.rows(), m.cols());
  while (e > 0) {
    if (e & 1) r = matmul_mod(r, m, q);
    e >>= 1;
    if (e > 0) m = matmul_mod(m, m, q);
  }
  return md(r.trace(), q);
}

// Radical of a unital subalgebra C (basis in RREF, identity inside C) of
// A mod p, by p-power traces of the regular representation of C.
std::vector<OracleVector> corner_radical(const StructureConstantOrder& a, const Subspace& c) {
  const Int p = a.p;
  const auto cb = c.basis();
  const auto piv = c.pivots();
  const auto d = cb.size();
  if (d == 0) return {};
  const auto n = static_cast<std::size_t>(a.rank);
  // Left multiplication matrix of z on C, in RREF coordinates (entries at pivots).
  auto lmat = [&](const OracleVector& z) {
    IntMatrix m(static_cast<Index>(d), static_cast<Index>(d));
    for (std::size_t k = 0; k < d; ++k) {
      const auto w = mod_vec(a.multiply(z, cb[k]), p);
      for (std::size_t r = 0; r < d; ++r) m(static_cast<Index>(r), static_cast<Index>(k)) = w[static_cast<std::size_t>(piv[r])];
    }
    return m;
  };
  int l = 0;
  for (Int pw = p; pw <= static_cast<Int>(d); pw *= p) ++l;
  std::vector<OracleVector> ideal = cb;
  for (int i = 0; i <= l && !ideal.empty(); ++i) {
    const Int pi = ipow(p, i);
    const Int q = pi * p;
    std::vector<OracleVector> phi;
    for (const auto& x : ideal) {
      OracleVector row(d, 0);
      for (std::size_t k = 0; k < d; ++k) {
        const Int t = trace_of_power(lmat(mod_vec(a.multiply(x, cb[k]), p)), pi, q);
        if (t % pi != 0) throw InternalError("trace of a p-power is not divisible as expected");
        row[k] = (t / pi) % p;
      }
      phi.push_back(std::move(row));
    }
    std::vector<OracleVector> next;
    for (const auto& coeffs : left_kernel(phi, d, p)) next.push_back(combine(ideal, coeffs, p, n));
    ideal = std::move(next);
  }
  Subspace out(a.rank, p);
  for (const auto& v : ideal) out.add(v);
  return out.basis();
}

// e x f for all basis x, as an RREF subspace.
Subspace peirce(const StructureConstantOrder& a, const OracleVector& e, const OracleVector& f) {
  Subspace s(a.rank, a.p);
  for (int k = 0; k < a.rank; ++k) {
    const auto v = mod_vec(a.multiply(a.multiply(e, a.basis_vector(k)), f), a.p);
    s.add(v);
  }
  return s;
}

struct Adic {
  Int v = 0;
  Int unit = 1;  // modulo p^2
};

// Image of Z or Z[i] in Z_p at a place with residue field F_p.
class Embedding {
 public:
  explicit Embedding(const MaximalIdeal& m) : m_(m), p_(m.residue_characteristic) {
    if (m.residue_field_size != p_) throw UnsupportedPlace("oracle needs residue field F_p, got " + m.label());
    if (m.ring == RingKind::GaussianIntegers) {
      const auto fac = factor_rational_prime(m.ring, p_);
      for (const auto& [mm, e] : fac)
        if (mm == m && e != 1) throw UnsupportedPlace("oracle does not handle the ramified place " + m.label());
    }
  }

  Adic image(const GaussianRational& q) const {
    const Adic a = image(q.num), b = image(q.den);
    const Int p2 = p_ * p_;
    return {a.v - b.v, mulmod(a.unit, inv_mod(b.unit, p2), p2)};
  }

 private:
  Adic image(const Gaussian& z) const {
    if (z.is_zero()) throw InternalError("zero scalar in a structure constant");
    const Int v = valuation(z, m_);
    const Int q = ipow(p_, static_cast<int>(v) + 2);
    Int val = md(z.re, q);
    if (z.im != 0) val = md(val + mulmod(md(z.im, q), root(static_cast<int>(v) + 2), q), q);
    const Int pv = ipow(p_, static_cast<int>(v));
    if (val % pv != 0) throw InternalError("valuation mismatch in the p-adic embedding");
    return {v, md(val / pv, p_ * p_)};
  }

  // i in Z/p^k with a + b i in the maximal ideal, m = (a + b i).
  Int root(int k) const {
    const Int q = ipow(p_, k);
    const Int a = m_.generator.re, b = m_.generator.im;
    Int r = md(-mulmod(md(a, p_), inv_mod(md(b, p_), p_), p_), p_);
    for (int it = 0; it < k + 1; ++it) {
      const Int f = md(mulmod(r, r, q) + 1, q);
      r = md(r - mulmod(f, inv_mod(md(2 * r, q), q), q), q);
    }
    if (md(mulmod(r, r, q) + 1, q) != 0) throw InternalError("Hensel lift of i failed");
    return r;
  }

  MaximalIdeal m_;
  Int p_;
};

}  // namespace

OracleVector StructureConstantOrder::basis_vector(int k) const {
  OracleVector v(static_cast<std::size_t>(rank), 0);
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

OracleVector StructureConstantOrder::multiply(const OracleVector& x, const OracleVector& y) const {
  const Int q = modulus();
  OracleVector out(static_cast<std::size_t>(rank), 0);
  std::vector<int> ys;
  for (int b = 0; b < rank; ++b)
    if (y[static_cast<std::size_t>(b)] != 0) ys.push_back(b);
  for (int a = 0; a < rank; ++a) {
    const Int xa = x[static_cast<std::size_t>(a)];
    if (xa == 0) continue;
    for (int b : ys) {
      const Int s = mulmod(xa, y[static_cast<std::size_t>(b)], q);
      for (const auto& [c, coef] : table[static_cast<std::size_t>(a * rank + b)])
        out[static_cast<std::size_t>(c)] = md(out[static_cast<std::size_t>(c)] + mulmod(s, coef, q), q);
    }
  }
  return out;
}

StructureConstantOrder from_dense_table(Int p, const std::vector<std::vector<std::vector<Int>>>& c,
                                        const OracleVector& one, std::vector<OracleVector> idempotents) {
  if (!is_rational_prime(p)) throw InvalidArgument("p must be prime");
  StructureConstantOrder a;
  a.p = p;
  a.rank = static_cast<int>(c.size());
  if (a.rank > kOracleRankCap) throw RankCapExceeded("rank " + std::to_string(a.rank) + " exceeds the oracle cap");
  const Int q = a.modulus();
  a.table.resize(static_cast<std::size_t>(a.rank * a.rank));
  for (int i = 0; i < a.rank; ++i) {
    a.labels.push_back("b" + std::to_string(i));
    if (static_cast<int>(c[static_cast<std::size_t>(i)].size()) != a.rank) throw InvalidArgument("table is not square");
    for (int j = 0; j < a.rank; ++j) {
      const auto& v = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (static_cast<int>(v.size()) != a.rank) throw InvalidArgument("table entry has the wrong length");
      for (int k = 0; k < a.rank; ++k)
        if (md(v[static_cast<std::size_t>(k)], q) != 0)
          a.table[static_cast<std::size_t>(i * a.rank + j)].emplace_back(k, md(v[static_cast<std::size_t>(k)], q));
    }
  }
  a.one = mod_vec(one, q);
  a.idempotents = idempotents.empty() ? std::vector<OracleVector>{a.one} : std::move(idempotents);
  return a;
}

void check_associativity(const StructureConstantOrder& a) {
  const int n = a.rank;
  const Int q = a.modulus();
  using Terms = std::vector<std::pair<int, Int>>;
  auto cell = [&](int x, int y) -> const Terms& { return a.table[static_cast<std::size_t>(x * n + y)]; };
  auto normal = [&](Terms t) {
    std::sort(t.begin(), t.end());
    Terms out;
    for (const auto& [c, v] : t) {
      if (!out.empty() && out.back().first == c) out.back().second = md(out.back().second + v, q);
      else out.emplace_back(c, v);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Terms lhs, rhs;
        for (const auto& [t, c1] : cell(i, j))
          for (const auto& [u, c2] : cell(t, k)) lhs.emplace_back(u, mulmod(c1, c2, q));
        for (const auto& [t, c1] : cell(j, k))
          for (const auto& [u, c2] : cell(i, t)) rhs.emplace_back(u, mulmod(c1, c2, q));
        if (lhs.empty() && rhs.empty()) continue;
        if (normal(std::move(lhs)) != normal(std::move(rhs)))
          throw AssociativityFailure("(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(k) +
                                     " differs from b" + std::to_string(i) + " (b" + std::to_string(j) + " b" +
                                     std::to_string(k) + ")");
      }
  if (a.multiply(a.one, a.one) != a.one) throw AssociativityFailure("identity is not idempotent");
  for (int i = 0; i < n; ++i)
    if (a.multiply(a.one, a.basis_vector(i)) != a.basis_vector(i) ||
        a.multiply(a.basis_vector(i), a.one) != a.basis_vector(i))
      throw AssociativityFailure("identity does not act trivially on b" + std::to_string(i));
}

int flattened_rank(const GradedOrder& lambda) {
  int r = 0;
  for (const auto& x : lambda.components) r += static_cast<int>(x.support().count());
  return r;
}

StructureConstantOrder flatten(const GradedOrder& lambda, const MaximalIdeal& m) {
  if (m.ring != lambda.ring()) throw InvalidArgument("place lives over another ring");
  if (lambda.local_place && !(*lambda.local_place == m))
    throw InvalidArgument("order is local at " + lambda.local_place->label() + ", not " + m.label());
  const int rank = flattened_rank(lambda);
  if (rank > kOracleRankCap)
    throw RankCapExceeded("rank " + std::to_string(rank) + " exceeds the oracle cap of " + std::to_string(kOracleRankCap));
  const Embedding emb(m);
  const auto& group = *lambda.group;
  const std::size_t order = group.order();
  const int n = lambda.size();

  StructureConstantOrder a;
  a.p = m.residue_characteristic;
  a.rank = rank;
  const Int q = a.modulus();

  std::vector<IntMatrix> exps;
  std::vector<std::vector<int>> index(order, std::vector<int>(static_cast<std::size_t>(n * n), -1));
  struct Slot {
    int i, j;
    std::size_t g;
  };
  std::vector<Slot> slots;
  for (std::size_t g = 0; g < order; ++g) {
    const auto& x = lambda.component(g);
    exps.push_back(x.local(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x.support()(i, j)) {
          index[g][static_cast<std::size_t>(i * n + j)] = static_cast<int>(slots.size());
          slots.push_back({i, j, g});
          a.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1) + "t" +
                             to_cycle_string(group.element(g)));
        }
  }

  std::vector<std::vector<Adic>> sig(order, std::vector<Adic>(order));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) sig[g][h] = emb.image(lambda.twist[g][h]);

  a.table.resize(static_cast<std::size_t>(rank * rank));
  for (int u = 0; u < rank; ++u)
    for (int w = 0; w < rank; ++w) {
      const auto& su = slots[static_cast<std::size_t>(u)];
      const auto& sw = slots[static_cast<std::size_t>(w)];
      if (su.j != sw.i) continue;
      const std::size_t gh = group.multiply(su.g, sw.g);
      const int target = index[gh][static_cast<std::size_t>(su.i * n + sw.j)];
      if (target < 0) throw InternalError("components are not closed under multiplication");
      const Adic s = sig[su.g][sw.g];
      const Int e = exps[su.g](su.i, su.j) + exps[sw.g](sw.i, sw.j) + s.v - exps[gh](su.i, sw.j);
      if (e < 0) throw InternalError("product leaves the order at " + a.labels[static_cast<std::size_t>(u)] + " * " +
                                     a.labels[static_cast<std::size_t>(w)]);
      if (e >= 2) continue;
      const Int coef = md(ipow(a.p, static_cast<int>(e)) * s.unit, q);
      if (coef != 0) a.table[static_cast<std::size_t>(u * rank + w)].emplace_back(target, coef);
    }

  a.one.assign(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < n; ++i) {
    const int k = index[0][static_cast<std::size_t>(i * n + i)];
    if (k < 0 || exps[0](i, i) != 0) throw InternalError("Delta has no unit diagonal");
    a.one[static_cast<std::size_t>(k)] = 1;
    a.idempotents.push_back(a.basis_vector(k));
  }
  return a;
}

std::vector<OracleVector> radical_mod_m(const StructureConstantOrder& a) {
  const Int p = a.p;
  std::vector<OracleVector> es;
  for (const auto& e : a.idempotents) {
    auto r = mod_vec(e, p);
    if (!Subspace::is_zero(r)) es.push_back(std::move(r));
  }
  // The idempotents must be orthogonal and sum to one modulo p.
  OracleVector sum(static_cast<std::size_t>(a.rank), 0);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = md(sum[k] + es[i][k], p);
    for (std::size_t j = 0; j < es.size(); ++j) {
      const auto prod = mod_vec(a.multiply(es[i], es[j]), p);
      if (prod != (i == j ? es[i] : OracleVector(sum.size(), 0)))
        throw InvalidArgument("idempotents are not orthogonal modulo p");
    }
  }
  if (sum != mod_vec(a.one, p)) throw InvalidArgument("idempotents do not sum to one modulo p");

  Subspace rad(a.rank, p);
  std::vector<std::vector<OracleVector>> diag_rad;
  std::vector<Subspace> diag_rad_space;
  for (const auto& e : es) {
    const Subspace c = peirce(a, e, e);
    auto r = corner_radical(a, c);
    Subspace rs(a.rank, p);
    for (const auto& v : r) {
      rs.add(v);
      rad.add(v);
    }
    diag_rad.push_back(std::move(r));
    diag_rad_space.push_back(std::move(rs));
  }
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      const auto pij = peirce(a, es[i], es[j]).basis();
      if (pij.empty()) continue;
      const auto pji = peirce(a, es[j], es[i]).basis();
      // x in e_i A e_j lies in J iff (e_j A e_i) x lies in J(e_j A e_j).
      std::vector<OracleVector> images;
      for (const auto& x : pij) {
        OracleVector row;
        for (const auto& y : pji) {
          const auto res = diag_rad_space[j].reduce(mod_vec(a.multiply(y, x), p));
          row.insert(row.end(), res.begin(), res.end());
        }
        images.push_back(std::move(row));
      }
      if (pji.empty()) {
        for (const auto& x : pij) rad.add(x);
        continue;
      }
      for (const auto& coeffs : left_kernel(images, images.front().size(), p))
        rad.add(combine(pij, coeffs, p, static_cast<std::size_t>(a.rank)));
    }
  return rad.basis();
}

RadicalCertificate certify_radical(const StructureConstantOrder& a, const std::vector<OracleVector>& rad) {
  const Int p = a.p;
  const int n = a.rank;
  RadicalCertificate cert;
  Subspace j(n, p);
  for (const auto& v : rad) j.add(v);
  const auto jb = j.basis();

  cert.ideal = true;
  for (int k = 0; k < n && cert.ideal; ++k)
    for (const auto& r : jb) {
      if (!j.contains(mod_vec(a.multiply(a.basis_vector(k), r), p)) ||
          !j.contains(mod_vec(a.multiply(r, a.basis_vector(k)), p))) {
        cert.ideal = false;
        break;
      }
    }

  std::vector<OracleVector> power = jb;
  int index = 1;
  while (!power.empty() && index <= n + 1) {
    Subspace next(n, p);
    for (const auto& x : power)
      for (const auto& r : jb) next.add(mod_vec(a.multiply(x, r), p));
    power = next.basis();
    ++index;
  }
  cert.nilpotent = power.empty();
  cert.nilpotency_index = cert.nilpotent ? (jb.empty() ? 0 : index) : 0;

  // Quotient by J on the complement spanned by the non-pivot basis vectors.
  const auto piv = j.pivots();
  std::vector<int> free;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(piv.begin(), piv.end(), k)) free.push_back(k);
  const auto fq = free.size();
  auto project = [&](const OracleVector& v) {
    const auto r = j.reduce(v);
    OracleVector out(fq, 0);
    for (std::size_t k = 0; k < fq; ++k) out[k] = r[static_cast<std::size_t>(free[k])];
    return out;
  };
  std::vector<std::vector<std::vector<Int>>> table(fq, std::vector<std::vector<Int>>(fq));
  for (std::size_t x = 0; x < fq; ++x)
    for (std::size_t y = 0; y < fq; ++y)
      table[x][y] = project(mod_vec(a.multiply(a.basis_vector(free[x]), a.basis_vector(free[y])), p));
  std::vector<OracleVector> ids;
  for (const auto& e : a.idempotents) {
    auto v = project(mod_vec(e, p));
    if (!Subspace::is_zero(v)) ids.push_back(std::move(v));
  }
  if (fq == 0) {
    cert.quotient_semisimple = true;
  } else {
    const auto quotient = from_dense_table(p, table, project(mod_vec(a.one, p)), ids);
    cert.quotient_semisimple = radical_mod_m(quotient).empty();
  }
  return cert;
}

bool hereditary_oracle(const StructureConstantOrder& a) {
  const Int p = a.p;
  const Int q = a.modulus();
  const int n = a.rank;
  const auto rad = radical_mod_m(a);
  if (rad.empty()) return true;  // A/pA semisimple: J = pA is invertible

  std::vector<std::vector<OracleVector>> left(static_cast<std::size_t>(n));   // b_k r
  std::vector<std::vector<OracleVector>> right(static_cast<std::size_t>(n));  // r b_k
  for (int k = 0; k < n; ++k)
    for (const auto& r : rad) {
      left[static_cast<std::size_t>(k)].push_back(mod_vec(a.multiply(a.basis_vector(k), r), p));
      right[static_cast<std::size_t>(k)].push_back(mod_vec(a.multiply(r, a.basis_vector(k)), p));
    }

  auto side = [&](bool left_side) {
    // Y = { y : y J = 0 } (left) or { y : J y = 0 } (right).
    const auto& prods = left_side ? left : right;
    Subspace functionals(n, p);
    for (std::size_t s = 0; s < rad.size() && !functionals.full(); ++s)
      for (int c = 0; c < n && !functionals.full(); ++c) {
        OracleVector f(static_cast<std::size_t>(n), 0);
        bool nz = false;
        for (int k = 0; k < n; ++k) {
          f[static_cast<std::size_t>(k)] = prods[static_cast<std::size_t>(k)][s][static_cast<std::size_t>(c)];
          nz = nz || f[static_cast<std::size_t>(k)] != 0;
        }
        if (nz) functionals.add(f);
      }
    const auto ys = functionals.annihilator();

    Subspace span(n, p);
    for (const auto& r : rad) span.add(r);
    for (const auto& y : ys) {
      for (int k = 0; k < n && !span.full(); ++k)
        span.add(mod_vec(left_side ? a.multiply(y, a.basis_vector(k)) : a.multiply(a.basis_vector(k), y), p));
      for (const auto& r : rad) {
        if (span.full()) break;
        const auto prod = left_side ? a.multiply(y, r) : a.multiply(r, y);
        OracleVector div(prod.size());
        for (std::size_t k = 0; k < prod.size(); ++k) {
          if (md(prod[k], q) % p != 0) throw InternalError("annihilator product is not divisible by p");
          div[k] = md(prod[k], q) / p;
        }
        span.add(div);
      }
    }
    return span.full();
  };
  return side(true) && side(false);
}

}  // namespace sgo
