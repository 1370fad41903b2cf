#include "sgo/graded.hpp"

#include <deque>
#include <set>

namespace sgo {

namespace {

bool is_one(const GaussianRational& q) { return q == GaussianRational(Gaussian{1}); }

Int twist_valuation(const GaussianRational& q, const MaximalIdeal& m) { return valuation(q, m); }

void require_ring(RingKind ring, const GaussianRational& q, const std::string& what) {
  if (q.is_zero()) throw ValidationError(what + " is zero");
  if (ring == RingKind::RationalIntegers && (q.num.im != 0 || q.den.im != 0))
    throw ValidationError(what + " is not rational but the base ring is Z");
}

std::string pair_label(const FiniteGroup& g, std::size_t a, std::size_t b) {
  return "(" + to_cycle_string(g.element(a)) + ", " + to_cycle_string(g.element(b)) + ")";
}

// A scalar ideal c with x = c Delta, if there is one.
std::optional<FractionalIdeal> scalar_ideal(const GlobalIdealMatrix& x, const GlobalTiledOrder& delta,
                                            const std::optional<MaximalIdeal>& local_place) {
  if (x.support() != delta.data().support()) return std::nullopt;
  std::set<MaximalIdeal> places;
  if (local_place) {
    places.insert(*local_place);
  } else {
    for (const auto& m : x.places()) places.insert(m);
    for (const auto& m : delta.places()) places.insert(m);
  }
  std::vector<std::pair<MaximalIdeal, Int>> f;
  for (const auto& m : places) {
    auto s = constant_shift(x.local(m), delta.data().local(m));
    if (!s) return std::nullopt;
    if (*s != 0) f.emplace_back(m, *s);
  }
  return FractionalIdeal::from_factors(delta.ring(), f);
}

bool delta_is_prime(const GradedOrder& lambda) { return lambda.delta.prime_blocks().size() == 1; }

}  // namespace

std::string to_string(const Context& ctx) { return ctx ? ctx->label() : std::string("global"); }

std::vector<MaximalIdeal> GradedOrder::relevant_places() const {
  if (local_place) return {*local_place};
  std::set<MaximalIdeal> out;
  for (const auto& m : delta.places()) out.insert(m);
  for (const auto& x : components)
    for (const auto& m : x.places()) out.insert(m);
  for (const auto& row : twist)
    for (const auto& q : row) {
      const FractionalIdeal c = FractionalIdeal::principal(ring(), q);
      for (const auto& [m, v] : c.factors()) out.insert(m);
    }
  return {out.begin(), out.end()};
}

std::vector<std::vector<GaussianRational>> trivial_twist(const FiniteGroup& g) {
  return std::vector<std::vector<GaussianRational>>(g.order(), std::vector<GaussianRational>(g.order(), Gaussian{1}));
}

CocycleViolation::CocycleViolation(std::size_t g_, std::size_t h_, std::size_t k_, const std::string& what)
    : ValidationError("CocycleViolation: " + what), g(g_), h(h_), k(k_) {}

ActionDoesNotNormalize::ActionDoesNotNormalize(std::size_t g_, const std::string& what)
    : ValidationError("ActionDoesNotNormalize: " + what), g(g_) {}

GradedOrder make_graded_order(GroupPtr group, GlobalTiledOrder delta, std::vector<GlobalIdealMatrix> components,
                              std::vector<std::vector<GaussianRational>> twist,
                              std::optional<MaximalIdeal> local_place) {
  const std::size_t order = group->order();
  if (components.size() != order) throw ValidationError("need one component per group element");
  for (const auto& x : components)
    if (x.size() != delta.size() || x.ring() != delta.ring()) throw ValidationError("component has the wrong shape");
  if (!(components[0] == delta.data())) throw ValidationError("identity component differs from Delta");
  if (twist.size() != order) throw ValidationError("twist table has the wrong size");
  bool trivial = true;
  for (std::size_t g = 0; g < order; ++g) {
    if (twist[g].size() != order) throw ValidationError("twist table has the wrong size");
    for (std::size_t h = 0; h < order; ++h) {
      require_ring(delta.ring(), twist[g][h], "twist value " + pair_label(*group, g, h));
      trivial = trivial && is_one(twist[g][h]);
    }
    if (!is_one(twist[0][g]) || !is_one(twist[g][0])) throw ValidationError("twist is not normalized at the identity");
  }
  if (local_place && local_place->ring != delta.ring()) throw ValidationError("local place lives over another ring");
  if (!trivial) {
    if (order > 256) throw InvalidArgument("nontrivial twists are supported for |G| <= 256");
    for (std::size_t g = 0; g < order; ++g)
      for (std::size_t h = 0; h < order; ++h)
        for (std::size_t k = 0; k < order; ++k) {
          const auto gh = group->multiply(g, h);
          const auto hk = group->multiply(h, k);
          if (!(twist[g][h] * twist[gh][k] == twist[h][k] * twist[g][hk]))
            throw CocycleViolation(g, h, k,
                                   "twist fails the cocycle identity at (" + to_cycle_string(group->element(g)) + ", " +
                                       to_cycle_string(group->element(h)) + ", " +
                                       to_cycle_string(group->element(k)) + ")");
        }
  }
  GradedOrder out{std::move(group), std::move(delta), std::move(components), std::move(twist), std::move(local_place),
                  "explicit", {}};
  return out;
}

StrongGradingResult validate_strong_grading(const GradedOrder& lambda) {
  const auto& grp = *lambda.group;
  const auto places = lambda.relevant_places();
  const int n = lambda.size();
  for (std::size_t g = 0; g < grp.order(); ++g)
    for (std::size_t h = 0; h < grp.order(); ++h) {
      const auto gh = grp.multiply(g, h);
      const auto& xg = lambda.components[g];
      const auto& xh = lambda.components[h];
      const auto& xgh = lambda.components[gh];
      // Support of the product.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          bool any = false;
          for (int k = 0; k < n && !any; ++k) any = xg.support()(i, k) && xh.support()(k, j);
          if (any != xgh.support()(i, j))
            return {false, std::make_pair(g, h),
                    "support of the product differs at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"};
        }
      std::vector<MaximalIdeal> check = places;
      for (const auto& m : check) {
        const IntMatrix prod = shifted(minplus(xg.local(m), xh.local(m)), twist_valuation(lambda.twist[g][h], m));
        const IntMatrix want = xgh.local(m);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (prod(i, j) != want(i, j))
              return {false, std::make_pair(g, h),
                      "at " + m.label() + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") of the product has valuation " +
                          (is_zero_exp(prod(i, j)) ? std::string("inf") : std::to_string(prod(i, j))) +
                          ", the component has " +
                          (is_zero_exp(want(i, j)) ? std::string("inf") : std::to_string(want(i, j)))};
      }
      // Outside the relevant places every matrix is 0 on its support and the
      // twist is a unit, so the support check covers them.
    }
  return {};
}

GradedOrder construct_from_pic(const GlobalTiledOrder& delta, const GlobalIdealMatrix& x, std::optional<int> n,
                               std::optional<MaximalIdeal> local_place) {
  if (x.size() != delta.size() || x.ring() != delta.ring()) throw InvalidArgument("bimodule and order do not match");
  const int bound = n ? *n : static_cast<int>(kMaxGroupOrder);
  if (bound < 1) throw InvalidArgument("order of X must be positive");
  std::vector<GlobalIdealMatrix> powers{delta.data()};
  std::optional<int> least;
  std::optional<FractionalIdeal> wrap;
  for (int k = 1; k <= bound; ++k) {
    powers.push_back(powers.back() * x);
    if (auto c = scalar_ideal(powers.back(), delta, local_place)) {
      if (!least) least = k;
      if (!n || k == *n) {
        wrap = c;
        break;
      }
    }
  }
  if (!wrap) {
    throw NotFiniteOrder(n ? "X^" + std::to_string(*n) + " is not a scalar multiple of Delta"
                           : "no power of X up to " + std::to_string(bound) + " is a scalar multiple of Delta");
  }
  const int order = n ? *n : *least;
  const GaussianRational c = is_principal(*wrap).value();

  const GroupPtr group = FiniteGroup::cyclic(order);
  const std::size_t gen = order == 1 ? 0 : group->index_of(group->generators().front());
  std::vector<std::size_t> index_of_power(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) index_of_power[static_cast<std::size_t>(i)] = group->power(gen, i);
  std::vector<GlobalIdealMatrix> comps(group->order(), delta.data());
  auto twist = trivial_twist(*group);
  for (int i = 0; i < order; ++i) {
    comps[index_of_power[static_cast<std::size_t>(i)]] = powers[static_cast<std::size_t>(i)];
    for (int j = 0; j < order; ++j)
      if (i + j >= order) twist[index_of_power[static_cast<std::size_t>(i)]][index_of_power[static_cast<std::size_t>(j)]] = c.inverse();
  }
  GradedOrder out = make_graded_order(group, delta, std::move(comps), std::move(twist), local_place);
  out.kind = "pic-construction";
  if (least && *least < order)
    out.warnings.push_back("NonMinimalOrder: X^" + std::to_string(*least) + " is already a scalar multiple of Delta");
  if (auto r = validate_strong_grading(out); !r.strong) throw InternalError("cyclic construction is not strong: " + r.detail);
  return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.perm.size() != b.perm.size()) throw InvalidArgument("monomial matrices of different sizes");
  MonomialMatrix out;
  out.perm = compose(a.perm, b.perm);
  out.scalars.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i)
    out.scalars[i] = a.scalars[i] * b.scalars[static_cast<std::size_t>(a.perm[i])];
  return out;
}

MonomialMatrix permutation_matrix(const Perm& p) {
  return MonomialMatrix{p, std::vector<GaussianRational>(p.size(), Gaussian{1})};
}

namespace {

std::set<MaximalIdeal> scalar_places(RingKind ring, const MonomialMatrix& w) {
  std::set<MaximalIdeal> out;
  for (const auto& d : w.scalars) {
    const FractionalIdeal c = FractionalIdeal::principal(ring, d);
    for (const auto& [m, v] : c.factors()) out.insert(m);
  }
  return out;
}

// Delta W (left = true) or W Delta as an ideal matrix.
GlobalIdealMatrix times_monomial(const GlobalTiledOrder& delta, const MonomialMatrix& w, bool delta_first) {
  const int n = delta.size();
  const auto& sup = delta.data().support();
  GlobalIdealMatrix::Support s(n, n);
  std::set<MaximalIdeal> places = scalar_places(delta.ring(), w);
  for (const auto& m : delta.places()) places.insert(m);
  std::map<MaximalIdeal, IntMatrix> local;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (delta_first) s(i, w.perm[static_cast<std::size_t>(k)]) = sup(i, k);
      else s(i, k) = sup(w.perm[static_cast<std::size_t>(i)], k);
    }
  for (const auto& m : places) {
    const IntMatrix l = delta.data().local(m);
    IntMatrix x(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (delta_first) {
          x(i, w.perm[static_cast<std::size_t>(k)]) =
              add_exp(l(i, k), valuation(w.scalars[static_cast<std::size_t>(k)], m));
        } else {
          x(i, k) = add_exp(valuation(w.scalars[static_cast<std::size_t>(i)], m), l(w.perm[static_cast<std::size_t>(i)], k));
        }
      }
    local.emplace(m, x);
  }
  return GlobalIdealMatrix::from_locals(delta.ring(), s, local);
}

bool same_in_context(const GlobalIdealMatrix& a, const GlobalIdealMatrix& b, const std::optional<MaximalIdeal>& m) {
  if (!m) return a == b;
  return a.support() == b.support() && a.local(*m) == b.local(*m);
}

}  // namespace

GradedOrder construct_crossed_product(const GlobalTiledOrder& delta, GroupPtr group, const CrossedProductDatum& datum,
                                      std::optional<MaximalIdeal> local_place) {
  const int n = delta.size();
  const auto& gens = group->generators();
  if (datum.generator_images.size() != gens.size())
    throw ValidationError("need one monomial matrix per group generator");
  for (const auto& w : datum.generator_images) {
    if (static_cast<int>(w.perm.size()) != n || static_cast<int>(w.scalars.size()) != n)
      throw ValidationError("monomial matrix has the wrong size");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : w.perm) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw ValidationError("monomial matrix pattern is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& d : w.scalars) require_ring(delta.ring(), d, "monomial matrix entry");
  }
  const std::size_t order = group->order();

  // W for every element, by breadth-first search over words in the generators.
  std::vector<std::optional<MonomialMatrix>> w(order);
  w[0] = permutation_matrix(identity_perm(n));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t h = group->multiply(g, group->index_of(gens[s]));
      if (w[h]) continue;
      w[h] = *w[g] * datum.generator_images[s];
      queue.push_back(h);
    }
  }

  // kappa(g,h): W_g W_h = kappa W_gh.
  std::vector<std::vector<GaussianRational>> kappa(order, std::vector<GaussianRational>(order, Gaussian{1}));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      const MonomialMatrix prod = *w[g] * *w[h];
      const MonomialMatrix& target = *w[group->multiply(g, h)];
      if (prod.perm != target.perm)
        throw ValidationError("generator images do not respect the group relations at " + pair_label(*group, g, h));
      const GaussianRational k = prod.scalars[0] / target.scalars[0];
      for (int i = 1; i < n; ++i)
        if (!(prod.scalars[static_cast<std::size_t>(i)] / target.scalars[static_cast<std::size_t>(i)] == k))
          throw ValidationError("generator images agree with the group law only up to a non-scalar factor at " +
                                pair_label(*group, g, h));
      kappa[g][h] = k;
    }

  std::vector<GlobalIdealMatrix> comps;
  comps.reserve(order);
  for (std::size_t g = 0; g < order; ++g) {
    GlobalIdealMatrix left = times_monomial(delta, *w[g], true);
    if (!same_in_context(left, times_monomial(delta, *w[g], false), local_place))
      throw ActionDoesNotNormalize(g, "W for " + to_cycle_string(group->element(g)) + " does not normalize Delta");
    comps.push_back(std::move(left));
  }

  auto tau = datum.cocycle.empty() ? trivial_twist(*group) : datum.cocycle;
  if (tau.size() != order) throw ValidationError("cocycle table has the wrong size");
  for (std::size_t g = 0; g < order; ++g) {
    if (tau[g].size() != order) throw ValidationError("cocycle table has the wrong size");
    for (std::size_t h = 0; h < order; ++h) {
      require_ring(delta.ring(), tau[g][h], "cocycle value " + pair_label(*group, g, h));
      const bool unit = local_place ? valuation(tau[g][h], *local_place) == 0
                                    : FractionalIdeal::principal(delta.ring(), tau[g][h]).is_unit_ideal();
      if (!unit) throw ValidationError("cocycle value at " + pair_label(*group, g, h) + " is not a unit");
    }
  }
  if (!datum.cocycle.empty()) {
    if (order > 256) throw InvalidArgument("nontrivial cocycles are supported for |G| <= 256");
    for (std::size_t g = 0; g < order; ++g)
      for (std::size_t h = 0; h < order; ++h)
        for (std::size_t k = 0; k < order; ++k) {
          const auto gh = group->multiply(g, h);
          const auto hk = group->multiply(h, k);
          if (!(tau[g][h] * tau[gh][k] == tau[h][k] * tau[g][hk]))
            throw CocycleViolation(g, h, k,
                                   "tau(g,h) tau(gh,k) != tau(h,k) tau(g,hk) at (" + to_cycle_string(group->element(g)) +
                                       ", " + to_cycle_string(group->element(h)) + ", " +
                                       to_cycle_string(group->element(k)) + ")");
        }
  }
  std::vector<std::vector<GaussianRational>> sigma(order, std::vector<GaussianRational>(order));
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) sigma[g][h] = tau[g][h] / kappa[g][h];

  GradedOrder out = make_graded_order(group, delta, std::move(comps), std::move(sigma), local_place);
  out.kind = "crossed-product";
  if (auto r = validate_strong_grading(out); !r.strong) throw InternalError("crossed product is not strong: " + r.detail);
  return out;
}

CrossedProductResult is_crossed_product(const GradedOrder& lambda) {
  CrossedProductResult out;
  out.free_rank_one.assign(lambda.group->order(), true);
  std::vector<std::optional<MaximalIdeal>> places{std::nullopt};
  for (const auto& m : lambda.relevant_places()) places.emplace_back(m);
  for (const auto& m : places) {
    const IntMatrix l = m ? lambda.delta.data().local(*m) : lambda.delta.data().generic_local();
    const ExponentMatrix d = validate_order(l, m);
    if (!is_hereditary_local(d))
      throw NotHereditary("Delta is not hereditary at " + to_string(Context(m)));
    for (std::size_t g = 0; g < lambda.group->order(); ++g) {
      const auto& x = lambda.components[g];
      const IdealMatrix xm(d, m ? x.local(*m) : x.generic_local());
      if (!is_left_free_rank_one(xm)) {
        if (out.free_rank_one[g] && out.crossed_product) out.failing_place = m;
        out.free_rank_one[g] = false;
        out.crossed_product = false;
      }
    }
  }
  return out;
}

bool is_inner(const GradedOrder& lambda, std::size_t g, const Context& ctx) {
  if (!delta_is_prime(lambda)) throw NotPrimeContext("inner classification needs a prime identity component");
  const auto& x = lambda.components[g];
  if (x.support() != lambda.delta.data().support()) return false;
  const Context where = ctx ? ctx : lambda.local_place;
  if (where) return constant_shift(x.local(*where), lambda.delta.data().local(*where)).has_value();
  // Global: a constant shift at every place; over a PID the local scalars
  // glue to a global generator.
  return scalar_ideal(x, lambda.delta, std::nullopt).has_value();
}

InnerClassification inner_classification(const GradedOrder& lambda, const Subgroup& h, const Context& ctx) {
  if (h.parent() != lambda.group) throw InvalidArgument("subgroup of another group");
  InnerClassification out{h, {}, ctx};
  for (std::size_t g : h.elements())
    if (is_inner(lambda, g, ctx)) out.inner.push_back(g);
  return out;
}

GradedOrder corner_graded_order(const GradedOrder& lambda, const std::vector<int>& idx,
                                const std::optional<Subgroup>& h) {
  if (idx.empty()) throw InvalidIdempotent("empty idempotent");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= lambda.size()) throw InvalidIdempotent("index out of range");
    if (i && idx[i] <= idx[i - 1]) throw InvalidIdempotent("indices must be strictly increasing");
  }
  if (h && h->parent() != lambda.group) throw InvalidIdempotent("subgroup of another group");
  const GroupPtr group = h ? h->as_group() : lambda.group;
  std::vector<std::size_t> parent(group->order());
  for (std::size_t g = 0; g < group->order(); ++g) parent[g] = lambda.group->index_of(group->element(g));

  GlobalTiledOrder delta(lambda.delta.data().submatrix(idx));
  std::vector<GlobalIdealMatrix> comps;
  std::vector<std::vector<GaussianRational>> twist(group->order(), std::vector<GaussianRational>(group->order()));
  for (std::size_t g = 0; g < group->order(); ++g) {
    comps.push_back(lambda.components[parent[g]].submatrix(idx));
    for (std::size_t k = 0; k < group->order(); ++k) twist[g][k] = lambda.twist[parent[g]][parent[k]];
  }
  GradedOrder out = make_graded_order(group, std::move(delta), std::move(comps), std::move(twist), lambda.local_place);
  out.kind = lambda.kind;
  if (auto r = validate_strong_grading(out); !r.strong)
    throw InvalidIdempotent("corner is not strongly graded at " + pair_label(*group, r.witness->first, r.witness->second) +
                            ": " + r.detail);
  return out;
}

bool delta_hereditary_at(const GradedOrder& lambda, const MaximalIdeal& m) {
  return is_hereditary_local(localize(lambda.delta, m));
}

HereditaryVerdict prime_hereditary_verdict(const GradedOrder& lambda, const VerdictOptions& opts, int orbit) {
  if (!delta_is_prime(lambda)) throw NotPrimeContext("prime verdict needs a prime identity component");
  HereditaryVerdict out;
  const std::vector<MaximalIdeal> delta_places =
      lambda.local_place ? std::vector<MaximalIdeal>{*lambda.local_place} : lambda.delta.places();
  for (const auto& m : delta_places)
    if (!delta_hereditary_at(lambda, m)) out.delta_failing.push_back(m);
  out.delta_hereditary = out.delta_failing.empty();

  for (long long p : prime_divisors_of_order(*lambda.group)) {
    Subgroup sylow = sylow_subgroup(lambda.group, p);
    if (opts.sylow_choice != 0) {
      const auto all = all_sylow_subgroups(lambda.group, p);
      sylow = all[opts.sylow_choice % all.size()];
    }
    std::vector<MaximalIdeal> places;
    if (lambda.local_place) {
      if (lambda.local_place->residue_characteristic == p) places.push_back(*lambda.local_place);
    } else {
      for (const auto& [m, e] : factor_rational_prime(lambda.ring(), p)) places.push_back(m);
    }
    for (const auto& m : places) {
      VerdictEntry e;
      e.orbit = orbit;
      e.p = p;
      e.place = m;
      e.sylow = sylow.sorted_perms();
      const auto inn = inner_classification(lambda, sylow, m);
      for (std::size_t g : inn.inner)
        if (g != 0) {
          e.inner_witness = lambda.group->element(g);
          break;
        }
      out.breakdown.push_back(std::move(e));
    }
  }
  out.hereditary = out.delta_hereditary;
  for (const auto& e : out.breakdown)
    if (e.inner_witness) out.hereditary = false;
  return out;
}

}  // namespace sgo
