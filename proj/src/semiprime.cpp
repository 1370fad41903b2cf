#include "sgo/semiprime.hpp"

#include <set>

namespace sgo {

InconsistentBlockSupport::InconsistentBlockSupport(std::size_t g_, const std::string& what)
    : ValidationError("InconsistentBlockSupport: " + what), g(g_) {}

std::vector<std::vector<int>> prime_blocks(const GradedOrder& lambda) { return lambda.delta.prime_blocks(); }

GroupAction idempotent_action(const GradedOrder& lambda) {
  const auto blocks = prime_blocks(lambda);
  const int t = static_cast<int>(blocks.size());
  GroupAction action{lambda.group, t, {}};
  for (std::size_t g = 0; g < lambda.group->order(); ++g) {
    const auto& sup = lambda.components[g].support();
    Perm img(static_cast<std::size_t>(t), -1);
    for (int k = 0; k < t; ++k) {
      for (int b = 0; b < t; ++b) {
        bool any = false, all = true;
        for (int i : blocks[static_cast<std::size_t>(k)])
          for (int j : blocks[static_cast<std::size_t>(b)]) {
            any = any || sup(i, j);
            all = all && sup(i, j);
          }
        if (!any) continue;
        if (!all || img[static_cast<std::size_t>(k)] >= 0)
          throw InconsistentBlockSupport(g, "component " + to_cycle_string(lambda.group->element(g)) +
                                                " does not have one full block per block row");
        img[static_cast<std::size_t>(k)] = b;
      }
      if (img[static_cast<std::size_t>(k)] < 0)
        throw InconsistentBlockSupport(g, "component " + to_cycle_string(lambda.group->element(g)) +
                                              " has an empty block row");
    }
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(t))
      throw InconsistentBlockSupport(g, "component " + to_cycle_string(lambda.group->element(g)) +
                                            " does not permute the blocks");
    action.images.push_back(std::move(img));
  }
  return action;
}

std::vector<OrbitCorner> orbit_decompose(const GradedOrder& lambda, std::size_t representative_choice) {
  const auto blocks = prime_blocks(lambda);
  const GroupAction action = idempotent_action(lambda);
  std::vector<OrbitCorner> out;
  for (const auto& info : orbits_and_stabilizers(action)) {
    const int rep = info.orbit[representative_choice % info.orbit.size()];
    Subgroup stab = rep == info.representative ? info.stabilizer : stabilizer_of(action, rep);
    GradedOrder corner = corner_graded_order(lambda, blocks[static_cast<std::size_t>(rep)], stab);
    out.push_back(OrbitCorner{info.orbit, rep, std::move(stab), std::move(corner)});
  }
  return out;
}

HereditaryVerdict main_hereditary_verdict(const GradedOrder& lambda, const VerdictOptions& opts) {
  HereditaryVerdict out;
  const std::vector<MaximalIdeal> places =
      lambda.local_place ? std::vector<MaximalIdeal>{*lambda.local_place} : lambda.delta.places();
  for (const auto& m : places)
    if (!delta_hereditary_at(lambda, m)) out.delta_failing.push_back(m);
  out.delta_hereditary = out.delta_failing.empty();
  const auto orbits = orbit_decompose(lambda, opts.representative_choice);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const HereditaryVerdict v = prime_hereditary_verdict(orbits[i].corner, opts, static_cast<int>(i));
    out.breakdown.insert(out.breakdown.end(), v.breakdown.begin(), v.breakdown.end());
  }
  out.hereditary = out.delta_hereditary;
  for (const auto& e : out.breakdown)
    if (e.inner_witness) out.hereditary = false;
  return out;
}

bool local_hereditary_verdict(const GradedOrder& lambda, const MaximalIdeal& m) {
  if (lambda.local_place && !(*lambda.local_place == m)) throw InvalidArgument("order is local at another place");
  if (!delta_hereditary_at(lambda, m)) return false;
  for (const auto& oc : orbit_decompose(lambda)) {
    const Int p = m.residue_characteristic;
    if (oc.corner.group->order() % static_cast<std::size_t>(p) != 0) continue;
    const Subgroup sylow = sylow_subgroup(oc.corner.group, p);
    if (!inner_classification(oc.corner, sylow, m).trivial()) return false;
  }
  return true;
}

bool is_inner_full_order(const GradedOrder& lambda, std::size_t g, const Context& ctx) {
  const auto& x = lambda.components[g];
  const auto& d = lambda.delta.data();
  if (x.support() != d.support()) return false;
  std::vector<MaximalIdeal> places;
  const Context where = ctx ? ctx : lambda.local_place;
  if (where) {
    places.push_back(*where);
  } else {
    std::set<MaximalIdeal> s;
    for (const auto& m : x.places()) s.insert(m);
    for (const auto& m : d.places()) s.insert(m);
    places.assign(s.begin(), s.end());
  }
  for (const auto& block : prime_blocks(lambda))
    for (const auto& m : places)
      if (!constant_shift(submatrix(x.local(m), block), submatrix(d.local(m), block))) return false;
  return true;
}

InnerClassification inner_classification_full_order(const GradedOrder& lambda, const Subgroup& h, const Context& ctx) {
  if (h.parent() != lambda.group) throw InvalidArgument("subgroup of another group");
  InnerClassification out{h, {}, ctx};
  for (std::size_t g : h.elements())
    if (is_inner_full_order(lambda, g, ctx)) out.inner.push_back(g);
  return out;
}

}  // namespace sgo
