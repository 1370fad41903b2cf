#include "sgo/pic.hpp"

#include <set>
#include <sstream>

namespace sgo {

std::vector<int> GlobalPicent::factor_orders() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.second.t);
  return out;
}

std::string to_string(const GlobalPicent& g) {
  if (g.components.empty()) return "trivial";
  std::ostringstream out;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (i) out << " ⊕ ";
    out << "Z/" << g.components[i].second.t << " at " << g.components[i].first.label();
  }
  return out.str();
}

int PicClass::at(const MaximalIdeal& m) const {
  auto it = per_place.find(m);
  return it == per_place.end() ? 0 : it->second;
}

std::string to_string(const PicClass& c) {
  if (c.per_place.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, k] : c.per_place) {
    out << (first ? "" : ", ") << k << " at " << m.label();
    first = false;
  }
  return out.str();
}

LocalPicent picent_local(const ExponentMatrix& order) {
  if (!order.is_prime()) throw NotPrimeContext("local Picent is computed for prime orders");
  if (!is_hereditary_local(order)) throw NotHereditary("local Picent needs a hereditary order");
  const IdealMatrix r = radical(order);
  // Powers of the radical until one is a constant shift of lambda.
  IdealMatrix p = r;
  for (int k = 1; k <= order.size(); ++k) {
    if (auto s = constant_shift(p.entries(), order.lambda())) {
      if (*s != 1) throw InternalError("radical power is a shift by " + std::to_string(*s));
      return LocalPicent{order, k, r};
    }
    p = ideal_multiply(p, r);
  }
  throw InternalError("no power of the radical up to n is principal");
}

GlobalPicent picent_global(const GlobalTiledOrder& order) {
  GlobalPicent out;
  for (const auto& m : order.places()) {
    LocalPicent lp = picent_local(localize(order, m));
    if (lp.t > 1) out.components.emplace_back(m, std::move(lp));
  }
  return out;
}

std::optional<Int> bimodule_trivial_local(const IdealMatrix& x) {
  if (!x.order().is_prime()) throw NotPrimeContext("bimodule triviality test needs a prime order");
  return constant_shift(x.entries(), x.order().lambda());
}

int pic_class_local(const IdealMatrix& x) {
  const LocalPicent lp = picent_local(x.order());
  IdealMatrix p = as_ideal(x.order());
  for (int k = 0; k < lp.t; ++k) {
    if (constant_shift(x.entries(), p.entries())) return k;
    p = ideal_multiply(p, lp.generator);
  }
  throw NoMatchingPower("ideal is not a scalar multiple of a radical power at " +
                        (x.order().place() ? x.order().place()->label() : std::string("this place")));
}

PicClass pic_class_of(const GlobalTiledOrder& order, const GlobalIdealMatrix& x) {
  if (x.size() != order.size() || x.ring() != order.ring()) throw InvalidArgument("ideal and order do not match");
  if (x.support() != order.data().support()) throw NoMatchingPower("ideal support differs from the order's");
  std::set<MaximalIdeal> places;
  for (const auto& m : order.places()) places.insert(m);
  for (const auto& m : x.places()) places.insert(m);
  PicClass out;
  for (const auto& m : places) {
    const int k = pic_class_local(localize(order, x, m));
    if (k != 0) out.per_place[m] = k;
  }
  return out;
}

GlobalIdealMatrix construct_class_representative(const GlobalTiledOrder& order, const PicClass& target) {
  GlobalIdealMatrix out = order.data();
  for (const auto& [m, k] : target.per_place) {
    const LocalPicent lp = picent_local(localize(order, m));
    if (lp.t == 1) throw UnsupportedPlace("order is maximal at " + m.label());
    const int r = ((k % lp.t) + lp.t) % lp.t;
    if (r == 0) continue;
    out.set_local(m, ideal_power(lp.generator, r).entries());
  }
  return out;
}

}  // namespace sgo
