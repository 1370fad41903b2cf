#include "sgo/io.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace sgo {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path, what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Int>();
}

// Wraps library parse errors with the path of the field being read.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

RingKind ring_of(const Json& j, const std::string& path, RingKind fallback) {
  if (!j.contains("ring")) return fallback;
  const auto name = as_string(j["ring"], path + ".ring");
  return at_path(path + ".ring", [&] { return parse_ring(name); });
}

std::optional<FractionalIdeal> ideal_from_json(RingKind ring, const Json& j, const std::string& path) {
  if (j.is_null()) return std::nullopt;
  if (j.is_object() && j.contains("gen")) {
    const auto g = as_string(j["gen"], path + ".gen");
    return at_path(path + ".gen", [&] {
      const auto q = parse_gaussian_rational(g);
      if (q.is_zero()) throw InvalidArgument("generator is zero; use null for the zero ideal");
      if (ring == RingKind::RationalIntegers && (q.num.im != 0 || q.den.im != 0))
        throw InvalidArgument("generator is not rational");
      return FractionalIdeal::principal(ring, q);
    });
  }
  if (j.is_object() && j.contains("factors")) {
    const Json& fs = j["factors"];
    if (!fs.is_array()) fail(path + ".factors", "expected an array");
    std::vector<std::pair<MaximalIdeal, Int>> f;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto p = path + ".factors[" + std::to_string(k) + "]";
      if (!fs[k].is_array() || fs[k].size() != 2) fail(p, "expected [generator, exponent]");
      const auto g = as_string(fs[k][0], p + "[0]");
      const Int e = as_int(fs[k][1], p + "[1]");
      f.emplace_back(at_path(p + "[0]", [&] { return parse_place(ring, g); }), e);
    }
    return at_path(path, [&] { return FractionalIdeal::from_factors(ring, f); });
  }
  fail(path, "expected null, {\"gen\": ...} or {\"factors\": [...]}");
}

int size_of(const Json& j, const std::string& path) {
  const Json& e = field(j, "entries", path);
  if (!e.is_array() || e.empty()) fail(path + ".entries", "expected a nonempty array of rows");
  const auto n = static_cast<int>(e.size());
  if (j.contains("n") && as_int(j["n"], path + ".n") != n) fail(path + ".n", "does not match the number of rows");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != n)
      fail(path + ".entries[" + std::to_string(i) + "]", "row has the wrong length");
  return n;
}

IntMatrix exponents_from_json(const Json& j, const std::string& path) {
  const int n = size_of(j, path);
  IntMatrix x(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Json& v = j["entries"][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      const auto p = path + ".entries[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      x(i, k) = v.is_null() ? kZero : as_int(v, p);
    }
  return x;
}

std::vector<int> parse_block_list(const std::string& text, const std::string& path) {
  static const std::regex re(R"(\s*hereditary_staircase\s*\(\s*\[([0-9,\s]*)\]\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(path, "unknown shorthand (expected hereditary_staircase([sizes]))");
  std::vector<int> sizes;
  std::stringstream ss(m[1].str());
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) sizes.push_back(std::stoi(item));
  if (sizes.empty()) fail(path, "empty block list");
  return sizes;
}

// Local form: place and exponent matrix; global form: the entries.
struct RawMatrix {
  RingKind ring;
  std::optional<MaximalIdeal> place;
  GlobalIdealMatrix data;
};

RawMatrix matrix_from_json(const Json& j, const std::string& path, const std::optional<MaximalIdeal>& inherited,
                           bool is_order, RingKind fallback = RingKind::RationalIntegers) {
  if (!j.is_object()) fail(path, "expected an object");
  const RingKind ring = ring_of(j, path, inherited ? inherited->ring : fallback);
  if (j.contains("components")) {
    const Json& cs = j["components"];
    if (!cs.is_array() || cs.empty()) fail(path + ".components", "expected a nonempty array");
    std::vector<RawMatrix> parts;
    for (std::size_t k = 0; k < cs.size(); ++k)
      parts.push_back(matrix_from_json(cs[k], path + ".components[" + std::to_string(k) + "]", inherited, is_order, ring));
    int n = 0;
    for (const auto& p : parts) {
      if (p.data.ring() != parts[0].data.ring()) fail(path + ".components", "components over different rings");
      if (p.place != parts[0].place) fail(path + ".components", "components local at different places");
      n += p.data.size();
    }
    const RingKind r = parts[0].data.ring();
    GlobalIdealMatrix::Support sup = GlobalIdealMatrix::Support::Constant(n, n, false);
    std::map<MaximalIdeal, IntMatrix> local;
    std::set<MaximalIdeal> places;
    for (const auto& p : parts)
      for (const auto& m : p.data.places()) places.insert(m);
    for (const auto& m : places) local[m] = IntMatrix::Constant(n, n, kZero);
    int off = 0;
    for (const auto& p : parts) {
      const int s = p.data.size();
      sup.block(off, off, s, s) = p.data.support();
      for (const auto& m : places) local[m].block(off, off, s, s) = p.data.local(m);
      off += s;
    }
    return {r, parts[0].place, GlobalIdealMatrix::from_locals(r, sup, local)};
  }
  std::optional<MaximalIdeal> place = inherited;
  if (j.contains("prime")) {
    const auto text = as_string(j["prime"], path + ".prime");
    place = at_path(path + ".prime", [&] { return parse_place(ring, text); });
    if (inherited && !(*inherited == *place)) fail(path + ".prime", "differs from the place of the enclosing order");
  }
  if (j.contains("shorthand")) {
    if (!place) fail(path + ".prime", "a shorthand needs a prime");
    const auto sizes = parse_block_list(as_string(j["shorthand"], path + ".shorthand"), path + ".shorthand");
    const auto s = hereditary_staircase(sizes);
    return {ring, place, GlobalIdealMatrix::from_local(ring, *place, s.lambda())};
  }
  if (place) {
    const IntMatrix x = exponents_from_json(j, path);
    if (is_order) at_path(path + ".entries", [&] { return validate_order(x); });
    return {ring, place, at_path(path, [&] { return GlobalIdealMatrix::from_local(ring, *place, x); })};
  }
  const int n = size_of(j, path);
  std::vector<std::vector<std::optional<FractionalIdeal>>> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      e[static_cast<std::size_t>(i)].push_back(
          ideal_from_json(ring, j["entries"][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                          path + ".entries[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  return {ring, std::nullopt, at_path(path, [&] { return GlobalIdealMatrix::from_entries(ring, e); })};
}

std::vector<std::vector<GaussianRational>> table_from_json(const FiniteGroup& g, const Json& j,
                                                           const std::string& path) {
  auto t = trivial_twist(g);
  if (!j.is_array()) fail(path, "expected an array of {g, h, value}");
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto p = path + "[" + std::to_string(k) + "]";
    auto elem = [&](const char* key) {
      const auto text = as_string(field(j[k], key, p), p + "." + key);
      return at_path(p + "." + key, [&] {
        const Perm e = parse_cycles(text, g.degree());
        if (!g.contains(e)) throw InvalidArgument(text + " is not in the group");
        return g.index_of(e);
      });
    };
    const auto a = elem("g");
    const auto b = elem("h");
    const auto v = as_string(field(j[k], "value", p), p + ".value");
    t[a][b] = at_path(p + ".value", [&] { return parse_gaussian_rational(v); });
  }
  return t;
}

Json perm_list(const std::vector<Perm>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_cycle_string(p));
  return a;
}

}  // namespace

SchemaError::SchemaError(std::string p, const std::string& what)
    : ValidationError(p + ": " + what), path(std::move(p)) {}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("$", std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedOrder order_from_json(const Json& j, const std::string& path) {
  auto raw = matrix_from_json(j, path, std::nullopt, true);
  return {at_path(path, [&] { return GlobalTiledOrder(raw.data); }), raw.place};
}

GroupPtr group_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return at_path(path, [&]() -> GroupPtr {
    if (j.contains("cyclic")) return FiniteGroup::cyclic(static_cast<int>(as_int(j["cyclic"], path + ".cyclic")));
    if (j.contains("symmetric"))
      return FiniteGroup::symmetric(static_cast<int>(as_int(j["symmetric"], path + ".symmetric")));
    if (j.contains("trivial")) return FiniteGroup::trivial();
    const int d = static_cast<int>(as_int(field(j, "degree", path), path + ".degree"));
    const Json& gens = field(j, "generators", path);
    if (!gens.is_array()) fail(path + ".generators", "expected an array");
    std::vector<Perm> ps;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto p = path + ".generators[" + std::to_string(k) + "]";
      const auto text = as_string(gens[k], p);
      ps.push_back(at_path(p, [&] { return parse_cycles(text, d); }));
    }
    return FiniteGroup::make(d, ps);
  });
}

GradedOrder graded_order_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string kind = j.contains("kind") ? as_string(j["kind"], path + ".kind") : "explicit";
  const auto delta = order_from_json(field(j, "delta", path), path + ".delta");
  const auto& place = delta.local_place;

  if (kind == "pic-construction") {
    const auto x = matrix_from_json(field(j, "x", path), path + ".x", place, false);
    std::optional<int> n;
    if (j.contains("n")) n = static_cast<int>(as_int(j["n"], path + ".n"));
    auto out = at_path(path, [&] { return construct_from_pic(delta.order, x.data, n, place); });
    out.kind = kind;
    return out;
  }

  const auto group = group_from_json(field(j, "group", path), path + ".group");
  if (kind == "crossed-product") {
    CrossedProductDatum datum;
    const Json& imgs = field(j, "generator_images", path);
    if (!imgs.is_array()) fail(path + ".generator_images", "expected an array");
    for (std::size_t k = 0; k < imgs.size(); ++k) {
      const auto p = path + ".generator_images[" + std::to_string(k) + "]";
      const Json& perm = field(imgs[k], "perm", p);
      const Json& sc = field(imgs[k], "scalars", p);
      if (!perm.is_array() || !sc.is_array() || perm.size() != sc.size()) fail(p, "perm and scalars must be arrays of equal length");
      MonomialMatrix w;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        w.perm.push_back(static_cast<int>(as_int(perm[i], p + ".perm[" + std::to_string(i) + "]")) - 1);
        const auto s = as_string(sc[i], p + ".scalars[" + std::to_string(i) + "]");
        w.scalars.push_back(at_path(p + ".scalars[" + std::to_string(i) + "]", [&] { return parse_gaussian_rational(s); }));
      }
      datum.generator_images.push_back(std::move(w));
    }
    if (j.contains("cocycle")) datum.cocycle = table_from_json(*group, j["cocycle"], path + ".cocycle");
    auto out = at_path(path, [&] { return construct_crossed_product(delta.order, group, datum, place); });
    out.kind = kind;
    return out;
  }
  if (kind != "explicit") fail(path + ".kind", "unknown kind '" + kind + "'");

  const Json& comps = field(j, "components", path);
  if (!comps.is_object()) fail(path + ".components", "expected an object keyed by group elements");
  std::vector<std::optional<GlobalIdealMatrix>> xs(group->order());
  xs[0] = delta.order.data();
  for (const auto& [key, value] : comps.items()) {
    const auto p = path + ".components[\"" + key + "\"]";
    const auto idx = at_path(p, [&] {
      const Perm e = parse_cycles(key, group->degree());
      if (!group->contains(e)) throw InvalidArgument(key + " is not in the group");
      return group->index_of(e);
    });
    xs[idx] = matrix_from_json(value, p, place, false).data;
  }
  std::vector<GlobalIdealMatrix> out;
  for (std::size_t g = 0; g < xs.size(); ++g) {
    if (!xs[g]) fail(path + ".components", "no component for " + to_cycle_string(group->element(g)));
    out.push_back(*xs[g]);
  }
  auto twist = j.contains("twist") ? table_from_json(*group, j["twist"], path + ".twist") : trivial_twist(*group);
  auto lam = at_path(path, [&] { return make_graded_order(group, delta.order, out, twist, place); });
  lam.kind = kind;
  return lam;
}

Json to_json(const GlobalIdealMatrix& x) {
  Json rows = Json::array();
  for (int i = 0; i < x.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < x.size(); ++k) {
      const auto e = x.entry(i, k);
      if (!e) {
        row.push_back(nullptr);
        continue;
      }
      Json fs = Json::array();
      for (const auto& [m, v] : e->factors()) fs.push_back(Json::array({to_string(m.generator), v}));
      row.push_back(Json{{"factors", fs}});
    }
    rows.push_back(row);
  }
  return Json{{"ring", ring_name(x.ring())}, {"n", x.size()}, {"entries", rows}};
}

Json to_json(const GlobalPicent& g) {
  Json fs = Json::array();
  for (const auto& [m, lp] : g.components) fs.push_back(Json{{"place", m.label()}, {"order", lp.t}});
  return Json{{"description", to_string(g)}, {"factors", fs}};
}

Json to_json(const PicClass& c) {
  Json out = Json::object();
  for (const auto& [m, k] : c.per_place) out[m.label()] = k;
  return out;
}

Json to_json(const HereditaryVerdict& v) {
  Json failing = Json::array();
  for (const auto& m : v.delta_failing) failing.push_back(m.label());
  Json bd = Json::array();
  for (const auto& e : v.breakdown) {
    Json row{{"orbit", e.orbit}, {"p", e.p}, {"place", e.place.label()}, {"sylow", perm_list(e.sylow)}};
    if (e.inner_witness) row["inner_witness"] = to_cycle_string(*e.inner_witness);
    bd.push_back(row);
  }
  return Json{{"hereditary", v.hereditary},
              {"delta_hereditary", v.delta_hereditary},
              {"delta_failing", failing},
              {"breakdown", bd}};
}

Json to_json(const InnerClassification& c) {
  std::vector<Perm> inner;
  for (auto g : c.inner) inner.push_back(c.subgroup.parent()->element(g));
  return Json{{"context", to_string(c.context)},
              {"subgroup", perm_list(c.subgroup.sorted_perms())},
              {"inner", perm_list(inner)},
              {"trivial", c.trivial()}};
}

Json to_json(const OrbitCorner& c) {
  return Json{{"orbit", c.orbit},
              {"rep", c.representative},
              {"stabilizer", perm_list(c.stabilizer.sorted_perms())},
              {"corner_size", c.corner.size()}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sgo
