#include "sgo/cli.hpp"

#include <chrono>
#include <set>
#include <sstream>

#ifndef SGO_FIXTURE_DIR
#define SGO_FIXTURE_DIR "fixtures"
#endif

namespace sgo {

namespace {

using Clock = std::chrono::steady_clock;

std::string error_kind(const Error& e) {
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  if (dynamic_cast<const RankCapExceeded*>(&e)) return "RankCapExceeded";
  if (dynamic_cast<const UnsupportedPlace*>(&e)) return "UnsupportedPlace";
  if (dynamic_cast<const NotHereditary*>(&e)) return "NotHereditary";
  if (dynamic_cast<const NotPrimeContext*>(&e)) return "NotPrimeContext";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  return "Error";
}

struct Body {
  Json result = Json::object();
  std::ostringstream text;
  int code = 0;
};

template <class F>
RunReport run(const std::string& command, const std::string& input, const RunOptions& opts, F&& f) {
  const auto t0 = Clock::now();
  Body body;
  try {
    f(body);
  } catch (const Error& e) {
    body.result = Json{{"error", Json{{"type", error_kind(e)}, {"message", e.what()}}}};
    if (const auto* s = dynamic_cast<const SchemaError*>(&e)) body.result["error"]["path"] = s->path;
    body.text.str("");
    body.text << "error (" << error_kind(e) << "): " << e.what() << "\n";
    body.code = 2;
  }
  RunReport r;
  r.json = Json{{"format_version", kReportFormatVersion},
                {"command", command},
                {"input_digest", "fnv1a64:" + fnv1a_hex(input)},
                {"exit_code", body.code},
                {"result", body.result}};
  if (opts.timings)
    r.json["timings"] = Json{{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
  r.text = body.text.str();
  r.exit_code = body.code;
  return r;
}

std::string join(const std::vector<Perm>& ps) {
  std::string out = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) out += (k ? ", " : "") + to_cycle_string(ps[k]);
  return out + "}";
}

std::vector<Context> contexts(const GradedOrder& lam) {
  std::vector<Context> out;
  if (!lam.local_place) out.emplace_back(std::nullopt);
  for (const auto& m : lam.relevant_places()) out.emplace_back(m);
  return out;
}

struct Assertion {
  std::string name;
  bool pass;
};

void report_assertions(Body& b, const std::string& example, const std::vector<Assertion>& as) {
  Json arr = Json::array();
  bool all = true;
  b.text << "example " << example << "\n";
  for (const auto& a : as) {
    arr.push_back(Json{{"assertion", a.name}, {"pass", a.pass}});
    b.text << (a.pass ? "PASS " : "FAIL ") << a.name << "\n";
    all = all && a.pass;
  }
  b.result = Json{{"example", example}, {"assertions", arr}, {"all_pass", all}};
  b.code = all ? 0 : 1;
}

MaximalIdeal place_of(const Json& j, RingKind ring, const char* key) {
  return parse_place(ring, j.at(key).get<std::string>());
}

}  // namespace

std::string fixture_dir() { return SGO_FIXTURE_DIR; }

GradedOrder permuted_copies(const ExponentMatrix& prime, int d, const MaximalIdeal& m) {
  std::vector<ExponentMatrix> parts(static_cast<std::size_t>(d), prime);
  const auto delta = GlobalTiledOrder(GlobalIdealMatrix::from_local(m.ring, m, direct_sum(parts).lambda()));
  const auto group = FiniteGroup::symmetric(d);
  const int n = prime.size();
  CrossedProductDatum datum;
  for (const auto& g : group->generators()) {
    Perm w(static_cast<std::size_t>(d * n));
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(k * n + i)] = g[static_cast<std::size_t>(k)] * n + i;
    datum.generator_images.push_back(permutation_matrix(w));
  }
  auto out = construct_crossed_product(delta, group, datum, m);
  out.kind = "crossed-product";
  return out;
}

std::vector<MaximalIdeal> oracle_places(const GradedOrder& lambda) {
  if (lambda.local_place) return {*lambda.local_place};
  std::set<MaximalIdeal> out;
  for (const auto& m : lambda.relevant_places()) out.insert(m);
  for (const auto& [p, e] : factor_integer(static_cast<Int>(lambda.group->order())))
    for (const auto& [m, r] : factor_rational_prime(lambda.ring(), p)) out.insert(m);
  return {out.begin(), out.end()};
}

RunReport cmd_check(const std::string& input, const RunOptions& opts) {
  return run("check", input, opts, [&](Body& b) {
    const auto lam = graded_order_from_json(parse_json_text(input));
    const auto v = main_hereditary_verdict(lam);
    Json result = to_json(v);
    Json orbits = Json::array();
    const auto corners = orbit_decompose(lam);
    b.text << "hereditary: " << (v.hereditary ? "yes" : "no") << "\n";
    b.text << "identity component hereditary: " << (v.delta_hereditary ? "yes" : "no");
    for (const auto& m : v.delta_failing) b.text << " " << m.label();
    b.text << "\n";
    for (std::size_t k = 0; k < corners.size(); ++k) {
      Json o = to_json(corners[k]);
      Json detail = Json::array();
      for (const auto& e : v.breakdown)
        if (e.orbit == static_cast<int>(k)) {
          Json row{{"p", e.p}, {"place", e.place.label()}, {"sylow", Json::array()}};
          for (const auto& s : e.sylow) row["sylow"].push_back(to_cycle_string(s));
          if (e.inner_witness) row["inner_witness"] = to_cycle_string(*e.inner_witness);
          detail.push_back(row);
        }
      o["verdictDetail"] = detail;
      orbits.push_back(o);
      b.text << "orbit " << k << " rep " << corners[k].representative << " stabilizer "
             << join(corners[k].stabilizer.sorted_perms()) << "\n";
      for (const auto& e : v.breakdown) {
        if (e.orbit != static_cast<int>(k)) continue;
        b.text << "  p=" << e.p << " at " << e.place.label() << ": sylow " << join(e.sylow) << " "
               << (e.inner_witness ? "inner witness " + to_cycle_string(*e.inner_witness) : std::string("outer"))
               << "\n";
      }
    }
    result["orbits"] = orbits;
    if (!lam.warnings.empty()) result["warnings"] = lam.warnings;
    b.result = result;
    b.code = v.hereditary ? 0 : 1;
  });
}

RunReport cmd_picent(const std::string& input, const RunOptions& opts) {
  return run("picent", input, opts, [&](Body& b) {
    const auto parsed = order_from_json(parse_json_text(input));
    const auto g = picent_global(parsed.order);
    b.result = to_json(g);
    b.text << "Picent: " << to_string(g) << "\n";
  });
}

RunReport cmd_classify(const std::string& input, const RunOptions& opts) {
  return run("classify", input, opts, [&](Body& b) {
    const auto lam = graded_order_from_json(parse_json_text(input));
    const auto& group = *lam.group;
    const bool prime = lam.delta.prime_blocks().size() == 1;
    bool classes = prime;
    if (prime)
      for (const auto& m : lam.delta.places()) classes = classes && is_hereditary_local(validate_order(lam.delta.data().local(m)));
    const auto ctxs = contexts(lam);

    Json comps = Json::array();
    for (std::size_t g = 0; g < group.order(); ++g) {
      Json c{{"element", to_cycle_string(group.element(g))}};
      c["pic_class"] = classes ? to_json(pic_class_of(lam.delta, lam.component(g))) : Json(nullptr);
      Json inner = Json::object();
      for (const auto& ctx : ctxs) inner[to_string(ctx)] = is_inner_full_order(lam, g, ctx);
      c["inner"] = inner;
      comps.push_back(c);
    }
    Json inn = Json::array();
    const auto whole = Subgroup::whole(lam.group);
    b.text << "group of order " << group.order() << ", kind " << lam.kind << "\n";
    for (const auto& ctx : ctxs) {
      const auto ic = inner_classification_full_order(lam, whole, ctx);
      inn.push_back(to_json(ic));
      std::vector<Perm> ps;
      for (auto g : ic.inner) ps.push_back(group.element(g));
      b.text << "Inn at " << to_string(ctx) << ": " << join(ps) << (ic.trivial() ? " (outer)" : "") << "\n";
    }
    const auto strong = validate_strong_grading(lam);
    const auto cp = is_crossed_product(lam);
    b.text << "strongly graded: " << (strong.strong ? "yes" : "no") << "\n";
    b.text << "crossed product: " << (cp.crossed_product ? "yes" : "no") << "\n";
    b.result = Json{{"strongly_graded", strong.strong},
                    {"crossed_product", cp.crossed_product},
                    {"components", comps},
                    {"inner", inn}};
  });
}

RunReport cmd_oracle_check(const std::string& input, const RunOptions& opts) {
  return run("oracle-check", input, opts, [&](Body& b) {
    const auto lam = graded_order_from_json(parse_json_text(input));
    std::vector<MaximalIdeal> places;
    if (opts.place) places = {parse_place(lam.ring(), *opts.place)};
    else places = oracle_places(lam);
    const int rank = flattened_rank(lam);
    if (rank > kOracleRankCap)
      throw RankCapExceeded("flattened rank " + std::to_string(rank) + " exceeds the cap of " + std::to_string(kOracleRankCap));
    Json rows = Json::array();
    bool all = true;
    for (const auto& m : places) {
      StructureConstantOrder a;
      try {
        a = flatten(lam, m);
      } catch (const UnsupportedPlace& e) {
        if (opts.place) throw;
        rows.push_back(Json{{"place", m.label()}, {"skipped", e.what()}});
        b.text << m.label() << ": skipped (" << e.what() << ")\n";
        continue;
      }
      check_associativity(a);
      const auto rad = radical_mod_m(a);
      const bool certified = certify_radical(a, rad).ok();
      const bool oracle = hereditary_oracle(a);
      const bool engine = local_hereditary_verdict(lam, m);
      const bool agree = oracle == engine && certified;
      all = all && agree;
      rows.push_back(Json{{"place", m.label()},
                          {"rank", a.rank},
                          {"radical_dim", rad.size()},
                          {"radical_certified", certified},
                          {"oracle", oracle},
                          {"engine", engine},
                          {"agree", agree}});
      b.text << m.label() << ": rank " << a.rank << ", oracle " << (oracle ? "hereditary" : "not hereditary")
             << ", engine " << (engine ? "hereditary" : "not hereditary") << (agree ? ", agree" : ", DISAGREE") << "\n";
    }
    b.result = Json{{"checks", rows}, {"all_agree", all}};
    b.code = all ? 0 : 1;
  });
}

RunReport cmd_example(const std::string& name, const RunOptions& opts) {
  const std::string file = fixture_dir() + "/example_" + name + ".json";
  std::string input;
  if (name == "outer" || name == "nonbasic" || name == "semiprime") {
    try {
      input = read_file(file);
    } catch (const Error&) {
      input.clear();
    }
  }
  return run("example", input, opts, [&](Body& b) {
    if (name != "outer" && name != "nonbasic" && name != "semiprime")
      throw InvalidArgument("unknown example '" + name + "' (expected nonbasic, outer or semiprime)");
    if (input.empty()) throw InvalidArgument("cannot read fixture " + file);
    const Json j = parse_json_text(input);
    std::vector<Assertion> as;

    if (name == "outer") {
      const auto lam = graded_order_from_json(j.at("graded_order"), "$.graded_order");
      const auto p = place_of(j, lam.ring(), "inner_place");
      const auto q = place_of(j, lam.ring(), "outer_place");
      const auto whole = Subgroup::whole(lam.group);
      as.push_back({"Picent(Delta) = " + j.at("expected_picent").get<std::string>(),
                    to_string(picent_global(lam.delta)) == j.at("expected_picent").get<std::string>()});
      as.push_back({"X is outer globally", inner_classification(lam, whole, std::nullopt).trivial()});
      as.push_back({"X is inner at " + p.label(), inner_classification(lam, whole, p).inner.size() == whole.order()});
      as.push_back({"X stays outer at " + q.label(), inner_classification(lam, whole, q).trivial()});
      const auto v = main_hereditary_verdict(lam);
      bool witness = false;
      for (const auto& e : v.breakdown) witness = witness || (e.inner_witness && e.place == p);
      as.push_back({"Lambda is not hereditary, witness at " + p.label(), !v.hereditary && witness});
      for (const auto& m : {p, q}) {
        const auto a = flatten(lam, m);
        as.push_back({"oracle agrees with the engine at " + m.label() + " (rank " + std::to_string(a.rank) + ")",
                      hereditary_oracle(a) == local_hereditary_verdict(lam, m)});
      }
    } else if (name == "nonbasic") {
      const auto lam = graded_order_from_json(j.at("graded_order"), "$.graded_order");
      const auto m = *lam.local_place;
      const auto [basic, idx] = basic_idempotent_corner(validate_order(lam.delta.data().local(m)));
      const auto corner = corner_graded_order(lam, idx);
      as.push_back({"Lambda is strongly graded", validate_strong_grading(lam).strong});
      as.push_back({"Lambda is not a crossed product", !is_crossed_product(lam).crossed_product});
      as.push_back({"the basic corner is a crossed product", is_crossed_product(corner).crossed_product});
    } else {
      const auto parsed = order_from_json(j.at("prime_component"), "$.prime_component");
      if (!parsed.local_place) throw SchemaError("$.prime_component", "needs a prime");
      const auto m = *parsed.local_place;
      const int d = opts.d;
      if (d < 2 || d > 5) throw InvalidArgument("d must be between 2 and 5");
      const auto lam = permuted_copies(validate_order(parsed.order.data().local(m)), d, m);
      const Int p = m.residue_characteristic;
      const auto orbits = orbit_decompose(lam);
      std::size_t fact = 1;
      for (int k = 2; k < d; ++k) fact *= static_cast<std::size_t>(k);
      as.push_back({"one orbit of idempotents", orbits.size() == 1});
      as.push_back({"stabilizer has order (d-1)! = " + std::to_string(fact), orbits.at(0).stabilizer.order() == fact});
      const auto& corner = orbits.at(0).corner;
      bool group_ring = validate_strong_grading(corner).strong;
      for (const auto& x : corner.components) group_ring = group_ring && x == corner.delta.data();
      for (const auto& row : corner.twist)
        for (const auto& s : row) group_ring = group_ring && s == GaussianRational(Gaussian{1});
      as.push_back({"corner is the group ring Delta S_" + std::to_string(d - 1), group_ring});
      const auto pc = sylow_subgroup(corner.group, p);
      const auto pf = sylow_subgroup(lam.group, p);
      as.push_back({"Inn of the corner's Sylow " + std::to_string(p) + "-subgroup is all of it",
                    inner_classification(corner, pc, m).inner.size() == pc.order()});
      as.push_back({"Inn of the Sylow " + std::to_string(p) + "-subgroup on the full order is trivial",
                    inner_classification_full_order(lam, pf, m).trivial()});
      const bool expect_hereditary = pc.order() == 1;
      as.push_back({std::string("main verdict: ") + (expect_hereditary ? "hereditary" : "not hereditary") + " at " + m.label(),
                    main_hereditary_verdict(lam).hereditary == expect_hereditary});
    }
    report_assertions(b, name, as);
  });
}

}  // namespace sgo
