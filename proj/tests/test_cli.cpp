#include <doctest.h>

#include "sgo/cli.hpp"

using namespace sgo;

namespace {

std::string fixture(const std::string& name) { return read_file(fixture_dir() + "/" + name + ".json"); }

}  // namespace

TEST_CASE("exit codes of check over the fixtures") {
  const std::vector<std::pair<std::string, int>> expected = {
      {"outer", 1},
      {"trivial_maximal", 0},
      {"nonbasic", 0},
      {"semiprime_d3", 1},
      {"group_ring_c2_at_2", 1},
      {"group_ring_s3_at_3", 1},
      {"group_ring_s3_at_5", 0},
      {"staircase_pi_c3_at_3", 0},
      {"tiled_nonhereditary", 1},
      {"malformed", 2},
      {"missing_delta", 2},
  };
  for (const auto& [name, code] : expected) {
    INFO(name);
    CHECK(cmd_check(fixture(name)).exit_code == code);
  }
}

TEST_CASE("check report for the outer example") {
  const auto r = cmd_check(fixture("outer"));
  const auto& res = r.json["result"];
  CHECK(r.json["format_version"] == kReportFormatVersion);
  CHECK_FALSE(res["hereditary"].get<bool>());
  bool found = false;
  for (const auto& e : res["breakdown"])
    if (e["place"] == "(1+2i)" && e.contains("inner_witness")) {
      found = true;
      CHECK(e["p"] == 5);
      CHECK(e["inner_witness"] == "(1 2 3 4 5)");
    }
  CHECK(found);
  REQUIRE(res["orbits"].size() == 1);
  CHECK(res["orbits"][0]["verdictDetail"].size() == 2);
}

TEST_CASE("schema errors carry the offending path") {
  const auto r = cmd_check(fixture("missing_delta"));
  CHECK(r.json["result"]["error"]["path"] == "$.delta");
  const auto bad = cmd_check(R"({"kind": "explicit", "group": {"cyclic": 2},
    "delta": {"ring": "Z", "n": 2, "entries": [[0, 0], [1, "x"]], "prime": "2"}, "components": {}})");
  CHECK(bad.exit_code == 2);
  CHECK(bad.json["result"]["error"]["path"] == "$.delta.entries[1][1]");
  const auto missing = cmd_check(R"({"kind": "explicit", "group": {"cyclic": 2},
    "delta": {"ring": "Z", "n": 1, "entries": [[0]], "prime": "2"}, "components": {}})");
  CHECK(missing.exit_code == 2);
  CHECK(missing.json["result"]["error"]["path"] == "$.components");
  CHECK(cmd_check(R"({"kind": "bogus", "delta": {"n": 1, "entries": [[{"gen": "1"}]]}, "group": {"cyclic": 2}})")
            .json["result"]["error"]["path"] == "$.kind");
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : {"outer", "semiprime_d3", "nonbasic"}) {
    const auto a = cmd_check(fixture(name));
    const auto b = cmd_check(fixture(name));
    CHECK(a.json.dump() == b.json.dump());
    CHECK(a.text == b.text);
    CHECK_FALSE(a.json.contains("timings"));
  }
  RunOptions t;
  t.timings = true;
  CHECK(cmd_check(fixture("nonbasic"), t).json.contains("timings"));
  CHECK(cmd_check(fixture("outer")).json["input_digest"] == "fnv1a64:" + fnv1a_hex(fixture("outer")));
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("picent command") {
  const auto r = cmd_picent(fixture("outer_delta"));
  CHECK(r.exit_code == 0);
  CHECK(r.json["result"]["description"] == "Z/5 at (1+2i) ⊕ Z/5 at (1-2i)");
  CHECK(cmd_picent(fixture("maximal_delta")).json["result"]["description"] == "trivial");
  CHECK(cmd_picent(fixture("z6_delta")).json["result"]["description"] == "Z/2 at (2) ⊕ Z/2 at (3)");
  const auto bad = cmd_picent(fixture("nonhereditary_delta"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.json["result"]["error"]["type"] == "NotHereditary");
}

TEST_CASE("classify command") {
  const auto r = cmd_classify(fixture("outer"));
  REQUIRE(r.exit_code == 0);
  const auto& res = r.json["result"];
  CHECK(res["strongly_graded"].get<bool>());
  CHECK(res["crossed_product"].get<bool>());
  const auto& gen = res["components"][1];
  CHECK(gen["pic_class"]["(1-2i)"] != nullptr);
  CHECK_FALSE(gen["inner"]["global"].get<bool>());
  CHECK(gen["inner"]["(1+2i)"].get<bool>());
  CHECK_FALSE(gen["inner"]["(1-2i)"].get<bool>());
  const auto nb = cmd_classify(fixture("nonbasic"));
  CHECK_FALSE(nb.json["result"]["crossed_product"].get<bool>());
}

TEST_CASE("oracle-check command") {
  RunOptions at_p;
  at_p.place = "1+2i";
  const auto r = cmd_oracle_check(fixture("outer"), at_p);
  CHECK(r.exit_code == 0);
  const auto& row = r.json["result"]["checks"][0];
  CHECK(row["place"] == "(1+2i)");
  CHECK(row["rank"] == 125);
  CHECK(row["agree"].get<bool>());
  CHECK_FALSE(row["oracle"].get<bool>());
  CHECK(cmd_oracle_check(fixture("outer")).json["result"]["checks"].size() == 2);
  CHECK(cmd_oracle_check(fixture("oversized")).exit_code == 2);
  RunOptions ramified;
  ramified.place = "1+i";
  CHECK(cmd_oracle_check(fixture("outer"), ramified).exit_code == 2);
  for (const auto& name : {"nonbasic", "semiprime_d3", "group_ring_c2_at_2", "group_ring_s3_at_3", "group_ring_s3_at_5",
                           "staircase_pi_c3_at_3", "tiled_nonhereditary", "trivial_maximal"}) {
    INFO(name);
    CHECK(cmd_oracle_check(fixture(name)).exit_code == 0);
  }
}

TEST_CASE("example command") {
  for (const auto& name : {"outer", "nonbasic", "semiprime"}) {
    const auto r = cmd_example(name);
    INFO(r.text);
    CHECK(r.exit_code == 0);
    CHECK(r.json["result"]["all_pass"].get<bool>());
  }
  RunOptions d4;
  d4.d = 4;
  CHECK(cmd_example("semiprime", d4).exit_code == 0);
  RunOptions d2;
  d2.d = 2;
  CHECK(cmd_example("semiprime", d2).exit_code == 0);
  CHECK(cmd_example("bogus").exit_code == 2);
}

TEST_CASE("direct-sum and global schema forms") {
  const auto j = parse_json_text(fixture("semiprime_d3"));
  const auto lam = graded_order_from_json(j);
  CHECK(lam.size() == 6);
  CHECK(lam.delta.prime_blocks().size() == 3);
  CHECK(lam.local_place->label() == "(2)");
  const auto o = order_from_json(parse_json_text(fixture("outer_delta")));
  CHECK_FALSE(o.local_place);
  const auto back = order_from_json(to_json(o.order.data()));
  CHECK(back.order.data() == o.order.data());
}
