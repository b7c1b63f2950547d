#include "symnorm/io.hpp"

#include <doctest.h>

using namespace symnorm;
using io::Json;

namespace {
io::JobSpec job(const std::string& cmd, Json root, Json fan, std::vector<Json> bundles, Json flags = Json::object()) {
  io::JobSpec j;
  j.command = cmd;
  if (!root.is_null()) j.root = root;
  j.fan = fan;
  j.bundles = std::move(bundles);
  j.flags = flags;
  return j;
}
}  // namespace

TEST_CASE("rationals and vectors") {
  CHECK(io::rat_from_json("-3/4", "x") == make_rat(-3, 4));
  CHECK(io::rat_from_json(5, "x") == make_rat(5));
  CHECK(io::to_json(make_rat(1, 2)) == Json("1/2"));
  CHECK(io::mvec_from_json(io::to_json(MVec{make_rat(1, 3), make_rat(-2)}), "m") == MVec{make_rat(1, 3), make_rat(-2)});
  CHECK_THROWS_AS(io::rat_from_json("x/2", "values[3]"), io::SchemaError);
  CHECK_THROWS_AS(io::nvec_from_json(Json::array({1, "a"}), "ray"), io::SchemaError);
}

TEST_CASE("fan round trip and catalog references") {
  for (const auto& ref : {"catalog:ex1:3:2", "catalog:ex2b:2", "catalog:ex3_2:3:2", "catalog:chamber:2", "catalog:blowup2"}) {
    Fan f = io::catalog_fan(ref);
    CHECK(io::fan_from_json(io::to_json(f)) == f);
    CHECK(io::fan_from_json(Json(ref)) == f);
  }
  CHECK(io::catalog_fan("catalog:blowup2") == catalog::ex1(2, 2));
  CHECK_THROWS_AS(io::catalog_fan("catalog:nope:1"), std::invalid_argument);
  CHECK_THROWS_AS(io::catalog_fan("catalog:ex1:3"), std::invalid_argument);
  Json bad = {{"rays", Json::array({Json::array({1, 0}), Json::array({0, 1})})},
              {"max_cones", Json::array({Json::array({0, 5})})}};
  CHECK_THROWS_AS(io::fan_from_json(bad), io::SchemaError);
}

TEST_CASE("bundle parsing") {
  Fan f = catalog::ex1(2, 2);
  auto rs = make_root_system("A1xA1");
  PLFunction h = io::bundle_from_json(Json{{"values", {-2, -2, -3}}}, f, &rs);
  CHECK(h.values == std::vector<Rat>{make_rat(-2), make_rat(-2), make_rat(-3)});
  PLFunction keyed = io::bundle_from_json(Json{{"values", {{"(1,1)", -3}, {"(1,0)", -2}, {"(0,1)", -2}}}}, f, &rs);
  CHECK(keyed.values == h.values);
  CHECK(io::bundle_from_json(io::to_json(h), f, &rs).values == h.values);
  CHECK_THROWS_AS(io::bundle_from_json(Json{{"values", {1, 2}}}, f, nullptr), io::SchemaError);
  CHECK_THROWS_AS(io::bundle_from_json(Json{{"values", {{"(1,0)", 1}, {"(0,1)", 1}}}}, f, nullptr), io::SchemaError);
  try {
    io::bundle_from_json(Json{{"values", {1, "q", 2}}}, f, nullptr);
    FAIL("expected a schema error");
  } catch (const io::SchemaError& e) {
    CHECK(std::string(e.what()).find("bundle.values[1]") != std::string::npos);
  }
}

TEST_CASE("root systems") {
  CHECK(io::root_from_json("G2").cartan == make_root_system("G2").cartan);
  CHECK(io::root_from_json(Json{{"type", "B2"}}).cartan == make_root_system("B2").cartan);
  auto rs = io::root_from_json(io::to_json(make_root_system("A2")));
  CHECK(rs.cartan == make_root_system("A2").cartan);
  CHECK_THROWS_AS(io::root_from_json("Q7"), std::invalid_argument);
}

TEST_CASE("report and witness round trips") {
  Fan f = catalog::ex1(2, 2);
  PLFunction h = from_ray_values(f, {make_rat(0), make_rat(0), make_rat(1)});
  CheckReport r = check_sum_open(h, h, true);
  CheckReport back = io::report_from_json(io::to_json(r));
  CHECK(back.verdict == r.verdict);
  CHECK(back.stats == r.stats);
  CHECK(back.decompositions.size() == r.decompositions.size());
  CHECK(io::to_json(back) == io::to_json(r));

  SplitWitness w{"blowup", {make_rat(1), make_rat(1)}, {make_rat(1), make_rat(0)}, {make_rat(0), make_rat(1)}, {"a", "b"}};
  SplitWitness w2 = io::witness_from_json(io::to_json(w));
  CHECK(w2.algorithm == w.algorithm);
  CHECK(w2.m == w.m);
  CHECK(w2.m1 == w.m1);
  CHECK(w2.m2 == w.m2);
  CHECK(w2.trace == w.trace);
}

TEST_CASE("run dispatch") {
  Json out = io::run(job("ample", "A1xA1", "catalog:blowup2", {Json{{"values", {-2, -2, -3}}}}));
  CHECK(out["command"] == "ample");
  CHECK(out["ample"] == true);
  Json chk = io::run(job("check", "A1xA1", "catalog:blowup2", {Json{{"values", {-2, -2, -3}}}},
                         Json{{"mode", "equivalence"}}));
  CHECK(chk.dump().find("surjective") != std::string::npos);
  Json sym = io::run(job("symmetrize", "A2", "catalog:chamber:2", {}));
  CHECK(sym.dump().find("\"max_cones\"") != std::string::npos);
  CHECK_THROWS_AS(io::run(job("frobnicate", nullptr, "catalog:blowup2", {})), std::invalid_argument);
  CHECK_THROWS_AS(io::run(job("ample", nullptr, "catalog:blowup2", {})), std::invalid_argument);
}

TEST_CASE("batch") {
  auto empty = io::batch(Json{{"jobs", Json::array()}});
  CHECK(empty.exit_code == 0);
  CHECK(empty.report["summary"]["total"] == 0);

  Json good = {{"id", "a"}, {"command", "ample"}, {"root", "A1xA1"}, {"fan", "catalog:blowup2"},
               {"bundle", {{"values", {-2, -2, -3}}}}};
  Json bad = {{"id", "b"}, {"command", "ample"}, {"fan", "catalog:blowup2"}, {"bundle", {{"values", {1}}}}};
  auto r = io::batch(Json{{"jobs", {good, bad, good}}});
  CHECK(r.exit_code == 1);
  CHECK(r.report["summary"]["total"] == 3);
  CHECK(r.report["summary"]["ok"] == 2);
  CHECK(r.report["summary"]["errors"] == 1);
  CHECK(r.report["jobs"][1]["status"] == "error");
  CHECK(r.report["jobs"][0]["result"] == r.report["jobs"][2]["result"]);
  for (int i = 0; i < 3; ++i) CHECK(r.report["jobs"][i]["index"] == i);

  auto ok = io::batch(Json::array({good}));
  CHECK(ok.exit_code == 0);
  std::string csv = io::to_csv(ok.report);
  CHECK(csv.rfind("ample,command,gg,id,index,status\n", 0) == 0);
  CHECK(csv.find(",status") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
