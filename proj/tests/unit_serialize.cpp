#include <doctest.h>

#include "g1b/brauer.hpp"
#include "g1b/ec.hpp"
#include "g1b/kummer.hpp"
#include "g1b/obstruction.hpp"
#include "g1b/serialize.hpp"
#include "g1b/valuation.hpp"

using namespace g1b;

TEST_CASE("field elements and rationals print in the stable text forms") {
  Field F7 = Field::make(7, 1);
  CHECK(F7.from_int(3).to_string() == "7^1:[3]");
  Field F9 = Field::make(3, 2);
  CHECK(F9.from_coeffs({1, 2}).to_string() == "3^2:[1,2]");
  CHECK(BrauerClass::make(0, 1).to_string() == "0/1");
  CHECK(BrauerClass::make(5, 3).to_string() == "2/3");
  CHECK(BrauerClass::make(-1, 3).to_string() == "2/3");
  CHECK(BrauerClass::make(2, 4).to_string() == "1/2");
  // never a float: the string contains only digits and a slash
  std::string s = BrauerClass::make(1, 3).to_string();
  CHECK(s.find('.') == std::string::npos);
}

TEST_CASE("point and class encodings") {
  Field F = Field::make(7, 1);
  Point T = Point::affine(F.from_int(0), F.from_int(3));
  ojson jt = encode(T);
  CHECK(jt.dump() == R"({"x":"7^1:[0]","y":"7^1:[3]"})");
  ojson ji = encode(Point::at_infinity());
  CHECK(ji.dump() == R"({"inf":true})");

  TameContext ctx = TameContext::make(7, 3, 1);
  KummerClass a = KummerClass::make(ctx, 1, ctx.residue_field().from_int(3));
  ojson ja = encode(a);
  CHECK(ja["p"] == 7);
  CHECK(ja["n"] == 3);
  CHECK(ja["f"] == 1);
  CHECK(ja["v"] == 1);
  CHECK(ja["u"].get<std::string>() == "7^1:[3]");
  std::vector<std::string> keys;
  for (auto it = ja.begin(); it != ja.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p", "n", "f", "v", "u"});
}

TEST_CASE("envelope puts schema first and echoes inputs and seed") {
  ojson j = envelope("obstruct", ojson{{"p", 7}, {"n", 3}}, 42);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "command", "inputs", "seed"});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "obstruct");
  CHECK(j["inputs"]["p"] == 7);
  CHECK(j["seed"] == 42);
}

TEST_CASE("dump is deterministic, 2-space indented, newline terminated") {
  ojson j = envelope("x", ojson::object(), 0);
  std::string s1 = dump_json(j);
  std::string s2 = dump_json(envelope("x", ojson::object(), 0));
  CHECK(s1 == s2);
  CHECK(s1.back() == '\n');
  CHECK(s1.find("  \"schema\": 1") != std::string::npos);
}

TEST_CASE("level structure encoding round trips the witness data") {
  Field F = Field::make(7, 1);
  Curve E = Curve::make(F, F.from_int(0), F.from_int(2));
  LevelStructure ls = symplectify(level_structure(E, 3));
  ojson j = encode(ls);
  CHECK(j["p"] == 7);
  CHECK(j["n"] == 3);
  CHECK(j["c"] == 1);
  CHECK(j["zeta"].get<std::string>() == "7^1:[2]");
  CHECK(j["T"].contains("x"));
  CHECK(j["S"].contains("y"));
}

TEST_CASE("twist certificate and noncyclic report encodings") {
  TwistCertificate cert = twist_certificate(7, 3);
  ojson j = encode(cert);
  CHECK(j["ok"] == true);
  CHECK(j["p"] == 7);
  CHECK(j["delegated_n"] == 3);
  CHECK(j["conditions"].is_array());
  for (const auto& item : j["conditions"]) {
    CHECK(item.contains("condition"));
    CHECK(item.contains("ok"));
  }
  CHECK(j["symbol_value"].get<std::string>() == "1/3");
  CHECK(j["witness_curve"]["p"] == 7);

  ojson r = encode(noncyclic_certificate(2));
  CHECK(r["n"] == 2);
  CHECK(r["cyclic_subgroups_scanned"] == 136);
  CHECK(r["splitting_found"] == 0);
  CHECK(r["max_intersection_order"] == 2);
  CHECK(r["min_complement_order"] == 8);
  CHECK(r["counting_branch"] == "noncyclic");
  CHECK(r["branches_agree"] == true);

  ojson rc = encode(noncyclic_certificate(11, false));
  CHECK_FALSE(rc.contains("max_intersection_order"));
  CHECK(rc["exhaustive_ran"] == false);
  CHECK(rc["counting_branch"] == "noncyclic");
}
