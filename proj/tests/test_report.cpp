#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "a2ck/presentation.hpp"
#include "a2ck/report.hpp"

namespace {

const char* kNoisyB2 =
    "# same data as the first bundled presentation,\n"
    "# written with scrambled whitespace and comments\n"
    "\n"
    "q 2\n"
    "\n"
    "gen   x0 x1\tx2 x3 x4 x5 x6\n"
    "# relators follow\n"
    "rel x0 x1 x4\n"
    "rel x0\tx2 x1\n"
    "rel x0 x4 x2\n"
    "\n"
    "rel x1 x5 x5\n"
    "rel x2 x3 x3\n"
    "rel x3 x5 x6\n"
    "rel x4 x6 x6   \n";

bool hex16(const std::string& s) {
  if (s.size() != 16) return false;
  for (char c : s)
    if (!(('0' <= c && c <= '9') || ('a' <= c && c <= 'f'))) return false;
  return true;
}

}  // namespace

TEST_CASE("digest known answers and canonical invariance") {
  CHECK(a2ck::fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(a2ck::fnv1a64_hex("a") == "af63dc4c8601ec8c");

  auto b2 = a2ck::builtin("B.2");
  auto c1 = a2ck::builtin("C.1");
  std::string db2 = a2ck::presentation_digest(b2);
  std::string dc1 = a2ck::presentation_digest(c1);
  CHECK(hex16(db2));
  CHECK(hex16(dc1));
  CHECK(db2 != dc1);

  auto noisy = a2ck::parse_presentation(kNoisyB2);
  CHECK(a2ck::presentation_digest(noisy) == db2);
}

TEST_CASE("group json fields") {
  a2ck::FinAbGroup g{0, {a2ck::Int(2), a2ck::Int(6)}};
  a2ck::Json j = a2ck::group_json(g);
  CHECK(j["rank"] == 0);
  CHECK(j["factors"] == a2ck::Json::array({"2", "6"}));
  CHECK(j["notation"] == "Z/2 + Z/6");
  CHECK(j["primary"] == "(Z/2)^2 + Z/3");

  a2ck::Json jf = a2ck::group_json(a2ck::FinAbGroup{2, {}});
  CHECK(jf["rank"] == 2);
  CHECK(jf["factors"].empty());
  CHECK(jf["notation"] == "Z^2");

  CHECK(a2ck::group_json(a2ck::FinAbGroup{})["notation"] == "0");
}

TEST_CASE("ktheory json carries the frozen pipeline values") {
  auto vp = a2ck::validate(a2ck::builtin("B.2"));
  auto rep = a2ck::k_theory_a2(vp, "B.2");
  std::string digest = a2ck::presentation_digest(vp.presentation());
  a2ck::Json j = a2ck::ktheory_json(rep, digest);

  CHECK(j["version"] == a2ck::kVersion);
  CHECK(j["source"] == "B.2");
  CHECK(j["input_digest"] == digest);
  CHECK(j["q"] == 2);
  CHECK(j["alphabet_size"] == 21);
  CHECK(j["r"] == 0);
  CHECK(j["torsion_factors"] == a2ck::Json::array({"2", "6"}));
  CHECK(j["torsion_primary"] == a2ck::Json::array({"2", "2", "3"}));
  CHECK(j["k0"]["notation"] == "Z/2 + Z/6");
  CHECK(j["k0"]["primary"] == "(Z/2)^2 + Z/3");
  CHECK(j["k1"] == j["k0"]);
  CHECK(j["identity_order"] == "1");
  CHECK(j["rank_one_ck"] == false);
  CHECK(j["checks"]["hat"]["all_pass"] == true);
  CHECK(j["checks"]["check"]["all_pass"] == true);
  CHECK(j["checks"]["hat_check_agreement"] == true);
  CHECK(j["checks"]["bounds"]["all_pass"] == true);
  CHECK(j["checks"]["bounds"]["upper"] == "3");
  CHECK(j["checks"]["conjectured_order"] == "1");
  CHECK(j["conjecture_agreement"] == true);

  std::string dump = j.dump(2);
  CHECK(dump.find("\"version\"") < dump.find("\"source\""));
  CHECK(dump.find("\"source\"") < dump.find("\"input_digest\""));
  CHECK(dump.find("\"torsion_factors\"") < dump.find("\"torsion_primary\""));
  CHECK(dump.find("\"identity_order\"") < dump.find("\"rank_one_ck\""));
  CHECK(dump.find("\"checks\"") < dump.find("\"conjecture_agreement\""));

  CHECK(a2ck::Json::parse(dump) == j);
}

TEST_CASE("ktheory json is byte stable across runs") {
  auto run = [] {
    auto vp = a2ck::validate(a2ck::builtin("C.1"));
    auto rep = a2ck::k_theory_a2(vp, "C.1");
    return a2ck::ktheory_json(rep, a2ck::presentation_digest(vp.presentation()))
        .dump(2);
  };
  CHECK(run() == run());
}

TEST_CASE("ktheory text form") {
  auto vp = a2ck::validate(a2ck::builtin("B.2"));
  auto rep = a2ck::k_theory_a2(vp, "B.2");
  std::string text = a2ck::ktheory_text(rep, "deadbeefdeadbeef");

  CHECK(text.find("source: B.2") != std::string::npos);
  CHECK(text.find("input digest: deadbeefdeadbeef") != std::string::npos);
  CHECK(text.find("q = 2, alphabet size = 21") != std::string::npos);
  CHECK(text.find("invariant factors [2, 6]") != std::string::npos);
  CHECK(text.find("K0 = K1 = Z/2 + Z/6") != std::string::npos);
  CHECK(text.find("primary form: (Z/2)^2 + Z/3") != std::string::npos);
  CHECK(text.find("identity class order = 1, conjectured 1 (conjecture: agrees)") !=
        std::string::npos);
  CHECK(text.find("rank-one algebra: no") != std::string::npos);
  CHECK(text.find("checks: hat pair ok, check pair ok, agreement ok, bounds ok") !=
        std::string::npos);
}

TEST_CASE("analyze report for a commuting pair") {
  auto one = a2ck::IntMatrix::identity(1);
  auto r = a2ck::analyze_pair(one, one, 4);
  CHECK(r.n == 1);
  CHECK(r.commuting);
  REQUIRE(r.homology.has_value());
  REQUIRE(r.kgroups.has_value());

  a2ck::Json j = a2ck::analyze_json(r);
  CHECK(j["version"] == a2ck::kVersion);
  CHECK(j["n"] == 1);
  CHECK(j["commuting"] == true);
  CHECK(j["conditions"]["h0"]["status"] == "pass");
  CHECK(j["conditions"]["h3"]["status"] == "inconclusive");
  CHECK(j["conditions"]["h3_window"] == 4);
  CHECK(j["homology"]["h0"]["notation"] == "Z");
  CHECK(j["homology"]["h1"]["notation"] == "Z^2");
  CHECK(j["homology"]["h2"]["notation"] == "Z");
  CHECK(j["k0"]["notation"] == "Z^2");
  CHECK(j["k1"]["notation"] == "Z^2");
  CHECK(a2ck::Json::parse(j.dump()) == j);

  std::string text = a2ck::analyze_text(r);
  CHECK(text.find("n = 1, h3 window = 4") != std::string::npos);
  CHECK(text.find("h0: pass") != std::string::npos);
  CHECK(text.find("h3: inconclusive (") != std::string::npos);
  CHECK(text.find("homology: H0 = Z, H1 = Z^2, H2 = Z") != std::string::npos);
  CHECK(text.find("K0 = Z^2") != std::string::npos);
  CHECK(text.find("K1 = Z^2") != std::string::npos);
}

TEST_CASE("analyze report for a non-commuting pair") {
  auto m1 = a2ck::IntMatrix::from_rows({{1, 1}, {0, 1}});
  auto m2 = a2ck::IntMatrix::from_rows({{1, 0}, {1, 1}});
  auto r = a2ck::analyze_pair(m1, m2, 3);
  CHECK(r.n == 2);
  CHECK_FALSE(r.commuting);
  CHECK_FALSE(r.homology.has_value());
  CHECK_FALSE(r.kgroups.has_value());

  a2ck::Json j = a2ck::analyze_json(r);
  CHECK(j["commuting"] == false);
  CHECK(j["conditions"]["h1a"]["status"] == "fail");
  CHECK_FALSE(j.contains("homology"));
  CHECK_FALSE(j.contains("k0"));

  std::string text = a2ck::analyze_text(r);
  CHECK(text.find("h1a: fail (products differ at") != std::string::npos);
  CHECK(text.find("homology: skipped (matrices do not commute)") !=
        std::string::npos);
  CHECK(text.find("K0 =") == std::string::npos);
}

TEST_CASE("validate report forms") {
  auto vp = a2ck::validate(a2ck::builtin("B.2"));
  std::string digest = a2ck::presentation_digest(vp.presentation());

  a2ck::Json j = a2ck::validate_json(vp, digest);
  CHECK(j["version"] == a2ck::kVersion);
  CHECK(j["input_digest"] == digest);
  CHECK(j["valid"] == true);
  CHECK(j["q"] == 2);
  CHECK(j["generators"] == 7);
  CHECK(j["relators"] == 7);
  CHECK(j["alphabet_size"] == 21);

  CHECK(a2ck::validate_text(vp) ==
        "valid, q=2, alphabet size 21, 7 generators, 7 relators\n");
}
