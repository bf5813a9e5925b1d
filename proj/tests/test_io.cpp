#include "doctest.h"
#include "kmforge/error.hpp"
#include "kmforge/io/json.hpp"
#include "support.hpp"

using namespace kmforge;
using namespace testing_support;
using nlohmann::json;

TEST_CASE("cyclotomic encoding") {
  const auto z = zeta_power(5, 1) + num(3, 7);
  const json j = io::to_json(z);
  CHECK(j["level"] == 5);
  CHECK(j["coords"][0] == json::array({"3", "7"}));
  CHECK(io::cyclotomic_from_json(j) == z);
  CHECK(io::to_json(num(-2, 3)) == json::parse(R"({"level":1,"coords":[["-2","3"]]})"));
  const auto big = CyclotomicNumber(Rational("123456789012345678901234567890/7", 10));
  CHECK(io::cyclotomic_from_json(io::to_json(big)) == big);
  CHECK_THROWS_AS(io::cyclotomic_from_json(json::parse(R"({"level":5,"coords":[["1","1"]]})")), Error);
  CHECK_THROWS_AS(io::cyclotomic_from_json(json::parse(R"({"level":1,"coords":[["x","1"]]})")), Error);
  CHECK_THROWS_AS(io::cyclotomic_from_json(json::parse(R"({"coords":[]})")), Error);
}

TEST_CASE("automorphisms, loops, affine elements and standard maps round trip") {
  for (const auto& name : automorphism_names(sl2())) {
    auto a = named_automorphism(sl2(), name);
    CHECK(io::automorphism_from_json(io::to_json(a)) == a);
  }
  CHECK(io::automorphism_from_json(json::parse(R"({"algebra":"sl2C","catalog":"mu"})")) == mu());

  std::mt19937_64 rng(4);
  auto ctx = TwistContext::make(tau(), 2);
  for (int t = 0; t < 5; ++t) {
    auto u = random_loop(ctx, rng, 3);
    CHECK(io::loop_from_json(io::to_json(u)) == u);
    auto x = random_affine(ctx, rng, 2);
    CHECK(io::affine_from_json(io::to_json(x)) == x);
  }
  auto phi = StandardAutomorphism::constant(ctx, mu(), -1);
  auto back = io::standard_from_json(io::to_json(phi));
  CHECK(back.epsilon() == -1);
  CHECK(back.phi0() == mu());
  auto u = random_loop(ctx, rng, 3);
  CHECK(back.apply(u) == phi.apply(u));

  auto bad = io::to_json(LoopElement::monomial(ctx, 1, h()));
  CHECK_THROWS_AS(io::loop_from_json(bad), Error);
}

TEST_CASE("invariants serialize by catalog name") {
  FirstKindInvariant f;
  f.q = 4;
  f.p = 1;
  f.rho_id = "id";
  f.rho = FiniteAutomorphism::identity(sl2());
  f.beta_class = "id";
  const json j = io::to_json(Invariant(f));
  CHECK(j["rho"] == "id");
  CHECK(invariants_equal(io::invariant_from_json(j, nullptr), Invariant(f)));
  const json s = io::to_json(Invariant(SecondKindInvariant{mu(), tau()}));
  CHECK(s["phi_plus"]["catalog"] == "mu");
  CHECK_FALSE(s["phi_plus"].contains("matrix"));
  CHECK(invariants_equal(io::invariant_from_json(s, nullptr), Invariant(SecondKindInvariant{mu(), tau()})));
  try {
    io::invariant_from_json(json::parse(R"({"kind":"first","algebra":"sl2C","q":5,"p":0,"rho":"x","beta":"id"})"),
                            nullptr);
    FAIL("expected CatalogMiss");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CatalogMiss);
  }
}

TEST_CASE("real form descriptors") {
  const auto forms = enumerate_real_forms(sl2());
  const json j = io::to_json(forms.back());
  CHECK(j["hat"] == "R(ic)+R(id)");
  CHECK(j["type"] == "almost split");
  CHECK(io::to_json(forms.front())["type"] == "almost compact");
}
