#include <doctest.h>

#include <json.hpp>

#include "coxeter/errors.hpp"
#include "coxeter/sink_flip.hpp"
#include "coxeter/suites.hpp"
#include "test_support.hpp"

using namespace coxeter;
using testing::preset;

namespace {

const CheckResult* find(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

Budgets zero_budgets() {
  Budgets b;
  b.k_max = b.n_max = b.depth = b.order_length = b.poset_length = b.mt_length = b.census_length = b.random_words = 0;
  return b;
}

}  // namespace

TEST_CASE("group files") {
  const auto ctx = parse_group_json(R"({"name": "x", "n": 2, "m": [[1, 0], [0, 1]]})");
  CHECK(ctx.name() == "x");
  CHECK(ctx.matrix()(0, 1) == kInfinity);
  CHECK(ctx.classification() == Classification::kAffine);
  CHECK(parse_group_json(R"({"n": 1, "m": [[1]]})", "fallback").name() == "fallback");
  CHECK(parse_group_json(group_to_json(preset("H3"))).matrix().entries() == preset("H3").matrix().entries());
  for (const char* bad : {"", "[]", "{\"n\": 2}", "{\"n\": 2, \"m\": [[1, 3]]}", "{\"n\": 2, \"m\": [[1, 3], [4, 1]]}",
                          "{\"n\": 2, \"m\": [[1, -3], [-3, 1]]}", "{\"n\": 2, \"m\": [[1, 3], [3, 2]]}",
                          "{\"n\": 0, \"m\": []}", "{\"n\": 1, \"m\": [[1]], \"name\": 5}"})
    CHECK_THROWS_AS(parse_group_json(bad), InputError);
  CHECK_THROWS_AS(load_group("no-such-group"), InputError);
  CHECK(load_group("G2").name() == "G2");
}

TEST_CASE("word parsing is 1-based") {
  CHECK(parse_word("1,2,3") == Word{0, 1, 2});
  CHECK(parse_word("2") == Word{1});
  CHECK_THROWS_AS(parse_word("0,1"), InputError);
  CHECK_THROWS_AS(parse_word("a"), InputError);
  CHECK_THROWS_AS(parse_word("1,,2"), InputError);
}

TEST_CASE("classify reports") {
  auto r = cmd_classify(preset("affine-A1"));
  CHECK(find(r, "classification")->witness == "affine");
  CHECK(find(r, "irreducible")->witness == "true");
  CHECK(find(r, "diameter")->witness == "1");
  r = cmd_classify(preset("A2"));
  CHECK(find(r, "classification")->witness == "finite");
  r = cmd_classify(testing::from_matrix({{1, 2}, {2, 1}}));
  CHECK(find(r, "irreducible")->witness == "false");
  CHECK(find(r, "components") != nullptr);
  CHECK(r.exit_code() == kExitPass);
}

TEST_CASE("power-reduced") {
  auto r = cmd_power_reduced(preset("affine-A1"), {0, 1}, 50, false);
  CHECK(r.checks.size() == 50);
  CHECK(r.exit_code() == kExitPass);
  r = cmd_power_reduced(preset("affine-A2"), {0, 1, 2}, 12, false);
  CHECK(r.passed());
  r = cmd_power_reduced(preset("A2"), {0, 1}, 10, false);
  CHECK(r.exit_code() == kExitPrecondition);
  CHECK(find(r, "hypothesis")->witness->find("finite") != std::string::npos);
  r = cmd_power_reduced(preset("A2"), {0, 1}, 10, true);
  CHECK(find(r, "negative-control/first-nonreduced-power")->witness->rfind("k=2", 0) == 0);
  CHECK(find(r, "negative-control/order-of-c")->witness == "c^3 = e");
  const auto reducible = testing::from_matrix({{1, 0, 2}, {0, 1, 2}, {2, 2, 1}});
  r = cmd_power_reduced(reducible, {0, 1, 2}, 5, false);
  CHECK(r.exit_code() == kExitPrecondition);
  CHECK(find(r, "hypothesis")->witness->find("reducible") != std::string::npos);
  CHECK_THROWS_AS(cmd_power_reduced(preset("affine-A1"), {0}, 5, false), InputError);
}

TEST_CASE("power-reduced lengths agree with the brute-force models") {
  const testing::Ball a1(testing::dihedral_group(0), 40);
  const testing::Ball a2(testing::affine_a2_group(), 36);
  for (std::size_t k = 1; k <= 12; ++k) {
    CHECK(a1.length(power_word({0, 1}, k)) == 2 * k);
    CHECK(a2.length(power_word({0, 1, 2}, k)) == 3 * k);
  }
  CHECK(check_power_reduced(preset("affine-A1"), {1, 0}, 20).passed());
}

TEST_CASE("admissible census") {
  const auto ctx = preset("affine-A1");
  const auto census = check_admissible_census(ctx, {0, 1}, 12);
  CHECK(census.reduced.passed());
  CHECK(census.reduced.cases == 12);
  CHECK(census.alternation.passed());
  CHECK(census.adjacent_phi.passed());
  CHECK(census.diameter_phi.passed());
  CHECK(census.count_by_length == std::vector<std::size_t>(13, 1));
  const auto r = cmd_admissible_reduced(preset("affine-A2"), {0, 1, 2}, 6);
  CHECK(r.passed());
  CHECK(cmd_admissible_reduced(preset("B2"), {0, 1}, 6).exit_code() == kExitPrecondition);
}

TEST_CASE("admissible census counts match a brute-force filter") {
  const auto ctx = preset("affine-C2");
  for (const Word& c : all_coxeter_words(ctx)) {
    const auto census = check_admissible_census(ctx, c, 6);
    const auto base = orientation_of_coxeter_word(ctx, c);
    for (std::size_t len = 0; len <= 6; ++len)
      CHECK(census.count_by_length[len] == enumerate_admissible(ctx, base, len).size());
  }
}

TEST_CASE("minimal admissible sequences") {
  CHECK(check_prop_mt(preset("A2"), {0, 1}, 6).passed());
  CHECK(check_prop_mt(preset("affine-A1"), {0, 1}, 8).passed());
  CHECK(check_prop_mt(preset("B2"), {0, 1}, 8).passed());
  // From c = (1,2) only e, s1, s1 s2 and w0 arise, each from one minimal sequence.
  CHECK(check_prop_mt(preset("A2"), {0, 1}, 6).cases == 4);
  CHECK(cmd_prop_mt(preset("G2"), {1, 0}, 8).passed());
}

TEST_CASE("growth") {
  const auto trace = growth_trace(preset("affine-A1"), {0, 1}, 20);
  for (std::size_t k = 0; k < trace.lengths.size(); ++k) CHECK(trace.lengths[k] == 2 * (k + 1));
  CHECK(cmd_growth(preset("affine-A2"), {0, 1, 2}, 12, false).passed());
  const auto a2 = growth_trace(preset("A2"), {0, 1}, 5);
  CHECK(a2.reached_w0 == 2u);
  CHECK(a2.lengths == std::vector<std::size_t>{2, 3, 3, 3, 3});
  CHECK(a2.full_descent[1]);
  const auto r = cmd_growth(preset("A2"), {0, 1}, 5, true);
  CHECK(find(r, "growth/stabilizes-at-w0")->witness == "k=2");
  CHECK(cmd_growth(preset("A2"), {0, 1}, 5, false).exit_code() == kExitPrecondition);
}

TEST_CASE("growth lengths agree with the brute-force model") {
  const testing::GroupModel model = testing::affine_a2_group();
  const testing::Ball ball(model, 40);
  const auto trace = growth_trace(preset("affine-A2"), {0, 1, 2}, 10);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(trace.lengths[k - 1] == ball.length(ball.demazure(power_word({0, 1, 2}, k))));
}

TEST_CASE("longest elements") {
  CHECK(length(preset("A2"), longest_element(preset("A2"))) == 3);
  CHECK(length(preset("H3"), longest_element(preset("H3"))) == 15);
  CHECK_THROWS_AS(longest_element(preset("affine-A1")), PreconditionError);
  CHECK(find_w0_sequence(preset("A2"), {0, 1}) == Word{0, 1, 0});
  CHECK(find_w0_sequence(preset("A1"), {0}) == Word{0});
  auto r = cmd_w0_variant(preset("B2"), {0, 1});
  CHECK(r.passed());
  CHECK(r.parameters["w0_length"] == "4");
  CHECK(cmd_w0_variant(preset("affine-A1"), {0, 1}).exit_code() == kExitPrecondition);
}

TEST_CASE("order lemma census") {
  CHECK(check_order_lemma_census(preset("affine-A2"), {0, 1, 2}, 8).passed());
  CHECK(check_order_lemma_census(preset("H3"), {2, 0, 1}, 10).passed());
}

TEST_CASE("poset census") {
  PropertyReport injectivity;
  const auto r = check_alternation_phi_poset(preset("affine-A2"), {0, 1, 2}, 5, &injectivity);
  CHECK(r.passed());
  CHECK(injectivity.passed());
  CHECK(injectivity.cases > 0);
}

TEST_CASE("verify-all on one group") {
  Budgets b;
  b.k_max = 6;
  b.n_max = 6;
  b.depth = 4;
  b.order_length = 6;
  b.poset_length = 4;
  b.mt_length = 5;
  b.census_length = 5;
  b.random_words = 50;
  const auto serial = cmd_verify_all({preset("affine-A2")}, b, true);
  CHECK(serial.passed());
  CHECK(serial.exit_code() == kExitPass);
  CHECK(std::is_sorted(serial.checks.begin(), serial.checks.end(),
                       [](const CheckResult& x, const CheckResult& y) { return x.id < y.id; }));
  auto parallel = cmd_verify_all({preset("affine-A2"), preset("A2")}, b, false);
  auto again = cmd_verify_all({preset("affine-A2"), preset("A2")}, b, true);
  parallel.wall_time = again.wall_time = 0;
  CHECK(parallel.to_json() == again.to_json());
  CHECK(find(parallel, "A2/w0-variant") != nullptr);
  CHECK(find(parallel, "affine-A2/admissible-reduced") != nullptr);
}

TEST_CASE("verify-all with empty budgets warns about coverage") {
  const auto r = cmd_verify_all({preset("A2"), preset("affine-A1")}, zero_budgets(), true);
  CHECK(r.checks.empty());
  CHECK(r.passed());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings.front().find("no coverage") != std::string::npos);
  CHECK(r.exit_code() == kExitPass);
}

TEST_CASE("verify-all refuses the theorem checks on a reducible infinite group") {
  Budgets b = zero_budgets();
  b.k_max = 3;
  const auto r = cmd_verify_all({testing::from_matrix({{1, 0, 2}, {0, 1, 2}, {2, 2, 1}}, "reducible")}, b, true);
  CHECK(find(r, "reducible/powers-reduced")->status == CheckOutcome::kError);
  CHECK(r.exit_code() == kExitPrecondition);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.suite = "s";
  r.group = "g";
  r.parameters["k"] = "1";
  r.checks.push_back({"b", CheckOutcome::kFail, "why"});
  r.checks.push_back({"a", CheckOutcome::kPass, std::nullopt});
  r.wall_time = 1.23456;
  r.sort_checks();
  const auto doc = nlohmann::json::parse(r.to_json());
  CHECK(doc["suite"] == "s");
  CHECK(doc["group"] == "g");
  CHECK(doc["parameters"]["k"] == "1");
  CHECK(doc["checks"][0]["id"] == "a");
  CHECK(doc["checks"][0]["witness"].is_null());
  CHECK(doc["checks"][1]["status"] == "fail");
  CHECK(doc["wall_time"] == doctest::Approx(1.235));
  CHECK(r.exit_code() == kExitVerificationFailure);
  CHECK(r.to_table().find("1 pass, 1 fail, 0 error") != std::string::npos);
  r.checks[1].status = CheckOutcome::kError;
  CHECK(r.exit_code() == kExitPrecondition);
}
