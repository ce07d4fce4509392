// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "coxeter/omega_form.hpp"
#include "coxeter/sink_flip.hpp"
#include "coxeter/suites.hpp"
#include "test_support.hpp"

using namespace coxeter;
using testing::preset;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void absorb(const PropertyReport& r, const std::string& where) {
    if (!r.passed()) fail(where + ": " + (r.witnesses.empty() ? "no witness" : r.witnesses.front()));
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << "  criterion " << (id < 10 ? " " : "") << id << "  " << title;
  if (!o.detail.empty()) line << "  -- " << o.detail;
  line.precision(2);
  line << std::fixed << "  (" << secs << " s)";
  std::cout << line.str() << std::endl;
  failures += !o.ok;
}

std::vector<GroupContext> catalog() {
  std::vector<GroupContext> out;
  for (const auto& p : preset_catalog()) out.push_back(build_context(p.matrix, p.name));
  return out;
}

/// lengths of c^k for k = 1..k_max checked two ways; an optional brute-force
/// model confirms the lengths independently.
void powers(Outcome& o, const char* name, std::size_t k_max, const testing::GroupModel* model) {
  const auto ctx = preset(name);
  const Word c = default_coxeter_word(ctx);
  std::optional<testing::Ball> ball;
  if (model) ball.emplace(*model, ctx.rank() * k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Word w = power_word(c, k);
    const std::string where = std::string(name) + " k=" + std::to_string(k);
    o.require(is_reduced(ctx, w), where + " not reduced");
    o.require(length(ctx, word_to_element(ctx, w)) == ctx.rank() * k, where + " wrong length");
    if (ball) o.require(ball->length(w) == ctx.rank() * k, where + " brute-force length differs");
  }
}

}  // namespace

int main() {
  const auto groups = catalog();
  const testing::GroupModel infinite_dihedral = testing::dihedral_group(0);
  const testing::GroupModel affine_a2 = testing::affine_a2_group();

  criterion(1, "powers of c reduced with length k*n (affine-A1 k<=50; affine-A2, affine-C2 k<=30)", [&] {
    Outcome o;
    powers(o, "affine-A1", 50, &infinite_dihedral);
    powers(o, "affine-A2", 30, &affine_a2);
    powers(o, "affine-C2", 30, nullptr);
    return o;
  });

  // Shared with criterion 9.
  struct Census {
    const char* name;
    std::size_t n_max;
  };
  const std::vector<Census> census{{"affine-A1", 12}, {"affine-A2", 9}, {"affine-C2", 9}, {"triangle-334", 9}};
  PropertyReport adjacent;
  std::size_t adjacent_sequences = 0;

  criterion(2, "every admissible sequence reduced (affine-A1 <=12; affine-A2, affine-C2, triangle-334 <=9)", [&] {
    Outcome o;
    std::size_t total = 0;
    for (const auto& [name, n_max] : census) {
      const auto ctx = preset(name);
      for (const Word& c : all_coxeter_words(ctx)) {
        const auto result = check_admissible_census(ctx, c, n_max);
        o.absorb(result.reduced, name);
        adjacent.merge(result.adjacent_phi);
        adjacent_sequences += result.adjacent_phi.cases;
        total += result.reduced.cases;
      }
    }
    o.detail = o.ok ? std::to_string(total) + " sequences" : o.detail;
    return o;
  });

  criterion(3, "A2 negative control: (s1 s2)^k first non-reduced at k=2, (s1 s2)^3 = identity", [&] {
    Outcome o;
    const auto a2 = preset("A2");
    o.require(is_reduced(a2, power_word({0, 1}, 1)), "k=1 not reduced");
    o.require(!is_reduced(a2, power_word({0, 1}, 2)), "k=2 reduced");
    o.require(word_to_element(a2, power_word({0, 1}, 3)).matrix() == Matrix::identity(a2.field(), 2),
              "(s1 s2)^3 is not the identity matrix");
    const auto report = cmd_power_reduced(a2, {0, 1}, 10, true);
    for (const auto& c : report.checks)
      if (c.id == "negative-control/first-nonreduced-power")
        o.require(c.witness && c.witness->rfind("k=2", 0) == 0, "suite reports " + c.witness.value_or("nothing"));
    return o;
  });

  criterion(4, "omega equivariance on all basis pairs, every Coxeter word, all 12 presets", [&] {
    Outcome o;
    o.require(groups.size() == 12, "catalog size " + std::to_string(groups.size()));
    for (const auto& ctx : groups)
      for (const Word& c : all_coxeter_words(ctx)) o.absorb(check_equivariance(ctx, c, basis_pairs(ctx)), ctx.name());
    return o;
  });

  criterion(5, "initial/final sign dichotomy, zero iff reflections commute, roots to depth 8, all presets", [&] {
    Outcome o;
    std::vector<std::string> converse_failures;
    std::string first_witness;
    for (const auto& ctx : groups)
      for (const Word& c : all_coxeter_words(ctx)) {
        const SignDichotomy r = check_initial_final_signs(ctx, c, 8);
        o.absorb(r.dichotomy, ctx.name());
        if (!r.converse.passed()) {
          if (converse_failures.empty() || converse_failures.back() != ctx.name()) converse_failures.push_back(ctx.name());
          if (first_witness.empty()) first_witness = ctx.name() + " " + r.converse.witnesses.front();
        }
      }
    if (!converse_failures.empty()) {
      std::string names;
      for (const auto& n : converse_failures) names += (names.empty() ? "" : ",") + n;
      o.fail("sign and (zero => commute) hold everywhere; (commute => zero) fails in " + names + "; e.g. " +
             first_witness);
    }
    return o;
  });

  criterion(6, "order lemma on every admissible reduced word of length <=10, all presets", [&] {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& ctx : groups)
      for (const Word& c : all_coxeter_words(ctx)) {
        const auto r = check_order_lemma_census(ctx, c, 10);
        o.absorb(r, ctx.name());
        pairs += r.cases;
      }
    if (o.ok) o.detail = std::to_string(pairs) + " pairs";
    return o;
  });

  criterion(7, "poset characterizations agree and phi separates commutation classes (affine-A2, length <=6)", [&] {
    Outcome o;
    const auto ctx = preset("affine-A2");
    for (const Word& c : all_coxeter_words(ctx)) {
      PropertyReport injectivity;
      o.absorb(check_alternation_phi_poset(ctx, c, 6, &injectivity), "poset");
      o.absorb(injectivity, "phi");
    }
    return o;
  });

  criterion(8, "minimal admissible sequences per Demazure class are reduced (A2, B2, affine-A1, length <=8)", [&] {
    Outcome o;
    for (const char* name : {"A2", "B2", "affine-A1"}) {
      const auto ctx = preset(name);
      for (const Word& c : all_coxeter_words(ctx)) o.absorb(check_prop_mt(ctx, c, 8), name);
    }
    return o;
  });

  criterion(9, "growth strictly increasing with length >= k (affine-A1 k<=20, affine-A2 k<=12); adjacent phi bound", [&] {
    Outcome o;
    for (const auto& [name, k_max, model] :
         {std::tuple{"affine-A1", std::size_t{20}, &infinite_dihedral}, std::tuple{"affine-A2", std::size_t{12}, &affine_a2}}) {
      const auto ctx = preset(name);
      const testing::Ball ball(*model, ctx.rank() * k_max);
      for (const Word& c : all_coxeter_words(ctx)) {
        const auto trace = growth_trace(ctx, c, k_max);
        for (std::size_t k = 1; k <= k_max; ++k) {
          const std::size_t len = trace.lengths[k - 1];
          const std::string where = std::string(name) + " c=(" + format_word(c) + ") k=" + std::to_string(k);
          o.require(len > (k == 1 ? 0 : trace.lengths[k - 2]), where + " not strictly increasing");
          o.require(len >= k, where + " shorter than k");
          o.require(!trace.full_descent[k - 1], where + " every generator is a descent");
          o.require(len == ball.length(ball.demazure(power_word(c, k))), where + " brute-force length differs");
        }
      }
    }
    o.absorb(adjacent, "adjacent phi");
    o.require(adjacent_sequences > 0, "criterion 2 census missing");
    return o;
  });

  criterion(10, "w0 reached by an admissible sequence of length l(w0) (A2 3, B2 4, G2 6, A3 6, H3 15)", [&] {
    Outcome o;
    const std::map<std::string, std::size_t> expected{{"A1", 1}, {"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}, {"H3", 15}};
    for (const auto& ctx : groups) {
      if (ctx.classification() != Classification::kFinite) continue;
      const Element w0 = longest_element(ctx);
      o.require(length(ctx, w0) == expected.at(ctx.name()), ctx.name() + " l(w0) = " + std::to_string(length(ctx, w0)));
      for (const Word& c : all_coxeter_words(ctx)) {
        const auto seq = find_w0_sequence(ctx, c);
        const std::string where = ctx.name() + " c=(" + format_word(c) + ")";
        if (!seq) {
          o.fail(where + " no sequence");
          continue;
        }
        o.require(is_admissible(ctx, orientation_of_coxeter_word(ctx, c), *seq), where + " not admissible");
        o.require(demazure_product(ctx, *seq) == w0, where + " Demazure product is not w0");
        o.require(seq->size() == expected.at(ctx.name()), where + " length " + std::to_string(seq->size()));
      }
    }
    return o;
  });

  criterion(11, "B preserved by 1000 random words per preset; two reducedness tests agree on rank-2 words <=8", [&] {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (const auto& ctx : groups)
      for (int k = 0; k < 1000; ++k) {
        const Word w = testing::random_word(rng, ctx.rank(), 20);
        const Element e = word_to_element(ctx, w);
        o.require(e.matrix().transpose() * ctx.form() * e.matrix() == ctx.form(),
                  ctx.name() + " (" + format_word(w) + ") does not preserve B");
      }
    for (const auto& ctx : groups) {
      if (ctx.rank() != 2) continue;
      for (const Word& w : testing::all_words(2, 8))
        o.require(is_reduced(ctx, w) == is_reduced_by_reflection_sequence(ctx, w),
                  ctx.name() + " (" + format_word(w) + ") tests disagree");
    }
    return o;
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
