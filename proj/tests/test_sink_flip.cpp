#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coxeter/errors.hpp"
#include "coxeter/sink_flip.hpp"
#include "test_support.hpp"

using namespace coxeter;
using testing::from_matrix;
using testing::preset;

namespace {

Orientation orient(const GroupContext& ctx, std::vector<std::size_t> heads) {
  return Orientation(ctx.diagram(), std::move(heads));
}

/// Independent admissibility test on a set of directed edges (tail, head).
bool admissible_oracle(const GroupContext& ctx, const Word& c, const Word& seq) {
  std::set<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (ctx.matrix()(c[a], c[b]) != 2) arrows.insert({c[b], c[a]});  // toward the earlier letter
  for (std::size_t x : seq) {
    for (const auto& [tail, head] : arrows)
      if (tail == x) return false;
    std::set<std::pair<std::size_t, std::size_t>> next;
    for (const auto& [tail, head] : arrows) next.insert(head == x ? std::pair{x, tail} : std::pair{tail, head});
    arrows = next;
  }
  return true;
}

}  // namespace

TEST_CASE("orientation of a Coxeter word points at the earlier letter") {
  const auto a1t = preset("affine-A1");
  const auto o = orientation_of_coxeter_word(a1t, {0, 1});
  CHECK(o.head(0) == 0);
  CHECK(sinks(a1t, o) == std::vector<Generator>{0});
  CHECK(o.to_string(a1t.diagram()) == "2->1");

  const auto a2 = preset("A2");
  CHECK(sinks(a2, orientation_of_coxeter_word(a2, {1, 0})) == std::vector<Generator>{1});

  const auto a2t = preset("affine-A2");
  const auto t = orientation_of_coxeter_word(a2t, {0, 1, 2});
  CHECK(t.to_string(a2t.diagram()) == "2->1, 3->1, 3->2");
  CHECK(sinks(a2t, t) == std::vector<Generator>{0});
  CHECK_THROWS_AS(orientation_of_coxeter_word(a2t, {0, 1}), InputError);
  CHECK_THROWS_AS(orientation_of_coxeter_word(a2t, {0, 1, 1}), InputError);
}

TEST_CASE("coxeter word of an orientation") {
  const auto a1t = preset("affine-A1");
  CHECK(coxeter_word_of_orientation(a1t, orient(a1t, {0})) == Word{0, 1});
  const auto a2t = preset("affine-A2");
  CHECK(coxeter_word_of_orientation(a2t, orientation_of_coxeter_word(a2t, {0, 1, 2})) == Word{0, 1, 2});
  const auto a1a1 = from_matrix({{1, 2}, {2, 1}});
  CHECK(coxeter_word_of_orientation(a1a1, orient(a1a1, {})) == Word{0, 1});
  CHECK(sinks(a1a1, orient(a1a1, {})) == std::vector<Generator>{0, 1});
}

TEST_CASE("orientation validation") {
  const auto a2t = preset("affine-A2");
  // Edges of the triangle are (1,2), (1,3), (2,3); heads 2, 1, 3 form the cycle 1->2->3->1.
  CHECK_THROWS_AS(orient(a2t, {1, 0, 2}), PreconditionError);
  CHECK_THROWS_AS(orient(a2t, {2, 0, 1}), InputError);
  CHECK_THROWS_AS(orient(a2t, {0}), InputError);
  CHECK_FALSE(is_acyclic(a2t.diagram(), {1, 0, 2}));
  CHECK(is_acyclic(a2t.diagram(), {0, 0, 1}));
}

TEST_CASE("flipping sinks") {
  const auto a1t = preset("affine-A1");
  const auto o = orient(a1t, {0});
  const auto f = flip_sink(a1t, o, 0);
  CHECK(f.head(0) == 1);
  CHECK(flip_sink(a1t, f, 1) == o);
  CHECK_THROWS_AS(flip_sink(a1t, o, 1), PreconditionError);

  const auto a2t = preset("affine-A2");
  CHECK(flip_sink(a2t, orientation_of_coxeter_word(a2t, {0, 1, 2}), 0) ==
        orientation_of_coxeter_word(a2t, {1, 2, 0}));
}

TEST_CASE("flipping the first letter rotates the Coxeter word") {
  for (const auto& p : preset_catalog()) {
    const auto ctx = build_context(p.matrix, p.name);
    for (const Word& c : all_coxeter_words(ctx)) {
      Word rotated(c.begin() + 1, c.end());
      rotated.push_back(c.front());
      CHECK(flip_sink(ctx, orientation_of_coxeter_word(ctx, c), c.front()) == orientation_of_coxeter_word(ctx, rotated));
    }
  }
}

TEST_CASE("every acyclic orientation has a sink and flips stay acyclic") {
  std::mt19937_64 rng(31);
  for (const auto& p : preset_catalog()) {
    const auto ctx = build_context(p.matrix, p.name);
    for (const Word& c : all_coxeter_words(ctx)) {
      Orientation o = orientation_of_coxeter_word(ctx, c);
      for (int step = 0; step < 30; ++step) {
        const auto s = sinks(ctx, o);
        REQUIRE_FALSE(s.empty());
        o = flip_sink(ctx, o, s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)]);
        CHECK(is_acyclic(ctx.diagram(), o.heads()));
      }
    }
  }
}

TEST_CASE("round trip between Coxeter words and orientations") {
  for (const auto& p : preset_catalog()) {
    const auto ctx = build_context(p.matrix, p.name);
    for (const Word& c : all_coxeter_words(ctx)) {
      const Word back = coxeter_word_of_orientation(ctx, orientation_of_coxeter_word(ctx, c));
      CHECK(commutation_equivalent(ctx, back, c));
      CHECK(orientation_of_coxeter_word(ctx, back) == orientation_of_coxeter_word(ctx, c));
    }
  }
  CHECK(all_coxeter_words(preset("A3")).size() == 6);
}

TEST_CASE("admissibility") {
  const auto a1t = preset("affine-A1");
  const auto base = orient(a1t, {0});
  CHECK(is_admissible(a1t, base, Word{0, 1, 0, 1}));
  CHECK_FALSE(is_admissible(a1t, base, Word{1}));
  CHECK_FALSE(is_admissible(a1t, base, Word{1, 0}));
  const auto a2t = preset("affine-A2");
  CHECK(is_admissible(a2t, orientation_of_coxeter_word(a2t, {0, 1, 2}), Word{0, 1, 2, 0, 1, 2}));
}

TEST_CASE("enumeration") {
  const auto a1t = preset("affine-A1");
  const auto base = orient(a1t, {0});
  CHECK(enumerate_admissible(a1t, base, 2) == std::vector<Word>{{0, 1}});
  CHECK(enumerate_admissible(a1t, base, 0) == std::vector<Word>{{}});
  CHECK(enumerate_admissible(a1t, base, 2, LengthMode::kUpTo).size() == 3);
  const auto a2 = preset("A2");
  CHECK(enumerate_admissible(a2, orientation_of_coxeter_word(a2, {0, 1}), 3) == std::vector<Word>{{0, 1, 0}});
}

TEST_CASE("enumeration matches a brute-force filter over all words") {
  for (const char* name : {"affine-A2", "affine-C2", "A3", "path-inf-3"}) {
    const auto ctx = preset(name);
    for (const Word& c : all_coxeter_words(ctx)) {
      const auto base = orientation_of_coxeter_word(ctx, c);
      std::vector<Word> expected;
      for (const Word& w : testing::all_words(ctx.rank(), 6))
        if (w.size() == 6 && admissible_oracle(ctx, c, w)) expected.push_back(w);
      auto got = enumerate_admissible(ctx, base, 6);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      for (const Word& w : testing::all_words(ctx.rank(), 4)) CHECK(is_admissible(ctx, base, w) == admissible_oracle(ctx, c, w));
    }
  }
}

TEST_CASE("phi") {
  const auto a2 = preset("A2");
  CHECK(phi(a2, Word{0, 1, 0}).counts() == std::vector<std::size_t>{2, 1});
  CHECK(phi(a2, Word{}).counts() == std::vector<std::size_t>{0, 0});
  CHECK(phi(preset("A3"), Word{0, 1, 2, 0}).counts() == std::vector<std::size_t>{2, 1, 1});
  CHECK(PhiVector(2, Word{0}).dominated_by(PhiVector(2, Word{0, 1})));
  CHECK_FALSE(PhiVector(2, Word{0, 0}).dominated_by(PhiVector(2, Word{0, 1})));
}

TEST_CASE("commutation equivalence") {
  const auto a1a1 = from_matrix({{1, 2}, {2, 1}});
  CHECK(commutation_equivalent(a1a1, Word{0, 1}, Word{1, 0}));
  CHECK_FALSE(commutation_equivalent(preset("A2"), Word{0, 1}, Word{1, 0}));
  const auto path = from_matrix({{1, 3, 2}, {3, 1, 2}, {2, 2, 1}});
  CHECK(commutation_equivalent(path, Word{0, 2, 1}, Word{2, 0, 1}));
  CHECK(commutation_normal_form(path, Word{2, 0, 1}) == Word{0, 1, 2});
  CHECK(commutation_class(path, Word{2, 0, 1}).size() == 3);
  // Normal form is an invariant of the swap class.
  for (const Word& w : commutation_class(path, Word{2, 1, 0, 2}))
    CHECK(commutation_normal_form(path, w) == commutation_normal_form(path, Word{2, 1, 0, 2}));
}

TEST_CASE("poset") {
  const auto a1t = preset("affine-A1");
  const auto base = orient(a1t, {0});
  CHECK(poset_leq(a1t, base, {0}, {0, 1, 0}));
  CHECK_FALSE(poset_leq(a1t, base, {0, 1, 0}, {0, 1}));
  CHECK(poset_leq_by_prefix(a1t, {0}, {0, 1, 0}));
  CHECK_THROWS_AS(poset_leq(a1t, base, {1}, {0}), PreconditionError);
}

TEST_CASE("both poset characterizations agree on short admissible pairs") {
  for (const char* name : {"affine-A2", "affine-C2"}) {
    const auto ctx = preset(name);
    const auto base = orientation_of_coxeter_word(ctx, {0, 1, 2});
    const auto census = enumerate_admissible(ctx, base, 6, LengthMode::kUpTo);
    for (const Word& u : census)
      for (const Word& v : census) {
        const bool by_phi = poset_leq(ctx, base, u, v, PosetCheck::kPhiOnly);
        CHECK(by_phi == poset_leq_by_prefix(ctx, u, v));
      }
  }
}

TEST_CASE("phi separates commutation classes and respects alternation") {
  for (const char* name : {"affine-A2", "affine-C2", "triangle-334", "path-inf-3"}) {
    const auto ctx = preset(name);
    for (const Word& c : all_coxeter_words(ctx)) {
      const auto base = orientation_of_coxeter_word(ctx, c);
      std::map<std::vector<std::size_t>, Word> seen;
      for (const Word& w : enumerate_admissible(ctx, base, 6, LengthMode::kUpTo)) {
        CHECK_FALSE(alternation_violation(ctx, base, w).has_value());
        const auto counts = phi(ctx, w).counts();
        for (const Edge& e : ctx.diagram().edges())
          CHECK(std::max(counts[e.u], counts[e.v]) - std::min(counts[e.u], counts[e.v]) <= 1);
        auto [it, fresh] = seen.emplace(counts, w);
        if (!fresh) CHECK(commutation_equivalent(ctx, it->second, w));
      }
    }
  }
}

TEST_CASE("alternation violations are reported on non-admissible input") {
  const auto a1t = preset("affine-A1");
  const auto base = orient(a1t, {0});
  CHECK(alternation_violation(a1t, base, Word{0, 0}).has_value());
  CHECK(alternation_violation(a1t, base, Word{1, 0}).has_value());
  CHECK_FALSE(alternation_violation(a1t, base, Word{0, 1, 0}).has_value());
}
