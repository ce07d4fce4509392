#include "coxeter/suites.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "coxeter/errors.hpp"
#include "coxeter/presets.hpp"
#include "coxeter/sink_flip.hpp"

namespace coxeter {

namespace {

using Clock = std::chrono::steady_clock;

std::string pad(std::size_t k, int width = 3) {
  std::string s = std::to_string(k);
  return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, '0') + s;
}

std::string cw(const Word& c) { return "c=(" + format_word(c) + ")"; }

std::optional<std::string> infinite_irreducible_violation(const GroupContext& ctx) {
  if (!ctx.irreducible())
    return "hypothesis violated: the group is reducible (" + std::to_string(ctx.components().size()) +
           " diagram components); verify each component on its own";
  if (ctx.classification() == Classification::kFinite)
    return "hypothesis violated: the group is finite; this suite needs an infinite irreducible group "
           "(use --negative-control for a finite control run)";
  return std::nullopt;
}

void check_coxeter_word(const GroupContext& ctx, const Word& c_word) {
  if (!is_coxeter_word(ctx, c_word))
    throw InputError("'" + format_word(c_word) + "' is not a Coxeter word (a permutation of 1.." +
                     std::to_string(ctx.rank()) + ")");
}

VerificationReport start(std::string suite, const GroupContext& ctx) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.group = ctx.name().empty() ? "(unnamed)" : ctx.name();
  return r;
}

void finish(VerificationReport& r, Clock::time_point t0) {
  r.sort_checks();
  r.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
}

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_length);
  std::uniform_int_distribution<std::size_t> letter(0, rank - 1);
  Word w(len_dist(rng));
  for (auto& x : w) x = letter(rng);
  return w;
}

/// Every word of length <= max_length, shortest first.
std::vector<Word> all_words(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (Generator x = 0; x < rank; ++x) {
        Word w = out[k];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

bool Budgets::empty() const {
  return k_max == 0 && n_max == 0 && depth == 0 && order_length == 0 && poset_length == 0 && mt_length == 0 &&
         census_length == 0 && random_words == 0;
}

CheckResult to_check(std::string id, const PropertyReport& report) {
  CheckResult c{std::move(id), CheckOutcome::kPass, std::nullopt};
  if (report.status == CheckStatus::kFail) c.status = CheckOutcome::kFail;
  if (report.status == CheckStatus::kPrecondition) c.status = CheckOutcome::kError;
  if (!report.passed() && !report.witnesses.empty()) {
    std::string w;
    for (std::size_t k = 0; k < std::min<std::size_t>(3, report.witnesses.size()); ++k)
      w += (k ? " | " : "") + report.witnesses[k];
    c.witness = w;
  }
  return c;
}

Word default_coxeter_word(const GroupContext& ctx) {
  Word w(ctx.rank());
  std::iota(w.begin(), w.end(), 0);
  return w;
}

Element longest_element(const GroupContext& ctx) {
  if (ctx.classification() != Classification::kFinite)
    throw PreconditionError("longest element requested for a non-finite group");
  Element e = Element::identity(ctx);
  for (;;) {
    Generator i = 0;
    while (i < ctx.rank() && e.has_left_descent(i)) ++i;
    if (i == ctx.rank()) return e;
    e = hecke_pi(ctx, i, std::move(e));
  }
}

Word power_word(const Word& c_word, std::size_t k) {
  Word out;
  out.reserve(c_word.size() * k);
  for (std::size_t r = 0; r < k; ++r) out.insert(out.end(), c_word.begin(), c_word.end());
  return out;
}

PropertyReport check_power_reduced(const GroupContext& ctx, const Word& c_word, std::size_t k_max) {
  PropertyReport report;
  for (std::size_t k = 1; k <= k_max; ++k) {
    ++report.cases;
    const Word w = power_word(c_word, k);
    if (!is_reduced(ctx, w)) {
      report.fail(cw(c_word) + " c^" + std::to_string(k) + " is not reduced");
      continue;
    }
    const std::size_t len = length(ctx, word_to_element(ctx, w));
    if (len != k * ctx.rank())
      report.fail(cw(c_word) + " l(c^" + std::to_string(k) + ") = " + std::to_string(len) + ", expected " +
                  std::to_string(k * ctx.rank()));
  }
  return report;
}

AdmissibleCensus check_admissible_census(const GroupContext& ctx, const Word& c_word, std::size_t n_max) {
  check_coxeter_word(ctx, c_word);
  AdmissibleCensus census;
  census.count_by_length.assign(n_max + 1, 0);
  const Orientation base = orientation_of_coxeter_word(ctx, c_word);
  const auto diam = ctx.diameter();
  const auto& edges = ctx.diagram().edges();

  struct Node {
    Element prefix;
    bool reduced;
  };
  std::vector<Node> path{{Element::identity(ctx), true}};

  for_each_admissible(ctx, base, n_max, [&](std::span<const Generator> seq) {
    ++census.count_by_length[seq.size()];
    if (seq.empty()) return Visit::kDescend;
    path.erase(path.begin() + static_cast<std::ptrdiff_t>(seq.size()), path.end());
    const Node& parent = path.back();
    const Generator x = seq.back();
    const bool reduced = parent.reduced && !parent.prefix.has_right_descent(x);
    Element next = parent.prefix;
    next.right_multiply(ctx, x);
    path.push_back({std::move(next), reduced});
    const Word word(seq.begin(), seq.end());

    ++census.reduced.cases;
    if (!reduced) census.reduced.fail(cw(c_word) + " admissible (" + format_word(word) + ") is not reduced");
    if (seq.size() == n_max && is_reduced(ctx, word) != reduced)
      census.reduced.fail(cw(c_word) + " (" + format_word(word) + "): prefix and suffix reducedness tests disagree");

    ++census.alternation.cases;
    if (auto v = alternation_violation(ctx, base, seq)) census.alternation.fail(cw(c_word) + " " + *v);

    const PhiVector counts = phi(ctx, seq);
    ++census.adjacent_phi.cases;
    for (const Edge& e : edges) {
      const std::size_t a = counts[e.u], b = counts[e.v];
      if ((a > b ? a - b : b - a) > 1) {
        census.adjacent_phi.fail(cw(c_word) + " (" + format_word(word) + "): counts of adjacent " +
                                 std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + " differ by more than 1");
        break;
      }
    }
    if (diam) {
      ++census.diameter_phi.cases;
      const auto [lo, hi] = std::minmax_element(counts.counts().begin(), counts.counts().end());
      if (*hi - *lo > *diam)
        census.diameter_phi.fail(cw(c_word) + " (" + format_word(word) + "): max count - min count exceeds diameter " +
                                 std::to_string(*diam));
    }
    return Visit::kDescend;
  });
  return census;
}

PropertyReport check_prop_mt(const GroupContext& ctx, const Word& c_word, std::size_t n_max) {
  check_coxeter_word(ctx, c_word);
  const Orientation base = orientation_of_coxeter_word(ctx, c_word);
  struct ClassInfo {
    std::size_t min_length;
    std::vector<Word> minimal;
    Element product;
  };
  std::map<std::string, ClassInfo> classes;
  std::vector<Element> path{Element::identity(ctx)};
  PropertyReport report;

  for_each_admissible(ctx, base, n_max, [&](std::span<const Generator> seq) {
    const Word word(seq.begin(), seq.end());
    Element product = demazure_product(ctx, word);
    if (!seq.empty()) {
      // The right-extension recursion is an independent route to the same product.
      path.erase(path.begin() + static_cast<std::ptrdiff_t>(seq.size()), path.end());
      Element extended = demazure_extend_right(ctx, path.back(), seq.back());
      if (!(extended == product))
        report.fail(cw(c_word) + " (" + format_word(word) + "): left and right Demazure recursions disagree");
      path.push_back(std::move(extended));
    }
    const std::string key = product.key();
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes.emplace(key, ClassInfo{word.size(), {word}, std::move(product)});
    } else if (word.size() < it->second.min_length) {
      it->second.min_length = word.size();
      it->second.minimal = {word};
    } else if (word.size() == it->second.min_length) {
      it->second.minimal.push_back(word);
    }
    return Visit::kDescend;
  });

  for (const auto& [key, info] : classes)
    for (const Word& w : info.minimal) {
      ++report.cases;
      if (!is_reduced(ctx, w))
        report.fail(cw(c_word) + " minimal sequence (" + format_word(w) + ") for its Demazure product is not reduced");
      else if (!(word_to_element(ctx, w) == info.product))
        report.fail(cw(c_word) + " minimal sequence (" + format_word(w) + ") multiplies to a different element");
    }
  return report;
}

GrowthTrace growth_trace(const GroupContext& ctx, const Word& c_word, std::size_t k_max) {
  check_coxeter_word(ctx, c_word);
  GrowthTrace trace;
  std::optional<Element> w0;
  if (ctx.classification() == Classification::kFinite) w0 = longest_element(ctx);
  Element w = Element::identity(ctx);
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (auto it = c_word.rbegin(); it != c_word.rend(); ++it) w = hecke_pi(ctx, *it, std::move(w));
    trace.lengths.push_back(reduced_word(ctx, w).size());
    bool all = true;
    for (Generator i = 0; i < ctx.rank() && all; ++i) all = w.has_left_descent(i);
    trace.full_descent.push_back(all);
    if (w0 && !trace.reached_w0 && w == *w0) trace.reached_w0 = k;
  }
  return trace;
}

std::optional<Word> find_w0_sequence(const GroupContext& ctx, const Word& c_word) {
  check_coxeter_word(ctx, c_word);
  const Element w0 = longest_element(ctx);
  struct State {
    Orientation orientation;
    Element product;
    Word seq;
  };
  std::deque<State> queue;
  std::set<std::pair<std::vector<std::size_t>, std::string>> seen;
  queue.push_back({orientation_of_coxeter_word(ctx, c_word), Element::identity(ctx), {}});
  seen.insert({queue.front().orientation.heads(), queue.front().product.key()});
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    if (s.product == w0) return s.seq;
    for (Generator x : sinks(ctx, s.orientation)) {
      State next{flip_sink(ctx, s.orientation, x), demazure_extend_right(ctx, s.product, x), s.seq};
      next.seq.push_back(x);
      if (seen.insert({next.orientation.heads(), next.product.key()}).second) queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

PropertyReport check_alternation_phi_poset(const GroupContext& ctx, const Word& c_word, std::size_t length,
                                           PropertyReport* injectivity) {
  check_coxeter_word(ctx, c_word);
  const Orientation base = orientation_of_coxeter_word(ctx, c_word);
  const auto census = enumerate_admissible(ctx, base, length, LengthMode::kUpTo);
  PropertyReport poset;

  if (injectivity) {
    std::map<std::vector<std::size_t>, Word> by_phi;
    for (const Word& w : census) {
      ++injectivity->cases;
      auto [it, fresh] = by_phi.emplace(phi(ctx, w).counts(), w);
      if (!fresh && !commutation_equivalent(ctx, it->second, w))
        injectivity->fail(cw(c_word) + " (" + format_word(it->second) + ") and (" + format_word(w) +
                          ") share phi but are not commutation equivalent");
    }
  }

  for (const Word& u : census)
    for (const Word& v : census) {
      ++poset.cases;
      try {
        poset_leq(ctx, base, u, v, PosetCheck::kCrossCheck);
      } catch (const std::logic_error& e) {
        poset.fail(cw(c_word) + " " + e.what());
      }
    }
  return poset;
}

PropertyReport check_order_lemma_census(const GroupContext& ctx, const Word& c_word, std::size_t length) {
  const OmegaForm omega = build_omega(ctx, c_word);
  const Orientation base = orientation_of_coxeter_word(ctx, c_word);
  PropertyReport report;

  // Pairs (i, N) are checked when the N-th letter is appended, so every pair
  // of every admissible reduced word is seen exactly once along the DFS path.
  struct Node {
    Element prefix;
    RootVector root;
    Matrix reflection;
  };
  std::vector<Node> path;
  std::vector<std::size_t> path_len;  // path[k] belongs to length k + 1
  Element identity = Element::identity(ctx);

  for_each_admissible(ctx, base, length, [&](std::span<const Generator> seq) {
    if (seq.empty()) return Visit::kDescend;
    path.erase(path.begin() + static_cast<std::ptrdiff_t>(seq.size() - 1), path.end());
    const Element& prefix = path.empty() ? identity : path.back().prefix;
    const Generator x = seq.back();
    if (prefix.has_right_descent(x)) return Visit::kPrune;  // not reduced; nor are its extensions
    RootVector root = prefix.matrix().column(x);
    Matrix refl = reflection_matrix(ctx, root);
    for (std::size_t i = 0; i < path.size(); ++i) {
      ++report.cases;
      const AlgReal value = eval_omega(omega, path[i].root, root);
      const Sign sign = value.sign();
      if (sign == Sign::kNegative) continue;
      if (sign == Sign::kPositive || !matrices_commute(path[i].reflection, refl))
        report.fail(cw(c_word) + " word (" + format_word(Word(seq.begin(), seq.end())) + ") pair (" +
                    std::to_string(i + 1) + "," + std::to_string(seq.size()) + "): omega = " + value.to_string() +
                    (sign == Sign::kZero ? " with non-commuting reflections" : ""));
    }
    Element next = prefix;
    next.right_multiply(ctx, x);
    path.push_back({std::move(next), std::move(root), std::move(refl)});
    if (seq.size() == length) {
      // Leaves also go through the library's stand-alone check.
      PropertyReport leaf = check_order_lemma(ctx, omega, Word(seq.begin(), seq.end()));
      leaf.cases = 0;
      report.merge(leaf);
    }
    return Visit::kDescend;
  });
  return report;
}

VerificationReport cmd_classify(const GroupContext& ctx) {
  const auto t0 = Clock::now();
  VerificationReport r = start("classify", ctx);
  r.parameters["rank"] = std::to_string(ctx.rank());
  r.parameters["field_conductor"] = std::to_string(ctx.field().conductor());
  std::string minors;
  for (const auto& m : ctx.leading_minors()) minors += (minors.empty() ? "" : "; ") + m.to_string();
  r.checks.push_back({"classification", CheckOutcome::kPass, to_string(ctx.classification())});
  r.checks.push_back({"irreducible", CheckOutcome::kPass, ctx.irreducible() ? "true" : "false"});
  r.checks.push_back({"diameter", CheckOutcome::kPass,
                      ctx.diameter() ? std::to_string(*ctx.diameter()) : std::string("infinite")});
  r.checks.push_back({"leading-minors", CheckOutcome::kPass, minors});
  if (!ctx.irreducible()) {
    std::string comps;
    for (const auto& c : ctx.components()) {
      Word w(c.vertices.begin(), c.vertices.end());
      comps += (comps.empty() ? "" : "; ") + std::string("{") + format_word(w) + "} " + to_string(c.classification);
    }
    r.checks.push_back({"components", CheckOutcome::kPass, comps});
  }
  if (auto p = find_preset(ctx.name()); p && p->matrix.entries() == ctx.matrix().entries())
    r.checks.push_back({"classification-catalog",
                        p->expected == ctx.classification() ? CheckOutcome::kPass : CheckOutcome::kFail,
                        "expected " + to_string(p->expected)});
  finish(r, t0);
  return r;
}

VerificationReport cmd_power_reduced(const GroupContext& ctx, const Word& c_word, std::size_t k_max,
                                     bool negative_control) {
  const auto t0 = Clock::now();
  check_coxeter_word(ctx, c_word);
  VerificationReport r = start("power-reduced", ctx);
  r.parameters["cox_word"] = format_word(c_word);
  r.parameters["k_max"] = std::to_string(k_max);
  r.parameters["negative_control"] = negative_control ? "true" : "false";

  const bool control = negative_control && ctx.classification() == Classification::kFinite;
  if (auto why = infinite_irreducible_violation(ctx); why && !control) {
    r.checks.push_back({"hypothesis", CheckOutcome::kError, *why});
    finish(r, t0);
    return r;
  }

  if (control) {
    std::optional<std::size_t> first_failure, order;
    for (std::size_t k = 1; k <= k_max; ++k) {
      const Word w = power_word(c_word, k);
      if (!first_failure && !is_reduced(ctx, w)) first_failure = k;
      if (!order && word_to_element(ctx, w).is_identity()) order = k;
    }
    if (first_failure) {
      const std::size_t k = *first_failure;
      const std::size_t len = length(ctx, word_to_element(ctx, power_word(c_word, k)));
      r.checks.push_back({"negative-control/first-nonreduced-power", CheckOutcome::kPass,
                          "k=" + std::to_string(k) + " (length " + std::to_string(len) + " < " +
                              std::to_string(k * ctx.rank()) + " letters)"});
    } else {
      r.checks.push_back({"negative-control/first-nonreduced-power", CheckOutcome::kError,
                          "every power up to k_max is reduced; raise --k-max"});
    }
    r.checks.push_back({"negative-control/order-of-c", CheckOutcome::kPass,
                        order ? "c^" + std::to_string(*order) + " = e" : "not reached within k_max"});
    finish(r, t0);
    return r;
  }

  for (std::size_t k = 1; k <= k_max; ++k) {
    const Word w = power_word(c_word, k);
    CheckResult c{"power-reduced/k=" + pad(k), CheckOutcome::kPass, std::nullopt};
    if (!is_reduced(ctx, w)) {
      c.status = CheckOutcome::kFail;
      c.witness = "c^" + std::to_string(k) + " = (" + format_word(w) + ") is not reduced";
    } else if (const std::size_t len = length(ctx, word_to_element(ctx, w)); len != k * ctx.rank()) {
      c.status = CheckOutcome::kFail;
      c.witness = "length " + std::to_string(len) + " != " + std::to_string(k * ctx.rank());
    }
    r.checks.push_back(std::move(c));
  }
  finish(r, t0);
  return r;
}

VerificationReport cmd_admissible_reduced(const GroupContext& ctx, const Word& c_word, std::size_t n_max) {
  const auto t0 = Clock::now();
  check_coxeter_word(ctx, c_word);
  VerificationReport r = start("admissible-reduced", ctx);
  r.parameters["cox_word"] = format_word(c_word);
  r.parameters["n_max"] = std::to_string(n_max);
  if (auto why = infinite_irreducible_violation(ctx)) {
    r.checks.push_back({"hypothesis", CheckOutcome::kError, *why});
    finish(r, t0);
    return r;
  }
  AdmissibleCensus census = check_admissible_census(ctx, c_word, n_max);
  r.checks.push_back(to_check("admissible-reduced/all", census.reduced));
  r.checks.push_back(to_check("alternation", census.alternation));
  r.checks.push_back(to_check("phi-adjacent-bound", census.adjacent_phi));
  r.checks.push_back(to_check("phi-diameter-bound", census.diameter_phi));
  std::string counts;
  for (std::size_t len = 0; len < census.count_by_length.size(); ++len)
    counts += (counts.empty() ? "" : ",") + std::to_string(census.count_by_length[len]);
  r.parameters["sequences_by_length"] = counts;
  finish(r, t0);
  return r;
}

VerificationReport cmd_prop_mt(const GroupContext& ctx, const Word& c_word, std::size_t n_max) {
  const auto t0 = Clock::now();
  check_coxeter_word(ctx, c_word);
  VerificationReport r = start("prop-mt", ctx);
  r.parameters["cox_word"] = format_word(c_word);
  r.parameters["n_max"] = std::to_string(n_max);
  const PropertyReport report = check_prop_mt(ctx, c_word, n_max);
  r.parameters["minimal_sequences_checked"] = std::to_string(report.cases);
  r.checks.push_back(to_check("minimal-sequences-reduced", report));
  finish(r, t0);
  return r;
}

VerificationReport cmd_growth(const GroupContext& ctx, const Word& c_word, std::size_t k_max, bool negative_control) {
  const auto t0 = Clock::now();
  check_coxeter_word(ctx, c_word);
  VerificationReport r = start("growth", ctx);
  r.parameters["cox_word"] = format_word(c_word);
  r.parameters["k_max"] = std::to_string(k_max);
  r.parameters["negative_control"] = negative_control ? "true" : "false";
  const bool control = negative_control && ctx.classification() == Classification::kFinite;
  if (auto why = infinite_irreducible_violation(ctx); why && !control) {
    r.checks.push_back({"hypothesis", CheckOutcome::kError, *why});
    finish(r, t0);
    return r;
  }
  const GrowthTrace trace = growth_trace(ctx, c_word, k_max);
  std::string lengths;
  for (std::size_t len : trace.lengths) lengths += (lengths.empty() ? "" : ",") + std::to_string(len);
  r.parameters["lengths"] = lengths;

  if (control) {
    bool weak = true;
    for (std::size_t k = 1; k < trace.lengths.size(); ++k) weak = weak && trace.lengths[k] >= trace.lengths[k - 1];
    r.checks.push_back({"growth/weakly-increasing", weak ? CheckOutcome::kPass : CheckOutcome::kFail, std::nullopt});
    if (trace.reached_w0)
      r.checks.push_back({"growth/stabilizes-at-w0", CheckOutcome::kPass, "k=" + std::to_string(*trace.reached_w0)});
    else
      r.checks.push_back({"growth/stabilizes-at-w0", CheckOutcome::kError, "w0 not reached within k_max"});
    finish(r, t0);
    return r;
  }

  CheckResult strict{"growth/strictly-increasing", CheckOutcome::kPass, std::nullopt};
  CheckResult bound{"growth/length-at-least-k", CheckOutcome::kPass, std::nullopt};
  CheckResult descent{"growth/no-full-descent-element", CheckOutcome::kPass, std::nullopt};
  for (std::size_t k = 1; k <= trace.lengths.size(); ++k) {
    const std::size_t len = trace.lengths[k - 1];
    const std::size_t prev = k == 1 ? 0 : trace.lengths[k - 2];
    if (len <= prev && strict.status == CheckOutcome::kPass) {
      strict.status = CheckOutcome::kFail;
      strict.witness = "l(w_" + std::to_string(k) + ") = " + std::to_string(len) + " <= l(w_" +
                       std::to_string(k - 1) + ") = " + std::to_string(prev);
    }
    if (len < k && bound.status == CheckOutcome::kPass) {
      bound.status = CheckOutcome::kFail;
      bound.witness = "l(w_" + std::to_string(k) + ") = " + std::to_string(len);
    }
    if (trace.full_descent[k - 1] && descent.status == CheckOutcome::kPass) {
      descent.status = CheckOutcome::kFail;
      descent.witness = "w_" + std::to_string(k) + " has every generator as a descent";
    }
  }
  r.checks.push_back(std::move(strict));
  r.checks.push_back(std::move(bound));
  r.checks.push_back(std::move(descent));
  finish(r, t0);
  return r;
}

VerificationReport cmd_w0_variant(const GroupContext& ctx, const Word& c_word) {
  const auto t0 = Clock::now();
  check_coxeter_word(ctx, c_word);
  VerificationReport r = start("w0", ctx);
  r.parameters["cox_word"] = format_word(c_word);
  if (ctx.classification() != Classification::kFinite) {
    r.checks.push_back({"hypothesis", CheckOutcome::kError, "the group is not finite, so it has no longest element"});
    finish(r, t0);
    return r;
  }
  const Element w0 = longest_element(ctx);
  const std::size_t w0_length = length(ctx, w0);
  r.parameters["w0_length"] = std::to_string(w0_length);
  const auto seq = find_w0_sequence(ctx, c_word);
  if (!seq) {
    r.checks.push_back({"w0/admissible-sequence-exists", CheckOutcome::kFail, "no c-admissible sequence reaches w0"});
    finish(r, t0);
    return r;
  }
  r.checks.push_back({"w0/admissible-sequence-exists", CheckOutcome::kPass, "(" + format_word(*seq) + ")"});
  const bool admissible = is_admissible(ctx, orientation_of_coxeter_word(ctx, c_word), *seq);
  r.checks.push_back({"w0/sequence-admissible", admissible ? CheckOutcome::kPass : CheckOutcome::kFail, std::nullopt});
  r.checks.push_back({"w0/demazure-product", demazure_product(ctx, *seq) == w0 ? CheckOutcome::kPass : CheckOutcome::kFail,
                      std::nullopt});
  const bool reduced = is_reduced(ctx, *seq) && word_to_element(ctx, *seq) == w0;
  r.checks.push_back({"w0/reduced-word-for-w0", reduced ? CheckOutcome::kPass : CheckOutcome::kFail, std::nullopt});
  r.checks.push_back({"w0/length-equals-l(w0)", seq->size() == w0_length ? CheckOutcome::kPass : CheckOutcome::kFail,
                      std::to_string(seq->size()) + " letters, l(w0) = " + std::to_string(w0_length)});
  finish(r, t0);
  return r;
}

std::vector<CheckResult> verify_group(const GroupContext& ctx, const Budgets& b) {
  std::vector<CheckResult> out;
  if (b.empty()) return out;
  const std::string prefix = (ctx.name().empty() ? std::string("group") : ctx.name()) + "/";
  const std::size_t n = ctx.rank();
  auto add = [&](const std::string& id, const PropertyReport& rep) { out.push_back(to_check(prefix + id, rep)); };

  // Classification against the catalog.
  if (auto p = find_preset(ctx.name()); p && p->matrix.entries() == ctx.matrix().entries())
    out.push_back({prefix + "classification", p->expected == ctx.classification() ? CheckOutcome::kPass : CheckOutcome::kFail,
                   p->expected == ctx.classification() ? std::nullopt
                                                       : std::optional<std::string>("got " + to_string(ctx.classification()))});

  // Reflection representation substrate.
  std::mt19937_64 rng(b.seed);
  if (b.random_words > 0) {
    PropertyReport preserve, conj, absorb;
    const auto roots = positive_roots(ctx, 2);
    for (std::size_t s = 0; s < b.random_words; ++s) {
      const Word w = random_word(rng, n, b.random_length);
      const Element e = word_to_element(ctx, w);
      ++preserve.cases;
      if (!(e.matrix().transpose() * ctx.form() * e.matrix() == ctx.form()))
        preserve.fail("e^T B e != B for (" + format_word(w) + ")");
      if (s >= 100) continue;
      for (const RootVector& root : roots) {
        ++conj.cases;
        RootVector image = e.matrix() * root;
        if (root_sign(image) == Sign::kNegative) image = -image;
        const Matrix conjugated = e.matrix() * reflection_matrix(ctx, root) * e.inverse_matrix();
        if (!(conjugated == reflection_matrix(ctx, image)))
          conj.fail("w=(" + format_word(w) + ") root " + root.to_string() + ": w t w^-1 is not the reflection of w a_t");
      }
      for (Generator i = 0; i < n; ++i) {
        ++absorb.cases;
        const Element once = hecke_pi(ctx, i, e);
        if (!(hecke_pi(ctx, i, once) == once)) absorb.fail("pi_" + std::to_string(i + 1) + " not idempotent");
        for (Generator j = i + 1; j < n; ++j) {
          if (ctx.matrix()(i, j) != 2) continue;
          if (!(hecke_pi(ctx, i, hecke_pi(ctx, j, e)) == hecke_pi(ctx, j, hecke_pi(ctx, i, e))))
            absorb.fail("pi_" + std::to_string(i + 1) + " and pi_" + std::to_string(j + 1) + " do not commute");
        }
      }
    }
    add("b-preservation", preserve);
    add("root-conjugation", conj);
    add("demazure-absorption", absorb);
  }
  if (b.census_length > 0) {
    const std::size_t len = n <= 2 ? b.census_length : std::min<std::size_t>(b.census_length, 6);
    PropertyReport routes, lengths, parity, demazure;
    for (const Word& w : all_words(n, len)) {
      ++routes.cases;
      const bool reduced = is_reduced(ctx, w);
      if (reduced != is_reduced_by_reflection_sequence(ctx, w))
        routes.fail("(" + format_word(w) + "): the two reducedness tests disagree");
      const Element e = word_to_element(ctx, w);
      ++lengths.cases;
      const std::size_t l = length(ctx, e);
      if (l > w.size() || (l == w.size()) != reduced)
        lengths.fail("(" + format_word(w) + "): length " + std::to_string(l) + " inconsistent with reducedness");
      if (reduced) {
        ++demazure.cases;
        if (!(demazure_product(ctx, w) == e)) demazure.fail("(" + format_word(w) + "): Demazure product != product");
      }
      if (w.size() <= 6) {
        ++parity.cases;
        std::set<std::string> odd;
        for (const auto& root : inversions_by_parity(ctx, w)) odd.insert(root.key());
        for (const auto& entry : reflection_sequence(ctx, w))
          if (is_inversion(ctx, e, entry.root) != (odd.count(entry.root.key()) > 0)) {
            parity.fail("(" + format_word(w) + "): parity rule and root sign disagree on " + entry.root.to_string());
            break;
          }
      }
    }
    add("reduced-two-routes", routes);
    add("length-vs-letters", lengths);
    add("inversion-parity", parity);
    add("demazure-of-reduced", demazure);
  }

  // Per Coxeter word.
  const auto words = all_coxeter_words(ctx);
  PropertyReport skew, independence, roundtrip, equivariance, signs, converse, poset, injectivity, order, mt;
  PropertyReport powers, admissible, alternation, adjacent, diameter_bound, growth, w0, control;
  const auto hypothesis = infinite_irreducible_violation(ctx);
  const bool finite = ctx.classification() == Classification::kFinite;

  for (const Word& c : words) {
    const OmegaForm omega = build_omega(ctx, c);
    ++skew.cases;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(omega(i, j) == -omega(j, i))) skew.fail(cw(c) + " omega is not skew at (" + std::to_string(i + 1) + "," +
                                                      std::to_string(j + 1) + ")");
    const Orientation o = orientation_of_coxeter_word(ctx, c);
    for (const Word& other : words) {
      if (!(orientation_of_coxeter_word(ctx, other) == o)) continue;
      ++independence.cases;
      if (!(build_omega(ctx, other).matrix() == omega.matrix()))
        independence.fail(cw(c) + " and " + cw(other) + " share an orientation but not omega");
    }
    ++roundtrip.cases;
    const Word back = coxeter_word_of_orientation(ctx, o);
    if (!(orientation_of_coxeter_word(ctx, back) == o) || !commutation_equivalent(ctx, back, c))
      roundtrip.fail(cw(c) + " round-trips to (" + format_word(back) + ")");

    equivariance.merge(check_equivariance(ctx, c, basis_pairs(ctx)));
    if (b.depth > 0) {
      const SignDichotomy d = check_initial_final_signs(ctx, c, b.depth);
      signs.merge(d.dichotomy);
      converse.merge(d.converse);
    }
    if (b.poset_length > 0) poset.merge(check_alternation_phi_poset(ctx, c, b.poset_length, &injectivity));
    if (b.order_length > 0) order.merge(check_order_lemma_census(ctx, c, b.order_length));
    if (b.mt_length > 0) mt.merge(check_prop_mt(ctx, c, b.mt_length));

    if (!hypothesis) {
      if (b.k_max > 0) {
        powers.merge(check_power_reduced(ctx, c, b.k_max));
        const GrowthTrace trace = growth_trace(ctx, c, b.k_max);
        for (std::size_t k = 1; k <= trace.lengths.size(); ++k) {
          ++growth.cases;
          const std::size_t prev = k == 1 ? 0 : trace.lengths[k - 2];
          if (trace.lengths[k - 1] <= prev || trace.lengths[k - 1] < k || trace.full_descent[k - 1])
            growth.fail(cw(c) + " growth fails at k=" + std::to_string(k));
        }
      }
      if (b.n_max > 0) {
        AdmissibleCensus census = check_admissible_census(ctx, c, b.n_max);
        admissible.merge(census.reduced);
        alternation.merge(census.alternation);
        adjacent.merge(census.adjacent_phi);
        diameter_bound.merge(census.diameter_phi);
      }
    } else if (finite) {
      ++w0.cases;
      const Element longest = longest_element(ctx);
      const auto seq = find_w0_sequence(ctx, c);
      if (!seq)
        w0.fail(cw(c) + " no admissible sequence reaches w0");
      else if (seq->size() != length(ctx, longest) || !is_reduced(ctx, *seq) || !(demazure_product(ctx, *seq) == longest))
        w0.fail(cw(c) + " sequence (" + format_word(*seq) + ") is not a reduced word for w0");
      if (b.k_max > 0) {
        ++control.cases;
        bool failed = false;
        for (std::size_t k = 1; k <= b.k_max && !failed; ++k) failed = !is_reduced(ctx, power_word(c, k));
        // Rank 1 is the exception: c = s_1 and c^2 = e already.
        if (!failed && b.k_max >= 2) control.fail(cw(c) + " every power up to k_max is reduced in a finite group");
      }
    } else {
      powers.precondition(*hypothesis);
      admissible.precondition(*hypothesis);
    }
  }

  add("omega-skew", skew);
  add("omega-class-independence", independence);
  add("orientation-roundtrip", roundtrip);
  add("omega-equivariance", equivariance);
  if (b.depth > 0) {
    add("omega-initial-final-signs", signs);
    add("omega-commuting-implies-zero", converse);
  }
  if (b.poset_length > 0) {
    add("poset-characterizations", poset);
    add("phi-injectivity", injectivity);
  }
  if (b.order_length > 0) add("order-lemma", order);
  if (b.mt_length > 0) add("prop-mt", mt);
  if (!hypothesis) {
    if (b.k_max > 0) {
      add("powers-reduced", powers);
      add("growth-strict", growth);
    }
    if (b.n_max > 0) {
      add("admissible-reduced", admissible);
      add("alternation", alternation);
      add("phi-adjacent-bound", adjacent);
      add("phi-diameter-bound", diameter_bound);
    }
  } else if (finite) {
    add("w0-variant", w0);
    if (b.k_max > 0) add("negative-control", control);
  } else {
    add("powers-reduced", powers);
    add("admissible-reduced", admissible);
  }
  return out;
}

VerificationReport cmd_verify_all(const std::vector<GroupContext>& groups, const Budgets& budgets, bool serial) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.suite = "verify-all";
  r.group = groups.size() == 1 ? (groups.front().name().empty() ? "(unnamed)" : groups.front().name()) : "catalog";
  r.parameters["k_max"] = std::to_string(budgets.k_max);
  r.parameters["n_max"] = std::to_string(budgets.n_max);
  r.parameters["depth"] = std::to_string(budgets.depth);
  r.parameters["order_length"] = std::to_string(budgets.order_length);
  r.parameters["poset_length"] = std::to_string(budgets.poset_length);
  r.parameters["mt_length"] = std::to_string(budgets.mt_length);
  r.parameters["census_length"] = std::to_string(budgets.census_length);
  r.parameters["random_words"] = std::to_string(budgets.random_words);
  r.parameters["random_length"] = std::to_string(budgets.random_length);
  r.parameters["seed"] = std::to_string(budgets.seed);

  if (serial) {
    for (const auto& g : groups) {
      auto checks = verify_group(g, budgets);
      r.checks.insert(r.checks.end(), checks.begin(), checks.end());
    }
  } else {
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (const auto& g : groups)
      jobs.push_back(std::async(std::launch::async, [&g, &budgets] { return verify_group(g, budgets); }));
    for (auto& j : jobs) {
      auto checks = j.get();
      r.checks.insert(r.checks.end(), checks.begin(), checks.end());
    }
  }
  if (r.checks.empty()) r.warnings.push_back("no coverage: every budget is zero, so no checks ran");
  finish(r, t0);
  return r;
}

}  // namespace coxeter
