#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/coxeter_context.hpp"
#include "coxeter/omega_form.hpp"
#include "coxeter/reflection.hpp"
#include "coxeter/report.hpp"

namespace coxeter {

/// Budgets for the aggregated run. Every field is a CLI flag.
struct Budgets {
  std::size_t k_max = 20;          // powers of c and growth steps
  std::size_t n_max = 9;           // admissible-sequence census for reducedness
  std::size_t depth = 8;           // positive-root depth for the sign dichotomy
  std::size_t order_length = 10;   // admissible reduced words for the order lemma
  std::size_t poset_length = 6;    // census for the poset and phi-injectivity checks
  std::size_t mt_length = 8;       // census for the minimal-sequence check
  std::size_t census_length = 8;   // all words, rank <= 2 (rank 3 uses at most 6)
  std::size_t random_words = 1000;
  std::size_t random_length = 20;
  std::uint64_t seed = 1;

  /// All length and count budgets are zero.
  bool empty() const;
};

/// Default Coxeter word 1, 2, ..., n.
Word default_coxeter_word(const GroupContext& ctx);

/// The longest element of a finite group: ascend until every generator is a
/// left descent. Throws PreconditionError for non-finite groups.
Element longest_element(const GroupContext& ctx);

/// c repeated k times.
Word power_word(const Word& c_word, std::size_t k);

// Properties checked exhaustively up to a budget. Each returns a report whose
// cases count what was examined.

PropertyReport check_power_reduced(const GroupContext& ctx, const Word& c_word, std::size_t k_max);

struct AdmissibleCensus {
  PropertyReport reduced;
  PropertyReport alternation;
  PropertyReport adjacent_phi;   // |phi_x - phi_y| <= 1 on edges
  PropertyReport diameter_phi;   // max phi - min phi <= diameter
  std::vector<std::size_t> count_by_length;
};
AdmissibleCensus check_admissible_census(const GroupContext& ctx, const Word& c_word, std::size_t n_max);

PropertyReport check_prop_mt(const GroupContext& ctx, const Word& c_word, std::size_t n_max);

struct GrowthTrace {
  std::vector<std::size_t> lengths;  // lengths[k-1] = l(w_k)
  std::vector<bool> full_descent;    // w_k has every generator as a left descent
  std::optional<std::size_t> reached_w0;
};
GrowthTrace growth_trace(const GroupContext& ctx, const Word& c_word, std::size_t k_max);

/// Breadth-first search for a shortest c-admissible sequence whose Demazure
/// product is w0.
std::optional<Word> find_w0_sequence(const GroupContext& ctx, const Word& c_word);

PropertyReport check_alternation_phi_poset(const GroupContext& ctx, const Word& c_word, std::size_t length,
                                           PropertyReport* injectivity);
PropertyReport check_order_lemma_census(const GroupContext& ctx, const Word& c_word, std::size_t length);

// Command-level suites. All of them fill suite, group, parameters, checks and
// wall_time.

VerificationReport cmd_classify(const GroupContext& ctx);
VerificationReport cmd_power_reduced(const GroupContext& ctx, const Word& c_word, std::size_t k_max,
                                     bool negative_control);
VerificationReport cmd_admissible_reduced(const GroupContext& ctx, const Word& c_word, std::size_t n_max);
VerificationReport cmd_prop_mt(const GroupContext& ctx, const Word& c_word, std::size_t n_max);
VerificationReport cmd_growth(const GroupContext& ctx, const Word& c_word, std::size_t k_max, bool negative_control);
VerificationReport cmd_w0_variant(const GroupContext& ctx, const Word& c_word);

/// Every invariant suite on every group, for every Coxeter word. Checks run
/// concurrently per group unless serial; the result is sorted by check id.
VerificationReport cmd_verify_all(const std::vector<GroupContext>& groups, const Budgets& budgets, bool serial);

/// Checks for one group, ids prefixed by the group name.
std::vector<CheckResult> verify_group(const GroupContext& ctx, const Budgets& budgets);

CheckResult to_check(std::string id, const PropertyReport& report);

}  // namespace coxeter
