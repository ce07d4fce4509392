#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/coxeter_context.hpp"
#include "coxeter/linear_algebra.hpp"

namespace coxeter {

/// The skew form attached to a Coxeter element c = s_{x_1}...s_{x_n}:
/// omega(a_{x_i}, a_{x_j}) = B(a_{x_i}, a_{x_j}) when i < j, extended by
/// skew-symmetry. The matrix only depends on the orientation of c.
class OmegaForm {
 public:
  /// Wraps an arbitrary matrix; build_omega is the normal way in. Tests use
  /// this to inject corrupted forms.
  OmegaForm(Word c_word, Matrix omega) : c_word_(std::move(c_word)), omega_(std::move(omega)) {}

  const Word& coxeter_word() const { return c_word_; }
  const Matrix& matrix() const { return omega_; }
  const AlgReal& operator()(std::size_t i, std::size_t j) const { return omega_(i, j); }

 private:
  Word c_word_;
  Matrix omega_;
};

/// Throws InputError unless c_word is a permutation of the generators.
OmegaForm build_omega(const GroupContext& ctx, const Word& c_word);

/// v^T omega w.
AlgReal eval_omega(const OmegaForm& form, const RootVector& v, const RootVector& w);

/// (c_2, ..., c_n, c_1): a word for s c s when s = c_1.
Word rotate_coxeter_word(const Word& c_word);

enum class CheckStatus { kPass, kFail, kPrecondition };

/// Outcome of one exhaustive property check. Keeps the first few witnesses.
struct PropertyReport {
  static constexpr std::size_t kMaxWitnesses = 5;

  CheckStatus status = CheckStatus::kPass;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return status == CheckStatus::kPass; }
  void fail(std::string witness);
  void precondition(std::string message);
  /// Folds another report into this one; failures dominate preconditions.
  void merge(const PropertyReport& other);
};

/// omega_{scs}(s v, s w) == omega_c(v, w) for s the first letter of c_word.
PropertyReport check_equivariance(const GroupContext& ctx, const Word& c_word,
                                  const std::vector<std::pair<RootVector, RootVector>>& samples);

/// All ordered pairs of simple roots, diagonal included.
std::vector<std::pair<RootVector, RootVector>> basis_pairs(const GroupContext& ctx);

struct SignDichotomy {
  /// omega_c(a_{x_1}, a_t) <= 0 and omega_c(a_{x_n}, a_t) >= 0, zero only
  /// when the reflection matrices commute; for t != s also B(a_s, a_t) == 0
  /// exactly when st == ts.
  PropertyReport dichotomy;
  /// Commuting reflections give omega == 0. Fails in non-simply-laced groups,
  /// e.g. B2 with s = s1, t = s2 s1 s2.
  PropertyReport converse;
};

/// Both halves over every positive root a_t of depth <= depth.
SignDichotomy check_initial_final_signs(const GroupContext& ctx, const Word& c_word, std::size_t depth);

/// For a c-admissible reduced word with reflection sequence t_1..t_N:
/// omega_c(a_{t_i}, a_{t_j}) <= 0 for i < j, and zero only for commuting
/// t_i, t_j. A word that is not admissible or not reduced yields
/// CheckStatus::kPrecondition rather than a failure.
PropertyReport check_order_lemma(const GroupContext& ctx, const Word& c_word, const Word& word);
PropertyReport check_order_lemma(const GroupContext& ctx, const OmegaForm& form, const Word& word);

}  // namespace coxeter
