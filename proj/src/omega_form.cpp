#include "coxeter/omega_form.hpp"

#include <sstream>

#include "coxeter/errors.hpp"
#include "coxeter/reflection.hpp"
#include "coxeter/sink_flip.hpp"

namespace coxeter {

OmegaForm build_omega(const GroupContext& ctx, const Word& c_word) {
  if (!is_coxeter_word(ctx, c_word))
    throw InputError("'" + format_word(c_word) + "' is not a permutation of 1.." + std::to_string(ctx.rank()));
  const std::size_t n = ctx.rank();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[c_word[k]] = k;
  Matrix omega(ctx.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      omega(i, j) = position[i] < position[j] ? ctx.form(i, j) : -ctx.form(i, j);
    }
  return OmegaForm(c_word, std::move(omega));
}

AlgReal eval_omega(const OmegaForm& form, const RootVector& v, const RootVector& w) {
  if (v.size() != form.matrix().rows() || w.size() != form.matrix().cols())
    throw std::invalid_argument("eval_omega: dimension mismatch");
  return bilinear(form.matrix(), v, w);
}

Word rotate_coxeter_word(const Word& c_word) {
  if (c_word.empty()) return c_word;
  Word out(c_word.begin() + 1, c_word.end());
  out.push_back(c_word.front());
  return out;
}

void PropertyReport::fail(std::string witness) {
  status = CheckStatus::kFail;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void PropertyReport::precondition(std::string message) {
  if (status == CheckStatus::kPass) status = CheckStatus::kPrecondition;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(message));
}

void PropertyReport::merge(const PropertyReport& other) {
  cases += other.cases;
  if (other.status == CheckStatus::kFail) status = CheckStatus::kFail;
  if (other.status == CheckStatus::kPrecondition && status == CheckStatus::kPass) status = CheckStatus::kPrecondition;
  for (const auto& w : other.witnesses)
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
}

std::vector<std::pair<RootVector, RootVector>> basis_pairs(const GroupContext& ctx) {
  std::vector<std::pair<RootVector, RootVector>> out;
  for (std::size_t i = 0; i < ctx.rank(); ++i)
    for (std::size_t j = 0; j < ctx.rank(); ++j)
      out.emplace_back(RootVector::simple_root(ctx.field(), ctx.rank(), i),
                       RootVector::simple_root(ctx.field(), ctx.rank(), j));
  return out;
}

PropertyReport check_equivariance(const GroupContext& ctx, const Word& c_word,
                                  const std::vector<std::pair<RootVector, RootVector>>& samples) {
  const OmegaForm omega_c = build_omega(ctx, c_word);
  const OmegaForm omega_scs = build_omega(ctx, rotate_coxeter_word(c_word));
  const Generator s = c_word.front();
  PropertyReport report;
  for (const auto& [v, w] : samples) {
    ++report.cases;
    const AlgReal lhs = eval_omega(omega_scs, reflect_simple(ctx, s, v), reflect_simple(ctx, s, w));
    const AlgReal rhs = eval_omega(omega_c, v, w);
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "c=(" << format_word(c_word) << ") v=" << v.to_string() << " w=" << w.to_string()
         << ": omega_scs(sv,sw)=" << lhs.to_string() << " but omega_c(v,w)=" << rhs.to_string();
      report.fail(os.str());
    }
  }
  return report;
}

SignDichotomy check_initial_final_signs(const GroupContext& ctx, const Word& c_word, std::size_t depth) {
  const OmegaForm omega = build_omega(ctx, c_word);
  const std::size_t n = ctx.rank();
  const Generator initial = c_word.front();
  const Generator final_letter = c_word.back();
  SignDichotomy report;

  for (const RootVector& root : positive_roots(ctx, depth)) {
    const Matrix t = reflection_matrix(ctx, root);
    for (const auto& [letter, expected] : {std::pair{initial, Sign::kNegative}, std::pair{final_letter, Sign::kPositive}}) {
      ++report.dichotomy.cases;
      const RootVector simple = RootVector::simple_root(ctx.field(), n, letter);
      const AlgReal value = eval_omega(omega, simple, root);
      const Sign sign = value.sign();
      const bool commute = matrices_commute(reflection_matrix(ctx, simple), t);
      std::ostringstream os;
      os << "c=(" << format_word(c_word) << ") letter " << letter + 1 << " root " << root.to_string() << ": ";
      if (sign != Sign::kZero && sign != expected) {
        report.dichotomy.fail(os.str() + "omega has the wrong sign");
      } else if (sign == Sign::kZero && !commute) {
        report.dichotomy.fail(os.str() + "omega vanishes but the reflections do not commute");
      } else if (!(root == simple) && bilinear(ctx.form(), simple, root).is_zero() != commute) {
        report.dichotomy.fail(os.str() + "B(a_s, a_t) = 0 disagrees with matrix commutation");
      }
      if (commute) {
        ++report.converse.cases;
        if (sign != Sign::kZero)
          report.converse.fail(os.str() + "reflections commute but omega = " + value.to_string());
      }
    }
  }
  return report;
}

PropertyReport check_order_lemma(const GroupContext& ctx, const Word& c_word, const Word& word) {
  return check_order_lemma(ctx, build_omega(ctx, c_word), word);
}

PropertyReport check_order_lemma(const GroupContext& ctx, const OmegaForm& form, const Word& word) {
  PropertyReport report;
  const Orientation base = orientation_of_coxeter_word(ctx, form.coxeter_word());
  if (!is_admissible(ctx, base, word)) {
    report.precondition("(" + format_word(word) + ") is not admissible for c=(" + format_word(form.coxeter_word()) + ")");
    return report;
  }
  if (!is_reduced(ctx, word)) {
    report.precondition("(" + format_word(word) + ") is not reduced");
    return report;
  }
  const auto sequence = reflection_sequence(ctx, word);
  std::vector<Matrix> reflections;
  reflections.reserve(sequence.size());
  for (const auto& entry : sequence) reflections.push_back(reflection_matrix(ctx, entry.root));

  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      ++report.cases;
      const AlgReal value = eval_omega(form, sequence[i].root, sequence[j].root);
      const Sign sign = value.sign();
      if (sign == Sign::kNegative) continue;
      std::ostringstream os;
      os << "word (" << format_word(word) << ") pair (" << i + 1 << "," << j + 1 << ") roots "
         << sequence[i].root.to_string() << ", " << sequence[j].root.to_string() << ": omega = " << value.to_string();
      if (sign == Sign::kPositive) {
        report.fail(os.str());
      } else if (!matrices_commute(reflections[i], reflections[j])) {
        os << " but the reflections do not commute";
        report.fail(os.str());
      }
    }
  return report;
}

}  // namespace coxeter
