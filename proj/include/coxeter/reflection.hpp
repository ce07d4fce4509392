#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/coxeter_context.hpp"
#include "coxeter/linear_algebra.hpp"

namespace coxeter {

/// A group element, stored as its matrix on V together with the inverse
/// matrix so that both left and right descents are one column lookup.
class Element {
 public:
  static Element identity(const GroupContext& ctx);

  const Matrix& matrix() const { return mat_; }
  const Matrix& inverse_matrix() const { return inv_; }
  std::optional<std::size_t> cached_length() const { return length_; }

  /// this <- s_i * this
  void left_multiply(const GroupContext& ctx, Generator i);
  /// this <- this * s_i
  void right_multiply(const GroupContext& ctx, Generator i);

  /// s_i is a left descent iff this^{-1} a_i is negative.
  bool has_left_descent(Generator i) const;
  /// s_i is a right descent iff this a_i is negative.
  bool has_right_descent(Generator i) const;

  bool is_identity() const { return mat_.is_identity(); }
  std::string key() const { return mat_.key(); }
  friend bool operator==(const Element& a, const Element& b) { return a.mat_ == b.mat_; }

 private:
  friend Element hecke_pi(const GroupContext& ctx, Generator i, Element e);
  friend Element demazure_extend_right(const GroupContext& ctx, Element e, Generator i);

  Element(Matrix mat, Matrix inv) : mat_(std::move(mat)), inv_(std::move(inv)) {}
  Matrix mat_;
  Matrix inv_;
  std::optional<std::size_t> length_;
};

/// One entry of a reflection sequence: the positive root of
/// t_i = s_{x_1}...s_{x_{i-1}} s_{x_i} s_{x_{i-1}}...s_{x_1}, and whether the
/// prefix image s_{x_1}...s_{x_{i-1}} a_{x_i} had to be negated to get it.
struct ReflectionRoot {
  RootVector root;
  bool flipped;
};

/// v - B(v, a_i) a_i.
RootVector reflect_simple(const GroupContext& ctx, Generator i, const RootVector& v);

/// Throws InputError if any letter is out of range.
void check_word(const GroupContext& ctx, const Word& w);

Element word_to_element(const GroupContext& ctx, const Word& w);

/// Sign of a root; throws NotARootError when coordinates of both strict signs
/// occur, or when v is zero.
Sign root_sign(const RootVector& v);
bool is_positive_root_vector(const GroupContext& ctx, const RootVector& v);

std::vector<ReflectionRoot> reflection_sequence(const GroupContext& ctx, const Word& w);

/// Right-to-left criterion: s_{x_i} u is reduced iff u^{-1} a_{x_i} > 0 for
/// u = s_{x_{i+1}}...s_{x_N}.
bool is_reduced(const GroupContext& ctx, const Word& w);

/// Independent route: no sign flips and pairwise distinct reflection roots.
bool is_reduced_by_reflection_sequence(const GroupContext& ctx, const Word& w);

/// Reduced word by greedy left-descent stripping with lowest-index tie-break.
Word reduced_word(const GroupContext& ctx, const Element& e);
std::size_t length(const GroupContext& ctx, const Element& e);

/// t is an inversion of e iff e^{-1} a_t is negative. t_root must be a
/// positive root.
bool is_inversion(const GroupContext& ctx, const Element& e, const RootVector& t_root);

/// Roots occurring an odd number of times in the reflection sequence of w.
std::vector<RootVector> inversions_by_parity(const GroupContext& ctx, const Word& w);

/// pi_i(e) = s_i e if s_i is not a left descent of e, else e.
Element hecke_pi(const GroupContext& ctx, Generator i, Element e);

/// pi_{x_1}(...pi_{x_N}(identity)...). Carries its length.
Element demazure_product(const GroupContext& ctx, const Word& seq);

/// Demazure product of (seq, i) from that of seq: e s_i if it is longer, else e.
Element demazure_extend_right(const GroupContext& ctx, Element e, Generator i);

/// The matrix of the reflection v -> v - B(v, a) a for a root a.
Matrix reflection_matrix(const GroupContext& ctx, const RootVector& root);

bool matrices_commute(const Matrix& a, const Matrix& b);

/// Positive roots reachable from the simple roots by at most `depth` simple
/// reflections, in breadth-first order.
std::vector<RootVector> positive_roots(const GroupContext& ctx, std::size_t depth);

/// "1,2,1" style, 1-based.
std::string format_word(const Word& w);

}  // namespace coxeter
