#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxeter/coxeter_context.hpp"

namespace coxeter {

/// An acyclic orientation of the Dynkin diagram, stored as the head of each
/// edge (indexed like DynkinDiagram::edges()).
///
/// Convention: the orientation of a Coxeter word points every edge at the
/// endpoint that appears earlier in the word, so the first letter is a sink.
class Orientation {
 public:
  /// Throws InputError if a head is not an endpoint of its edge, and
  /// PreconditionError if the orientation has a directed cycle.
  Orientation(const DynkinDiagram& diagram, std::vector<std::size_t> heads);

  std::size_t head(std::size_t edge) const { return heads_[edge]; }
  const std::vector<std::size_t>& heads() const { return heads_; }
  friend bool operator==(const Orientation& a, const Orientation& b) { return a.heads_ == b.heads_; }

  /// "2->1, 3->1" with 1-based vertices.
  std::string to_string(const DynkinDiagram& diagram) const;

 private:
  std::vector<std::size_t> heads_;
};

bool is_acyclic(const DynkinDiagram& diagram, const std::vector<std::size_t>& heads);

/// True iff w lists every generator exactly once.
bool is_coxeter_word(const GroupContext& ctx, const Word& w);
/// All Coxeter words in lexicographic order.
std::vector<Word> all_coxeter_words(const GroupContext& ctx);

Orientation orientation_of_coxeter_word(const GroupContext& ctx, const Word& w);
/// Linear extension with heads before tails, lowest vertex first among ties.
Word coxeter_word_of_orientation(const GroupContext& ctx, const Orientation& o);

bool is_sink(const GroupContext& ctx, const Orientation& o, Generator x);
std::vector<Generator> sinks(const GroupContext& ctx, const Orientation& o);
/// Reverses every edge at the sink x (c -> s_x c s_x).
Orientation flip_sink(const GroupContext& ctx, const Orientation& o, Generator x);

bool is_admissible(const GroupContext& ctx, const Orientation& base, std::span<const Generator> seq);

enum class Visit { kDescend, kPrune };

/// Depth-first walk over admissible sequences of length <= max_length,
/// visiting every node in preorder (the empty sequence first), lowest sink
/// first. Returning kPrune skips the extensions of the current sequence.
void for_each_admissible(const GroupContext& ctx, const Orientation& base, std::size_t max_length,
                         const std::function<Visit(std::span<const Generator>)>& visitor);

enum class LengthMode { kExactly, kUpTo };

std::vector<Word> enumerate_admissible(const GroupContext& ctx, const Orientation& base, std::size_t length,
                                       LengthMode mode = LengthMode::kExactly);

/// Occurrence counts per vertex.
class PhiVector {
 public:
  PhiVector(std::size_t n, std::span<const Generator> seq);
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t operator[](std::size_t x) const { return counts_[x]; }
  /// Coordinate-wise domination.
  bool dominated_by(const PhiVector& other) const;
  friend bool operator==(const PhiVector& a, const PhiVector& b) { return a.counts_ == b.counts_; }
  friend bool operator<(const PhiVector& a, const PhiVector& b) { return a.counts_ < b.counts_; }

 private:
  std::vector<std::size_t> counts_;
};

PhiVector phi(const GroupContext& ctx, std::span<const Generator> seq);

/// Greedy normal form: repeatedly emit the lowest vertex that can be moved to
/// the front by swapping past non-adjacent letters.
Word commutation_normal_form(const GroupContext& ctx, std::span<const Generator> seq);
bool commutation_equivalent(const GroupContext& ctx, std::span<const Generator> a, std::span<const Generator> b);
/// Every sequence reachable by swapping adjacent non-adjacent vertices.
std::vector<Word> commutation_class(const GroupContext& ctx, const Word& seq);

enum class PosetCheck { kPhiOnly, kCrossCheck };

/// u <= v in the admissible-sequence poset, decided by phi domination. With
/// kCrossCheck the prefix characterization is also computed and a
/// disagreement throws std::logic_error. Non-admissible input throws
/// PreconditionError.
bool poset_leq(const GroupContext& ctx, const Orientation& base, const Word& u, const Word& v,
               PosetCheck mode = PosetCheck::kPhiOnly);

/// Brute force: some reordering of v has a prefix commutation-equivalent to u.
bool poset_leq_by_prefix(const GroupContext& ctx, const Word& u, const Word& v);

/// Checks that along every edge the occurrences of the two endpoints
/// alternate with the base-orientation head first. Returns a description of
/// the first violation, if any.
std::optional<std::string> alternation_violation(const GroupContext& ctx, const Orientation& base,
                                                 std::span<const Generator> seq);

}  // namespace coxeter
