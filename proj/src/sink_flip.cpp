#include "coxeter/sink_flip.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "coxeter/errors.hpp"
#include "coxeter/reflection.hpp"

namespace coxeter {

bool is_acyclic(const DynkinDiagram& diagram, const std::vector<std::size_t>& heads) {
  // Peel off sinks of the remaining subgraph; a cycle leaves none to peel.
  const std::size_t n = diagram.size();
  std::vector<bool> removed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    bool found = false;
    for (std::size_t v = 0; v < n && !found; ++v) {
      if (removed[v]) continue;
      bool sink = true;
      for (std::size_t e : diagram.incident(v)) {
        const Edge& edge = diagram.edges()[e];
        const std::size_t other = edge.u == v ? edge.v : edge.u;
        if (!removed[other] && heads[e] != v) sink = false;
      }
      if (sink) {
        removed[v] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

Orientation::Orientation(const DynkinDiagram& diagram, std::vector<std::size_t> heads) : heads_(std::move(heads)) {
  if (heads_.size() != diagram.edges().size()) throw InputError("Orientation: one head per edge required");
  for (std::size_t e = 0; e < heads_.size(); ++e) {
    const Edge& edge = diagram.edges()[e];
    if (heads_[e] != edge.u && heads_[e] != edge.v) throw InputError("Orientation: head is not an endpoint of its edge");
  }
  if (!is_acyclic(diagram, heads_)) throw PreconditionError("Orientation: directed cycle");
}

std::string Orientation::to_string(const DynkinDiagram& diagram) const {
  std::ostringstream os;
  for (std::size_t e = 0; e < heads_.size(); ++e) {
    const Edge& edge = diagram.edges()[e];
    const std::size_t tail = heads_[e] == edge.u ? edge.v : edge.u;
    os << (e ? ", " : "") << tail + 1 << "->" << heads_[e] + 1;
  }
  return os.str();
}

bool is_coxeter_word(const GroupContext& ctx, const Word& w) {
  if (w.size() != ctx.rank()) return false;
  std::vector<bool> seen(ctx.rank(), false);
  for (Generator g : w) {
    if (g >= ctx.rank() || seen[g]) return false;
    seen[g] = true;
  }
  return true;
}

std::vector<Word> all_coxeter_words(const GroupContext& ctx) {
  Word w(ctx.rank());
  std::iota(w.begin(), w.end(), 0);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Orientation orientation_of_coxeter_word(const GroupContext& ctx, const Word& w) {
  if (!is_coxeter_word(ctx, w))
    throw InputError("'" + format_word(w) + "' is not a permutation of 1.." + std::to_string(ctx.rank()));
  std::vector<std::size_t> position(ctx.rank());
  for (std::size_t k = 0; k < w.size(); ++k) position[w[k]] = k;
  std::vector<std::size_t> heads;
  for (const Edge& e : ctx.diagram().edges()) heads.push_back(position[e.u] < position[e.v] ? e.u : e.v);
  return Orientation(ctx.diagram(), std::move(heads));
}

Word coxeter_word_of_orientation(const GroupContext& ctx, const Orientation& o) {
  const auto& diagram = ctx.diagram();
  const std::size_t n = ctx.rank();
  std::vector<bool> emitted(n, false);
  Word out;
  while (out.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v) {
      if (emitted[v]) continue;
      bool ready = true;
      for (std::size_t e : diagram.incident(v))
        if (o.head(e) != v && !emitted[o.head(e)]) ready = false;
      if (ready) pick = v;
    }
    if (pick == n) throw PreconditionError("coxeter_word_of_orientation: cyclic orientation");
    emitted[pick] = true;
    out.push_back(pick);
  }
  return out;
}

bool is_sink(const GroupContext& ctx, const Orientation& o, Generator x) {
  for (std::size_t e : ctx.diagram().incident(x))
    if (o.head(e) != x) return false;
  return true;
}

std::vector<Generator> sinks(const GroupContext& ctx, const Orientation& o) {
  std::vector<Generator> out;
  for (Generator x = 0; x < ctx.rank(); ++x)
    if (is_sink(ctx, o, x)) out.push_back(x);
  return out;
}

Orientation flip_sink(const GroupContext& ctx, const Orientation& o, Generator x) {
  if (x >= ctx.rank() || !is_sink(ctx, o, x))
    throw PreconditionError("flip_sink: vertex " + std::to_string(x + 1) + " is not a sink");
  std::vector<std::size_t> heads = o.heads();
  for (std::size_t e : ctx.diagram().incident(x)) {
    const Edge& edge = ctx.diagram().edges()[e];
    heads[e] = edge.u == x ? edge.v : edge.u;
  }
  return Orientation(ctx.diagram(), std::move(heads));
}

bool is_admissible(const GroupContext& ctx, const Orientation& base, std::span<const Generator> seq) {
  Orientation cur = base;
  for (Generator x : seq) {
    if (x >= ctx.rank() || !is_sink(ctx, cur, x)) return false;
    cur = flip_sink(ctx, cur, x);
  }
  return true;
}

namespace {

void dfs(const GroupContext& ctx, const Orientation& o, std::size_t max_length, Word& seq,
         const std::function<Visit(std::span<const Generator>)>& visitor) {
  if (visitor(seq) == Visit::kPrune || seq.size() == max_length) return;
  for (Generator x : sinks(ctx, o)) {
    seq.push_back(x);
    dfs(ctx, flip_sink(ctx, o, x), max_length, seq, visitor);
    seq.pop_back();
  }
}

}  // namespace

void for_each_admissible(const GroupContext& ctx, const Orientation& base, std::size_t max_length,
                         const std::function<Visit(std::span<const Generator>)>& visitor) {
  Word seq;
  dfs(ctx, base, max_length, seq, visitor);
}

std::vector<Word> enumerate_admissible(const GroupContext& ctx, const Orientation& base, std::size_t length,
                                       LengthMode mode) {
  std::vector<Word> out;
  for_each_admissible(ctx, base, length, [&](std::span<const Generator> seq) {
    if (mode == LengthMode::kUpTo || seq.size() == length) out.emplace_back(seq.begin(), seq.end());
    return Visit::kDescend;
  });
  return out;
}

PhiVector::PhiVector(std::size_t n, std::span<const Generator> seq) : counts_(n, 0) {
  for (Generator x : seq) ++counts_.at(x);
}

bool PhiVector::dominated_by(const PhiVector& other) const {
  for (std::size_t x = 0; x < counts_.size(); ++x)
    if (counts_[x] > other.counts_[x]) return false;
  return true;
}

PhiVector phi(const GroupContext& ctx, std::span<const Generator> seq) { return PhiVector(ctx.rank(), seq); }

Word commutation_normal_form(const GroupContext& ctx, std::span<const Generator> seq) {
  const auto& diagram = ctx.diagram();
  std::vector<Generator> rest(seq.begin(), seq.end());
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // A letter is playable when every earlier letter commutes past it.
    std::size_t best = rest.size();
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool blocked = false;
      for (std::size_t q = 0; q < p && !blocked; ++q)
        blocked = rest[q] == rest[p] || diagram.adjacent(rest[q], rest[p]);
      if (!blocked && (best == rest.size() || rest[p] < rest[best])) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool commutation_equivalent(const GroupContext& ctx, std::span<const Generator> a, std::span<const Generator> b) {
  if (a.size() != b.size()) return false;
  return commutation_normal_form(ctx, a) == commutation_normal_form(ctx, b);
}

std::vector<Word> commutation_class(const GroupContext& ctx, const Word& seq) {
  std::set<Word> seen{seq};
  std::deque<Word> queue{seq};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] == cur[k + 1] || ctx.diagram().adjacent(cur[k], cur[k + 1])) continue;
      Word next = cur;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

bool poset_leq_by_prefix(const GroupContext& ctx, const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  const Word target = commutation_normal_form(ctx, u);
  for (const Word& rep : commutation_class(ctx, v)) {
    std::span<const Generator> prefix(rep.data(), u.size());
    if (commutation_normal_form(ctx, prefix) == target) return true;
  }
  return false;
}

bool poset_leq(const GroupContext& ctx, const Orientation& base, const Word& u, const Word& v, PosetCheck mode) {
  if (!is_admissible(ctx, base, u)) throw PreconditionError("poset_leq: '" + format_word(u) + "' is not admissible");
  if (!is_admissible(ctx, base, v)) throw PreconditionError("poset_leq: '" + format_word(v) + "' is not admissible");
  const bool by_phi = phi(ctx, u).dominated_by(phi(ctx, v));
  if (mode == PosetCheck::kCrossCheck && by_phi != poset_leq_by_prefix(ctx, u, v))
    throw std::logic_error("poset_leq: phi and prefix characterizations disagree on (" + format_word(u) + ") vs (" +
                           format_word(v) + ")");
  return by_phi;
}

std::optional<std::string> alternation_violation(const GroupContext& ctx, const Orientation& base,
                                                 std::span<const Generator> seq) {
  const auto& edges = ctx.diagram().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t head = base.head(e);
    const std::size_t tail = edges[e].u == head ? edges[e].v : edges[e].u;
    std::size_t expected = head;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (seq[k] != head && seq[k] != tail) continue;
      if (seq[k] != expected) {
        std::ostringstream os;
        os << "sequence (" << format_word(Word(seq.begin(), seq.end())) << "): edge " << tail + 1 << "->" << head + 1
           << " breaks alternation at position " << k + 1;
        return os.str();
      }
      expected = expected == head ? tail : head;
    }
  }
  return std::nullopt;
}

}  // namespace coxeter
