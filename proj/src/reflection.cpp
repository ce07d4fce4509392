#include "coxeter/reflection.hpp"

#include <map>
#include <set>
#include <sstream>

#include "coxeter/errors.hpp"

namespace coxeter {

Element Element::identity(const GroupContext& ctx) {
  Element e(Matrix::identity(ctx.field(), ctx.rank()), Matrix::identity(ctx.field(), ctx.rank()));
  e.length_ = 0;
  return e;
}

namespace {

// X <- S_i X: only row i changes.
void apply_left(const GroupContext& ctx, Matrix& x, Generator i) {
  const std::size_t n = ctx.rank();
  for (std::size_t c = 0; c < n; ++c) {
    AlgReal delta = AlgReal::zero(ctx.field());
    for (std::size_t j = 0; j < n; ++j)
      if (!ctx.form(i, j).is_zero() && !x(j, c).is_zero()) delta += ctx.form(i, j) * x(j, c);
    x(i, c) -= delta;
  }
}

// X <- X S_i: column c loses B(i, c) times column i.
void apply_right(const GroupContext& ctx, Matrix& x, Generator i) {
  const std::size_t n = ctx.rank();
  std::vector<AlgReal> col;
  col.reserve(n);
  for (std::size_t r = 0; r < n; ++r) col.push_back(x(r, i));
  for (std::size_t c = 0; c < n; ++c) {
    const AlgReal& b = ctx.form(i, c);
    if (b.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r)
      if (!col[r].is_zero()) x(r, c) -= col[r] * b;
  }
}

Sign column_sign(const Matrix& m, std::size_t c) {
  bool pos = false, neg = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Sign s = m(r, c).sign();
    pos = pos || s == Sign::kPositive;
    neg = neg || s == Sign::kNegative;
  }
  if (pos && neg) throw NotARootError("not a root vector: column " + m.column(c).to_string() + " has mixed signs");
  if (!pos && !neg) throw NotARootError("not a root vector: zero column");
  return pos ? Sign::kPositive : Sign::kNegative;
}

}  // namespace

void Element::left_multiply(const GroupContext& ctx, Generator i) {
  apply_left(ctx, mat_, i);
  apply_right(ctx, inv_, i);
  length_.reset();
}

void Element::right_multiply(const GroupContext& ctx, Generator i) {
  apply_right(ctx, mat_, i);
  apply_left(ctx, inv_, i);
  length_.reset();
}

bool Element::has_left_descent(Generator i) const { return column_sign(inv_, i) == Sign::kNegative; }

bool Element::has_right_descent(Generator i) const { return column_sign(mat_, i) == Sign::kNegative; }

RootVector reflect_simple(const GroupContext& ctx, Generator i, const RootVector& v) {
  if (i >= ctx.rank()) throw InputError("generator index " + std::to_string(i + 1) + " out of range");
  if (v.size() != ctx.rank()) throw std::invalid_argument("reflect_simple: dimension mismatch");
  RootVector out = v;
  AlgReal pairing = AlgReal::zero(ctx.field());
  for (std::size_t j = 0; j < ctx.rank(); ++j)
    if (!v[j].is_zero()) pairing += ctx.form(i, j) * v[j];
  out[i] -= pairing;
  return out;
}

void check_word(const GroupContext& ctx, const Word& w) {
  for (Generator g : w)
    if (g >= ctx.rank())
      throw InputError("generator index " + std::to_string(g + 1) + " out of range 1.." +
                       std::to_string(ctx.rank()));
}

Element word_to_element(const GroupContext& ctx, const Word& w) {
  check_word(ctx, w);
  Element e = Element::identity(ctx);
  for (Generator g : w) e.right_multiply(ctx, g);
  return e;
}

Sign root_sign(const RootVector& v) {
  bool pos = false, neg = false;
  for (const auto& c : v.coords()) {
    Sign s = c.sign();
    pos = pos || s == Sign::kPositive;
    neg = neg || s == Sign::kNegative;
  }
  if (pos && neg) throw NotARootError("not a root vector: " + v.to_string() + " has mixed signs");
  if (!pos && !neg) throw NotARootError("not a root vector: zero vector");
  return pos ? Sign::kPositive : Sign::kNegative;
}

bool is_positive_root_vector(const GroupContext& ctx, const RootVector& v) {
  if (v.size() != ctx.rank()) throw std::invalid_argument("is_positive_root_vector: dimension mismatch");
  return root_sign(v) == Sign::kPositive;
}

std::vector<ReflectionRoot> reflection_sequence(const GroupContext& ctx, const Word& w) {
  check_word(ctx, w);
  std::vector<ReflectionRoot> out;
  out.reserve(w.size());
  Matrix prefix = Matrix::identity(ctx.field(), ctx.rank());
  for (Generator g : w) {
    RootVector root = prefix.column(g);
    const bool flipped = root_sign(root) == Sign::kNegative;
    out.push_back({flipped ? -root : std::move(root), flipped});
    apply_right(ctx, prefix, g);
  }
  return out;
}

bool is_reduced(const GroupContext& ctx, const Word& w) {
  check_word(ctx, w);
  // Only u^{-1} is needed; u <- s_x u means u^{-1} <- u^{-1} s_x.
  Matrix u_inv = Matrix::identity(ctx.field(), ctx.rank());
  for (std::size_t k = w.size(); k-- > 0;) {
    if (column_sign(u_inv, w[k]) == Sign::kNegative) return false;
    apply_right(ctx, u_inv, w[k]);
  }
  return true;
}

bool is_reduced_by_reflection_sequence(const GroupContext& ctx, const Word& w) {
  std::set<std::string> seen;
  for (const auto& entry : reflection_sequence(ctx, w)) {
    if (entry.flipped) return false;
    if (!seen.insert(entry.root.key()).second) return false;
  }
  return true;
}

Word reduced_word(const GroupContext& ctx, const Element& e) {
  Element cur = e;
  Word out;
  while (!cur.is_identity()) {
    Generator i = 0;
    while (i < ctx.rank() && !cur.has_left_descent(i)) ++i;
    if (i == ctx.rank()) throw std::logic_error("reduced_word: non-identity element without a left descent");
    cur.left_multiply(ctx, i);
    out.push_back(i);
  }
  return out;
}

std::size_t length(const GroupContext& ctx, const Element& e) {
  if (e.cached_length()) return *e.cached_length();
  return reduced_word(ctx, e).size();
}

bool is_inversion(const GroupContext& ctx, const Element& e, const RootVector& t_root) {
  if (!is_positive_root_vector(ctx, t_root))
    throw PreconditionError("is_inversion: " + t_root.to_string() + " is not a positive root");
  return root_sign(e.inverse_matrix() * t_root) == Sign::kNegative;
}

std::vector<RootVector> inversions_by_parity(const GroupContext& ctx, const Word& w) {
  std::map<std::string, std::pair<RootVector, std::size_t>> counts;
  std::vector<std::string> order;
  for (auto& entry : reflection_sequence(ctx, w)) {
    std::string k = entry.root.key();
    auto it = counts.find(k);
    if (it == counts.end()) {
      order.push_back(k);
      counts.emplace(k, std::pair{std::move(entry.root), 1});
    } else {
      ++it->second.second;
    }
  }
  std::vector<RootVector> out;
  for (const auto& k : order) {
    auto& [root, count] = counts.at(k);
    if (count % 2 == 1) out.push_back(root);
  }
  return out;
}

Element hecke_pi(const GroupContext& ctx, Generator i, Element e) {
  if (i >= ctx.rank()) throw InputError("generator index " + std::to_string(i + 1) + " out of range");
  if (e.has_left_descent(i)) return e;
  const auto len = e.cached_length();
  e.left_multiply(ctx, i);
  if (len) e.length_ = *len + 1;
  return e;
}

Element demazure_product(const GroupContext& ctx, const Word& seq) {
  check_word(ctx, seq);
  Element e = Element::identity(ctx);
  for (std::size_t k = seq.size(); k-- > 0;) e = hecke_pi(ctx, seq[k], std::move(e));
  return e;
}

Element demazure_extend_right(const GroupContext& ctx, Element e, Generator i) {
  if (i >= ctx.rank()) throw InputError("generator index " + std::to_string(i + 1) + " out of range");
  if (e.has_right_descent(i)) return e;
  const auto len = e.cached_length();
  e.right_multiply(ctx, i);
  if (len) e.length_ = *len + 1;
  return e;
}

Matrix reflection_matrix(const GroupContext& ctx, const RootVector& root) {
  const std::size_t n = ctx.rank();
  const RootVector b_root = ctx.form() * root;
  Matrix r = Matrix::identity(ctx.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= root[i] * b_root[j];
  return r;
}

bool matrices_commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

std::vector<RootVector> positive_roots(const GroupContext& ctx, std::size_t depth) {
  const std::size_t n = ctx.rank();
  std::vector<RootVector> out;
  std::set<std::string> seen;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector a = RootVector::simple_root(ctx.field(), n, i);
    seen.insert(a.key());
    out.push_back(a);
    frontier.push_back(std::move(a));
  }
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier)
      for (Generator i = 0; i < n; ++i) {
        RootVector image = reflect_simple(ctx, i, beta);
        // s_i permutes the positive roots other than a_i.
        if (root_sign(image) != Sign::kPositive) continue;
        if (!seen.insert(image.key()).second) continue;
        out.push_back(image);
        next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return out;
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k] + 1;
  return os.str();
}

}  // namespace coxeter
