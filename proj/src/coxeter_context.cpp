#include "coxeter/coxeter_context.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "coxeter/errors.hpp"

namespace coxeter {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<Label>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw InputError("Coxeter matrix must have rank >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) {
      std::ostringstream os;
      os << "Coxeter matrix row " << i + 1 << " has " << entries_[i].size() << " entries, expected " << n;
      throw InputError(os.str());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 1) {
      std::ostringstream os;
      os << "Coxeter matrix diagonal entry (" << i + 1 << "," << i + 1 << ") is " << entries_[i][i]
         << ", expected 1";
      throw InputError(os.str());
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] != entries_[j][i]) {
        std::ostringstream os;
        os << "Coxeter matrix is not symmetric at (" << i + 1 << "," << j + 1 << ")";
        throw InputError(os.str());
      }
      if (entries_[i][j] == 1) {
        std::ostringstream os;
        os << "Coxeter matrix entry (" << i + 1 << "," << j + 1 << ") must be >= 2 or 0 (infinity)";
        throw InputError(os.str());
      }
    }
  }
}

unsigned CoxeterMatrix::conductor() const {
  unsigned m = 1;
  for (const auto& row : entries_)
    for (Label x : row)
      if (x != kInfinity && x >= 3) m = std::lcm(m, x);
  return m;
}

DynkinDiagram::DynkinDiagram(const CoxeterMatrix& m)
    : incident_(m.rank()), neighbors_(m.rank()), adjacent_(m.rank(), std::vector<bool>(m.rank(), false)) {
  for (std::size_t u = 0; u < m.rank(); ++u)
    for (std::size_t v = u + 1; v < m.rank(); ++v) {
      if (m(u, v) == 2) continue;
      incident_[u].push_back(edges_.size());
      incident_[v].push_back(edges_.size());
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
      adjacent_[u][v] = adjacent_[v][u] = true;
      edges_.push_back({u, v});
    }
}

std::vector<std::vector<std::size_t>> DynkinDiagram::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (std::size_t w : neighbors_[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::size_t> DynkinDiagram::diameter() const {
  std::size_t best = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    std::vector<std::size_t> dist(size(), SIZE_MAX);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : neighbors_[v])
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (std::size_t d : dist) {
      if (d == SIZE_MAX) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kFinite: return "finite";
    case Classification::kAffine: return "affine";
    case Classification::kIndefinite: return "indefinite";
  }
  return "?";
}

GroupContext::GroupContext(const CoxeterMatrix& m, std::shared_ptr<const FieldContext> f)
    : matrix_(m), diagram_(m), field_(std::move(f)), form_(*field_, m.rank(), m.rank()) {}

Classification classify_form(const Matrix& form) {
  switch (classify_symmetric(form)) {
    case Definiteness::kPositiveDefinite: return Classification::kFinite;
    case Definiteness::kPositiveSemidefinite: return Classification::kAffine;
    case Definiteness::kIndefinite: return Classification::kIndefinite;
  }
  return Classification::kIndefinite;
}

GroupContext build_context(const CoxeterMatrix& matrix, std::string name) {
  GroupContext ctx(matrix, make_field_context(matrix.conductor()));
  ctx.name_ = std::move(name);
  const std::size_t n = matrix.rank();
  const FieldContext& f = *ctx.field_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ctx.form_(i, j) = i == j ? AlgReal(f, 2) : -two_cos_pi_over(f, matrix(i, j));

  for (std::size_t k = 1; k <= n; ++k) {
    Matrix lead(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = ctx.form_(i, j);
    ctx.minors_.push_back(determinant(std::move(lead)));
  }
  // All leading minors positive is Sylvester's criterion for definiteness.
  const bool definite = std::all_of(ctx.minors_.begin(), ctx.minors_.end(),
                                    [](const AlgReal& x) { return x.is_positive(); });
  ctx.classification_ = definite ? Classification::kFinite : classify_form(ctx.form_);
  ctx.kernel_ = kernel_basis(ctx.form_);

  for (auto& verts : ctx.diagram_.components()) {
    Matrix sub(f, verts.size(), verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j) sub(i, j) = ctx.form_(verts[i], verts[j]);
    Classification c = classify_form(sub);
    ctx.components_.push_back({std::move(verts), c});
  }
  return ctx;
}

Classification classify(const GroupContext& ctx) { return ctx.classification(); }

bool is_irreducible(const GroupContext& ctx) { return ctx.irreducible(); }

std::optional<std::size_t> diameter(const GroupContext& ctx) { return ctx.diameter(); }

}  // namespace coxeter
