#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/algebraic_real.hpp"
#include "coxeter/linear_algebra.hpp"

namespace coxeter {

/// Index of a simple generator, 0-based. Words printed for humans are 1-based.
using Generator = std::size_t;
using Word = std::vector<Generator>;

/// Symmetric Coxeter matrix: diagonal 1, off-diagonal entries >= 2 or
/// kInfinity (0).
class CoxeterMatrix {
 public:
  /// Validates the entries; throws InputError naming the offending indices.
  explicit CoxeterMatrix(std::vector<std::vector<Label>> entries);

  std::size_t rank() const { return entries_.size(); }
  Label operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Label>>& entries() const { return entries_; }

  /// lcm of the finite labels >= 3, or 1 when there are none.
  unsigned conductor() const;

 private:
  std::vector<std::vector<Label>> entries_;
};

struct Edge {
  std::size_t u, v;  // u < v
};

/// Undirected graph on the generators with an edge wherever m_ij != 2.
class DynkinDiagram {
 public:
  explicit DynkinDiagram(const CoxeterMatrix& m);

  std::size_t size() const { return adjacent_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Indices into edges() of the edges at vertex v.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacent_[u][v]; }

  /// Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }
  /// Largest BFS distance; nullopt when disconnected.
  std::optional<std::size_t> diameter() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<bool>> adjacent_;
};

enum class Classification { kFinite, kAffine, kIndefinite };

std::string to_string(Classification c);

struct Component {
  std::vector<std::size_t> vertices;
  Classification classification;
};

/// Everything about a Coxeter system that the rest of the library consumes.
/// Immutable once built; copies share the field.
class GroupContext {
 public:
  std::size_t rank() const { return matrix_.rank(); }
  const std::string& name() const { return name_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const DynkinDiagram& diagram() const { return diagram_; }
  const FieldContext& field() const { return *field_; }
  const std::shared_ptr<const FieldContext>& field_ptr() const { return field_; }
  /// The form B in the simple-root basis.
  const Matrix& form() const { return form_; }
  const AlgReal& form(std::size_t i, std::size_t j) const { return form_(i, j); }

  Classification classification() const { return classification_; }
  bool irreducible() const { return components_.size() == 1; }
  const std::vector<Component>& components() const { return components_; }
  /// Leading principal minors of B, k = 1..n.
  const std::vector<AlgReal>& leading_minors() const { return minors_; }
  const std::vector<RootVector>& kernel() const { return kernel_; }
  std::optional<std::size_t> diameter() const { return diagram_.diameter(); }

  /// Infinite and irreducible: the hypothesis of the reducedness theorems.
  bool infinite_irreducible() const {
    return irreducible() && classification_ != Classification::kFinite;
  }

 private:
  friend GroupContext build_context(const CoxeterMatrix& matrix, std::string name);
  GroupContext(const CoxeterMatrix& m, std::shared_ptr<const FieldContext> f);

  std::string name_;
  CoxeterMatrix matrix_;
  DynkinDiagram diagram_;
  std::shared_ptr<const FieldContext> field_;
  Matrix form_;
  Classification classification_ = Classification::kFinite;
  std::vector<Component> components_;
  std::vector<AlgReal> minors_;
  std::vector<RootVector> kernel_;
};

GroupContext build_context(const CoxeterMatrix& matrix, std::string name = "");

/// Finite iff B is positive definite, affine iff positive semidefinite and
/// singular, indefinite otherwise.
Classification classify(const GroupContext& ctx);
Classification classify_form(const Matrix& form);

bool is_irreducible(const GroupContext& ctx);
std::optional<std::size_t> diameter(const GroupContext& ctx);

}  // namespace coxeter
