#pragma once

#include "ocha/linalg.hpp"
#include "ocha/structures.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocha {

/// Raised when a computation would exceed a configured resource bound.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a product of classes has components above the weight cap.
class WeightOverflow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  OCKey key;
  int degree = 0;  // shifted degree of the dual cochain
  int weight = 0;  // 2l + k
};

struct AssembleOptions {
  std::size_t max_cells = 20000;
  /// Lists cells by descending instead of ascending weight (used to check
  /// that dimensions do not depend on the ordering).
  bool reverse_order = false;
  DeltaMutation mutation = DeltaMutation::none;
};

/// An element of truncated cohomology in a fixed degree. `coordinates` are
/// with respect to the chosen basis of that degree; `id` is the basis index
/// when the element is a basis class and -1 otherwise.
struct CohomologyClass {
  int degree = 0;
  int id = -1;
  std::vector<Scalar> coordinates;
  OCCochain representative;
  bool is_zero() const;
};

/// The weight <= W quotient of the open-closed Hochschild complex:
/// cells are the dual basis of C^{l,k} with 1 <= 2l + k <= W, and the
/// boundary is delta followed by projection to weight <= W.
class TruncatedComplex {
public:
  int weight_cap() const { return cap_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  /// Sparse boundary: column j holds delta(cell_j) projected to weight <= W.
  const std::vector<std::map<int, Scalar>>& boundary() const { return columns_; }
  int index_of(const OCKey& key) const;

  /// Degrees that carry at least one cell.
  std::vector<int> degrees() const;
  /// Cells of one degree, in the complex's order.
  const std::vector<int>& cells_in_degree(int degree) const;
  /// The block delta: C^degree -> C^{degree+1} as a dense matrix.
  Matrix block(int degree) const;
  /// Full boundary matrix in cell order.
  Matrix full_matrix() const;

  /// Number of nonzero boundary entries landing in a lower weight than the
  /// source cell. Zero for an honest filtered differential.
  std::size_t weight_violations() const;
  /// delta_trunc o delta_trunc == 0, by sparse multiplication.
  bool squares_to_zero() const;
  /// Indices of cells on which delta_trunc o delta_trunc is nonzero.
  std::vector<int> square_defects() const;

  /// Coordinates of a cochain supported on cells; throws WeightOverflow if
  /// it has components of weight > W.
  std::vector<Scalar> coordinates(const OCCochain& d) const;
  OCCochain cochain(const std::vector<Scalar>& coords) const;
  /// delta followed by projection, on cochains.
  OCCochain truncated_delta(const OCCochain& d) const;

  const OchaStructure& structure() const { return *ocha_; }

private:
  friend TruncatedComplex assemble_complex(const OchaStructure&, int, const AssembleOptions&);
  std::shared_ptr<const OchaStructure> ocha_;
  int cap_ = 0;
  std::vector<Cell> cells_;
  std::map<OCKey, int> index_;
  std::map<int, std::vector<int>> by_degree_;
  std::vector<std::map<int, Scalar>> columns_;
  DeltaMutation mutation_ = DeltaMutation::none;
};

/// Enumerates cells and assembles the truncated boundary. Throws
/// ResourceError when the cell count exceeds options.max_cells. The
/// complex keeps its own copy of the structure.
TruncatedComplex assemble_complex(const OchaStructure& s, int max_weight,
                                  const AssembleOptions& options = {});

/// Cohomology of one degree: a basis of classes and the data needed to
/// express closed cochains in it.
struct DegreeCohomology {
  int degree = 0;
  int cells = 0;
  int cycles = 0;      // dim ker
  int boundaries = 0;  // dim im of the incoming map
  int rank_out = 0;    // rank of the outgoing map
  std::vector<CohomologyClass> classes;
  int dimension() const { return static_cast<int>(classes.size()); }
};

class Cohomology {
public:
  /// Keeps a copy of the complex.
  explicit Cohomology(const TruncatedComplex& c);

  const TruncatedComplex& complex() const { return *complex_; }
  const std::map<int, DegreeCohomology>& by_degree() const { return degrees_; }
  int dimension(int degree) const;
  std::vector<CohomologyClass> classes() const;

  bool is_cycle(const OCCochain& d) const;
  /// Coordinates of the class of a cycle in the chosen basis of its degree.
  /// Throws WeightOverflow for components above the cap, AlgebraError for
  /// non-cycles or inhomogeneous input.
  std::vector<Scalar> class_coordinates(const OCCochain& cycle, int degree) const;
  /// True when the cycle is a boundary in the truncated complex.
  bool is_exact(const OCCochain& cycle) const;
  /// Class of a homogeneous cycle of the given degree; the representative
  /// is the basis combination.
  CohomologyClass reduce(const OCCochain& cycle, int degree) const;

private:
  std::shared_ptr<const TruncatedComplex> complex_;
  std::map<int, DegreeCohomology> degrees_;
  // Per degree: columns [class reps | boundary generators], in local cell
  // coordinates, for expressing cycles in the basis.
  std::map<int, Matrix> solve_systems_;
  std::vector<Scalar> local_coordinates(const OCCochain& d, int degree) const;
};

/// [c1, c2] on classes. Refuses (WeightOverflow) when the bracket of the
/// representatives has components of weight above the cap.
CohomologyClass induced_bracket(const Cohomology& h, const CohomologyClass& c1,
                                const CohomologyClass& c2);
/// c1 cup c2 on classes, same refusal rule.
CohomologyClass induced_cup(const Cohomology& h, const CohomologyClass& c1,
                            const CohomologyClass& c2);

/// Cochain-level products with the weight refusal applied.
OCCochain checked_bracket(const Cohomology& h, const OCCochain& a, const OCCochain& b);
OCCochain checked_cup(const Cohomology& h, const OCCochain& a, const OCCochain& b);

struct AxiomTally {
  std::string axiom;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> witnesses;
};

struct GerstenhaberReport {
  std::vector<AxiomTally> axioms;
  bool passed() const;
  std::string summary() const;
};

/// Checks delta^2 = 0 on every cell, then closure, antisymmetry, Jacobi, cup
/// commutativity, cup associativity and Leibniz on all pairs/triples from `sample` (all
/// classes when empty). Triples whose products leave the window are skipped.
GerstenhaberReport verify_gerstenhaber(const Cohomology& h,
                                       const std::vector<CohomologyClass>& sample = {});

}  // namespace ocha
