#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/zigzag.hpp"

namespace twistlab {

// Matrix of morphisms between direct sums of projectives. Entry (r, c) maps the
// c-th column summand to the r-th row summand.
template <Field F>
class MorphMatrix {
public:
  MorphMatrix() = default;
  MorphMatrix(std::vector<Vertex> row_vertices, std::vector<Vertex> col_vertices);

  std::size_t rows() const { return row_v_.size(); }
  std::size_t cols() const { return col_v_.size(); }
  const std::vector<Vertex>& row_vertices() const { return row_v_; }
  const std::vector<Vertex>& col_vertices() const { return col_v_; }
  const MorphElement<F>& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  MorphElement<F>& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  // Checked assignment.
  void set(std::size_t r, std::size_t c, MorphElement<F> f);
  bool is_zero() const;

  friend bool operator==(const MorphMatrix&, const MorphMatrix&) = default;

private:
  std::vector<Vertex> row_v_;
  std::vector<Vertex> col_v_;
  std::vector<MorphElement<F>> entries_;
};

// g after f.
template <Field F>
MorphMatrix<F> operator*(const MorphMatrix<F>& g, const MorphMatrix<F>& f);

// Bounded cochain complex of projectives, differential of degree +1.
template <Field F>
class ProjComplex {
public:
  explicit ProjComplex(DynkinDiagram d);
  // Missing differentials are zero. Shapes and entry types are checked; empty
  // end degrees are trimmed. d^2 = 0 is not checked here (see is_complex).
  ProjComplex(DynkinDiagram d, const std::map<int, std::vector<Vertex>>& terms,
              std::map<int, MorphMatrix<F>> diffs = {});

  const DynkinDiagram& diagram() const { return diagram_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree range of the stored terms; both throw on the zero complex.
  int lowest() const;
  int highest() const;
  const std::vector<Vertex>& summands(int degree) const;
  // Differential from degree d to d+1.
  const MorphMatrix<F>& differential(int degree) const;
  std::size_t total_summands() const;
  bool is_complex() const;

  friend bool operator==(const ProjComplex& a, const ProjComplex& b) {
    return a.diagram_ == b.diagram_ && a.lo_ == b.lo_ && a.terms_ == b.terms_ && a.diffs_ == b.diffs_;
  }

private:
  DynkinDiagram diagram_;
  int lo_ = 0;
  std::vector<std::vector<Vertex>> terms_;
  // diffs_[k] is the differential out of degree lo_ + k - 1.
  std::vector<MorphMatrix<F>> diffs_;
};

template <Field F>
struct ChainMap {
  ProjComplex<F> source;
  ProjComplex<F> target;
  std::map<int, MorphMatrix<F>> components;

  // Component in the given degree, zero if absent.
  MorphMatrix<F> component(int degree) const;
  bool is_chain_map() const;
};

template <Field F>
struct ConeResult {
  ProjComplex<F> cone;
  ChainMap<F> inclusion;   // target -> cone
  ChainMap<F> projection;  // cone -> source[1]
};

template <Field F>
ProjComplex<F> projective(const DynkinDiagram& d, Vertex i);
template <Field F>
ProjComplex<F> sum_of_projectives(const DynkinDiagram& d);
template <Field F>
ProjComplex<F> stalk(const DynkinDiagram& d, std::vector<Vertex> summands, int degree);
template <Field F>
ProjComplex<F> shift(const ProjComplex<F>& x, int n);
template <Field F>
ConeResult<F> cone_with_maps(const ChainMap<F>& f);
template <Field F>
ProjComplex<F> cone(const ChainMap<F>& f);
template <Field F>
ProjComplex<F> direct_sum(const ProjComplex<F>& x, const ProjComplex<F>& y);
// Gaussian elimination of unit entries until none is left.
template <Field F>
ProjComplex<F> minimize(const ProjComplex<F>& x);

struct HomBasisRef {
  std::size_t summand;
  MorphKind kind;
};

// Cochain complex Hom(P_j, X) in the distinguished bases.
template <Field F>
struct HomComplex {
  Vertex probe = 0;
  std::map<int, std::vector<HomBasisRef>> basis;
  std::map<int, Matrix<F>> differential;  // degree d -> d+1, for every d in basis

  std::size_t dim(int degree) const;
  Matrix<F> matrix(int degree) const;  // zero matrix of the right shape if absent
};

template <Field F>
HomComplex<F> hom_complex(Vertex j, const ProjComplex<F>& x);

using HomRow = std::map<int, int>;  // degree -> dimension, nonzero entries only

template <Field F>
HomRow hom_dims(Vertex j, const ProjComplex<F>& x);
template <Field F>
int hom_euler(Vertex j, const ProjComplex<F>& x);

struct HomProfile {
  std::map<std::pair<Vertex, int>, int> dims;  // (vertex, degree) -> dim, nonzero only

  bool empty() const { return dims.empty(); }
  int total() const;
  std::map<int, int> totals_by_degree() const;
  friend bool operator==(const HomProfile&, const HomProfile&) = default;
};

template <Field F>
HomProfile profile(const ProjComplex<F>& x);
template <Field F>
bool profiles_equal(const ProjComplex<F>& x, const ProjComplex<F>& y);
// Encodes summand multisets and profile; x must already be minimal.
template <Field F>
std::string canonical_key(const ProjComplex<F>& x);

template <Field F>
std::string describe(const ProjComplex<F>& x);

}  // namespace twistlab
