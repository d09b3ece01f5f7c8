#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/complex.hpp"

namespace twistlab {

// Evaluation P_i (x) Hom(P_i, X) -> X at cochain level.
template <Field F>
ChainMap<F> evaluation_map(Vertex i, const ProjComplex<F>& x);
// Coevaluation X -> P_i (x) Hom(X, P_i), built from the trace-dual basis.
template <Field F>
ChainMap<F> coevaluation_map(Vertex i, const ProjComplex<F>& x);

template <Field F>
ProjComplex<F> twist(Vertex i, const ProjComplex<F>& x);
template <Field F>
ProjComplex<F> twist_inv(Vertex i, const ProjComplex<F>& x);
// Letters act right to left: twist_word(s_a s_b, X) = twist(a, twist(b, X)).
template <Field F>
ProjComplex<F> twist_word(const BraidWord& w, const ProjComplex<F>& x);
// Product of the pairwise commuting twists t_k, k in delta.
template <Field F>
ProjComplex<F> twist_set(const std::vector<Vertex>& delta, const ProjComplex<F>& x);
template <Field F>
ProjComplex<F> twist_inv_set(const std::vector<Vertex>& delta, const ProjComplex<F>& x);

using Multiplicities = std::map<Vertex, int>;  // positive entries only

// Cone of phi: left summands (color `side`) in degree -1, right summands in degree 0.
template <Field F>
struct TwoTermObject {
  DynkinDiagram diagram;
  int side = 0;
  std::vector<Vertex> left_summands;
  std::vector<Vertex> right_summands;
  MorphMatrix<F> phi;  // rows: right summands, cols: left summands

  Multiplicities left() const;
  Multiplicities right() const;
};

template <Field F>
TwoTermObject<F> make_two_term(const DynkinDiagram& d, int side, std::vector<Vertex> left,
                               std::vector<Vertex> right, MorphMatrix<F> phi);

// Reads a minimal complex as a two-term object. The zero complex gives nullopt.
template <Field F>
std::optional<TwoTermObject<F>> two_term_of(const ProjComplex<F>& x);
template <Field F>
ProjComplex<F> assemble(const TwoTermObject<F>& t);

// Dimension criterion: dim Hom*(P_l, X) = sum of neighbouring multiplicities.
template <Field F>
bool is_right_proper(const TwoTermObject<F>& t);
template <Field F>
bool is_left_proper(const TwoTermObject<F>& t);
// Rank conditions on the arrow coefficients of phi.
template <Field F>
bool right_proper_direct(const TwoTermObject<F>& t);
template <Field F>
bool left_proper_direct(const TwoTermObject<F>& t);

struct TwoTermShape {
  int side = 0;
  Multiplicities left;
  Multiplicities right;

  friend bool operator==(const TwoTermShape&, const TwoTermShape&) = default;
};

template <Field F>
TwoTermShape shape_of(const TwoTermObject<F>& t);

// plus:  t_delta(X)[-1] for right-proper X with rsupp in delta, delta of color side+1.
// minus: t_delta^{-1}(X)[1] for left-proper X with lsupp in delta, delta of color side.
enum class Reflection { plus, minus };

template <Field F>
TwoTermShape two_term_reflect(const TwoTermObject<F>& t, const std::vector<Vertex>& delta,
                              Reflection part);
// Chooses the part from the color of a nonempty delta.
template <Field F>
TwoTermShape two_term_reflect(const TwoTermObject<F>& t, const std::vector<Vertex>& delta);
template <Field F>
ProjComplex<F> reflect_apply(const ProjComplex<F>& x, const std::vector<Vertex>& delta, Reflection part);

std::string describe(const TwoTermShape& s);

}  // namespace twistlab
