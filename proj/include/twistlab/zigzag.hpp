#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/field.hpp"

namespace twistlab {

enum class MorphKind { identity, loop, arrow };

std::string_view kind_name(MorphKind k);
MorphKind parse_kind(std::string_view text);

struct MorphBasisElement {
  Vertex src;
  Vertex tgt;
  MorphKind kind;

  friend bool operator==(const MorphBasisElement&, const MorphBasisElement&) = default;
};

// [id, loop] for i == j, [arrow] for adjacent i, j, empty otherwise.
std::vector<MorphBasisElement> hom_basis(const DynkinDiagram& d, Vertex i, Vertex j);
int hom_dim(const DynkinDiagram& d, Vertex i, Vertex j);

// Element of Hom(P_src, P_tgt). For an endomorphism `lead` is the identity
// coefficient and `loop` the loop coefficient; otherwise `lead` is the arrow
// coefficient and `loop` stays zero.
template <Field F>
class MorphElement {
public:
  MorphElement() = default;

  static MorphElement zero(Vertex src, Vertex tgt) { return MorphElement(src, tgt, F::zero(), F::zero()); }
  static MorphElement identity(Vertex v, F c = F::one()) { return MorphElement(v, v, c, F::zero()); }
  static MorphElement loop(Vertex v, F c = F::one()) { return MorphElement(v, v, F::zero(), c); }
  static MorphElement arrow(const DynkinDiagram& d, Vertex i, Vertex j, F c = F::one());
  static MorphElement basis(const MorphBasisElement& b, F c = F::one());

  Vertex src() const { return src_; }
  Vertex tgt() const { return tgt_; }
  bool is_endo() const { return src_ == tgt_; }
  const F& lead() const { return lead_; }
  const F& loop_coef() const { return loop_; }
  F coefficient(MorphKind k) const;
  bool is_zero() const { return lead_.is_zero() && loop_.is_zero(); }
  // Identity coefficient is a unit, so the element is invertible.
  bool is_unit() const { return is_endo() && !lead_.is_zero(); }
  // Coefficients in the order of hom_basis(src, tgt).
  std::vector<F> coordinates(const DynkinDiagram& d) const;

  MorphElement& operator+=(const MorphElement& o);
  MorphElement& operator-=(const MorphElement& o);
  friend MorphElement operator+(MorphElement a, const MorphElement& b) { return a += b; }
  friend MorphElement operator-(MorphElement a, const MorphElement& b) { return a -= b; }
  MorphElement operator-() const { return MorphElement(src_, tgt_, -lead_, -loop_); }
  friend MorphElement operator*(const F& c, const MorphElement& f) {
    return MorphElement(f.src_, f.tgt_, c * f.lead_, c * f.loop_);
  }
  friend bool operator==(const MorphElement&, const MorphElement&) = default;

private:
  MorphElement(Vertex s, Vertex t, F a, F b) : src_(s), tgt_(t), lead_(std::move(a)), loop_(std::move(b)) {}

  Vertex src_ = 0;
  Vertex tgt_ = 0;
  F lead_ = F::zero();
  F loop_ = F::zero();
};

// g after f.
template <Field F>
MorphElement<F> compose(const MorphElement<F>& g, const MorphElement<F>& f);

// Inverse of a unit endomorphism a id + b loop.
template <Field F>
MorphElement<F> unit_inverse(const MorphElement<F>& e);

template <Field F>
F trace(const MorphElement<F>& f);

// trace(g o f) for f: P_i -> P_j and g: P_j -> P_i.
template <Field F>
F pairing(const MorphElement<F>& f, const MorphElement<F>& g);

// Basis of Hom(P_j, P_i) dual to hom_basis(i, j) under the trace pairing.
// Throws InvariantBreach when the pairing is degenerate.
template <Field F>
std::vector<MorphElement<F>> dual_basis(const DynkinDiagram& d, Vertex i, Vertex j);

template <Field F>
bool pairing_is_perfect(const DynkinDiagram& d, Vertex i, Vertex j);

namespace debug {
// Makes arrow-then-arrow compositions return zero instead of the loop.
void set_corrupt_composition(bool on);
bool corrupt_composition();
}  // namespace debug

}  // namespace twistlab
