#pragma once

#include <optional>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/complex.hpp"

namespace twistlab {

// Extremal degrees k with Hom^k(Lambda, T) != 0. Throw PreconditionError on a zero object.
template <Field F>
int min_degree(const ProjComplex<F>& t);
template <Field F>
int max_degree(const ProjComplex<F>& t);

// Cocycle P_j -> T[r]: one component per summand of T in degree r.
template <Field F>
struct SummandWitness {
  Vertex j = 0;
  int degree = 0;
  std::vector<MorphElement<F>> components;
};

template <Field F>
struct LongMorphisms {
  int dim = 0;
  std::optional<SummandWitness<F>> witness;
};

// Classes f in Hom^r(P_j, T) with f o gamma_{k,j} = 0 in homology for all neighbours k.
template <Field F>
LongMorphisms<F> long_morphisms(Vertex j, const ProjComplex<F>& t, int r);
template <Field F>
int long_morphism_dim(Vertex j, const ProjComplex<F>& t, int r);
// Cocycle, nonzero class, killed by every neighbour arrow up to coboundaries.
template <Field F>
bool is_valid_witness(const SummandWitness<F>& w, const ProjComplex<F>& t);

struct PeelStep {
  Vertex j;
  int min_degree;
};

template <Field F>
struct Peel {
  PeelStep step;
  ProjComplex<F> rest;
};

template <Field F>
Peel<F> peel(const ProjComplex<F>& t);

struct Recovery {
  BraidWord word;
  std::vector<PeelStep> peels;
};

template <Field F>
Recovery recover_word(const ProjComplex<F>& t);

template <Field F>
bool words_equal_via_category(const BraidWord& w1, const BraidWord& w2);

}  // namespace twistlab
