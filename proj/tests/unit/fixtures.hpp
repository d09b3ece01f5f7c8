#pragma once

#include "twistlab/complex.hpp"
#include "twistlab/twists.hpp"

namespace fixture {

using namespace twistlab;

template <Field F>
ChainMap<F> stalk_map(const DynkinDiagram& d, const MorphElement<F>& f) {
  MorphMatrix<F> m({f.tgt()}, {f.src()});
  m.set(0, 0, f);
  return ChainMap<F>{projective<F>(d, f.src()), projective<F>(d, f.tgt()), {{0, m}}};
}

template <Field F>
ProjComplex<F> image(const BraidWord& w) {
  return twist_word(w, sum_of_projectives<F>(w.diagram));
}

template <Field F>
ProjComplex<F> image(const DynkinDiagram& d, std::vector<Vertex> letters) {
  return image<F>(BraidWord(d, std::move(letters)));
}

template <Field F>
bool iso(const ProjComplex<F>& a, const ProjComplex<F>& b) {
  return canonical_key(minimize(a)) == canonical_key(minimize(b));
}

}  // namespace fixture
