#include "twistlab/reconstruct.hpp"

#include <cstdlib>

#include "twistlab/errors.hpp"
#include "twistlab/twists.hpp"

namespace twistlab {

namespace {

template <Field F>
std::map<int, int> total_row(const ProjComplex<F>& t) {
  auto totals = profile(t).totals_by_degree();
  if (totals.empty()) throw PreconditionError("zero object has no extremal degree");
  return totals;
}

// First basis index of every summand in degree r.
std::vector<std::size_t> offsets(const std::vector<HomBasisRef>& basis, std::size_t summands) {
  std::vector<std::size_t> off(summands + 1, basis.size());
  for (std::size_t k = basis.size(); k-- > 0;) off[basis[k].summand] = k;
  for (std::size_t s = summands; s-- > 0;) off[s] = std::min(off[s], off[s + 1]);
  return off;
}

template <Field F>
std::vector<HomBasisRef> basis_at(const HomComplex<F>& h, int r) {
  auto it = h.basis.find(r);
  return it == h.basis.end() ? std::vector<HomBasisRef>{} : it->second;
}

}  // namespace

template <Field F>
int min_degree(const ProjComplex<F>& t) {
  return total_row(t).begin()->first;
}

template <Field F>
int max_degree(const ProjComplex<F>& t) {
  return total_row(t).rbegin()->first;
}

template <Field F>
LongMorphisms<F> long_morphisms(Vertex j, const ProjComplex<F>& t, int r) {
  const auto& dg = t.diagram();
  const auto hj = hom_complex(j, t);
  const auto bj = basis_at(hj, r);
  const std::size_t n = bj.size();
  if (n == 0) return {};
  const auto& summ = t.summands(r);
  const auto mr = hj.matrix(r);
  const auto coboundary = hj.matrix(r - 1);

  struct Block {
    Matrix<F> gamma;     // precomposition with gamma_{k,j}: C^r(j) -> C^r(k)
    Matrix<F> boundary;  // C^{r-1}(k) -> C^r(k)
  };
  std::vector<Block> blocks;
  std::size_t extra_rows = 0, extra_cols = 0;
  for (Vertex k : dg.neighbors(j)) {
    const auto hk = hom_complex(k, t);
    const auto bk = basis_at(hk, r);
    const auto offk = offsets(bk, summ.size());
    Matrix<F> g(bk.size(), n);
    const auto arrow = MorphElement<F>::arrow(dg, k, j);
    for (std::size_t c = 0; c < n; ++c) {
      const auto f = MorphElement<F>::basis({j, summ[bj[c].summand], bj[c].kind});
      const auto coords = compose(f, arrow).coordinates(dg);
      for (std::size_t a = 0; a < coords.size(); ++a) g(offk[bj[c].summand] + a, c) = coords[a];
    }
    Matrix<F> b = hk.matrix(r - 1);
    extra_rows += g.rows();
    extra_cols += b.cols();
    blocks.push_back({std::move(g), std::move(b)});
  }

  Matrix<F> sys(mr.rows() + extra_rows, n + extra_cols);
  for (std::size_t a = 0; a < mr.rows(); ++a) {
    for (std::size_t c = 0; c < n; ++c) sys(a, c) = mr(a, c);
  }
  std::size_t row0 = mr.rows(), col0 = n;
  std::size_t kernel_sum = 0;
  for (const auto& blk : blocks) {
    for (std::size_t a = 0; a < blk.gamma.rows(); ++a) {
      for (std::size_t c = 0; c < n; ++c) sys(row0 + a, c) = blk.gamma(a, c);
      for (std::size_t c = 0; c < blk.boundary.cols(); ++c) sys(row0 + a, col0 + c) = -blk.boundary(a, c);
    }
    kernel_sum += blk.boundary.cols() - rank(blk.boundary);
    row0 += blk.gamma.rows();
    col0 += blk.boundary.cols();
  }
  const auto null = nullspace(sys);
  // Project onto z; the kernels of the boundary maps contribute only to the y part.
  std::vector<std::vector<F>> zs;
  for (const auto& v : null) zs.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
  const auto zmat = from_columns(zs, n);
  const std::size_t dim_l = rank(zmat);
  if (dim_l + kernel_sum != null.size()) throw InvariantBreach("long morphism system has an inconsistent kernel");
  const std::size_t dim_b = rank(coboundary);
  if (dim_b > dim_l) throw InvariantBreach("coboundaries are not long");
  LongMorphisms<F> out;
  out.dim = static_cast<int>(dim_l - dim_b);
  if (out.dim == 0) return out;
  for (const auto& z : zs) {
    Matrix<F> aug(n, coboundary.cols() + 1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < coboundary.cols(); ++c) aug(a, c) = coboundary(a, c);
      aug(a, coboundary.cols()) = z[a];
    }
    if (rank(aug) == dim_b) continue;
    SummandWitness<F> w{j, r, {}};
    for (std::size_t s = 0; s < summ.size(); ++s) w.components.push_back(MorphElement<F>::zero(j, summ[s]));
    for (std::size_t c = 0; c < n; ++c) {
      w.components[bj[c].summand] += MorphElement<F>::basis({j, summ[bj[c].summand], bj[c].kind}, z[c]);
    }
    out.witness = std::move(w);
    break;
  }
  if (!out.witness) throw InvariantBreach("no witness found for a nonzero long morphism space");
  return out;
}

template <Field F>
int long_morphism_dim(Vertex j, const ProjComplex<F>& t, int r) {
  return long_morphisms(j, t, r).dim;
}

template <Field F>
bool is_valid_witness(const SummandWitness<F>& w, const ProjComplex<F>& t) {
  // Realise the witness as a chain map P_j[-r] -> T and test the three conditions
  // through the Hom complexes of the source and of each neighbour.
  const auto& dg = t.diagram();
  const auto& summ = t.summands(w.degree);
  if (w.components.size() != summ.size()) return false;
  const auto h = hom_complex(w.j, t);
  const auto basis = basis_at(h, w.degree);
  std::vector<F> z(basis.size(), F::zero());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto& comp = w.components[basis[c].summand];
    if (comp.src() != w.j || comp.tgt() != summ[basis[c].summand]) return false;
    z[c] = comp.coefficient(basis[c].kind);
  }
  const auto zcol = from_columns(std::vector<std::vector<F>>{z}, z.size());
  if (!(h.matrix(w.degree) * zcol).is_zero()) return false;
  auto in_span = [](const Matrix<F>& b, const Matrix<F>& v) {
    Matrix<F> aug(b.rows(), b.cols() + 1);
    for (std::size_t a = 0; a < b.rows(); ++a) {
      for (std::size_t c = 0; c < b.cols(); ++c) aug(a, c) = b(a, c);
      aug(a, b.cols()) = v(a, 0);
    }
    return rank(aug) == rank(b);
  };
  if (in_span(h.matrix(w.degree - 1), zcol)) return false;
  for (Vertex k : dg.neighbors(w.j)) {
    const auto hk = hom_complex(k, t);
    const auto bk = basis_at(hk, w.degree);
    Matrix<F> v(bk.size(), 1);
    const auto arrow = MorphElement<F>::arrow(dg, k, w.j);
    for (std::size_t c = 0; c < bk.size(); ++c) {
      v(c, 0) = compose(w.components[bk[c].summand], arrow).coefficient(bk[c].kind);
    }
    if (!in_span(hk.matrix(w.degree - 1), v)) return false;
  }
  return true;
}

template <Field F>
Peel<F> peel(const ProjComplex<F>& t) {
  int m;
  try {
    m = min_degree(t);
  } catch (const PreconditionError&) {
    throw NotATwistImage("zero object");
  }
  if (m >= 0) throw NotATwistImage("minimal degree " + std::to_string(m) + " is not negative");
  for (Vertex j : t.diagram().vertices()) {
    if (long_morphism_dim(j, t, m) > 0) return {{j, m}, twist_inv(j, t)};
  }
  throw NotATwistImage("no projective splits off in the minimal degree " + std::to_string(m));
}

template <Field F>
Recovery recover_word(const ProjComplex<F>& t) {
  const auto& d = t.diagram();
  const auto base = sum_of_projectives<F>(d);
  const std::string base_key = canonical_key(base);
  ProjComplex<F> cur = minimize(t);
  int cap = 0;
  for (const auto& [key, dim] : profile(cur).dims) cap += dim * (1 + std::abs(key.second));
  Recovery out{BraidWord(d, {}), {}};
  while (canonical_key(cur) != base_key) {
    if (static_cast<int>(out.peels.size()) >= cap) throw NotATwistImage("peeling did not terminate");
    auto p = peel(cur);
    out.peels.push_back(p.step);
    out.word.letters.push_back(p.step.j);
    cur = std::move(p.rest);
  }
  return out;
}

template <Field F>
bool words_equal_via_category(const BraidWord& w1, const BraidWord& w2) {
  if (!(w1.diagram == w2.diagram)) throw ValidationError("words over different diagrams");
  const auto base = sum_of_projectives<F>(w1.diagram);
  return profiles_equal(twist_word(w1, base), twist_word(w2, base));
}

#define TWISTLAB_INSTANTIATE(F)                                                         \
  template int min_degree(const ProjComplex<F>&);                                       \
  template int max_degree(const ProjComplex<F>&);                                       \
  template struct SummandWitness<F>;                                                    \
  template LongMorphisms<F> long_morphisms(Vertex, const ProjComplex<F>&, int);         \
  template int long_morphism_dim(Vertex, const ProjComplex<F>&, int);                   \
  template bool is_valid_witness(const SummandWitness<F>&, const ProjComplex<F>&);      \
  template Peel<F> peel(const ProjComplex<F>&);                                         \
  template Recovery recover_word(const ProjComplex<F>&);                                \
  template bool words_equal_via_category<F>(const BraidWord&, const BraidWord&);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
