#include "twistlab/twists.hpp"

#include <algorithm>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

template <Field F>
ChainMap<F> evaluation_map(Vertex i, const ProjComplex<F>& x) {
  const auto h = hom_complex(i, x);
  std::map<int, std::vector<Vertex>> terms;
  for (const auto& [d, b] : h.basis) terms[d] = std::vector<Vertex>(b.size(), i);
  std::map<int, MorphMatrix<F>> diffs;
  for (const auto& [d, b] : h.basis) {
    auto m = h.matrix(d);
    MorphMatrix<F> dm(std::vector<Vertex>(m.rows(), i), terms[d]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).is_zero()) dm.at(r, c) = MorphElement<F>::identity(i, m(r, c));
      }
    }
    diffs.emplace(d, std::move(dm));
  }
  ProjComplex<F> s(x.diagram(), terms, std::move(diffs));
  ChainMap<F> ev{s, x, {}};
  for (const auto& [d, b] : h.basis) {
    const auto& xs = x.summands(d);
    MorphMatrix<F> m(xs, terms[d]);
    for (std::size_t c = 0; c < b.size(); ++c) {
      m.at(b[c].summand, c) = MorphElement<F>::basis({i, xs[b[c].summand], b[c].kind});
    }
    ev.components.emplace(d, std::move(m));
  }
  return ev;
}

template <Field F>
ChainMap<F> coevaluation_map(Vertex i, const ProjComplex<F>& x) {
  const auto& dg = x.diagram();
  dg.color(i);
  if (x.is_zero()) return ChainMap<F>{x, x, {}};
  struct Dual {
    std::size_t summand;
    MorphBasisElement b;     // element of Hom(P_i, P_v)
    MorphElement<F> f;       // its dual in Hom(P_v, P_i)
  };
  std::map<int, std::vector<Dual>> duals;
  std::map<int, std::vector<Vertex>> terms;
  for (int d = x.lowest(); d <= x.highest(); ++d) {
    const auto& xs = x.summands(d);
    std::vector<Dual> ds;
    for (std::size_t r = 0; r < xs.size(); ++r) {
      auto basis = hom_basis(dg, i, xs[r]);
      auto dual = dual_basis<F>(dg, i, xs[r]);
      for (std::size_t k = 0; k < basis.size(); ++k) ds.push_back({r, basis[k], dual[k]});
    }
    if (!ds.empty()) {
      terms[d] = std::vector<Vertex>(ds.size(), i);
      duals.emplace(d, std::move(ds));
    }
  }
  std::map<int, MorphMatrix<F>> diffs;
  for (const auto& [d, src] : duals) {
    auto it = duals.find(d + 1);
    if (it == duals.end()) continue;
    const auto& tgt = it->second;
    const auto& dx = x.differential(d);
    MorphMatrix<F> m(terms[d + 1], terms[d]);
    for (std::size_t g = 0; g < tgt.size(); ++g) {
      for (std::size_t f = 0; f < src.size(); ++f) {
        const auto& e = dx.at(tgt[g].summand, src[f].summand);
        if (e.is_zero()) continue;
        const auto h = compose(tgt[g].f, e);
        const F coef = trace(compose(h, MorphElement<F>::basis(src[f].b)));
        if (!coef.is_zero()) m.at(g, f) = MorphElement<F>::identity(i, coef);
      }
    }
    diffs.emplace(d, std::move(m));
  }
  ProjComplex<F> q(dg, terms, std::move(diffs));
  ChainMap<F> coev{x, q, {}};
  for (const auto& [d, ds] : duals) {
    MorphMatrix<F> m(terms[d], x.summands(d));
    for (std::size_t k = 0; k < ds.size(); ++k) m.at(k, ds[k].summand) = ds[k].f;
    coev.components.emplace(d, std::move(m));
  }
  return coev;
}

template <Field F>
ProjComplex<F> twist(Vertex i, const ProjComplex<F>& x) {
  return minimize(cone(evaluation_map(i, x)));
}

template <Field F>
ProjComplex<F> twist_inv(Vertex i, const ProjComplex<F>& x) {
  return minimize(shift(cone(coevaluation_map(i, x)), -1));
}

template <Field F>
ProjComplex<F> twist_word(const BraidWord& w, const ProjComplex<F>& x) {
  if (!(w.diagram == x.diagram())) throw ValidationError("word and complex over different diagrams");
  ProjComplex<F> y = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = twist(*it, y);
  return y;
}

namespace {

void check_commuting(const DynkinDiagram& d, const std::vector<Vertex>& delta) {
  for (Vertex a : delta) {
    for (Vertex b : delta) {
      if (a == b ? false : d.adjacent(a, b)) throw PreconditionError("twist set contains adjacent vertices");
    }
  }
}

}  // namespace

template <Field F>
ProjComplex<F> twist_set(const std::vector<Vertex>& delta, const ProjComplex<F>& x) {
  check_commuting(x.diagram(), delta);
  ProjComplex<F> y = x;
  for (Vertex k : delta) y = twist(k, y);
  return y;
}

template <Field F>
ProjComplex<F> twist_inv_set(const std::vector<Vertex>& delta, const ProjComplex<F>& x) {
  check_commuting(x.diagram(), delta);
  ProjComplex<F> y = x;
  for (Vertex k : delta) y = twist_inv(k, y);
  return y;
}

// ---- two-term objects ----

namespace {

Multiplicities count(const std::vector<Vertex>& vs) {
  Multiplicities m;
  for (Vertex v : vs) ++m[v];
  return m;
}

int neighbour_sum(const DynkinDiagram& d, Vertex l, const Multiplicities& m) {
  int s = 0;
  for (Vertex k : d.neighbors(l)) {
    auto it = m.find(k);
    if (it != m.end()) s += it->second;
  }
  return s;
}

int get(const Multiplicities& m, Vertex v) {
  auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

template <Field F>
std::size_t scalar_rank(const TwoTermObject<F>& t, Vertex l, bool rows_are_l) {
  std::vector<std::size_t> idx;
  const auto& own = rows_are_l ? t.right_summands : t.left_summands;
  for (std::size_t k = 0; k < own.size(); ++k) {
    if (own[k] == l) idx.push_back(k);
  }
  const std::size_t other = rows_are_l ? t.left_summands.size() : t.right_summands.size();
  Matrix<F> m(idx.size(), other);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < other; ++b) {
      m(a, b) = rows_are_l ? t.phi.at(idx[a], b).lead() : t.phi.at(b, idx[a]).lead();
    }
  }
  return rank(m);
}

}  // namespace

template <Field F>
Multiplicities TwoTermObject<F>::left() const {
  return count(left_summands);
}

template <Field F>
Multiplicities TwoTermObject<F>::right() const {
  return count(right_summands);
}

template <Field F>
TwoTermObject<F> make_two_term(const DynkinDiagram& d, int side, std::vector<Vertex> left,
                               std::vector<Vertex> right, MorphMatrix<F> phi) {
  if (side != 0 && side != 1) throw ValidationError("two-term side must be 0 or 1");
  for (Vertex v : left) {
    if (d.color(v) != side) throw ValidationError("left summand P" + std::to_string(v) + " has the wrong color");
  }
  for (Vertex v : right) {
    if (d.color(v) == side) throw ValidationError("right summand P" + std::to_string(v) + " has the wrong color");
  }
  if (phi.row_vertices() != right || phi.col_vertices() != left) {
    throw ValidationError("connecting map does not match the summands");
  }
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      const auto& e = phi.at(r, c);
      if (e.src() != left[c] || e.tgt() != right[r] || (!e.is_zero() && !d.adjacent(left[c], right[r]))) {
        throw ValidationError("connecting map has a mistyped entry");
      }
    }
  }
  return TwoTermObject<F>{d, side, std::move(left), std::move(right), std::move(phi)};
}

template <Field F>
std::optional<TwoTermObject<F>> two_term_of(const ProjComplex<F>& x) {
  if (x.is_zero() || x.lowest() < -1 || x.highest() > 0) return std::nullopt;
  const auto& d = x.diagram();
  const auto& left = x.summands(-1);
  const auto& right = x.summands(0);
  std::optional<int> lc, rc;
  for (Vertex v : left) {
    if (lc && *lc != d.color(v)) return std::nullopt;
    lc = d.color(v);
  }
  for (Vertex v : right) {
    if (rc && *rc != d.color(v)) return std::nullopt;
    rc = d.color(v);
  }
  if (lc && rc && *lc == *rc) return std::nullopt;
  const int side = lc ? *lc : 1 - *rc;
  return make_two_term<F>(d, side, left, right, x.differential(-1));
}

template <Field F>
ProjComplex<F> assemble(const TwoTermObject<F>& t) {
  return ProjComplex<F>(t.diagram, {{-1, t.left_summands}, {0, t.right_summands}}, {{-1, t.phi}});
}

template <Field F>
bool is_right_proper(const TwoTermObject<F>& t) {
  const auto c = assemble(t);
  const auto left = t.left();
  for (Vertex l : t.diagram.vertices_of_color(t.side + 1)) {
    int total = 0;
    for (const auto& [k, n] : hom_dims(l, c)) total += n;
    if (total != neighbour_sum(t.diagram, l, left)) return false;
  }
  return true;
}

template <Field F>
bool is_left_proper(const TwoTermObject<F>& t) {
  const auto c = assemble(t);
  const auto right = t.right();
  for (Vertex l : t.diagram.vertices_of_color(t.side)) {
    int total = 0;
    for (const auto& [k, n] : hom_dims(l, c)) total += n;
    if (total != neighbour_sum(t.diagram, l, right)) return false;
  }
  return true;
}

template <Field F>
bool right_proper_direct(const TwoTermObject<F>& t) {
  for (const auto& [l, n] : t.right()) {
    if (scalar_rank(t, l, true) != static_cast<std::size_t>(n)) return false;
  }
  return true;
}

template <Field F>
bool left_proper_direct(const TwoTermObject<F>& t) {
  for (const auto& [l, n] : t.left()) {
    if (scalar_rank(t, l, false) != static_cast<std::size_t>(n)) return false;
  }
  return true;
}

template <Field F>
TwoTermShape shape_of(const TwoTermObject<F>& t) {
  return {t.side, t.left(), t.right()};
}

template <Field F>
TwoTermShape two_term_reflect(const TwoTermObject<F>& t, const std::vector<Vertex>& delta,
                              Reflection part) {
  const auto& d = t.diagram;
  const int delta_color = part == Reflection::plus ? (t.side + 1) % 2 : t.side;
  for (Vertex k : delta) {
    if (d.color(k) != delta_color) throw PreconditionError("reflection set has the wrong color");
  }
  auto in_delta = [&](Vertex v) { return std::find(delta.begin(), delta.end(), v) != delta.end(); };
  const auto left = t.left();
  const auto right = t.right();
  TwoTermShape out;
  out.side = (t.side + 1) % 2;
  if (part == Reflection::plus) {
    if (!is_right_proper(t)) throw PreconditionError("object is not right-proper");
    for (const auto& [k, n] : right) {
      if (!in_delta(k)) throw PreconditionError("right support is not contained in the reflection set");
    }
    for (Vertex k : delta) {
      const int x = neighbour_sum(d, k, left) - get(right, k);
      if (x < 0) throw InvariantBreach("negative predicted multiplicity");
      if (x > 0) out.left[k] = x;
    }
    out.right = left;
  } else {
    if (!is_left_proper(t)) throw PreconditionError("object is not left-proper");
    for (const auto& [k, n] : left) {
      if (!in_delta(k)) throw PreconditionError("left support is not contained in the reflection set");
    }
    for (Vertex j : delta) {
      const int x = neighbour_sum(d, j, right) - get(left, j);
      if (x < 0) throw InvariantBreach("negative predicted multiplicity");
      if (x > 0) out.right[j] = x;
    }
    out.left = right;
  }
  return out;
}

template <Field F>
TwoTermShape two_term_reflect(const TwoTermObject<F>& t, const std::vector<Vertex>& delta) {
  if (delta.empty()) throw PreconditionError("cannot infer the reflection part from an empty set");
  const int c = t.diagram.color(delta.front());
  return two_term_reflect(t, delta, c == t.side ? Reflection::minus : Reflection::plus);
}

template <Field F>
ProjComplex<F> reflect_apply(const ProjComplex<F>& x, const std::vector<Vertex>& delta, Reflection part) {
  if (part == Reflection::plus) return minimize(shift(twist_set(delta, x), -1));
  return minimize(shift(twist_inv_set(delta, x), 1));
}

std::string describe(const TwoTermShape& s) {
  std::ostringstream os;
  os << "side " << s.side << " left {";
  for (const auto& [k, n] : s.left) os << ' ' << k << ':' << n;
  os << " } right {";
  for (const auto& [k, n] : s.right) os << ' ' << k << ':' << n;
  os << " }";
  return os.str();
}

#define TWISTLAB_INSTANTIATE(F)                                                                      \
  template ChainMap<F> evaluation_map(Vertex, const ProjComplex<F>&);                                \
  template ChainMap<F> coevaluation_map(Vertex, const ProjComplex<F>&);                              \
  template ProjComplex<F> twist(Vertex, const ProjComplex<F>&);                                      \
  template ProjComplex<F> twist_inv(Vertex, const ProjComplex<F>&);                                  \
  template ProjComplex<F> twist_word(const BraidWord&, const ProjComplex<F>&);                       \
  template ProjComplex<F> twist_set(const std::vector<Vertex>&, const ProjComplex<F>&);              \
  template ProjComplex<F> twist_inv_set(const std::vector<Vertex>&, const ProjComplex<F>&);          \
  template struct TwoTermObject<F>;                                                                  \
  template TwoTermObject<F> make_two_term(const DynkinDiagram&, int, std::vector<Vertex>,            \
                                          std::vector<Vertex>, MorphMatrix<F>);                      \
  template std::optional<TwoTermObject<F>> two_term_of(const ProjComplex<F>&);                       \
  template ProjComplex<F> assemble(const TwoTermObject<F>&);                                         \
  template bool is_right_proper(const TwoTermObject<F>&);                                            \
  template bool is_left_proper(const TwoTermObject<F>&);                                             \
  template bool right_proper_direct(const TwoTermObject<F>&);                                        \
  template bool left_proper_direct(const TwoTermObject<F>&);                                         \
  template TwoTermShape shape_of(const TwoTermObject<F>&);                                           \
  template TwoTermShape two_term_reflect(const TwoTermObject<F>&, const std::vector<Vertex>&,        \
                                         Reflection);                                                \
  template TwoTermShape two_term_reflect(const TwoTermObject<F>&, const std::vector<Vertex>&);       \
  template ProjComplex<F> reflect_apply(const ProjComplex<F>&, const std::vector<Vertex>&, Reflection);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
