#include "twistlab/zigzag.hpp"

#include <atomic>

#include "twistlab/errors.hpp"
#include "twistlab/linalg.hpp"

namespace twistlab {

namespace {
std::atomic<bool> g_corrupt{false};
}

namespace debug {
void set_corrupt_composition(bool on) { g_corrupt.store(on); }
bool corrupt_composition() { return g_corrupt.load(std::memory_order_relaxed); }
}  // namespace debug

std::string_view kind_name(MorphKind k) {
  switch (k) {
    case MorphKind::identity: return "id";
    case MorphKind::loop: return "loop";
    case MorphKind::arrow: return "arrow";
  }
  return "?";
}

MorphKind parse_kind(std::string_view text) {
  if (text == "id" || text == "identity") return MorphKind::identity;
  if (text == "loop") return MorphKind::loop;
  if (text == "arrow") return MorphKind::arrow;
  throw ValidationError("unknown morphism kind '" + std::string(text) + "'");
}

std::vector<MorphBasisElement> hom_basis(const DynkinDiagram& d, Vertex i, Vertex j) {
  if (i == j) {
    d.color(i);
    return {{i, i, MorphKind::identity}, {i, i, MorphKind::loop}};
  }
  if (d.adjacent(i, j)) return {{i, j, MorphKind::arrow}};
  return {};
}

int hom_dim(const DynkinDiagram& d, Vertex i, Vertex j) {
  return static_cast<int>(hom_basis(d, i, j).size());
}

template <Field F>
MorphElement<F> MorphElement<F>::arrow(const DynkinDiagram& d, Vertex i, Vertex j, F c) {
  if (!d.adjacent(i, j)) {
    throw ValidationError("no arrow between " + std::to_string(i) + " and " + std::to_string(j));
  }
  return MorphElement(i, j, std::move(c), F::zero());
}

template <Field F>
MorphElement<F> MorphElement<F>::basis(const MorphBasisElement& b, F c) {
  switch (b.kind) {
    case MorphKind::identity: return identity(b.src, std::move(c));
    case MorphKind::loop: return loop(b.src, std::move(c));
    case MorphKind::arrow: return MorphElement(b.src, b.tgt, std::move(c), F::zero());
  }
  throw InvariantBreach("bad basis kind");
}

template <Field F>
F MorphElement<F>::coefficient(MorphKind k) const {
  switch (k) {
    case MorphKind::identity: return is_endo() ? lead_ : F::zero();
    case MorphKind::loop: return loop_;
    case MorphKind::arrow: return is_endo() ? F::zero() : lead_;
  }
  return F::zero();
}

template <Field F>
std::vector<F> MorphElement<F>::coordinates(const DynkinDiagram& d) const {
  if (is_endo()) return {lead_, loop_};
  if (d.adjacent(src_, tgt_)) return {lead_};
  if (!is_zero()) throw InvariantBreach("nonzero element of a zero Hom space");
  return {};
}

template <Field F>
MorphElement<F>& MorphElement<F>::operator+=(const MorphElement& o) {
  if (src_ != o.src_ || tgt_ != o.tgt_) throw InvariantBreach("adding morphisms of different type");
  lead_ += o.lead_;
  loop_ += o.loop_;
  return *this;
}

template <Field F>
MorphElement<F>& MorphElement<F>::operator-=(const MorphElement& o) {
  if (src_ != o.src_ || tgt_ != o.tgt_) throw InvariantBreach("subtracting morphisms of different type");
  lead_ -= o.lead_;
  loop_ -= o.loop_;
  return *this;
}

template <Field F>
MorphElement<F> compose(const MorphElement<F>& g, const MorphElement<F>& f) {
  if (g.src() != f.tgt()) {
    throw InvariantBreach("composing " + std::to_string(g.src()) + "->" + std::to_string(g.tgt()) +
                          " after " + std::to_string(f.src()) + "->" + std::to_string(f.tgt()));
  }
  const Vertex i = f.src(), l = g.tgt();
  if (f.is_endo() && g.is_endo()) {
    // (a id + b loop)(c id + d loop) = ac id + (ad + bc) loop
    return MorphElement<F>::identity(i, g.lead() * f.lead()) +
           MorphElement<F>::loop(i, g.lead() * f.loop_coef() + g.loop_coef() * f.lead());
  }
  if (f.is_endo()) return f.lead() * g;
  if (g.is_endo()) return g.lead() * f;
  if (i == l && !debug::corrupt_composition()) return MorphElement<F>::loop(i, g.lead() * f.lead());
  return MorphElement<F>::zero(i, l);
}

template <Field F>
MorphElement<F> unit_inverse(const MorphElement<F>& e) {
  if (!e.is_unit()) throw InvariantBreach("inverting a non-unit morphism");
  const F ai = e.lead().inverse();
  return MorphElement<F>::identity(e.src(), ai) + MorphElement<F>::loop(e.src(), -(ai * ai * e.loop_coef()));
}

template <Field F>
F trace(const MorphElement<F>& f) {
  if (!f.is_endo()) throw ValidationError("trace of a non-endomorphism");
  return f.loop_coef();
}

template <Field F>
F pairing(const MorphElement<F>& f, const MorphElement<F>& g) {
  return trace(compose(g, f));
}

namespace {

template <Field F>
Matrix<F> pairing_matrix(const DynkinDiagram& d, Vertex i, Vertex j) {
  auto fwd = hom_basis(d, i, j);
  auto back = hom_basis(d, j, i);
  Matrix<F> g(fwd.size(), back.size());
  for (std::size_t b = 0; b < fwd.size(); ++b) {
    for (std::size_t c = 0; c < back.size(); ++c) {
      g(b, c) = pairing(MorphElement<F>::basis(fwd[b]), MorphElement<F>::basis(back[c]));
    }
  }
  return g;
}

}  // namespace

template <Field F>
bool pairing_is_perfect(const DynkinDiagram& d, Vertex i, Vertex j) {
  auto g = pairing_matrix<F>(d, i, j);
  return g.rows() == g.cols() && inverse(g).has_value();
}

template <Field F>
std::vector<MorphElement<F>> dual_basis(const DynkinDiagram& d, Vertex i, Vertex j) {
  auto g = pairing_matrix<F>(d, i, j);
  auto inv = g.rows() == g.cols() ? inverse(g.transposed()) : std::nullopt;
  if (!inv) {
    throw InvariantBreach("trace pairing on Hom(P" + std::to_string(i) + ", P" + std::to_string(j) +
                          ") is degenerate");
  }
  auto back = hom_basis(d, j, i);
  std::vector<MorphElement<F>> out;
  for (std::size_t b = 0; b < g.rows(); ++b) {
    auto f = MorphElement<F>::zero(j, i);
    for (std::size_t c = 0; c < back.size(); ++c) f += MorphElement<F>::basis(back[c], (*inv)(b, c));
    out.push_back(std::move(f));
  }
  return out;
}

#define TWISTLAB_INSTANTIATE(F)                                                              \
  template class MorphElement<F>;                                                            \
  template MorphElement<F> compose(const MorphElement<F>&, const MorphElement<F>&);          \
  template MorphElement<F> unit_inverse(const MorphElement<F>&);                             \
  template F trace(const MorphElement<F>&);                                                  \
  template F pairing(const MorphElement<F>&, const MorphElement<F>&);                        \
  template std::vector<MorphElement<F>> dual_basis(const DynkinDiagram&, Vertex, Vertex);    \
  template bool pairing_is_perfect<F>(const DynkinDiagram&, Vertex, Vertex);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
