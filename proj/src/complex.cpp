#include "twistlab/complex.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

// ---- MorphMatrix ----

template <Field F>
MorphMatrix<F>::MorphMatrix(std::vector<Vertex> row_vertices, std::vector<Vertex> col_vertices)
    : row_v_(std::move(row_vertices)), col_v_(std::move(col_vertices)) {
  entries_.reserve(rows() * cols());
  for (Vertex r : row_v_) {
    for (Vertex c : col_v_) entries_.push_back(MorphElement<F>::zero(c, r));
  }
}

template <Field F>
void MorphMatrix<F>::set(std::size_t r, std::size_t c, MorphElement<F> f) {
  if (r >= rows() || c >= cols()) throw InvariantBreach("matrix index out of range");
  if (f.src() != col_v_[c] || f.tgt() != row_v_[r]) {
    throw ValidationError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") should map P" +
                          std::to_string(col_v_[c]) + " to P" + std::to_string(row_v_[r]));
  }
  at(r, c) = std::move(f);
}

template <Field F>
bool MorphMatrix<F>::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

template <Field F>
MorphMatrix<F> operator*(const MorphMatrix<F>& g, const MorphMatrix<F>& f) {
  if (g.col_vertices() != f.row_vertices()) throw InvariantBreach("morphism matrix shape mismatch");
  MorphMatrix<F> out(g.row_vertices(), f.col_vertices());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const auto& gk = g.at(r, k);
      if (gk.is_zero()) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) {
        const auto& fk = f.at(k, c);
        if (!fk.is_zero()) out.at(r, c) += compose(gk, fk);
      }
    }
  }
  return out;
}

// ---- ProjComplex ----

template <Field F>
ProjComplex<F>::ProjComplex(DynkinDiagram d) : diagram_(std::move(d)) {}

template <Field F>
ProjComplex<F>::ProjComplex(DynkinDiagram d, const std::map<int, std::vector<Vertex>>& terms,
                            std::map<int, MorphMatrix<F>> diffs)
    : diagram_(std::move(d)) {
  std::optional<int> lo, hi;
  for (const auto& [deg, vs] : terms) {
    for (Vertex v : vs) {
      if (!diagram_.has_vertex(v)) {
        throw ValidationError("P" + std::to_string(v) + " is not a projective over " + diagram_.name());
      }
    }
    if (vs.empty()) continue;
    if (!lo) lo = deg;
    hi = deg;
  }
  if (!lo) {
    for (const auto& [deg, m] : diffs) {
      if (m.rows() && m.cols()) throw ValidationError("differential on an empty complex");
    }
    return;
  }
  lo_ = *lo;
  for (int deg = *lo; deg <= *hi; ++deg) {
    auto it = terms.find(deg);
    terms_.push_back(it == terms.end() ? std::vector<Vertex>{} : it->second);
  }
  for (int deg = *lo - 1; deg <= *hi; ++deg) {
    const auto& src = summands(deg);
    const auto& tgt = summands(deg + 1);
    auto it = diffs.find(deg);
    if (it == diffs.end()) {
      diffs_.emplace_back(tgt, src);
      continue;
    }
    MorphMatrix<F>& m = it->second;
    if (m.col_vertices() != src || m.row_vertices() != tgt) {
      throw ValidationError("differential in degree " + std::to_string(deg) +
                            " does not match the summands");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& e = m.at(r, c);
        if (e.src() != src[c] || e.tgt() != tgt[r]) {
          throw ValidationError("mistyped entry in differential of degree " + std::to_string(deg));
        }
        if (!e.is_endo() && !diagram_.adjacent(e.src(), e.tgt()) && !e.is_zero()) {
          throw ValidationError("nonzero map between non-adjacent projectives in degree " +
                                std::to_string(deg));
        }
      }
    }
    diffs_.push_back(std::move(m));
    diffs.erase(it);
  }
  for (const auto& [deg, m] : diffs) {
    if (m.rows() && m.cols()) {
      throw ValidationError("differential in degree " + std::to_string(deg) + " outside the support");
    }
  }
}

template <Field F>
int ProjComplex<F>::lowest() const {
  if (is_zero()) throw PreconditionError("zero complex has no degrees");
  return lo_;
}

template <Field F>
int ProjComplex<F>::highest() const {
  if (is_zero()) throw PreconditionError("zero complex has no degrees");
  return lo_ + static_cast<int>(terms_.size()) - 1;
}

template <Field F>
const std::vector<Vertex>& ProjComplex<F>::summands(int degree) const {
  static const std::vector<Vertex> empty;
  const long k = static_cast<long>(degree) - lo_;
  if (k < 0 || k >= static_cast<long>(terms_.size())) return empty;
  return terms_[k];
}

template <Field F>
const MorphMatrix<F>& ProjComplex<F>::differential(int degree) const {
  static const MorphMatrix<F> empty;
  const long k = static_cast<long>(degree) - lo_ + 1;
  if (k < 0 || k >= static_cast<long>(diffs_.size())) return empty;
  return diffs_[k];
}

template <Field F>
std::size_t ProjComplex<F>::total_summands() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n += t.size();
  return n;
}

template <Field F>
bool ProjComplex<F>::is_complex() const {
  if (is_zero()) return true;
  for (int d = lowest(); d < highest(); ++d) {
    if (!(differential(d + 1) * differential(d)).is_zero()) return false;
  }
  return true;
}

// ---- ChainMap ----

template <Field F>
MorphMatrix<F> ChainMap<F>::component(int degree) const {
  auto it = components.find(degree);
  if (it != components.end()) return it->second;
  return MorphMatrix<F>(target.summands(degree), source.summands(degree));
}

namespace {

template <Field F>
std::optional<std::pair<int, int>> joint_range(const ProjComplex<F>& a, int shift_a,
                                               const ProjComplex<F>& b) {
  std::optional<std::pair<int, int>> r;
  auto merge = [&](int lo, int hi) {
    if (!r) r = {lo, hi};
    else r = {std::min(r->first, lo), std::max(r->second, hi)};
  };
  if (!a.is_zero()) merge(a.lowest() - shift_a, a.highest() - shift_a);
  if (!b.is_zero()) merge(b.lowest(), b.highest());
  return r;
}

template <Field F>
std::vector<Vertex> concat(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

template <Field F>
void put_block(MorphMatrix<F>& dst, std::size_t r0, std::size_t c0, const MorphMatrix<F>& src,
               bool negate = false) {
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) {
      dst.at(r0 + r, c0 + c) = negate ? -src.at(r, c) : src.at(r, c);
    }
  }
}

template <Field F>
MorphMatrix<F> identity_block(const std::vector<Vertex>& rows, const std::vector<Vertex>& cols,
                              std::size_t r0, std::size_t c0, std::size_t n) {
  MorphMatrix<F> m(rows, cols);
  for (std::size_t k = 0; k < n; ++k) m.at(r0 + k, c0 + k) = MorphElement<F>::identity(rows[r0 + k]);
  return m;
}

}  // namespace

template <Field F>
bool ChainMap<F>::is_chain_map() const {
  if (!(source.diagram() == target.diagram())) return false;
  for (const auto& [deg, m] : components) {
    if (m.row_vertices() != target.summands(deg) || m.col_vertices() != source.summands(deg)) return false;
  }
  auto range = joint_range(source, 0, target);
  if (!range) return true;
  for (int d = range->first - 1; d <= range->second; ++d) {
    auto lhs = component(d + 1) * source.differential(d);
    auto rhs = target.differential(d) * component(d);
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
    if (!(lhs.rows() == 0 || lhs.cols() == 0)) {
      for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
          if (!(lhs.at(r, c) == rhs.at(r, c))) return false;
        }
      }
    }
  }
  return true;
}

// ---- constructors ----

template <Field F>
ProjComplex<F> projective(const DynkinDiagram& d, Vertex i) {
  return stalk<F>(d, {i}, 0);
}

template <Field F>
ProjComplex<F> sum_of_projectives(const DynkinDiagram& d) {
  return stalk<F>(d, d.vertices(), 0);
}

template <Field F>
ProjComplex<F> stalk(const DynkinDiagram& d, std::vector<Vertex> summands, int degree) {
  return ProjComplex<F>(d, {{degree, std::move(summands)}});
}

template <Field F>
ProjComplex<F> shift(const ProjComplex<F>& x, int n) {
  if (x.is_zero()) return x;
  std::map<int, std::vector<Vertex>> terms;
  std::map<int, MorphMatrix<F>> diffs;
  const bool odd = (n % 2) != 0;
  for (int d = x.lowest(); d <= x.highest(); ++d) {
    terms[d - n] = x.summands(d);
    MorphMatrix<F> m = x.differential(d);
    if (odd) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
      }
    }
    diffs.emplace(d - n, std::move(m));
  }
  return ProjComplex<F>(x.diagram(), terms, std::move(diffs));
}

template <Field F>
ConeResult<F> cone_with_maps(const ChainMap<F>& f) {
  const auto& x = f.source;
  const auto& y = f.target;
  if (!(x.diagram() == y.diagram())) throw ValidationError("cone of a map between different diagrams");
  auto range = joint_range(x, 1, y);
  if (!range) {
    ProjComplex<F> zero(x.diagram());
    return {zero, ChainMap<F>{y, zero, {}}, ChainMap<F>{zero, shift(x, 1), {}}};
  }
  std::map<int, std::vector<Vertex>> terms;
  std::map<int, MorphMatrix<F>> diffs;
  for (int d = range->first; d <= range->second; ++d) {
    terms[d] = concat<F>(x.summands(d + 1), y.summands(d));
  }
  for (int d = range->first; d <= range->second; ++d) {
    const auto& src_x = x.summands(d + 1);
    const auto& tgt_x = x.summands(d + 2);
    MorphMatrix<F> m(concat<F>(tgt_x, y.summands(d + 1)), concat<F>(src_x, y.summands(d)));
    put_block(m, 0, 0, x.differential(d + 1), true);
    put_block(m, tgt_x.size(), 0, f.component(d + 1));
    put_block(m, tgt_x.size(), src_x.size(), y.differential(d));
    diffs.emplace(d, std::move(m));
  }
  ProjComplex<F> c(x.diagram(), terms, std::move(diffs));
  ProjComplex<F> x1 = shift(x, 1);
  ChainMap<F> inc{y, c, {}};
  ChainMap<F> proj{c, x1, {}};
  for (int d = range->first; d <= range->second; ++d) {
    const auto& cd = c.summands(d);
    const std::size_t nx = x.summands(d + 1).size();
    const std::size_t ny = y.summands(d).size();
    if (ny) inc.components.emplace(d, identity_block<F>(cd, y.summands(d), nx, 0, ny));
    if (nx) proj.components.emplace(d, identity_block<F>(x1.summands(d), cd, 0, 0, nx));
  }
  return {std::move(c), std::move(inc), std::move(proj)};
}

template <Field F>
ProjComplex<F> cone(const ChainMap<F>& f) {
  return cone_with_maps(f).cone;
}

template <Field F>
ProjComplex<F> direct_sum(const ProjComplex<F>& x, const ProjComplex<F>& y) {
  if (!(x.diagram() == y.diagram())) throw ValidationError("direct sum over different diagrams");
  auto range = joint_range(x, 0, y);
  if (!range) return x;
  std::map<int, std::vector<Vertex>> terms;
  std::map<int, MorphMatrix<F>> diffs;
  for (int d = range->first; d <= range->second; ++d) terms[d] = concat<F>(x.summands(d), y.summands(d));
  for (int d = range->first; d <= range->second; ++d) {
    MorphMatrix<F> m(terms[d + 1], terms[d]);
    put_block(m, 0, 0, x.differential(d));
    put_block(m, x.summands(d + 1).size(), x.summands(d).size(), y.differential(d));
    diffs.emplace(d, std::move(m));
  }
  return ProjComplex<F>(x.diagram(), terms, std::move(diffs));
}

template <Field F>
ProjComplex<F> minimize(const ProjComplex<F>& x) {
  if (x.is_zero()) return x;
  const int lo = x.lowest(), hi = x.highest();
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<Vertex>> terms(len);
  std::vector<std::vector<bool>> alive(len);
  std::vector<MorphMatrix<F>> diffs(len);  // diffs[k]: degree lo+k -> lo+k+1
  for (std::size_t k = 0; k < len; ++k) {
    terms[k] = x.summands(lo + static_cast<int>(k));
    alive[k].assign(terms[k].size(), true);
    diffs[k] = x.differential(lo + static_cast<int>(k));
  }
  for (std::size_t k = 0; k + 1 < len; ++k) {
    MorphMatrix<F>& m = diffs[k];
    auto& rows_alive = alive[k + 1];
    auto& cols_alive = alive[k];
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t r = 0; r < m.rows() && !pivot; ++r) {
        if (!rows_alive[r]) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (cols_alive[c] && m.at(r, c).is_unit()) {
            pivot = {r, c};
            break;
          }
        }
      }
      if (!pivot) break;
      const auto [pr, pc] = *pivot;
      const auto einv = unit_inverse(m.at(pr, pc));
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == pr || !rows_alive[r] || m.at(r, pc).is_zero()) continue;
        const auto t = compose(m.at(r, pc), einv);
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (c == pc || !cols_alive[c] || m.at(pr, c).is_zero()) continue;
          m.at(r, c) -= compose(t, m.at(pr, c));
        }
      }
      rows_alive[pr] = false;
      cols_alive[pc] = false;
    }
  }
  std::map<int, std::vector<Vertex>> out_terms;
  std::vector<std::vector<std::size_t>> keep(len);
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i < terms[k].size(); ++i) {
      if (alive[k][i]) keep[k].push_back(i);
    }
    auto& vs = out_terms[lo + static_cast<int>(k)];
    for (auto i : keep[k]) vs.push_back(terms[k][i]);
  }
  std::map<int, MorphMatrix<F>> out_diffs;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    const int d = lo + static_cast<int>(k);
    MorphMatrix<F> m(out_terms[d + 1], out_terms[d]);
    for (std::size_t r = 0; r < keep[k + 1].size(); ++r) {
      for (std::size_t c = 0; c < keep[k].size(); ++c) {
        m.at(r, c) = diffs[k].at(keep[k + 1][r], keep[k][c]);
      }
    }
    out_diffs.emplace(d, std::move(m));
  }
  // Trimming can drop degrees, so only keep differentials inside the new support.
  int new_lo = lo, new_hi = hi;
  while (new_lo <= hi && out_terms[new_lo].empty()) ++new_lo;
  while (new_hi >= lo && out_terms[new_hi].empty()) --new_hi;
  if (new_lo > new_hi) return ProjComplex<F>(x.diagram());
  for (auto it = out_diffs.begin(); it != out_diffs.end();) {
    if (it->first < new_lo - 1 || it->first > new_hi) it = out_diffs.erase(it);
    else ++it;
  }
  return ProjComplex<F>(x.diagram(), out_terms, std::move(out_diffs));
}

// ---- Hom complexes ----

template <Field F>
std::size_t HomComplex<F>::dim(int degree) const {
  auto it = basis.find(degree);
  return it == basis.end() ? 0 : it->second.size();
}

template <Field F>
Matrix<F> HomComplex<F>::matrix(int degree) const {
  auto it = differential.find(degree);
  if (it != differential.end()) return it->second;
  return Matrix<F>(dim(degree + 1), dim(degree));
}

template <Field F>
HomComplex<F> hom_complex(Vertex j, const ProjComplex<F>& x) {
  const auto& dg = x.diagram();
  dg.color(j);
  HomComplex<F> h;
  h.probe = j;
  if (x.is_zero()) return h;
  std::map<int, std::vector<std::size_t>> offsets;
  for (int d = x.lowest(); d <= x.highest(); ++d) {
    const auto& vs = x.summands(d);
    auto& off = offsets[d];
    std::vector<HomBasisRef> b;
    for (std::size_t s = 0; s < vs.size(); ++s) {
      off.push_back(b.size());
      for (const auto& e : hom_basis(dg, j, vs[s])) b.push_back({s, e.kind});
    }
    if (!b.empty()) h.basis.emplace(d, std::move(b));
  }
  for (const auto& [d, b] : h.basis) {
    Matrix<F> m(h.dim(d + 1), b.size());
    const auto& dm = x.differential(d);
    const auto& src = x.summands(d);
    const auto& tgt = x.summands(d + 1);
    for (std::size_t col = 0; col < b.size(); ++col) {
      const auto f = MorphElement<F>::basis({j, src[b[col].summand], b[col].kind});
      for (std::size_t s = 0; s < tgt.size(); ++s) {
        const auto& e = dm.at(s, b[col].summand);
        if (e.is_zero()) continue;
        auto coords = compose(e, f).coordinates(dg);
        for (std::size_t t = 0; t < coords.size(); ++t) m(offsets[d + 1][s] + t, col) = coords[t];
      }
    }
    h.differential.emplace(d, std::move(m));
  }
  return h;
}

template <Field F>
HomRow hom_dims(Vertex j, const ProjComplex<F>& x) {
  auto h = hom_complex(j, x);
  HomRow row;
  for (const auto& [d, b] : h.basis) {
    const long dim = static_cast<long>(b.size()) - static_cast<long>(rank(h.matrix(d))) -
                     static_cast<long>(rank(h.matrix(d - 1)));
    if (dim < 0) throw InvariantBreach("negative homology dimension; differential does not square to zero");
    if (dim > 0) row[d] = static_cast<int>(dim);
  }
  return row;
}

template <Field F>
int hom_euler(Vertex j, const ProjComplex<F>& x) {
  auto h = hom_complex(j, x);
  int e = 0;
  for (const auto& [d, b] : h.basis) e += (d % 2 == 0 ? 1 : -1) * static_cast<int>(b.size());
  return e;
}

int HomProfile::total() const {
  int t = 0;
  for (const auto& [k, v] : dims) t += v;
  return t;
}

std::map<int, int> HomProfile::totals_by_degree() const {
  std::map<int, int> out;
  for (const auto& [k, v] : dims) out[k.second] += v;
  return out;
}

template <Field F>
HomProfile profile(const ProjComplex<F>& x) {
  HomProfile p;
  for (Vertex j : x.diagram().vertices()) {
    for (const auto& [d, n] : hom_dims(j, x)) p.dims[{j, d}] = n;
  }
  return p;
}

template <Field F>
std::string canonical_key(const ProjComplex<F>& x) {
  std::ostringstream os;
  if (!x.is_zero()) {
    for (int d = x.lowest(); d <= x.highest(); ++d) {
      auto vs = x.summands(d);
      std::sort(vs.begin(), vs.end());
      os << d << ':';
      for (Vertex v : vs) os << v << ',';
      os << ';';
    }
  }
  os << '|';
  for (const auto& [k, v] : profile(x).dims) os << k.first << '@' << k.second << '=' << v << ';';
  return os.str();
}

template <Field F>
bool profiles_equal(const ProjComplex<F>& x, const ProjComplex<F>& y) {
  if (!(x.diagram() == y.diagram())) return false;
  return canonical_key(minimize(x)) == canonical_key(minimize(y));
}

template <Field F>
std::string describe(const ProjComplex<F>& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = x.lowest(); d <= x.highest(); ++d) {
    if (!first) os << " | ";
    first = false;
    os << "deg " << d << ":";
    for (Vertex v : x.summands(d)) os << " P" << v;
  }
  return os.str();
}

#define TWISTLAB_INSTANTIATE(F)                                                        \
  template class MorphMatrix<F>;                                                       \
  template MorphMatrix<F> operator*(const MorphMatrix<F>&, const MorphMatrix<F>&);     \
  template class ProjComplex<F>;                                                       \
  template struct ChainMap<F>;                                                         \
  template struct HomComplex<F>;                                                       \
  template ProjComplex<F> projective(const DynkinDiagram&, Vertex);                    \
  template ProjComplex<F> sum_of_projectives(const DynkinDiagram&);                    \
  template ProjComplex<F> stalk(const DynkinDiagram&, std::vector<Vertex>, int);       \
  template ProjComplex<F> shift(const ProjComplex<F>&, int);                           \
  template ConeResult<F> cone_with_maps(const ChainMap<F>&);                           \
  template ProjComplex<F> cone(const ChainMap<F>&);                                    \
  template ProjComplex<F> direct_sum(const ProjComplex<F>&, const ProjComplex<F>&);    \
  template ProjComplex<F> minimize(const ProjComplex<F>&);                             \
  template HomComplex<F> hom_complex(Vertex, const ProjComplex<F>&);                   \
  template HomRow hom_dims(Vertex, const ProjComplex<F>&);                             \
  template int hom_euler(Vertex, const ProjComplex<F>&);                               \
  template HomProfile profile(const ProjComplex<F>&);                                  \
  template std::string canonical_key(const ProjComplex<F>&);                           \
  template bool profiles_equal(const ProjComplex<F>&, const ProjComplex<F>&);          \
  template std::string describe(const ProjComplex<F>&);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
