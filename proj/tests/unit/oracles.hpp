#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/complex.hpp"
#include "twistlab/zigzag.hpp"

namespace oracle {

using twistlab::DynkinDiagram;
using twistlab::Vertex;

// Positive roots of the subdiagram on `sub`, by adding simple roots while the pairing is -1.
inline std::size_t positive_roots(const DynkinDiagram& d, const std::vector<Vertex>& sub) {
  using Root = std::vector<int>;
  const int n = d.rank();
  auto pair_with = [&](const Root& b, Vertex i) {
    int s = 2 * b[i - 1];
    for (Vertex k : sub)
      if (d.adjacent(i, k)) s -= b[k - 1];
    return s;
  };
  std::set<Root> roots;
  std::vector<Root> frontier;
  for (Vertex i : sub) {
    Root r(n, 0);
    r[i - 1] = 1;
    roots.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier)
      for (Vertex i : sub)
        if (pair_with(b, i) == -1) {
          Root c = b;
          ++c[i - 1];
          if (roots.insert(c).second) next.push_back(c);
        }
    frontier = std::move(next);
  }
  return roots.size();
}

// Number of positive braid monoid elements of each length 0..max_len, from the
// growth series 1 / sum_T (-1)^|T| t^{N(T)} over all vertex subsets T.
inline std::vector<long> monoid_growth(const DynkinDiagram& d, int max_len) {
  const int n = d.rank();
  std::vector<long> denom(max_len + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> sub;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) sub.push_back(k + 1);
    const std::size_t len = positive_roots(d, sub);
    if (len <= static_cast<std::size_t>(max_len)) denom[len] += (sub.size() % 2 == 0) ? 1 : -1;
  }
  std::vector<long> c(max_len + 1, 0);
  for (int m = 0; m <= max_len; ++m) {
    long s = (m == 0) ? 1 : 0;
    for (int k = 1; k <= m; ++k) s -= denom[k] * c[m - k];
    c[m] = s;
  }
  return c;
}

// Rank over Q by fraction-free search for the largest nonvanishing minor.
inline long det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class acc = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      acc = -acc;
    }
    acc *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return acc == 0 ? 0 : 1;
}

inline std::size_t rank_by_minors(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<mpq_class>> minor;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<mpq_class> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) row.push_back(a[r][c]);
          minor.push_back(row);
        }
        if (det(minor) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

inline std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Zigzag path algebra written out directly: basis element of Hom(P_src, P_tgt) is
// 'e' (identity), 'l' (loop) or 'a' (arrow).
struct Path {
  Vertex src;
  Vertex tgt;
  char kind;
};

inline std::vector<Path> paths(const DynkinDiagram& d, Vertex s, Vertex t) {
  if (s == t) return {{s, t, 'e'}, {s, t, 'l'}};
  if (d.adjacent(s, t)) return {{s, t, 'a'}};
  return {};
}

// g after f as a coefficient on a single basis path, or nothing.
inline std::optional<Path> multiply(const Path& g, const Path& f) {
  if (f.tgt != g.src) return std::nullopt;
  if (f.kind == 'e') return g;
  if (g.kind == 'e') return f;
  if (f.kind == 'a' && g.kind == 'a' && g.tgt == f.src) return Path{f.src, f.src, 'l'};
  return std::nullopt;
}

template <class F>
mpq_class to_q(const F& x) {
  if constexpr (std::is_same_v<F, twistlab::Rational>) {
    return x.value();
  } else {
    return x.is_zero() ? 0 : 1;
  }
}

inline int index_of(const std::vector<Path>& basis, const Path& p) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].kind == p.kind && basis[k].src == p.src && basis[k].tgt == p.tgt) return static_cast<int>(k);
  return -1;
}

// dim H^r Hom(P_j, X) for a complex over Q.
template <class F>
std::map<int, int> hom_dims(Vertex j, const twistlab::ProjComplex<F>& x) {
  std::map<int, int> out;
  if (x.is_zero()) return out;
  const auto& d = x.diagram();
  auto basis_at = [&](int deg) {
    std::vector<std::pair<std::size_t, Path>> b;
    if (deg < x.lowest() || deg > x.highest()) return b;
    const auto& s = x.summands(deg);
    for (std::size_t k = 0; k < s.size(); ++k)
      for (const Path& p : paths(d, j, s[k])) b.push_back({k, p});
    return b;
  };
  auto diff_rank = [&](int deg) -> std::size_t {
    if (deg < x.lowest() || deg >= x.highest()) return 0;
    const auto src = basis_at(deg);
    const auto tgt = basis_at(deg + 1);
    if (src.empty() || tgt.empty()) return 0;
    const auto& m = x.differential(deg);
    std::vector<std::vector<mpq_class>> a(tgt.size(), std::vector<mpq_class>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& [col, f] = src[c];
      for (std::size_t row = 0; row < m.rows(); ++row) {
        const auto& e = m.at(row, col);
        for (const Path& g : paths(d, e.src(), e.tgt())) {
          const mpq_class coef = to_q(e.coefficient(g.kind == 'e'   ? twistlab::MorphKind::identity
                                                    : g.kind == 'l' ? twistlab::MorphKind::loop
                                                                    : twistlab::MorphKind::arrow));
          if (coef == 0) continue;
          auto prod = multiply(g, f);
          if (!prod) continue;
          for (std::size_t r = 0; r < tgt.size(); ++r)
            if (tgt[r].first == row && tgt[r].second.kind == prod->kind) a[r][c] += coef;
        }
      }
    }
    return rank_q(a);
  };
  for (int deg = x.lowest(); deg <= x.highest(); ++deg) {
    const long dim = static_cast<long>(basis_at(deg).size()) - static_cast<long>(diff_rank(deg)) -
                     static_cast<long>(diff_rank(deg - 1));
    if (dim != 0) out[deg] = static_cast<int>(dim);
  }
  return out;
}

// Class in the Grothendieck group, sum_d (-1)^d [X^d], indexed by vertex - 1.
template <class F>
std::vector<long> k_class(const twistlab::ProjComplex<F>& x) {
  std::vector<long> v(x.diagram().rank(), 0);
  if (x.is_zero()) return v;
  for (int deg = x.lowest(); deg <= x.highest(); ++deg)
    for (Vertex k : x.summands(deg)) v[k - 1] += (deg % 2 == 0) ? 1 : -1;
  return v;
}

// s_i(v) = v - <e_i, v> e_i with <e_a, e_b> = dim Hom(P_a, P_b).
inline std::vector<long> k_reflect(const DynkinDiagram& d, Vertex i, std::vector<long> v) {
  long pairing = 2 * v[i - 1];
  for (Vertex k : d.neighbors(i)) pairing += v[k - 1];
  v[i - 1] -= pairing;
  return v;
}

}  // namespace oracle
