#include "twistlab/mesh.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

std::string ZGammaVertex::to_string() const {
  if (imaginary()) return "(-inf," + std::to_string(j) + ")";
  return "(" + std::to_string(slice) + "," + std::to_string(j) + ")";
}

DecoratedSet::DecoratedSet(DynkinDiagram d, std::map<ZGammaVertex, Theta> theta,
                           std::map<Vertex, Theta> boundary)
    : diagram_(std::move(d)), theta_(std::move(theta)), boundary_(std::move(boundary)) {
  for (const auto& [v, t] : theta_) {
    if (v.imaginary()) throw ValidationError("imaginary vertex listed as a member");
    if (diagram_.color(v.j) != (v.slice & 1)) {
      throw ValidationError("vertex " + v.to_string() + " has the wrong parity");
    }
  }
  for (Vertex j : diagram_.vertices()) {
    if (!boundary_.count(j)) throw ValidationError("boundary value missing for vertex " + std::to_string(j));
  }
  for (const auto& [j, t] : boundary_) {
    if (!diagram_.has_vertex(j)) throw ValidationError("boundary value for unknown vertex " + std::to_string(j));
  }
}

std::vector<ZGammaVertex> DecoratedSet::vertices() const {
  std::vector<ZGammaVertex> out;
  out.reserve(theta_.size());
  for (const auto& [v, t] : theta_) out.push_back(v);
  return out;
}

Theta DecoratedSet::value(const ZGammaVertex& v) const {
  if (v.imaginary()) return boundary_.at(v.j);
  auto it = theta_.find(v);
  if (it == theta_.end()) throw PreconditionError("vertex " + v.to_string() + " is not in the set");
  return it->second;
}

std::optional<int> DecoratedSet::min_slice() const {
  if (theta_.empty()) return std::nullopt;
  return theta_.begin()->first.slice;
}

std::map<Vertex, Theta> base_boundary(const DynkinDiagram& d, Vertex i) {
  d.color(i);
  std::map<Vertex, Theta> b;
  for (Vertex j : d.vertices()) b[j] = j == i ? -1 : 0;
  return b;
}

namespace {

using ThetaMap = std::map<ZGammaVertex, Theta>;

ZGammaVertex tau_in(const ThetaMap& m, const ZGammaVertex& b) {
  const int lo = m.empty() ? b.slice : m.begin()->first.slice;
  for (int n = b.slice - 2; n >= lo; n -= 2) {
    if (m.count({n, b.j})) return {n, b.j};
  }
  return {ZGammaVertex::kImaginary, b.j};
}

std::vector<ZGammaVertex> mesh_in(const DynkinDiagram& d, const ThetaMap& m, const ZGammaVertex& a,
                                  const ZGammaVertex& b) {
  std::vector<ZGammaVertex> out;
  const auto& nb = d.neighbors(b.j);
  for (auto it = m.begin(); it != m.end() && it->first.slice < b.slice; ++it) {
    const auto& c = it->first;
    if (c.slice <= a.slice && !a.imaginary()) continue;
    if (std::binary_search(nb.begin(), nb.end(), c.j)) out.push_back(c);
  }
  return out;
}

Theta mesh_sum(const ThetaMap& m, const std::vector<ZGammaVertex>& cs) {
  Theta s = 0;
  for (const auto& c : cs) s += m.at(c);
  return s;
}

void require_member(const DecoratedSet& s, const ZGammaVertex& v) {
  if (!s.contains(v)) throw PreconditionError("vertex " + v.to_string() + " is not in the set");
}

}  // namespace

DecoratedSet to_decorated(const LayeredWord& lw, const std::map<Vertex, Theta>& boundary) {
  ThetaMap m;
  for (std::size_t k = 0; k < lw.slices.size(); ++k) {
    for (Vertex j : lw.slices[k]) {
      const ZGammaVertex b{static_cast<int>(k), j};
      const auto t = tau_in(m, b);
      const Theta prev = t.imaginary() ? boundary.at(j) : m.at(t);
      m[b] = mesh_sum(m, mesh_in(lw.diagram, m, t, b)) - prev;
    }
  }
  return DecoratedSet(lw.diagram, std::move(m), boundary);
}

BraidWord word_of(const DecoratedSet& s) {
  std::vector<Vertex> letters;
  for (const auto& [v, t] : s.theta()) letters.push_back(v.j);
  return BraidWord(s.diagram(), std::move(letters));
}

ZGammaVertex tau(const DecoratedSet& s, const ZGammaVertex& b) {
  require_member(s, b);
  return tau_in(s.theta(), b);
}

std::vector<ZGammaVertex> mesh(const DecoratedSet& s, const ZGammaVertex& a, const ZGammaVertex& b) {
  require_member(s, b);
  if (a.j != b.j) throw PreconditionError("mesh endpoints must share a vertex of the diagram");
  return mesh_in(s.diagram(), s.theta(), a, b);
}

std::optional<ZGammaVertex> first_mesh_violation(const DecoratedSet& s) {
  for (const auto& [b, t] : s.theta()) {
    const auto a = tau_in(s.theta(), b);
    if (t + s.value(a) != mesh_sum(s.theta(), mesh_in(s.diagram(), s.theta(), a, b))) return b;
  }
  return std::nullopt;
}

bool check_mesh_relations(const DecoratedSet& s) { return !first_mesh_violation(s).has_value(); }

bool can_commute(const DecoratedSet& s, const ZGammaVertex& a, int direction) {
  if (!s.contains(a) || (direction != 1 && direction != -1)) return false;
  if (s.contains({a.slice + 2 * direction, a.j})) return false;
  for (Vertex k : s.diagram().neighbors(a.j)) {
    if (s.contains({a.slice + direction, k})) return false;
  }
  return true;
}

DecoratedSet commute_move(const DecoratedSet& s, const ZGammaVertex& a, int direction) {
  if (!can_commute(s, a, direction)) {
    throw PreconditionError("cannot commute " + a.to_string() + " in direction " + std::to_string(direction));
  }
  auto m = s.theta();
  const Theta t = m.at(a);
  m.erase(a);
  m[{a.slice + 2 * direction, a.j}] = t;
  return DecoratedSet(s.diagram(), std::move(m), s.boundary());
}

bool can_braid(const DecoratedSet& s, const ZGammaVertex& a, const ZGammaVertex& b, const ZGammaVertex& c) {
  const auto& d = s.diagram();
  if (!s.contains(a) || !s.contains(b) || !s.contains(c)) return false;
  const int n = a.slice;
  const Vertex j = a.j, k = b.j;
  if (b.slice != n + 1 || c.slice != n + 2 || c.j != j || !d.adjacent(j, k)) return false;
  for (Vertex t : d.neighbors(j)) {
    if (t != k && s.contains({n + 1, t})) return false;
  }
  for (Vertex l : d.neighbors(k)) {
    if (l != j && s.contains({n + 2, l})) return false;
  }
  return !s.contains({n + 3, k});
}

DecoratedSet braid_move(const DecoratedSet& s, const ZGammaVertex& a, const ZGammaVertex& b,
                        const ZGammaVertex& c) {
  if (!can_braid(s, a, b, c)) {
    throw PreconditionError("cannot braid " + a.to_string() + " " + b.to_string() + " " + c.to_string());
  }
  auto m = s.theta();
  const Theta ta = m.at(a), tb = m.at(b), tc = m.at(c);
  m.erase(a);
  m[b] = tc;
  m[c] = tb;
  m[{a.slice + 3, b.j}] = ta;
  return DecoratedSet(s.diagram(), std::move(m), s.boundary());
}

DecoratedSet apply_move(const DecoratedSet& s, const Move& mv) {
  if (mv.kind == Move::Kind::commute) {
    if (mv.a.j != mv.b.j || std::abs(mv.b.slice - mv.a.slice) != 2) {
      throw PreconditionError("malformed commutation " + mv.a.to_string() + " -> " + mv.b.to_string());
    }
    return commute_move(s, mv.a, mv.b.slice > mv.a.slice ? 1 : -1);
  }
  if (mv.d != ZGammaVertex{mv.a.slice + 3, mv.b.j}) throw PreconditionError("malformed braiding record");
  return braid_move(s, mv.a, mv.b, mv.c);
}

DecoratedSet replay(const DecoratedSet& s, const MoveCertificate& cert) {
  DecoratedSet cur = s;
  for (const auto& mv : cert.moves) cur = apply_move(cur, mv);
  return cur;
}

std::vector<Move> legal_moves(const DecoratedSet& s) {
  std::vector<Move> out;
  const auto& d = s.diagram();
  for (const auto& [a, t] : s.theta()) {
    for (int dir : {-1, 1}) {
      if (can_commute(s, a, dir)) out.push_back({Move::Kind::commute, a, {a.slice + 2 * dir, a.j}, {}, {}});
    }
    for (Vertex k : d.neighbors(a.j)) {
      const ZGammaVertex b{a.slice + 1, k}, c{a.slice + 2, a.j};
      if (can_braid(s, a, b, c)) out.push_back({Move::Kind::braid, a, b, c, {a.slice + 3, k}});
    }
  }
  return out;
}

Vertex check_divisor_hypotheses(const DecoratedSet& s) {
  if (auto bad = first_mesh_violation(s)) {
    throw PreconditionError("mesh relation fails at " + bad->to_string());
  }
  int zeros = 0;
  for (const auto& [v, t] : s.theta()) {
    if (t < 0) throw PreconditionError("theta is negative at " + v.to_string());
    if (t == 0) ++zeros;
  }
  if (zeros != 1) throw PreconditionError("theta vanishes on " + std::to_string(zeros) + " vertices, expected 1");
  std::optional<Vertex> base;
  for (const auto& [j, t] : s.boundary()) {
    if (t == -1 && !base) base = j;
    else if (t != 0) throw PreconditionError("boundary must be -1 at one vertex and 0 elsewhere");
  }
  if (!base) throw PreconditionError("boundary must be -1 at one vertex and 0 elsewhere");
  return *base;
}

namespace {

ZGammaVertex zero_vertex(const DecoratedSet& s) {
  for (const auto& [v, t] : s.theta()) {
    if (t == 0) return v;
  }
  throw InvariantBreach("theta lost its zero");
}

int count_up_to(const DecoratedSet& s, int slice) {
  int n = 0;
  for (const auto& [v, t] : s.theta()) n += v.slice <= slice ? 1 : 0;
  return n;
}

class Solver {
public:
  explicit Solver(const DecoratedSet& s) : cur_(s), start_(s) {}

  LeftDivisor run() {
    const Vertex i = check_divisor_hypotheses(cur_);
    const std::size_t cap = 4 * (cur_.theta().size() + 1) * (cur_.theta().size() + 1) + 16;
    std::optional<std::pair<int, std::vector<std::size_t>>> last;
    for (std::size_t iter = 0;; ++iter) {
      if (iter > cap) throw InvariantBreach("descent exceeded its iteration bound");
      const auto z = zero_vertex(cur_);
      if (tau_in(cur_.theta(), z).imaginary()) {
        settle(z);
        break;
      }
      auto [triple, seq] = chain(z);
      std::pair<int, std::vector<std::size_t>> measure{count_up_to(cur_, z.slice), seq};
      if (last && !(measure < *last)) {
        throw InvariantBreach("descent measure did not decrease at zero vertex " + z.to_string());
      }
      braid_at(triple[0], triple[1], triple[2]);
      last = measure;
    }
    const auto z = zero_vertex(cur_);
    if (z.slice > *cur_.min_slice()) throw InvariantBreach("zero vertex is not in the minimal slice");
    if (z.j == i) throw InvariantBreach("divisor coincides with the base vertex");
    return {z.j, std::move(cert_), cur_, braids_};
  }

private:
  DecoratedSet cur_;
  DecoratedSet start_;
  MoveCertificate cert_;
  int braids_ = 0;

  void commute(ZGammaVertex& a, int dir) {
    if (!can_commute(cur_, a, dir)) throw InvariantBreach("planned commutation of " + a.to_string() + " is illegal");
    const ZGammaVertex b{a.slice + 2 * dir, a.j};
    cur_ = commute_move(cur_, a, dir);
    cert_.moves.push_back({Move::Kind::commute, a, b, {}, {}});
    a = b;
  }

  // Zero vertex with an infinite mesh: slide it down to the minimal slice.
  void settle(ZGammaVertex z) {
    while (true) {
      std::optional<int> others;
      for (const auto& [v, t] : cur_.theta()) {
        if (v != z) {
          others = v.slice;
          break;
        }
      }
      if (!others || z.slice <= *others) return;
      commute(z, -1);
    }
  }

  // Follows the mesh chain from the zero vertex to a mesh with a single member.
  std::pair<std::array<ZGammaVertex, 3>, std::vector<std::size_t>> chain(ZGammaVertex x) {
    std::vector<std::size_t> seq;
    std::optional<ZGammaVertex> prev_tau;
    for (std::size_t step = 0; step <= cur_.theta().size(); ++step) {
      const auto t = tau_in(cur_.theta(), x);
      if (t.imaginary()) throw InvariantBreach("mesh chain reached an infinite mesh at " + x.to_string());
      auto m = mesh_in(cur_.diagram(), cur_.theta(), t, x);
      seq.push_back(m.size());
      if (m.size() == 1) return {{t, m.front(), x}, seq};
      if (m.empty()) throw InvariantBreach("empty mesh in the chain at " + x.to_string());
      if (prev_tau) m.erase(std::remove(m.begin(), m.end(), *prev_tau), m.end());
      const auto next = *std::min_element(m.begin(), m.end());
      prev_tau = t;
      x = next;
    }
    throw InvariantBreach("mesh chain does not terminate");
  }

  void braid_at(ZGammaVertex a, const ZGammaVertex& b, ZGammaVertex c) {
    while (a.slice < b.slice - 1) commute(a, 1);
    while (c.slice > b.slice + 1) commute(c, -1);
    if (!can_braid(cur_, a, b, c)) {
      std::vector<ZGammaVertex> movers;
      for (const auto& [v, t] : cur_.theta()) {
        if (v.slice >= c.slice && v != c) movers.push_back(v);
      }
      std::sort(movers.begin(), movers.end(), [](const auto& p, const auto& q) { return p.slice > q.slice; });
      for (auto v : movers) commute(v, 1);
    }
    if (!can_braid(cur_, a, b, c)) throw InvariantBreach("braid triple is not legal after alignment");
    const ZGammaVertex d{a.slice + 3, b.j};
    cur_ = braid_move(cur_, a, b, c);
    cert_.moves.push_back({Move::Kind::braid, a, b, c, d});
    ++braids_;
  }
};

}  // namespace

LeftDivisor find_left_divisor(const DecoratedSet& s) { return Solver(s).run(); }

std::map<ZGammaVertex, Theta> chi_of_layered(const LayeredWord& lw) {
  std::size_t s0 = 0;
  while (s0 < lw.slices.size() && lw.slices[s0].empty()) ++s0;
  std::map<ZGammaVertex, Theta> chi;
  if (s0 == lw.slices.size()) return chi;
  if (lw.slices[s0].size() != 1) throw PreconditionError("first nonempty slice must be a single vertex");
  auto get = [&](int slice, Vertex v) -> Theta {
    auto it = chi.find({slice, v});
    return it == chi.end() ? 0 : it->second;
  };
  chi[{static_cast<int>(s0), lw.slices[s0].front()}] = 1;
  for (std::size_t k = s0 + 1; k < lw.slices.size(); ++k) {
    const int n = static_cast<int>(k);
    for (Vertex v : lw.slices[k]) {
      Theta x = -get(n - 2, v);
      for (Vertex t : lw.diagram.neighbors(v)) x += get(n - 1, t);
      chi[{n, v}] = x;
    }
  }
  return chi;
}

namespace {

bool contains_sorted(const std::vector<Vertex>& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

Theta lookup(const std::map<Vertex, Theta>& m, Vertex v) {
  auto it = m.find(v);
  return it == m.end() ? 0 : it->second;
}

// chi of vertex k one step after the chain, with the usual zero conventions.
Theta next_chi(const DynkinDiagram& d, const std::vector<std::map<Vertex, Theta>>& chi, Vertex k) {
  const std::size_t u = chi.size();
  Theta x = u >= 2 ? -lookup(chi[u - 2], k) : 0;
  for (Vertex t : d.neighbors(k)) x += lookup(chi[u - 1], t);
  return x;
}

std::vector<Vertex> neighbourhood(const DynkinDiagram& d, const std::vector<Vertex>& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    for (Vertex t : d.neighbors(v)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A vertex entering Delta_u for the first time has no neighbour in Delta_{u-3}.
bool fresh_vertices_ok(const DynkinDiagram& d, const DeltaChain& chain, std::size_t u, const std::vector<Vertex>& delta) {
  if (u < 3) return true;
  for (Vertex k : delta) {
    if (contains_sorted(chain[u - 2], k)) continue;
    for (Vertex t : d.neighbors(k)) {
      if (contains_sorted(chain[u - 3], t)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::map<Vertex, Theta>> chain_chi(const DynkinDiagram& d, const DeltaChain& chain) {
  std::vector<std::map<Vertex, Theta>> chi;
  for (std::size_t u = 0; u < chain.size(); ++u) {
    std::map<Vertex, Theta> row;
    for (Vertex k : chain[u]) row[k] = u == 0 ? 1 : next_chi(d, chi, k);
    chi.push_back(std::move(row));
  }
  return chi;
}

bool is_chain_form(const LayeredWord& lw) {
  const auto& d = lw.diagram;
  std::size_t s0 = 0;
  while (s0 < lw.slices.size() && lw.slices[s0].empty()) ++s0;
  if (lw.slices.size() < s0 + 2 || lw.slices[s0].size() != 1) return false;
  DeltaChain chain(lw.slices.begin() + static_cast<long>(s0), lw.slices.end() - 1);
  const auto& last = lw.slices.back();
  for (std::size_t u = 1; u < chain.size(); ++u) {
    const auto nb = neighbourhood(d, chain[u - 1]);
    for (Vertex v : chain[u]) {
      if (!contains_sorted(nb, v)) return false;
    }
    if (u >= 2) {
      for (Vertex v : chain[u - 2]) {
        if (!contains_sorted(chain[u], v)) return false;
      }
    }
    if (chain[u].empty() || !fresh_vertices_ok(d, chain, u, chain[u])) return false;
  }
  const auto chi = chain_chi(d, chain);
  for (const auto& row : chi) {
    for (const auto& [k, x] : row) {
      if (x <= 0) return false;
    }
  }
  return last.size() == 1 && contains_sorted(neighbourhood(d, chain.back()), last.front()) &&
         next_chi(d, chi, last.front()) == 0;
}

std::vector<DeltaChain> delta_chains(const DynkinDiagram& d, Vertex i, int depth) {
  std::vector<DeltaChain> out;
  std::vector<DeltaChain> frontier{DeltaChain{{i}}};
  out.push_back(frontier.front());
  for (int u = 1; u <= depth; ++u) {
    std::vector<DeltaChain> next;
    for (const auto& chain : frontier) {
      const auto cand = neighbourhood(d, chain.back());
      const std::vector<Vertex> required = u >= 2 ? chain[u - 2] : std::vector<Vertex>{};
      const auto chi = chain_chi(d, chain);
      // Subsets of the candidates containing the required vertices.
      const std::size_t n = cand.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Vertex> delta;
        for (std::size_t b = 0; b < n; ++b) {
          if (mask >> b & 1) delta.push_back(cand[b]);
        }
        bool ok = std::all_of(required.begin(), required.end(), [&](Vertex v) { return contains_sorted(delta, v); });
        for (Vertex k : delta) ok = ok && next_chi(d, chi, k) > 0;
        if (!ok || !fresh_vertices_ok(d, chain, static_cast<std::size_t>(u), delta)) continue;
        DeltaChain longer = chain;
        longer.push_back(std::move(delta));
        out.push_back(longer);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<LayeredWord> chain_words(const DynkinDiagram& d, Vertex i, int depth) {
  std::vector<LayeredWord> out;
  const int offset = d.color(i);
  for (const auto& chain : delta_chains(d, i, depth)) {
    const auto chi = chain_chi(d, chain);
    for (Vertex l : neighbourhood(d, chain.back())) {
      if (next_chi(d, chi, l) != 0) continue;
      std::vector<std::vector<Vertex>> slices(static_cast<std::size_t>(offset));
      slices.insert(slices.end(), chain.begin(), chain.end());
      slices.push_back({l});
      out.emplace_back(d, std::move(slices));
    }
  }
  return out;
}

std::string to_dot(const DecoratedSet& s) {
  const auto& d = s.diagram();
  std::ostringstream os;
  os << "digraph ZGamma {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  const int lo = s.empty() ? 0 : *s.min_slice() - 1;
  const int hi = s.empty() ? 1 : s.theta().rbegin()->first.slice + 1;
  auto id = [](int n, Vertex j) { return "v" + std::string(n < 0 ? "m" : "") + std::to_string(std::abs(n)) + "_" + std::to_string(j); };
  for (int n = lo; n <= hi; ++n) {
    for (Vertex j : d.vertices_of_color(n)) {
      const ZGammaVertex v{n, j};
      os << "  " << id(n, j) << " [pos=\"" << n << "," << j << "!\"";
      if (s.contains(v)) {
        os << ", style=filled, fillcolor=lightblue, label=\"" << j << "\\n" << s.value(v) << "\"";
      } else {
        os << ", label=\"\", width=0.15";
      }
      os << "];\n";
    }
  }
  for (int n = lo; n < hi; ++n) {
    for (Vertex j : d.vertices_of_color(n)) {
      for (Vertex k : d.neighbors(j)) os << "  " << id(n, j) << " -> " << id(n + 1, k) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace twistlab
