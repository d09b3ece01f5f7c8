#include "twistlab/braid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "twistlab/errors.hpp"

namespace twistlab {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

DynkinDiagram::DynkinDiagram(Family family, int rank) {
  bool legal = false;
  switch (family) {
    case Family::A: legal = rank >= 2; break;
    case Family::D: legal = rank >= 4; break;
    case Family::E: legal = rank >= 6 && rank <= 8; break;
  }
  if (!legal || rank > kMaxRank) {
    throw ValidationError(std::string("illegal diagram ") + family_letter(family) +
                          std::to_string(rank));
  }
  auto data = std::make_shared<Data>();
  data->family = family;
  data->rank = rank;
  data->adj.assign(rank + 1, {});
  auto link = [&](Vertex a, Vertex b) {
    data->adj[a].push_back(b);
    data->adj[b].push_back(a);
  };
  Vertex root = 1;
  switch (family) {
    case Family::A:
      for (Vertex v = 1; v < rank; ++v) link(v, v + 1);
      break;
    case Family::D:
      // branch vertex 2 with leaves 1, 3 and tail 4..n
      link(1, 2);
      link(2, 3);
      link(2, 4);
      for (Vertex v = 4; v < rank; ++v) link(v, v + 1);
      root = 2;
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (Vertex v = 4; v < rank; ++v) link(v, v + 1);
      root = 4;
      break;
  }
  for (auto& nb : data->adj) std::sort(nb.begin(), nb.end());

  data->color.assign(rank + 1, -1);
  std::deque<Vertex> queue{root};
  data->color[root] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : data->adj[v]) {
      if (data->color[w] < 0) {
        data->color[w] = 1 - data->color[v];
        queue.push_back(w);
      } else if (data->color[w] == data->color[v]) {
        throw InvariantBreach("diagram is not bipartite");
      }
    }
  }
  data_ = std::move(data);
}

std::string DynkinDiagram::name() const {
  return std::string(1, family_letter(family())) + std::to_string(rank());
}

void DynkinDiagram::require_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw ValidationError("vertex " + std::to_string(v) + " is not in " + name());
  }
}

bool DynkinDiagram::adjacent(Vertex a, Vertex b) const {
  require_vertex(a);
  require_vertex(b);
  const auto& nb = data_->adj[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

const std::vector<Vertex>& DynkinDiagram::neighbors(Vertex v) const {
  require_vertex(v);
  return data_->adj[v];
}

int DynkinDiagram::color(Vertex v) const {
  require_vertex(v);
  return data_->color[v];
}

std::vector<Vertex> DynkinDiagram::vertices() const {
  std::vector<Vertex> out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = i + 1;
  return out;
}

std::vector<Vertex> DynkinDiagram::vertices_of_color(int c) const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= rank(); ++v) {
    if (data_->color[v] == (c & 1)) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> DynkinDiagram::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 1; v <= rank(); ++v) {
    for (Vertex w : data_->adj[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

DynkinDiagram build_diagram(Family family, int rank) { return DynkinDiagram(family, rank); }

DynkinDiagram parse_diagram(std::string_view name) {
  if (name.size() < 2) throw ValidationError("bad diagram name '" + std::string(name) + "'");
  Family f;
  switch (name[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: throw ValidationError("bad diagram family in '" + std::string(name) + "'");
  }
  int rank = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9' || rank > 1000) {
      throw ValidationError("bad diagram rank in '" + std::string(name) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  return DynkinDiagram(f, rank);
}

std::vector<Vertex> neighbors(const DynkinDiagram& d, Vertex j) { return d.neighbors(j); }

BraidWord::BraidWord(DynkinDiagram d, std::vector<Vertex> l)
    : diagram(std::move(d)), letters(std::move(l)) {
  for (Vertex v : letters) {
    if (!diagram.has_vertex(v)) {
      throw ValidationError("letter " + std::to_string(v) + " is not a vertex of " +
                            diagram.name());
    }
  }
}

std::string BraidWord::to_string() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ' ';
    os << 's' << letters[k];
  }
  return os.str();
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (!(a.diagram == b.diagram)) throw ValidationError("words over different diagrams");
  std::vector<Vertex> l = a.letters;
  l.insert(l.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.diagram, std::move(l));
}

LayeredWord::LayeredWord(DynkinDiagram d, std::vector<std::vector<Vertex>> s)
    : diagram(std::move(d)), slices(std::move(s)) {
  for (std::size_t k = 0; k < slices.size(); ++k) {
    auto& sl = slices[k];
    std::sort(sl.begin(), sl.end());
    if (std::adjacent_find(sl.begin(), sl.end()) != sl.end()) {
      throw ValidationError("repeated vertex in slice " + std::to_string(k));
    }
    for (Vertex v : sl) {
      if (!diagram.has_vertex(v)) {
        throw ValidationError("vertex " + std::to_string(v) + " is not in " + diagram.name());
      }
      if (diagram.color(v) != static_cast<int>(k % 2)) {
        throw ValidationError("vertex " + std::to_string(v) + " has the wrong color for slice " +
                              std::to_string(k));
      }
    }
  }
}

namespace {

using Key = std::string;

Key encode(const std::vector<Vertex>& letters) {
  Key k(letters.size(), '\0');
  for (std::size_t i = 0; i < letters.size(); ++i) k[i] = static_cast<char>(letters[i]);
  return k;
}

std::vector<Vertex> decode(const Key& k) {
  std::vector<Vertex> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = static_cast<unsigned char>(k[i]);
  return out;
}

// Visits the class of `start`; stops early when `stop` returns true.
template <class Stop>
std::vector<Key> closure(const DynkinDiagram& d, const Key& start, Stop stop) {
  std::unordered_set<Key> seen{start};
  std::vector<Key> order{start};
  if (stop(start)) return order;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Key cur = order[head];
    const std::size_t n = cur.size();
    auto visit = [&](Key next) {
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        return stop(order.back());
      }
      return false;
    };
    for (std::size_t p = 0; p + 1 < n; ++p) {
      Vertex a = static_cast<unsigned char>(cur[p]);
      Vertex b = static_cast<unsigned char>(cur[p + 1]);
      if (a != b && !d.adjacent(a, b)) {
        Key next = cur;
        std::swap(next[p], next[p + 1]);
        if (visit(std::move(next))) return order;
      }
      if (p + 2 < n && cur[p + 2] == cur[p] && d.adjacent(a, b)) {
        Key next = cur;
        next[p] = next[p + 2] = cur[p + 1];
        next[p + 1] = cur[p];
        if (visit(std::move(next))) return order;
      }
    }
  }
  return order;
}

}  // namespace

bool equivalent(const BraidWord& w1, const BraidWord& w2) {
  if (!(w1.diagram == w2.diagram)) throw ValidationError("words over different diagrams");
  if (w1.length() != w2.length()) return false;
  const Key target = encode(w2.letters);
  auto order = closure(w1.diagram, encode(w1.letters), [&](const Key& k) { return k == target; });
  return order.back() == target;
}

std::vector<BraidWord> equivalence_class(const BraidWord& w) {
  auto order = closure(w.diagram, encode(w.letters), [](const Key&) { return false; });
  std::sort(order.begin(), order.end());
  std::vector<BraidWord> out;
  out.reserve(order.size());
  for (const auto& k : order) out.emplace_back(w.diagram, decode(k));
  return out;
}

std::optional<BraidWord> left_divisible_by(const BraidWord& w, Vertex j) {
  if (!w.diagram.has_vertex(j)) throw ValidationError("vertex not in diagram");
  if (w.empty()) return std::nullopt;
  auto order = closure(w.diagram, encode(w.letters), [](const Key&) { return false; });
  std::optional<Key> best;
  for (const auto& k : order) {
    if (static_cast<unsigned char>(k[0]) == j && (!best || k < *best)) best = k;
  }
  if (!best) return std::nullopt;
  auto letters = decode(*best);
  letters.erase(letters.begin());
  return BraidWord(w.diagram, std::move(letters));
}

LayeredWord layer(const BraidWord& w) {
  const auto& d = w.diagram;
  std::vector<std::vector<Vertex>> slices;
  std::vector<int> last(d.rank() + 1, -1);  // highest slice used by each vertex
  for (Vertex v : w.letters) {
    int floor = last[v];
    for (Vertex u : d.neighbors(v)) floor = std::max(floor, last[u]);
    int k = floor + 1;
    if ((k & 1) != d.color(v)) ++k;
    if (static_cast<int>(slices.size()) <= k) slices.resize(k + 1);
    slices[k].push_back(v);
    last[v] = k;
  }
  return LayeredWord(d, std::move(slices));
}

BraidWord flatten(const LayeredWord& lw) {
  std::vector<Vertex> letters;
  for (const auto& s : lw.slices) letters.insert(letters.end(), s.begin(), s.end());
  return BraidWord(lw.diagram, std::move(letters));
}

std::vector<BraidWord> words_of_length(const DynkinDiagram& d, int length) {
  std::vector<BraidWord> out;
  std::vector<Vertex> cur(length, 1);
  while (true) {
    out.emplace_back(d, cur);
    int p = length - 1;
    while (p >= 0 && cur[p] == d.rank()) cur[p--] = 1;
    if (p < 0) break;
    ++cur[p];
  }
  return out;
}

namespace {

std::size_t word_index(const DynkinDiagram& d, const std::vector<Vertex>& letters) {
  std::size_t idx = 0;
  for (Vertex v : letters) idx = idx * d.rank() + static_cast<std::size_t>(v - 1);
  return idx;
}

}  // namespace

ClassIndex::ClassIndex(const DynkinDiagram& d, int length)
    : diagram_(d), length_(length), words_(words_of_length(d, length)) {
  ids_.assign(words_.size(), -1);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (ids_[w] >= 0) continue;
    const int id = static_cast<int>(num_classes_++);
    auto order = closure(d, encode(words_[w].letters), [](const Key&) { return false; });
    for (const auto& k : order) ids_[word_index(d, decode(k))] = id;
  }
}

int ClassIndex::class_of(const BraidWord& w) const {
  if (!(w.diagram == diagram_) || static_cast<int>(w.length()) != length_) {
    throw ValidationError("word does not belong to this class index");
  }
  return ids_[word_index(diagram_, w.letters)];
}

}  // namespace twistlab
