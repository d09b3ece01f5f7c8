#pragma once

#include <climits>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistlab/braid.hpp"

namespace twistlab {

// Vertex (n, j) of the translation quiver Z Gamma. Slice kImaginary stands for -infinity.
struct ZGammaVertex {
  static constexpr int kImaginary = INT_MIN;

  int slice = 0;
  Vertex j = 0;

  bool imaginary() const { return slice == kImaginary; }
  std::string to_string() const;
  friend auto operator<=>(const ZGammaVertex&, const ZGammaVertex&) = default;
};

using Theta = long;

class DecoratedSet {
public:
  // Vertex set = keys of theta; boundary gives theta(-inf, j) for every j.
  DecoratedSet(DynkinDiagram d, std::map<ZGammaVertex, Theta> theta, std::map<Vertex, Theta> boundary);

  const DynkinDiagram& diagram() const { return diagram_; }
  const std::map<ZGammaVertex, Theta>& theta() const { return theta_; }
  const std::map<Vertex, Theta>& boundary() const { return boundary_; }
  std::vector<ZGammaVertex> vertices() const;
  bool contains(const ZGammaVertex& v) const { return theta_.count(v) > 0; }
  Theta value(const ZGammaVertex& v) const;
  bool empty() const { return theta_.empty(); }
  std::optional<int> min_slice() const;

  friend bool operator==(const DecoratedSet& a, const DecoratedSet& b) {
    return a.diagram_ == b.diagram_ && a.theta_ == b.theta_ && a.boundary_ == b.boundary_;
  }

private:
  DynkinDiagram diagram_;
  std::map<ZGammaVertex, Theta> theta_;
  std::map<Vertex, Theta> boundary_;
};

// -1 at i, 0 elsewhere.
std::map<Vertex, Theta> base_boundary(const DynkinDiagram& d, Vertex i);

DecoratedSet to_decorated(const LayeredWord& lw, const std::map<Vertex, Theta>& boundary);
BraidWord word_of(const DecoratedSet& s);
ZGammaVertex tau(const DecoratedSet& s, const ZGammaVertex& b);
std::vector<ZGammaVertex> mesh(const DecoratedSet& s, const ZGammaVertex& a, const ZGammaVertex& b);
std::optional<ZGammaVertex> first_mesh_violation(const DecoratedSet& s);
bool check_mesh_relations(const DecoratedSet& s);

struct Move {
  enum class Kind { commute, braid };
  Kind kind = Kind::commute;
  // commute: a -> b. braid: the quadruple (a, b, c, d).
  ZGammaVertex a, b, c, d;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveCertificate {
  std::vector<Move> moves;
};

bool can_commute(const DecoratedSet& s, const ZGammaVertex& a, int direction);
bool can_braid(const DecoratedSet& s, const ZGammaVertex& a, const ZGammaVertex& b, const ZGammaVertex& c);
DecoratedSet commute_move(const DecoratedSet& s, const ZGammaVertex& a, int direction);
DecoratedSet braid_move(const DecoratedSet& s, const ZGammaVertex& a, const ZGammaVertex& b,
                        const ZGammaVertex& c);
DecoratedSet apply_move(const DecoratedSet& s, const Move& m);
DecoratedSet replay(const DecoratedSet& s, const MoveCertificate& cert);
std::vector<Move> legal_moves(const DecoratedSet& s);

// Returns the base vertex i; throws PreconditionError naming the failed hypothesis.
Vertex check_divisor_hypotheses(const DecoratedSet& s);

struct LeftDivisor {
  Vertex j = 0;
  MoveCertificate certificate;
  DecoratedSet final_set;
  int braids = 0;
};

LeftDivisor find_left_divisor(const DecoratedSet& s);

// Adjacent-slice recurrence started from the first nonempty slice, which must be a singleton.
std::map<ZGammaVertex, Theta> chi_of_layered(const LayeredWord& lw);

// Slices Delta_0 = {i}, Delta_1, ..., Delta_p with Delta_{u-2} in Delta_u in N(Delta_{u-1})
// and chi > 0 on each of them, where a vertex new to Delta_u has no neighbour in Delta_{u-3}, followed by one slice {l}, l in N(Delta_p), chi(l) = 0.
bool is_chain_form(const LayeredWord& lw);

using DeltaChain = std::vector<std::vector<Vertex>>;

// Every chain Delta_0 = {i}, ..., Delta_u with u <= depth satisfying the chain conditions above.
std::vector<DeltaChain> delta_chains(const DynkinDiagram& d, Vertex i, int depth);
// chi values of a chain, indexed like the chain.
std::vector<std::map<Vertex, Theta>> chain_chi(const DynkinDiagram& d, const DeltaChain& chain);
// Chain-form layered words built from delta_chains(d, i, depth); Delta_0 sits in slice color(i).
std::vector<LayeredWord> chain_words(const DynkinDiagram& d, Vertex i, int depth);

std::string to_dot(const DecoratedSet& s);

}  // namespace twistlab
