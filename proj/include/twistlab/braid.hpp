#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistlab {

using Vertex = int;

enum class Family { A, D, E };

char family_letter(Family f);

// Simply-laced Dynkin diagram with labels 1..n and a fixed bipartition.
class DynkinDiagram {
public:
  static constexpr int kMaxRank = 100;

  DynkinDiagram(Family family, int rank);

  Family family() const { return data_->family; }
  int rank() const { return data_->rank; }
  std::string name() const;

  bool has_vertex(Vertex v) const { return v >= 1 && v <= rank(); }
  bool adjacent(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int color(Vertex v) const;
  std::vector<Vertex> vertices() const;
  std::vector<Vertex> vertices_of_color(int c) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.family() == b.family() && a.rank() == b.rank();
  }

private:
  struct Data {
    Family family;
    int rank;
    std::vector<std::vector<Vertex>> adj;
    std::vector<int> color;
  };
  std::shared_ptr<const Data> data_;

  void require_vertex(Vertex v) const;
};

DynkinDiagram build_diagram(Family family, int rank);
// Parses names like "A3", "D4", "E6".
DynkinDiagram parse_diagram(std::string_view name);
std::vector<Vertex> neighbors(const DynkinDiagram& d, Vertex j);

struct BraidWord {
  DynkinDiagram diagram;
  std::vector<Vertex> letters;

  BraidWord(DynkinDiagram d, std::vector<Vertex> l);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  std::string to_string() const;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.diagram == b.diagram && a.letters == b.letters;
  }
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

struct LayeredWord {
  DynkinDiagram diagram;
  std::vector<std::vector<Vertex>> slices;

  LayeredWord(DynkinDiagram d, std::vector<std::vector<Vertex>> s);
};

bool equivalent(const BraidWord& w1, const BraidWord& w2);
std::vector<BraidWord> equivalence_class(const BraidWord& w);
std::optional<BraidWord> left_divisible_by(const BraidWord& w, Vertex j);
LayeredWord layer(const BraidWord& w);
BraidWord flatten(const LayeredWord& lw);

// All words of exactly the given length, in lexicographic order.
std::vector<BraidWord> words_of_length(const DynkinDiagram& d, int length);

// Assigns each word of a fixed length the index of its monoid class.
// Class ids are numbered in order of first appearance in lexicographic order.
class ClassIndex {
public:
  ClassIndex(const DynkinDiagram& d, int length);

  int length() const { return length_; }
  std::size_t num_classes() const { return num_classes_; }
  int class_of(const BraidWord& w) const;
  const std::vector<BraidWord>& words() const { return words_; }
  const std::vector<int>& class_ids() const { return ids_; }

private:
  DynkinDiagram diagram_;
  int length_;
  std::size_t num_classes_ = 0;
  std::vector<BraidWord> words_;
  std::vector<int> ids_;
};

}  // namespace twistlab
