#include "twistlab/serialize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

int parse_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ValidationError(std::string("bad ") + what + " '" + s + "'");
  }
  if (pos != s.size()) throw ValidationError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

Json multiplicities_to_json(const Multiplicities& m) {
  Json j = Json::object();
  for (const auto& [v, n] : m) j[std::to_string(v)] = n;
  return j;
}

ZGammaVertex vertex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ValidationError("vertex must be a pair [n, j]");
  return {j.at(0).get<int>(), j.at(1).get<Vertex>()};
}

}  // namespace

Json diagram_to_json(const DynkinDiagram& d) {
  return {{"family", std::string(1, family_letter(d.family()))}, {"rank", d.rank()}};
}

DynkinDiagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    if (j.is_string()) return parse_diagram(j.get<std::string>());
    return parse_diagram(j.at("family").get<std::string>() + std::to_string(j.at("rank").get<int>()));
  });
}

Json word_to_json(const BraidWord& w) { return {{"diagram", diagram_to_json(w.diagram)}, {"letters", w.letters}}; }

BraidWord word_from_json(const Json& j) {
  return guarded("word", [&] {
    return BraidWord(diagram_from_json(j.at("diagram")), j.at("letters").get<std::vector<Vertex>>());
  });
}

BraidWord word_from_json(const Json& j, const DynkinDiagram& d) {
  if (j.is_object()) {
    auto w = word_from_json(j);
    if (!(w.diagram == d)) throw ValidationError("word diagram " + w.diagram.name() + " differs from " + d.name());
    return w;
  }
  if (j.is_string()) return parse_word(d, j.get<std::string>());
  return guarded("word", [&] { return BraidWord(d, j.get<std::vector<Vertex>>()); });
}

BraidWord parse_word(const DynkinDiagram& d, std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<Vertex> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == 's' || digits[0] == 'S')) digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ValidationError("bad letter '" + tok + "'");
    }
    letters.push_back(parse_int(digits, "letter"));
  }
  return BraidWord(d, std::move(letters));
}

Json layered_to_json(const LayeredWord& lw) {
  return {{"diagram", diagram_to_json(lw.diagram)}, {"slices", lw.slices}};
}

LayeredWord layered_from_json(const Json& j) {
  return guarded("layered word", [&] {
    return LayeredWord(diagram_from_json(j.at("diagram")), j.at("slices").get<std::vector<std::vector<Vertex>>>());
  });
}

template <Field F>
Json morph_to_json(const MorphElement<F>& f) {
  Json terms = Json::array();
  for (MorphKind k : {MorphKind::identity, MorphKind::loop, MorphKind::arrow}) {
    if (f.is_endo() == (k == MorphKind::arrow)) continue;
    const F c = f.coefficient(k);
    if (!c.is_zero()) terms.push_back({{"kind", std::string(kind_name(k))}, {"coef", c.to_string()}});
  }
  return {{"src", f.src()}, {"tgt", f.tgt()}, {"terms", terms}};
}

template <Field F>
MorphElement<F> morph_from_json(const DynkinDiagram& d, const Json& j) {
  return guarded("morphism", [&] {
    const Vertex src = j.at("src").get<Vertex>(), tgt = j.at("tgt").get<Vertex>();
    if (!d.has_vertex(src) || !d.has_vertex(tgt)) throw ValidationError("morphism endpoint outside " + d.name());
    auto f = MorphElement<F>::zero(src, tgt);
    for (const auto& t : j.at("terms")) {
      const MorphKind k = parse_kind(t.at("kind").get<std::string>());
      const F c = F::parse(t.at("coef").get<std::string>());
      if (k == MorphKind::arrow) {
        if (src == tgt || !d.adjacent(src, tgt)) throw ValidationError("arrow between non-adjacent vertices");
        f += MorphElement<F>::arrow(d, src, tgt, c);
      } else {
        if (src != tgt) throw ValidationError(std::string(kind_name(k)) + " term on a non-endomorphism");
        f += k == MorphKind::identity ? MorphElement<F>::identity(src, c) : MorphElement<F>::loop(src, c);
      }
    }
    return f;
  });
}

template <Field F>
Json complex_to_json(const ProjComplex<F>& x) {
  Json degrees = Json::object(), diffs = Json::object();
  if (!x.is_zero()) {
    for (int d = x.lowest(); d <= x.highest(); ++d) {
      degrees[std::to_string(d)] = x.summands(d);
      const auto& m = x.differential(d);
      if (d == x.highest() || m.is_zero()) continue;
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(morph_to_json(m.at(r, c)));
        rows.push_back(row);
      }
      diffs[std::to_string(d)] = rows;
    }
  }
  return {{"degrees", degrees}, {"diffs", diffs}};
}

template <Field F>
ProjComplex<F> complex_from_json(const DynkinDiagram& d, const Json& j) {
  return guarded("complex", [&] {
    std::map<int, std::vector<Vertex>> terms;
    for (const auto& [key, val] : j.at("degrees").items()) {
      terms[parse_int(key, "degree")] = val.template get<std::vector<Vertex>>();
    }
    auto summands = [&](int deg) {
      auto it = terms.find(deg);
      return it == terms.end() ? std::vector<Vertex>{} : it->second;
    };
    std::map<int, MorphMatrix<F>> diffs;
    if (j.contains("diffs")) {
      for (const auto& [key, rows] : j.at("diffs").items()) {
        const int deg = parse_int(key, "degree");
        MorphMatrix<F> m(summands(deg + 1), summands(deg));
        if (rows.size() != m.rows()) throw ValidationError("differential " + key + " has the wrong number of rows");
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (rows[r].size() != m.cols()) throw ValidationError("differential " + key + " has the wrong number of columns");
          for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, morph_from_json<F>(d, rows[r][c]));
        }
        diffs.emplace(deg, std::move(m));
      }
    }
    ProjComplex<F> x(d, terms, std::move(diffs));
    if (!x.is_complex()) throw ValidationError("differential does not square to zero");
    return x;
  });
}

Json profile_to_json(const HomProfile& p) {
  Json dims = Json::object();
  for (const auto& [key, n] : p.dims) dims[std::to_string(key.first)][std::to_string(key.second)] = n;
  return {{"total", p.total()}, {"dims", dims}};
}

template <Field F>
Json two_term_to_json(const TwoTermObject<F>& t) {
  auto order = [](const std::vector<Vertex>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
  };
  const auto rows = order(t.right_summands), cols = order(t.left_summands);
  Json phi = Json::array();
  for (std::size_t r : rows) {
    Json row = Json::array();
    for (std::size_t c : cols) row.push_back(morph_to_json(t.phi.at(r, c)));
    phi.push_back(row);
  }
  return {{"side", t.side},
          {"left", multiplicities_to_json(t.left())},
          {"right", multiplicities_to_json(t.right())},
          {"phi", phi}};
}

Json shape_to_json(const TwoTermShape& s) {
  return {{"side", s.side}, {"left", multiplicities_to_json(s.left)}, {"right", multiplicities_to_json(s.right)}};
}

Json recovery_to_json(const Recovery& r, bool verified) {
  Json peels = Json::array();
  for (const auto& p : r.peels) peels.push_back({{"j", p.j}, {"min_degree", p.min_degree}});
  return {{"word", r.word.letters}, {"verified", verified}, {"peels", peels}};
}

Json vertex_to_json(const ZGammaVertex& v) { return Json::array({v.slice, v.j}); }

Json decorated_to_json(const DecoratedSet& s) {
  Json vertices = Json::array(), theta = Json::object(), boundary = Json::object();
  for (const auto& [v, t] : s.theta()) {
    vertices.push_back(vertex_to_json(v));
    theta[std::to_string(v.slice) + "," + std::to_string(v.j)] = t;
  }
  for (const auto& [j, t] : s.boundary()) boundary[std::to_string(j)] = t;
  return {{"vertices", vertices}, {"theta", theta}, {"boundary", boundary}};
}

DecoratedSet decorated_from_json(const DynkinDiagram& d, const Json& j) {
  return guarded("decorated set", [&] {
    std::map<ZGammaVertex, Theta> theta;
    for (const auto& [key, val] : j.at("theta").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw ValidationError("theta key '" + key + "' is not 'n,j'");
      theta[{parse_int(key.substr(0, comma), "slice"), parse_int(key.substr(comma + 1), "vertex")}] = val.get<Theta>();
    }
    if (j.contains("vertices")) {
      std::set<ZGammaVertex> listed;
      for (const auto& v : j.at("vertices")) listed.insert(vertex_from_json(v));
      std::set<ZGammaVertex> keys;
      for (const auto& [v, t] : theta) keys.insert(v);
      if (listed != keys) throw ValidationError("vertex list and theta keys differ");
    }
    std::map<Vertex, Theta> boundary;
    for (const auto& [key, val] : j.at("boundary").items()) boundary[parse_int(key, "vertex")] = val.get<Theta>();
    return DecoratedSet(d, std::move(theta), std::move(boundary));
  });
}

Json certificate_to_json(const MoveCertificate& c) {
  Json moves = Json::array();
  for (const auto& m : c.moves) {
    if (m.kind == Move::Kind::commute) {
      moves.push_back({{"kind", "commute"}, {"a", vertex_to_json(m.a)}, {"b", vertex_to_json(m.b)}});
    } else {
      moves.push_back({{"kind", "braid"},
                       {"a", vertex_to_json(m.a)},
                       {"b", vertex_to_json(m.b)},
                       {"c", vertex_to_json(m.c)},
                       {"d", vertex_to_json(m.d)}});
    }
  }
  return {{"moves", moves}};
}

MoveCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    MoveCertificate c;
    for (const auto& m : j.at("moves")) {
      Move mv;
      const auto kind = m.at("kind").get<std::string>();
      mv.a = vertex_from_json(m.at("a"));
      mv.b = vertex_from_json(m.at("b"));
      if (kind == "commute") {
        mv.kind = Move::Kind::commute;
      } else if (kind == "braid") {
        mv.kind = Move::Kind::braid;
        mv.c = vertex_from_json(m.at("c"));
        mv.d = vertex_from_json(m.at("d"));
      } else {
        throw ValidationError("unknown move kind '" + kind + "'");
      }
      c.moves.push_back(mv);
    }
    return c;
  });
}

#define TWISTLAB_INSTANTIATE(F)                                                  \
  template Json morph_to_json(const MorphElement<F>&);                           \
  template MorphElement<F> morph_from_json(const DynkinDiagram&, const Json&);   \
  template Json complex_to_json(const ProjComplex<F>&);                          \
  template ProjComplex<F> complex_from_json(const DynkinDiagram&, const Json&);  \
  template Json two_term_to_json(const TwoTermObject<F>&);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
