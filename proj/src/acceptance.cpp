#include "twistlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "twistlab/complex.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/mesh.hpp"
#include "twistlab/reconstruct.hpp"
#include "twistlab/sweep.hpp"
#include "twistlab/twists.hpp"
#include "twistlab/zigzag.hpp"

namespace twistlab {

AcceptancePlan AcceptancePlan::full() {
  const auto A2 = parse_diagram("A2"), A3 = parse_diagram("A3"), A4 = parse_diagram("A4");
  const auto D4 = parse_diagram("D4"), D5 = parse_diagram("D5"), E6 = parse_diagram("E6");
  AcceptancePlan p;
  p.config_diagrams = {A2, A3, A4, D4, D5, E6};
  p.twist_corpus = {{A2, 5}, {A3, 4}};
  p.braid_corpus = {{A3, 4}, {D4, 4}};
  p.word_corpus = {{A2, 7}, {A3, 6}, {D4, 5}};
  p.two_term_diagrams = {A2, A3, A4, D4};
  p.chain_diagrams = {A3, A4, D4, D5, E6};
  p.mesh_corpus = {{A2, 6}, {A3, 5}, {D4, 4}};
  p.field_corpus = Corpus{A2, 5};
  p.time_limits = {{1, 1}, {2, 60}, {3, 300}, {4, 1800}, {7, 300}, {8, 300}};
  return p;
}

AcceptancePlan AcceptancePlan::scaled(const DynkinDiagram& d, int max_len) {
  if (max_len < 0) throw ValidationError("length bound must be non-negative");
  AcceptancePlan p;
  p.config_diagrams = {d};
  p.twist_corpus = {{d, max_len}};
  p.braid_corpus = {{d, std::max(max_len - 3, 0)}};
  p.word_corpus = {{d, max_len}};
  p.two_term_diagrams = {d};
  p.two_term_max_total = 2;
  p.two_term_per_shape = 16;
  p.chain_diagrams = {d};
  p.mesh_corpus = {{d, max_len}};
  p.field_corpus = Corpus{d, std::min(max_len, 5)};
  return p;
}

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  template <class What>
  void check(bool ok, What&& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  void fail(const std::string& what) {
    ++checks;
    if (failures++ == 0) first = what;
  }
  void merge(const Tally& o) {
    checks += o.checks;
    if (o.failures && !failures) first = o.first;
    failures += o.failures;
  }
  bool ok() const { return failures == 0; }
};

struct Verdict {
  Tally tally;
  std::string summary;
  std::vector<std::string> verdicts;
};

template <class Fn>
Tally parallel_tally(std::size_t n, int jobs, Fn fn) {
  auto res = parallel_map<Tally>(n, jobs, fn);
  Tally t;
  for (auto& r : res) {
    if (r.ok()) t.merge(*r.value);
    else t.fail(r.error);
  }
  return t;
}

std::string corpus_name(const std::vector<Corpus>& cs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? ", " : "") << cs[k].diagram.name() << " l<=" << cs[k].max_len;
  return os.str();
}

std::string diagram_names(const std::vector<DynkinDiagram>& ds) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ds.size(); ++k) os << (k ? ", " : "") << ds[k].name();
  return os.str();
}

std::string hom_row_string(const HomRow& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, n] : r) {
    os << (first ? "" : ", ") << deg << ':' << n;
    first = false;
  }
  os << '}';
  return os.str();
}

// Configuration sanity.
template <Field F>
Verdict crit_config(const AcceptancePlan& plan) {
  Verdict v;
  for (const auto& d : plan.config_diagrams) {
    for (Vertex i : d.vertices()) {
      const auto pi = projective<F>(d, i);
      for (Vertex j : d.vertices()) {
        const HomRow got = hom_dims(j, pi);
        HomRow want;
        if (i == j) want[0] = 2;
        else if (d.adjacent(i, j)) want[0] = 1;
        v.tally.check(got == want, [&] {
          return d.name() + ": Hom*(P" + std::to_string(j) + ", P" + std::to_string(i) + ") = " + hom_row_string(got) +
                 ", expected " + hom_row_string(want);
        });
        v.tally.check(pairing_is_perfect<F>(d, i, j), [&] {
          return d.name() + ": trace pairing on Hom(P" + std::to_string(i) + ", P" + std::to_string(j) + ") is degenerate";
        });
      }
      const auto l = MorphElement<F>::loop(i);
      v.tally.check(compose(l, l).is_zero(), [&] { return d.name() + ": loop_" + std::to_string(i) + " squared is nonzero"; });
      for (Vertex k : d.neighbors(i)) {
        const auto there = MorphElement<F>::arrow(d, i, k), back = MorphElement<F>::arrow(d, k, i);
        v.tally.check(compose(back, there) == l, [&] {
          return d.name() + ": gamma_" + std::to_string(k) + "," + std::to_string(i) + " o gamma_" + std::to_string(i) + "," +
                 std::to_string(k) + " is not loop_" + std::to_string(i);
        });
        v.tally.check(compose(l, back).is_zero() && compose(there, l).is_zero(), [&] {
          return d.name() + ": loop at " + std::to_string(i) + " composed with an arrow is nonzero";
        });
        for (Vertex m : d.neighbors(k)) {
          if (m == i) continue;
          const auto onward = MorphElement<F>::arrow(d, k, m);
          v.tally.check(compose(onward, there).is_zero(), [&] {
            return d.name() + ": path " + std::to_string(i) + "-" + std::to_string(k) + "-" + std::to_string(m) + " is nonzero";
          });
        }
      }
    }
  }
  v.summary = std::to_string(v.tally.checks) + " checks on " + diagram_names(plan.config_diagrams);
  return v;
}

// Twist axioms.
template <Field F>
Verdict crit_twist_axioms(const std::vector<Corpus>& corpus, int stalk_range, int jobs) {
  Verdict v;
  std::size_t objects = 0;
  for (const auto& entry : corpus) {
    const auto& d = entry.diagram;
    for (Vertex i : d.vertices()) {
      const auto pi = projective<F>(d, i);
      const bool ok = profiles_equal(twist(i, pi), shift(pi, 1));
      v.tally.check(ok, [&] { return d.name() + ": t_" + std::to_string(i) + "(P" + std::to_string(i) + ") is not P" + std::to_string(i) + "[1]"; });
      v.verdicts.push_back(ok ? "1" : "0");
      for (Vertex k : d.vertices()) {
        if (k == i || d.adjacent(i, k)) continue;
        const auto pk = projective<F>(d, k);
        const bool fixed = profiles_equal(twist(i, pk), pk);
        v.tally.check(fixed, [&] { return d.name() + ": t_" + std::to_string(i) + " moves P" + std::to_string(k); });
        v.verdicts.push_back(fixed ? "1" : "0");
      }
    }
    std::vector<ProjComplex<F>> objs = image_table<F>(d, entry.max_len, jobs).images;
    for (Vertex i : d.vertices()) {
      for (int s = -stalk_range; s <= stalk_range; ++s) objs.push_back(shift(projective<F>(d, i), s));
    }
    objects += objs.size();
    auto res = parallel_map<std::string>(objs.size(), jobs, [&](std::size_t k) {
      std::string out;
      for (Vertex i : d.vertices()) {
        const bool a = profiles_equal(twist_inv(i, twist(i, objs[k])), objs[k]);
        const bool b = profiles_equal(twist(i, twist_inv(i, objs[k])), objs[k]);
        out += a && b ? '1' : '0';
      }
      return out;
    });
    for (std::size_t k = 0; k < res.size(); ++k) {
      if (!res[k].ok()) {
        v.tally.fail(d.name() + " object " + std::to_string(k) + ": " + res[k].error);
        v.verdicts.push_back("error");
        continue;
      }
      const auto& s = *res[k].value;
      for (std::size_t i = 0; i < s.size(); ++i) {
        v.tally.check(s[i] == '1', [&] {
          return d.name() + ": t_" + std::to_string(i + 1) + " and its inverse do not cancel on " + describe(objs[k]);
        });
      }
      v.verdicts.push_back(s);
    }
  }
  v.summary = std::to_string(v.tally.checks) + " checks, " + std::to_string(objects) + " complexes (" + corpus_name(corpus) +
              ", shifted projectives)";
  return v;
}

// Braid and commutation relations on images.
template <Field F>
Verdict crit_braid_relations(const std::vector<Corpus>& corpus, int jobs) {
  Verdict v;
  for (const auto& entry : corpus) {
    const auto& d = entry.diagram;
    const auto table = image_table<F>(d, entry.max_len, jobs);
    auto res = parallel_map<std::string>(table.images.size(), jobs, [&](std::size_t k) {
      std::string out;
      const auto& t = table.images[k];
      for (Vertex i : d.vertices()) {
        for (Vertex j : d.vertices()) {
          if (j <= i) continue;
          bool ok;
          if (d.adjacent(i, j)) ok = profiles_equal(twist(i, twist(j, twist(i, t))), twist(j, twist(i, twist(j, t))));
          else ok = profiles_equal(twist(i, twist(j, t)), twist(j, twist(i, t)));
          out += ok ? '1' : '0';
        }
      }
      return out;
    });
    for (std::size_t k = 0; k < res.size(); ++k) {
      if (!res[k].ok()) {
        v.tally.fail(d.name() + " w = " + table.words[k].to_string() + ": " + res[k].error);
        v.verdicts.push_back("error");
        continue;
      }
      const auto& s = *res[k].value;
      for (char c : s) {
        v.tally.check(c == '1', [&] { return d.name() + ": relation fails after w = " + table.words[k].to_string(); });
      }
      v.verdicts.push_back(s);
    }
  }
  v.summary = std::to_string(v.tally.checks) + " relation instances (" + corpus_name(corpus) + ")";
  return v;
}

// Word problem: oracle classes against canonical keys.
template <Field F>
Verdict crit_word_problem(const std::vector<Corpus>& corpus, int jobs) {
  Verdict v;
  std::size_t pairs = 0, words = 0;
  for (const auto& entry : corpus) {
    const auto& d = entry.diagram;
    const auto table = image_table<F>(d, entry.max_len, jobs);
    std::size_t offset = 0;
    for (int len = 0; len <= entry.max_len; ++len) {
      const ClassIndex ci(d, len);
      const std::size_t n = ci.words().size();
      pairs += n * (n - 1) / 2;
      words += n;
      std::map<int, std::string> key_of_class;
      std::map<std::string, int> class_of_key;
      std::map<std::string, std::size_t> first_with_key;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& w = ci.words()[k];
        if (!(table.words[offset + k] == w)) throw InvariantBreach("word tables are out of step");
        const int c = ci.class_ids()[k];
        const auto& key = table.keys[offset + k];
        auto [kc, fresh_c] = key_of_class.emplace(c, key);
        auto [ck, fresh_k] = class_of_key.emplace(key, c);
        v.tally.check(fresh_c || kc->second == key, [&] {
          return d.name() + ": " + w.to_string() + " is equivalent to an earlier word with a different image";
        });
        v.tally.check(fresh_k || ck->second == c, [&] {
          return d.name() + ": " + w.to_string() + " has the image of an inequivalent earlier word";
        });
        first_with_key.emplace(key, k);
        v.verdicts.push_back(std::to_string(first_with_key.at(key)));
      }
      offset += n;
    }
  }
  v.summary = std::to_string(v.tally.failures) + " mismatches over " + std::to_string(pairs) + " same-length pairs, " +
              std::to_string(words) + " words (" + corpus_name(corpus) + ")";
  return v;
}

// Reconstruction round trip.
template <Field F>
Verdict crit_reconstruction(const std::vector<Corpus>& corpus, int jobs) {
  Verdict v;
  for (const auto& entry : corpus) {
    const auto& d = entry.diagram;
    const auto table = image_table<F>(d, entry.max_len, jobs);
    const auto rec = recover_all(table.images, jobs);
    for (std::size_t k = 0; k < rec.size(); ++k) {
      const auto& w = table.words[k];
      if (!rec[k].ok()) {
        v.tally.fail(d.name() + ": recovering " + w.to_string() + " failed: " + rec[k].error);
        v.verdicts.push_back("error");
        continue;
      }
      const auto& got = rec[k].value->word;
      v.tally.check(got.length() == w.length() && equivalent(got, w), [&] {
        return d.name() + ": recovered " + got.to_string() + " from the image of " + w.to_string();
      });
      v.verdicts.push_back(got.to_string());
    }
  }
  v.summary = std::to_string(v.tally.failures) + " failures over " + std::to_string(v.tally.checks) + " words (" +
              corpus_name(corpus) + ")";
  return v;
}

// Minimal-degree drift and summand transport under t_i and its inverse.
template <Field F>
Tally degree_checks(const ProjComplex<F>& t, const std::string& label) {
  Tally tally;
  const auto& d = t.diagram();
  const int m = min_degree(t);
  for (Vertex i : d.vertices()) {
    const std::string tag = label + ", i = " + std::to_string(i);
    const auto u = twist_inv(i, t);
    const HomRow hu = hom_dims(i, u), ht = hom_dims(i, t);
    HomRow shifted;
    for (const auto& [r, n] : ht) shifted[r + 1] = n;
    tally.check(hu == shifted, [&] { return tag + ": Hom*(P_i, t_i^-1 T) is not Hom*(P_i, T) shifted by one"; });
    for (const auto& [r, n] : hu) {
      tally.check(m <= r - 1, [&] { return tag + ": Hom^" + std::to_string(r) + "(P_i, t_i^-1 T) != 0 but m = " + std::to_string(m); });
    }
    const int mu = min_degree(u);
    for (int r = std::min(m, mu); r <= m; ++r) {
      for (Vertex k : d.vertices()) {
        if (k == i) continue;
        const bool a = long_morphism_dim(k, u, r) > 0, b = long_morphism_dim(k, t, r) > 0;
        tally.check(a == b, [&] {
          return tag + ": P" + std::to_string(k) + " in degree " + std::to_string(r) + " is a summand of only one of T, t_i^-1 T";
        });
      }
    }
    const auto w = twist(i, t);
    const int mw = min_degree(w);
    tally.check(mw >= m - 1 && mw <= m, [&] {
      return tag + ": min degree of t_i T is " + std::to_string(mw) + ", outside [" + std::to_string(m - 1) + ", " + std::to_string(m) + "]";
    });
    for (int r = mw; r < m; ++r) {
      for (Vertex k : d.vertices()) {
        if (k == i) continue;
        tally.check(long_morphism_dim(k, w, r) == 0, [&] {
          return tag + ": P" + std::to_string(k) + " is a summand of t_i T in degree " + std::to_string(r) + " < m";
        });
      }
    }
  }
  return tally;
}

template <Field F>
Verdict crit_degree_drift(const std::vector<Corpus>& corpus, int jobs) {
  Verdict v;
  std::size_t objects = 0;
  for (const auto& entry : corpus) {
    const auto table = image_table<F>(entry.diagram, entry.max_len, jobs);
    objects += table.images.size();
    v.tally.merge(parallel_tally(table.images.size(), jobs, [&](std::size_t k) {
      return degree_checks(table.images[k], entry.diagram.name() + " w = " + table.words[k].to_string());
    }));
  }
  v.summary = std::to_string(v.tally.failures) + " violations in " + std::to_string(v.tally.checks) + " checks on " +
              std::to_string(objects) + " objects (" + corpus_name(corpus) + ")";
  return v;
}

template <Field F>
std::vector<F> coefficient_choices() {
  if constexpr (std::is_same_v<F, Gf2>) {
    return {F::zero(), F::one()};
  } else {
    return {F::zero(), F::one(), F::from_int(-1), F::from_int(2)};
  }
}

std::vector<std::vector<int>> multiplicity_vectors(std::size_t n, int max_total) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out) {
      const int used = std::accumulate(v.begin(), v.end(), 0);
      for (int m = 0; used + m <= max_total; ++m) {
        auto w = v;
        w.push_back(m);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<Vertex>> subsets_containing(const std::vector<Vertex>& pool, const std::set<Vertex>& required) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t n = pool.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1) s.push_back(pool[b]);
    }
    if (std::all_of(required.begin(), required.end(), [&](Vertex r) { return std::count(s.begin(), s.end(), r) > 0; })) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

template <Field F>
std::vector<TwoTermObject<F>> enumerate_two_terms(const DynkinDiagram& d, int max_total, std::size_t per_shape,
                                                  std::mt19937_64& rng) {
  std::vector<TwoTermObject<F>> out;
  const auto choices = coefficient_choices<F>();
  for (int side : {0, 1}) {
    const auto lv = d.vertices_of_color(side), rv = d.vertices_of_color(side + 1);
    for (const auto& lm : multiplicity_vectors(lv.size(), max_total)) {
      for (const auto& rm : multiplicity_vectors(rv.size(), max_total)) {
        std::vector<Vertex> left, right;
        for (std::size_t k = 0; k < lv.size(); ++k) left.insert(left.end(), lm[k], lv[k]);
        for (std::size_t k = 0; k < rv.size(); ++k) right.insert(right.end(), rm[k], rv[k]);
        if (left.empty() && right.empty()) continue;
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < right.size(); ++r) {
          for (std::size_t c = 0; c < left.size(); ++c) {
            if (d.adjacent(right[r], left[c])) slots.emplace_back(r, c);
          }
        }
        double space = 1;
        for (std::size_t k = 0; k < slots.size(); ++k) space *= static_cast<double>(choices.size());
        const bool exhaustive = space <= static_cast<double>(per_shape);
        const std::size_t count = exhaustive ? static_cast<std::size_t>(space) : per_shape;
        for (std::size_t n = 0; n < count; ++n) {
          MorphMatrix<F> phi(right, left);
          std::size_t code = n;
          for (const auto& [r, c] : slots) {
            std::size_t pick;
            if (exhaustive) {
              pick = code % choices.size();
              code /= choices.size();
            } else {
              pick = static_cast<std::size_t>(rng() % choices.size());
            }
            phi.set(r, c, MorphElement<F>::arrow(d, left[c], right[r], choices[pick]));
          }
          out.push_back(make_two_term<F>(d, side, left, right, std::move(phi)));
        }
      }
    }
  }
  return out;
}

std::set<Vertex> support(const Multiplicities& m) {
  std::set<Vertex> s;
  for (const auto& [k, n] : m) s.insert(k);
  return s;
}

template <Field F>
Tally reflection_checks(const TwoTermObject<F>& t, const std::string& label) {
  Tally tally;
  const bool rp = is_right_proper(t), lp = is_left_proper(t);
  tally.check(rp == right_proper_direct(t), [&] { return label + ": right-properness criteria disagree"; });
  tally.check(lp == left_proper_direct(t), [&] { return label + ": left-properness criteria disagree"; });
  const auto x = assemble(t);
  auto compare = [&](const std::vector<Vertex>& delta, Reflection part) {
    const auto predicted = two_term_reflect(t, delta, part);
    const auto image = two_term_of(reflect_apply(x, delta, part));
    std::ostringstream ds;
    for (Vertex v : delta) ds << ' ' << v;
    const std::string tag = label + (part == Reflection::plus ? ", plus" : ", minus") + " on {" + ds.str() + " }";
    if (!image) {
      tally.fail(tag + ": reflection is not a two-term object");
      return;
    }
    const auto actual = shape_of(*image);
    tally.check(actual == predicted, [&] { return tag + ": predicted " + describe(predicted) + ", computed " + describe(actual); });
  };
  if (rp) {
    for (const auto& delta : subsets_containing(t.diagram.vertices_of_color(t.side + 1), support(t.right()))) {
      compare(delta, Reflection::plus);
    }
  }
  if (lp) {
    for (const auto& delta : subsets_containing(t.diagram.vertices_of_color(t.side), support(t.left()))) {
      compare(delta, Reflection::minus);
    }
  }
  return tally;
}

template <Field F>
Tally chain_checks(const DynkinDiagram& d, Vertex i, const DeltaChain& chain) {
  Tally tally;
  std::ostringstream cs;
  for (const auto& s : chain) {
    cs << '{';
    for (std::size_t k = 0; k < s.size(); ++k) cs << (k ? "," : "") << s[k];
    cs << '}';
  }
  const std::string label = d.name() + " chain " + cs.str();
  const auto chi = chain_chi(d, chain);
  std::vector<std::vector<Vertex>> slices(static_cast<std::size_t>(d.color(i)));
  slices.insert(slices.end(), chain.begin(), chain.end());
  const auto layered = chi_of_layered(LayeredWord(d, slices));
  for (std::size_t u = 0; u < chain.size(); ++u) {
    for (const auto& [k, x] : chi[u]) {
      const ZGammaVertex key{static_cast<int>(u) + d.color(i), k};
      tally.check(layered.count(key) && layered.at(key) == x, [&] { return label + ": chi recurrences disagree at " + key.to_string(); });
    }
  }
  auto c = projective<F>(d, i);
  for (std::size_t u = 1; u < chain.size(); ++u) {
    const auto before = two_term_of(c);
    if (!before) {
      tally.fail(label + ": C_" + std::to_string(u - 1) + " is not two-term");
      return tally;
    }
    const auto predicted = two_term_reflect(*before, chain[u], Reflection::minus);
    c = reflect_apply(c, chain[u], Reflection::minus);
    const auto after = two_term_of(c);
    if (!after) {
      tally.fail(label + ": C_" + std::to_string(u) + " is not two-term");
      return tally;
    }
    TwoTermShape expected{d.color(chain[u - 1].front()), {}, {}};
    for (const auto& [k, x] : chi[u - 1]) expected.left[k] = static_cast<int>(x);
    for (const auto& [k, x] : chi[u]) expected.right[k] = static_cast<int>(x);
    const auto actual = shape_of(*after);
    tally.check(actual == expected, [&] {
      return label + ": C_" + std::to_string(u) + " is " + describe(actual) + ", chi gives " + describe(expected);
    });
    tally.check(predicted == expected, [&] { return label + ": reflection prediction " + describe(predicted) + " differs from chi"; });
  }
  return tally;
}

template <Field F>
Verdict crit_two_term(const AcceptancePlan& plan) {
  Verdict v;
  std::mt19937_64 rng(plan.seed);
  std::size_t objects = 0, chains = 0;
  for (const auto& d : plan.two_term_diagrams) {
    const auto objs = enumerate_two_terms<F>(d, plan.two_term_max_total, plan.two_term_per_shape, rng);
    objects += objs.size();
    v.tally.merge(parallel_tally(objs.size(), plan.jobs, [&](std::size_t k) {
      return reflection_checks(objs[k], d.name() + " two-term #" + std::to_string(k));
    }));
  }
  for (const auto& d : plan.chain_diagrams) {
    std::vector<std::pair<Vertex, DeltaChain>> all;
    for (Vertex i : d.vertices()) {
      for (auto& c : delta_chains(d, i, plan.chain_depth)) {
        if (c.size() >= 2) all.emplace_back(i, std::move(c));
      }
    }
    chains += all.size();
    v.tally.merge(parallel_tally(all.size(), plan.jobs, [&](std::size_t k) { return chain_checks<F>(d, all[k].first, all[k].second); }));
  }
  v.summary = std::to_string(v.tally.failures) + " failures in " + std::to_string(v.tally.checks) + " checks: " +
              std::to_string(objects) + " two-term objects (" + diagram_names(plan.two_term_diagrams) + "), " +
              std::to_string(chains) + " chains of depth <= " + std::to_string(plan.chain_depth) + " (" +
              diagram_names(plan.chain_diagrams) + ")";
  return v;
}

Tally solver_checks(const DecoratedSet& s, const BraidWord& w, Vertex i, const std::string& label) {
  Tally tally;
  const auto r = find_left_divisor(s);
  tally.check(r.j != i, [&] { return label + ": divisor equals the base vertex"; });
  const auto fin = replay(s, r.certificate);
  tally.check(fin == r.final_set, [&] { return label + ": certificate replay differs from the reported set"; });
  tally.check(check_mesh_relations(fin), [&] { return label + ": final set violates a mesh relation"; });
  tally.check(equivalent(word_of(fin), w), [&] { return label + ": final set spells a different braid"; });
  tally.check(left_divisible_by(w, r.j).has_value(), [&] { return label + ": s" + std::to_string(r.j) + " does not divide on the left"; });
  return tally;
}

Vertex base_of_chain(const LayeredWord& lw) {
  for (const auto& s : lw.slices) {
    if (!s.empty()) return s.front();
  }
  return 0;
}

Tally mesh_word_checks(const BraidWord& w, std::size_t* solved) {
  Tally tally;
  const auto& d = w.diagram;
  const auto lw = layer(w);
  for (Vertex i : d.vertices()) {
    const std::string label = d.name() + " " + w.to_string() + ", i = " + std::to_string(i);
    const auto s = to_decorated(lw, base_boundary(d, i));
    tally.check(check_mesh_relations(s), [&] { return label + ": decorated set violates a mesh relation"; });
    for (const auto& m : legal_moves(s)) {
      const auto s2 = apply_move(s, m);
      const std::string mv = m.kind == Move::Kind::commute ? "commutation of " + m.a.to_string() : "braiding at " + m.a.to_string();
      tally.check(equivalent(word_of(s2), w), [&] { return label + ": " + mv + " changes the braid"; });
      tally.check(check_mesh_relations(s2), [&] { return label + ": " + mv + " breaks a mesh relation"; });
    }
    if (is_chain_form(lw) && base_of_chain(lw) == i) {
      tally.check(chi_of_layered(lw) == s.theta(), [&] { return label + ": theta differs from chi"; });
    }
    bool eligible = true;
    try {
      check_divisor_hypotheses(s);
    } catch (const PreconditionError&) {
      eligible = false;
    }
    if (eligible) {
      ++*solved;
      tally.merge(solver_checks(s, w, i, label));
    }
  }
  return tally;
}

Verdict crit_mesh(const AcceptancePlan& plan) {
  Verdict v;
  std::size_t words = 0, solved = 0, chain_words_seen = 0;
  for (const auto& entry : plan.mesh_corpus) {
    const auto ws = words_up_to(entry.diagram, entry.max_len);
    words += ws.size();
    auto res = parallel_map<std::pair<Tally, std::size_t>>(ws.size(), plan.jobs, [&](std::size_t k) {
      std::size_t n = 0;
      auto t = mesh_word_checks(ws[k], &n);
      return std::make_pair(t, n);
    });
    for (auto& r : res) {
      if (!r.ok()) {
        v.tally.fail(r.error);
        continue;
      }
      v.tally.merge(r.value->first);
      solved += r.value->second;
    }
  }
  for (const auto& d : plan.chain_diagrams) {
    std::vector<std::pair<Vertex, LayeredWord>> all;
    for (Vertex i : d.vertices()) {
      for (auto& lw : chain_words(d, i, plan.chain_depth)) all.emplace_back(i, std::move(lw));
    }
    chain_words_seen += all.size();
    v.tally.merge(parallel_tally(all.size(), plan.jobs, [&](std::size_t k) {
      const auto& [i, lw] = all[k];
      const auto w = flatten(lw);
      const std::string label = d.name() + " chain word " + w.to_string() + ", i = " + std::to_string(i);
      const auto s = to_decorated(lw, base_boundary(d, i));
      Tally t;
      t.check(is_chain_form(lw), [&] { return label + ": generated word is not in chain form"; });
      t.check(chi_of_layered(lw) == s.theta(), [&] { return label + ": theta differs from chi"; });
      t.merge(solver_checks(s, w, i, label));
      return t;
    }));
  }
  {
    const auto a2 = parse_diagram("A2");
    const LayeredWord lw(a2, {{1}, {2}, {1}});
    const auto s = to_decorated(lw, base_boundary(a2, 1));
    const auto r = find_left_divisor(s);
    v.tally.check(r.j == 2 && r.braids == 1, [&] {
      return "A2 s1 s2 s1: expected divisor 2 after one braiding, got " + std::to_string(r.j) + " after " + std::to_string(r.braids);
    });
    v.tally.merge(solver_checks(s, flatten(lw), 1, "A2 s1 s2 s1"));
  }
  {
    const auto d4 = parse_diagram("D4");
    const LayeredWord lw(d4, {{2}, {1, 3, 4}, {2}, {1, 3, 4}, {2}, {4}});
    const auto s = to_decorated(lw, base_boundary(d4, 2));
    v.tally.check(is_chain_form(lw) && chi_of_layered(lw) == s.theta(), [&] { return "D4 example: theta differs from chi"; });
    v.tally.merge(solver_checks(s, flatten(lw), 2, "D4 example"));
  }
  v.summary = std::to_string(v.tally.failures) + " failures in " + std::to_string(v.tally.checks) + " checks: " +
              std::to_string(words) + " words (" + corpus_name(plan.mesh_corpus) + "), " + std::to_string(solved) +
              " solver runs, " + std::to_string(chain_words_seen) + " chain words, 2 worked examples";
  return v;
}

template <Field F>
std::vector<Verdict> field_verdicts(const Corpus& c, int jobs) {
  const std::vector<Corpus> one{c};
  return {crit_twist_axioms<F>(one, 2, jobs), crit_braid_relations<F>({{c.diagram, std::max(c.max_len - 3, 0)}}, jobs),
          crit_word_problem<F>(one, jobs), crit_reconstruction<F>(one, jobs)};
}

Verdict crit_fields(const Corpus& c, int jobs) {
  Verdict v;
  const auto a = field_verdicts<Gf2>(c, jobs);
  const auto b = field_verdicts<Rational>(c, jobs);
  std::size_t compared = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a[k].verdicts;
    const auto& y = b[k].verdicts;
    compared += x.size();
    v.tally.check(x == y, [&] {
      std::size_t at = 0;
      while (at < x.size() && at < y.size() && x[at] == y[at]) ++at;
      return "criterion " + std::to_string(k + 2) + " verdict " + std::to_string(at) + " differs between f2 and q";
    });
    v.tally.check(a[k].tally.ok(), [&] { return "criterion " + std::to_string(k + 2) + " over f2: " + a[k].tally.first; });
    v.tally.check(b[k].tally.ok(), [&] { return "criterion " + std::to_string(k + 2) + " over q: " + b[k].tally.first; });
  }
  v.summary = std::to_string(compared) + " verdicts of criteria 2-5 identical over f2 and q (" + corpus_name({c}) + ")";
  return v;
}

template <Field F>
Verdict dispatch(int id, const AcceptancePlan& plan) {
  switch (id) {
    case 1: return crit_config<F>(plan);
    case 2: return crit_twist_axioms<F>(plan.twist_corpus, plan.stalk_range, plan.jobs);
    case 3: return crit_braid_relations<F>(plan.braid_corpus, plan.jobs);
    case 4: return crit_word_problem<F>(plan.word_corpus, plan.jobs);
    case 5: return crit_reconstruction<F>(plan.word_corpus, plan.jobs);
    case 6: return crit_degree_drift<F>(plan.word_corpus, plan.jobs);
    case 7: return crit_two_term<F>(plan);
    case 8: return crit_mesh(plan);
    default: return crit_fields(*plan.field_corpus, plan.jobs);
  }
}

const char* title(int id) {
  switch (id) {
    case 1: return "configuration sanity";
    case 2: return "twist axioms";
    case 3: return "braid relations";
    case 4: return "word problem";
    case 5: return "reconstruction round trip";
    case 6: return "minimal degree drift";
    case 7: return "two-term calculus";
    case 8: return "mesh braiding";
    default: return "characteristic independence";
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptancePlan& plan,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) {
    if (id == 9 && !plan.field_corpus) continue;
    CriterionResult r;
    r.id = id;
    r.title = title(id);
    if (auto it = plan.time_limits.find(id); it != plan.time_limits.end()) r.limit = it->second;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Verdict v = plan.field == FieldKind::f2 ? dispatch<Gf2>(id, plan) : dispatch<Rational>(id, plan);
      r.pass = v.tally.ok();
      r.detail = v.summary;
      if (!v.tally.ok()) r.detail += "; first failure: " + v.tally.first;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("aborted: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit && r.seconds > *r.limit) {
      r.pass = false;
      r.detail += "; over the time limit";
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.title << "): " << r.detail << " ["
     << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.limit) os << ", limit " << std::setprecision(0) << *r.limit << " s";
  os << ']';
  return os.str();
}

}  // namespace twistlab
