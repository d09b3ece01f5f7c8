#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include "twistlab/acceptance.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/mesh.hpp"
#include "twistlab/reconstruct.hpp"
#include "twistlab/serialize.hpp"
#include "twistlab/twists.hpp"
#include "twistlab/zigzag.hpp"

using namespace twistlab;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBreach = 3 };

struct Config {
  std::string diagram = "A3";
  std::string field = "q";
  int max_len = 5;
  int jobs = 0;
  std::string format = "json";
};

Json read_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source);
    if (!in) throw ValidationError("cannot read " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_profile_text(const HomProfile& p) {
  std::map<Vertex, std::map<int, int>> rows;
  for (const auto& [key, n] : p.dims) rows[key.first][key.second] = n;
  std::cout << "profile (total " << p.total() << "):\n";
  for (const auto& [v, row] : rows) {
    std::cout << "  Hom*(P" << v << ", -):";
    for (const auto& [deg, n] : row) std::cout << ' ' << deg << ':' << n;
    std::cout << '\n';
  }
}

// "lambda", "P2", "P2[1]", or a JSON complex from a file or "-".
template <Field F>
ProjComplex<F> read_object(const DynkinDiagram& d, const std::string& entry) {
  if (entry == "lambda" || entry.empty()) return sum_of_projectives<F>(d);
  static const std::regex proj(R"(P(\d+)(?:\[(-?\d+)\])?)");
  std::smatch m;
  if (std::regex_match(entry, m, proj)) {
    const Vertex v = std::stoi(m[1]);
    if (!d.has_vertex(v)) throw ValidationError("no vertex " + m[1].str() + " in " + d.name());
    return shift(projective<F>(d, v), m[2].matched ? std::stoi(m[2]) : 0);
  }
  const std::string path = entry[0] == '@' ? entry.substr(1) : entry;
  return complex_from_json<F>(d, read_json(path));
}

template <Field F>
int cmd_twist(const Config& cfg, const std::string& word_text, const std::string& object) {
  const auto d = parse_diagram(cfg.diagram);
  const auto w = parse_word(d, word_text);
  const auto t = minimize(twist_word(w, read_object<F>(d, object)));
  const auto p = profile(t);
  if (cfg.format == "text") {
    std::cout << d.name() << " over " << F::name << ", t_w(X) for w = " << w.to_string() << '\n'
              << (t.is_zero() ? std::string("zero complex") : describe(t)) << '\n';
    print_profile_text(p);
  } else {
    print_json({{"diagram", diagram_to_json(d)},
                {"field", std::string(F::name)},
                {"word", w.letters},
                {"complex", complex_to_json(t)},
                {"profile", profile_to_json(p)}});
  }
  return kOk;
}

template <Field F>
int cmd_recover(const Config& cfg, const std::string& word_text, const std::string& input) {
  const auto d = parse_diagram(cfg.diagram);
  std::optional<BraidWord> w;
  ProjComplex<F> t(d);
  if (!input.empty()) {
    t = minimize(read_object<F>(d, input));
  } else {
    w = parse_word(d, word_text);
    t = minimize(twist_word(*w, sum_of_projectives<F>(d)));
  }
  Recovery r{BraidWord(d, {}), {}};
  try {
    r = recover_word(t);
  } catch (const NotATwistImage& e) {
    std::cerr << "not a twist image: " << e.what() << '\n';
    if (cfg.format == "json") print_json({{"image", false}, {"reason", e.what()}});
    return kNegative;
  }
  bool verified = canonical_key(minimize(twist_word(r.word, sum_of_projectives<F>(d)))) == canonical_key(t);
  if (w) verified = verified && r.word.length() == w->length() && equivalent(r.word, *w);
  if (cfg.format == "text") {
    std::cout << "recovered " << r.word.to_string() << (verified ? " (verified)" : " (NOT verified)") << '\n';
    for (const auto& p : r.peels) std::cout << "  peel s" << p.j << " at degree " << p.min_degree << '\n';
  } else {
    print_json(recovery_to_json(r, verified));
  }
  if (!verified) throw InvariantBreach("recovered word does not reproduce the object");
  return kOk;
}

template <Field F>
int cmd_braid_eq(const Config& cfg, const std::string& a, const std::string& b, const std::string& mode) {
  const auto d = parse_diagram(cfg.diagram);
  const auto w1 = parse_word(d, a), w2 = parse_word(d, b);
  std::optional<bool> oracle, category;
  if (mode != "category") oracle = equivalent(w1, w2);
  if (mode != "oracle") category = words_equal_via_category<F>(w1, w2);
  const bool agree = !oracle || !category || *oracle == *category;
  const bool equal = oracle ? *oracle : *category;
  if (cfg.format == "text") {
    std::cout << w1.to_string() << (equal ? " = " : " != ") << w2.to_string();
    if (oracle && category) std::cout << (agree ? " (oracle and category agree)" : " (oracle and category DISAGREE)");
    std::cout << '\n';
  } else {
    Json j{{"equal", equal}, {"mode", mode}};
    if (oracle) j["oracle"] = *oracle;
    if (category) j["category"] = *category;
    if (oracle && category) j["agree"] = agree;
    print_json(j);
  }
  if (!agree) throw InvariantBreach("oracle and category disagree on " + w1.to_string() + " vs " + w2.to_string());
  return equal ? kOk : kNegative;
}

std::vector<std::vector<Vertex>> parse_slices(const std::string& text) {
  std::vector<std::vector<Vertex>> slices;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<Vertex> s;
    std::replace(part.begin(), part.end(), ',', ' ');
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ValidationError("bad slice entry '" + tok + "'");
      }
      s.push_back(std::stoi(tok));
    }
    slices.push_back(std::move(s));
  }
  return slices;
}

int cmd_mesh_solve(const Config& cfg, const std::string& word_text, const std::string& slices, int base,
                   const std::string& input) {
  const auto d = parse_diagram(cfg.diagram);
  std::optional<DecoratedSet> s;
  if (!input.empty()) {
    s = decorated_from_json(d, read_json(input));
  } else {
    if (base == 0) throw ValidationError("--base is required unless a decorated set is given");
    if (!d.has_vertex(base)) throw ValidationError("no vertex " + std::to_string(base) + " in " + d.name());
    const LayeredWord lw = slices.empty() ? layer(parse_word(d, word_text)) : LayeredWord(d, parse_slices(slices));
    s = to_decorated(lw, base_boundary(d, base));
  }
  const Vertex i = check_divisor_hypotheses(*s);
  const auto r = find_left_divisor(*s);
  const auto w = word_of(*s);
  const bool replay_ok = replay(*s, r.certificate) == r.final_set && check_mesh_relations(r.final_set);
  const bool oracle_ok = equivalent(word_of(r.final_set), w) && left_divisible_by(w, r.j).has_value();
  if (cfg.format == "dot") {
    std::cout << to_dot(r.final_set);
  } else if (cfg.format == "text") {
    std::cout << "word " << w.to_string() << ", base vertex " << i << '\n'
              << "left divisor s" << r.j << " after " << r.certificate.moves.size() << " moves (" << r.braids << " braidings)\n"
              << "replay " << (replay_ok ? "ok" : "FAILED") << ", oracle " << (oracle_ok ? "confirms" : "REJECTS") << '\n'
              << "final word " << word_of(r.final_set).to_string() << '\n';
  } else {
    print_json({{"word", w.letters},
                {"base", i},
                {"divisor", r.j},
                {"braids", r.braids},
                {"certificate", certificate_to_json(r.certificate)},
                {"final", decorated_to_json(r.final_set)},
                {"replay_ok", replay_ok},
                {"oracle_ok", oracle_ok}});
  }
  if (!replay_ok || !oracle_ok) throw InvariantBreach("solver output failed verification");
  return kOk;
}

int cmd_selftest(const Config& cfg, bool full, bool corrupt) {
  AcceptancePlan plan = full ? AcceptancePlan::full() : AcceptancePlan::scaled(parse_diagram(cfg.diagram), cfg.max_len);
  plan.field = parse_field_kind(cfg.field);
  plan.jobs = cfg.jobs;
  if (const char* seed = std::getenv("TWISTLAB_SEED")) plan.seed = std::strtoul(seed, nullptr, 10);
  if (corrupt) debug::set_corrupt_composition(true);
  Json lines = Json::array();
  bool all = true;
  run_acceptance(plan, [&](const CriterionResult& r) {
    all = all && r.pass;
    if (cfg.format == "text") {
      std::cout << format_result(r) << std::endl;
    } else {
      Json j{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
      if (r.limit) j["limit"] = *r.limit;
      lines.push_back(j);
    }
  });
  if (cfg.format != "text") print_json({{"pass", all}, {"criteria", lines}});
  return all ? kOk : kNegative;
}

template <class Fn>
int with_field(const Config& cfg, Fn&& fn) {
  if (parse_field_kind(cfg.field) == FieldKind::f2) return fn(Gf2{});
  return fn(Rational{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical twists over ADE zigzag algebras"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--diagram", cfg.diagram, "Dynkin diagram, e.g. A3, D4, E6")->capture_default_str();
  app.add_option("--field", cfg.field, "Coefficient field")->check(CLI::IsMember({"f2", "q"}))->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "Corpus length bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}))->capture_default_str();

  std::string word, word2, object = "lambda", input, mode = "both", slices;
  int base = 0;
  bool full = false, corrupt = false;

  auto* twist_cmd = app.add_subcommand("twist", "Minimal model of t_w(X) and its Hom profile");
  twist_cmd->add_option("word", word, "Braid word, e.g. \"s1 s2 s1\"; e is the empty word")->required();
  twist_cmd->add_option("--object", object, "lambda, P<i>, P<i>[<shift>], or a JSON complex file (- for stdin)");

  auto* recover_cmd = app.add_subcommand("recover", "Recover a braid word from a twist image");
  recover_cmd->add_option("word", word, "Word whose image is recovered and checked");
  recover_cmd->add_option("--input", input, "Object to recover instead of a word image (same forms as --object)");

  auto* eq_cmd = app.add_subcommand("braid-eq", "Decide equality in the braid monoid");
  eq_cmd->add_option("w1", word, "First word")->required();
  eq_cmd->add_option("w2", word2, "Second word")->required();
  eq_cmd->add_option("--mode", mode, "Decision procedure")->check(CLI::IsMember({"oracle", "category", "both"}))->capture_default_str();

  auto* mesh_cmd = app.add_subcommand("mesh-solve", "Find a left divisor by commutations and braidings");
  mesh_cmd->add_option("word", word, "Word to place on the translation quiver");
  mesh_cmd->add_option("--slices", slices, "Explicit slices, e.g. \"2;1,3,4;2\"");
  mesh_cmd->add_option("--base", base, "Vertex i with theta(-inf, i) = -1");
  mesh_cmd->add_option("--input", input, "Decorated set as JSON (- for stdin)");

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  self_cmd->add_flag("--full", full, "Use the full corpora instead of --diagram and --max-len");
  self_cmd->add_flag("--corrupt-composition", corrupt, "Debug: break the composition table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (cfg.format == "dot" && !mesh_cmd->parsed()) throw ValidationError("dot output is only available for mesh-solve");
    if (twist_cmd->parsed()) {
      return with_field(cfg, [&](auto f) { return cmd_twist<decltype(f)>(cfg, word, object); });
    }
    if (recover_cmd->parsed()) {
      if (word.empty() == input.empty()) throw ValidationError("give either a word or --input");
      return with_field(cfg, [&](auto f) { return cmd_recover<decltype(f)>(cfg, word, input); });
    }
    if (eq_cmd->parsed()) {
      return with_field(cfg, [&](auto f) { return cmd_braid_eq<decltype(f)>(cfg, word, word2, mode); });
    }
    if (mesh_cmd->parsed()) return cmd_mesh_solve(cfg, word, slices, base, input);
    return cmd_selftest(cfg, full, corrupt);
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return kBreach;
  } catch (const NotATwistImage& e) {
    std::cerr << "not a twist image: " << e.what() << '\n';
    return kNegative;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kBreach;
  }
}
