#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/field.hpp"

namespace twistlab {

struct Corpus {
  DynkinDiagram diagram;
  int max_len;
};

struct AcceptancePlan {
  FieldKind field = FieldKind::q;
  int jobs = 0;
  unsigned long seed = 1;

  std::vector<DynkinDiagram> config_diagrams;
  std::vector<Corpus> twist_corpus;
  int stalk_range = 2;
  std::vector<Corpus> braid_corpus;
  std::vector<Corpus> word_corpus;
  std::vector<DynkinDiagram> two_term_diagrams;
  int two_term_max_total = 3;
  std::size_t two_term_per_shape = 32;
  std::vector<DynkinDiagram> chain_diagrams;
  int chain_depth = 4;
  std::vector<Corpus> mesh_corpus;
  std::optional<Corpus> field_corpus;
  std::map<int, double> time_limits;

  static AcceptancePlan full();
  // Every criterion on one diagram with words of length <= max_len.
  static AcceptancePlan scaled(const DynkinDiagram& d, int max_len);
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  std::optional<double> limit;
};

std::vector<CriterionResult> run_acceptance(const AcceptancePlan& plan,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r);

}  // namespace twistlab
