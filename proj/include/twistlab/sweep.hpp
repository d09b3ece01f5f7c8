#pragma once

#include <omp.h>

#include <optional>
#include <string>
#include <vector>

#include "twistlab/braid.hpp"
#include "twistlab/complex.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/reconstruct.hpp"

namespace twistlab {

template <class R>
struct Outcome {
  std::optional<R> value;
  std::string error;
  bool breach = false;

  bool ok() const { return value.has_value(); }
};

template <class R, class Fn>
Outcome<R> run_guarded(Fn& fn, std::size_t k) {
  Outcome<R> out;
  try {
    out.value.emplace(fn(k));
  } catch (const InvariantBreach& e) {
    out.error = e.what();
    out.breach = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// fn(k) for k < n, one item at a time, in order.
template <class R, class Fn>
std::vector<Outcome<R>> serial_map(std::size_t n, Fn fn) {
  std::vector<Outcome<R>> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(run_guarded<R>(fn, k));
  return out;
}

// fn(k) for k < n across OpenMP threads; results stay in input order.
// jobs <= 0 uses the OpenMP default.
template <class R, class Fn>
std::vector<Outcome<R>> parallel_map(std::size_t n, int jobs, Fn fn) {
  std::vector<Outcome<R>> out(n);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long m = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = run_guarded<R>(fn, static_cast<std::size_t>(k));
  return out;
}

// Images T_w = t_w(Lambda), minimized, for every word of length <= max_len.
// Words are ordered by length, then lexicographically.
template <Field F>
struct ImageTable {
  DynkinDiagram diagram;
  std::vector<BraidWord> words;
  std::vector<ProjComplex<F>> images;
  std::vector<std::string> keys;
};

std::vector<BraidWord> words_up_to(const DynkinDiagram& d, int max_len);

// Reference: every image computed from scratch with twist_word.
template <Field F>
ImageTable<F> image_table_serial(const DynkinDiagram& d, int max_len);
// Level by level, T_{s_i w} = t_i(T_w), each level in parallel.
template <Field F>
ImageTable<F> image_table(const DynkinDiagram& d, int max_len, int jobs);

template <Field F>
std::vector<Outcome<Recovery>> recover_all(const std::vector<ProjComplex<F>>& images, int jobs);
template <Field F>
std::vector<Outcome<Recovery>> recover_all_serial(const std::vector<ProjComplex<F>>& images);

}  // namespace twistlab
