#include "twistlab/sweep.hpp"

#include "twistlab/twists.hpp"

namespace twistlab {

std::vector<BraidWord> words_up_to(const DynkinDiagram& d, int max_len) {
  std::vector<BraidWord> out;
  for (int len = 0; len <= max_len; ++len) {
    auto level = words_of_length(d, len);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

namespace {

template <Field F>
ImageTable<F> finish(const DynkinDiagram& d, std::vector<BraidWord> words, std::vector<Outcome<ProjComplex<F>>> res) {
  ImageTable<F> t{d, std::move(words), {}, {}};
  t.images.reserve(res.size());
  for (auto& r : res) {
    if (!r.ok()) throw InvariantBreach("image computation failed: " + r.error);
    t.images.push_back(std::move(*r.value));
  }
  t.keys.resize(t.images.size());
  for (std::size_t k = 0; k < t.images.size(); ++k) t.keys[k] = canonical_key(t.images[k]);
  return t;
}

}  // namespace

template <Field F>
ImageTable<F> image_table_serial(const DynkinDiagram& d, int max_len) {
  auto words = words_up_to(d, max_len);
  const auto lambda = sum_of_projectives<F>(d);
  auto res = serial_map<ProjComplex<F>>(words.size(), [&](std::size_t k) { return minimize(twist_word(words[k], lambda)); });
  return finish<F>(d, std::move(words), std::move(res));
}

template <Field F>
ImageTable<F> image_table(const DynkinDiagram& d, int max_len, int jobs) {
  auto words = words_up_to(d, max_len);
  const std::size_t n = static_cast<std::size_t>(d.rank());
  std::vector<Outcome<ProjComplex<F>>> res;
  res.reserve(words.size());
  res.push_back({minimize(sum_of_projectives<F>(d)), {}, false});
  std::size_t prev_start = 0, prev_size = 1;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t start = res.size(), size = prev_size * n;
    auto level = parallel_map<ProjComplex<F>>(size, jobs, [&](std::size_t k) {
      const auto& parent = res[prev_start + k % prev_size];
      if (!parent.ok()) throw InvariantBreach(parent.error);
      return twist(words[start + k].letters.front(), *parent.value);
    });
    for (auto& r : level) res.push_back(std::move(r));
    prev_start = start;
    prev_size = size;
  }
  return finish<F>(d, std::move(words), std::move(res));
}

template <Field F>
std::vector<Outcome<Recovery>> recover_all(const std::vector<ProjComplex<F>>& images, int jobs) {
  return parallel_map<Recovery>(images.size(), jobs, [&](std::size_t k) { return recover_word(images[k]); });
}

template <Field F>
std::vector<Outcome<Recovery>> recover_all_serial(const std::vector<ProjComplex<F>>& images) {
  return serial_map<Recovery>(images.size(), [&](std::size_t k) { return recover_word(images[k]); });
}

#define TWISTLAB_INSTANTIATE(F)                                                                \
  template ImageTable<F> image_table_serial(const DynkinDiagram&, int);                        \
  template ImageTable<F> image_table(const DynkinDiagram&, int, int);                          \
  template std::vector<Outcome<Recovery>> recover_all(const std::vector<ProjComplex<F>>&, int); \
  template std::vector<Outcome<Recovery>> recover_all_serial(const std::vector<ProjComplex<F>>&);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
