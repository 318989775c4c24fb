#include "qcoord/pbw.hpp"

#include <atomic>

#include "qcoord/engine.hpp"
#include "qcoord/format.hpp"
#include "qcoord/parallel.hpp"

namespace qcoord {

namespace {

using QEngine = Engine<LaurentRing>;
using QElement = Element<LaurentPoly>;

struct Measure {
  Weight weight;
  int inversions;
};

bool less(const Measure& a, const Measure& b) {
  const auto c = lex_compare(a.weight, b.weight);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return a.inversions < b.inversions;
}

}  // namespace

std::vector<Word> all_words(int n, int length) {
  const int n2 = n * n;
  std::vector<Word> out;
  Word w;
  w.letters.assign(static_cast<std::size_t>(length), 0);
  while (true) {
    out.push_back(w);
    int k = length - 1;
    while (k >= 0 && w.letters[static_cast<std::size_t>(k)] == n2 - 1) {
      w.letters[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++w.letters[static_cast<std::size_t>(k)];
  }
  return out;
}

CheckReport check_confluence(const AlgebraConfig& config, int max_length) {
  CheckReport report;
  report.check = "pbw-confluence";
  report.n = config.n;
  for (int len = 0; len <= max_length; ++len) {
    const std::vector<Word> words = all_words(config.n, len);
    std::atomic<std::size_t> failures{0};
    std::string first;
    std::mutex first_mutex;
    parallel_for(
        words.size(), [&] { return QEngine(config, LaurentRing{}); },
        [&](QEngine& eng, std::size_t idx) {
          const Word& w = words[idx];
          bool ok = true;
          const QEngine::StepObserver observer = [&](const Word& from, const Word& to) {
            const Measure a{weight(from, config.n), inversion_count(from, config.order)};
            const Measure b{weight(to, config.n), inversion_count(to, config.order)};
            if (!less(b, a)) ok = false;
          };
          const LaurentPoly one(1);
          const QElement ins = eng.ordered_form(w, one);
          const QElement left = eng.ordered_form(w, one, Strategy::kLeftmostInversion, &observer);
          const QElement right = eng.ordered_form(w, one, Strategy::kRightmostInversion, &observer);
          ok = ok && ins == left && left == right;
          const Weight ww = weight(w, config.n);
          for (const auto& [m, c] : ins) {
            if (lex_compare(weight(m), ww) == std::strong_ordering::greater) ok = false;
          }
          if (!ok) {
            ++failures;
            std::lock_guard lock(first_mutex);
            if (first.empty()) first = format_word(w, config.n);
          }
        });
    report.add("all " + std::to_string(words.size()) + " words of length " + std::to_string(len),
               failures == 0 ? "0" : std::to_string(failures.load()) + " failing, first " + first,
               failures == 0);
  }
  return report;
}

CheckReport check_specialization_at_one(const AlgebraConfig& config, int max_length) {
  CheckReport report;
  report.check = "q1-degeneration";
  report.n = config.n;
  for (int len = 0; len <= max_length; ++len) {
    const std::vector<Word> words = all_words(config.n, len);
    std::atomic<std::size_t> failures{0};
    parallel_for(
        words.size(), [&] { return QEngine(config, LaurentRing{}); },
        [&](QEngine& eng, std::size_t idx) {
          const Word& w = words[idx];
          const QElement nf = eng.ordered_form(w, LaurentPoly(1));
          // at q = 1 the algebra is commutative: the word is its own
          // multinomial, a single monomial with coefficient 1
          std::map<NormalMonomial, Integer> at_one;
          for (const auto& [m, c] : nf) {
            const Integer v = specialize_at_one(c);
            if (v != 0) at_one[m] += v;
          }
          std::erase_if(at_one, [](const auto& kv) { return kv.second == 0; });
          const NormalMonomial expected = collect(w, config.n);
          const bool ok = at_one.size() == 1 && at_one.begin()->first == expected && at_one.begin()->second == 1;
          if (!ok) ++failures;
        });
    report.add("all " + std::to_string(words.size()) + " words of length " + std::to_string(len),
               std::to_string(failures.load()) + " mismatches", failures == 0);
  }
  return report;
}

}  // namespace qcoord
