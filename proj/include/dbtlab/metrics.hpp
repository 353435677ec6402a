#ifndef DBTLAB_METRICS_HPP
#define DBTLAB_METRICS_HPP

#include <string>
#include <vector>

namespace dbtlab {
namespace metrics {

using Tokens = std::vector<std::string>;

// Unit-cost Levenshtein alignment counts for transforming `a` into `b`.
// distance == substitutions + deletions + insertions.
struct EditOps {
  long distance = 0;
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;
};

// Op counts come from one optimal backtrace; ties broken substitution >
// deletion > insertion.
EditOps edit_distance(const Tokens &a, const Tokens &b);

// edit_distance(ref, hyp).distance / len(ref). May exceed 1. Errors on
// empty ref.
double token_error_rate(const Tokens &hyp, const Tokens &ref);

enum class BleuSmoothing { NONE, EXP_FLOOR };

struct BleuResult {
  double score = 0.0;                 // [0, 100]
  std::vector<double> precisions;    // p1..p_max_n; -1 marks excluded orders
  double brevity_penalty = 1.0;
  long hyp_length = 0;
  long ref_length = 0;
};

// Corpus BLEU: clipped n-gram counts pooled over the corpus, geometric mean
// of the per-order precisions, BP = min(1, exp(1 - ref_len/hyp_len)).
// Orders with zero possible n-grams (every hypothesis shorter than n) are
// excluded from the mean. EXP_FLOOR replaces a zero numerator at order n by
// 1 / (2^k * denom_n), k counting the zero orders seen so far.
BleuResult corpus_bleu(const std::vector<Tokens> &hyps,
                       const std::vector<Tokens> &refs, int max_n = 4,
                       BleuSmoothing smoothing = BleuSmoothing::NONE);

}  // namespace metrics
}  // namespace dbtlab

#endif  // DBTLAB_METRICS_HPP
