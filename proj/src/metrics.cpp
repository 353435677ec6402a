#include "dbtlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dbtlab {
namespace metrics {

EditOps edit_distance(const Tokens &a, const Tokens &b) {
  const size_t n = a.size(), m = b.size();
  // dp[i][j] = distance between a[0..i) and b[0..j)
  std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) dp[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) dp[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int sub = dp[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      int del = dp[i - 1][j] + 1;
      int ins = dp[i][j - 1] + 1;
      dp[i][j] = std::min({sub, del, ins});
    }
  }
  EditOps ops;
  ops.distance = dp[n][m];
  // Backtrace one optimal path; tie order: substitution/match, then
  // deletion, then insertion.
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      int sub_cost = a[i - 1] == b[j - 1] ? 0 : 1;
      if (dp[i][j] == dp[i - 1][j - 1] + sub_cost) {
        ops.substitutions += sub_cost;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
      ++ops.deletions;
      --i;
      continue;
    }
    ++ops.insertions;
    --j;
  }
  return ops;
}

double token_error_rate(const Tokens &hyp, const Tokens &ref) {
  if (ref.empty())
    throw std::invalid_argument("token_error_rate: empty reference");
  return static_cast<double>(edit_distance(ref, hyp).distance) /
         static_cast<double>(ref.size());
}

namespace {

using Ngram = std::vector<std::string>;

void count_ngrams(const Tokens &s, int n, std::map<Ngram, long> *counts) {
  if (static_cast<int>(s.size()) < n) return;
  for (size_t i = 0; i + n <= s.size(); ++i)
    ++(*counts)[Ngram(s.begin() + i, s.begin() + i + n)];
}

}  // namespace

BleuResult corpus_bleu(const std::vector<Tokens> &hyps,
                       const std::vector<Tokens> &refs, int max_n,
                       BleuSmoothing smoothing) {
  if (hyps.size() != refs.size())
    throw std::invalid_argument("corpus_bleu: hyps/refs length mismatch");
  if (hyps.empty()) throw std::invalid_argument("corpus_bleu: empty corpus");

  std::vector<long> matched(max_n, 0), total(max_n, 0);
  long hyp_len = 0, ref_len = 0;
  for (size_t k = 0; k < hyps.size(); ++k) {
    hyp_len += static_cast<long>(hyps[k].size());
    ref_len += static_cast<long>(refs[k].size());
    for (int n = 1; n <= max_n; ++n) {
      std::map<Ngram, long> hyp_counts, ref_counts;
      count_ngrams(hyps[k], n, &hyp_counts);
      count_ngrams(refs[k], n, &ref_counts);
      for (const auto &[ngram, cnt] : hyp_counts) {
        total[n - 1] += cnt;
        auto it = ref_counts.find(ngram);
        if (it != ref_counts.end())
          matched[n - 1] += std::min(cnt, it->second);
      }
    }
  }

  BleuResult result;
  result.hyp_length = hyp_len;
  result.ref_length = ref_len;
  result.precisions.assign(max_n, -1.0);
  if (hyp_len == 0) {
    result.brevity_penalty = 0.0;  // hyp_len -> 0 limit
    result.score = 0.0;
    return result;
  }
  result.brevity_penalty =
      hyp_len >= ref_len
          ? 1.0
          : std::exp(1.0 - static_cast<double>(ref_len) / hyp_len);

  double log_sum = 0.0;
  int effective_orders = 0;
  int zero_orders = 0;
  bool zero_precision = false;
  for (int n = 0; n < max_n; ++n) {
    if (total[n] == 0) continue;  // order impossible at these lengths
    ++effective_orders;
    double p;
    if (matched[n] > 0) {
      p = static_cast<double>(matched[n]) / total[n];
    } else if (smoothing == BleuSmoothing::EXP_FLOOR) {
      ++zero_orders;
      p = 1.0 / (std::pow(2.0, zero_orders) * total[n]);
    } else {
      p = 0.0;
      zero_precision = true;
    }
    result.precisions[n] = p;
    if (p > 0.0) log_sum += std::log(p);
  }
  if (effective_orders == 0 || zero_precision) {
    result.score = 0.0;
    return result;
  }
  result.score =
      100.0 * result.brevity_penalty * std::exp(log_sum / effective_orders);
  return result;
}

}  // namespace metrics
}  // namespace dbtlab
