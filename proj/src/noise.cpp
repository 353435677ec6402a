#include "dbtlab/noise.hpp"

#include <algorithm>
#include <stdexcept>

#include "dbtlab/errors.hpp"
#include "dbtlab/text.hpp"

namespace dbtlab {

UniformProposer::UniformProposer(std::vector<std::string> pool)
    : pool_(std::move(pool)) {
  std::sort(pool_.begin(), pool_.end());
  pool_.erase(std::unique(pool_.begin(), pool_.end()), pool_.end());
  if (pool_.empty()) throw ConfigError("UniformProposer: empty token pool");
}

std::string UniformProposer::propose_substitution(const std::string &original,
                                                  Rng *rng) const {
  auto it = std::lower_bound(pool_.begin(), pool_.end(), original);
  bool present = it != pool_.end() && *it == original;
  if (!present) return pool_[rng->index(pool_.size())];
  if (pool_.size() == 1) return original;  // no alternative exists
  size_t self = static_cast<size_t>(it - pool_.begin());
  size_t j = rng->index(pool_.size() - 1);
  return pool_[j >= self ? j + 1 : j];
}

std::string UniformProposer::propose_insertion(Rng *rng) const {
  return pool_[rng->index(pool_.size())];
}

void NoiseSpec::validate() const {
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_range(p_drop) || !in_range(p_sub) || !in_range(p_ins))
    throw ConfigError("NoiseSpec: probabilities must lie in [0,1]");
  if ((p_sub > 0 || p_ins > 0) && !proposer)
    throw ConfigError(
        "NoiseSpec: substitution/insertion enabled but no token proposer "
        "bound");
}

TokenSeq apply_noise(const TokenSeq &tokens, const NoiseSpec &spec, Rng *rng,
                     NoiseCounts *counts) {
  spec.validate();
  TokenSeq out;
  out.lang = tokens.lang;
  out.tokens.reserve(tokens.tokens.size());
  for (const std::string &tok : tokens.tokens) {
    if (counts) ++counts->positions;
    // Rng::bernoulli draws nothing for p <= 0, so a zero spec leaves the
    // stream untouched (the degenerate-noise equivalence depends on this).
    if (rng->bernoulli(spec.p_drop)) {
      if (counts) ++counts->drops;
    } else {
      if (counts) ++counts->kept;
      if (rng->bernoulli(spec.p_sub)) {
        if (counts) ++counts->subs;
        out.tokens.push_back(spec.proposer->propose_substitution(tok, rng));
      } else {
        out.tokens.push_back(tok);
      }
    }
    if (rng->bernoulli(spec.p_ins)) {
      if (counts) ++counts->inserts;
      out.tokens.push_back(spec.proposer->propose_insertion(rng));
    }
  }
  return out;
}

double expected_output_length(const NoiseSpec &spec, long n) {
  if (n < 0) throw std::invalid_argument("expected_output_length: n < 0");
  return n * (1.0 - spec.p_drop) + n * spec.p_ins;
}

PhoneticNeighbors::PhoneticNeighbors(const std::vector<std::string> &words)
    : by_first_byte_(256) {
  all_ = words;
  std::sort(all_.begin(), all_.end());
  all_.erase(std::unique(all_.begin(), all_.end()), all_.end());
  if (all_.empty()) throw ConfigError("PhoneticNeighbors: empty word list");
  for (const std::string &w : all_)
    by_first_byte_[static_cast<unsigned char>(w[0])].push_back(w);
}

std::string PhoneticNeighbors::pick_excluding(
    const std::vector<std::string> &pool, const std::string &word, Rng *rng) {
  auto it = std::lower_bound(pool.begin(), pool.end(), word);
  bool present = it != pool.end() && *it == word;
  if (!present) return pool[rng->index(pool.size())];
  if (pool.size() == 1) return word;
  size_t self = static_cast<size_t>(it - pool.begin());
  size_t j = rng->index(pool.size() - 1);
  return pool[j >= self ? j + 1 : j];
}

std::string PhoneticNeighbors::substitute(const std::string &word,
                                          Rng *rng) const {
  if (word.empty()) return word;
  const auto &group = by_first_byte_[static_cast<unsigned char>(word[0])];
  if (group.size() > 1 || (group.size() == 1 && group[0] != word))
    return pick_excluding(group, word, rng);
  return pick_excluding(all_, word, rng);
}

void AsrChannelSpec::validate() const {
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_range(word_sub_rate) || !in_range(word_drop_rate) ||
      !in_range(word_merge_rate))
    throw ConfigError("AsrChannelSpec: rates must lie in [0,1]");
  if (word_sub_rate > 0 && !neighbors)
    throw ConfigError("AsrChannelSpec: substitutions enabled but no neighbor "
                      "vocabulary bound");
}

std::string simulate_asr(const std::string &text, const AsrChannelSpec &spec,
                         Rng *rng) {
  spec.validate();
  std::string norm = normalize(text);
  if (norm.empty())
    throw std::invalid_argument(
        "simulate_asr: input empty after normalization");
  std::vector<std::string> words = split_tokens(norm);

  // Pass 1: per-word drops and substitutions.
  std::vector<std::string> kept;
  kept.reserve(words.size());
  for (const std::string &w : words) {
    if (rng->bernoulli(spec.word_drop_rate)) continue;
    if (rng->bernoulli(spec.word_sub_rate))
      kept.push_back(spec.neighbors->substitute(w, rng));
    else
      kept.push_back(w);
  }
  // Pass 2: adjacent-pair merges; a merged word does not merge again.
  std::vector<std::string> out;
  out.reserve(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) {
    if (i + 1 < kept.size() && rng->bernoulli(spec.word_merge_rate)) {
      out.push_back(kept[i] + kept[i + 1]);
      ++i;
    } else {
      out.push_back(kept[i]);
    }
  }
  return join_tokens(out);
}

}  // namespace dbtlab
