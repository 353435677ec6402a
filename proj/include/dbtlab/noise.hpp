#ifndef DBTLAB_NOISE_HPP
#define DBTLAB_NOISE_HPP

#include <memory>
#include <string>
#include <vector>

#include "dbtlab/corpus.hpp"
#include "dbtlab/rng.hpp"

namespace dbtlab {

// Proposal distribution for substituted/inserted tokens. The default is
// uniform over a non-special token pool; a language-model proposer can be
// plugged in behind the same interface.
class TokenProposer {
 public:
  virtual ~TokenProposer() = default;
  // A replacement candidate for `original` (never equal to it when the pool
  // offers an alternative).
  virtual std::string propose_substitution(const std::string &original,
                                           Rng *rng) const = 0;
  virtual std::string propose_insertion(Rng *rng) const = 0;
};

class UniformProposer : public TokenProposer {
 public:
  explicit UniformProposer(std::vector<std::string> pool);
  std::string propose_substitution(const std::string &original,
                                   Rng *rng) const override;
  std::string propose_insertion(Rng *rng) const override;

 private:
  std::vector<std::string> pool_;  // sorted, unique
};

// The artificial noise function f(.): independent per-position drop,
// substitution and insertion.
struct NoiseSpec {
  double p_drop = 0.05;
  double p_sub = 0.01;
  double p_ins = 0.05;
  std::shared_ptr<const TokenProposer> proposer;  // sub/ins distribution

  bool is_zero() const { return p_drop <= 0 && p_sub <= 0 && p_ins <= 0; }
  void validate() const;
};

// Event counters, accumulated across calls when passed to apply_noise.
struct NoiseCounts {
  long positions = 0;  // original token positions seen
  long drops = 0;
  long kept = 0;  // positions that survived the drop step
  long subs = 0;
  long inserts = 0;
};

// Per original position: drop with p_drop; if kept, substitute with p_sub;
// independently, insert one proposed token after the position with p_ins.
// A zero probability consumes no randomness, so the all-zero spec leaves
// the rng stream untouched and is the identity.
TokenSeq apply_noise(const TokenSeq &tokens, const NoiseSpec &spec, Rng *rng,
                     NoiseCounts *counts = nullptr);

// E[output length] for apply_noise on an n-token input.
double expected_output_length(const NoiseSpec &spec, long n);

// Same-first-letter substitution pool, standing in for phonetic confusions.
class PhoneticNeighbors {
 public:
  explicit PhoneticNeighbors(const std::vector<std::string> &words);
  std::string substitute(const std::string &word, Rng *rng) const;

 private:
  std::vector<std::string> all_;                         // sorted, unique
  std::vector<std::vector<std::string>> by_first_byte_;  // 256 groups
  static std::string pick_excluding(const std::vector<std::string> &pool,
                                    const std::string &word, Rng *rng);
};

// Word-level ASR error channel; operates on and emits normalized text.
struct AsrChannelSpec {
  double word_sub_rate = 0.08;
  double word_drop_rate = 0.04;
  double word_merge_rate = 0.04;
  std::shared_ptr<const PhoneticNeighbors> neighbors;

  void validate() const;
  // Diagnostic: roughly word_sub + word_drop + 2*word_merge (a merge costs
  // one substitution plus one deletion against the reference).
  double target_wer() const {
    return word_sub_rate + word_drop_rate + 2.0 * word_merge_rate;
  }
};

// normalize(text) with per-word substitutions/drops and adjacent-pair
// merges. Output is always normalized.
std::string simulate_asr(const std::string &text, const AsrChannelSpec &spec,
                         Rng *rng);

}  // namespace dbtlab

#endif  // DBTLAB_NOISE_HPP
