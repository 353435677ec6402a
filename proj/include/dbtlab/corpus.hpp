#ifndef DBTLAB_CORPUS_HPP
#define DBTLAB_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "dbtlab/rng.hpp"

namespace dbtlab {

enum class LanguageId { SRC, TGT };

const char *lang_name(LanguageId lang);
LanguageId other_lang(LanguageId lang);

// A tokenized sentence tagged with its language; the unit flowing through
// every stage. Tokens are non-empty and contain no whitespace.
struct TokenSeq {
  std::vector<std::string> tokens;
  LanguageId lang = LanguageId::SRC;

  bool operator==(const TokenSeq &o) const = default;
};

// Case/punctuation realization knobs for one language. The defaults are
// deliberately low-entropy: the raw form is then a deterministic function of
// the token content, which a denormalizer can learn exactly.
struct SurfaceModel {
  double proper_cap_prob = 1.0;  // capitalize proper-slot words
  double comma_rate = 0.0;       // comma after a non-final word
  // Sentence-final punctuation distribution (token, probability).
  std::vector<std::pair<std::string, double>> final_punct = {{".", 1.0}};
};

// Slot-based template grammar; slot words are the source-language forms.
struct Grammar {
  std::vector<std::vector<std::string>> slot_words;
  std::vector<std::vector<int>> templates;  // sequences of slot indices
  int proper_slot = 4;
};

// A generated bilingual world: bijective lexicon, window reordering rule and
// per-language surface models. Provides ground-truth references while
// training stays unpaired.
struct SyntheticLangPair {
  uint64_t seed = 0;
  Grammar grammar;
  std::map<std::string, std::string> lexicon;      // src word -> tgt word
  std::map<std::string, std::string> lexicon_inv;  // tgt word -> src word
  int window = 3;
  std::vector<int> window_perm;  // permutation of [0, window)
  SurfaceModel src_surface;
  SurfaceModel tgt_surface;
  std::unordered_set<std::string> proper_words_src;
  std::unordered_set<std::string> proper_words_tgt;
};

struct PairParams {
  uint64_t seed = 7;
  int vocab_size = 160;  // word types per language, split across slots
  int window = 3;
  // Fraction of source words the target language borrows unchanged
  // (names/loanwords). These anchors seed the cross-lingual alignment.
  double anchor_fraction = 0.15;
  SurfaceModel src_surface;
  SurfaceModel tgt_surface;
};

struct MonoCorpus {
  LanguageId lang = LanguageId::SRC;
  std::vector<std::vector<std::string>> sentences;
  // Stratification id of the underlying source-form sentence; pools with
  // different strata are disjoint by construction.
  std::vector<uint64_t> source_ids;
};

// Aligned evaluation pairs: reference == oracle_translate(source).
struct EvalBitext {
  std::vector<std::vector<std::string>> source;
  std::vector<std::vector<std::string>> reference;
  std::vector<uint64_t> source_ids;
};

// Strata carve the template-instantiation space so that the two monolingual
// training pools and the evaluation set can never share a sentence.
enum class Stratum { SRC_TRAIN = 0, TGT_TRAIN = 1, EVAL = 2 };

uint64_t sentence_id(const std::vector<std::string> &tokens);
Stratum stratum_of(const std::vector<std::string> &tokens);

SyntheticLangPair build_synthetic_pair(const PairParams &params);

MonoCorpus sample_mono_corpus(const SyntheticLangPair &pair, LanguageId side,
                              int n, uint64_t seed);

EvalBitext sample_eval_bitext(const SyntheticLangPair &pair, int n,
                              uint64_t seed);

// Ground-truth channel: lexicon mapping followed by the window reordering.
TokenSeq oracle_translate(const SyntheticLangPair &pair, const TokenSeq &s);
TokenSeq oracle_inverse(const SyntheticLangPair &pair, const TokenSeq &t);

// Cased/punctuated realization of a token sequence. The realization always
// normalizes back to the space-joined tokens.
std::string surface_realize(const TokenSeq &s, const SyntheticLangPair &pair,
                            Rng *rng);

// JSON (de)serialization of the pair definition.
std::string pair_to_json(const SyntheticLangPair &pair);
SyntheticLangPair pair_from_json(const std::string &json_text);

// Corpus files: UTF-8, one sentence per line, tokens space-separated.
void write_lines(const std::string &path, const std::vector<std::string> &lines);
std::vector<std::string> read_lines(const std::string &path);

}  // namespace dbtlab

#endif  // DBTLAB_CORPUS_HPP
