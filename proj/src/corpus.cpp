#include "dbtlab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dbtlab/errors.hpp"
#include "dbtlab/text.hpp"

namespace dbtlab {

using json = nlohmann::ordered_json;

const char *lang_name(LanguageId lang) {
  return lang == LanguageId::SRC ? "src" : "tgt";
}

LanguageId other_lang(LanguageId lang) {
  return lang == LanguageId::SRC ? LanguageId::TGT : LanguageId::SRC;
}

uint64_t sentence_id(const std::vector<std::string> &tokens) {
  return fnv1a64(join_tokens(tokens));
}

Stratum stratum_of(const std::vector<std::string> &tokens) {
  return static_cast<Stratum>(sentence_id(tokens) % 3);
}

namespace {

// Word-shape generators. Source words start with a consonant, target words
// with a vowel, so the two inventories cannot collide except through anchors.
const char *kConsonants = "bdfgklmnprstvz";
const char *kVowels = "aeiou";

std::string make_word(Rng *rng, bool vowel_first) {
  int syllables = 2 + static_cast<int>(rng->index(2));
  std::string w;
  for (int s = 0; s < syllables; ++s) {
    char c = kConsonants[rng->index(14)];
    char v = kVowels[rng->index(5)];
    if (vowel_first) {
      w.push_back(v);
      w.push_back(c);
    } else {
      w.push_back(c);
      w.push_back(v);
    }
  }
  return w;
}

std::string make_unique_word(Rng *rng, bool vowel_first,
                             std::unordered_set<std::string> *used) {
  for (;;) {
    std::string w = make_word(rng, vowel_first);
    if (used->insert(w).second) return w;
  }
}

// Slot inventory: 0 noun, 1 verb, 2 adjective, 3 adverb, 4 proper.
// Twelve fixed template shapes, lengths 3..10.
const std::vector<std::vector<int>> kTemplates = {
    {4, 1, 0},
    {0, 1, 3},
    {2, 0, 1, 0},
    {4, 1, 2, 0},
    {0, 1, 2, 0, 3},
    {4, 3, 1, 0, 2, 0},
    {0, 1, 2, 0, 4, 1},
    {2, 0, 1, 0, 3, 4, 1},
    {4, 1, 0, 3, 2, 0, 1, 0},
    {0, 1, 2, 0, 4, 3, 1, 0, 2},
    {2, 0, 1, 3, 4, 1, 2, 0, 1, 0},
    {4, 1, 2, 0, 0, 1, 3},
};

const double kSlotShare[5] = {0.30, 0.25, 0.20, 0.15, 0.10};

std::vector<std::string> instantiate_template(const SyntheticLangPair &pair,
                                              Rng *rng) {
  const auto &tpl =
      pair.grammar.templates[rng->index(pair.grammar.templates.size())];
  std::vector<std::string> tokens;
  tokens.reserve(tpl.size());
  for (int slot : tpl) {
    const auto &words = pair.grammar.slot_words[slot];
    tokens.push_back(words[rng->index(words.size())]);
  }
  return tokens;
}

}  // namespace

SyntheticLangPair build_synthetic_pair(const PairParams &params) {
  if (params.vocab_size < 20)
    throw ConfigError("build_synthetic_pair: vocab_size must be >= 20, got " +
                      std::to_string(params.vocab_size));
  if (params.window < 1)
    throw ConfigError("build_synthetic_pair: window must be >= 1");

  SyntheticLangPair pair;
  pair.seed = params.seed;
  pair.window = params.window;
  pair.src_surface = params.src_surface;
  pair.tgt_surface = params.tgt_surface;

  Rng rng(Rng::derive_seed(params.seed, 0xC0DEC0DEULL));

  // Split the vocabulary across the five slots proportionally; every slot
  // gets at least two words (vocab_size >= 20 guarantees room).
  std::vector<int> counts(5);
  int assigned = 0;
  for (int s = 0; s < 5; ++s) {
    counts[s] = std::max(2, static_cast<int>(kSlotShare[s] * params.vocab_size));
    assigned += counts[s];
  }
  for (int s = 0; assigned > params.vocab_size; s = (s + 1) % 5) {
    if (counts[s] > 2) {
      --counts[s];
      --assigned;
    }
  }
  counts[0] += params.vocab_size - assigned;

  std::unordered_set<std::string> used_src, used_tgt;
  pair.grammar.slot_words.resize(5);
  pair.grammar.templates = kTemplates;
  pair.grammar.proper_slot = 4;
  std::vector<std::string> all_src;
  for (int s = 0; s < 5; ++s) {
    for (int k = 0; k < counts[s]; ++k) {
      std::string w = make_unique_word(&rng, false, &used_src);
      pair.grammar.slot_words[s].push_back(w);
      all_src.push_back(w);
    }
  }

  // Lexicon. A seed-drawn subset of words are anchors mapped to themselves.
  used_tgt = used_src;
  for (const std::string &w : all_src) {
    std::string tgt = rng.bernoulli(params.anchor_fraction)
                          ? w
                          : make_unique_word(&rng, true, &used_tgt);
    pair.lexicon[w] = tgt;
    pair.lexicon_inv[tgt] = w;
  }
  if (pair.lexicon_inv.size() != pair.lexicon.size())
    throw ConfigError("build_synthetic_pair: lexicon is not a bijection");

  for (const std::string &w : pair.grammar.slot_words[pair.grammar.proper_slot]) {
    pair.proper_words_src.insert(w);
    pair.proper_words_tgt.insert(pair.lexicon.at(w));
  }

  // Window reordering rule: a non-identity permutation when window > 1.
  pair.window_perm.resize(params.window);
  std::iota(pair.window_perm.begin(), pair.window_perm.end(), 0);
  if (params.window > 1) {
    do {
      rng.shuffle(&pair.window_perm);
    } while (std::is_sorted(pair.window_perm.begin(), pair.window_perm.end()));
  }
  return pair;
}

namespace {

std::vector<std::string> sample_in_stratum(const SyntheticLangPair &pair,
                                           Stratum stratum, Rng *rng,
                                           std::unordered_set<uint64_t> *seen,
                                           uint64_t *id_out) {
  for (;;) {
    std::vector<std::string> tokens = instantiate_template(pair, rng);
    uint64_t id = sentence_id(tokens);
    if (static_cast<Stratum>(id % 3) != stratum) continue;
    if (!seen->insert(id).second) continue;
    *id_out = id;
    return tokens;
  }
}

}  // namespace

MonoCorpus sample_mono_corpus(const SyntheticLangPair &pair, LanguageId side,
                              int n, uint64_t seed) {
  if (n < 1) throw ConfigError("sample_mono_corpus: n must be >= 1");
  MonoCorpus corpus;
  corpus.lang = side;
  Rng rng(Rng::derive_seed(seed, side == LanguageId::SRC ? 101 : 202));
  Stratum stratum =
      side == LanguageId::SRC ? Stratum::SRC_TRAIN : Stratum::TGT_TRAIN;
  std::unordered_set<uint64_t> seen;
  for (int i = 0; i < n; ++i) {
    uint64_t id = 0;
    std::vector<std::string> tokens =
        sample_in_stratum(pair, stratum, &rng, &seen, &id);
    if (side == LanguageId::TGT) {
      TokenSeq t = oracle_translate(pair, {tokens, LanguageId::SRC});
      tokens = t.tokens;
    }
    corpus.sentences.push_back(std::move(tokens));
    corpus.source_ids.push_back(id);
  }
  return corpus;
}

EvalBitext sample_eval_bitext(const SyntheticLangPair &pair, int n,
                              uint64_t seed) {
  if (n < 1) throw ConfigError("sample_eval_bitext: n must be >= 1");
  EvalBitext bitext;
  Rng rng(Rng::derive_seed(seed, 303));
  std::unordered_set<uint64_t> seen;
  for (int i = 0; i < n; ++i) {
    uint64_t id = 0;
    std::vector<std::string> tokens =
        sample_in_stratum(pair, Stratum::EVAL, &rng, &seen, &id);
    TokenSeq ref = oracle_translate(pair, {tokens, LanguageId::SRC});
    bitext.source.push_back(std::move(tokens));
    bitext.reference.push_back(ref.tokens);
    bitext.source_ids.push_back(id);
  }
  return bitext;
}

namespace {

std::vector<std::string> apply_window_perm(
    const std::vector<std::string> &tokens, int window,
    const std::vector<int> &perm, bool inverse) {
  std::vector<std::string> out(tokens.size());
  size_t full = tokens.size() / window * window;
  for (size_t base = 0; base < full; base += window) {
    for (int i = 0; i < window; ++i) {
      if (inverse)
        out[base + perm[i]] = tokens[base + i];
      else
        out[base + i] = tokens[base + perm[i]];
    }
  }
  for (size_t i = full; i < tokens.size(); ++i) out[i] = tokens[i];
  return out;
}

}  // namespace

TokenSeq oracle_translate(const SyntheticLangPair &pair, const TokenSeq &s) {
  if (s.lang != LanguageId::SRC)
    throw std::invalid_argument("oracle_translate: input must be SRC");
  std::vector<std::string> mapped;
  mapped.reserve(s.tokens.size());
  for (const std::string &tok : s.tokens) {
    auto it = pair.lexicon.find(tok);
    if (it == pair.lexicon.end())
      throw std::invalid_argument("oracle_translate: unknown token '" + tok +
                                  "'");
    mapped.push_back(it->second);
  }
  return {apply_window_perm(mapped, pair.window, pair.window_perm, false),
          LanguageId::TGT};
}

TokenSeq oracle_inverse(const SyntheticLangPair &pair, const TokenSeq &t) {
  if (t.lang != LanguageId::TGT)
    throw std::invalid_argument("oracle_inverse: input must be TGT");
  std::vector<std::string> unordered =
      apply_window_perm(t.tokens, pair.window, pair.window_perm, true);
  std::vector<std::string> mapped;
  mapped.reserve(unordered.size());
  for (const std::string &tok : unordered) {
    auto it = pair.lexicon_inv.find(tok);
    if (it == pair.lexicon_inv.end())
      throw std::invalid_argument("oracle_inverse: unknown token '" + tok +
                                  "'");
    mapped.push_back(it->second);
  }
  return {std::move(mapped), LanguageId::SRC};
}

std::string surface_realize(const TokenSeq &s, const SyntheticLangPair &pair,
                            Rng *rng) {
  if (s.tokens.empty())
    throw std::invalid_argument("surface_realize: empty sentence");
  const SurfaceModel &model =
      s.lang == LanguageId::SRC ? pair.src_surface : pair.tgt_surface;
  const auto &proper = s.lang == LanguageId::SRC ? pair.proper_words_src
                                                 : pair.proper_words_tgt;
  std::vector<std::string> words;
  words.reserve(s.tokens.size());
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    std::string w = s.tokens[i];
    if (i == 0 || (proper.count(w) && rng->bernoulli(model.proper_cap_prob)))
      w = capitalize(w);
    if (i + 1 < s.tokens.size() && rng->bernoulli(model.comma_rate))
      w.push_back(',');
    words.push_back(std::move(w));
  }
  // Sentence-final punctuation.
  double u = rng->uniform();
  double acc = 0.0;
  for (const auto &[punct, p] : model.final_punct) {
    acc += p;
    if (u < acc) {
      words.back() += punct;
      break;
    }
  }
  return join_tokens(words);
}

namespace {

json surface_to_json(const SurfaceModel &m) {
  json j;
  j["proper_cap_prob"] = m.proper_cap_prob;
  j["comma_rate"] = m.comma_rate;
  json fp = json::array();
  for (const auto &[tok, p] : m.final_punct) fp.push_back({{"punct", tok}, {"p", p}});
  j["final_punct"] = fp;
  return j;
}

SurfaceModel surface_from_json(const json &j) {
  SurfaceModel m;
  m.proper_cap_prob = j.at("proper_cap_prob").get<double>();
  m.comma_rate = j.at("comma_rate").get<double>();
  m.final_punct.clear();
  for (const auto &e : j.at("final_punct"))
    m.final_punct.push_back({e.at("punct").get<std::string>(), e.at("p").get<double>()});
  return m;
}

}  // namespace

std::string pair_to_json(const SyntheticLangPair &pair) {
  json j;
  j["seed"] = pair.seed;
  j["window"] = pair.window;
  j["window_perm"] = pair.window_perm;
  j["proper_slot"] = pair.grammar.proper_slot;
  j["slot_words"] = pair.grammar.slot_words;
  j["templates"] = pair.grammar.templates;
  json lex = json::object();
  for (const auto &[src, tgt] : pair.lexicon) lex[src] = tgt;
  j["lexicon"] = lex;
  j["src_surface"] = surface_to_json(pair.src_surface);
  j["tgt_surface"] = surface_to_json(pair.tgt_surface);
  return j.dump(2);
}

SyntheticLangPair pair_from_json(const std::string &json_text) {
  json j = json::parse(json_text);
  SyntheticLangPair pair;
  pair.seed = j.at("seed").get<uint64_t>();
  pair.window = j.at("window").get<int>();
  pair.window_perm = j.at("window_perm").get<std::vector<int>>();
  pair.grammar.proper_slot = j.at("proper_slot").get<int>();
  pair.grammar.slot_words =
      j.at("slot_words").get<std::vector<std::vector<std::string>>>();
  pair.grammar.templates =
      j.at("templates").get<std::vector<std::vector<int>>>();
  for (const auto &[src, tgt] : j.at("lexicon").items()) {
    pair.lexicon[src] = tgt.get<std::string>();
    pair.lexicon_inv[tgt.get<std::string>()] = src;
  }
  pair.src_surface = surface_from_json(j.at("src_surface"));
  pair.tgt_surface = surface_from_json(j.at("tgt_surface"));
  for (const std::string &w :
       pair.grammar.slot_words[pair.grammar.proper_slot]) {
    pair.proper_words_src.insert(w);
    pair.proper_words_tgt.insert(pair.lexicon.at(w));
  }
  return pair;
}

void write_lines(const std::string &path,
                 const std::vector<std::string> &lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const std::string &line : lines) out << line << '\n';
}

std::vector<std::string> read_lines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace dbtlab
