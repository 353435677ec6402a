#ifndef DBTLAB_VOCAB_HPP
#define DBTLAB_VOCAB_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "dbtlab/corpus.hpp"

namespace dbtlab {

// Shared token<->id bijection over both languages with fixed special ids.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;
  static constexpr int kUnk = 3;
  static constexpr int kMask = 4;
  static constexpr int kLangSrc = 5;
  static constexpr int kLangTgt = 6;
  static constexpr int kNumSpecials = 7;

  Vocabulary();

  // Frequency-descending order, ties lexicographic; deterministic.
  static Vocabulary build(const std::vector<const MonoCorpus *> &corpora);

  int id(const std::string &token) const;  // kUnk for unknown tokens
  bool contains(const std::string &token) const;
  const std::string &token(int id) const;
  int size() const { return static_cast<int>(id_to_token_.size()); }

  static bool is_special(int id) { return id >= 0 && id < kNumSpecials; }
  // BOS/EOS/PAD/MASK/LANG tags; UNK is lexical and not a control id.
  static bool is_control(int id) { return is_special(id) && id != kUnk; }
  static int lang_tag(LanguageId lang) {
    return lang == LanguageId::SRC ? kLangSrc : kLangTgt;
  }

  std::vector<int> encode(const std::vector<std::string> &tokens) const;
  std::vector<std::string> decode(const std::vector<int> &ids) const;

  // One token per line, line number = id (specials included).
  void save(const std::string &path) const;
  static Vocabulary load(const std::string &path);

 private:
  void add(const std::string &token);

  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string, int> token_to_id_;
};

}  // namespace dbtlab

#endif  // DBTLAB_VOCAB_HPP
