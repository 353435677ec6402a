#include "dbtlab/vocab.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dbtlab/errors.hpp"

namespace dbtlab {

namespace {
const char *kSpecialNames[Vocabulary::kNumSpecials] = {
    "<pad>", "<bos>", "<eos>", "<unk>", "<mask>", "<lang_src>", "<lang_tgt>"};
}

Vocabulary::Vocabulary() {
  for (const char *name : kSpecialNames) add(name);
}

void Vocabulary::add(const std::string &token) {
  if (token_to_id_.count(token)) return;
  token_to_id_[token] = static_cast<int>(id_to_token_.size());
  id_to_token_.push_back(token);
}

Vocabulary Vocabulary::build(const std::vector<const MonoCorpus *> &corpora) {
  std::map<std::string, long> freq;
  long total = 0;
  for (const MonoCorpus *corpus : corpora) {
    for (const auto &sentence : corpus->sentences) {
      for (const std::string &tok : sentence) {
        ++freq[tok];
        ++total;
      }
    }
  }
  if (total == 0) throw ConfigError("build_vocab: all corpora are empty");

  std::vector<std::pair<std::string, long>> entries(freq.begin(), freq.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto &a, const auto &b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  Vocabulary vocab;
  for (const auto &[tok, cnt] : entries) vocab.add(tok);
  return vocab;
}

int Vocabulary::id(const std::string &token) const {
  auto it = token_to_id_.find(token);
  return it == token_to_id_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(const std::string &token) const {
  return token_to_id_.count(token) > 0;
}

const std::string &Vocabulary::token(int id) const {
  if (id < 0 || id >= size())
    throw std::out_of_range("Vocabulary::token: id " + std::to_string(id) +
                            " out of range (size " + std::to_string(size()) +
                            ")");
  return id_to_token_[id];
}

std::vector<int> Vocabulary::encode(
    const std::vector<std::string> &tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const std::string &tok : tokens) ids.push_back(id(tok));
  return ids;
}

std::vector<std::string> Vocabulary::decode(const std::vector<int> &ids) const {
  std::vector<std::string> tokens;
  tokens.reserve(ids.size());
  for (int i : ids) tokens.push_back(token(i));
  return tokens;
}

void Vocabulary::save(const std::string &path) const {
  write_lines(path, id_to_token_);
}

Vocabulary Vocabulary::load(const std::string &path) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.size() < kNumSpecials)
    throw ConfigError("vocabulary file too short: " + path);
  for (int i = 0; i < kNumSpecials; ++i) {
    if (lines[i] != kSpecialNames[i])
      throw ConfigError("vocabulary file " + path +
                        ": special token mismatch at line " +
                        std::to_string(i));
  }
  Vocabulary vocab;
  for (size_t i = kNumSpecials; i < lines.size(); ++i) {
    if (lines[i].empty())
      throw ConfigError("vocabulary file " + path + ": empty token at line " +
                        std::to_string(i));
    vocab.add(lines[i]);
  }
  if (vocab.id_to_token_.size() != lines.size())
    throw ConfigError("vocabulary file " + path + ": duplicate tokens");
  return vocab;
}

}  // namespace dbtlab
