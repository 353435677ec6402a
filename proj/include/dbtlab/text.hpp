#ifndef DBTLAB_TEXT_HPP
#define DBTLAB_TEXT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dbtlab {

// UTF-8 <-> codepoints. Invalid bytes decode as U+FFFD.
std::vector<uint32_t> utf8_decode(const std::string &s);
void utf8_append(std::string *out, uint32_t cp);

bool is_space_cp(uint32_t cp);
bool is_punct_cp(uint32_t cp);
bool is_letter_cp(uint32_t cp);
uint32_t to_lower_cp(uint32_t cp);

// Lowercases, strips punctuation (apostrophes between two letters survive),
// collapses whitespace runs and trims. Idempotent. This is the text form a
// speech recognizer emits and the form all error-rate scoring runs on.
std::string normalize(const std::string &text);

// Whitespace tokenization; join is its inverse for well-formed tokens.
std::vector<std::string> split_tokens(const std::string &s);
std::string join_tokens(const std::vector<std::string> &tokens);

// Uppercases the first letter of a token (ASCII/Latin-1).
std::string capitalize(const std::string &token);

// FNV-1a, used for content addressing and corpus stratification.
uint64_t fnv1a64(const void *data, size_t n);
uint64_t fnv1a64(const std::string &s);
std::string hex64(uint64_t h);

}  // namespace dbtlab

#endif  // DBTLAB_TEXT_HPP
