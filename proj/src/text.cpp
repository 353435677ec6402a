#include "dbtlab/text.hpp"

namespace dbtlab {

std::vector<uint32_t> utf8_decode(const std::string &s) {
  std::vector<uint32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    uint32_t cp = 0xFFFD;
    size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6 && i + 1 < n) {
      cp = (c & 0x1F) << 6 | (s[i + 1] & 0x3F);
      len = 2;
    } else if ((c >> 4) == 0xE && i + 2 < n) {
      cp = (c & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F);
      len = 3;
    } else if ((c >> 3) == 0x1E && i + 3 < n) {
      cp = (c & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 |
           (s[i + 2] & 0x3F) << 6 | (s[i + 3] & 0x3F);
      len = 4;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void utf8_append(std::string *out, uint32_t cp) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space_cp(uint32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Curated punctuation set: ASCII P*, Latin-1 punctuation, and the General
// Punctuation block minus its space/symbol codepoints. This is the scoring
// normalizer's set; symbols ($ + < = > ^ ` | ~) are deliberately not in it.
bool is_punct_cp(uint32_t cp) {
  if (cp < 0x80) {
    switch (cp) {
      case '!': case '"': case '#': case '%': case '&': case '\'':
      case '(': case ')': case '*': case ',': case '-': case '.':
      case '/': case ':': case ';': case '?': case '@': case '[':
      case '\\': case ']': case '_': case '{': case '}':
        return true;
      default:
        return false;
    }
  }
  switch (cp) {
    case 0x00A1: case 0x00A7: case 0x00AB: case 0x00B6: case 0x00B7:
    case 0x00BB: case 0x00BF:
      return true;
    default:
      break;
  }
  if (cp >= 0x2010 && cp <= 0x2027) return true;  // dashes, quotes, ellipsis
  if (cp >= 0x2030 && cp <= 0x205E)
    return cp != 0x2044 && cp != 0x2052;  // fraction/percent slashes: symbols
  return false;
}

bool is_letter_cp(uint32_t cp) {
  if (cp < 0x80)
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  // Outside Latin ranges: anything that is neither space nor punctuation
  // counts as word material.
  return !is_space_cp(cp) && !is_punct_cp(cp) && cp >= 0x80;
}

uint32_t to_lower_cp(uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  return cp;
}

static bool is_apostrophe_cp(uint32_t cp) {
  return cp == '\'' || cp == 0x2019;
}

std::string normalize(const std::string &text) {
  std::vector<uint32_t> cps = utf8_decode(text);
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool emitted_any = false;
  const size_t n = cps.size();
  for (size_t i = 0; i < n; ++i) {
    uint32_t cp = cps[i];
    if (is_space_cp(cp)) {
      pending_space = emitted_any;
      continue;
    }
    if (is_punct_cp(cp)) {
      bool keep = is_apostrophe_cp(cp) && i > 0 && i + 1 < n &&
                  is_letter_cp(cps[i - 1]) && is_letter_cp(cps[i + 1]);
      if (!keep) continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8_append(&out, to_lower_cp(cp));
    emitted_any = true;
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string &s) {
  std::vector<std::string> tokens;
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string> &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string capitalize(const std::string &token) {
  std::vector<uint32_t> cps = utf8_decode(token);
  if (cps.empty()) return token;
  uint32_t c = cps[0];
  if (c >= 'a' && c <= 'z') c -= 0x20;
  else if (c >= 0xE0 && c <= 0xFE && c != 0xF7) c -= 0x20;
  std::string out;
  utf8_append(&out, c);
  for (size_t i = 1; i < cps.size(); ++i) utf8_append(&out, cps[i]);
  return out;
}

uint64_t fnv1a64(const void *data, size_t n) {
  const unsigned char *p = static_cast<const unsigned char *>(data);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t fnv1a64(const std::string &s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(uint64_t h) {
  static const char *digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace dbtlab
