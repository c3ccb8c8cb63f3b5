#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <openssl/evp.h>

#include "xricl/casefold_data.hpp"

namespace xricl {

// ---------------------------------------------------------------------------
// UTF-8 <-> codepoints
// ---------------------------------------------------------------------------

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Permissive decoder: malformed sequences become U+FFFD, one per bad byte run.
inline std::vector<char32_t> utf8_to_codepoints(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto bad = [&]() { out.push_back(0xFFFD); ++i; };
  while (i < text.size()) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int need = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) { need = 1; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { need = 2; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { need = 3; cp = b0 & 0x07; }
    else { bad(); continue; }
    if (i + static_cast<std::size_t>(need) >= text.size()) { bad(); continue; }
    bool ok = true;
    for (int k = 1; k <= need; ++k) {
      const unsigned char bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) { ok = false; break; }
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) { bad(); continue; }
    // reject overlong encodings
    if ((need == 1 && cp < 0x80) || (need == 2 && cp < 0x800) || (need == 3 && cp < 0x10000)) {
      bad();
      continue;
    }
    out.push_back(cp);
    i += 1 + static_cast<std::size_t>(need);
  }
  return out;
}

inline std::string codepoints_to_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

// ---------------------------------------------------------------------------
// Text normalization: full case folding + whitespace-run collapsing
// ---------------------------------------------------------------------------

inline bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

inline void casefold_append(std::vector<char32_t>& out, char32_t cp) {
  const detail::CaseFoldEntry* begin = detail::kCaseFoldTable;
  const detail::CaseFoldEntry* end = begin + detail::kCaseFoldCount;
  auto it = std::lower_bound(begin, end, cp, [](const detail::CaseFoldEntry& e, char32_t v) {
    return e.cp < v;
  });
  if (it != end && it->cp == cp) {
    for (std::uint8_t k = 0; k < it->len; ++k) out.push_back(it->folded[k]);
  } else {
    out.push_back(cp);
  }
}

// Case-folded codepoints with whitespace runs collapsed to a single U+0020,
// leading/trailing whitespace dropped.
inline std::vector<char32_t> normalized_codepoints(std::string_view text) {
  std::vector<char32_t> cps = utf8_to_codepoints(text);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_unicode_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    casefold_append(out, cp);
  }
  return out;
}

inline std::string normalize_text(std::string_view text) {
  return codepoints_to_utf8(normalized_codepoints(text));
}

// Runs of ASCII whitespace collapsed to one space, ends trimmed. Used for
// one-line SQL and completion cleanup, where case must be preserved.
inline std::string flatten_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending = !out.empty();
      continue;
    }
    if (pending) {
      out.push_back(' ');
      pending = false;
    }
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hashing
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seeded FNV-1a over bytes with a splitmix64 finalizer for avalanche.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0) {
  std::uint64_t h = 14695981039346656037ULL ^ splitmix64(seed);
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return splitmix64(h);
}

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: EVP_Digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Character n-grams and Jaccard overlap
// ---------------------------------------------------------------------------

// n-grams of the normalized codepoint sequence, each serialized back to UTF-8.
inline std::vector<std::string> char_ngrams(std::string_view text, int n_min, int n_max) {
  const std::vector<char32_t> cps = normalized_codepoints(text);
  std::vector<std::string> grams;
  for (int n = n_min; n <= n_max; ++n) {
    if (n <= 0 || cps.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + n <= cps.size(); ++i) {
      std::string g;
      for (int k = 0; k < n; ++k) append_utf8(g, cps[i + k]);
      grams.push_back(std::move(g));
    }
  }
  return grams;
}

inline std::unordered_set<std::string> trigram_set(std::string_view text) {
  auto grams = char_ngrams(text, 3, 3);
  return {grams.begin(), grams.end()};
}

// Character-3-gram Jaccard on normalized text. Two texts too short to produce
// any trigram compare by normalized equality.
inline double trigram_jaccard(std::string_view a, std::string_view b) {
  const auto sa = trigram_set(a);
  const auto sb = trigram_set(b);
  if (sa.empty() && sb.empty()) {
    return normalize_text(a) == normalize_text(b) ? 1.0 : 0.0;
  }
  if (sa.empty() || sb.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& g : sa) inter += sb.count(g);
  const std::size_t uni = sa.size() + sb.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

// ---------------------------------------------------------------------------
// Deterministic RNG helpers (portable across standard libraries)
// ---------------------------------------------------------------------------

class SplitMixRng {
 public:
  explicit SplitMixRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
};

}  // namespace xricl
