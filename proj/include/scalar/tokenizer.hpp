#ifndef SCALAR_TOKENIZER_HPP
#define SCALAR_TOKENIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scalar/error.hpp"

namespace scalar {

/// An identifier broken into lowercase words, in order.
struct TokenSequence {
  std::string raw;
  std::vector<std::string> words;

  std::size_t count() const { return words.size(); }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

namespace detail {

constexpr bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
constexpr bool is_alpha(char c) { return is_upper(c) || is_lower(c); }
constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }
constexpr bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }
constexpr bool is_hex_letter(char c) { return (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }
constexpr char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

inline std::string lowered(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower(c);
  return out;
}

// Length of a "0x..." literal starting at pos, or 0 when there is none.
inline std::size_t hex_literal_length(std::string_view s, std::size_t pos) {
  if (pos + 2 >= s.size() || s[pos] != '0' || (s[pos + 1] != 'x' && s[pos + 1] != 'X')) return 0;
  if (pos > 0 && is_digit(s[pos - 1])) return 0;
  std::size_t end = pos + 2;
  while (end < s.size() && (is_digit(s[end]) || is_hex_letter(s[end]))) ++end;
  if (end == pos + 2) return 0;
  // "0xFFCount": the trailing capital starts the next word.
  if (end < s.size() && is_lower(s[end]) && is_upper(s[end - 1])) --end;
  if (end == pos + 2) return 0;
  return end - pos;
}

}  // namespace detail

/// Splits an identifier on delimiters, case changes and letter/digit changes.
///
/// Any non-alphanumeric ASCII character acts as a delimiter and is dropped.
/// An upper-case run followed by a lower-case letter keeps its last capital for
/// the next word ("XMLReader" -> xml, reader). "0x" literals stay one token.
/// Throws MalformedIdentifier on empty input, non-ASCII bytes, or input with
/// no alphanumeric character.
inline TokenSequence split(std::string_view identifier) {
  using namespace detail;
  if (identifier.empty()) throw MalformedIdentifier("empty identifier");
  for (char c : identifier) {
    if (static_cast<unsigned char>(c) >= 0x80 || static_cast<unsigned char>(c) < 0x20) {
      throw MalformedIdentifier("identifier contains a non-printable or non-ASCII byte: " +
                                std::string(identifier));
    }
  }

  TokenSequence seq;
  seq.raw = std::string(identifier);
  const std::size_t n = identifier.size();
  std::size_t i = 0;
  while (i < n) {
    const char c = identifier[i];
    if (!is_alnum(c)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (is_digit(c)) {
      if (std::size_t hex = hex_literal_length(identifier, i); hex > 0) {
        j = i + hex;
      } else {
        while (j < n && is_digit(identifier[j])) ++j;
      }
    } else if (is_lower(c)) {
      while (j < n && is_lower(identifier[j])) ++j;
    } else {
      // Upper-case start: either "Word" or an acronym run "XML".
      std::size_t k = i;
      while (k < n && is_upper(identifier[k])) ++k;
      if (k - i == 1) {
        j = k;
        while (j < n && is_lower(identifier[j])) ++j;
      } else if (k < n && is_lower(identifier[k])) {
        j = k - 1;
      } else {
        j = k;
      }
    }
    seq.words.push_back(lowered(identifier.substr(i, j - i)));
    i = j;
  }

  if (seq.words.empty()) {
    throw MalformedIdentifier("identifier has no alphanumeric characters: " + std::string(identifier));
  }
  return seq;
}

/// index / count for a 1-based index; the last word always scores 1.0.
inline double position_ratio(std::size_t index, std::size_t count) {
  if (count == 0 || index < 1 || index > count) {
    throw ContractViolation("position_ratio: index " + std::to_string(index) + " outside [1, " +
                            std::to_string(count) + "]");
  }
  return static_cast<double>(index) / static_cast<double>(count);
}

/// Joins words with '_' so that split() reproduces them.
inline std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += '_';
    out += words[i];
  }
  return out;
}

}  // namespace scalar

#endif  // SCALAR_TOKENIZER_HPP
