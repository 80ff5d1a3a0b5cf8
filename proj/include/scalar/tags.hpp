#ifndef SCALAR_TAGS_HPP
#define SCALAR_TAGS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "scalar/error.hpp"

namespace scalar {

// Identifier-specific tagset. Enumerator order is the model's class order and
// therefore the argmax tie-break order.
enum class ScalarTag : std::size_t { N, DT, CJ, P, NPL, NM, V, VM, PR, D, PRE };

inline constexpr std::size_t kScalarTagCount = 11;

inline constexpr std::array<ScalarTag, kScalarTagCount> kAllScalarTags = {
    ScalarTag::N,  ScalarTag::DT, ScalarTag::CJ, ScalarTag::P,  ScalarTag::NPL, ScalarTag::NM,
    ScalarTag::V,  ScalarTag::VM, ScalarTag::PR, ScalarTag::D,  ScalarTag::PRE};

inline constexpr std::array<std::string_view, kScalarTagCount> kScalarTagCodes = {
    "N", "DT", "CJ", "P", "NPL", "NM", "V", "VM", "PR", "D", "PRE"};

constexpr std::size_t index_of(ScalarTag tag) { return static_cast<std::size_t>(tag); }

constexpr std::string_view to_string(ScalarTag tag) { return kScalarTagCodes[index_of(tag)]; }

inline std::optional<ScalarTag> parse_scalar_tag(std::string_view code) {
  for (std::size_t i = 0; i < kScalarTagCount; ++i) {
    if (kScalarTagCodes[i] == code) return kAllScalarTags[i];
  }
  return std::nullopt;
}

// Penn Treebank codes emitted by the baseline tagger, plus a catch-all.
enum class PtbTag : std::size_t {
  NN, NNS, NNP, NNPS,
  VB, VBD, VBG, VBN, VBP, VBZ,
  JJ, JJR, JJS,
  RB, RBR, RBS,
  IN, TO, CC,
  DT, PDT, WDT,
  PRP, PRP_POSS, WP,
  CD,
  OTHER
};

inline constexpr std::size_t kPtbTagCount = 27;

inline constexpr std::array<std::string_view, kPtbTagCount> kPtbTagCodes = {
    "NN", "NNS", "NNP", "NNPS", "VB",  "VBD", "VBG", "VBN",  "VBP", "VBZ", "JJ",  "JJR", "JJS", "RB",
    "RBR", "RBS", "IN",  "TO",   "CC", "DT",  "PDT", "WDT", "PRP", "PRP$", "WP", "CD", "OTHER"};

constexpr std::size_t index_of(PtbTag tag) { return static_cast<std::size_t>(tag); }

constexpr std::string_view to_string(PtbTag tag) { return kPtbTagCodes[index_of(tag)]; }

constexpr PtbTag ptb_tag_at(std::size_t i) { return static_cast<PtbTag>(i); }

inline std::optional<PtbTag> parse_ptb_tag(std::string_view code) {
  for (std::size_t i = 0; i < kPtbTagCount; ++i) {
    if (kPtbTagCodes[i] == code) return ptb_tag_at(i);
  }
  return std::nullopt;
}

/// Total mapping from general-English tags onto the identifier tagset. Never yields PRE.
constexpr ScalarTag map_ptb_to_scalar(PtbTag tag) {
  switch (tag) {
    case PtbTag::VB:
    case PtbTag::VBD:
    case PtbTag::VBG:
    case PtbTag::VBN:
    case PtbTag::VBP:
    case PtbTag::VBZ:
      return ScalarTag::V;
    case PtbTag::NN:
    case PtbTag::NNP:
      return ScalarTag::N;
    case PtbTag::NNS:
    case PtbTag::NNPS:
      return ScalarTag::NPL;
    case PtbTag::JJ:
    case PtbTag::JJR:
    case PtbTag::JJS:
      return ScalarTag::NM;
    case PtbTag::RB:
    case PtbTag::RBR:
    case PtbTag::RBS:
      return ScalarTag::VM;
    case PtbTag::IN:
    case PtbTag::TO:
      return ScalarTag::P;
    case PtbTag::CC:
      return ScalarTag::CJ;
    case PtbTag::DT:
    case PtbTag::PDT:
    case PtbTag::WDT:
      return ScalarTag::DT;
    case PtbTag::PRP:
    case PtbTag::PRP_POSS:
    case PtbTag::WP:
      return ScalarTag::PR;
    case PtbTag::CD:
      return ScalarTag::D;
    case PtbTag::OTHER:
      return ScalarTag::N;
  }
  return ScalarTag::N;
}

/// Syntactic role of the identifier being tagged.
enum class IdentifierContext : std::size_t { Function, Class, Attribute, Parameter, Declaration };

inline constexpr std::size_t kContextCount = 5;

inline constexpr std::array<std::string_view, kContextCount> kContextNames = {
    "function", "class", "attribute", "parameter", "declaration"};

constexpr std::size_t index_of(IdentifierContext c) { return static_cast<std::size_t>(c); }

constexpr std::string_view to_string(IdentifierContext c) { return kContextNames[index_of(c)]; }

inline std::optional<IdentifierContext> parse_context(std::string_view name) {
  for (std::size_t i = 0; i < kContextCount; ++i) {
    if (kContextNames[i] == name) return static_cast<IdentifierContext>(i);
  }
  return std::nullopt;
}

}  // namespace scalar

#endif  // SCALAR_TAGS_HPP
