#ifndef SCALAR_BASELINE_TAGGER_HPP
#define SCALAR_BASELINE_TAGGER_HPP

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "scalar/error.hpp"
#include "scalar/lexicon.hpp"
#include "scalar/tags.hpp"
#include "scalar/tokenizer.hpp"

namespace scalar {

/// General-English Penn Treebank tagger built from closed lists, digit and
/// suffix rules, and a most-frequent-tag lexicon. It tags the whole token
/// sequence as one pseudo-sentence.
class BaselineTagger {
 public:
  BaselineTagger() { install_builtin_lexicon(); }

  /// Adds or overrides most-frequent-tag entries.
  void add_lexicon_entry(std::string_view word, PtbTag tag) { lexicon_[detail::lowered(word)] = tag; }

  /// Reads "word TAB tag" lines ('#' comments allowed) and merges them in.
  void load_lexicon(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw LoadError("baseline lexicon line " + std::to_string(line_no) + " has no TAB");
      }
      const auto tag = parse_ptb_tag(std::string_view(line).substr(tab + 1));
      if (!tag) throw LoadError("baseline lexicon line " + std::to_string(line_no) + " has an unknown tag");
      add_lexicon_entry(std::string_view(line).substr(0, tab), *tag);
    }
  }

  void load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open baseline lexicon " + path.string());
    load_lexicon(in);
  }

  std::vector<PtbTag> tag(const TokenSequence& words, const Lexicon& lexicon) const {
    std::vector<PtbTag> tags;
    tags.reserve(words.count());
    for (const auto& w : words.words) tags.push_back(tag_word(w, lexicon));

    // Context: a base-form verb after "to" is an infinitive.
    for (std::size_t i = 1; i < tags.size(); ++i) {
      if (tags[i - 1] == PtbTag::TO && (tags[i] == PtbTag::NN || tags[i] == PtbTag::VBP) &&
          verb_bases_.contains(words.words[i])) {
        tags[i] = PtbTag::VB;
      }
    }
    return tags;
  }

  PtbTag tag_word(std::string_view word, const Lexicon& lexicon) const {
    if (auto closed = lexicon.closed_category(word)) {
      switch (*closed) {
        case ClosedCategory::Preposition:
          return word == "to" ? PtbTag::TO : PtbTag::IN;
        case ClosedCategory::Conjunction:
          return PtbTag::CC;
        case ClosedCategory::Determiner:
          return wh_determiners_.contains(std::string(word)) ? PtbTag::WDT : PtbTag::DT;
        case ClosedCategory::Pronoun:
          if (possessives_.contains(std::string(word))) return PtbTag::PRP_POSS;
          if (wh_pronouns_.contains(std::string(word))) return PtbTag::WP;
          return PtbTag::PRP;
      }
    }
    if (is_number_token(word)) return PtbTag::CD;
    if (auto it = lexicon_.find(std::string(word)); it != lexicon_.end()) return it->second;
    if (auto suffix = suffix_tag(word, lexicon)) return *suffix;
    return PtbTag::NN;
  }

  static bool is_number_token(std::string_view word) {
    if (word.empty()) return false;
    if (word.size() > 2 && word[0] == '0' && word[1] == 'x') return true;
    for (char c : word) {
      if (!detail::is_digit(c)) return false;
    }
    return true;
  }

 private:
  static bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
  }

  std::optional<PtbTag> suffix_tag(std::string_view w, const Lexicon& lexicon) const {
    if (w.size() > 4 && ends_with(w, "ing")) return PtbTag::VBG;
    if (w.size() > 3 && ends_with(w, "ed")) return PtbTag::VBD;
    if (w.size() > 3 && ends_with(w, "ly")) return PtbTag::RB;
    for (std::string_view adj : {"able", "ible", "ous", "ive", "ful", "less", "ical", "ic"}) {
      if (w.size() > adj.size() + 2 && ends_with(w, adj)) return PtbTag::JJ;
    }
    for (std::string_view noun : {"tion", "sion", "ment", "ness", "ity", "er", "or"}) {
      if (w.size() > noun.size() + 2 && ends_with(w, noun)) return PtbTag::NN;
    }
    if (w.size() > 2 && ends_with(w, "s") && !ends_with(w, "ss")) {
      const std::string_view stem = w.substr(0, w.size() - 1);
      if (is_known_noun(stem, lexicon)) return PtbTag::NNS;
      if (ends_with(w, "es") && is_known_noun(w.substr(0, w.size() - 2), lexicon)) return PtbTag::NNS;
      if (ends_with(w, "ies")) {
        const std::string stem_y = std::string(w.substr(0, w.size() - 3)) + "y";
        if (is_known_noun(stem_y, lexicon)) return PtbTag::NNS;
      }
    }
    return std::nullopt;
  }

  bool is_known_noun(std::string_view stem, const Lexicon& lexicon) const {
    if (stem.empty() || !lexicon.is_dictionary_word(stem)) return false;
    auto it = lexicon_.find(std::string(stem));
    return it == lexicon_.end() || it->second == PtbTag::NN;
  }

  void add_all(std::initializer_list<std::string_view> words, PtbTag tag) {
    for (auto w : words) lexicon_.emplace(std::string(w), tag);
  }

  void install_builtin_lexicon() {
    add_all({"get", "set", "add", "remove", "open", "close", "read", "write", "run", "execute",
             "create", "delete", "update", "init", "initialize", "load", "save", "find", "check",
             "adjust", "compute", "parse", "build", "handle", "process", "convert", "reset", "start",
             "stop", "send", "receive", "print", "draw", "render", "apply", "clear", "copy", "move",
             "sort", "validate", "make", "show", "hide", "enable", "disable", "register", "insert",
             "append", "push", "pop", "call", "fetch", "put", "bind", "merge", "split", "compare",
             "contains", "emit", "flush", "notify", "resolve", "scan", "select", "serialize",
             "sync", "throw", "toggle", "try", "use", "visit", "wait", "implement", "develop",
             "calculate", "destroy", "dispatch", "encode", "decode", "format", "generate", "go",
             "grow", "keep", "lock", "unlock", "log", "match", "paint", "parse", "refresh",
             "release", "replace", "resize", "restore", "return", "scale", "search", "seek", "skip",
             "swap", "test", "transform", "trim", "verify", "allocate", "attach", "detach",
             "accept", "reject", "collect", "count", "dump", "evaluate", "expand", "extract",
             "fill", "filter", "handle", "ignore", "invoke", "iterate", "join", "listen", "lookup",
             "mark", "post", "query", "reload", "remember", "report", "request", "schedule",
             "shift", "store", "submit", "translate", "unregister", "write", "be", "do", "have"},
            PtbTag::VB);
    add_all({"is", "has", "does", "was"}, PtbTag::VBZ);
    add_all({"empty", "valid", "invalid", "new", "old", "max", "min", "first", "last", "next",
             "previous", "prev", "current", "default", "dynamic", "static", "global", "local",
             "active", "visible", "ready", "full", "null", "true", "false", "main", "temp", "raw",
             "total", "big", "small", "large", "high", "low", "long", "short", "left", "right",
             "top", "bottom", "internal", "external", "public", "private", "safe", "unsafe",
             "dirty", "clean", "hidden", "enabled", "disabled", "pending", "final", "initial",
             "unique", "primary", "secondary", "simple", "complex", "virtual", "abstract",
             "available", "empty", "current", "native", "visible", "quick", "fast",
             "slow", "white", "black", "red", "green", "blue", "async", "sync", "equal", "single",
             "multiple", "average", "open", "closed", "same", "other", "own", "base", "root"},
            PtbTag::JJ);
    add_all({"not", "now", "again", "already", "always", "never", "also", "too", "very",
             "often", "soon", "later", "here", "there", "ever", "once", "instead", "back", "away",
             "forward", "inside", "outside", "up", "down"},
            PtbTag::RB);
    add_all({"more", "less", "better", "faster"}, PtbTag::RBR);
    add_all({"most", "least", "best", "fastest"}, PtbTag::RBS);
    add_all({"bigger", "smaller", "larger", "greater", "higher", "lower", "longer", "shorter",
             "older", "newer", "earlier"},
            PtbTag::JJR);
    add_all({"biggest", "smallest", "largest", "greatest", "highest", "lowest", "longest",
             "shortest", "oldest", "newest", "earliest"},
            PtbTag::JJS);
    add_all({"one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
             "hundred", "thousand", "zero"},
            PtbTag::CD);
    add_all({"data", "info", "string", "thing", "ring", "king", "bed", "speed", "seed", "feed",
             "need", "map", "list", "node", "tree", "value", "key", "name", "id", "index",
             "type", "size", "length", "port", "server", "client", "line", "time", "file", "path",
             "buffer", "stack", "queue", "function", "language", "class", "status", "bus",
             "address", "process", "access", "success", "progress", "class", "alias", "canvas",
             "radius", "axis", "analysis", "basis", "news", "series", "species", "bit", "byte"},
            PtbTag::NN);
    // Verb bases that the built-in lexicon otherwise tags as nouns.
    for (std::string_view w : {"map", "list", "index", "name", "type", "size", "line", "time",
                               "file", "buffer", "stack", "queue", "process", "access", "seed",
                               "feed", "need", "count", "string", "key", "value", "path"}) {
      verb_bases_.emplace(w);
    }
    for (const auto& [word, tag] : lexicon_) {
      if (tag == PtbTag::VB) verb_bases_.insert(word);
    }
  }

  std::unordered_map<std::string, PtbTag> lexicon_;
  std::unordered_set<std::string> verb_bases_;
  const std::unordered_set<std::string> wh_determiners_{"which", "what", "whatever", "whichever"};
  const std::unordered_set<std::string> possessives_{"my", "your", "his", "her", "its", "our", "their"};
  const std::unordered_set<std::string> wh_pronouns_{"who", "whom", "whoever"};
};

}  // namespace scalar

#endif  // SCALAR_BASELINE_TAGGER_HPP
