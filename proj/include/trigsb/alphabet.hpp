#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trigsb/errors.hpp"

namespace trigsb {

/// A letter of the doubled alphabet: generator `symbol` of family `family`,
/// or its dotted copy.
///
/// Letters are ordered as follows: every dotted letter exceeds every undotted
/// one; letters of equal dottedness compare by (family, symbol). The dotted
/// half mirrors the undotted half across families.
struct Letter {
  std::uint32_t family = 0;
  std::uint32_t symbol = 0;
  bool dotted = false;

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (a.dotted != b.dotted) return a.dotted ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.family <=> b.family; c != 0) return c;
    return a.symbol <=> b.symbol;
  }

  constexpr Letter with_dot(bool d) const { return Letter{family, symbol, d}; }
};

using Word = std::vector<Letter>;

/// Degree-lexicographic comparison: length first, then letters left to right.
inline std::strong_ordering cmp_deglex(std::span<const Letter> u, std::span<const Letter> v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (auto c = u[i] <=> v[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct DegLexLess {
  bool operator()(const Word& u, const Word& v) const { return cmp_deglex(u, v) < 0; }
};

struct DegLexGreater {
  bool operator()(const Word& u, const Word& v) const { return cmp_deglex(u, v) > 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Letter& l : w) {
      std::uint64_t k = (std::uint64_t{l.family} << 33) ^ (std::uint64_t{l.symbol} << 1) ^ std::uint64_t{l.dotted};
      h ^= std::hash<std::uint64_t>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word concat(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

/// Registry of families and their generator names.
///
/// Family ids are dense and assigned in registration order; that order is the
/// well order on families. Within a family, the declared generator order is
/// the letter order. Text syntax: `Fam:gen`, `Fam:.gen` (dotted), words are
/// whitespace separated, `@eps` is the empty word.
class Alphabet {
 public:
  struct FamilyInfo {
    std::string name;
    std::vector<std::string> generators;
  };

  std::uint32_t add_family(std::string name, std::vector<std::string> generators) {
    check_name(name, "family name");
    if (find_family(name)) throw InvalidInput("duplicate family name '" + name + "'");
    for (std::size_t i = 0; i < generators.size(); ++i) {
      check_name(generators[i], "generator name");
      if (generators[i].front() == '.') throw InvalidInput("generator name may not start with '.': " + generators[i]);
      for (std::size_t j = 0; j < i; ++j) {
        if (generators[i] == generators[j]) {
          throw InvalidInput("duplicate generator '" + generators[i] + "' in family '" + name + "'");
        }
      }
    }
    families_.push_back(FamilyInfo{std::move(name), std::move(generators)});
    return static_cast<std::uint32_t>(families_.size() - 1);
  }

  std::size_t family_count() const { return families_.size(); }
  const FamilyInfo& family(std::uint32_t id) const {
    if (id >= families_.size()) throw InvalidInput("unregistered family id " + std::to_string(id));
    return families_[id];
  }

  std::optional<std::uint32_t> find_family(std::string_view name) const {
    for (std::size_t i = 0; i < families_.size(); ++i) {
      if (families_[i].name == name) return static_cast<std::uint32_t>(i);
    }
    return std::nullopt;
  }

  bool contains(const Letter& l) const {
    return l.family < families_.size() && l.symbol < families_[l.family].generators.size();
  }

  void require(const Letter& l) const {
    if (!contains(l)) {
      throw InvalidInput("letter (" + std::to_string(l.family) + "," + std::to_string(l.symbol) +
                         ") does not belong to a registered family");
    }
  }

  /// Letter comparison with registration check.
  std::strong_ordering cmp_letter(const Letter& a, const Letter& b) const {
    require(a);
    require(b);
    return a <=> b;
  }

  /// All letters of the registered families, undotted and dotted, ascending.
  std::vector<Letter> all_letters() const {
    std::vector<Letter> out;
    for (bool d : {false, true}) {
      for (std::uint32_t f = 0; f < families_.size(); ++f) {
        for (std::uint32_t s = 0; s < families_[f].generators.size(); ++s) out.push_back(Letter{f, s, d});
      }
    }
    return out;
  }

  std::string format_letter(const Letter& l) const {
    require(l);
    const auto& fam = families_[l.family];
    return fam.name + (l.dotted ? ":." : ":") + fam.generators[l.symbol];
  }

  std::string format_word(std::span<const Letter> w) const {
    if (w.empty()) return "@eps";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += format_letter(w[i]);
    }
    return out;
  }

  Letter parse_letter(std::string_view token) const {
    auto [fam, dotted, gen] = split_token(token);
    auto id = find_family(fam);
    if (!id) throw InvalidInput("unknown family '" + std::string(fam) + "' in letter '" + std::string(token) + "'");
    const auto& gens = families_[*id].generators;
    auto it = std::find(gens.begin(), gens.end(), gen);
    if (it == gens.end()) {
      throw InvalidInput("unknown generator '" + std::string(gen) + "' in family '" + std::string(fam) + "'");
    }
    return Letter{*id, static_cast<std::uint32_t>(it - gens.begin()), dotted};
  }

  Word parse_word(std::string_view text) const {
    return parse_tokens(text, [this](std::string_view t) { return parse_letter(t); });
  }

  /// Parses a word, registering unseen families and generators on the fly.
  /// Used where no presentation is loaded (term rendering).
  Word intern_word(std::string_view text) {
    return parse_tokens(text, [this](std::string_view t) {
      auto [fam, dotted, gen] = split_token(t);
      auto id = find_family(fam);
      if (!id) id = add_family(std::string(fam), {});
      auto& gens = families_[*id].generators;
      auto it = std::find(gens.begin(), gens.end(), gen);
      if (it == gens.end()) {
        check_name(std::string(gen), "generator name");
        gens.emplace_back(gen);
        it = gens.end() - 1;
      }
      return Letter{*id, static_cast<std::uint32_t>(it - gens.begin()), dotted};
    });
  }

 private:
  struct Token {
    std::string_view family;
    bool dotted;
    std::string_view generator;
  };

  static Token split_token(std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == token.size()) {
      throw InvalidInput("malformed letter '" + std::string(token) + "' (expected Family:gen or Family:.gen)");
    }
    std::string_view fam = token.substr(0, colon);
    std::string_view gen = token.substr(colon + 1);
    bool dotted = false;
    if (gen.front() == '.') {
      dotted = true;
      gen.remove_prefix(1);
      if (gen.empty()) throw InvalidInput("malformed letter '" + std::string(token) + "'");
    }
    return {fam, dotted, gen};
  }

  template <class F>
  static Word parse_tokens(std::string_view text, F&& letter_of) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(std::move(t));
    if (tokens.size() == 1 && tokens[0] == "@eps") return {};
    if (tokens.empty()) throw InvalidInput("empty word text (use @eps for the empty word)");
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) w.push_back(letter_of(t));
    return w;
  }

  static void check_name(const std::string& name, const char* what) {
    if (name.empty()) throw InvalidInput(std::string("empty ") + what);
    for (char c : name) {
      if (c == ':' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        throw InvalidInput(std::string(what) + " '" + name + "' contains a reserved character");
      }
    }
    if (name == "@eps") throw InvalidInput(std::string(what) + " may not be @eps");
  }

  std::vector<FamilyInfo> families_;
};

}  // namespace trigsb
