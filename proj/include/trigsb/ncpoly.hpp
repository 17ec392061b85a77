#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigsb/alphabet.hpp"
#include "trigsb/rational.hpp"

namespace trigsb {

/// Noncommutative polynomial with rational coefficients.
///
/// Terms are stored in descending deg-lex order, so the leading term is the
/// first entry. No stored coefficient is ever zero.
class Polynomial {
 public:
  using Terms = std::map<Word, Rational, DegLexGreater>;

  Polynomial() = default;

  static Polynomial monomial(Word w, const Rational& c = 1) {
    Polynomial p;
    p.add_term(std::move(w), c);
    return p;
  }
  static Polynomial letter(Letter l) { return monomial(Word{l}); }
  static Polynomial constant(const Rational& c) { return monomial(Word{}, c); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += c * left * g * right
  void add_scaled(const Polynomial& g, const Rational& c, std::span<const Letter> left = {},
                  std::span<const Letter> right = {}) {
    if (c == 0) return;
    for (const auto& [w, a] : g.terms_) add_term(concat(left, w, right), c * a);
  }

  const Word& leading_word() const {
    if (is_zero()) throw DomainError("leading word of the zero polynomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coeff() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& g) {
    for (const auto& [w, c] : g.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& g) {
    for (const auto& [w, c] : g.terms_) add_term(w, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [w, a] : terms_) a *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial r;
    for (const auto& [u, a] : f.terms_) {
      for (const auto& [v, b] : g.terms_) r.add_term(concat(u, v), a * b);
    }
    return r;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.terms_ == g.terms_; }

  /// Term-by-term comparison (descending words, then coefficients). Used only
  /// to break ties deterministically between rules.
  friend bool lex_less(const Polynomial& f, const Polynomial& g) {
    auto i = f.terms_.begin();
    auto j = g.terms_.begin();
    for (; i != f.terms_.end() && j != g.terms_.end(); ++i, ++j) {
      if (auto c = cmp_deglex(i->first, j->first); c != 0) return c < 0;
      if (i->second != j->second) return i->second < j->second;
    }
    return i == f.terms_.end() && j != g.terms_.end();
  }

  /// Applies a linear map given on words (word -> polynomial).
  template <class F>
  Polynomial map_words(F&& image_of) const {
    Polynomial r;
    for (const auto& [w, c] : terms_) r.add_scaled(image_of(w), c);
    return r;
  }

 private:
  Terms terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

inline std::pair<Word, Rational> leading(const Polynomial& f) { return {f.leading_word(), f.leading_coeff()}; }

inline Polynomial make_monic(const Polynomial& f) {
  Rational lc = f.leading_coeff();
  if (lc == 1) return f;
  return f * Rational(1 / lc);
}

inline std::string format_poly(const Polynomial& f, const Alphabet& alpha) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "- ";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += format_rational(mag);
      out += ' ';
    }
    out += alpha.format_word(w);
    first = false;
  }
  return out;
}

/// Parses `1/2 T1:x T1:.y - T1:.z`: terms separated by `+`/`-` tokens, each an
/// optional coefficient followed by a word (`@eps` or nothing for the empty word).
inline Polynomial parse_poly(std::string_view text, const Alphabet& alpha) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  if (tokens.empty()) throw InvalidInput("empty polynomial text");
  if (tokens.size() == 1 && tokens[0] == "0") return {};

  Polynomial f;
  Rational sign = 1, coeff = 1;
  Word word;
  bool term_open = false, sign_seen = false;
  auto flush = [&] {
    f.add_term(word, sign * coeff);
    sign = coeff = 1;
    word.clear();
    term_open = sign_seen = false;
  };
  for (const auto& t : tokens) {
    if (t == "+" || t == "-") {
      if (term_open) {
        flush();
      } else if (sign_seen || !f.is_zero() || &t != &tokens.front()) {
        throw InvalidInput("misplaced operator '" + t + "' in polynomial '" + std::string(text) + "'");
      }
      sign_seen = true;
      if (t == "-") sign = -1;
      continue;
    }
    if (looks_like_rational(t)) {
      if (term_open) throw InvalidInput("coefficient must precede the word: '" + t + "'");
      coeff = parse_rational(t);
      term_open = true;
      continue;
    }
    term_open = true;
    if (t != "@eps") word.push_back(alpha.parse_letter(t));
  }
  if (!term_open) throw InvalidInput("polynomial ends with an operator: '" + std::string(text) + "'");
  flush();
  return f;
}

}  // namespace trigsb
