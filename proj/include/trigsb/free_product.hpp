#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigsb/alphabet.hpp"
#include "trigsb/errors.hpp"
#include "trigsb/gsb.hpp"
#include "trigsb/ncpoly.hpp"
#include "trigsb/replicated.hpp"
#include "trigsb/structures.hpp"

namespace trigsb {

/// Elements of a free product: a single normal-form word (coefficient 1) for
/// trioids and dimonoids, a rational combination of normal-form words for
/// trialgebras.
using FpElement = Polynomial;

/// Free product of finitely many trioids, dimonoids or trialgebras.
///
/// Family i gets id i in the doubled alphabet. Normal forms are alternating
/// words over the surviving undotted letters and all dotted letters, with at
/// least one dot (t=3) or exactly one dot (t=2).
class FreeProduct {
 public:
  FreeProduct(std::vector<Presentation> presentations, TMode mode) : presentations_(std::move(presentations)), mode_(mode) {
    if (presentations_.empty()) throw InvalidInput("a free product needs at least one factor");
    std::vector<Polynomial> rules;
    for (std::uint32_t i = 0; i < presentations_.size(); ++i) {
      const auto& p = presentations_[i];
      require_axioms(p, mode_);
      alphabet_.add_family(name_of(p), elements_of(p));
      relations_.push_back(relations(p, mode_, i));
      quotients_.push_back(associated_quotient(p, mode_, i));
      for (const auto& r : relations_.back().psi_rules.rules()) rules.push_back(r);
      for (const auto& r : quotients_.back().R.rules()) rules.push_back(r);
    }
    system_ = RewriteSystem(rules);
    for (const Letter& l : alphabet_.all_letters()) {
      if (l.dotted || quotients_[l.family].is_rep[l.symbol]) normal_letters_.push_back(l);
    }
  }

  TMode mode() const { return mode_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t family_count() const { return presentations_.size(); }
  const Presentation& presentation(std::uint32_t i) const { return presentations_.at(i); }
  const Relations& relations_of(std::uint32_t i) const { return relations_.at(i); }
  const AssociatedQuotient& quotient(std::uint32_t i) const { return quotients_.at(i); }

  /// The union of all psi rules and all R_i: a Groebner-Shirshov basis of the
  /// enveloping associative algebra.
  const RewriteSystem& system() const { return system_; }

  /// Letters allowed in normal forms, ascending.
  const std::vector<Letter>& normal_letters() const { return normal_letters_; }

  bool is_normal_letter(const Letter& l) const {
    return alphabet_.contains(l) && (l.dotted || quotients_[l.family].is_rep[l.symbol]);
  }

  bool is_normal_word(const Word& u) const {
    if (u.empty()) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!is_normal_letter(u[i])) return false;
      if (i && u[i].family == u[i - 1].family) return false;
    }
    return in_psi_image(u, mode_);
  }

  void require_normal(const FpElement& f) const {
    for (const auto& [w, c] : f) {
      if (!is_normal_word(w)) throw InvalidInput("'" + alphabet_.format_word(w) + "' is not a normal form in this free product");
    }
  }

  /// Merge of two adjacent normal letters. Letters of different families are
  /// left as the two-letter word; otherwise the result is a combination of
  /// letters of that family (undotted iff both inputs are undotted).
  Polynomial red(const Letter& y, const Letter& z) const {
    for (const Letter& l : {y, z}) {
      if (!is_normal_letter(l)) {
        throw InvalidInput("letter " + (alphabet_.contains(l) ? alphabet_.format_letter(l) : std::string("?")) +
                           " is not a normal-form letter");
      }
    }
    if (y.family != z.family) return Polynomial::monomial(Word{y, z});
    const auto& p = presentations_[y.family];
    if (!y.dotted && !z.dotted) {
      return quotients_[y.family].project(combination_poly(product(p, Op::vdash, y.symbol, z.symbol), y.family, false));
    }
    Op op = y.dotted && z.dotted ? Op::perp : (y.dotted ? Op::dashv : Op::vdash);
    if (op == Op::perp && mode_ != TMode::three) throw InvalidOperation("two dotted letters cannot merge in dialgebra mode");
    return combination_poly(product(p, op, y.symbol, z.symbol), y.family, true);
  }

  /// Closed-form product of normal forms:
  ///   y1..yn |- z1..zm  = phi(y1)..phi(y_{n-1}) Red(phi(yn) z1) z2..zm
  ///   y1..yn -| z1..zm  = y1..y_{n-1} Red(yn phi(z1)) phi(z2)..phi(zm)
  ///   y1..yn _|_ z1..zm = y1..y_{n-1} Red(yn z1) z2..zm
  /// where every erased letter is replaced by its representative.
  FpElement mul(Op op, const FpElement& u, const FpElement& v) const {
    if (op == Op::perp && mode_ != TMode::three) throw InvalidOperation("perp is not defined in dialgebra mode (t=2)");
    require_normal(u);
    require_normal(v);
    FpElement out;
    for (const auto& [y, a] : u) {
      for (const auto& [z, b] : v) out.add_scaled(mul_words(op, y, z), a * b);
    }
    return out;
  }

  /// Ground truth: the product in the enveloping algebra reduced modulo system().
  FpElement oracle(Op op, const FpElement& u, const FpElement& v) const {
    require_normal(u);
    require_normal(v);
    return reduce(tri_op(op, u, v, mode_), system_);
  }

  /// Normal-form words of length 1..max_len in deg-lex order.
  std::vector<Word> basis(std::size_t max_len) const {
    if (max_len < 1) throw InvalidInput("max_len must be at least 1");
    const std::size_t max_dots = mode_ == TMode::two ? 1 : max_len;
    std::vector<Word> out;
    std::vector<Word> level;
    for (const Letter& l : normal_letters_) level.push_back(Word{l});
    for (std::size_t len = 1;; ++len) {
      for (const auto& w : level) {
        if (in_psi_image(w, mode_)) out.push_back(w);
      }
      if (len == max_len) break;
      std::vector<Word> next;
      for (const auto& w : level) {
        std::size_t dots = dot_count(w);
        for (const Letter& l : normal_letters_) {
          if (l.family == w.back().family) continue;
          if (l.dotted && dots == max_dots) continue;
          Word x = w;
          x.push_back(l);
          next.push_back(std::move(x));
        }
      }
      level = std::move(next);
    }
    return out;
  }

  /// The image of generator `symbol` of family `family`: its dotted letter.
  FpElement embed(std::uint32_t family, std::uint32_t symbol) const {
    Letter l{family, symbol, true};
    alphabet_.require(l);
    return Polynomial::letter(l);
  }

  FpElement embed(const std::string& family, const std::string& generator) const {
    auto id = alphabet_.find_family(family);
    if (!id) throw InvalidInput("unknown family '" + family + "'");
    const auto& gens = alphabet_.family(*id).generators;
    for (std::uint32_t s = 0; s < gens.size(); ++s) {
      if (gens[s] == generator) return embed(*id, s);
    }
    throw InvalidInput("unknown generator '" + generator + "' in family '" + family + "'");
  }

  /// Dotted image of x op y computed in the input structure itself.
  FpElement embedded_product(std::uint32_t family, Op op, std::uint32_t x, std::uint32_t y) const {
    return combination_poly(product(presentations_.at(family), op, x, y), family, true);
  }

  FpElement parse(const std::string& text) const {
    FpElement f = parse_poly(text, alphabet_);
    require_normal(f);
    return f;
  }

  std::string format(const FpElement& f) const { return format_poly(f, alphabet_); }

 private:
  Polynomial project_letter(const Letter& l) const { return quotients_[l.family].rep_map[l.symbol]; }

  Polynomial erased(std::span<const Letter> w) const {
    Polynomial r = Polynomial::constant(1);
    for (const Letter& l : w) r = r * project_letter(l);
    return r;
  }

  Polynomial merge_through(const Polynomial& left_letters, const Letter& right) const {
    Polynomial r;
    for (const auto& [w, c] : left_letters) r.add_scaled(red(w.front(), right), c);
    return r;
  }

  Polynomial merge_through(const Letter& left, const Polynomial& right_letters) const {
    Polynomial r;
    for (const auto& [w, c] : right_letters) r.add_scaled(red(left, w.front()), c);
    return r;
  }

  FpElement mul_words(Op op, const Word& y, const Word& z) const {
    std::span<const Letter> ys(y), zs(z);
    auto y_head = ys.first(ys.size() - 1);
    auto z_tail = zs.subspan(1);
    switch (op) {
      case Op::vdash:
        return erased(y_head) * merge_through(project_letter(y.back()), z.front()) * Polynomial::monomial(Word(z_tail.begin(), z_tail.end()));
      case Op::dashv:
        return Polynomial::monomial(Word(y_head.begin(), y_head.end())) * merge_through(y.back(), project_letter(z.front())) * erased(z_tail);
      case Op::perp:
        return Polynomial::monomial(Word(y_head.begin(), y_head.end())) * red(y.back(), z.front()) *
               Polynomial::monomial(Word(z_tail.begin(), z_tail.end()));
    }
    throw InvalidOperation("unknown operation");
  }

  std::vector<Presentation> presentations_;
  TMode mode_;
  Alphabet alphabet_;
  std::vector<Relations> relations_;
  std::vector<AssociatedQuotient> quotients_;
  RewriteSystem system_;
  std::vector<Letter> normal_letters_;
};

}  // namespace trigsb
