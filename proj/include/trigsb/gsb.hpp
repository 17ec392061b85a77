#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "trigsb/alphabet.hpp"
#include "trigsb/errors.hpp"
#include "trigsb/ncpoly.hpp"

namespace trigsb {

/// A finite monic set of polynomials indexed by leading word.
class RewriteSystem {
 public:
  struct Match {
    std::size_t position;
    std::size_t rule;
  };

  RewriteSystem() = default;

  explicit RewriteSystem(const std::vector<Polynomial>& rules) {
    for (const auto& r : rules) add(r);
  }

  /// Adds make_monic(f). Zero is rejected.
  std::size_t add(const Polynomial& f) {
    if (f.is_zero()) throw InvalidInput("rewrite rules must be nonzero");
    rules_.push_back(make_monic(f));
    std::size_t id = rules_.size() - 1;
    const Word& lead = rules_.back().leading_word();
    auto& bucket = index_[lead];
    bucket.insert(std::upper_bound(bucket.begin(), bucket.end(), id,
                                   [this](std::size_t a, std::size_t b) { return rule_less(a, b); }),
                  id);
    if (std::find(lengths_.begin(), lengths_.end(), lead.size()) == lengths_.end()) {
      lengths_.push_back(lead.size());
      std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
    }
    return id;
  }

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const std::vector<Polynomial>& rules() const { return rules_; }
  const Polynomial& operator[](std::size_t i) const { return rules_[i]; }

  /// Leftmost occurrence of a leading word inside `w`; at that position the
  /// longest leading word wins, then the lexicographically least rule.
  std::optional<Match> find_match(const Word& w) const {
    if (rules_.empty()) return std::nullopt;
    Word probe;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t len : lengths_) {
        if (pos + len > w.size()) continue;
        probe.assign(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
        if (auto it = index_.find(probe); it != index_.end()) return Match{pos, it->second.front()};
      }
    }
    // The empty word can only lead the zero-degree rule, which matches at 0.
    if (auto it = index_.find(Word{}); it != index_.end()) return Match{0, it->second.front()};
    return std::nullopt;
  }

  bool is_reducible(const Word& w) const { return find_match(w).has_value(); }

  /// True iff some leading word is a suffix of `w`.
  bool has_leading_suffix(const Word& w) const {
    for (std::size_t len : lengths_) {
      if (len > w.size()) continue;
      Word probe(w.end() - static_cast<std::ptrdiff_t>(len), w.end());
      if (index_.contains(probe)) return true;
    }
    return false;
  }

  const std::vector<std::size_t>* rules_with_leading(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? nullptr : &it->second;
  }

 private:
  bool rule_less(std::size_t a, std::size_t b) const {
    if (lex_less(rules_[a], rules_[b])) return true;
    if (lex_less(rules_[b], rules_[a])) return false;
    return a < b;
  }

  std::vector<Polynomial> rules_;
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> index_;
  std::vector<std::size_t> lengths_;
};

/// One rewrite `coeff * left * rule * right` subtracted during reduction.
struct RewriteStep {
  Rational coeff;
  Word left;
  std::size_t rule;
  Word right;
};

/// Normal form of `f` modulo `S`.
///
/// Repeatedly takes the greatest remaining word; if it is reducible it is
/// rewritten at its leftmost match, otherwise it moves to the result.
inline Polynomial reduce(const Polynomial& f, const RewriteSystem& S, std::vector<RewriteStep>* trace = nullptr,
                         std::size_t* step_counter = nullptr) {
  if (S.empty()) return f;
  Polynomial rem = f;
  Polynomial result;
  while (!rem.is_zero()) {
    Word w = rem.leading_word();
    Rational c = rem.leading_coeff();
    auto m = S.find_match(w);
    if (!m) {
      result.add_term(w, c);
      rem.add_term(w, -c);
      continue;
    }
    const Polynomial& rule = S[m->rule];
    std::size_t len = rule.leading_word().size();
    Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->position));
    Word right(w.begin() + static_cast<std::ptrdiff_t>(m->position + len), w.end());
    rem.add_scaled(rule, -c, left, right);
    if (trace) trace->push_back(RewriteStep{c, std::move(left), m->rule, std::move(right)});
    if (step_counter) ++*step_counter;
  }
  return result;
}

enum class CompositionKind { inclusion, intersection };

/// A composition (f, g)_w of two rules.
///
/// inclusion:    lead(f) = u lead(g) v,  value = f - u g v
/// intersection: lead(f) u = v lead(g),  value = f u - v g, 1 <= len(u) < len(lead(g))
struct Composition {
  std::size_t left = 0;
  std::size_t right = 0;
  Word ambiguity;
  Word u;
  Word v;
  Polynomial value;
  CompositionKind kind = CompositionKind::inclusion;
};

namespace detail {

inline void directed_compositions(const Polynomial& f, const Polynomial& g, std::size_t fi, std::size_t gi,
                                  std::vector<Composition>& out) {
  const Word& F = f.leading_word();
  const Word& G = g.leading_word();
  // Inclusions: G inside F. Equal leading words are reported once (fi < gi).
  if (G.size() <= F.size() && !(G.size() == F.size() && fi >= gi)) {
    for (std::size_t p = 0; p + G.size() <= F.size(); ++p) {
      if (!std::equal(G.begin(), G.end(), F.begin() + static_cast<std::ptrdiff_t>(p))) continue;
      Composition c;
      c.left = fi;
      c.right = gi;
      c.kind = CompositionKind::inclusion;
      c.ambiguity = F;
      c.u.assign(F.begin(), F.begin() + static_cast<std::ptrdiff_t>(p));
      c.v.assign(F.begin() + static_cast<std::ptrdiff_t>(p + G.size()), F.end());
      c.value = f;
      c.value.add_scaled(g, -1, c.u, c.v);
      out.push_back(std::move(c));
    }
  }
  // Intersections: a proper suffix of F equals a proper prefix of G.
  std::size_t max_overlap = std::min(F.size(), G.size());
  for (std::size_t k = 1; k < max_overlap; ++k) {
    if (!std::equal(F.end() - static_cast<std::ptrdiff_t>(k), F.end(), G.begin())) continue;
    Composition c;
    c.left = fi;
    c.right = gi;
    c.kind = CompositionKind::intersection;
    c.u.assign(G.begin() + static_cast<std::ptrdiff_t>(k), G.end());
    c.v.assign(F.begin(), F.end() - static_cast<std::ptrdiff_t>(k));
    c.ambiguity = concat(F, c.u);
    c.value.add_scaled(f, 1, {}, c.u);
    c.value.add_scaled(g, -1, c.v, {});
    out.push_back(std::move(c));
  }
}

}  // namespace detail

/// All compositions between two rules, in both directions. Passing the same
/// index twice yields the self-overlaps of a single rule.
inline std::vector<Composition> compositions(const Polynomial& f, const Polynomial& g, std::size_t fi = 0,
                                             std::size_t gi = 1) {
  std::vector<Composition> out;
  detail::directed_compositions(f, g, fi, gi, out);
  if (fi != gi) detail::directed_compositions(g, f, gi, fi, out);
  return out;
}

struct GsbWitness {
  Composition composition;
  Polynomial remainder;
};

struct GsbReport {
  bool trivial = true;
  std::size_t checked = 0;
  std::vector<GsbWitness> witnesses;
};

/// Checks that every composition of every pair of rules reduces to zero.
inline GsbReport is_gsb(const RewriteSystem& S, bool stop_at_first = false) {
  GsbReport report;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i; j < S.size(); ++j) {
      for (auto& c : compositions(S[i], S[j], i, j)) {
        ++report.checked;
        Polynomial r = reduce(c.value, S);
        if (!r.is_zero()) {
          report.trivial = false;
          report.witnesses.push_back(GsbWitness{std::move(c), std::move(r)});
          if (stop_at_first) return report;
        }
      }
    }
  }
  return report;
}

/// Reduces every rule against the others until nothing changes, then sorts by
/// leading word. For a Groebner-Shirshov basis the result is the reduced basis.
inline RewriteSystem inter_reduce(std::vector<Polynomial> rules) {
  for (auto& r : rules) r = make_monic(r);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size();) {
      RewriteSystem others;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (j != i) others.add(rules[j]);
      }
      Polynomial r = reduce(rules[i], others);
      if (r == rules[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (r.is_zero()) {
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        rules[i] = make_monic(r);
        ++i;
      }
    }
  }
  std::sort(rules.begin(), rules.end(), [](const Polynomial& a, const Polynomial& b) { return lex_less(a, b); });
  return RewriteSystem(rules);
}

struct CompletionLimits {
  std::size_t max_rules = 10000;
  std::size_t max_degree = 12;
  std::size_t max_steps = 1000000;
};

enum class CompletionStatus { completed, budget_exhausted };

struct CompletionTraceEntry {
  Word ambiguity;
  Polynomial rule;
};

struct CompletionResult {
  RewriteSystem system;
  CompletionStatus status = CompletionStatus::completed;
  /// The input relations, kept verbatim for callers that need literal containment.
  std::vector<Polynomial> originals;
  std::vector<CompletionTraceEntry> trace;
  std::size_t steps = 0;
};

/// Buchberger-Shirshov completion with a fair queue (ascending ambiguity word).
///
/// On `completed` the returned system is inter-reduced and all of its
/// compositions are trivial. `steps` counts processed compositions plus
/// rewrite steps.
inline CompletionResult complete(const RewriteSystem& input, const CompletionLimits& limits = {}) {
  if (limits.max_rules == 0 || limits.max_degree == 0 || limits.max_steps == 0) {
    throw InvalidInput("completion limits must be positive");
  }
  CompletionResult result;
  result.originals = input.rules();

  struct Pending {
    Composition comp;
    std::size_t seq;
  };
  auto later = [](const Pending& a, const Pending& b) {
    if (auto c = cmp_deglex(a.comp.ambiguity, b.comp.ambiguity); c != 0) return c > 0;
    return a.seq > b.seq;
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(later);
  std::size_t seq = 0;

  RewriteSystem current;
  auto adjoin = [&](const Polynomial& f) {
    std::size_t id = current.add(f);
    for (std::size_t j = 0; j <= id; ++j) {
      for (auto& c : compositions(current[j], current[id], j, id)) queue.push(Pending{std::move(c), seq++});
    }
  };

  for (const auto& r : input.rules()) {
    if (current.size() >= limits.max_rules || r.leading_word().size() > limits.max_degree) {
      result.status = CompletionStatus::budget_exhausted;
      result.system = current;
      return result;
    }
    adjoin(r);
  }

  while (!queue.empty()) {
    Pending p = queue.top();
    queue.pop();
    if (++result.steps > limits.max_steps) {
      result.status = CompletionStatus::budget_exhausted;
      break;
    }
    Polynomial r = reduce(p.comp.value, current, nullptr, &result.steps);
    if (r.is_zero()) continue;
    r = make_monic(r);
    if (current.size() >= limits.max_rules || r.leading_word().size() > limits.max_degree) {
      result.status = CompletionStatus::budget_exhausted;
      break;
    }
    result.trace.push_back(CompletionTraceEntry{p.comp.ambiguity, r});
    adjoin(r);
  }

  if (result.status == CompletionStatus::completed) {
    result.system = inter_reduce(current.rules());
  } else {
    result.system = current;
  }
  return result;
}

/// Words over `letters` of length <= max_len avoiding every leading word of S,
/// in increasing deg-lex order (the empty word first).
inline std::vector<Word> irr_words(const RewriteSystem& S, std::vector<Letter> letters, std::size_t max_len) {
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::vector<Word> out;
  std::vector<Word> level;
  if (!S.is_reducible(Word{})) level.push_back(Word{});
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len || level.empty()) break;
    std::vector<Word> next;
    for (const auto& w : level) {
      for (const Letter& l : letters) {
        Word x = w;
        x.push_back(l);
        if (!S.has_leading_suffix(x)) next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace trigsb
