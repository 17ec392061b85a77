#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trigsb/alphabet.hpp"
#include "trigsb/errors.hpp"
#include "trigsb/gsb.hpp"
#include "trigsb/linalg.hpp"
#include "trigsb/ncpoly.hpp"
#include "trigsb/replicated.hpp"

namespace trigsb {

using IndexTable = std::vector<std::vector<std::size_t>>;
using CoeffTensor = std::vector<std::vector<DenseVector>>;  // [x][y] -> coefficients of x op y

/// A finite trioid (three tables) or dimonoid (no perp table). The order of
/// `elements` is the letter order of the family.
struct TrioidTable {
  std::string name;
  std::vector<std::string> elements;
  std::array<IndexTable, 3> tables;  // indexed by Op
  bool has_perp = true;

  std::size_t size() const { return elements.size(); }
  const IndexTable& table(Op op) const {
    if (op == Op::perp && !has_perp) throw InvalidOperation("dimonoid '" + name + "' has no perp table");
    return tables[static_cast<std::size_t>(op)];
  }
  std::size_t apply(Op op, std::size_t x, std::size_t y) const { return table(op)[x][y]; }
};

/// A finite-dimensional trialgebra given by structure constants on a basis.
struct TrialgebraTable {
  std::string name;
  std::vector<std::string> elements;
  std::array<CoeffTensor, 3> tensors;  // indexed by Op

  std::size_t size() const { return elements.size(); }
  const DenseVector& apply(Op op, std::size_t x, std::size_t y) const {
    return tensors[static_cast<std::size_t>(op)][x][y];
  }
};

using Presentation = std::variant<TrioidTable, TrialgebraTable>;

inline const std::string& name_of(const Presentation& p) {
  return std::visit([](const auto& t) -> const std::string& { return t.name; }, p);
}
inline const std::vector<std::string>& elements_of(const Presentation& p) {
  return std::visit([](const auto& t) -> const std::vector<std::string>& { return t.elements; }, p);
}
inline bool is_trioid(const Presentation& p) { return std::holds_alternative<TrioidTable>(p); }
inline bool has_op(const Presentation& p, Op op) {
  if (op != Op::perp) return true;
  if (const auto* t = std::get_if<TrioidTable>(&p)) return t->has_perp;
  return true;
}

/// x op y as a sparse combination of basis indices (sorted, nonzero).
using Combination = std::vector<std::pair<std::uint32_t, Rational>>;

inline Combination product(const Presentation& p, Op op, std::size_t x, std::size_t y) {
  if (const auto* t = std::get_if<TrioidTable>(&p)) {
    return {{static_cast<std::uint32_t>(t->apply(op, x, y)), Rational(1)}};
  }
  const auto& v = std::get<TrialgebraTable>(p).apply(op, x, y);
  Combination c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) c.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return c;
}

inline Polynomial combination_poly(const Combination& c, std::uint32_t family, bool dotted) {
  Polynomial p;
  for (const auto& [s, q] : c) p.add_term(Word{Letter{family, s, dotted}}, q);
  return p;
}

/// Structural checks: nonempty, square tables, entries in range.
inline void validate(const Presentation& p) {
  std::visit(
      [](const auto& t) {
        const std::size_t n = t.size();
        if (n == 0) throw InvalidInput("presentation '" + t.name + "' has no elements");
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            if (t.elements[i] == t.elements[j]) throw InvalidInput("duplicate element '" + t.elements[i] + "'");
          }
        }
        using T = std::decay_t<decltype(t)>;
        for (Op op : kAllOps) {
          if constexpr (std::is_same_v<T, TrioidTable>) {
            if (op == Op::perp && !t.has_perp) continue;
            const auto& tab = t.tables[static_cast<std::size_t>(op)];
            if (tab.size() != n) throw InvalidInput(std::string(op_name(op)) + " table must have " + std::to_string(n) + " rows");
            for (const auto& row : tab) {
              if (row.size() != n) throw InvalidInput(std::string(op_name(op)) + " table rows must have " + std::to_string(n) + " entries");
              for (auto e : row) {
                if (e >= n) throw InvalidInput(std::string(op_name(op)) + " table entry " + std::to_string(e) + " out of range");
              }
            }
          } else {
            const auto& ten = t.tensors[static_cast<std::size_t>(op)];
            if (ten.size() != n) throw InvalidInput(std::string(op_name(op)) + " tensor must have " + std::to_string(n) + " rows");
            for (const auto& row : ten) {
              if (row.size() != n) throw InvalidInput(std::string(op_name(op)) + " tensor rows must have " + std::to_string(n) + " entries");
              for (const auto& v : row) {
                if (v.size() != n) throw InvalidInput(std::string(op_name(op)) + " coefficient vectors must have length " + std::to_string(n));
              }
            }
          }
        }
      },
      p);
}

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomViolation {
  std::string identity;
  std::array<std::size_t, 3> triple{};
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  bool ok = true;
  std::size_t identity_families = 0;
  std::size_t instances = 0;
  std::vector<AxiomViolation> violations;
};

namespace detail {

template <class V>
using BinOp = std::function<V(Op, const V&, const V&)>;

template <class V>
struct Identity {
  std::string name;
  std::function<std::pair<V, V>(const BinOp<V>&, const V&, const V&, const V&)> sides;
};

/// Associativity of each operation, then the mixed identities (3 for t=2, 8 for t=3).
template <class V>
std::vector<Identity<V>> identities(TMode mode) {
  using Sides = std::pair<V, V>;
  std::vector<Identity<V>> ids;
  for (Op op : ops_of(mode)) {
    ids.push_back({"(a" + std::string(op_symbol(op)) + "b)" + std::string(op_symbol(op)) + "c=a" +
                       std::string(op_symbol(op)) + "(b" + std::string(op_symbol(op)) + "c)",
                   [op](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                     return Sides{m(op, m(op, a, b), c), m(op, a, m(op, b, c))};
                   }});
  }
  constexpr Op L = Op::vdash, R = Op::dashv, P = Op::perp;
  ids.push_back({"a-|(b|-c)=a-|(b-|c)", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                   return Sides{m(R, a, m(L, b, c)), m(R, a, m(R, b, c))};
                 }});
  ids.push_back({"(a-|b)|-c=(a|-b)|-c", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                   return Sides{m(L, m(R, a, b), c), m(L, m(L, a, b), c)};
                 }});
  ids.push_back({"a|-(b-|c)=(a|-b)-|c", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                   return Sides{m(L, a, m(R, b, c)), m(R, m(L, a, b), c)};
                 }});
  if (mode == TMode::three) {
    ids.push_back({"a-|(b_|_c)=a-|(b-|c)", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                     return Sides{m(R, a, m(P, b, c)), m(R, a, m(R, b, c))};
                   }});
    ids.push_back({"(a_|_b)|-c=(a|-b)|-c", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                     return Sides{m(L, m(P, a, b), c), m(L, m(L, a, b), c)};
                   }});
    ids.push_back({"a|-(b_|_c)=(a|-b)_|_c", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                     return Sides{m(L, a, m(P, b, c)), m(P, m(L, a, b), c)};
                   }});
    ids.push_back({"a_|_(b-|c)=(a_|_b)-|c", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                     return Sides{m(P, a, m(R, b, c)), m(R, m(P, a, b), c)};
                   }});
    ids.push_back({"a_|_(b|-c)=(a-|b)_|_c", [](const BinOp<V>& m, const V& a, const V& b, const V& c) {
                     return Sides{m(P, a, m(L, b, c)), m(P, m(R, a, b), c)};
                   }});
  }
  return ids;
}

template <class V, class Fmt>
AxiomReport check_all(const std::vector<V>& basis, const BinOp<V>& mul, TMode mode, Fmt&& fmt) {
  AxiomReport rep;
  auto ids = identities<V>(mode);
  rep.identity_families = ids.size();
  const std::size_t n = basis.size();
  for (const auto& id : ids) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          ++rep.instances;
          auto [l, r] = id.sides(mul, basis[a], basis[b], basis[c]);
          if (l != r) {
            rep.ok = false;
            rep.violations.push_back({id.name, {a, b, c}, fmt(l), fmt(r)});
          }
        }
      }
    }
  }
  return rep;
}

inline void require_mode(const Presentation& p, TMode mode) {
  if (mode == TMode::three && !has_op(p, Op::perp)) {
    throw InvalidInput("'" + name_of(p) + "' is a dimonoid and cannot be used in trialgebra mode (t=3)");
  }
}

}  // namespace detail

/// Brute-force check of associativity and the mixed identities over all
/// triples of elements (basis triples for trialgebras).
inline AxiomReport check_axioms(const Presentation& p, TMode mode) {
  validate(p);
  detail::require_mode(p, mode);
  if (const auto* t = std::get_if<TrioidTable>(&p)) {
    std::vector<std::size_t> basis(t->size());
    std::iota(basis.begin(), basis.end(), std::size_t{0});
    detail::BinOp<std::size_t> mul = [t](Op op, const std::size_t& x, const std::size_t& y) { return t->apply(op, x, y); };
    return detail::check_all<std::size_t>(basis, mul, mode, [t](std::size_t x) { return t->elements[x]; });
  }
  const auto& t = std::get<TrialgebraTable>(p);
  const std::size_t n = t.size();
  std::vector<DenseVector> basis(n, DenseVector(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  detail::BinOp<DenseVector> mul = [&t, n](Op op, const DenseVector& x, const DenseVector& y) {
    DenseVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const auto& v = t.apply(op, i, j);
        Rational c = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) {
          if (v[k] != 0) out[k] += c * v[k];
        }
      }
    }
    return out;
  };
  auto fmt = [&t](const DenseVector& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      if (!s.empty()) s += " + ";
      if (v[k] != 1) s += format_rational(v[k]) + " ";
      s += t.elements[k];
    }
    return s.empty() ? std::string("0") : s;
  };
  return detail::check_all<DenseVector>(basis, mul, mode, fmt);
}

inline void require_axioms(const Presentation& p, TMode mode) {
  auto rep = check_axioms(p, mode);
  if (!rep.ok) {
    const auto& v = rep.violations.front();
    throw InvalidInput("'" + name_of(p) + "' violates " + v.identity + " (" + std::to_string(rep.violations.size()) +
                       " violations)");
  }
}

// ---------------------------------------------------------------------------
// Relation sets

struct Relations {
  RewriteSystem psi_rules;  // over the family's doubled alphabet
  RewriteSystem phi_rules;  // over the undotted family alphabet
};

/// psi rules: x y. - (x|-y). , x. y - (x-|y). , and for t=3 x. y. - (x_|_y).
/// phi rules: their dot-erased images x y - (x op y), duplicates collapsed.
inline Relations relations(const Presentation& p, TMode mode, std::uint32_t family = 0) {
  require_axioms(p, mode);
  Relations rel;
  std::vector<Polynomial> phi_rules;
  const std::size_t n = elements_of(p).size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Letter lx{family, static_cast<std::uint32_t>(x), false};
      Letter ly{family, static_cast<std::uint32_t>(y), false};
      for (Op op : ops_of(mode)) {
        Word lead{lx.with_dot(op != Op::vdash), ly.with_dot(op != Op::dashv)};
        auto c = product(p, op, x, y);
        Polynomial psi = Polynomial::monomial(lead) - combination_poly(c, family, true);
        rel.psi_rules.add(psi);
        Polynomial ph = phi(psi);
        if (std::find(phi_rules.begin(), phi_rules.end(), ph) == phi_rules.end()) phi_rules.push_back(ph);
      }
    }
  }
  rel.phi_rules = RewriteSystem(phi_rules);
  return rel;
}

// ---------------------------------------------------------------------------
// Associated associative quotient

struct AssociatedQuotient {
  std::uint32_t family = 0;
  std::vector<std::uint32_t> reps;    // surviving letters, ascending
  std::vector<bool> is_rep;           // per symbol
  std::vector<Polynomial> rep_map;    // symbol -> combination of reps (undotted letters)
  RewriteSystem R;                    // letter-elimination rules plus xy - proj(x|-y) for all x, y
  RewriteSystem reduced;              // inter-reduced form of R
  std::vector<std::vector<Polynomial>> quotient_table;  // [i][j] over reps[i], reps[j]

  /// Image of an undotted-letter polynomial of this family in the rep basis.
  Polynomial project(const Polynomial& f) const {
    return f.map_words([this](const Word& w) {
      Polynomial r = Polynomial::constant(1);
      for (const auto& l : w) r = r * (l.family == family && !l.dotted ? rep_map[l.symbol] : Polynomial::letter(l));
      return r;
    });
  }
};

namespace detail {

inline void finish_quotient(AssociatedQuotient& q, const Presentation& p, std::vector<Polynomial> letter_rules) {
  const std::size_t n = elements_of(p).size();
  for (std::uint32_t s = 0; s < n; ++s) {
    if (q.is_rep[s]) q.reps.push_back(s);
  }
  std::vector<Polynomial> rules = std::move(letter_rules);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Word lead{Letter{q.family, static_cast<std::uint32_t>(x), false}, Letter{q.family, static_cast<std::uint32_t>(y), false}};
      Polynomial img = q.project(combination_poly(product(p, Op::vdash, x, y), q.family, false));
      rules.push_back(Polynomial::monomial(lead) - img);
    }
  }
  q.R = RewriteSystem(rules);
  q.reduced = inter_reduce(rules);
  q.quotient_table.assign(q.reps.size(), std::vector<Polynomial>(q.reps.size()));
  for (std::size_t i = 0; i < q.reps.size(); ++i) {
    for (std::size_t j = 0; j < q.reps.size(); ++j) {
      q.quotient_table[i][j] = q.project(combination_poly(product(p, Op::vdash, q.reps[i], q.reps[j]), q.family, false));
    }
  }
}

}  // namespace detail

/// The quotient forcing all operations to coincide, with its letter basis and
/// a Groebner-Shirshov basis R over the undotted family alphabet.
///
/// Trioids: congruence closure, each class represented by its least letter.
/// Trialgebras: the ideal spanned by x|-y - x-|y (and x|-y - x_|_y) closed under
/// multiplication, row-reduced with the greatest letter as pivot.
inline AssociatedQuotient associated_quotient(const Presentation& p, TMode mode, std::uint32_t family = 0) {
  require_axioms(p, mode);
  AssociatedQuotient q;
  q.family = family;
  const std::size_t n = elements_of(p).size();
  auto letter = [family](std::size_t s) { return Letter{family, static_cast<std::uint32_t>(s), false}; };

  if (const auto* t = std::get_if<TrioidTable>(&p)) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto merge = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      if (a < b) parent[b] = a;
      else parent[a] = b;
      return true;
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (Op op : ops_of(mode)) merge(t->apply(Op::vdash, x, y), t->apply(op, x, y));
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (Op op : ops_of(mode)) changed |= merge(t->apply(op, x, y), t->apply(op, find(x), find(y)));
        }
      }
    }
    q.is_rep.resize(n);
    q.rep_map.resize(n);
    std::vector<Polynomial> letter_rules;
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t r = find(s);
      q.is_rep[s] = r == s;
      q.rep_map[s] = Polynomial::letter(letter(r));
      if (r != s) letter_rules.push_back(Polynomial::letter(letter(s)) - Polynomial::letter(letter(r)));
    }
    detail::finish_quotient(q, p, std::move(letter_rules));
    return q;
  }

  const auto& t = std::get<TrialgebraTable>(p);
  EchelonBasis W(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (Op op : ops_of(mode)) {
        if (op == Op::vdash) continue;
        DenseVector d = t.apply(Op::vdash, x, y);
        const auto& e = t.apply(op, x, y);
        for (std::size_t k = 0; k < n; ++k) d[k] -= e[k];
        W.insert(d);
      }
    }
  }
  auto mul_left = [&t, n](Op op, std::size_t a, const DenseVector& w) {
    DenseVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const auto& v = t.apply(op, a, j);
      for (std::size_t k = 0; k < n; ++k) out[k] += w[j] * v[k];
    }
    return out;
  };
  auto mul_right = [&t, n](Op op, const DenseVector& w, std::size_t a) {
    DenseVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const auto& v = t.apply(op, j, a);
      for (std::size_t k = 0; k < n; ++k) out[k] += w[j] * v[k];
    }
    return out;
  };
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<DenseVector> rows;
    for (const auto& [pivot, row] : W.rows()) rows.push_back(row);
    for (const auto& w : rows) {
      for (std::size_t a = 0; a < n; ++a) {
        for (Op op : ops_of(mode)) {
          grew |= W.insert(mul_left(op, a, w));
          grew |= W.insert(mul_right(op, w, a));
        }
      }
    }
  }
  q.is_rep.assign(n, true);
  q.rep_map.resize(n);
  std::vector<Polynomial> letter_rules;
  for (const auto& [pivot, row] : W.rows()) {
    q.is_rep[pivot] = false;
    Polynomial rule;
    for (std::size_t k = 0; k < n; ++k) rule.add_term(Word{letter(k)}, row[k]);
    letter_rules.push_back(rule);
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (q.is_rep[s]) q.rep_map[s] = Polynomial::letter(letter(s));
  }
  std::size_t i = 0;
  for (const auto& [pivot, row] : W.rows()) {
    q.rep_map[pivot] = Polynomial::letter(letter(pivot)) - letter_rules[i++];
  }
  detail::finish_quotient(q, p, std::move(letter_rules));
  return q;
}

// ---------------------------------------------------------------------------
// Adjoining an absorbing zero

/// T^0: T plus a new absorbing element, appended last.
inline TrioidTable adjoin_zero(const TrioidTable& t, const std::string& zero_name = "0") {
  for (const auto& e : t.elements) {
    if (e == zero_name) throw InvalidInput("'" + t.name + "' already has an element named '" + zero_name + "'");
  }
  TrioidTable out = t;
  const std::size_t n = t.size();
  out.elements.push_back(zero_name);
  for (Op op : kAllOps) {
    if (op == Op::perp && !t.has_perp) continue;
    auto& tab = out.tables[static_cast<std::size_t>(op)];
    for (auto& row : tab) row.push_back(n);
    tab.emplace_back(n + 1, n);
  }
  return out;
}

}  // namespace trigsb
