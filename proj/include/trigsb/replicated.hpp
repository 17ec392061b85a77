#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "trigsb/alphabet.hpp"
#include "trigsb/errors.hpp"
#include "trigsb/ncpoly.hpp"

namespace trigsb {

/// Dialgebra/dimonoid mode (two operations) or trialgebra/trioid mode (three).
enum class TMode { two = 2, three = 3 };

inline TMode tmode_from_int(int t) {
  if (t == 2) return TMode::two;
  if (t == 3) return TMode::three;
  throw InvalidInput("mode t must be 2 or 3, got " + std::to_string(t));
}

inline int to_int(TMode m) { return static_cast<int>(m); }

enum class Op { vdash, dashv, perp };

inline constexpr std::array<Op, 3> kAllOps{Op::vdash, Op::dashv, Op::perp};

inline std::vector<Op> ops_of(TMode m) {
  if (m == TMode::three) return {Op::vdash, Op::dashv, Op::perp};
  return {Op::vdash, Op::dashv};
}

inline std::string_view op_name(Op op) {
  switch (op) {
    case Op::vdash: return "vdash";
    case Op::dashv: return "dashv";
    case Op::perp: return "perp";
  }
  return "?";
}

inline std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::vdash: return "|-";
    case Op::dashv: return "-|";
    case Op::perp: return "_|_";
  }
  return "?";
}

inline Op parse_op(std::string_view s) {
  if (s == "vdash" || s == "|-") return Op::vdash;
  if (s == "dashv" || s == "-|") return Op::dashv;
  if (s == "perp" || s == "_|_") return Op::perp;
  throw InvalidInput("unknown operation '" + std::string(s) + "' (expected vdash, dashv or perp)");
}

inline Word phi(const Word& w) {
  Word out = w;
  for (auto& l : out) l.dotted = false;
  return out;
}

/// Dot erasure, extended linearly.
inline Polynomial phi(const Polynomial& f) {
  Polynomial r;
  for (const auto& [w, c] : f) r.add_term(phi(w), c);
  return r;
}

/// a |- b = phi(a) b,  a -| b = a phi(b),  a _|_ b = a b.
inline Polynomial tri_op(Op op, const Polynomial& f, const Polynomial& g, TMode mode) {
  switch (op) {
    case Op::vdash: return phi(f) * g;
    case Op::dashv: return f * phi(g);
    case Op::perp:
      if (mode != TMode::three) throw InvalidOperation("perp is not defined in dialgebra mode (t=2)");
      return f * g;
  }
  throw InvalidOperation("unknown operation");
}

inline std::size_t dot_count(const Word& u) {
  std::size_t n = 0;
  for (const auto& l : u) n += l.dotted ? 1 : 0;
  return n;
}

/// Whether `u` spans part of the image of the free di-/trialgebra: at least one
/// dotted letter for t=3, exactly one for t=2.
inline bool in_psi_image(const Word& u, TMode mode) {
  if (u.empty()) throw InvalidInput("the empty word is not a di/trialgebra monomial");
  std::size_t d = dot_count(u);
  return mode == TMode::three ? d >= 1 : d == 1;
}

/// Parenthesized di/trialgebra expression over generators.
struct BracketedTerm {
  Letter leaf{};                       // valid when children is empty (stored undotted)
  Op op = Op::vdash;                   // operator joining children
  std::vector<BracketedTerm> children;  // evaluated as a left fold

  bool is_leaf() const { return children.empty(); }
};

/// The unique expression whose image is the dotted word `u`: letters before the
/// first dot are joined by |- onto the rest, each dotted letter starts a -| block,
/// and blocks are joined by _|_.
inline BracketedTerm psi_inverse_render(const Word& u, TMode mode) {
  if (!in_psi_image(u, mode)) throw InvalidInput("word is not in the image of the embedding for this mode");
  auto leaf = [](Letter l) {
    BracketedTerm t;
    t.leaf = l.with_dot(false);
    return t;
  };
  std::vector<BracketedTerm> prefix;
  std::vector<BracketedTerm> blocks;
  std::size_t i = 0;
  for (; !u[i].dotted; ++i) prefix.push_back(leaf(u[i]));
  while (i < u.size()) {
    BracketedTerm block;
    block.op = Op::dashv;
    block.children.push_back(leaf(u[i++]));
    for (; i < u.size() && !u[i].dotted; ++i) block.children.push_back(leaf(u[i]));
    blocks.push_back(block.children.size() == 1 ? block.children.front() : std::move(block));
  }
  BracketedTerm core;
  if (blocks.size() == 1) {
    core = std::move(blocks.front());
  } else {
    core.op = Op::perp;
    core.children = std::move(blocks);
  }
  if (prefix.empty()) return core;
  BracketedTerm top;
  top.op = Op::vdash;
  top.children = std::move(prefix);
  top.children.push_back(std::move(core));
  return top;
}

inline std::string render_term(const BracketedTerm& t, const Alphabet& alpha) {
  if (t.is_leaf()) {
    alpha.require(t.leaf);
    return alpha.family(t.leaf.family).generators[t.leaf.symbol];
  }
  std::string out;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) {
      out += ' ';
      out += op_symbol(t.op);
      out += ' ';
    }
    const auto& c = t.children[i];
    out += c.is_leaf() ? render_term(c, alpha) : "(" + render_term(c, alpha) + ")";
  }
  return out;
}

/// Evaluates the expression in the doubled-alphabet algebra, generators x -> x-dot.
inline Polynomial evaluate_term(const BracketedTerm& t, TMode mode) {
  if (t.is_leaf()) return Polynomial::letter(t.leaf.with_dot(true));
  Polynomial acc = evaluate_term(t.children.front(), mode);
  for (std::size_t i = 1; i < t.children.size(); ++i) acc = tri_op(t.op, acc, evaluate_term(t.children[i], mode), mode);
  return acc;
}

}  // namespace trigsb
