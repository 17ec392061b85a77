#pragma once

#include <string>
#include <vector>

#include "trigsb/structures.hpp"

namespace trigsb::samples {

/// {a, b}: |- is the right projection, -| and _|_ the left projection.
inline TrioidTable projection_trioid(const std::string& name = "T1") {
  TrioidTable t;
  t.name = name;
  t.elements = {"a", "b"};
  t.tables[static_cast<std::size_t>(Op::vdash)] = {{0, 1}, {0, 1}};
  t.tables[static_cast<std::size_t>(Op::dashv)] = {{0, 0}, {1, 1}};
  t.tables[static_cast<std::size_t>(Op::perp)] = {{0, 0}, {1, 1}};
  return t;
}

/// The one-element trioid on `element`.
inline TrioidTable singleton_trioid(const std::string& name = "T2", const std::string& element = "u") {
  TrioidTable t;
  t.name = name;
  t.elements = {element};
  for (auto& tab : t.tables) tab = {{0}};
  return t;
}

/// Projection trioid with |-(a, b) changed to a. Breaks two mixed identities.
inline TrioidTable mutated_projection_trioid(const std::string& name = "M") {
  TrioidTable t = projection_trioid(name);
  t.tables[static_cast<std::size_t>(Op::vdash)][0][1] = 0;
  return t;
}

inline TrioidTable as_dimonoid(TrioidTable t) {
  t.has_perp = false;
  t.tables[static_cast<std::size_t>(Op::perp)].clear();
  return t;
}

/// The projection trioid written in the basis {a, c = b/2}; structure constants
/// involve 1/2.
inline TrialgebraTable scaled_projection_trialgebra(const std::string& name = "L") {
  TrialgebraTable t;
  t.name = name;
  t.elements = {"a", "c"};
  auto v = [](Rational x, Rational y) { return DenseVector{x, y}; };
  const Rational h(1, 2);
  // x |- y = eps(x) y, x -| y = eps(y) x, with eps(a) = 1, eps(c) = 1/2.
  t.tensors[static_cast<std::size_t>(Op::vdash)] = {{v(1, 0), v(0, 1)}, {v(h, 0), v(0, h)}};
  t.tensors[static_cast<std::size_t>(Op::dashv)] = {{v(1, 0), v(h, 0)}, {v(0, 1), v(0, h)}};
  t.tensors[static_cast<std::size_t>(Op::perp)] = t.tensors[static_cast<std::size_t>(Op::dashv)];
  return t;
}

/// Dual numbers k[n]/(n^2) with unit e, all three operations equal.
inline TrialgebraTable dual_numbers_trialgebra(const std::string& name = "D") {
  TrialgebraTable t;
  t.name = name;
  t.elements = {"e", "n"};
  auto v = [](Rational x, Rational y) { return DenseVector{x, y}; };
  CoeffTensor m = {{v(1, 0), v(0, 1)}, {v(0, 1), v(0, 0)}};
  for (auto& ten : t.tensors) ten = m;
  return t;
}

}  // namespace trigsb::samples
