#pragma once

// Executable acceptance criteria, shared by the acceptance test binary and the
// `selftest` CLI subcommand. The brute-force oracles here deliberately avoid
// the rewriting code they check.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "trigsb/free_product.hpp"
#include "trigsb/gsb.hpp"
#include "trigsb/replicated.hpp"
#include "trigsb/samples.hpp"
#include "trigsb/structures.hpp"

namespace trigsb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

namespace oracle {

/// span{u s v : s in rules, len(u lead(s) v) <= max_len} by plain sparse
/// Gaussian elimination.
class IdealSpan {
 public:
  IdealSpan(const std::vector<Polynomial>& rules, const std::vector<Letter>& letters, std::size_t max_len) {
    std::vector<std::vector<Word>> words_by_len(max_len + 1);
    words_by_len[0].push_back({});
    for (std::size_t n = 1; n <= max_len; ++n) {
      for (const auto& w : words_by_len[n - 1]) {
        for (const auto& l : letters) {
          Word x = w;
          x.push_back(l);
          words_by_len[n].push_back(std::move(x));
        }
      }
    }
    for (const auto& s : rules) {
      std::size_t lead_len = s.leading_word().size();
      if (lead_len > max_len) continue;
      for (std::size_t total = 0; total + lead_len <= max_len; ++total) {
        for (std::size_t left = 0; left <= total; ++left) {
          for (const auto& u : words_by_len[left]) {
            for (const auto& v : words_by_len[total - left]) {
              Polynomial g;
              g.add_scaled(s, 1, u, v);
              insert(std::move(g));
            }
          }
        }
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }

  bool contains(Polynomial v) const { return eliminate(v).is_zero(); }

 private:
  Polynomial eliminate(Polynomial v) const {
    while (!v.is_zero()) {
      auto it = pivots_.find(v.leading_word());
      if (it == pivots_.end()) break;
      Rational c = v.leading_coeff();
      v -= it->second * c;
    }
    return v;
  }

  void insert(Polynomial v) {
    v = eliminate(std::move(v));
    if (v.is_zero()) return;
    Rational inv = 1 / v.leading_coeff();
    v *= inv;
    Word lead = v.leading_word();
    pivots_.emplace(std::move(lead), std::move(v));
  }

  std::unordered_map<Word, Polynomial, WordHash> pivots_;
};

inline std::size_t ideal_rank(const std::vector<Polynomial>& rules, const std::vector<Letter>& letters, std::size_t max_len) {
  return IdealSpan(rules, letters, max_len).rank();
}

inline std::size_t word_count(std::size_t alphabet, std::size_t max_len) {
  std::size_t total = 0, p = 1;
  for (std::size_t n = 0; n <= max_len; ++n, p *= alphabet) total += p;
  return total;
}

/// Random normal forms: a uniformly chosen length, then a uniform word of that length.
class NormalFormSampler {
 public:
  NormalFormSampler(const FreeProduct& fp, std::size_t max_len) {
    by_len_.resize(max_len + 1);
    for (auto& w : fp.basis(max_len)) by_len_[w.size()].push_back(std::move(w));
  }
  template <class Rng>
  const Word& operator()(Rng& rng) const {
    std::uniform_int_distribution<std::size_t> len(1, by_len_.size() - 1);
    const auto& bucket = by_len_[len(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
    return bucket[pick(rng)];
  }

 private:
  std::vector<std::vector<Word>> by_len_;
};

}  // namespace oracle

namespace detail {

inline FreeProduct two_family_sample(TMode mode) {
  return FreeProduct({samples::projection_trioid("T1"), samples::singleton_trioid("T2", "u")}, mode);
}

inline FreeProduct one_generator_pair(TMode mode) {
  return FreeProduct({samples::singleton_trioid("T1", "a"), samples::singleton_trioid("T2", "u")}, mode);
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && failures++ == 0) first_failure = describe();
  }
};

inline Tally oracle_equivalence(const FreeProduct& fp, std::size_t exhaustive_len, std::size_t random_pairs,
                                std::size_t random_len, std::uint64_t seed) {
  Tally t;
  auto ops = ops_of(fp.mode());
  auto check = [&](const Word& y, const Word& z) {
    FpElement u = Polynomial::monomial(y), v = Polynomial::monomial(z);
    for (Op op : ops) {
      FpElement a = fp.mul(op, u, v), b = fp.oracle(op, u, v);
      t.record(a == b, [&] {
        return fp.format(u) + " " + std::string(op_name(op)) + " " + fp.format(v) + ": closed form " + fp.format(a) +
               ", oracle " + fp.format(b);
      });
    }
  };
  auto words = fp.basis(exhaustive_len);
  for (const auto& y : words) {
    for (const auto& z : words) check(y, z);
  }
  oracle::NormalFormSampler sample(fp, random_len);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const Word& y = sample(rng);
    const Word& z = sample(rng);
    check(y, z);
  }
  return t;
}

inline Tally product_laws(const FreeProduct& fp, std::size_t triples, std::size_t max_len, std::uint64_t seed) {
  Tally t;
  oracle::NormalFormSampler sample(fp, max_len);
  std::mt19937_64 rng(seed);
  const bool tri = fp.mode() == TMode::three;
  auto m = [&fp](Op op, const FpElement& x, const FpElement& y) { return fp.mul(op, x, y); };
  constexpr Op L = Op::vdash, R = Op::dashv, P = Op::perp;
  for (std::size_t i = 0; i < triples; ++i) {
    FpElement a = Polynomial::monomial(sample(rng));
    FpElement b = Polynomial::monomial(sample(rng));
    FpElement c = Polynomial::monomial(sample(rng));
    auto law = [&](const char* name, const FpElement& lhs, const FpElement& rhs) {
      t.record(lhs == rhs, [&] {
        return std::string(name) + " at (" + fp.format(a) + ", " + fp.format(b) + ", " + fp.format(c) + ")";
      });
    };
    for (Op op : ops_of(fp.mode())) law("associativity", m(op, m(op, a, b), c), m(op, a, m(op, b, c)));
    law("a-|(b|-c)=a-|(b-|c)", m(R, a, m(L, b, c)), m(R, a, m(R, b, c)));
    law("(a-|b)|-c=(a|-b)|-c", m(L, m(R, a, b), c), m(L, m(L, a, b), c));
    law("a|-(b-|c)=(a|-b)-|c", m(L, a, m(R, b, c)), m(R, m(L, a, b), c));
    if (!tri) continue;
    law("a-|(b_|_c)=a-|(b-|c)", m(R, a, m(P, b, c)), m(R, a, m(R, b, c)));
    law("(a_|_b)|-c=(a|-b)|-c", m(L, m(P, a, b), c), m(L, m(L, a, b), c));
    law("a|-(b_|_c)=(a|-b)_|_c", m(L, a, m(P, b, c)), m(P, m(L, a, b), c));
    law("a_|_(b-|c)=(a_|_b)-|c", m(P, a, m(R, b, c)), m(R, m(P, a, b), c));
    law("a_|_(b|-c)=(a-|b)_|_c", m(P, a, m(L, b, c)), m(P, m(R, a, b), c));
  }
  return t;
}

/// fp.basis(max_len) against the irreducible words of the combined system that
/// lie in the image of the embedding.
inline bool basis_matches_irreducibles(const FreeProduct& fp, std::size_t max_len, std::string& detail) {
  auto direct = fp.basis(max_len);
  std::vector<Word> via_gsb;
  for (auto& w : irr_words(fp.system(), fp.alphabet().all_letters(), max_len)) {
    if (!w.empty() && in_psi_image(w, fp.mode())) via_gsb.push_back(std::move(w));
  }
  if (direct != via_gsb) {
    detail = "basis(" + std::to_string(max_len) + ") has " + std::to_string(direct.size()) + " words, irr_words has " +
             std::to_string(via_gsb.size());
    return false;
  }
  return true;
}

inline Tally embedding_checks(const FreeProduct& fp) {
  Tally t;
  for (std::uint32_t f = 0; f < fp.family_count(); ++f) {
    const std::size_t n = elements_of(fp.presentation(f)).size();
    std::set<Word, DegLexLess> images;
    for (std::uint32_t x = 0; x < n; ++x) {
      FpElement e = fp.embed(f, x);
      FpElement reduced = reduce(e, fp.system());
      t.record(reduced == e && images.insert(e.leading_word()).second,
               [&] { return "embedding not injective at " + fp.format(e); });
      for (std::uint32_t y = 0; y < n; ++y) {
        for (Op op : ops_of(fp.mode())) {
          FpElement lhs = fp.mul(op, fp.embed(f, x), fp.embed(f, y));
          FpElement rhs = fp.embedded_product(f, op, x, y);
          t.record(lhs == rhs, [&] {
            return "embedding not a homomorphism: " + fp.format(fp.embed(f, x)) + " " + std::string(op_name(op)) + " " +
                   fp.format(fp.embed(f, y)) + " = " + fp.format(lhs) + ", table gives " + fp.format(rhs);
          });
        }
      }
    }
  }
  return t;
}

inline std::string tally_detail(const Tally& t, const std::string& what) {
  std::string s = std::to_string(t.checked) + " " + what + ", " + std::to_string(t.failures) + " failures";
  if (t.failures) s += "; first: " + t.first_failure;
  return s;
}

}  // namespace detail

inline CriterionResult axiom_suite() {
  CriterionResult r{1, "Axiom suite", false, ""};
  auto proj = check_axioms(samples::projection_trioid(), TMode::three);
  auto single = check_axioms(samples::singleton_trioid(), TMode::three);
  auto mutated = check_axioms(samples::mutated_projection_trioid(), TMode::three);
  // Frozen from an independent brute-force enumeration over all 8 triples.
  const std::vector<std::pair<std::string, std::array<std::size_t, 3>>> expected = {
      {"(a-|b)|-c=(a|-b)|-c", {1, 0, 1}},
      {"(a_|_b)|-c=(a|-b)|-c", {1, 0, 1}},
  };
  std::vector<std::pair<std::string, std::array<std::size_t, 3>>> found;
  bool sides_ok = true;
  for (const auto& v : mutated.violations) {
    found.emplace_back(v.identity, v.triple);
    sides_ok &= v.lhs == "b" && v.rhs == "a";
  }
  r.passed = proj.ok && proj.identity_families == 11 && proj.instances == 88 && single.ok && single.instances == 11 &&
             !mutated.ok && found == expected && sides_ok;
  std::ostringstream d;
  d << "projection " << (proj.ok ? "ok" : "REJECTED") << " (" << proj.instances << " instances), singleton "
    << (single.ok ? "ok" : "REJECTED") << ", mutated table: " << mutated.violations.size() << " violations";
  if (!mutated.violations.empty()) {
    const auto& v = mutated.violations.front();
    d << ", first " << v.identity << " at (b,a,b) lhs=" << v.lhs << " rhs=" << v.rhs;
  }
  r.detail = d.str();
  return r;
}

inline CriterionResult worked_example() {
  CriterionResult r{2, "Worked example reproduction", false, ""};
  Alphabet alpha;
  alpha.add_family("X", {"x", "y"});
  auto gen = [&](const char* g) {
    BracketedTerm t;
    t.leaf = alpha.parse_letter(std::string("X:") + g);
    return t;
  };
  auto node = [](Op op, std::vector<BracketedTerm> ch) {
    BracketedTerm t;
    t.op = op;
    t.children = std::move(ch);
    return t;
  };
  // x |- ((x -| y) _|_ (y -| x))  -  x |- x
  BracketedTerm lhs = node(Op::vdash, {gen("x"), node(Op::perp, {node(Op::dashv, {gen("x"), gen("y")}),
                                                               node(Op::dashv, {gen("y"), gen("x")})})});
  BracketedTerm rhs = node(Op::vdash, {gen("x"), gen("x")});
  Polynomial f = evaluate_term(lhs, TMode::three) - evaluate_term(rhs, TMode::three);
  std::string psi_text = format_poly(f, alpha);
  std::string phi_text = format_poly(phi(f), alpha);
  std::string rendered = render_term(psi_inverse_render(alpha.parse_word("X:.y X:x X:y X:.x X:x"), TMode::three), alpha);
  r.passed = psi_text == "X:x X:.x X:y X:.y X:x - X:x X:.x" && phi_text == "X:x X:x X:y X:y X:x - X:x X:x" &&
             rendered == "(y -| x -| y) _|_ (x -| x)";
  r.detail = "psi: " + psi_text + " | phi: " + phi_text + " | render: " + rendered;
  return r;
}

inline CriterionResult completion() {
  CriterionResult r{3, "Completion", false, ""};
  Alphabet alpha;
  alpha.add_family("T1", {"a", "b"});
  std::vector<Polynomial> input;
  for (const char* s : {"T1:a T1:b - T1:a", "T1:a T1:b - T1:b", "T1:a T1:a - T1:a", "T1:b T1:a - T1:a",
                        "T1:b T1:a - T1:b", "T1:b T1:b - T1:b"}) {
    input.push_back(parse_poly(s, alpha));
  }
  auto t0 = std::chrono::steady_clock::now();
  auto res = complete(RewriteSystem(input));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<Letter> undotted;
  for (const Letter& l : alpha.all_letters()) {
    if (!l.dotted) undotted.push_back(l);
  }
  std::vector<Word> letters;
  for (auto& w : irr_words(res.system, undotted, 1)) {
    if (w.size() == 1) letters.push_back(w);
  }
  bool inputs_vanish = true;
  for (const auto& f : input) inputs_vanish &= reduce(f, res.system).is_zero();
  bool gsb = is_gsb(res.system).trivial;
  r.passed = res.status == CompletionStatus::completed && letters == std::vector<Word>{alpha.parse_word("T1:a")} && gsb &&
             inputs_vanish && secs < 1.0;
  std::ostringstream d;
  d << res.system.size() << " rules:";
  for (const auto& rule : res.system.rules()) d << " [" << format_poly(rule, alpha) << "]";
  d << ", gsb " << (gsb ? "trivial" : "NONTRIVIAL") << ", " << secs << " s";
  r.detail = d.str();
  return r;
}

inline CriterionResult gsb_certification(TMode mode = TMode::three, int id = 4) {
  CriterionResult r{id, "GSB certification", false, ""};
  auto fp = detail::two_family_sample(mode);
  auto rep = is_gsb(fp.system());
  r.passed = rep.trivial;
  r.detail = std::to_string(fp.system().size()) + " rules, " + std::to_string(rep.checked) + " compositions, " +
             std::to_string(rep.witnesses.size()) + " nontrivial";
  return r;
}

inline CriterionResult oracle_equivalence(std::uint64_t seed = 0, TMode mode = TMode::three, int id = 5) {
  CriterionResult r{id, "Oracle equivalence", false, ""};
  auto fp = detail::two_family_sample(mode);
  auto t = detail::oracle_equivalence(fp, 3, 10000, 6, seed);
  r.passed = t.failures == 0;
  r.detail = detail::tally_detail(t, "products compared");
  return r;
}

inline CriterionResult free_product_laws(std::uint64_t seed = 0, TMode mode = TMode::three, int id = 6) {
  CriterionResult r{id, "Free-product laws", false, ""};
  auto fp = detail::two_family_sample(mode);
  auto t = detail::product_laws(fp, 1000, 4, seed);
  r.passed = t.failures == 0;
  r.detail = detail::tally_detail(t, "law instances");
  return r;
}

inline CriterionResult basis_census() {
  CriterionResult r{7, "Basis census", false, ""};
  auto fp = detail::one_generator_pair(TMode::three);
  std::vector<std::size_t> counts(9, 0);
  for (const auto& w : fp.basis(8)) ++counts[w.size()];
  const std::vector<std::size_t> expected = {0, 2, 6, 14, 30, 62, 126, 254, 510};
  bool census_ok = counts == expected;
  std::string mismatch;
  bool cross_ok = true;
  for (std::size_t n = 1; n <= 5 && cross_ok; ++n) cross_ok = detail::basis_matches_irreducibles(fp, n, mismatch);
  auto sample = detail::two_family_sample(TMode::three);
  for (std::size_t n = 1; n <= 5 && cross_ok; ++n) cross_ok = detail::basis_matches_irreducibles(sample, n, mismatch);
  r.passed = census_ok && cross_ok;
  std::ostringstream d;
  d << "counts n=1..8:";
  for (std::size_t n = 1; n <= 8; ++n) d << ' ' << counts[n];
  d << (cross_ok ? ", basis = irr_words on image for max_len <= 5" : ", " + mismatch);
  r.detail = d.str();
  return r;
}

inline CriterionResult embedding_injectivity(TMode mode = TMode::three, int id = 8) {
  CriterionResult r{id, "Embedding injectivity", false, ""};
  detail::Tally total;
  for (auto fp : {detail::two_family_sample(mode), detail::one_generator_pair(mode)}) {
    auto t = detail::embedding_checks(fp);
    total.checked += t.checked;
    if (t.failures && total.failures == 0) total.first_failure = t.first_failure;
    total.failures += t.failures;
  }
  r.passed = total.failures == 0;
  r.detail = detail::tally_detail(total, "checks");
  return r;
}

inline CriterionResult dimonoid_mode(std::uint64_t seed = 0) {
  CriterionResult r{9, "Dimonoid mode (t=2)", false, ""};
  std::vector<CriterionResult> parts = {gsb_certification(TMode::two, 4), oracle_equivalence(seed, TMode::two, 5),
                                        free_product_laws(seed, TMode::two, 6), embedding_injectivity(TMode::two, 8)};
  // Census: direct enumeration against irr_words on the t=2 image, for the
  // two one-generator dimonoids and the two-family sample.
  auto pair = FreeProduct({samples::as_dimonoid(samples::singleton_trioid("T1", "a")),
                           samples::as_dimonoid(samples::singleton_trioid("T2", "u"))},
                          TMode::two);
  std::string mismatch;
  bool census_ok = true;
  for (std::size_t n = 1; n <= 5 && census_ok; ++n) census_ok = detail::basis_matches_irreducibles(pair, n, mismatch);
  auto sample = detail::two_family_sample(TMode::two);
  for (std::size_t n = 1; n <= 5 && census_ok; ++n) census_ok = detail::basis_matches_irreducibles(sample, n, mismatch);
  r.passed = census_ok;
  std::ostringstream d;
  for (const auto& p : parts) {
    r.passed &= p.passed;
    d << "[" << p.id << (p.passed ? " ok" : " FAIL") << ": " << p.detail << "] ";
  }
  d << "[7 " << (census_ok ? "ok: basis = irr_words on image for max_len <= 5" : "FAIL: " + mismatch) << "]";
  r.detail = d.str();
  return r;
}

inline CriterionResult dimension_check() {
  CriterionResult r{10, "Irr(S) dimension check", false, ""};
  struct Case {
    std::string name;
    std::vector<Polynomial> originals;
    RewriteSystem system;
    std::vector<Letter> letters;
    std::size_t max_len;
  };
  std::vector<Case> cases;
  auto add_completed = [&](const std::string& name, const Presentation& p, TMode mode) {
    auto rel = relations(p, mode, 0);
    auto res = complete(rel.phi_rules);
    std::vector<Letter> letters;
    for (std::uint32_t s = 0; s < elements_of(p).size(); ++s) letters.push_back(Letter{0, s, false});
    cases.push_back({name, rel.phi_rules.rules(), res.system, letters, 5});
  };
  add_completed("projection trioid", samples::projection_trioid(), TMode::three);
  add_completed("projection dimonoid", samples::projection_trioid(), TMode::two);
  add_completed("singleton trioid", samples::singleton_trioid(), TMode::three);
  add_completed("scaled projection trialgebra", samples::scaled_projection_trialgebra(), TMode::three);
  add_completed("dual numbers trialgebra", samples::dual_numbers_trialgebra(), TMode::three);
  {
    auto fp = detail::one_generator_pair(TMode::three);
    cases.push_back({"one-generator pair, combined", fp.system().rules(), fp.system(), fp.alphabet().all_letters(), 5});
  }
  {
    auto fp = detail::two_family_sample(TMode::three);
    cases.push_back({"two-family sample, combined", fp.system().rules(), fp.system(), fp.alphabet().all_letters(), 4});
  }
  r.passed = true;
  std::ostringstream d;
  for (const auto& c : cases) {
    std::vector<Polynomial> gens = c.originals;
    gens.insert(gens.end(), c.system.rules().begin(), c.system.rules().end());
    bool ok = true;
    for (std::size_t n = 0; n <= c.max_len; ++n) {
      std::size_t irr = irr_words(c.system, c.letters, n).size();
      std::size_t dim = oracle::word_count(c.letters.size(), n) - oracle::ideal_rank(gens, c.letters, n);
      if (irr != dim) {
        ok = false;
        d << c.name << ": max_len " << n << " irr " << irr << " vs dim " << dim << "; ";
      }
    }
    if (ok) d << c.name << " ok to len " << c.max_len << "; ";
    r.passed &= ok;
  }
  r.detail = d.str();
  if (r.detail.size() >= 2) r.detail.resize(r.detail.size() - 2);
  return r;
}

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 0) {
  return {axiom_suite(),     worked_example(),        completion(),     gsb_certification(),
          oracle_equivalence(seed), free_product_laws(seed), basis_census(), embedding_injectivity(),
          dimonoid_mode(seed), dimension_check()};
}

}  // namespace trigsb::acceptance
