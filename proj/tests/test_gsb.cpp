#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "trigsb/acceptance.hpp"
#include "trigsb/errors.hpp"
#include "trigsb/gsb.hpp"

using namespace trigsb;

namespace {

struct Gsb : ::testing::Test {
  Gsb() {
    alpha.add_family("T1", {"a", "b"});
    alpha.add_family("X", {"x", "y", "z", "w"});
    alpha.add_family("U", {"u", "v"});
  }
  Polynomial P(const char* s) const { return parse_poly(s, alpha); }
  std::string F(const Polynomial& f) const { return format_poly(f, alpha); }
  RewriteSystem S(std::initializer_list<const char*> rules) const {
    RewriteSystem s;
    for (const char* r : rules) s.add(P(r));
    return s;
  }
  std::vector<Letter> family_letters(std::uint32_t fam) const {
    std::vector<Letter> out;
    for (const Letter& l : alpha.all_letters()) {
      if (l.family == fam && !l.dotted) out.push_back(l);
    }
    return out;
  }
  Alphabet alpha;
};

/// Rewrites a uniformly chosen reducible occurrence with a uniformly chosen
/// matching rule until nothing is reducible.
Polynomial random_order_reduce(Polynomial f, const RewriteSystem& S, std::mt19937_64& rng) {
  for (;;) {
    struct Site {
      Word w;
      std::size_t pos, rule;
    };
    std::vector<Site> sites;
    for (const auto& [w, c] : f) {
      for (std::size_t r = 0; r < S.size(); ++r) {
        const Word& lw = S[r].leading_word();
        for (std::size_t p = 0; p + lw.size() <= w.size(); ++p) {
          if (std::equal(lw.begin(), lw.end(), w.begin() + p)) sites.push_back({w, p, r});
        }
      }
    }
    if (sites.empty()) return f;
    const Site& s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    Rational c = f.coeff(s.w);
    Word left(s.w.begin(), s.w.begin() + s.pos);
    Word right(s.w.begin() + s.pos + S[s.rule].leading_word().size(), s.w.end());
    f -= Polynomial::monomial(left, c) * S[s.rule] * Polynomial::monomial(right);
  }
}

}  // namespace

TEST_F(Gsb, AddMakesRulesMonic) {
  RewriteSystem s;
  s.add(P("2 X:x X:y - 4 X:z"));
  EXPECT_EQ(F(s[0]), "X:x X:y - 2 X:z");
  EXPECT_THROW(s.add(Polynomial{}), InvalidInput);
}

TEST_F(Gsb, ReduceExamples) {
  Alphabet d;
  d.add_family("X", {"x", "y", "z"});
  RewriteSystem s;
  s.add(parse_poly("X:x X:.y - X:.z", d));
  EXPECT_EQ(format_poly(reduce(parse_poly("X:x X:.y", d), s), d), "X:.z");
  Polynomial f = P("X:x X:y - 1/2 X:z");
  EXPECT_EQ(reduce(f, RewriteSystem{}), f);
  EXPECT_EQ(F(reduce(P("T1:a T1:b"), S({"T1:a T1:b - T1:a", "T1:b - T1:a", "T1:a T1:a - T1:a"}))), "T1:a");
  EXPECT_TRUE(reduce(Polynomial{}, s).is_zero());
}

TEST_F(Gsb, ReduceIsIrreducibleAndDeterministic) {
  auto s = S({"X:y X:x - X:x X:y", "X:z X:z - X:x", "X:w - X:x X:x"});
  auto letters = family_letters(1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto f = gen::random_poly(rng, letters, 4);
    auto r = reduce(f, s);
    for (const auto& [w, c] : r) EXPECT_FALSE(s.is_reducible(w));
    EXPECT_EQ(r, reduce(f, s));
  }
}

TEST_F(Gsb, ReduceTraceReassembles) {
  auto s = S({"T1:a T1:b - T1:b T1:a", "T1:b T1:b T1:b - T1:a", "T1:a T1:a - 2 T1:b"});
  auto letters = family_letters(0);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    auto f = gen::random_poly(rng, letters, 6);
    std::vector<RewriteStep> trace;
    auto r = reduce(f, s, &trace);
    Polynomial sum = r;
    for (const auto& st : trace) sum += Polynomial::monomial(st.left, st.coeff) * s[st.rule] * Polynomial::monomial(st.right);
    EXPECT_EQ(sum, f);
  }
}

TEST_F(Gsb, MatchPrefersLeftmostThenLongest) {
  auto s = S({"X:y X:z - X:x", "X:x X:y X:z - X:w", "X:x X:y - X:z"});
  auto m = s.find_match(alpha.parse_word("X:w X:x X:y X:z"));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->position, 1u);
  EXPECT_EQ(F(s[m->rule]), "X:x X:y X:z - X:w");
}

TEST_F(Gsb, CompositionsIntersection) {
  auto cs = compositions(P("T1:a T1:b - T1:b"), P("T1:b T1:a - T1:a"));
  Composition const* hit = nullptr;
  for (const auto& c : cs) {
    if (c.kind == CompositionKind::intersection && alpha.format_word(c.ambiguity) == "T1:a T1:b T1:a") hit = &c;
  }
  ASSERT_NE(hit, nullptr);
  EXPECT_EQ(hit->value, P("T1:a T1:a - T1:b T1:a"));
  EXPECT_TRUE(reduce(hit->value, S({"T1:a T1:b - T1:b", "T1:b T1:a - T1:a", "T1:a T1:a - T1:a", "T1:b T1:b - T1:b"})).is_zero());
}

TEST_F(Gsb, CompositionsNone) {
  EXPECT_TRUE(compositions(P("X:x X:y - X:z"), P("X:z X:w - X:x")).empty());
  EXPECT_TRUE(compositions(P("X:x X:y - X:z"), P("U:u U:v - U:u")).empty());
}

TEST_F(Gsb, CompositionsEqualLeadingWords) {
  auto cs = compositions(P("T1:a T1:b - T1:a"), P("T1:a T1:b - T1:b"));
  std::size_t inclusions = 0;
  for (const auto& c : cs) {
    if (c.kind != CompositionKind::inclusion) continue;
    ++inclusions;
    EXPECT_EQ(alpha.format_word(c.ambiguity), "T1:a T1:b");
    EXPECT_EQ(c.value, P("T1:b - T1:a"));
  }
  EXPECT_EQ(inclusions, 1u);
}

TEST_F(Gsb, CompositionInvariants) {
  auto letters = family_letters(0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto f = make_monic(gen::random_poly(rng, letters, 4)), g = make_monic(gen::random_poly(rng, letters, 4));
    if (f.leading_word().empty() || g.leading_word().empty()) continue;
    for (const auto& c : compositions(f, g)) {
      const Polynomial& L = c.left == 0 ? f : g;
      const Polynomial& R = c.left == 0 ? g : f;
      const Word &lf = L.leading_word(), &lg = R.leading_word();
      if (c.kind == CompositionKind::inclusion) {
        EXPECT_EQ(lf, concat(c.u, lg, c.v));
        EXPECT_EQ(c.value, L - Polynomial::monomial(c.u) * R * Polynomial::monomial(c.v));
      } else {
        EXPECT_GE(c.u.size(), 1u);
        EXPECT_LT(c.u.size(), lg.size());
        EXPECT_EQ(concat(lf, c.u), concat(c.v, lg));
        EXPECT_EQ(c.ambiguity, concat(lf, c.u));
        EXPECT_EQ(c.value, L * Polynomial::monomial(c.u) - Polynomial::monomial(c.v) * R);
      }
    }
  }
}

TEST_F(Gsb, SelfOverlap) {
  auto cs = compositions(P("T1:a T1:a - T1:a"), P("T1:a T1:a - T1:a"), 0, 0);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(alpha.format_word(cs[0].ambiguity), "T1:a T1:a T1:a");
  EXPECT_TRUE(cs[0].value.is_zero());
}

TEST_F(Gsb, IsGsbExamples) {
  EXPECT_TRUE(is_gsb(S({"T1:a T1:a - T1:a"})).trivial);
  auto rep = is_gsb(S({"T1:a T1:b - T1:a", "T1:a T1:b - T1:b"}));
  EXPECT_FALSE(rep.trivial);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].remainder, P("T1:b - T1:a"));
  EXPECT_TRUE(is_gsb(RewriteSystem{}).trivial);
}

TEST_F(Gsb, CompleteEqualLeadingWords) {
  auto res = complete(S({"T1:a T1:b - T1:a", "T1:a T1:b - T1:b"}));
  EXPECT_EQ(res.status, CompletionStatus::completed);
  ASSERT_EQ(res.system.size(), 2u);
  EXPECT_EQ(F(res.system[0]), "T1:b - T1:a");
  EXPECT_EQ(F(res.system[1]), "T1:a T1:a - T1:a");
  EXPECT_TRUE(is_gsb(res.system).trivial);
  for (const auto& f : res.originals) EXPECT_TRUE(reduce(f, res.system).is_zero());
  EXPECT_FALSE(res.trace.empty());
}

TEST_F(Gsb, CompleteFixpoint) {
  auto s = S({"X:y X:x - X:x X:y"});
  auto res = complete(s);
  EXPECT_EQ(res.status, CompletionStatus::completed);
  EXPECT_EQ(res.system.rules(), s.rules());
  EXPECT_TRUE(res.trace.empty());
}

TEST_F(Gsb, CompleteAssociativeTableAddsNothing) {
  // Z/3 on {x, y, z} with x the identity.
  const char* m[3][3] = {{"X:x", "X:y", "X:z"}, {"X:y", "X:z", "X:x"}, {"X:z", "X:x", "X:y"}};
  const char* names[3] = {"X:x", "X:y", "X:z"};
  RewriteSystem s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s.add(P((std::string(names[i]) + " " + names[j] + " - " + m[i][j]).c_str()));
  }
  EXPECT_TRUE(is_gsb(s).trivial);
  auto res = complete(s);
  EXPECT_EQ(res.status, CompletionStatus::completed);
  EXPECT_TRUE(res.trace.empty());
  EXPECT_EQ(res.system.size(), 9u);
}

TEST_F(Gsb, CompleteRejectsZeroLimits) {
  auto s = S({"T1:a T1:a - T1:a"});
  EXPECT_THROW(complete(s, {0, 12, 1000}), InvalidInput);
  EXPECT_THROW(complete(s, {10, 0, 1000}), InvalidInput);
  EXPECT_THROW(complete(s, {10, 12, 0}), InvalidInput);
}

TEST_F(Gsb, CompleteBudgetExhausted) {
  // The braid relation has an infinite reduced basis.
  auto s = S({"T1:b T1:a T1:b - T1:a T1:b T1:a"});
  auto res = complete(s, {10000, 7, 1000000});
  EXPECT_EQ(res.status, CompletionStatus::budget_exhausted);
  auto few = complete(s, {2, 12, 1000000});
  EXPECT_EQ(few.status, CompletionStatus::budget_exhausted);
  auto short_run = complete(s, {10000, 12, 5});
  EXPECT_EQ(short_run.status, CompletionStatus::budget_exhausted);
}

TEST_F(Gsb, CompletionPreservesIdeal) {
  std::vector<std::vector<const char*>> inputs = {
      {"T1:a T1:b - T1:a", "T1:a T1:b - T1:b", "T1:a T1:a - T1:a", "T1:b T1:a - T1:a", "T1:b T1:a - T1:b", "T1:b T1:b - T1:b"},
      {"T1:a T1:b - T1:b T1:a", "T1:b T1:b - T1:a"},
      {"T1:b T1:a - T1:a T1:a T1:b", "T1:b T1:b - T1:a"},
      {"T1:a T1:a T1:a - T1:a", "T1:b T1:a - T1:a T1:b", "T1:b T1:b - T1:b"}};
  auto letters = family_letters(0);
  for (const auto& in : inputs) {
    RewriteSystem s;
    for (const char* r : in) s.add(P(r));
    auto res = complete(s);
    ASSERT_EQ(res.status, CompletionStatus::completed) << in[0];
    EXPECT_TRUE(is_gsb(res.system).trivial);
    for (const auto& f : s.rules()) EXPECT_TRUE(reduce(f, res.system).is_zero());
    acceptance::oracle::IdealSpan span(s.rules(), letters, 6);
    for (const auto& g : res.system.rules()) EXPECT_TRUE(span.contains(g)) << F(g);
  }
}

TEST_F(Gsb, IrrWordsExamples) {
  auto a = family_letters(0);
  std::vector<Letter> just_a{a[0]};
  auto fmt = [&](const std::vector<Word>& ws) {
    std::string out;
    for (const auto& w : ws) out += "[" + alpha.format_word(w) + "]";
    return out;
  };
  EXPECT_EQ(fmt(irr_words(S({"T1:a T1:a - T1:a"}), just_a, 3)), "[@eps][T1:a]");
  EXPECT_EQ(fmt(irr_words(RewriteSystem{}, just_a, 2)), "[@eps][T1:a][T1:a T1:a]");
  EXPECT_EQ(fmt(irr_words(S({"T1:b - T1:a", "T1:a T1:a - T1:a"}), a, 2)), "[@eps][T1:a]");
  EXPECT_EQ(fmt(irr_words(RewriteSystem{}, a, 0)), "[@eps]");
}

TEST_F(Gsb, IrrWordsMatchesFilter) {
  auto s = S({"T1:b T1:a - T1:a T1:b", "T1:b T1:b T1:b - T1:a"});
  auto letters = family_letters(0);
  std::vector<Word> all{{}}, expected;
  for (std::size_t n = 0; n < 6; ++n) {
    std::vector<Word> next;
    for (const auto& w : all) {
      if (w.size() == n) {
        for (const Letter& l : letters) next.push_back(concat(w, Word{l}));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
  }
  std::sort(all.begin(), all.end(), DegLexLess{});
  for (const auto& w : all) {
    bool ok = true;
    for (const auto& r : s.rules()) {
      const Word& lw = r.leading_word();
      for (std::size_t p = 0; p + lw.size() <= w.size(); ++p) ok &= !std::equal(lw.begin(), lw.end(), w.begin() + p);
    }
    if (ok) expected.push_back(w);
  }
  EXPECT_EQ(irr_words(s, letters, 6), expected);
}

TEST_F(Gsb, IrrCountEqualsQuotientDimension) {
  std::vector<std::vector<const char*>> inputs = {
      {"T1:a T1:b - T1:a", "T1:a T1:b - T1:b"},
      {"T1:a T1:a - T1:a"},
      {"T1:b T1:a - T1:a T1:b"},
      {"T1:b T1:b - T1:a", "T1:a T1:b - T1:b T1:a"},
      {"T1:b T1:a - T1:a T1:a T1:b", "T1:b T1:b - T1:a"}};
  auto letters = family_letters(0);
  for (const auto& in : inputs) {
    RewriteSystem s;
    for (const char* r : in) s.add(P(r));
    auto res = complete(s);
    ASSERT_EQ(res.status, CompletionStatus::completed);
    for (std::size_t n = 0; n <= 6; ++n) {
      std::vector<Polynomial> gens = s.rules();
      gens.insert(gens.end(), res.system.rules().begin(), res.system.rules().end());
      std::size_t dim = acceptance::oracle::word_count(letters.size(), n) - acceptance::oracle::ideal_rank(gens, letters, n);
      EXPECT_EQ(irr_words(res.system, letters, n).size(), dim) << in[0] << " n=" << n;
    }
  }
}

TEST_F(Gsb, UnionOverDisjointFamiliesIsGsb) {
  auto s1 = complete(S({"T1:a T1:b - T1:a", "T1:a T1:b - T1:b"})).system;
  auto s2 = complete(S({"U:v U:u - U:u U:v", "U:v U:v - U:u"})).system;
  auto s3 = complete(S({"X:y X:x - X:z", "X:x X:x - X:w"})).system;
  std::vector<Polynomial> all;
  for (const auto* s : {&s1, &s2, &s3}) {
    ASSERT_TRUE(is_gsb(*s).trivial);
    all.insert(all.end(), s->rules().begin(), s->rules().end());
  }
  EXPECT_TRUE(is_gsb(RewriteSystem(all)).trivial);
}

TEST_F(Gsb, ConfluenceUnderRandomRuleOrder) {
  auto s = complete(S({"X:y X:x - X:x X:y", "X:z X:y - X:x", "X:w X:w - X:z", "X:w X:x - X:x X:w"})).system;
  ASSERT_TRUE(is_gsb(s).trivial);
  auto letters = family_letters(1);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    auto f = gen::random_poly(rng, letters, 5);
    EXPECT_EQ(random_order_reduce(f, s, rng), reduce(f, s));
  }
}

TEST_F(Gsb, InterReduceProducesReducedBasis) {
  auto r = inter_reduce({P("T1:a T1:b - T1:a"), P("T1:b - T1:a"), P("T1:a T1:a - T1:a"), P("T1:b T1:b - T1:b")});
  ASSERT_EQ(r.size(), 2u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (const auto& [w, c] : r[i]) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (i == j) continue;
        const Word& lw = r[j].leading_word();
        for (std::size_t p = 0; p + lw.size() <= w.size(); ++p) EXPECT_FALSE(std::equal(lw.begin(), lw.end(), w.begin() + p));
      }
    }
  }
}
