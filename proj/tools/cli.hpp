#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trigsb/acceptance.hpp"
#include "trigsb/free_product.hpp"
#include "trigsb/gsb.hpp"
#include "trigsb/replicated.hpp"
#include "trigsb/structures.hpp"
#include "trigsb/structures_io.hpp"

namespace trigsb::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

namespace detail {

inline TMode default_mode(const Presentation& p) { return has_op(p, Op::perp) ? TMode::three : TMode::two; }

inline std::vector<Presentation> load_all(const std::vector<std::string>& files) {
  std::vector<Presentation> out;
  for (const auto& f : files) out.push_back(load_presentation(f));
  return out;
}

inline FreeProduct load_free_product(const std::vector<std::string>& files, int t) {
  return FreeProduct(load_all(files), tmode_from_int(t));
}

inline int cmd_axioms(const std::string& file, std::optional<int> t, std::ostream& out) {
  auto p = load_presentation(file);
  TMode mode = t ? tmode_from_int(*t) : default_mode(p);
  auto rep = check_axioms(p, mode);
  if (rep.ok) {
    out << "OK: " << rep.identity_families << " identity families, " << rep.instances << " instances checked\n";
    return kOk;
  }
  const auto& el = elements_of(p);
  out << "FAIL: " << rep.violations.size() << " violations in " << rep.instances << " instances\n";
  for (const auto& v : rep.violations) {
    out << "VIOLATION " << v.identity << " at (a,b,c)=(" << el[v.triple[0]] << "," << el[v.triple[1]] << ","
        << el[v.triple[2]] << "): lhs=" << v.lhs << " rhs=" << v.rhs << "\n";
  }
  return kCheckFailed;
}

inline int cmd_associated(const std::string& file, std::optional<int> t, std::ostream& out) {
  auto p = load_presentation(file);
  TMode mode = t ? tmode_from_int(*t) : default_mode(p);
  Alphabet alpha;
  alpha.add_family(name_of(p), elements_of(p));
  auto q = associated_quotient(p, mode, 0);
  const auto& el = elements_of(p);
  out << "family: " << name_of(p) << "\n";
  out << "reps:";
  for (auto s : q.reps) out << ' ' << el[s];
  out << "\n";
  for (std::uint32_t s = 0; s < el.size(); ++s) {
    if (!q.is_rep[s]) out << "eliminate: " << el[s] << " -> " << format_poly(q.rep_map[s], alpha) << "\n";
  }
  for (const auto& r : q.R.rules()) out << "rule: " << format_poly(r, alpha) << "\n";
  for (const auto& r : q.reduced.rules()) out << "reduced: " << format_poly(r, alpha) << "\n";
  for (std::size_t i = 0; i < q.reps.size(); ++i) {
    for (std::size_t j = 0; j < q.reps.size(); ++j) {
      out << "table: " << el[q.reps[i]] << " * " << el[q.reps[j]] << " = " << format_poly(q.quotient_table[i][j], alpha)
          << "\n";
    }
  }
  auto gsb = is_gsb(q.R);
  out << "gsb: " << (gsb.trivial ? "trivial" : "NONTRIVIAL") << "\n";
  return gsb.trivial ? kOk : kCheckFailed;
}

inline int cmd_complete(const std::string& file, std::optional<int> t, bool trace, const CompletionLimits& limits,
                        std::ostream& out) {
  auto p = load_presentation(file);
  TMode mode = t ? tmode_from_int(*t) : default_mode(p);
  Alphabet alpha;
  alpha.add_family(name_of(p), elements_of(p));
  auto rel = relations(p, mode, 0);
  auto res = complete(rel.phi_rules, limits);
  if (trace) {
    for (const auto& e : res.trace) out << "trace: " << alpha.format_word(e.ambiguity) << " => " << format_poly(e.rule, alpha) << "\n";
  }
  out << "status: " << (res.status == CompletionStatus::completed ? "completed" : "budget_exhausted") << "\n";
  for (const auto& r : res.system.rules()) out << "rule: " << format_poly(r, alpha) << "\n";
  out << "irreducible letters:";
  std::vector<Letter> undotted;
  for (const Letter& l : alpha.all_letters()) {
    if (!l.dotted) undotted.push_back(l);
  }
  for (const auto& w : irr_words(res.system, undotted, 1)) {
    if (w.size() == 1) out << ' ' << alpha.format_word(w);
  }
  out << "\n";
  return res.status == CompletionStatus::completed ? kOk : kCheckFailed;
}

inline int cmd_basis(const std::vector<std::string>& files, int t, std::size_t max_len, bool count_only, std::ostream& out) {
  auto fp = load_free_product(files, t);
  auto words = fp.basis(max_len);
  if (!count_only) {
    for (const auto& w : words) out << fp.alphabet().format_word(w) << "\n";
    return kOk;
  }
  std::vector<std::size_t> counts(max_len + 1, 0);
  for (const auto& w : words) ++counts[w.size()];
  for (std::size_t n = 1; n <= max_len; ++n) out << "length " << n << ": " << counts[n] << "\n";
  out << "total: " << words.size() << "\n";
  return kOk;
}

inline int cmd_mul(const std::vector<std::string>& files, int t, const std::string& op_text, const std::string& lhs,
                   const std::string& rhs, std::ostream& out) {
  auto fp = load_free_product(files, t);
  Op op = parse_op(op_text);
  FpElement u = fp.parse(lhs), v = fp.parse(rhs);
  out << "# lhs: " << fp.format(u) << "\n";
  out << "# rhs: " << fp.format(v) << "\n";
  out << "# op: " << op_name(op) << "\n";
  out << fp.format(fp.mul(op, u, v)) << "\n";
  return kOk;
}

inline int cmd_oracle_check(const std::vector<std::string>& files, int t, std::size_t samples, std::uint64_t seed,
                            std::ostream& out) {
  auto fp = load_free_product(files, t);
  auto tally = acceptance::detail::oracle_equivalence(fp, 3, samples, 6, seed);
  out << "compared: " << tally.checked << " products (all pairs up to length 3, " << samples
      << " random pairs up to length 6, seed " << seed << ")\n";
  out << "mismatches: " << tally.failures << "\n";
  if (tally.failures) out << "first mismatch: " << tally.first_failure << "\n";
  out << (tally.failures ? "FAIL" : "OK") << "\n";
  return tally.failures ? kCheckFailed : kOk;
}

inline int cmd_render(const std::string& word, int t, std::ostream& out) {
  Alphabet alpha;
  Word u = alpha.intern_word(word);
  out << render_term(psi_inverse_render(u, tmode_from_int(t)), alpha) << "\n";
  return kOk;
}

inline int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  bool all = true;
  for (const auto& r : acceptance::run_all(seed)) {
    all &= r.passed;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << ": " << r.detail << "\n";
  }
  out << (all ? "selftest: all criteria passed" : "selftest: FAILED") << "\n";
  return all ? kOk : kCheckFailed;
}

}  // namespace detail

/// Runs one invocation. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov rewriting and free products of trioids, dimonoids and trialgebras"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> files;
  std::optional<int> t_opt;
  int t = 3;
  std::size_t max_len = 1, samples = 10000;
  std::uint64_t seed = 0;
  bool trace = false, count_only = false;
  std::string op, lhs, rhs, word;
  CompletionLimits limits;

  auto* axioms = app.add_subcommand("axioms", "check associativity and the mixed identities");
  axioms->add_option("file", file, "presentation JSON")->required();
  axioms->add_option("--t", t_opt, "mode (defaults to 3 for trioids/trialgebras, 2 for dimonoids)")->check(CLI::IsMember({2, 3}));

  auto* assoc = app.add_subcommand("associated", "associated associative quotient and its rewriting system");
  assoc->add_option("file", file, "presentation JSON")->required();
  assoc->add_option("--t", t_opt, "mode")->check(CLI::IsMember({2, 3}));

  auto* comp = app.add_subcommand("complete", "complete the dot-erased multiplication-table relations");
  comp->add_option("file", file, "presentation JSON")->required();
  comp->add_option("--t", t_opt, "mode")->check(CLI::IsMember({2, 3}));
  comp->add_flag("--trace", trace, "print one line per adjoined rule");
  comp->add_option("--max-rules", limits.max_rules)->check(CLI::PositiveNumber);
  comp->add_option("--max-degree", limits.max_degree)->check(CLI::PositiveNumber);
  comp->add_option("--max-steps", limits.max_steps)->check(CLI::PositiveNumber);

  auto* basis = app.add_subcommand("basis", "normal-form words of the free product");
  basis->add_option("files", files, "presentation JSON files")->required();
  basis->add_option("--t", t, "mode")->required()->check(CLI::IsMember({2, 3}));
  basis->add_option("--max-len", max_len, "maximum word length")->required()->check(CLI::PositiveNumber);
  basis->add_flag("--count-only", count_only, "print counts per length only");

  auto* mul = app.add_subcommand("mul", "product of two normal forms");
  mul->add_option("files", files, "presentation JSON files")->required();
  mul->add_option("--t", t, "mode")->required()->check(CLI::IsMember({2, 3}));
  mul->add_option("--op", op, "vdash, dashv or perp")->required();
  mul->add_option("--lhs", lhs, "left normal form")->required();
  mul->add_option("--rhs", rhs, "right normal form")->required();

  auto* oracle = app.add_subcommand("oracle-check", "compare closed-form products with rewriting");
  oracle->add_option("files", files, "presentation JSON files")->required();
  oracle->add_option("--t", t, "mode")->required()->check(CLI::IsMember({2, 3}));
  oracle->add_option("--samples", samples, "random pairs");
  oracle->add_option("--seed", seed, "random seed");

  auto* render = app.add_subcommand("render-term", "bracketed expression of a dotted word");
  render->add_option("word", word, "word such as \"T1:.y T1:x\"")->required();
  render->add_option("--t", t, "mode")->required()->check(CLI::IsMember({2, 3}));

  auto* self = app.add_subcommand("selftest", "run every acceptance criterion");
  self->add_option("--seed", seed, "random seed");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*axioms) return detail::cmd_axioms(file, t_opt, out);
    if (*assoc) return detail::cmd_associated(file, t_opt, out);
    if (*comp) return detail::cmd_complete(file, t_opt, trace, limits, out);
    if (*basis) return detail::cmd_basis(files, t, max_len, count_only, out);
    if (*mul) return detail::cmd_mul(files, t, op, lhs, rhs, out);
    if (*oracle) return detail::cmd_oracle_check(files, t, samples, seed, out);
    if (*render) return detail::cmd_render(word, t, out);
    if (*self) return detail::cmd_selftest(seed, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidOperation& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace trigsb::cli
