#include "gbp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "gbp/generators.hpp"
#include "gbp/greedy.hpp"
#include "gbp/io.hpp"
#include "gbp/report.hpp"
#include "gbp/theorems.hpp"
#include "gbp/verify.hpp"

namespace gbp {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::LimitExceeded:
      return kExitLimit;
    case ErrorCode::SyntaxError:
    case ErrorCode::CycleDetected:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::SizeError:
    case ErrorCode::ProbabilityRange:
    case ErrorCode::ArityMismatch:
    case ErrorCode::Underflow:
      return kExitInvalidInput;
    case ErrorCode::SizeMismatch:
    case ErrorCode::NotALinearExtension:
    case ErrorCode::NotGreedy:
    case ErrorCode::NotAutomorphism:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NotNFree:
    case ErrorCode::IsChain:
      return kExitPrecondition;
  }
  return kExitUsage;
}

namespace {

std::string names(const Poset& p, std::span<const ElementId> xs) {
  std::string out;
  for (ElementId x : xs) {
    if (!out.empty()) out += ' ';
    out += p.name(x);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit_json(std::ostream& out, const std::string& command, const ordered_json& input,
               ordered_json results) {
  ordered_json doc{{"command", command}, {"input", input}, {"results", std::move(results)}};
  out << doc.dump(2) << '\n';
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

int cmd_analyze(Context& ctx, const std::string& path) {
  const Poset p = read_document(path).poset;
  const auto witness = find_n(p);
  const auto components = connected_components(p);
  const auto triples = good_triples(p);
  const auto removable = removable_minimals(p);
  const auto mins = minimals(p);
  const auto maxs = maximals(p);

  if (ctx.json) {
    ordered_json comps = components;
    ordered_json trip = ordered_json::array();
    for (const auto& t : triples) trip.push_back({t.x, t.y, t.z});
    ordered_json results{{"poset", poset_json(p)},
                         {"n", p.size()},
                         {"width", width(p)},
                         {"minimals", mins},
                         {"maximals", maxs},
                         {"is_chain", is_chain(p)},
                         {"is_antichain", is_antichain(p)},
                         {"is_n_free", !witness.has_value()}};
    results["n_witness"] = witness ? ordered_json{witness->a, witness->b, witness->c, witness->d}
                                   : ordered_json(nullptr);
    results["components"] = comps;
    results["good_triples"] = trip;
    results["removable_minimals"] = removable;
    emit_json(ctx.out, "analyze", {{"file", path}}, std::move(results));
    return kExitOk;
  }
  auto& o = ctx.out;
  o << "n: " << p.size() << '\n';
  o << "width: " << width(p) << '\n';
  o << "minimals: " << names(p, mins) << '\n';
  o << "maximals: " << names(p, maxs) << '\n';
  o << "chain: " << yes_no(is_chain(p)) << '\n';
  o << "antichain: " << yes_no(is_antichain(p)) << '\n';
  o << "n-free: " << yes_no(!witness);
  if (witness) {
    o << " (N: " << p.name(witness->a) << " < " << p.name(witness->b) << " > "
      << p.name(witness->c) << " < " << p.name(witness->d) << ")";
  }
  o << '\n';
  o << "components:";
  for (const auto& c : components) o << " {" << names(p, c) << "}";
  o << '\n';
  o << "good triples:";
  if (triples.empty()) o << " none";
  for (const auto& t : triples) {
    o << " (" << p.name(t.x) << "," << p.name(t.y) << "," << p.name(t.z) << ")";
  }
  o << '\n';
  o << "removable minimals: " << (removable.empty() ? "none" : names(p, removable)) << '\n';
  return kExitOk;
}

int cmd_greedy_enum(Context& ctx, const std::string& path, std::uint64_t limit) {
  const Poset p = read_document(path).poset;
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  std::uint64_t count = 0;
  for_each_extension(
      p, ExtensionKind::Greedy,
      [&](const LinearExtension& l) {
        ++count;
        const std::size_t jumps = blocks(p, l).jump_count;
        if (ctx.json) {
          list.push_back({{"order", l.order()}, {"jumps", jumps}});
        } else {
          text << names(p, l.order()) << "\tjumps " << jumps << '\n';
        }
      },
      limit);
  if (ctx.json) {
    emit_json(ctx.out, "greedy enum", {{"file", path}, {"limit", limit}},
              {{"count", std::to_string(count)}, {"extensions", list}});
  } else {
    ctx.out << text.str() << "total " << count << '\n';
  }
  return kExitOk;
}

int cmd_greedy_count(Context& ctx, const std::string& path, const std::string& method,
                     std::uint64_t limit) {
  const Poset p = read_document(path).poset;
  const BigInt enumerated = greedy_count(p, limit);
  if (method == "enum") {
    if (ctx.json) {
      emit_json(ctx.out, "greedy count", {{"file", path}, {"method", method}},
                {{"count", enumerated.str()}});
    } else {
      ctx.out << enumerated << '\n';
    }
    return kExitOk;
  }
  std::vector<Poset> parts;
  for (const auto& comp : connected_components(p)) {
    parts.push_back(induced(p, mask_of(comp)).poset);
  }
  const BigInt formula = count_disjoint_sum(parts, limit);
  const bool agree = formula == enumerated;
  if (ctx.json) {
    emit_json(ctx.out, "greedy count", {{"file", path}, {"method", method}},
              {{"count", formula.str()},
               {"components", parts.size()},
               {"enumeration", enumerated.str()},
               {"agree", agree}});
  } else {
    ctx.out << formula << '\n';
    ctx.out << "components " << parts.size() << ", enumeration " << enumerated << ", "
            << (agree ? "agree" : "DISAGREE") << '\n';
  }
  return kExitOk;
}

int cmd_balance(Context& ctx, const std::string& path, const std::string& alpha_text,
                bool all_extensions, std::uint64_t limit) {
  const Poset p = read_document(path).poset;
  std::optional<Ratio> alpha;
  if (!alpha_text.empty()) {
    alpha = Ratio::parse(alpha_text);
    if (alpha->numerator() == 0 || *alpha > half()) {
      throw Error(ErrorCode::PreconditionViolated, "alpha must lie in (0, 1/2]");
    }
  }
  const auto kind = all_extensions ? ExtensionKind::All : ExtensionKind::Greedy;
  const BalanceReport report = balance_report(p, alpha, kind, limit);
  if (ctx.json) {
    ordered_json input{{"file", path}, {"all_extensions", all_extensions}};
    input["alpha"] = alpha ? ordered_json(alpha->str()) : nullptr;
    emit_json(ctx.out, "balance", input, balance_json(p, report));
    return kExitOk;
  }
  const char* sym = all_extensions ? "P" : "GP";
  auto& o = ctx.out;
  o << "extensions: " << (all_extensions ? "all" : "greedy") << '\n';
  o << "total: " << report.total << '\n';
  for (const PairBalance& b : report.pairs) {
    o << sym << "(" << p.name(b.x) << "<" << p.name(b.y) << ") = " << b.ratio.detailed() << "   "
      << sym << "(" << p.name(b.y) << "<" << p.name(b.x) << ") = " << b.ratio.complement().detailed()
      << '\n';
  }
  if (report.best_pair) {
    o << "best pair: (" << p.name(report.best_pair->first) << ","
      << p.name(report.best_pair->second) << ") level " << report.best_level->str() << '\n';
  } else {
    o << "best pair: none (no incomparable pair)\n";
  }
  if (alpha) {
    const Ratio upper = alpha->complement();
    o << "alpha " << alpha->str() << ": "
      << (*report.meets_alpha ? "some pair lies in [" : "no pair lies in [") << alpha->str()
      << ", " << upper.str() << "]\n";
  }
  return kExitOk;
}

int cmd_witness(Context& ctx, const std::string& path, std::uint64_t limit) {
  const Poset p = read_document(path).poset;
  const WitnessPair w = half_balanced_witness(p);
  const Ratio verified = gp_ratio(p, w.x, w.y, limit);
  if (ctx.json) {
    emit_json(ctx.out, "witness", {{"file", path}}, witness_json(p, w, verified));
    return kExitOk;
  }
  auto& o = ctx.out;
  o << "pair: " << p.name(w.x) << " " << p.name(w.y) << '\n';
  o << "GP(" << p.name(w.x) << "<" << p.name(w.y) << ") = " << verified.detailed() << '\n';
  o << "trace:\n";
  for (const WitnessStep& s : w.trace) {
    if (s.kind == WitnessStep::Kind::RemovedMinimal) {
      o << "  removed minimal " << p.name(s.first) << '\n';
    } else {
      o << "  autonomous minimal pair " << p.name(s.first) << " " << p.name(s.second) << '\n';
    }
  }
  return verified == half() ? kExitOk : kExitVerifyFailed;
}

int emit_document(Context& ctx, const Poset& p, std::vector<std::string> comments,
                  const std::string& output) {
  const std::string text = format_document({p, std::move(comments)});
  if (output.empty()) {
    ctx.out << text;
  } else {
    write_text(output, text);
  }
  return kExitOk;
}

int cmd_verify(Context& ctx, const std::string& suite, const SuiteOptions& opt) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else if (is_suite(suite)) {
    suites = {suite};
  } else {
    ctx.err << "error: unknown suite '" << suite << "'; expected all";
    for (const auto& s : suite_names()) ctx.err << ", " << s;
    ctx.err << '\n';
    return kExitUsage;
  }
  bool ok = true;
  ordered_json results = ordered_json::array();
  for (const auto& name : suites) {
    const SuiteResult r = run_suite(name, opt);
    ok = ok && r.passed();
    if (ctx.json) {
      results.push_back(suite_json(r));
      continue;
    }
    for (const auto& prop : r.properties) {
      ctx.out << (prop.passed ? "PASS " : "FAIL ") << r.suite << ": " << prop.name;
      if (!prop.detail.empty()) ctx.out << " (" << prop.detail << ")";
      ctx.out << '\n';
    }
    for (const auto& f : r.findings) ctx.out << "NOTE " << r.suite << ": " << f << '\n';
  }
  if (ctx.json) {
    ordered_json input{{"suite", suite}, {"seed", opt.seed}};
    input["instances"] = opt.instances ? ordered_json(*opt.instances) : nullptr;
    input["max_n"] = opt.max_n ? ordered_json(*opt.max_n) : nullptr;
    emit_json(ctx.out, "verify", input, results);
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep_width2(Context& ctx, std::size_t max_n) {
  const Width2Sweep s = sweep_width2(max_n);
  if (ctx.json) {
    ordered_json results{{"instances", s.instances},
                         {"instances_by_n", s.instances_by_n},
                         {"consistent", s.consistent},
                         {"n_attains_third", s.n_attains_third},
                         {"below_third", s.below_third}};
    results["min_best_level"] = s.min_level ? ordered_json(s.min_level->str()) : nullptr;
    results["argmin"] = s.argmin ? poset_json(*s.argmin) : nullptr;
    results["first_below_third"] =
        s.first_below_third ? poset_json(*s.first_below_third) : nullptr;
    emit_json(ctx.out, "sweep width2", {{"max_n", max_n}}, results);
  } else {
    auto& o = ctx.out;
    for (std::size_t n = 2; n <= max_n; ++n) {
      o << "n=" << n << ": " << s.instances_by_n[n] << " width-2 labeled posets\n";
    }
    o << "minimum best level: " << (s.min_level ? s.min_level->str() : "none") << '\n';
    if (s.argmin) o << "attained by:\n" << format_poset(*s.argmin);
    o << "instances below 1/3: " << s.below_third << '\n';
    if (s.first_below_third) o << "first below 1/3:\n" << format_poset(*s.first_below_third);
    if (!s.consistent) o << "INCONSISTENT: " << s.inconsistency << '\n';
  }
  return s.consistent ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy linear extensions and balanced pairs of finite posets", "gbp"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Emit a JSON report instead of text");

  std::string file;
  std::uint64_t limit = kDefaultCap;

  auto* analyze = app.add_subcommand("analyze", "Structural summary of a poset");
  analyze->add_option("file", file, "Poset document")->required();

  auto* greedy = app.add_subcommand("greedy", "Greedy linear extensions");
  greedy->require_subcommand(1);
  auto* g_enum = greedy->add_subcommand("enum", "List greedy extensions with jump counts");
  g_enum->add_option("file", file)->required();
  g_enum->add_option("--limit", limit, "Maximum number of extensions");
  auto* g_count = greedy->add_subcommand("count", "Count greedy extensions");
  std::string method = "enum";
  g_count->add_option("file", file)->required();
  g_count->add_option("--method", method, "enum or formula")
      ->check(CLI::IsMember({"enum", "formula"}));
  g_count->add_option("--limit", limit, "Maximum number of extensions");

  auto* balance = app.add_subcommand("balance", "Before-ratios of all incomparable pairs");
  std::string alpha;
  bool all_ext = false;
  balance->add_option("file", file)->required();
  balance->add_option("--alpha", alpha, "Threshold, e.g. 1/3");
  balance->add_flag("--all-extensions", all_ext, "Use all linear extensions");
  balance->add_option("--limit", limit, "Maximum number of extensions");

  auto* witness = app.add_subcommand("witness", "Pair splitting greedy extensions in half");
  witness->add_option("file", file)->required();
  witness->add_option("--limit", limit, "Maximum number of extensions");

  auto* gen = app.add_subcommand("gen", "Generate a poset document");
  gen->require_subcommand(1);
  std::uint64_t seed = 1;
  std::string output;
  std::size_t gen_n = 0;
  double prob = 0.3;
  std::size_t attempts = kDefaultNFreeAttempts;
  std::string expr;
  auto* gen_sp = gen->add_subcommand("sp", "Random series-parallel poset");
  gen_sp->add_option("n", gen_n)->required();
  auto* gen_random = gen->add_subcommand("random", "Random poset from edge coin flips");
  gen_random->add_option("n", gen_n)->required();
  gen_random->add_option("p", prob, "Edge probability")->required();
  auto* gen_nfree = gen->add_subcommand("nfree", "Random N-free poset");
  gen_nfree->add_option("n", gen_n)->required();
  gen_nfree->add_option("--attempts", attempts, "Rejection attempts before falling back");
  auto* gen_expr = gen->add_subcommand("expr", "Evaluate a series-parallel expression");
  gen_expr->add_option("expression", expr)->required();
  for (auto* sub : {gen_sp, gen_random, gen_nfree, gen_expr}) {
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("-o,--output", output, "Write to a file instead of stdout");
  }

  auto* verify = app.add_subcommand("verify", "Run a named invariant suite");
  std::string suite;
  std::size_t instances = 0;
  std::size_t max_n = 0;
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--instances", instances, "Random instances per property");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--max-n", max_n, "Largest instance size");

  auto* sweep = app.add_subcommand("sweep", "Exhaustive sweeps");
  sweep->require_subcommand(1);
  std::size_t sweep_n = 6;
  auto* width2 = sweep->add_subcommand("width2", "Balance over all labeled width-2 posets");
  width2->add_option("--max-n", sweep_n, "Largest size, at most 7");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(ctx, file);
    if (g_enum->parsed()) return cmd_greedy_enum(ctx, file, limit);
    if (g_count->parsed()) return cmd_greedy_count(ctx, file, method, limit);
    if (balance->parsed()) return cmd_balance(ctx, file, alpha, all_ext, limit);
    if (witness->parsed()) return cmd_witness(ctx, file, limit);
    if (gen->parsed()) {
      std::ostringstream by;
      by << "generated by: gbp gen ";
      if (gen_sp->parsed()) by << "sp " << gen_n;
      if (gen_random->parsed()) by << "random " << gen_n << ' ' << prob;
      if (gen_nfree->parsed()) by << "nfree " << gen_n << " --attempts " << attempts;
      by << " --seed " << seed;
      if (gen_sp->parsed()) {
        const SpExpr e = random_sp_expr(gen_n, seed);
        return emit_document(ctx, eval_sp(e), {by.str(), "expression: " + format_sp(e)}, output);
      }
      if (gen_random->parsed()) {
        return emit_document(ctx, random_poset(gen_n, prob, seed), {by.str()}, output);
      }
      if (gen_nfree->parsed()) {
        const NFreeSample s = random_nfree_sample(gen_n, seed, attempts);
        return emit_document(ctx, s.poset,
                             {by.str(), s.used_fallback ? "series-parallel fallback"
                                                  : "accepted after " + std::to_string(s.attempts) +
                                                        " attempts"},
                             output);
      }
      const SpExpr e = parse_sp(expr);
      return emit_document(ctx, eval_sp(e), {"expression: " + format_sp(e)}, output);
    }
    if (verify->parsed()) {
      SuiteOptions opt;
      opt.seed = seed;
      if (verify->count("--instances") > 0) opt.instances = instances;
      if (verify->count("--max-n") > 0) opt.max_n = max_n;
      return cmd_verify(ctx, suite, opt);
    }
    if (width2->parsed()) {
      if (sweep_n > 7) throw Error(ErrorCode::LimitExceeded, "width-2 sweep supports n <= 7");
      return cmd_sweep_width2(ctx, sweep_n);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace gbp
