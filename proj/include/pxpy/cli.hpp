#pragma once

// Command-line driver. Payload goes to `out` (JSON lines or TSV), diagnostics
// to `err`. Exit codes: 0 success / certified / consistent, 1 well-formed
// negative result, 2 invalid input or resource cap, 3 internal inconsistency.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pxpy/arithmetic.hpp"
#include "pxpy/catalan.hpp"
#include "pxpy/classifier.hpp"
#include "pxpy/cross_check.hpp"
#include "pxpy/oracle.hpp"
#include "pxpy/parallel.hpp"

namespace pxpy::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr Exponent kDefaultDigitCap = 100'000;

enum ExitCode : int { kOk = 0, kNegative = 1, kInvalid = 2, kInconsistent = 3 };

using Json = nlohmann::ordered_json;

namespace detail {

enum class Format { json_lines, tsv };

inline Json record(std::string_view command, Json instance) {
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["instance"] = std::move(instance);
  return r;
}

inline Json instance_json(const EquationInstance& inst) {
  return Json{{"p", to_decimal(inst.p())}, {"n", std::to_string(inst.n())}};
}

inline Json triple_json(const SolutionTriple& t) {
  return Json{{"x", std::to_string(t.x)}, {"y", std::to_string(t.y)}, {"z", to_decimal(t.z)}};
}

inline Json triples_json(const std::vector<SolutionTriple>& ts) {
  Json arr = Json::array();
  for (const auto& t : ts) arr.push_back(triple_json(t));
  return arr;
}

inline void tsv_triples(std::ostream& out, const std::vector<SolutionTriple>& ts) {
  out << "x\ty\tz\n";
  for (const auto& t : ts) out << t.x << '\t' << t.y << '\t' << to_decimal(t.z) << '\n';
}

inline void require_digits(const Natural& base, Exponent e, Exponent cap, std::string_view what) {
  const Exponent digits = digits_upper_bound(base, e);
  if (digits > cap)
    throw ResourceError(std::string(what) + " needs about " + std::to_string(digits) + " decimal digits, over the cap of " +
                        std::to_string(cap) + " (raise --digit-cap)");
}

struct Args {
  std::string p = "2";
  std::string n = "1";
  std::vector<std::string> p_list{"2", "3", "5", "7", "11", "13"};
  std::vector<std::string> n_list{"1", "2", "3"};
  std::string x = "0", y = "0", z = "0";
  std::string max_exponent = "10";
  std::string x_max = "14", y_max = "14";
  unsigned workers = default_workers();
  Exponent digit_cap = kDefaultDigitCap;
  Format format = Format::json_lines;
};

inline EquationInstance instance_from(const std::string& p, const std::string& n) {
  return EquationInstance(parse_natural(p), parse_exponent(n));
}

inline int cmd_classify(const Args& a, std::ostream& out) {
  const EquationInstance inst = instance_from(a.p, a.n);
  const Classification c = classify(inst);
  if (a.format == Format::tsv) {
    out << "x\ty\tz\tcondition\n";
    for (const auto& f : c.families)
      out << ::pxpy::detail::render_affine(f.x) << '\t' << ::pxpy::detail::render_affine(f.y) << '\t' << render_power(f.z)
          << '\t' << render_condition(f.condition) << '\n';
    return kOk;
  }
  Json r = record("classify", instance_json(inst));
  r["no_solutions"] = c.no_solutions;
  const std::size_t count = c.families.size();
  r["summary"] = c.no_solutions ? std::string("no solutions") : std::to_string(count) + (count == 1 ? " family" : " families");
  Json fams = Json::array();
  for (const auto& f : c.families)
    fams.push_back({{"x", ::pxpy::detail::render_affine(f.x)},
                    {"y", ::pxpy::detail::render_affine(f.y)},
                    {"z", render_power(f.z)},
                    {"condition", render_condition(f.condition)},
                    {"text", render_family(f)}});
  r["families"] = std::move(fams);
  out << r.dump() << '\n';
  return kOk;
}

inline int cmd_enumerate(const Args& a, std::ostream& out) {
  const EquationInstance inst = instance_from(a.p, a.n);
  const Exponent max_exponent = parse_exponent(a.max_exponent);
  require_digits(inst.p(), max_exponent, a.digit_cap, "p^max_exponent");
  const auto triples = enumerate(inst, max_exponent);
  if (a.format == Format::tsv) {
    tsv_triples(out, triples);
    return kOk;
  }
  for (const auto& t : triples) {
    Json r = record("enumerate", instance_json(inst));
    r["triple"] = triple_json(t);
    out << r.dump() << '\n';
  }
  return kOk;
}

inline SolutionTriple triple_from(const Args& a) {
  return {parse_exponent(a.x), parse_exponent(a.y), parse_natural(a.z)};
}

inline int cmd_verify(const Args& a, std::ostream& out) {
  const EquationInstance inst = instance_from(a.p, a.n);
  const SolutionTriple t = triple_from(a);
  require_digits(inst.p(), std::max(t.x, t.y), a.digit_cap, "p^max(x, y)");
  const bool ok = verify(inst, t);
  if (a.format == Format::tsv) {
    out << "x\ty\tz\tcertified\n" << t.x << '\t' << t.y << '\t' << to_decimal(t.z) << '\t' << (ok ? "true" : "false") << '\n';
  } else {
    Json r = record("verify", instance_json(inst));
    r["triple"] = triple_json(t);
    r["certified"] = ok;
    out << r.dump() << '\n';
  }
  return ok ? kOk : kNegative;
}

inline int cmd_trace(const Args& a, std::ostream& out) {
  const EquationInstance inst = instance_from(a.p, a.n);
  const SolutionTriple t = triple_from(a);
  require_digits(inst.p(), std::max(t.x, t.y), a.digit_cap, "p^max(x, y)");
  require_digits(t.z, inst.n(), a.digit_cap, "z^n");
  const CaseTrace tr = trace_candidate(inst, t);

  auto opt = [](const auto& v) -> Json {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Natural>)
      return to_decimal(*v);
    else
      return std::to_string(*v);
  };
  if (a.format == Format::tsv) {
    out << "case\treduced_case\te\tk\tw\tverdict\treason\n";
    auto cell = [](const Json& j) { return j.is_null() ? std::string() : j.get<std::string>(); };
    out << label(tr.proof_case) << '\t' << (tr.reduced_case ? std::string(label(*tr.reduced_case)) : "") << '\t'
        << cell(opt(tr.e)) << '\t' << cell(opt(tr.k)) << '\t' << cell(opt(tr.w)) << '\t'
        << (tr.accepted() ? "accepted" : "rejected") << '\t' << tr.rejection_reason.value_or("") << '\n';
  } else {
    Json r = record("trace", instance_json(inst));
    r["triple"] = triple_json(t);
    r["case"] = label(tr.proof_case);
    r["reduced_case"] = tr.reduced_case ? Json(label(*tr.reduced_case)) : Json(nullptr);
    r["e"] = opt(tr.e);
    r["k"] = opt(tr.k);
    r["w"] = opt(tr.w);
    r["verdict"] = tr.accepted() ? "accepted" : "rejected";
    r["reason"] = tr.rejection_reason ? Json(*tr.rejection_reason) : Json(nullptr);
    r["summary"] = describe(tr);
    out << r.dump() << '\n';
  }
  return tr.accepted() ? kOk : kNegative;
}

inline SearchBox box_from(const Args& a) { return {parse_exponent(a.x_max), parse_exponent(a.y_max)}; }

inline int cmd_search(const Args& a, std::ostream& out) {
  const EquationInstance inst = instance_from(a.p, a.n);
  const SearchBox box = box_from(a);
  require_digits(inst.p(), std::max(box.x_max, box.y_max), a.digit_cap, "p^max(x_max, y_max)");
  const SearchReport rep = brute_force(inst, box, a.workers);
  if (a.format == Format::tsv) {
    tsv_triples(out, rep.solutions);
    return kOk;
  }
  Json r = record("search", instance_json(inst));
  r["box"] = {{"x_max", std::to_string(box.x_max)}, {"y_max", std::to_string(box.y_max)}};
  r["workers"] = a.workers;
  r["pairs_checked"] = std::to_string(rep.pairs_checked);
  r["elapsed_ms"] = rep.elapsed.count();
  r["solutions"] = triples_json(rep.solutions);
  out << r.dump() << '\n';
  return kOk;
}

inline int cmd_crosscheck(const Args& a, std::ostream& out) {
  const SearchBox box = box_from(a);
  std::vector<EquationInstance> instances;
  for (const auto& p : a.p_list)
    for (const auto& n : a.n_list) instances.push_back(instance_from(p, n));
  for (const auto& inst : instances)
    require_digits(inst.p(), std::max(box.x_max, box.y_max), a.digit_cap, "p^max(x_max, y_max)");

  if (a.format == Format::tsv) out << "p\tn\tx_max\ty_max\tsearched\tpredicted\tverdict\n";
  bool all = true;
  for (const auto& inst : instances) {
    const CrossCheckResult res = cross_check(inst, box, a.workers);
    all = all && res.consistent();
    const char* verdict = res.consistent() ? "CONSISTENT" : "INCONSISTENT";
    if (a.format == Format::tsv) {
      out << to_decimal(inst.p()) << '\t' << inst.n() << '\t' << box.x_max << '\t' << box.y_max << '\t'
          << res.searched.size() << '\t' << res.predicted.size() << '\t' << verdict << '\n';
      continue;
    }
    Json r = record("crosscheck", instance_json(inst));
    r["box"] = {{"x_max", std::to_string(box.x_max)}, {"y_max", std::to_string(box.y_max)}};
    r["verdict"] = verdict;
    r["searched"] = std::to_string(res.searched.size());
    r["predicted"] = std::to_string(res.predicted.size());
    r["only_searched"] = triples_json(res.only_searched);
    r["only_predicted"] = triples_json(res.only_predicted);
    out << r.dump() << '\n';
  }
  return all ? kOk : kNegative;
}

struct Regime {
  const char* n_range;
  const char* p_range;
  Exponent n_rep;
  unsigned p_rep;
};

inline int cmd_summary(const Args& a, std::ostream& out) {
  // Each row is classified through a representative instance of its regime.
  static constexpr Regime kRegimes[] = {
      {"1", "2", 1, 2}, {"1", "3", 1, 3}, {"1", ">3", 1, 5}, {">1", "2", 2, 2}, {">1", ">=3", 2, 3},
  };
  if (a.format == Format::tsv) out << "n\tp\tsolutions\tfamilies\n";
  for (const Regime& reg : kRegimes) {
    const Classification c = classify(EquationInstance(reg.p_rep, reg.n_rep));
    const std::optional<std::string_view> n_symbol =
        reg.n_rep > 1 ? std::optional<std::string_view>("n") : std::nullopt;
    std::vector<std::string> fams;
    for (const auto& f : c.families) fams.push_back(render_family(f, n_symbol));
    const char* solutions = c.no_solutions ? "none" : "infinitely many";

    if (a.format == Format::tsv) {
      std::string joined;
      for (const auto& f : fams) joined += (joined.empty() ? "" : "; ") + f;
      out << reg.n_range << '\t' << reg.p_range << '\t' << solutions << '\t' << joined << '\n';
      continue;
    }
    Json r = record("summary", Json{{"p", reg.p_range}, {"n", reg.n_range}});
    r["solutions"] = solutions;
    r["families"] = fams;
    out << r.dump() << '\n';
  }
  return kOk;
}

}  // namespace detail

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using detail::Format;
  detail::Args a;
  CLI::App app{"Exact solver and verifier for p^x + p^y = z^(2n), p prime, n >= 1", "pxpy"};
  app.require_subcommand(0, 1);
  bool show_schema = false;
  app.add_flag("--schema-version", show_schema, "Print the output schema version and exit");

  const std::map<std::string, Format> formats{{"json-lines", Format::json_lines}, {"tsv", Format::tsv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--digit-cap", a.digit_cap, "Refuse computations whose numbers exceed this many decimal digits")
        ->check(CLI::PositiveNumber);
  };
  auto instance = [&](CLI::App* sub) {
    sub->add_option("--p", a.p, "Prime base p")->required();
    sub->add_option("--n", a.n, "Exponent n >= 1 of z^(2n)")->required();
  };
  auto triple = [&](CLI::App* sub) {
    sub->add_option("-x", a.x, "Exponent x")->required();
    sub->add_option("-y", a.y, "Exponent y")->required();
    sub->add_option("-z", a.z, "Base z")->required();
  };
  auto workers = [&](CLI::App* sub) {
    sub->add_option("--workers", a.workers, "Parallel search workers")->check(CLI::PositiveNumber);
  };
  auto box = [&](CLI::App* sub) {
    sub->add_option("--x-max", a.x_max, "Largest x searched");
    sub->add_option("--y-max", a.y_max, "Largest y searched");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "List the solution families for (p, n)");
  instance(classify_cmd);
  common(classify_cmd);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List every solution with x, y <= max-exponent");
  instance(enumerate_cmd);
  enumerate_cmd->add_option("--max-exponent", a.max_exponent, "Bound on max(x, y)")->required();
  common(enumerate_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check p^x + p^y = z^(2n) exactly");
  instance(verify_cmd);
  triple(verify_cmd);
  common(verify_cmd);

  CLI::App* trace_cmd = app.add_subcommand("trace", "Show which proof case accepts or rejects (x, y, z)");
  instance(trace_cmd);
  triple(trace_cmd);
  common(trace_cmd);

  CLI::App* search_cmd = app.add_subcommand("search", "Brute-force every (x, y) in a box");
  instance(search_cmd);
  box(search_cmd);
  workers(search_cmd);
  common(search_cmd);

  CLI::App* cross_cmd = app.add_subcommand("crosscheck", "Compare brute force with the families over (p, n) grids");
  cross_cmd->add_option("--p", a.p_list, "Primes to check")->delimiter(',');
  cross_cmd->add_option("--n", a.n_list, "Values of n to check")->delimiter(',');
  box(cross_cmd);
  workers(cross_cmd);
  common(cross_cmd);

  CLI::App* summary_cmd = app.add_subcommand("summary", "Print the solvability regimes");
  common(summary_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalid;
  }

  if (show_schema) {
    out << kSchemaVersion << '\n';
    return kOk;
  }

  try {
    if (classify_cmd->parsed()) return detail::cmd_classify(a, out);
    if (enumerate_cmd->parsed()) return detail::cmd_enumerate(a, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(a, out);
    if (trace_cmd->parsed()) return detail::cmd_trace(a, out);
    if (search_cmd->parsed()) return detail::cmd_search(a, out);
    if (cross_cmd->parsed()) return detail::cmd_crosscheck(a, out);
    if (summary_cmd->parsed()) return detail::cmd_summary(a, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  }

  err << app.help();
  return kInvalid;
}

}  // namespace pxpy::cli
