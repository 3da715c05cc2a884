#include "idyn/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "idyn/corpus.hpp"
#include "idyn/falsify.hpp"
#include "idyn/model_file.hpp"
#include "idyn/query.hpp"

namespace idyn {
namespace {

using nlohmann::json;

constexpr std::string_view kCorpusPrefix = "corpus:";

/// A path, or `corpus:NAME` for a built-in example.
Model load(const std::string& source) {
  if (source.rfind(kCorpusPrefix, 0) == 0) {
    const std::string name = source.substr(kCorpusPrefix.size());
    for (const auto& entry : corpus()) {
      if (entry.name == name) return entry.model();
    }
    throw Error(ErrorCode::Usage, "no corpus entry named '" + name + "'");
  }
  return load_model(source);
}

json envelope(const std::string& query, const std::string& model_name, json result) {
  return {{"tool_version", kToolVersion}, {"query", query}, {"model_name", model_name}, {"result", std::move(result)}};
}

struct Options {
  std::string format = "text";
  bool strict = false;

  // check / compute / classify / print
  std::string kind, op, model;
  std::optional<std::string> set, point, family, grade, direction;

  // suite / mine
  std::size_t size = 3;
  std::size_t min_size = 1;
  bool include_suspect = false;
  bool suspect_only = false;
  bool timing = false;
  bool continuous_only = false;
  bool proper_only = false;
  unsigned workers = 0;
  std::vector<std::string> targets;
  std::string predicate;
  std::optional<std::size_t> limit;
};

int answer(const Options& o, const Query& q, std::ostream& out) {
  const Model model = load(o.model);
  Evaluation e = evaluate(model, q, o.strict);
  auto notes = discrepancy_notes(model, q);
  e.notes.insert(e.notes.end(), notes.begin(), notes.end());
  if (o.format == "json") {
    out << to_json(e, model).dump(2) << "\n";
  } else {
    out << to_text(e, model);
  }
  return 0;
}

int run_print(const Options& o, std::ostream& out) {
  const Model model = load(o.model);
  if (o.format == "json") {
    json result = {{"model", print_model(model)}};
    out << envelope("print", model.name(), result).dump(2) << "\n";
  } else {
    out << print_model(model);
  }
  return 0;
}

int run_paper(const Options& o, std::ostream& out) {
  const auto results = run_corpus();
  std::size_t mismatches = 0, discrepancies = 0;
  for (const auto& r : results) {
    mismatches += r.status == ClaimStatus::mismatch ? 1 : 0;
    discrepancies += r.status == ClaimStatus::registered_discrepancy ? 1 : 0;
  }
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      json row = {{"entry", r.entry},
                  {"query", r.claim.query.describe()},
                  {"expected", r.claim.expected},
                  {"computed", r.computed},
                  {"source", std::string(to_string(r.claim.source))},
                  {"status", std::string(to_string(r.status))}};
      if (r.claim.source == ClaimSource::discrepancy) row["printed"] = r.claim.printed_value;
      if (!r.claim.note.empty()) row["note"] = r.claim.note;
      rows.push_back(row);
    }
    json result = {{"rows", rows}, {"claims", results.size()}, {"discrepancies", discrepancies},
                   {"mismatches", mismatches}};
    json doc = envelope("paper", "", result);
    doc["holds"] = mismatches == 0;
    out << doc.dump(2) << "\n";
  } else {
    std::size_t w_entry = 5, w_query = 5, w_value = 8;
    for (const auto& r : results) {
      w_entry = std::max(w_entry, r.entry.size());
      w_query = std::max(w_query, r.claim.query.describe().size());
      w_value = std::max(w_value, r.computed.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    out << pad("entry", w_entry) << "  " << pad("query", w_query) << "  " << pad("computed", w_value)
        << "  source       status\n";
    for (const auto& r : results) {
      out << pad(r.entry, w_entry) << "  " << pad(r.claim.query.describe(), w_query) << "  "
          << pad(r.computed, w_value) << "  " << pad(std::string(to_string(r.claim.source)), 11) << "  "
          << to_string(r.status) << "\n";
      if (r.claim.source == ClaimSource::discrepancy) {
        out << pad("", w_entry) << "  printed " << r.claim.printed_value << "; " << r.claim.note << "\n";
      }
      if (r.status == ClaimStatus::mismatch) out << pad("", w_entry) << "  expected " << r.claim.expected << "\n";
    }
    out << results.size() << " claims, " << discrepancies << " registered discrepancies, " << mismatches
        << " mismatches\n";
  }
  return mismatches == 0 ? 0 : 1;
}

ModelSpace space_of(const Options& o) {
  ModelSpace s;
  s.min_size = o.min_size;
  s.max_size = o.size;
  s.continuous_only = o.continuous_only;
  s.proper_ideals_only = o.proper_only;
  return s;
}

std::string space_text(const Options& o) {
  std::string s = "--size " + std::to_string(o.size);
  if (o.min_size != 1) s += " --min-size " + std::to_string(o.min_size);
  if (o.continuous_only) s += " --continuous-only";
  if (o.proper_only) s += " --proper-only";
  return s;
}

int run_suite_cmd(const Options& o, std::ostream& out) {
  std::vector<TheoremTarget> targets;
  if (!o.targets.empty()) {
    for (const auto& id : o.targets) {
      const TheoremTarget* t = find_target(id);
      if (!t) throw Error(ErrorCode::Usage, "unknown target '" + id + "'");
      targets.push_back(*t);
    }
  } else {
    targets = select_targets(!o.suspect_only, o.include_suspect || o.suspect_only);
  }
  SuiteOptions opts;
  opts.workers = o.workers;
  const SuiteReport report = run_suite(space_of(o), targets, opts);
  std::string query = "suite " + space_text(o);
  if (o.include_suspect) query += " --include-suspect";
  if (o.suspect_only) query += " --suspect-only";
  if (o.format == "json") {
    json tallies = json::array();
    for (const auto& t : report.tallies) {
      tallies.push_back({{"id", t.id},
                         {"status", std::string(to_string(t.status))},
                         {"evaluated", t.evaluated},
                         {"hypothesis_held", t.hypothesis_held},
                         {"violations", t.violations}});
    }
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"target", v.target},
                            {"size", v.at.size},
                            {"topology", v.at.topology},
                            {"map", v.at.map},
                            {"ideal", v.at.ideal},
                            {"model", v.model},
                            {"witness", v.witness}});
    }
    json result = {{"instances_checked", report.instances_checked}, {"targets", tallies},
                   {"violations", violations}};
    if (o.timing) result["runtime_ms"] = report.runtime.count();
    json doc = envelope(query, "", result);
    doc["holds"] = report.sound_clean();
    out << doc.dump(2) << "\n";
  } else {
    out << format_suite_report(report, o.timing);
  }
  return report.sound_clean() ? 0 : 1;
}

int run_mine_cmd(const Options& o, std::ostream& out) {
  const auto predicate = parse_predicate(o.predicate);
  const auto found = mine(space_of(o), predicate, o.limit, o.workers);
  std::string query = "mine " + space_text(o) + " --predicate " + o.predicate;
  if (o.limit) query += " --limit " + std::to_string(*o.limit);
  if (o.format == "json") {
    json models = json::array();
    for (const auto& m : found) {
      models.push_back({{"size", m.at.size},
                        {"topology", m.at.topology},
                        {"map", m.at.map},
                        {"ideal", m.at.ideal},
                        {"model", compact_model(m.model.topology(), m.model.ideal(), m.model.map())}});
    }
    out << envelope(query, "", {{"count", found.size()}, {"models", models}}).dump(2) << "\n";
  } else {
    for (const auto& m : found) {
      out << "n=" << m.at.size << " #" << m.at.topology << "/" << m.at.map << "/" << m.at.ideal << " "
          << compact_model(m.model.topology(), m.model.ideal(), m.model.map()) << "\n";
    }
    out << found.size() << " models\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"finite ideal topological dynamics checker", "idyn"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict-continuity", o.strict, "reject discontinuous maps");

  auto* check = app.add_subcommand("check", "transitivity verdict with witness");
  check->add_option("kind", o.kind, "transitive, i-transitive, semi-i-transitive, ...")->required();
  check->add_option("model", o.model, "model file or corpus:NAME")->required();

  std::string ops;
  for (const auto& name : compute_ops()) ops += (ops.empty() ? "" : " ") + name;
  auto* compute = app.add_subcommand("compute", "evaluate an operator");
  compute->footer("operators: " + ops);
  compute->add_option("op", o.op, "operator name")->required();
  compute->add_option("model", o.model, "model file or corpus:NAME")->required();
  compute->add_option("--set", o.set, "subset such as \"{a b}\"");
  compute->add_option("--point", o.point, "point label");
  compute->add_option("--family", o.family, "family such as \"{} {a}\"");
  compute->add_option("--grade", o.grade, "dense, i-dense or star-dense");
  compute->add_option("--direction", o.direction, "forward or backward");

  auto* classify = app.add_subcommand("classify", "codense / completely codense / compatible");
  classify->add_option("model", o.model, "model file or corpus:NAME")->required();

  auto* print = app.add_subcommand("print", "canonical model file");
  print->add_option("model", o.model, "model file or corpus:NAME")->required();

  auto* paper = app.add_subcommand("paper", "run the example corpus");

  auto add_space = [&o](CLI::App* sub) {
    sub->add_option("--size", o.size, "largest ground set size (1..5)")->required();
    sub->add_option("--min-size", o.min_size, "smallest ground set size");
    sub->add_flag("--continuous-only", o.continuous_only, "continuous maps only");
    sub->add_flag("--proper-only", o.proper_only, "proper ideals only");
    sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  };
  auto* suite = app.add_subcommand("suite", "exhaustive theorem checks");
  add_space(suite);
  suite->add_flag("--include-suspect", o.include_suspect, "also run suspect targets");
  suite->add_flag("--suspect-only", o.suspect_only, "run only suspect targets");
  suite->add_option("--target", o.targets, "run only these target ids");
  suite->add_flag("--timing", o.timing, "print the runtime");

  auto* mine_cmd = app.add_subcommand("mine", "search for models satisfying a predicate");
  add_space(mine_cmd);
  mine_cmd->add_option("--predicate", o.predicate, "e.g. \"transitive & !i_transitive\"")->required();
  mine_cmd->add_option("--limit", o.limit, "stop after this many models");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      Query q{"check", o.kind, {}, {}, {}, {}, {}};
      return answer(o, q, out);
    }
    if (compute->parsed()) {
      Query q{"compute", o.op, o.set, o.point, o.family, o.grade, o.direction};
      return answer(o, q, out);
    }
    if (classify->parsed()) return answer(o, Query{"classify", "", {}, {}, {}, {}, {}}, out);
    if (print->parsed()) return run_print(o, out);
    if (paper->parsed()) return run_paper(o, out);
    if (suite->parsed()) return run_suite_cmd(o, out);
    if (mine_cmd->parsed()) return run_mine_cmd(o, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace idyn
