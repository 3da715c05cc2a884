#include "idyn/query.hpp"

#include <functional>
#include <map>

#include "idyn/density.hpp"
#include "idyn/dynamics.hpp"
#include "idyn/model_file.hpp"

namespace idyn {
namespace {

using nlohmann::json;

json set_json(const GroundSet& g, Subset s) {
  json out = json::array();
  s.for_each([&](Point p) { out.push_back(g.label(p)); });
  return out;
}

json family_json(const GroundSet& g, const SetFamily& family) {
  json out = json::array();
  for (auto s : family) out.push_back(set_json(g, s));
  return out;
}

std::string flag(const char* name, const std::optional<std::string>& value) {
  return value ? std::string(" --") + name + " " + *value : std::string();
}

struct Context {
  const Model& model;
  const Query& query;
  bool strict;
  Evaluation& out;

  const GroundSet& ground() const { return model.ground(); }
  const Topology& topology() const { return model.topology(); }

  Subset set() const {
    if (!query.set) throw Error(ErrorCode::Usage, query.op + " needs --set");
    return parse_subset(ground(), *query.set);
  }
  std::optional<Point> point() const {
    if (!query.point) return std::nullopt;
    return ground().point(*query.point);
  }
  Point required_point() const {
    if (!query.point) throw Error(ErrorCode::Usage, query.op + " needs --point");
    return ground().point(*query.point);
  }
  DynamicalSystem system() const { return DynamicalSystem(model, strict); }

  void answer(Subset s) {
    // A point turns a set-valued answer into a membership test.
    if (auto p = point(); p && query.command == "compute" && membership_op()) {
      answer(s.contains(*p));
      out.notes.push_back("set: " + ground().format(s));
      return;
    }
    out.text = ground().format(s);
    out.result = set_json(ground(), s);
  }
  void answer(const SetFamily& family) {
    out.text = format_family(ground(), family);
    out.result = family_json(ground(), family);
  }
  void answer(bool value) {
    out.text = value ? "true" : "false";
    out.result = value;
    out.holds = value;
  }
  void answer(const Verdict& v) {
    answer(v.holds);
    out.witness = v.witness;
  }

  bool membership_op() const {
    const auto& op = query.op;
    return op.rfind("omega", 0) == 0 || op == "transitive-points";
  }
};

OpenKind kind_suffix(const std::string& op, std::size_t prefix_len) {
  const std::string name = op.substr(prefix_len);
  if (auto k = parse_open_kind(name)) return *k;
  throw Error(ErrorCode::Usage, "unknown open kind '" + name + "'");
}

void compute(Context& c) {
  const std::string& op = c.query.op;
  const auto& t = c.topology();
  const auto& ideal = c.model.ideal();
  if (op == "closure") return c.answer(closure(t, c.set()));
  if (op == "interior") return c.answer(interior(t, c.set()));
  if (op == "neighborhoods") return c.answer(open_neighborhoods(t, c.required_point()));
  if (op == "regular-opens") return c.answer(regular_opens(t));
  if (op == "local-function") return c.answer(local_function(t, ideal, c.set()));
  if (op == "psi") return c.answer(psi(t, ideal, c.set()));
  if (op == "star-closure") return c.answer(star_closure(t, ideal, c.set()));
  if (op == "star-interior") return c.answer(star_operators(t, ideal, c.set()).int_star);
  if (op == "star-topology") return c.answer(star_topology(t, ideal).opens());
  if (op == "i-opens") return c.answer(i_opens(t, ideal));
  if (op.rfind("k-opens:", 0) == 0) return c.answer(k_opens(t, kind_suffix(op, 8)));
  if (op.rfind("k-closure:", 0) == 0) return c.answer(k_closure(t, kind_suffix(op, 10), c.set()));
  if (op == "density") {
    const auto d = density_status(t, ideal, c.set());
    c.out.text = std::string("dense=") + (d.dense ? "true" : "false") + " i-dense=" + (d.i_dense ? "true" : "false") +
                 " star-dense=" + (d.star_dense ? "true" : "false") +
                 " nowhere-dense=" + (d.nowhere_dense ? "true" : "false");
    c.out.result = {{"dense", d.dense}, {"i_dense", d.i_dense}, {"star_dense", d.star_dense},
                    {"nowhere_dense", d.nowhere_dense}};
    return;
  }
  if (op == "dense" || op == "i-dense" || op == "star-dense" || op == "nowhere-dense") {
    const auto d = density_status(t, ideal, c.set());
    return c.answer(op == "dense" ? d.dense : op == "i-dense" ? d.i_dense : op == "star-dense" ? d.star_dense
                                                                                               : d.nowhere_dense);
  }
  if (op == "codense" || op == "completely-codense" || op == "compatible") {
    const auto k = classify_ideal(t, ideal);
    return c.answer(op == "codense" ? k.codense : op == "compatible" ? k.compatible : k.completely_codense);
  }
  if (op == "dense-scan") return c.answer(dense_iff_i_dense_scan(t, ideal));
  if (op.rfind("omega", 0) == 0) {
    TransitivityKind kind;
    std::string rest = op.substr(5);
    if (rest.rfind("-i", 0) == 0) {
      kind.ideal_graded = true;
      rest = rest.substr(2);
    }
    if (!rest.empty()) {
      if (rest[0] != ':') throw Error(ErrorCode::Usage, "unknown operation '" + op + "'");
      kind.base = kind_suffix(rest, 1);
    }
    return c.answer(nonwandering_set(c.system(), kind));
  }
  if (op == "transitive-points") {
    DensityGrade grade = DensityGrade::dense;
    if (c.query.grade) {
      auto g = parse_density_grade(*c.query.grade);
      if (!g) throw Error(ErrorCode::Usage, "unknown grade '" + *c.query.grade + "'");
      grade = *g;
    }
    return c.answer(transitive_points(c.system(), grade));
  }
  if (op == "forward-union") {
    Direction d = Direction::forward;
    if (c.query.direction) {
      if (*c.query.direction == "backward") {
        d = Direction::backward;
      } else if (*c.query.direction != "forward") {
        throw Error(ErrorCode::Usage, "direction must be forward or backward");
      }
    }
    return c.answer(forward_union(c.system(), c.set(), d));
  }
  if (op == "orbit") {
    const auto o = orbit(c.system(), c.required_point());
    json seq = json::array();
    std::string text;
    for (auto p : o.sequence) {
      seq.push_back(c.ground().label(p));
      text += c.ground().label(p) + " ";
    }
    c.out.text = text + "-> " + c.ground().format(o.set);
    c.out.result = {{"sequence", seq}, {"set", set_json(c.ground(), o.set)}};
    return;
  }
  if (op == "horizon") {
    const auto& f = c.model.map();
    c.out.text = "p=" + std::to_string(f.preperiod()) + " q=" + std::to_string(f.period());
    c.out.result = {{"preperiod", f.preperiod()}, {"period", f.period()}};
    return;
  }
  if (op == "continuous") return c.answer(is_continuous(t, c.model.map()));
  if (op == "open-map") return c.answer(is_open_map(t, c.model.map()));
  if (op == "invariant") return c.answer(is_invariant(c.model.map(), c.set()));
  if (op == "pushforward") return c.answer(pushforward_ideal(c.model.map(), ideal).support());
  if (op == "pullback") return c.answer(pullback_ideal(c.model.map(), ideal).support());
  if (op == "transitive-over" || op == "i-transitive-over") {
    if (!c.query.family) throw Error(ErrorCode::Usage, op + " needs --family");
    const SetFamily family = parse_family(c.ground(), *c.query.family);
    const bool graded = op == "i-transitive-over";
    if (graded && !ideal.proper()) throw Error(ErrorCode::ImproperIdeal, "the ideal contains X");
    return c.answer(transitive_over(family, c.model.map(), graded ? ideal.support() : Subset{}));
  }
  throw Error(ErrorCode::Usage, "unknown operation '" + op + "'");
}

void witness_text(const Evaluation& e, const GroundSet& g, std::string& out) {
  if (!e.witness) return;
  const auto& w = *e.witness;
  out += "witness: U=" + g.format(w.u);
  if (w.v) out += " V=" + g.format(*w.v);
  if (w.n) out += " n=" + std::to_string(*w.n);
  if (w.n_range) out += " n=" + std::to_string(w.n_range->first) + ".." + std::to_string(w.n_range->second);
  out += "\n";
}

}  // namespace

std::string Query::describe() const {
  std::string out = command;
  if (!op.empty()) out += " " + op;
  return out + flag("set", set) + flag("point", point) + flag("family", family) + flag("grade", grade) +
         flag("direction", direction);
}

std::vector<std::string> compute_ops() {
  return {"closure",        "interior",          "neighborhoods",  "regular-opens",   "local-function",
          "psi",            "star-closure",      "star-interior",  "star-topology",   "i-opens",
          "k-opens:<kind>", "k-closure:<kind>",  "density",        "dense",           "i-dense",
          "star-dense",     "nowhere-dense",     "codense",        "completely-codense", "compatible",        "dense-scan",      "omega[-i][:<kind>]",
          "transitive-points", "forward-union",  "orbit",          "horizon",         "continuous",
          "open-map",       "invariant",         "pushforward",    "pullback",        "transitive-over",
          "i-transitive-over"};
}

Evaluation evaluate(const Model& model, const Query& query, bool strict_continuity) {
  Evaluation out;
  out.query = query.describe();
  Context c{model, query, strict_continuity, out};
  if (query.command == "check") {
    auto kind = TransitivityKind::parse(query.op);
    if (!kind) throw Error(ErrorCode::Usage, "unknown transitivity kind '" + query.op + "'");
    c.answer(check_transitive(c.system(), *kind));
  } else if (query.command == "compute") {
    compute(c);
  } else if (query.command == "classify") {
    const auto k = classify_ideal(model.topology(), model.ideal());
    out.result = {{"codense", k.codense},
                  {"completely_codense", k.completely_codense},
                  {"compatible", k.compatible},
                  {"hayashi_samuel", k.hayashi_samuel},
                  {"proper", model.ideal().proper()},
                  {"trivial", model.ideal().trivial()}};
    for (auto& [key, value] : out.result.items()) {
      out.text += key + "=" + (value.get<bool>() ? "true" : "false") + " ";
    }
    out.text.pop_back();
  } else {
    throw Error(ErrorCode::Usage, "unknown command '" + query.command + "'");
  }
  return out;
}

json to_json(const Evaluation& e, const Model& model) {
  json out = {{"tool_version", kToolVersion},
              {"query", e.query},
              {"model_name", model.name()},
              {"result", e.result}};
  if (e.holds) out["holds"] = *e.holds;
  if (e.witness) {
    const auto& g = model.ground();
    json w = {{"U", set_json(g, e.witness->u)}};
    if (e.witness->v) w["V"] = set_json(g, *e.witness->v);
    if (e.witness->n) w["n"] = *e.witness->n;
    if (e.witness->n_range) w["n_range"] = {e.witness->n_range->first, e.witness->n_range->second};
    out["witness"] = w;
  }
  if (!e.notes.empty()) out["notes"] = e.notes;
  return out;
}

std::string to_text(const Evaluation& e, const Model& model) {
  std::string out;
  if (!model.name().empty()) out += "model: " + model.name() + "\n";
  out += "query: " + e.query + "\nresult: " + e.text + "\n";
  witness_text(e, model.ground(), out);
  for (const auto& n : e.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace idyn
