#include "idyn/corpus.hpp"

#include "idyn/model_file.hpp"

namespace idyn {
namespace {

Query check(std::string kind) { return {"check", std::move(kind), {}, {}, {}, {}, {}}; }

Query compute(std::string op) { return {"compute", std::move(op), {}, {}, {}, {}, {}}; }

Query with_set(Query q, std::string set) {
  q.set = std::move(set);
  return q;
}

Query with_point(Query q, std::string point) {
  q.point = std::move(point);
  return q;
}

Claim printed(Query q, std::string expected, std::string note = {}) {
  return {std::move(q), std::move(expected), ClaimSource::printed, {}, std::move(note)};
}

Claim derived(Query q, std::string expected, std::string note = {}) {
  return {std::move(q), std::move(expected), ClaimSource::derived, {}, std::move(note)};
}

Claim discrepancy(Query q, std::string computed, std::string printed_value, std::string note) {
  return {std::move(q), std::move(computed), ClaimSource::discrepancy, std::move(printed_value), std::move(note)};
}

// Shared by several examples: X={a,b,c}, opens {a} {b} {a b}, a and b
// swapped, c fixed.
constexpr const char* kSwapSpace =
    "points: a b c\n"
    "opens: {a} {b} {a b}\n"
    "map: a>b b>a c>c\n";

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;

  c.push_back({"EX_4_0_1",
               "name: EX_4_0_1\npoints: a b c d\nopens: {a} {c} {a c} {a c d}\nideal: {d}\nmap: a>c b>b c>a d>d\n",
               {printed(check("i-transitive"), "true"), derived(check("transitive"), "true")}});

  c.push_back({"EX_4_1",
               "name: EX_4_1\npoints: a b c d\nopens: {a} {c} {a c} {a c d}\nideal: {a} {c}\nmap: a>c b>b c>a d>d\n",
               {printed(check("transitive"), "true"), printed(check("i-transitive"), "false"),
                printed(compute("open-map"), "true"), printed(compute("continuous"), "true"),
                derived(with_set(compute("forward-union"), "{a}"), "{a c}")}});

  c.push_back({"EX_5_1", std::string("name: EX_5_1\n") + kSwapSpace + "ideal: {c}\n",
               {printed(with_point(compute("omega-i"), "a"), "true"),
                derived(compute("omega-i"), "{a b c}")}});

  c.push_back({"EX_5_2", std::string("name: EX_5_2\n") + kSwapSpace + "ideal: {a b}\n",
               {printed(with_point(compute("omega"), "a"), "true"),
                printed(with_point(compute("omega-i"), "a"), "false"), derived(compute("omega-i"), "{c}")}});

  c.push_back({"EX_5_6", "name: EX_5_6\npoints: a b\nopens: {a}\nideal: {b}\nmap: a>a b>a\n",
               {printed(with_point(compute("orbit"), "b"), "b a -> {a b}"),
                printed([] {
                  auto q = with_point(compute("transitive-points"), "b");
                  q.grade = "i-dense";
                  return q;
                }(), "true"),
                derived(with_set(compute("local-function"), "{a}"), "{a b}")}});

  c.push_back({"REMARK_CE_1", "name: REMARK_CE_1\npoints: a b c d\nopens: {a c d}\nideal: {a} {c}\n",
               {printed(compute("codense"), "true"), printed(with_set(compute("dense"), "{a b c}"), "true"),
                printed(with_set(compute("i-dense"), "{a b c}"), "false"),
                discrepancy(with_set(compute("local-function"), "{a b c}"), "{b}", "{b c d}",
                            "c and d have only the open neighbourhoods {a c d} and X, which meet A in {a c} ∈ I"),
                discrepancy(with_set(compute("star-closure"), "{a b c}"), "{a b c}", "{a b c d}",
                            "follows from A* = {b}"),
                discrepancy(with_set(compute("star-dense"), "{a b c}"), "false", "true",
                            "Cl*(A) = {a b c} is not X"),
                derived(compute("completely-codense"), "false", "{a c} is preopen and lies in I")}});

  c.push_back({"REMARK_CE_2", "name: REMARK_CE_2\npoints: a b c\nopens: {a b}\nideal: {a}\n",
               {derived(compute("codense"), "true", "finite analogue of the codense compatible counterexample"),
                derived(compute("compatible"), "true"), derived(with_set(compute("dense"), "{a}"), "true"),
                derived(with_set(compute("local-function"), "{a}"), "{}"),
                derived(with_set(compute("i-dense"), "{a}"), "false"),
                derived(with_set(compute("star-dense"), "{a}"), "false")}});

  c.push_back({"NCF_08_FINITE", "name: NCF_08_FINITE\npoints: a b\nideal: {a}\n",
               {derived(compute("k-opens:semi"), "[{} {a b}]", "finite analogue: indiscrete, identity"),
                derived(compute("k-opens:b"), "[{} {a} {b} {a b}]"), derived(check("semi-i-transitive"), "true"),
                derived(check("b-i-transitive"), "false")}});

  c.push_back({"NCF_09", std::string("name: NCF_09\n") + kSwapSpace + "ideal: {c}\n",
               {printed(check("i-transitive"), "true"),
                discrepancy(compute("k-opens:pre"), "[{} {a} {b} {a b} {a b c}]", "[{} {a} {b} {a b} {c} {a c} {b c} {a b c}]",
                            "Cl({c}) = {c} has empty interior, so {c}, {a c} and {b c} are not preopen"),
                discrepancy(check("pre-i-transitive"), "true", "false",
                            "the preopen sets are exactly the open sets here, so pre-I equals I"),
                printed([] {
                  auto q = compute("i-transitive-over");
                  q.family = "[{} {a} {b} {a b} {c} {a c} {b c} {a b c}]";
                  return q;
                }(), "false", "over the listed family the pair ({c}, {c}) fails")}});

  c.push_back({"NCF_10", std::string("name: NCF_10\n") + kSwapSpace + "ideal: {c}\n",
               {printed(compute("k-opens:pre"), "[{} {a} {b} {a b} {a b c}]"),
                printed(compute("k-opens:b"), "[{} {a} {b} {a b} {a c} {b c} {a b c}]"),
                printed(check("pre-i-transitive"), "true"),
                discrepancy(check("b-i-transitive"), "true", "false",
                            "every nonempty b-open set contains a nonempty preopen set, so b-I equals pre-I")}});

  c.push_back({"NCF_11",
               "name: NCF_11\npoints: a b c d\nopens: {a} {c} {a c} {a c d}\nideal: {b}\nmap: a>c b>b c>a d>d\n",
               {printed(compute("k-opens:semi"),
                        "[{} {a} {a b} {c} {a c} {b c} {a b c} {a d} {a b d} {c d} {a c d} {b c d} {a b c d}]"),
                printed(check("i-transitive"), "true"),
                discrepancy(check("semi-i-transitive"), "true", "false",
                            "every nonempty semi-open set contains a nonempty open set, so semi-I equals I")}});
  return c;
}

}  // namespace

std::string_view to_string(ClaimSource source) {
  switch (source) {
    case ClaimSource::printed: return "printed";
    case ClaimSource::derived: return "derived";
    case ClaimSource::discrepancy: return "discrepancy";
  }
  return "?";
}

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::ok: return "ok";
    case ClaimStatus::registered_discrepancy: return "registered discrepancy";
    case ClaimStatus::mismatch: return "MISMATCH";
  }
  return "?";
}

Model CorpusEntry::model() const { return parse_model(model_text); }

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::vector<ClaimResult> run_corpus() {
  std::vector<ClaimResult> out;
  for (const auto& entry : corpus()) {
    const Model model = entry.model();
    for (const auto& claim : entry.claims) {
      ClaimResult r{entry.name, claim, {}, ClaimStatus::ok};
      try {
        r.computed = evaluate(model, claim.query).text;
      } catch (const Error& e) {
        r.computed = std::string("error: ") + e.what();
      }
      if (r.computed != claim.expected) {
        r.status = ClaimStatus::mismatch;
      } else if (claim.source == ClaimSource::discrepancy) {
        r.status = claim.printed_value != r.computed ? ClaimStatus::registered_discrepancy : ClaimStatus::mismatch;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<std::string> discrepancy_notes(const Model& model, const Query& query) {
  std::vector<std::string> notes;
  const std::string q = query.describe();
  for (const auto& entry : corpus()) {
    const Model m = entry.model();
    if (!m.same_structure(model)) continue;
    for (const auto& claim : entry.claims) {
      if (claim.source == ClaimSource::discrepancy && claim.query.describe() == q) {
        notes.push_back("registered discrepancy (" + entry.name + "): printed " + claim.printed_value +
                        ", computed " + claim.expected + "; " + claim.note);
      }
    }
  }
  return notes;
}

}  // namespace idyn
