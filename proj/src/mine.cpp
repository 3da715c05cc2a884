#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

#include "idyn/enumerate.hpp"
#include "idyn/falsify.hpp"

namespace idyn {
namespace {

struct Token {
  enum Kind { word, conj, neg } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '(' || c == ')') {
      ++i;
    } else if (c == '&' || c == ',') {
      out.push_back({Token::conj, {}});
      ++i;
    } else if (starts("∧")) {
      out.push_back({Token::conj, {}});
      i += std::string_view("∧").size();
    } else if (c == '!' || c == '~') {
      out.push_back({Token::neg, {}});
      ++i;
    } else if (starts("¬")) {
      out.push_back({Token::neg, {}});
      i += std::string_view("¬").size();
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                                 text[j] == '-' || text[j] == ':')) {
        ++j;
      }
      std::string w(text.substr(i, j - i));
      std::replace(w.begin(), w.end(), '-', '_');
      if (w == "and") {
        out.push_back({Token::conj, {}});
      } else if (w == "not") {
        out.push_back({Token::neg, {}});
      } else {
        out.push_back({Token::word, std::move(w)});
      }
      i = j;
    } else {
      throw Error(ErrorCode::Usage, "unexpected character in predicate at offset " + std::to_string(i));
    }
  }
  return out;
}

const std::vector<std::string>& base_flags() {
  static const std::vector<std::string> flags{
      "transitive",       "i_transitive",       "semi_transitive",   "pre_transitive",    "b_transitive",
      "beta_transitive",  "semi_i_transitive",  "pre_i_transitive",  "b_i_transitive",    "beta_i_transitive",
      "codense",          "hayashi_samuel",     "completely_codense", "compatible",       "dense_eq_idense",
      "omega_gap",        "omega_full",         "omega_i_full",      "continuous",        "open_map",
      "proper",           "trivial_ideal",      "dense_orbit",       "i_dense_orbit",     "star_dense_orbit",
      "hausdorff"};
  return flags;
}

/// Splits `k_transitive:semi` style flags; the plain names map onto the
/// same form.
std::optional<TransitivityKind> transitivity_flag(const std::string& flag) {
  for (const char* prefix : {"k_i_transitive:", "k_transitive:"}) {
    const std::string p(prefix);
    if (flag.rfind(p, 0) == 0) {
      auto kind = parse_open_kind(flag.substr(p.size()));
      if (!kind) return std::nullopt;
      return TransitivityKind{*kind, p == "k_i_transitive:"};
    }
  }
  if (flag.size() < 10 || flag.compare(flag.size() - 10, 10, "transitive") != 0) return std::nullopt;
  std::string name = flag;
  std::replace(name.begin(), name.end(), '_', '-');
  return TransitivityKind::parse(name);
}

bool known_flag(const std::string& flag) {
  if (std::find(base_flags().begin(), base_flags().end(), flag) != base_flags().end()) return true;
  return (flag.rfind("k_transitive:", 0) == 0 || flag.rfind("k_i_transitive:", 0) == 0) &&
         transitivity_flag(flag).has_value();
}

bool every_dense_is_i_dense(InstanceFacts& f) {
  const auto count = Subset::Bits{1} << f.ground().size();
  for (Subset::Bits a = 0; a < count; ++a) {
    if (f.dense(Subset(a)) && !f.i_dense(Subset(a))) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> predicate_flags() {
  auto out = base_flags();
  out.push_back("k_transitive:<kind>");
  out.push_back("k_i_transitive:<kind>");
  return out;
}

std::vector<Literal> parse_predicate(std::string_view text) {
  std::vector<Literal> out;
  bool negated = false;
  bool expect_word = true;
  for (const auto& tok : tokenize(text)) {
    if (tok.kind == Token::neg) {
      if (!expect_word) throw Error(ErrorCode::Usage, "negation must start a conjunct");
      negated = !negated;
    } else if (tok.kind == Token::conj) {
      if (expect_word) throw Error(ErrorCode::Usage, "empty conjunct in predicate");
      expect_word = true;
    } else {
      if (!expect_word) throw Error(ErrorCode::Usage, "missing '&' before '" + tok.text + "'");
      if (!known_flag(tok.text)) throw Error(ErrorCode::UnknownFlag, "unknown flag '" + tok.text + "'");
      out.push_back({tok.text, negated});
      negated = false;
      expect_word = false;
    }
  }
  if (expect_word) throw Error(ErrorCode::Usage, out.empty() ? "empty predicate" : "predicate ends with '&'");
  return out;
}

bool evaluate_flag(const Literal& literal, InstanceFacts& f) {
  const std::string& flag = literal.flag;
  bool value = false;
  if (auto kind = transitivity_flag(flag)) {
    value = f.transitive(*kind).holds;
  } else if (flag == "codense" || flag == "hayashi_samuel") {
    value = f.codense();
  } else if (flag == "completely_codense") {
    value = f.completely_codense();
  } else if (flag == "compatible") {
    value = f.compatible();
  } else if (flag == "dense_eq_idense") {
    value = every_dense_is_i_dense(f);
  } else if (flag == "omega_gap") {
    value = f.nonwandering({OpenKind::open, true}) != f.nonwandering({OpenKind::open, false});
  } else if (flag == "omega_full") {
    value = f.nonwandering({OpenKind::open, false}) == f.full();
  } else if (flag == "omega_i_full") {
    value = f.nonwandering({OpenKind::open, true}) == f.full();
  } else if (flag == "continuous") {
    value = f.continuous();
  } else if (flag == "open_map") {
    value = f.open_map();
  } else if (flag == "proper") {
    value = f.ideal().proper();
  } else if (flag == "trivial_ideal") {
    value = f.ideal().trivial();
  } else if (flag == "dense_orbit") {
    value = f.has_orbit(DensityGrade::dense);
  } else if (flag == "i_dense_orbit") {
    value = f.has_orbit(DensityGrade::i_dense);
  } else if (flag == "star_dense_orbit") {
    value = f.has_orbit(DensityGrade::star_dense);
  } else if (flag == "hausdorff") {
    value = f.top().hausdorff();
  } else {
    throw Error(ErrorCode::UnknownFlag, "unknown flag '" + flag + "'");
  }
  return value != literal.negated;
}

std::vector<MinedModel> mine(const ModelSpace& space, const std::vector<Literal>& predicate,
                             std::optional<std::size_t> limit, unsigned workers) {
  for (const auto& lit : predicate) {
    if (!known_flag(lit.flag)) throw Error(ErrorCode::UnknownFlag, "unknown flag '" + lit.flag + "'");
  }
  if (space.min_size < 1 || space.max_size > kMaxEnumerationSize || space.min_size > space.max_size) {
    throw Error(ErrorCode::SizeTooLarge, "model space sizes must satisfy 1 <= min <= max <= 5");
  }
  struct Item {
    std::size_t size, topology;
  };
  std::vector<std::vector<Topology>> tops(space.max_size + 1);
  std::vector<std::vector<Ideal>> ideals(space.max_size + 1);
  std::vector<Item> items;
  for (std::size_t n = space.min_size; n <= space.max_size; ++n) {
    tops[n] = enumerate_topologies(n);
    ideals[n] = enumerate_ideals(n, space.proper_ideals_only);
    for (std::size_t t = 0; t < tops[n].size(); ++t) items.push_back({n, t});
  }

  std::vector<std::vector<MinedModel>> found(items.size());
  // Once `limit` hits are known below some item, later items can stop.
  std::atomic<std::size_t> cutoff{items.size()};
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      if (i > cutoff.load()) continue;
      const auto& item = items[i];
      TopologyFacts top(tops[item.size][item.topology]);
      const auto maps = enumerate_selfmaps(item.size, &top.topology(), space.continuous_only);
      bool full = false;
      for (std::size_t mi = 0; mi < maps.size() && !full; ++mi) {
        MapFacts plain(top, maps[mi]);
        for (std::size_t ii = 0; ii < ideals[item.size].size() && !full; ++ii) {
          InstanceFacts facts(plain, ideals[item.size][ii]);
          const bool hit = std::all_of(predicate.begin(), predicate.end(),
                                       [&](const Literal& lit) { return evaluate_flag(lit, facts); });
          if (hit) {
            found[i].push_back({{item.size, item.topology, mi, ii},
                                Model(top.topology(), ideals[item.size][ii], maps[mi])});
            full = limit && found[i].size() >= *limit;
          }
        }
      }
      if (limit && found[i].size() >= *limit) {
        std::size_t c = cutoff.load();
        while (i < c && !cutoff.compare_exchange_weak(c, i)) {
        }
      }
    }
  };
  const unsigned n = workers != 0 ? workers : std::max(1U, std::thread::hardware_concurrency());
  if (n <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }

  std::vector<MinedModel> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (auto& m : found[i]) {
      if (limit && out.size() >= *limit) return out;
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace idyn
