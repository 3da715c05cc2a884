#include "idyn/model_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace idyn {

namespace {

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; }

// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line, std::size_t offset)
      : text_(text), line_(line), pos_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& message, ErrorCode code = ErrorCode::Parse) const {
    throw ModelParseError(code, line_, column(), message);
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? std::string("unexpected character '") + text_[pos_] + "'" : "expected a point label");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Point point(const GroundSet& ground) {
    skip_space();
    const std::size_t col = column();
    const std::string name = label();
    if (auto p = ground.find(name)) return *p;
    throw ModelParseError(ErrorCode::UnknownPoint, line_, col, "unknown point '" + name + "'");
  }

  Subset braced(const GroundSet& ground) {
    expect('{');
    Subset s;
    for (;;) {
      skip_space();
      if (peek() == '}') {
        ++pos_;
        return s;
      }
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == '\0') fail("unterminated '{'");
      s = s.with(point(ground));
    }
  }

  bool keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && is_label_char(text_[after])) return false;
    pos_ = after;
    return true;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_;
};

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::size_t value_offset;
};

}  // namespace

Subset parse_subset(const GroundSet& ground, std::string_view text) {
  LineCursor cursor(text, 1, 0);
  const Subset s = cursor.braced(ground);
  if (!cursor.at_end()) cursor.fail("trailing text after set");
  return s;
}

SetFamily parse_family(const GroundSet& ground, std::string_view text) {
  LineCursor cursor(text, 1, 0);
  const bool bracketed = !cursor.at_end() && cursor.peek() == '[';
  if (bracketed) cursor.expect('[');
  std::vector<Subset> members;
  while (!cursor.at_end() && cursor.peek() != ']') {
    members.push_back(cursor.braced(ground));
    cursor.skip_space();
    if (cursor.peek() == ',') cursor.expect(',');
  }
  if (bracketed) cursor.expect(']');
  if (!cursor.at_end()) cursor.fail("trailing text after family");
  return SetFamily(std::move(members));
}

Model parse_model(std::string_view text) {
  std::optional<Line> name_line, points_line, ideal_line, map_line;
  std::vector<Line> opens_lines;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t colon = raw.find(':', first);
    if (colon == std::string::npos) throw ModelParseError(ErrorCode::Parse, number, first + 1, "expected 'key: value'");
    std::string key = raw.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    Line line{number, raw, colon + 1};

    auto once = [&](std::optional<Line>& slot) {
      if (slot) throw ModelParseError(ErrorCode::Parse, number, first + 1, "duplicate '" + key + ":' line");
      slot = line;
    };
    if (key == "name") once(name_line);
    else if (key == "points") once(points_line);
    else if (key == "opens") opens_lines.push_back(line);
    else if (key == "ideal") once(ideal_line);
    else if (key == "map") once(map_line);
    else throw ModelParseError(ErrorCode::Parse, number, first + 1, "unknown key '" + key + "'");
    if (end == text.size()) break;
  }

  if (!points_line) throw ModelParseError(ErrorCode::Parse, number, 1, "missing 'points:' line");

  std::vector<std::string> labels;
  {
    LineCursor c(points_line->text, points_line->number, points_line->value_offset);
    while (!c.at_end()) labels.push_back(c.label());
    if (labels.empty()) c.fail("no points listed");
    try {
      GroundSet probe(labels);
    } catch (const Error& e) {
      throw ModelParseError(e.code(), points_line->number, points_line->value_offset + 1, e.what());
    }
  }
  const GroundSet ground(labels);

  std::vector<Subset> opens{Subset{}, ground.full()};
  std::size_t opens_line_number = points_line->number;
  for (const auto& line : opens_lines) {
    LineCursor c(line.text, line.number, line.value_offset);
    while (!c.at_end()) opens.push_back(c.braced(ground));
    opens_line_number = line.number;
  }
  std::optional<Topology> topology;
  try {
    topology = validate_topology(SetFamily(std::move(opens)), ground);
  } catch (const Error& e) {
    throw ModelParseError(e.code(), opens_line_number, 1, std::string("opens do not form a topology: ") + e.what());
  }

  Ideal ideal = trivial_ideal(ground);
  if (ideal_line) {
    LineCursor c(ideal_line->text, ideal_line->number, ideal_line->value_offset);
    if (c.keyword("trivial")) {
      if (!c.at_end()) c.fail("trailing text after 'trivial'");
    } else if (c.keyword("power")) {
      const Subset m = c.braced(ground);
      if (!c.at_end()) c.fail("trailing text after 'power {M}'");
      ideal = power_ideal(ground, m);
    } else {
      std::vector<Subset> gens;
      while (!c.at_end()) gens.push_back(c.braced(ground));
      ideal = ideal_from_generators(SetFamily(std::move(gens)), ground);
    }
  }

  std::vector<Point> images(ground.size());
  if (map_line) {
    LineCursor c(map_line->text, map_line->number, map_line->value_offset);
    std::vector<bool> assigned(ground.size(), false);
    while (!c.at_end()) {
      const std::size_t col = c.column();
      const Point from = c.point(ground);
      c.expect('>');
      const Point to = c.point(ground);
      if (assigned[from]) {
        throw ModelParseError(ErrorCode::MapNotTotal, c.line(), col, "point '" + ground.label(from) + "' is mapped twice");
      }
      assigned[from] = true;
      images[from] = to;
    }
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (!assigned[i]) {
        throw ModelParseError(ErrorCode::MapNotTotal, map_line->number, map_line->value_offset + 1,
                              "map is not total: no image for '" + ground.label(static_cast<Point>(i)) + "'");
      }
    }
  } else {
    for (std::size_t i = 0; i < ground.size(); ++i) images[i] = static_cast<Point>(i);
  }

  std::string name;
  if (name_line) {
    name = name_line->text.substr(name_line->value_offset);
    const auto b = name.find_first_not_of(" \t");
    const auto e = name.find_last_not_of(" \t");
    name = b == std::string::npos ? std::string() : name.substr(b, e - b + 1);
  }
  return Model(*topology, ideal, SelfMap(ground, std::move(images)), std::move(name));
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Usage, "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string print_model(const Model& model) {
  const GroundSet& g = model.ground();
  std::string out;
  if (!model.name().empty()) out += "name: " + model.name() + "\n";
  out += "points:";
  for (const auto& label : g.labels()) out += " " + label;
  out += "\nopens:";
  for (auto o : model.topology().opens()) {
    if (o.empty() || o == g.full()) continue;
    out += " " + g.format(o);
  }
  out += "\nideal: ";
  out += model.ideal().trivial() ? std::string("trivial") : g.format(model.ideal().support());
  out += "\nmap:";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += " " + g.label(static_cast<Point>(i)) + ">" + g.label(model.map()(static_cast<Point>(i)));
  }
  out += "\n";
  return out;
}

}  // namespace idyn
