#include "fideal/io.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace fideal {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, int column, const std::string& message) {
  fail(ErrorCode::parse_error, std::to_string(line) + ":" + std::to_string(column) + ": " + message);
}

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_blank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    if (peek() != c) error(std::string("expected ") + what);
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  int integer(const char* what) {
    skip_blank();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      error(std::string("expected ") + what);
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) error("integer too large");
      advance();
    }
    return static_cast<int>(value);
  }

  [[noreturn]] void error(const std::string& message) const { parse_fail(line_, column_, message); }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::vector<int> parse_monomial(TextCursor& cur, int n) {
  std::vector<int> vars;
  if (cur.peek() == '1') {
    const int line = cur.line(), column = cur.column();
    if (cur.integer("monomial") != 1) parse_fail(line, column, "expected x<i> or 1");
    return vars;
  }
  do {
    const int line = cur.line(), column = cur.column();
    if (!cur.accept('x')) cur.error("expected variable x<i>");
    const int i = cur.integer("variable index");
    if (i < 1 || i > n) {
      parse_fail(line, column, "variable x" + std::to_string(i) + " outside x1..x" + std::to_string(n));
    }
    for (int v : vars) {
      if (v == i) parse_fail(line, column, "x" + std::to_string(i) + " repeated; monomials are square-free");
    }
    vars.push_back(i);
  } while (cur.accept('*'));
  return vars;
}

int line_of_offset(std::string_view text, std::size_t offset, int& column) {
  int line = 1;
  column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line;
}

}  // namespace

IdealDocument parse_text_document(std::string_view text) {
  TextCursor cur(text);
  IdealDocument doc;
  if (cur.peek() != 'n') cur.error("missing header n=<int>;");
  cur.accept('n');
  cur.expect('=', "'=' after n");
  doc.n = cur.integer("variable count");
  if (doc.n > kMaxVariables) cur.error("n exceeds " + std::to_string(kMaxVariables));
  cur.expect(';', "';' after n=<int>");
  if (cur.at_end()) return doc;
  do {
    doc.generators.push_back(parse_monomial(cur, doc.n));
  } while (cur.accept(','));
  if (!cur.at_end()) cur.error("unexpected trailing input");
  return doc;
}

IdealDocument parse_record_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int column = 1;
    const int line = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0, column);
    parse_fail(line, column, "malformed record");
  }
  if (!j.is_object()) parse_fail(1, 1, "record must be an object");
  if (!j.contains("n")) parse_fail(1, 1, "record is missing field \"n\"");
  if (!j.contains("generators")) parse_fail(1, 1, "record is missing field \"generators\"");
  IdealDocument doc;
  try {
    doc.n = j.at("n").get<int>();
    doc.generators = j.at("generators").get<std::vector<std::vector<int>>>();
    if (j.contains("label")) doc.label = j.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(1, 1, std::string("bad record field: ") + e.what());
  }
  if (doc.n < 0 || doc.n > kMaxVariables) {
    parse_fail(1, 1, "n must lie in [0, " + std::to_string(kMaxVariables) + "]");
  }
  for (const auto& g : doc.generators) {
    for (int i : g) {
      if (i < 1 || i > doc.n) {
        parse_fail(1, 1, "variable x" + std::to_string(i) + " outside x1..x" + std::to_string(doc.n));
      }
    }
  }
  return doc;
}

IdealDocument parse_document(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_record_document(text) : parse_text_document(text);
  }
  parse_fail(1, 1, "empty input");
}

ParsedIdeal to_ideal(const IdealDocument& doc, bool allow_unit) {
  ParsedIdeal out{MonomialIdeal::from_index_lists(doc.n, doc.generators, {.allow_unit = allow_unit}),
                  doc.label, false};
  out.reduced = out.ideal.input_was_reduced();
  return out;
}

ParsedIdeal parse_ideal(std::string_view text, bool allow_unit) {
  return to_ideal(parse_document(text), allow_unit);
}

std::string render_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i : m.indices()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
  }
  return out;
}

std::string render_text(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.ambient()) + ";";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    out += first ? " " : ", ";
    out += render_monomial(g);
    first = false;
  }
  return out;
}

std::string render_record(const MonomialIdeal& ideal, const std::optional<std::string>& label) {
  ordered_json j;
  j["n"] = ideal.ambient();
  j["generators"] = ordered_json::array();
  for (const auto& g : ideal.generators()) j["generators"].push_back(g.indices());
  if (label) j["label"] = *label;
  return j.dump();
}

void write_census(std::ostream& out, const CensusRecord& record, Format format) {
  if (format == Format::table) {
    out << "# n=" << record.n << " d=" << (record.degree ? std::to_string(*record.degree) : "mixed");
    if (record.gap) out << " gap=" << *record.gap;
    out << " count=" << record.count << " budget_exhausted=" << (record.budget_exhausted ? "true" : "false");
    if (record.sampled) out << " sampled=true";
    out << '\n';
    for (const auto& w : record.witnesses) out << render_text(w) << '\n';
    return;
  }
  ordered_json summary;
  summary["kind"] = "summary";
  summary["n"] = record.n;
  if (record.degree) summary["d"] = *record.degree;
  else summary["d"] = "mixed";
  if (record.gap) summary["gap"] = *record.gap;
  summary["count"] = record.count;
  summary["budget_exhausted"] = record.budget_exhausted;
  summary["sampled"] = record.sampled;
  summary["candidates"] = record.candidates;
  if (record.orbits) summary["orbits"] = *record.orbits;
  summary["witnesses"] = record.witnesses.size();
  out << summary.dump() << '\n';
  for (const auto& w : record.witnesses) out << render_record(w) << '\n';
}

CensusFile read_census(std::string_view text) {
  CensusFile file;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (have_header) continue;
      std::istringstream fields(line.substr(first + 1));
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const auto key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "n") file.n = std::stoi(value);
        else if (key == "d" && value != "mixed") file.degree = std::stoi(value);
        else if (key == "count") file.count = std::stoull(value);
        else if (key == "budget_exhausted") file.budget_exhausted = value == "true";
      }
      have_header = true;
      continue;
    }
    if (line[first] == '{') {
      const auto j = ordered_json::parse(line, nullptr, false);
      if (!j.is_discarded() && j.contains("kind") && j["kind"] == "summary") {
        file.n = j.value("n", 0);
        if (j["d"].is_number_integer()) file.degree = j["d"].get<int>();
        file.count = j.value("count", std::uint64_t{0});
        file.budget_exhausted = j.value("budget_exhausted", false);
        have_header = true;
        continue;
      }
    }
    try {
      file.ideals.push_back(parse_ideal(line).ideal);
    } catch (const Error& e) {
      fail(ErrorCode::parse_error, "census line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) fail(ErrorCode::parse_error, "census file has no summary header");
  return file;
}

}  // namespace fideal
