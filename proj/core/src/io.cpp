#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "pgcomp/errors.hpp"
#include "pgcomp/io.hpp"

namespace pgcomp {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      step();
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void error(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::int64_t read_int(const char* what) {
    skip_space();
    const int at_line = line_, at_col = column_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      step();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, at_line, at_col);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > (std::int64_t{1} << 40))
        throw ParseError(std::string(what) + " out of range", at_line, at_col);
      step();
    }
    return negative ? -value : value;
  }

  /// Word made of letters, for the optional `parity` header keyword.
  std::string read_word() {
    skip_space();
    std::string word;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      word.push_back(peek());
      step();
    }
    return word;
  }

  void expect(char c, const char* what) {
    skip_space();
    if (peek() != c) error(std::string("expected ") + what);
    step();
  }

  std::string read_quoted() {
    skip_space();
    expect('"', "opening quote");
    std::string out;
    while (peek() != '"') {
      if (peek() == '\0' || peek() == '\n') error("unterminated name");
      out.push_back(peek());
      step();
    }
    step();
    return out;
  }

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct RawVertex {
  std::int64_t id;
  int priority;
  Player owner;
  std::vector<std::pair<std::int64_t, std::pair<int, int>>> succs;  // id, pos
  std::string name;
  int line, column;
};

}  // namespace

ParsedGame parse_pgsolver(std::string_view text, bool strict) {
  Cursor cur(text);
  if (cur.at_end()) return {};

  if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
    const int at_line = cur.line(), at_col = cur.column();
    const std::string word = cur.read_word();
    if (word != "parity")
      throw ParseError("unknown keyword '" + word + "'", at_line, at_col);
    cur.read_int("header max id");  // a hint only, not validated
    cur.expect(';', "';' after header");
  }

  std::vector<RawVertex> rows;
  std::map<std::int64_t, size_t> by_id;
  while (!cur.at_end()) {
    RawVertex row;
    row.line = cur.line();
    row.column = cur.column();
    row.id = cur.read_int("vertex id");
    if (row.id < 0) cur.error("negative vertex id");

    const int pri_line = cur.line(), pri_col = cur.column();
    const std::int64_t pri = cur.read_int("priority");
    if (pri < 0) throw ParseError("negative priority", pri_line, pri_col);
    row.priority = static_cast<int>(pri);

    const int owner_line = cur.line(), owner_col = cur.column();
    const std::int64_t owner = cur.read_int("owner");
    if (owner != 0 && owner != 1)
      throw ParseError("owner must be 0 or 1", owner_line, owner_col);
    row.owner = owner == 0 ? Player::Even : Player::Odd;

    cur.skip_space();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      while (true) {
        const int s_line = cur.line(), s_col = cur.column();
        row.succs.push_back({cur.read_int("successor id"), {s_line, s_col}});
        cur.skip_space();
        if (cur.peek() != ',') break;
        cur.expect(',', "','");
      }
    } else if (strict) {
      cur.error("dead end (empty successor list) rejected in strict mode");
    }

    cur.skip_space();
    if (cur.peek() == '"') row.name = cur.read_quoted();
    cur.expect(';', "';' at end of statement");

    if (by_id.count(row.id))
      throw ParseError("duplicate vertex id " + std::to_string(row.id),
                       row.line, row.column);
    by_id[row.id] = rows.size();
    rows.push_back(std::move(row));
  }

  ParsedGame out;
  std::map<std::int64_t, int> compact;
  for (const auto& [id, idx] : by_id) {
    compact[id] = static_cast<int>(out.external_ids.size());
    out.external_ids.push_back(id);
  }

  ArenaBuilder b(static_cast<int>(rows.size()));
  for (const auto& [id, idx] : by_id) {
    const RawVertex& row = rows[idx];
    b.add_vertex(row.owner, row.priority, row.name);
  }
  for (const auto& [id, idx] : by_id) {
    const RawVertex& row = rows[idx];
    for (const auto& [succ, pos] : row.succs) {
      auto it = compact.find(succ);
      if (it == compact.end())
        throw ParseError("successor references unknown vertex id " +
                             std::to_string(succ),
                         pos.first, pos.second);
      b.add_arc(compact[id], it->second);
    }
  }
  out.arena = b.build();
  return out;
}

std::string write_pgsolver(const Arena& arena) {
  if (arena.size() == 0) return {};
  std::ostringstream out;
  out << "parity " << arena.size() - 1 << ";\n";
  for (int v = 0; v < arena.size(); ++v) {
    out << v << ' ' << arena.priority(v) << ' '
        << (arena.owner(v) == Player::Even ? 0 : 1) << ' ';
    const auto succs = arena.successors(v);
    for (size_t i = 0; i < succs.size(); ++i) {
      if (i > 0) out << ',';
      out << succs[i];
    }
    if (!arena.name(v).empty()) {
      if (!succs.empty()) out << ' ';
      out << '"' << arena.name(v) << '"';
    }
    out << ";\n";
  }
  return out.str();
}

SolutionFile parse_solution(std::string_view text) {
  SolutionFile out;
  std::map<std::int64_t, bool> seen;
  int line_no = 0;
  size_t begin = 0;
  while (begin <= text.size()) {
    const size_t end = std::min(text.find('\n', begin), text.size());
    const std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;

    std::istringstream in{std::string(line)};
    std::int64_t vertex = 0, winner = 0;
    if (!(in >> vertex)) {
      std::string rest;
      if (in.clear(), std::getline(in, rest) && rest.find_first_not_of(" \t\r") != std::string::npos)
        throw ParseError("malformed solution line", line_no, 1);
      if (end >= text.size()) break;
      continue;  // blank line
    }
    if (!(in >> winner)) throw ParseError("missing winner", line_no, 1);
    if (winner != 0 && winner != 1)
      throw ParseError("winner must be 0 or 1", line_no, 1);
    SolutionEntry entry;
    entry.vertex = vertex;
    entry.winner = winner == 0 ? Player::Even : Player::Odd;
    std::int64_t succ = 0;
    if (in >> succ) entry.strategy = succ;
    std::string rest;
    if (in >> rest) throw ParseError("trailing tokens", line_no, 1);
    if (seen[vertex]) throw ParseError("duplicate vertex id", line_no, 1);
    seen[vertex] = true;
    out.entries.push_back(entry);
    if (end >= text.size()) break;
  }
  return out;
}

std::string write_solution(const SolutionFile& solution) {
  std::ostringstream out;
  for (const auto& e : solution.entries) {
    out << e.vertex << ' ' << (e.winner == Player::Even ? 0 : 1);
    if (e.strategy) out << ' ' << *e.strategy;
    out << '\n';
  }
  return out.str();
}

SolutionFile solution_from_regions(const Regions& regions, const Arena& arena,
                                   const std::vector<std::int64_t>* external_ids) {
  SolutionFile out;
  auto map_id = [&](int v) {
    return external_ids ? (*external_ids)[static_cast<size_t>(v)]
                        : static_cast<std::int64_t>(v);
  };
  for (int v = 0; v < regions.universe(); ++v) {
    if (!regions.covered(v)) continue;
    SolutionEntry entry;
    entry.vertex = map_id(v);
    entry.winner = regions.winner(v);
    if (regions.has_strategy(v) && arena.owner(v) == regions.winner(v))
      entry.strategy = map_id(regions.strategy(v));
    out.entries.push_back(entry);
  }
  return out;
}

}  // namespace pgcomp
