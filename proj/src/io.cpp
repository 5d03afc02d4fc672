#include "gbp/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "gbp/error.hpp"

namespace gbp {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    syntax_error(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PosetDocument parse_document(std::string_view text) {
  PosetDocument doc;
  std::optional<std::size_t> n;
  std::vector<Pair> pairs;
  std::vector<std::string> labels;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      doc.comments.emplace_back(body);
      continue;
    }
    const auto tokens = split_ws(line);
    const std::string_view directive = tokens.front();
    if (!n) {
      if (directive != "poset" || tokens.size() != 2) {
        syntax_error(line_no, "expected 'poset <n>' before any other directive");
      }
      n = parse_index(tokens[1], line_no);
      if (*n > kMaxElements) {
        throw Error(ErrorCode::SizeError, "line " + std::to_string(line_no) +
                                              ": at most " + std::to_string(kMaxElements) +
                                              " elements are supported");
      }
      continue;
    }
    if (directive == "cover") {
      if (tokens.size() != 3) syntax_error(line_no, "expected 'cover <i> <j>'");
      const std::size_t i = parse_index(tokens[1], line_no);
      const std::size_t j = parse_index(tokens[2], line_no);
      if (i >= *n || j >= *n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "line " + std::to_string(line_no) + ": index out of range for poset " +
                        std::to_string(*n));
      }
      if (i == j) {
        throw Error(ErrorCode::CycleDetected,
                    "line " + std::to_string(line_no) + ": element below itself");
      }
      pairs.emplace_back(i, j);
    } else if (directive == "label") {
      if (tokens.size() != 3) syntax_error(line_no, "expected 'label <i> <name>'");
      const std::size_t i = parse_index(tokens[1], line_no);
      if (i >= *n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "line " + std::to_string(line_no) + ": index out of range for poset " +
                        std::to_string(*n));
      }
      labels.resize(*n);
      if (!labels[i].empty()) syntax_error(line_no, "element labelled twice");
      labels[i] = std::string(tokens[2]);
    } else if (directive == "poset") {
      syntax_error(line_no, "duplicate 'poset' header");
    } else {
      syntax_error(line_no, "unknown directive '" + std::string(directive) + "'");
    }
  }
  if (!n) syntax_error(line_no, "missing 'poset <n>' header");
  doc.poset = Poset::from_pairs(*n, pairs, std::move(labels));
  return doc;
}

Poset parse_poset(std::string_view text) { return parse_document(text).poset; }

std::string format_document(const PosetDocument& doc) {
  std::ostringstream out;
  for (const std::string& c : doc.comments) {
    out << '#';
    if (!c.empty()) out << ' ' << c;
    out << '\n';
  }
  const Poset& p = doc.poset;
  out << "poset " << p.size() << '\n';
  for (const auto& [x, y] : p.cover_pairs()) out << "cover " << x << ' ' << y << '\n';
  if (p.has_labels()) {
    for (ElementId x = 0; x < p.size(); ++x) {
      if (!p.labels()[x].empty()) out << "label " << x << ' ' << p.labels()[x] << '\n';
    }
  }
  return out.str();
}

std::string format_poset(const Poset& p) { return format_document({p, {}}); }

PosetDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::SyntaxError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace gbp
