#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "fbranch/errors.hpp"
#include "fbranch/graph.hpp"

namespace fbranch {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(ParseErrorKind::Malformed, line, "not an integer: '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::Malformed, 1, "missing header 'n m'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(ParseErrorKind::Malformed, head.number, "header must be 'n m'");
  long long n = to_int(head.tokens[0], head.number), m = to_int(head.tokens[1], head.number);
  if (n < 0 || m < 0) throw ParseError(ParseErrorKind::Malformed, head.number, "negative count in header");
  if (lines.size() - 1 != std::size_t(m))
    throw ParseError(ParseErrorKind::Malformed, lines.back().number,
                     "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  edges.reserve(std::size_t(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(ParseErrorKind::Malformed, l.number, "edge line must be 'u v'");
    long long u = to_int(l.tokens[0], l.number), v = to_int(l.tokens[1], l.number);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseErrorKind::OutOfRange, l.number, "vertex index out of range");
    if (u == v) throw ParseError(ParseErrorKind::Loop, l.number, "loop edge");
    edges.emplace_back(Vertex(u), Vertex(v));
  }
  return Graph(std::size_t(n), edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

}  // namespace fbranch
