#include "balidx/text_format.hpp"

#include "balidx/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace balidx {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i)
      tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_unsigned(std::string_view token, unsigned &out)
{
  if (token.empty())
    return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Signed integer with an optional leading '+'.
bool parse_integer(std::string_view token, Integer &out)
{
  if (!token.empty() && token.front() == '+')
    token.remove_prefix(1);
  if (token.empty())
    return false;
  std::size_t start = token.front() == '-' ? 1 : 0;
  if (start == token.size())
    return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      return false;
  return out.set_str(std::string(token), 10) == 0;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

[[noreturn]] void fail(const Line &line, const std::string &message)
{
  throw ParseError("line " + std::to_string(line.number) + ": " + message);
}

std::string format_signed(const Integer &c) { return (c > 0 ? "+" : "") + c.get_str(); }

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t n)
{
  std::vector<std::vector<unsigned>> cycles;
  std::string_view rest = trim(text);
  if (rest.empty())
    throw ParseError("empty cycle notation");
  while (!rest.empty()) {
    if (rest.front() != '(')
      throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
    std::size_t close = rest.find(')');
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    std::string_view body = rest.substr(1, close - 1);
    rest = trim(rest.substr(close + 1));

    std::vector<std::string_view> tokens = split_ws(body);
    std::vector<unsigned> cycle;
    if (tokens.size() == 1 && n <= 9 && tokens[0].size() > 1) {
      for (char ch : tokens[0]) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("bad cycle point in '" + std::string(text) + "'");
        cycle.push_back(static_cast<unsigned>(ch - '0'));
      }
    } else {
      for (auto token : tokens) {
        unsigned x = 0;
        if (!parse_unsigned(token, x))
          throw ParseError("bad cycle point '" + std::string(token) + "'");
        cycle.push_back(x);
      }
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
  }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const DomainError &e) {
    throw ParseError(e.what());
  }
}

std::string format_cycles(const Permutation &p)
{
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::string out;
  for (const auto &cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

GroupRingElement make_element(std::size_t n,
                              std::initializer_list<std::pair<long, std::string_view>> terms)
{
  GroupRingElement alpha(n);
  for (const auto &[c, cycles] : terms)
    alpha.add_term(parse_cycles(cycles, n), c);
  return alpha;
}

std::string_view kind_name(DocumentKind kind)
{
  switch (kind) {
  case DocumentKind::poly:
    return "poly";
  case DocumentKind::graph:
    return "graph";
  case DocumentKind::hypergraph:
    return "hypergraph";
  case DocumentKind::matrix:
    return "matrix";
  case DocumentKind::groupring:
    return "groupring";
  }
  return "unknown";
}

InputDocument parse_document(std::string_view text)
{
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty())
      lines.push_back({number, raw});
  }
  if (lines.empty())
    throw ParseError("missing header line");

  const Line &header = lines.front();
  auto head = split_ws(header.text);
  unsigned n = 0;
  if (head.size() != 2 || !parse_unsigned(head[1], n) || n == 0)
    fail(header, "header must be '<kind> <n>' with n >= 1");

  InputDocument doc;
  doc.n = n;
  std::span<const Line> body(lines.data() + 1, lines.size() - 1);

  if (head[0] == "poly") {
    Polynomial f(n);
    std::set<Monomial, GrlexLess> seen;
    for (const Line &line : body) {
      auto colon = line.text.find(':');
      if (colon == std::string_view::npos)
        fail(line, "polynomial term must be '<coeff> : <e1> ... <en>'");
      Integer c;
      if (!parse_integer(trim(line.text.substr(0, colon)), c))
        fail(line, "non-integer coefficient");
      auto tokens = split_ws(line.text.substr(colon + 1));
      if (tokens.size() != n)
        fail(line, "expected " + std::to_string(n) + " exponents, got " +
                       std::to_string(tokens.size()));
      std::vector<unsigned> e(n);
      for (std::size_t i = 0; i < n; ++i)
        if (!parse_unsigned(tokens[i], e[i]))
          fail(line, "bad exponent '" + std::string(tokens[i]) + "'");
      Monomial m(std::move(e));
      if (!seen.insert(m).second)
        fail(line, "duplicate monomial");
      f.add_term(m, c);
    }
    doc.payload = std::move(f);
  } else if (head[0] == "graph") {
    Graph g;
    for (const Line &line : body) {
      auto tokens = split_ws(line.text);
      unsigned u = 0, v = 0;
      if (tokens.size() != 2 || !parse_unsigned(tokens[0], u) || !parse_unsigned(tokens[1], v))
        fail(line, "edge must be two vertices");
      if (u < 1 || v < 1 || u > n || v > n)
        fail(line, "vertex outside 1.." + std::to_string(n));
      if (u == v)
        fail(line, "loop at vertex " + std::to_string(u));
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
      throw ParseError("duplicate edge");
    doc.payload = std::move(g);
  } else if (head[0] == "hypergraph") {
    Hypergraph h;
    for (const Line &line : body) {
      std::vector<unsigned> edge;
      for (auto token : split_ws(line.text)) {
        unsigned v = 0;
        if (!parse_unsigned(token, v))
          fail(line, "bad vertex '" + std::string(token) + "'");
        if (v < 1 || v > n)
          fail(line, "vertex outside 1.." + std::to_string(n));
        edge.push_back(v);
      }
      std::sort(edge.begin(), edge.end());
      if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
        fail(line, "repeated vertex in edge");
      h.edges.push_back(std::move(edge));
    }
    std::sort(h.edges.begin(), h.edges.end());
    if (std::adjacent_find(h.edges.begin(), h.edges.end()) != h.edges.end())
      throw ParseError("duplicate hyperedge");
    doc.payload = std::move(h);
  } else if (head[0] == "matrix") {
    if (body.size() != n)
      throw ParseError("matrix " + std::to_string(n) + " needs " + std::to_string(n) +
                       " rows, got " + std::to_string(body.size()));
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto tokens = split_ws(body[i].text);
      if (tokens.size() != n)
        fail(body[i], "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        if (!parse_integer(tokens[j], a(i, j)))
          fail(body[i], "non-integer entry '" + std::string(tokens[j]) + "'");
    }
    doc.payload = std::move(a);
  } else if (head[0] == "groupring") {
    GroupRingElement alpha(n);
    std::set<Permutation> seen;
    for (const Line &line : body) {
      auto paren = line.text.find('(');
      if (paren == std::string_view::npos)
        fail(line, "term must be '<signed integer> <cycles>'");
      Integer c;
      if (!parse_integer(trim(line.text.substr(0, paren)), c))
        fail(line, "non-integer coefficient");
      Permutation p;
      try {
        p = parse_cycles(line.text.substr(paren), n);
      } catch (const ParseError &e) {
        fail(line, e.what());
      }
      if (!seen.insert(p).second)
        fail(line, "duplicate permutation " + format_cycles(p));
      alpha.add_term(p, c);
    }
    doc.payload = std::move(alpha);
  } else {
    fail(header, "unknown document kind '" + std::string(head[0]) + "'");
  }
  return doc;
}

InputDocument read_document(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize(const InputDocument &doc)
{
  std::ostringstream out;
  out << kind_name(doc.kind()) << ' ' << doc.n << '\n';
  switch (doc.kind()) {
  case DocumentKind::poly:
    for (const auto &[m, c] : std::get<Polynomial>(doc.payload).terms()) {
      out << c.get_str() << " :";
      for (unsigned e : m.exponents())
        out << ' ' << e;
      out << '\n';
    }
    break;
  case DocumentKind::graph:
    for (auto [u, v] : std::get<Graph>(doc.payload).edges)
      out << u << ' ' << v << '\n';
    break;
  case DocumentKind::hypergraph:
    for (const auto &edge : std::get<Hypergraph>(doc.payload).edges) {
      for (std::size_t i = 0; i < edge.size(); ++i)
        out << (i ? " " : "") << edge[i];
      out << '\n';
    }
    break;
  case DocumentKind::matrix: {
    const auto &a = std::get<IntegerMatrix>(doc.payload);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j)
        out << (j ? " " : "") << a(i, j).get_str();
      out << '\n';
    }
    break;
  }
  case DocumentKind::groupring:
    for (const auto &[p, c] : std::get<GroupRingElement>(doc.payload).terms())
      out << format_signed(c) << ' ' << format_cycles(p) << '\n';
    break;
  }
  return out.str();
}

InputDocument make_document(const Polynomial &f) { return {f.nvars(), f}; }
InputDocument make_document(const GroupRingElement &alpha) { return {alpha.degree(), alpha}; }

Polynomial to_polynomial(const InputDocument &doc)
{
  switch (doc.kind()) {
  case DocumentKind::poly:
    return std::get<Polynomial>(doc.payload);
  case DocumentKind::graph:
    return from_graph(doc.n, std::get<Graph>(doc.payload).edges);
  case DocumentKind::hypergraph:
    return from_hypergraph(doc.n, std::get<Hypergraph>(doc.payload).edges);
  case DocumentKind::matrix:
    return from_matrix(std::get<IntegerMatrix>(doc.payload));
  case DocumentKind::groupring:
    break;
  }
  throw DomainError("a groupring document does not describe a polynomial");
}

} // namespace balidx
