#include "gkm/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  CharClassExpr parse() {
    std::vector<std::pair<Integer, ClassMonomial>> terms;
    skip();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      advance();
    }
    terms.push_back(term(sign));
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      advance();
      terms.push_back(term(op == '-' ? -1 : 1));
    }
    return CharClassExpr(n_, terms);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    ++pos_;
    skip();
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += text_[pos_++];
    skip();
    return s;
  }

  std::pair<Integer, ClassMonomial> term(int sign) {
    if (at_end()) fail("expected a term");
    Integer coeff = sign;
    ClassMonomial mono;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= Integer(digits());
      if (at_end() || peek() != '*') return {coeff, mono};
      advance();
    }
    factor(mono);
    while (!at_end() && peek() == '*') {
      advance();
      factor(mono);
    }
    return {coeff, mono};
  }

  void factor(ClassMonomial& mono) {
    if (at_end()) fail("expected a symbol");
    const std::size_t start = pos_;
    ClassSymbol sym;
    if (text_.substr(pos_, 2) == "eu") {
      pos_ += 2;
      skip();
      sym = ClassSymbol::euler();
    } else if (peek() == 'c' || peek() == 'p') {
      const char kind = peek();
      ++pos_;
      const std::string idx = digits();
      if (idx.empty()) {
        pos_ = start;
        fail(std::string("expected an index after '") + kind + "'");
      }
      const unsigned long i = std::stoul(idx.size() > 3 ? "1000" : idx);
      const unsigned long limit = kind == 'c' ? 9 : 4;
      if (i < 1 || i > limit) {
        pos_ = start;
        fail("unknown symbol '" + std::string(1, kind) + idx + "'");
      }
      const bool ok = kind == 'c' ? i <= n_ : 2 * i <= n_;
      if (!ok) {
        pos_ = start;
        fail("symbol '" + std::string(1, kind) + idx + "' is out of range for valence " + std::to_string(n_));
      }
      sym = kind == 'c' ? ClassSymbol::chern(static_cast<unsigned>(i))
                        : ClassSymbol::pontryagin(static_cast<unsigned>(i));
    } else {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    unsigned power = 1;
    if (!at_end() && peek() == '^') {
      advance();
      const std::size_t exp_pos = pos_;
      const std::string e = digits();
      if (e.empty()) fail("expected an exponent");
      if (e.size() > 4) {
        pos_ = exp_pos;
        fail("exponent too large");
      }
      power = static_cast<unsigned>(std::stoul(e));
    }
    mono[sym] += power;
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

// Splits a line into whitespace-separated words, keeping a parenthesized
// label together and recording 1-based columns.
struct Word {
  std::string text;
  std::size_t column;
};

std::vector<Word> split(std::string_view line, std::size_t line_no) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    Word w{"", i + 1};
    if (line[i] == '(') {
      const std::size_t close = line.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unterminated label", line_no, i + 1);
      for (std::size_t k = i; k <= close; ++k)
        if (!std::isspace(static_cast<unsigned char>(line[k]))) w.text += line[k];
      i = close + 1;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '(')
        w.text += line[i++];
    }
    out.push_back(std::move(w));
  }
  return out;
}

Weight parse_weight(const Word& w, std::size_t line_no) {
  const std::string& s = w.text;
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw ParseError("expected a label like (1,0,-1)", line_no, w.column);
  std::vector<Integer> entries;
  std::istringstream parts(s.substr(1, s.size() - 2));
  std::string part;
  while (std::getline(parts, part, ',')) {
    std::size_t k = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (part.size() <= k || !std::all_of(part.begin() + k, part.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed label entry '" + part + "'", line_no, w.column);
    entries.emplace_back(part[0] == '+' ? part.substr(1) : part);
  }
  if (s[s.size() - 2] == ',') throw ParseError("malformed label entry ''", line_no, w.column);
  return Weight(std::move(entries));
}

std::size_t parse_count(const Word& w, std::size_t line_no, const char* what) {
  if (w.text.empty() || w.text.size() > 6 ||
      !std::all_of(w.text.begin(), w.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("expected a ") + what, line_no, w.column);
  return std::stoul(w.text);
}

}  // namespace

CharClassExpr parse_expr(std::string_view text, std::size_t valence) {
  return ExprParser(text, valence).parse();
}

ParsedGraph parse_graph(std::string_view text) {
  struct PendingEdge {
    std::size_t u, v;
    Weight label;
    bool is_signed;
    std::size_t line, column;
  };
  std::optional<std::size_t> rank, valence;
  std::vector<std::string> names;
  std::vector<PendingEdge> edges;
  std::optional<bool> signed_mode;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto lookup = [&](const Word& w) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == w.text) return i;
    throw ParseError("unknown vertex '" + w.text + "'", line_no, w.column);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Word> words = split(line, line_no);
    if (words.empty()) continue;
    const std::string& kw = words[0].text;
    if (kw == "rank" || kw == "valence") {
      if (words.size() != 2) throw ParseError("expected '" + kw + " N'", line_no, words[0].column);
      const std::size_t x = parse_count(words[1], line_no, "number");
      if (kw == "rank") {
        if (rank) throw ParseError("rank given twice", line_no, words[0].column);
        if (x == 0) throw ParseError("rank must be at least 1", line_no, words[1].column);
        rank = x;
      } else {
        if (valence) throw ParseError("valence given twice", line_no, words[0].column);
        valence = x;
      }
    } else if (kw == "vertex") {
      if (words.size() != 2) throw ParseError("expected 'vertex NAME'", line_no, words[0].column);
      for (const std::string& n : names)
        if (n == words[1].text)
          throw ParseError("duplicate vertex name '" + n + "'", line_no, words[1].column);
      names.push_back(words[1].text);
    } else if (kw == "edge" || kw == "signed") {
      const bool is_signed = kw == "signed";
      const std::size_t first = is_signed ? 2 : 1;
      if (is_signed && (words.size() < 2 || words[1].text != "edge"))
        throw ParseError("expected 'signed edge'", line_no, words[0].column);
      if (words.size() != first + 3)
        throw ParseError("expected '" + std::string(is_signed ? "signed " : "") + "edge NAME1 NAME2 (a,b,...)'",
                         line_no, words[0].column);
      if (!rank) throw ParseError("edge before the rank header", line_no, words[0].column);
      if (signed_mode && *signed_mode != is_signed)
        throw ParseError("mixed signed and unsigned edges", line_no, words[0].column);
      signed_mode = is_signed;
      PendingEdge e{lookup(words[first]), lookup(words[first + 1]), parse_weight(words[first + 2], line_no),
                    is_signed, line_no, words[first + 2].column};
      if (e.label.size() != *rank)
        throw ParseError("label " + e.label.to_string() + " has arity " + std::to_string(e.label.size()) +
                             ", rank is " + std::to_string(*rank),
                         line_no, e.column);
      edges.push_back(std::move(e));
    } else {
      throw ParseError("unknown statement '" + kw + "'", line_no, words[0].column);
    }
  }
  if (!rank) throw ParseError("missing rank header", line_no + 1, 1);
  if (names.empty()) throw ParseError("empty graph", line_no + 1, 1);
  if (!valence) {
    std::size_t d = 0;
    for (const PendingEdge& e : edges) d += (e.u == 0) + (e.v == 0);
    valence = d;
  }
  ParsedGraph out{GKMGraph(*rank, *valence), std::nullopt};
  for (const std::string& n : names) out.graph.add_vertex(n);
  std::vector<Weight> oriented;
  for (const PendingEdge& e : edges) {
    out.graph.add_edge(e.u, e.v, e.label);
    oriented.push_back(e.label);
  }
  if (signed_mode.value_or(false)) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].label.is_zero()) throw ParseError("signed edge with zero label", edges[i].line, edges[i].column);
    out.signs = SignedStructure::from_weights(out.graph, oriented);
  }
  return out;
}

std::string serialize_graph(const GKMGraph& g, const std::optional<SignedStructure>& signs) {
  std::string out = "rank " + std::to_string(g.rank()) + "\nvalence " + std::to_string(g.valence()) + "\n";
  for (const std::string& n : g.vertex_names()) out += "vertex " + n + "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out += signs ? "signed edge " : "edge ";
    out += g.vertex_name(ed.u) + " " + g.vertex_name(ed.v) + " ";
    out += (signs ? signs->oriented(e) : ed.label).to_string() + "\n";
  }
  return out;
}

std::vector<int> parse_orientation(std::string_view text, const GKMGraph& g) {
  std::vector<int> o(g.vertex_count(), 0);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Word> words = split(line, line_no);
    if (words.empty()) continue;
    if (words.size() != 2) throw ParseError("expected 'NAME +1' or 'NAME -1'", line_no, words[0].column);
    const auto v = g.find_vertex(words[0].text);
    if (!v) throw ParseError("unknown vertex '" + words[0].text + "'", line_no, words[0].column);
    const std::string& s = words[1].text;
    if (s == "+1" || s == "1" || s == "+") {
      o[*v] = 1;
    } else if (s == "-1" || s == "-") {
      o[*v] = -1;
    } else {
      throw ParseError("orientation must be +1 or -1", line_no, words[1].column);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (o[v] == 0) throw InputError("no orientation given for vertex '" + g.vertex_name(v) + "'");
  return o;
}

}  // namespace gkm
