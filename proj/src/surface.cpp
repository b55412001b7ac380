#include "sqtile/surface.hpp"

#include "sqtile/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sqtile {

std::string GeneratorLabel::to_string() const {
  return (family == Family::a ? "a" : "b") + std::to_string(index);
}

GeneratorLabel a(int index) { return {Family::a, index}; }
GeneratorLabel b(int index) { return {Family::b, index}; }

GeneratorLabel parse_label(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b')) {
    throw ParseError("bad generator label '" + std::string(text) + "'");
  }
  int index = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last || index < 1) {
    throw ParseError("bad generator label '" + std::string(text) + "'");
  }
  return {text[0] == 'a' ? Family::a : Family::b, index};
}

namespace {

enum Corner { BL = 0, BR = 1, TL = 2, TR = 3 };
enum class Side { bottom, right, top, left };

struct Occurrence {
  std::size_t square;
  Side side;
};

std::pair<int, int> side_endpoints(std::size_t square, Side side) {
  const int base = static_cast<int>(square) * 4;
  switch (side) {
  case Side::bottom: return {base + BL, base + BR};
  case Side::top: return {base + TL, base + TR};
  case Side::left: return {base + BL, base + TL};
  case Side::right: return {base + BR, base + TR};
  }
  return {0, 0};
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int x, int y) { parent_[find(x)] = find(y); }

private:
  std::vector<int> parent_;
};

struct Incidence {
  std::vector<GeneratorLabel> labels;
  std::vector<VertexId> source;
  std::vector<VertexId> target;
  TopologyReport report;
};

Incidence compute_incidence(std::span<const Square> squares) {
  if (squares.empty()) throw MalformedComplex("no squares");

  std::map<GeneratorLabel, std::vector<Occurrence>> uses;
  for (std::size_t s = 0; s < squares.size(); ++s) {
    uses[squares[s].bottom].push_back({s, Side::bottom});
    uses[squares[s].right].push_back({s, Side::right});
    uses[squares[s].top].push_back({s, Side::top});
    uses[squares[s].left].push_back({s, Side::left});
  }

  UnionFind corners(squares.size() * 4);
  Incidence inc;
  std::vector<std::pair<int, int>> ends;
  for (auto& [label, occ] : uses) {
    if (occ.size() != 2) {
      throw MalformedComplex("label " + label.to_string() + " used " + std::to_string(occ.size()) +
                             " times, expected 2");
    }
    // Bottom is glued to top, right to left.
    std::sort(occ.begin(), occ.end(), [](const Occurrence& x, const Occurrence& y) { return x.side < y.side; });
    const bool horizontal = occ[0].side == Side::bottom && occ[1].side == Side::top;
    const bool vertical = occ[0].side == Side::right && occ[1].side == Side::left;
    if (!horizontal && !vertical) {
      throw MalformedComplex("label " + label.to_string() + " is not a bottom/top or right/left pair");
    }
    const auto e0 = side_endpoints(occ[0].square, occ[0].side);
    const auto e1 = side_endpoints(occ[1].square, occ[1].side);
    corners.unite(e0.first, e1.first);
    corners.unite(e0.second, e1.second);
    inc.labels.push_back(label);
    ends.push_back(e0);
  }

  // Vertices are numbered by first appearance along the sorted labels.
  std::map<int, VertexId> ids;
  auto vertex_of = [&](int corner) {
    const int root = corners.find(corner);
    auto [it, inserted] = ids.try_emplace(root, static_cast<VertexId>(ids.size()));
    return it->second;
  };
  for (const auto& [s, t] : ends) {
    inc.source.push_back(vertex_of(s));
    inc.target.push_back(vertex_of(t));
  }
  for (std::size_t c = 0; c < squares.size() * 4; ++c) vertex_of(static_cast<int>(c));

  auto& r = inc.report;
  r.vertices = static_cast<int>(ids.size());
  r.edges = static_cast<int>(inc.labels.size());
  r.faces = static_cast<int>(squares.size());
  r.euler = r.vertices - r.edges + r.faces;
  r.genus = (2 - r.euler) / 2;
  return inc;
}

} // namespace

TopologyReport validate_topology(std::span<const Square> squares) { return compute_incidence(squares).report; }

TypedWord TypedWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return TypedWord(std::move(inv), target_, source_);
}

TypedWord TypedWord::operator*(const TypedWord& rhs) const {
  if (target_ != rhs.source_) {
    throw NonComposable(to_string() + " ends at " + SquareComplex::vertex_name(target_) + " but " +
                        rhs.to_string() + " starts at " + SquareComplex::vertex_name(rhs.source_));
  }
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return TypedWord(std::move(out), source_, rhs.target_);
}

std::string TypedWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += '.';
    out += letters_[k].label.to_string();
    if (letters_[k].exponent < 0) out += "^-1";
  }
  return out;
}

TypedWord free_reduce(const TypedWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().label == l.label && stack.back().exponent == -l.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return TypedWord(std::move(stack), w.source(), w.target());
}

SquareComplex::SquareComplex(std::vector<Square> squares) : squares_(std::move(squares)) {
  Incidence inc = compute_incidence(squares_);
  labels_ = std::move(inc.labels);
  source_ = std::move(inc.source);
  target_ = std::move(inc.target);
  topology_ = inc.report;
}

std::size_t SquareComplex::slot(const GeneratorLabel& g) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), g);
  if (it == labels_.end() || *it != g) {
    throw std::invalid_argument("label " + g.to_string() + " is not an edge of this complex");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool SquareComplex::has_label(const GeneratorLabel& g) const {
  return std::binary_search(labels_.begin(), labels_.end(), g);
}

VertexId SquareComplex::source(const GeneratorLabel& g) const { return source_[slot(g)]; }
VertexId SquareComplex::target(const GeneratorLabel& g) const { return target_[slot(g)]; }

std::string SquareComplex::vertex_name(VertexId v) {
  if (v == 0) return "u";
  if (v == 1) return "v";
  return "p" + std::to_string(v);
}

TypedWord SquareComplex::word(const std::vector<Letter>& letters) const {
  if (letters.empty()) throw std::invalid_argument("SquareComplex::word: empty letter list has no vertex");
  VertexId start = 0;
  VertexId at = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter& l = letters[k];
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    const VertexId s = l.exponent > 0 ? source(l.label) : target(l.label);
    const VertexId t = l.exponent > 0 ? target(l.label) : source(l.label);
    if (k == 0) {
      start = s;
    } else if (s != at) {
      throw NonComposable("letter " + std::to_string(k) + " (" + l.label.to_string() + ") starts at " +
                          vertex_name(s) + " but the path is at " + vertex_name(at));
    }
    at = t;
  }
  return TypedWord(letters, start, at);
}

TypedWord SquareComplex::letter(const GeneratorLabel& g, int exponent) const { return word({{g, exponent}}); }

TypedWord SquareComplex::parse(std::string_view text, std::optional<VertexId> empty_at) const {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] == '1' && (pos + 1 == text.size() || text[pos + 1] == ' ' || text[pos + 1] == '.')) {
      ++pos; // explicit identity
      skip();
      continue;
    }
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    const GeneratorLabel label = parse_label(text.substr(pos, end - pos));
    if (!has_label(label)) throw ParseError("unknown edge " + label.to_string());
    pos = end;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const bool braced = pos < text.size() && text[pos] == '{';
      if (braced) ++pos;
      std::size_t num_end = pos;
      if (num_end < text.size() && (text[num_end] == '-' || text[num_end] == '+')) ++num_end;
      while (num_end < text.size() && std::isdigit(static_cast<unsigned char>(text[num_end]))) ++num_end;
      const char* first = text.data() + pos + (text[pos] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, text.data() + num_end, power);
      if (ec != std::errc{} || ptr != text.data() + num_end) {
        throw ParseError("bad exponent in '" + std::string(text) + "'");
      }
      pos = num_end;
      if (braced) {
        if (pos >= text.size() || text[pos] != '}') throw ParseError("unclosed '{' in '" + std::string(text) + "'");
        ++pos;
      }
    }
    for (int k = 0; k < std::abs(power); ++k) letters.push_back({label, power < 0 ? -1 : 1});
    skip();
  }
  if (letters.empty()) {
    if (!empty_at) throw ParseError("empty word needs a base vertex");
    return TypedWord(*empty_at);
  }
  return word(letters);
}

std::vector<TypedWord> SquareComplex::relation_words() const {
  std::vector<TypedWord> out;
  for (const Square& sq : squares_) {
    out.push_back(word({{sq.bottom, 1}, {sq.right, 1}, {sq.top, -1}, {sq.left, -1}}));
  }
  return out;
}

std::string SquareComplex::to_table() const {
  std::ostringstream os;
  for (const Square& sq : squares_) {
    os << sq.bottom.to_string() << ' ' << sq.right.to_string() << ' ' << sq.top.to_string() << ' '
       << sq.left.to_string() << '\n';
  }
  return os.str();
}

SquareComplex SquareComplex::from_table(std::string_view text) {
  std::vector<Square> squares;
  std::istringstream is{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 4 labels, got " + std::to_string(fields.size()));
    }
    squares.push_back({parse_label(fields[0]), parse_label(fields[1]), parse_label(fields[2]), parse_label(fields[3])});
  }
  return SquareComplex(std::move(squares));
}

SquareComplex build_s_prime() {
  return SquareComplex({
      {a(1), b(2), a(1), b(1)},
      {a(2), b(1), a(3), b(2)},
      {a(3), b(3), a(2), b(4)},
      {a(4), b(4), a(4), b(3)},
  });
}

const SquareComplex& s_prime() {
  static const SquareComplex instance = build_s_prime();
  return instance;
}

TypedWord parse_word(std::string_view text, std::optional<VertexId> empty_at) {
  return s_prime().parse(text, empty_at);
}

} // namespace sqtile
