#include "sqtile/word_spec.hpp"

#include "sqtile/errors.hpp"
#include "sqtile/lemmas.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace sqtile {

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Automorphism parse() {
    skip_space();
    if (at_end()) fail("empty word spec");
    Automorphism out = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t after = pos_ + kw.size();
    std::size_t look = after;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    if (look >= text_.size() || text_[look] != '(') return false;
    pos_ = after;
    return true;
  }

  // Sequence of factors up to ')' or ',' or the end.
  Automorphism expr() {
    std::optional<Automorphism> acc;
    for (;;) {
      skip_space();
      if (at_end() || peek() == ')' || peek() == ',') break;
      Automorphism f = factor();
      acc = acc ? compose(*acc, f) : f;
    }
    if (!acc) fail("expected a factor");
    return *acc;
  }

  Automorphism factor() {
    Automorphism base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    const bool braced = consume('{');
    skip_space();
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    int n = 0;
    const char* first = text_.data() + pos_ + (peek() == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, n);
    if (ec != std::errc{} || ptr != text_.data() + end) fail("bad exponent");
    pos_ = end;
    if (braced) expect('}');
    return power(base, n);
  }

  Automorphism atom() {
    skip_space();
    if (keyword("gamma")) {
      expect('(');
      Automorphism v = expr();
      expect(',');
      Automorphism w = expr();
      expect(')');
      return gamma_generator(v, w).element;
    }
    if (keyword("inner") || keyword("Ad")) {
      expect('(');
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unclosed inner(");
      const std::string_view body = text_.substr(pos_, close - pos_);
      pos_ = close + 1;
      try {
        return inner(parse_word(body));
      } catch (const ParseError& e) {
        fail(std::string("bad loop in inner(): ") + e.what());
      } catch (const NotALoop& e) {
        fail(e.what());
      } catch (const NonComposable& e) {
        fail(e.what());
      }
    }
    if (consume('(')) {
      Automorphism inner_expr = expr();
      expect(')');
      return inner_expr;
    }
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      return Automorphism::identity();
    }
    const StandardTwists& t = standard_twists();
    switch (peek()) {
    case 'A': ++pos_; return t.A;
    case 'B': ++pos_; return t.B;
    case 'C': ++pos_; return t.C;
    case 'D': ++pos_; return t.D;
    case 'E': ++pos_; return t.E;
    default: break;
    }
    if (at_end()) fail("unexpected end");
    fail("unexpected '" + std::string(1, peek()) + "'");
  }
};

} // namespace

Automorphism parse_word_spec(std::string_view spec) {
  SpecParser p(spec);
  Automorphism out = p.parse();
  return out.renamed(std::string(spec));
}

} // namespace sqtile
