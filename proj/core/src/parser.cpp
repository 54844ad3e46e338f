#include "operad/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace opd {

ParseError::ParseError(int line_, int col_, std::string token_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                         ": " + message +
                         (token_.empty() ? std::string() : " (near '" + token_ + "')")),
      line(line_),
      col(col_),
      token(std::move(token_)) {}

namespace {

enum class Tok {
  ident,
  number,
  lparen,
  rparen,
  comma,
  plus,
  minus,
  star,
  slash,
  arrow,
  equals,
  colon,
  newline,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    const size_t n = text.size();
    auto push = [&](Tok k, std::string s, int c) { toks_.push_back({k, std::move(s), line, c}); };
    while (i < n) {
      const char c = text[i];
      if (c == '#') {
        while (i < n && text[i] != '\n') ++i;
        continue;
      }
      if (c == '\n') {
        push(Tok::newline, "\\n", col);
        ++i;
        ++line;
        col = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        ++col;
        continue;
      }
      const int start_col = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                         text[j] == '.'))
          ++j;
        push(Tok::ident, text.substr(i, j - i), start_col);
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        push(Tok::number, text.substr(i, j - i), start_col);
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      if (c == '-' && i + 1 < n && text[i + 1] == '>') {
        push(Tok::arrow, "->", start_col);
        i += 2;
        col += 2;
        continue;
      }
      Tok k;
      switch (c) {
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case ',': k = Tok::comma; break;
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '=': k = Tok::equals; break;
        case ':': k = Tok::colon; break;
        default:
          throw ParseError(line, col, std::string(1, c), "unexpected character");
      }
      push(k, std::string(1, c), start_col);
      ++i;
      ++col;
    }
    toks_.push_back({Tok::end, "", line, col});
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  size_t pos() const { return pos_; }
  void seek(size_t p) { pos_ = p; }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, t.text, msg);
}

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Presentation parse_file() {
    for (;;) {
      while (lex_.at(Tok::newline)) lex_.next();
      if (lex_.at(Tok::end)) break;
      statement();
    }
    if (!field_seen_) throw ParseError(1, 1, "", "missing 'field' declaration");
    try {
      validate_presentation(p_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, 0, "", e.what());
    }
    return std::move(p_);
  }

  OperadElement parse_single_element(const Presentation& context) {
    p_ = context;
    field_seen_ = true;
    OperadElement e = expression();
    while (lex_.at(Tok::newline)) lex_.next();
    if (!lex_.at(Tok::end)) fail(lex_.peek(), "trailing input after expression");
    return e;
  }

private:
  Token expect(Tok k, const std::string& what) {
    if (!lex_.at(k)) fail(lex_.peek(), "expected " + what);
    return lex_.next();
  }

  void end_statement() {
    if (!lex_.at(Tok::newline) && !lex_.at(Tok::end))
      fail(lex_.peek(), "unexpected trailing input on statement");
  }

  void statement() {
    Token head = expect(Tok::ident, "a statement keyword");
    if (head.text == "operad") {
      if (!p_.name.empty()) fail(head, "duplicate 'operad' line");
      p_.name = expect(Tok::ident, "an operad name").text;
    } else if (head.text == "field") {
      if (field_seen_) fail(head, "duplicate 'field' line");
      Token f = expect(Tok::ident, "a field tag 'Q' or 'Fp'");
      if (f.text == "Q") {
        p_.field = Field::rationals();
      } else if (f.text == "Fp") {
        expect(Tok::colon, "':' after 'Fp'");
        Token num = expect(Tok::number, "a prime characteristic");
        try {
          p_.field = Field::prime_field(static_cast<std::uint32_t>(std::stoul(num.text)));
        } catch (const std::exception&) {
          fail(num, "characteristic must be a prime below 2^31");
        }
      } else {
        fail(f, "unknown field tag");
      }
      field_seen_ = true;
    } else if (head.text == "planar") {
      p_.planar = true;
    } else if (head.text == "gen") {
      gen_statement();
    } else if (head.text == "rel") {
      require_field(head);
      Token at = lex_.peek();
      OperadElement e = expression();
      if (e.is_zero()) fail(at, "relation is identically zero");
      if (e.arity() < 2) fail(at, "relations must have arity at least 2");
      try {
        e.homogeneous_degree(p_.gens);
      } catch (const std::logic_error&) {
        fail(at, "relation is not degree-homogeneous");
      }
      check_planar_terms(e, at);
      p_.relations.push_back(std::move(e));
    } else if (head.text == "diff") {
      require_field(head);
      Token name = expect(Tok::ident, "a generator name");
      const int gid = p_.gens.index_of(name.text);
      if (gid < 0) fail(name, "unknown generator");
      if (p_.differential.count(gid)) fail(name, "duplicate differential for generator");
      expect(Tok::arrow, "'->'");
      Token at = lex_.peek();
      const GeneratorSymbol& g = p_.gens[gid];
      OperadElement e(p_.field, g.arity);
      bool literal_zero = false;
      if (lex_.at(Tok::number) && lex_.peek().text == "0") {
        const size_t mark = lex_.pos();
        lex_.next();
        if (lex_.at(Tok::newline) || lex_.at(Tok::end)) {
          literal_zero = true;  // an explicitly closed generator
        } else {
          lex_.seek(mark);
        }
      }
      if (!literal_zero) {
        e = expression();
        if (e.arity() != g.arity) fail(at, "differential image arity does not match generator");
        try {
          if (!e.is_zero() && e.homogeneous_degree(p_.gens) != g.degree - 1)
            fail(at, "differential image must have degree one less than the generator");
        } catch (const std::logic_error&) {
          fail(at, "differential image is not degree-homogeneous");
        }
        check_planar_terms(e, at);
      }
      p_.differential.emplace(gid, std::move(e));
      p_.has_differential = true;
    } else {
      fail(head, "unknown statement keyword");
    }
    end_statement();
  }

  void require_field(const Token& at) {
    if (!field_seen_) fail(at, "the 'field' line must come before relations and differentials");
  }

  void gen_statement() {
    Token name = expect(Tok::ident, "a generator name");
    GeneratorSymbol g;
    g.name = name.text;
    bool have_arity = false;
    while (lex_.at(Tok::ident)) {
      Token key = lex_.next();
      expect(Tok::equals, "'=' after attribute name");
      if (key.text == "arity") {
        g.arity = static_cast<int>(std::stol(expect(Tok::number, "an arity").text));
        have_arity = true;
      } else if (key.text == "degree") {
        int sign = 1;
        if (lex_.at(Tok::minus)) {
          lex_.next();
          sign = -1;
        }
        g.degree = sign * static_cast<int>(std::stol(expect(Tok::number, "a degree").text));
      } else if (key.text == "symmetry") {
        Token v = expect(Tok::ident, "a symmetry type");
        auto s = symmetry_from_name(v.text);
        if (!s) fail(v, "unknown symmetry type");
        g.symmetry = *s;
      } else {
        fail(key, "unknown generator attribute");
      }
    }
    if (!have_arity) fail(name, "generator is missing the arity attribute");
    try {
      p_.gens.add(g);
    } catch (const std::invalid_argument& e) {
      fail(name, e.what());
    }
  }

  OperadElement expression() {
    Token at = lex_.peek();
    std::vector<std::pair<Scalar, Tree>> terms;
    bool negate = false;
    if (lex_.at(Tok::minus)) {
      lex_.next();
      negate = true;
    }
    terms.push_back(term(negate));
    while (lex_.at(Tok::plus) || lex_.at(Tok::minus)) {
      const bool minus = lex_.next().kind == Tok::minus;
      terms.push_back(term(minus));
    }
    const int arity = tree_arity(terms.front().second);
    for (const auto& [c, t] : terms) {
      if (tree_arity(t) != arity) fail(at, "terms of one expression must share an arity");
    }
    OperadElement e(p_.field, arity);
    for (const auto& [c, t] : terms) {
      try {
        e.add_term(p_.gens, t, c);
      } catch (const std::invalid_argument& err) {
        fail(at, err.what());
      }
    }
    return e;
  }

  std::pair<Scalar, Tree> term(bool negate) {
    Scalar c = Scalar::one(p_.field);
    if (lex_.at(Tok::number)) {
      Token num = lex_.next();
      std::string text = num.text;
      if (lex_.at(Tok::slash)) {
        lex_.next();
        text += "/" + expect(Tok::number, "a denominator").text;
      }
      try {
        c = Scalar::parse(p_.field, text);
      } catch (const std::exception& e) {
        fail(num, e.what());
      }
      expect(Tok::star, "'*' between a coefficient and its tree");
    }
    if (negate) c = -c;
    return {c, tree()};
  }

  Tree tree() {
    Token name = expect(Tok::ident, "a generator name");
    const int gid = p_.gens.index_of(name.text);
    if (gid < 0) fail(name, "unknown generator");
    const int k = p_.gens[gid].arity;
    std::vector<Tree> kids;
    if (lex_.at(Tok::lparen)) {
      lex_.next();
      kids.push_back(child());
      while (lex_.at(Tok::comma)) {
        lex_.next();
        kids.push_back(child());
      }
      Token close = expect(Tok::rparen, "')'");
      if (static_cast<int>(kids.size()) != k)
        fail(close, "generator '" + name.text + "' takes " + std::to_string(k) + " inputs");
    } else {
      // bare name: the corolla with identity-ordered leaves
      for (int i = 1; i <= k; ++i) kids.push_back(Tree::leaf_node(i));
    }
    return Tree::node(gid, std::move(kids));
  }

  Tree child() {
    if (lex_.at(Tok::number)) {
      Token num = lex_.next();
      const long v = std::stol(num.text);
      if (v < 1) fail(num, "leaf labels are positive");
      return Tree::leaf_node(static_cast<int>(v));
    }
    return tree();
  }

  void check_planar_terms(const OperadElement& e, const Token& at) {
    if (!p_.planar) return;
    for (const auto& [code, term] : e.terms()) {
      if (!planar_leaf_order(term.tree))
        fail(at, "planar expressions must keep leaves in left-to-right order");
    }
  }

  static bool planar_leaf_order(const Tree& t) {
    int expected = 1;
    return planar_scan(t, expected);
  }
  static bool planar_scan(const Tree& t, int& expected) {
    if (t.is_leaf()) return t.leaf == expected++;
    for (const Tree& k : t.kids)
      if (!planar_scan(k, expected)) return false;
    return true;
  }

  Lexer lex_;
  Presentation p_;
  bool field_seen_ = false;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Parser p(text);
  return p.parse_file();
}

OperadElement parse_element(const std::string& text, const Presentation& context) {
  Parser p(text);
  return p.parse_single_element(context);
}

}  // namespace opd
