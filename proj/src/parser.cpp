#include "pfcrn/parser.hpp"

#include "pfcrn/error.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace pfcrn {

std::string ParseDiagnostic::format(std::string_view origin) const {
  std::ostringstream os;
  os << origin << ':' << line << ':' << column << ": "
     << (severity == Severity::error ? "error" : "warning") << ": " << message;
  return os.str();
}

namespace {

enum class Tok { ident, integer, plus, arrow, biarrow, lbrack, rbrack, comma, sep, eof, bad };

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    if (c == '\n' || c == ';') return single(Tok::sep);
    if (c == '+') return single(Tok::plus);
    if (c == '[') return single(Tok::lbrack);
    if (c == ']') return single(Tok::rbrack);
    if (c == ',') return single(Tok::comma);
    if (c == '-' && peek(1) == '>') {
      t.kind = Tok::arrow;
      t.text = "->";
      advance(2);
      return t;
    }
    if (c == '<' && peek(1) == '-' && peek(2) == '>') {
      t.kind = Tok::biarrow;
      t.text = "<->";
      advance(3);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::integer;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    t.kind = Tok::bad;
    // Take the whole code point so the message shows the character.
    do {
      t.text += text_[pos_];
      advance();
    } while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80);
    return t;
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      char c = text_[pos_++];
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct SyntaxError {
  Token at;
  std::string message;
};

using Terms = std::vector<std::pair<std::string, std::int32_t>>;

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

  ParseResult run() {
    ReactionNetwork net;
    bool failed = false;
    while (true) {
      while (cur_.kind == Tok::sep) shift();
      if (cur_.kind == Tok::eof) break;
      try {
        statement(net);
      } catch (const SyntaxError& e) {
        error(e.at, e.message);
        failed = true;
        while (cur_.kind != Tok::sep && cur_.kind != Tok::eof) shift();
      }
    }
    failed = failed || has_errors_;
    ParseResult result;
    if (!failed) result.network = std::move(net);
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  std::string describe(const Token& t) const {
    switch (t.kind) {
      case Tok::eof: return "end of input";
      case Tok::sep: return t.text == ";" ? "';'" : "end of line";
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError{cur_, "expected " + expected + ", found " + describe(cur_)};
  }

  void error(const Token& at, std::string message) {
    diags_.push_back({at.line, at.column, std::move(message), ParseDiagnostic::Severity::error});
    has_errors_ = true;
  }

  void warning(const Token& at, std::string message) {
    diags_.push_back({at.line, at.column, std::move(message), ParseDiagnostic::Severity::warning});
  }

  Terms complex() {
    Terms terms;
    if (cur_.kind == Tok::integer && cur_.text == "0") {
      Token zero = cur_;
      shift();
      if (cur_.kind != Tok::ident) return terms;  // the empty complex
      throw SyntaxError{zero, "stoichiometric coefficient must be positive"};
    }
    while (true) {
      std::int32_t coeff = 1;
      if (cur_.kind == Tok::integer) {
        Token num = cur_;
        auto value = std::stoll(num.text.size() > 12 ? std::string("9999999999999") : num.text);
        if (value <= 0) throw SyntaxError{num, "stoichiometric coefficient must be positive"};
        if (value > std::numeric_limits<std::int16_t>::max())
          throw SyntaxError{num, "stoichiometric coefficient is too large"};
        coeff = static_cast<std::int32_t>(value);
        shift();
      }
      if (cur_.kind != Tok::ident) fail("species name");
      Token name = cur_;
      shift();
      bool merged = false;
      for (auto& [s, c] : terms)
        if (s == name.text) {
          c += coeff;
          merged = true;
        }
      if (merged)
        warning(name, "species '" + name.text + "' repeated in complex; coefficients added");
      else
        terms.emplace_back(name.text, coeff);
      if (cur_.kind != Tok::plus) break;
      shift();
    }
    return terms;
  }

  void statement(ReactionNetwork& net) {
    Token start = cur_;
    Terms lhs = complex();
    if (cur_.kind != Tok::arrow && cur_.kind != Tok::biarrow) fail("'->' or '<->'");
    Token arrow = cur_;
    bool reversible = cur_.kind == Tok::biarrow;
    shift();
    Terms rhs = complex();
    if (cur_.kind != Tok::lbrack) fail("'[' with rate symbol");
    shift();
    std::vector<Token> rates;
    if (cur_.kind != Tok::ident) fail("rate symbol");
    rates.push_back(cur_);
    shift();
    if (cur_.kind == Tok::comma) {
      shift();
      if (cur_.kind != Tok::ident) fail("rate symbol");
      rates.push_back(cur_);
      shift();
    }
    if (cur_.kind != Tok::rbrack) fail("']'");
    shift();
    if (cur_.kind != Tok::sep && cur_.kind != Tok::eof) fail("';' or end of line");

    if (!reversible && rates.size() != 1)
      throw SyntaxError{rates[1], "'->' takes exactly one rate symbol"};
    if (reversible && rates.size() != 2)
      throw SyntaxError{arrow, "'<->' takes two rate symbols (forward, backward)"};

    add(net, lhs, rhs, rates[0], arrow, start);
    if (reversible) add(net, rhs, lhs, rates[1], arrow, start);
  }

  void add(ReactionNetwork& net, const Terms& from, const Terms& to, const Token& rate,
           const Token& arrow, const Token& start) {
    try {
      net.add_reaction(from, to, rate.text, rate.line);
    } catch (const InvalidArgument& e) {
      std::string msg = e.what();
      const Token& at = msg.rfind("rate symbol", 0) == 0 ? rate
                        : msg == "reactant equals product" ? arrow
                                                           : start;
      throw SyntaxError{at, msg};
    }
  }

  Lexer lex_;
  Token cur_;
  std::vector<ParseDiagnostic> diags_;
  bool has_errors_ = false;
};

std::string render_complex(const ReactionNetwork& net, const Complex& c) {
  std::string out;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (!c.coeffs[i]) continue;
    if (!out.empty()) out += " + ";
    if (c.coeffs[i] != 1) out += std::to_string(c.coeffs[i]) + " ";
    out += net.species()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ParseResult parse_network(const NetworkSource& src) { return Parser(src.text).run(); }

std::string render_network(const ReactionNetwork& net) {
  std::string out;
  for (const auto& r : net.reactions()) {
    if (!out.empty()) out += '\n';
    out += render_complex(net, net.reactant(r)) + " -> " + render_complex(net, net.product(r)) +
           " [" + net.rate_symbols()[r.rate] + "]";
  }
  return out;
}

bool structurally_identical(const ReactionNetwork& a, const ReactionNetwork& b) {
  if (a.species() != b.species() || a.reaction_count() != b.reaction_count()) return false;
  for (std::size_t i = 0; i < a.reaction_count(); ++i) {
    const auto& ra = a.reactions()[i];
    const auto& rb = b.reactions()[i];
    if (a.reactant(ra) != b.reactant(rb) || a.product(ra) != b.product(rb) ||
        a.rate_symbols()[ra.rate] != b.rate_symbols()[rb.rate])
      return false;
  }
  return true;
}

}  // namespace pfcrn
