#include <cctype>

#include "mdl/formula.hpp"

namespace mdl {

namespace {

enum class Tok {
  Top, Bot, Dep, Ident, Tilde, LParen, RParen, Comma, Semi,
  Amp, Bar, BarBar, Box, Diamond, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Dep: return "'dep'";
    case Tok::Ident: return "proposition";
    case Tok::Tilde: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::BarBar: return "'||'";
    case Tok::Box: return "'[]'";
    case Tok::Diamond: return "'<>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { tokenize(); }

  Formula parse_all() {
    Formula f = parse_cor();
    if (peek().kind != Tok::End) fail(ParseError::Kind::Syntax, peek(), "unexpected " + std::string(describe(peek().kind)));
    return f;
  }

 private:
  [[noreturn]] void fail(ParseError::Kind kind, std::size_t offset, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(kind, offset, line, col,
                     msg + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  [[noreturn]] void fail(ParseError::Kind kind, const Token& at, const std::string& msg) const {
    fail(kind, at.offset, msg);
  }

  void tokenize() {
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t len) {
      tokens_.push_back({k, std::string(text_.substr(i, len)), i});
      i += len;
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c >= 'a' && c <= 'z') {
        std::size_t j = i + 1;
        while (j < text_.size() && (std::islower(static_cast<unsigned char>(text_[j])) ||
                                    std::isdigit(static_cast<unsigned char>(text_[j])) ||
                                    text_[j] == '_'))
          ++j;
        std::string_view word = text_.substr(i, j - i);
        Tok k = word == "top" ? Tok::Top : word == "bot" ? Tok::Bot : word == "dep" ? Tok::Dep : Tok::Ident;
        push(k, j - i);
        continue;
      }
      switch (c) {
        case '~': push(Tok::Tilde, 1); continue;
        case '(': push(Tok::LParen, 1); continue;
        case ')': push(Tok::RParen, 1); continue;
        case ',': push(Tok::Comma, 1); continue;
        case ';': push(Tok::Semi, 1); continue;
        case '&': push(Tok::Amp, 1); continue;
        case '|':
          if (i + 1 < text_.size() && text_[i + 1] == '|') {
            push(Tok::BarBar, 2);
          } else {
            push(Tok::Bar, 1);
          }
          continue;
        case '[':
          if (i + 1 < text_.size() && text_[i + 1] == ']') {
            push(Tok::Box, 2);
            continue;
          }
          break;
        case '<':
          if (i + 1 < text_.size() && text_[i + 1] == '>') {
            push(Tok::Diamond, 2);
            continue;
          }
          break;
        default:
          break;
      }
      fail(ParseError::Kind::Syntax, i, std::string("unexpected character '") + c + "'");
    }
    tokens_.push_back({Tok::End, "", text_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Tok k, ParseError::Kind kind = ParseError::Kind::Syntax) {
    if (peek().kind != k)
      fail(kind, peek(), std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    return next();
  }

  Formula parse_cor() {
    Formula f = parse_split();
    while (peek().kind == Tok::BarBar) {
      next();
      f = Formula::cor(std::move(f), parse_split());
    }
    return f;
  }

  Formula parse_split() {
    Formula f = parse_conj();
    while (peek().kind == Tok::Bar) {
      next();
      f = Formula::split(std::move(f), parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (peek().kind == Tok::Amp) {
      next();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Box:
        next();
        return Formula::box(parse_unary());
      case Tok::Diamond:
        next();
        return Formula::diamond(parse_unary());
      case Tok::Tilde: {
        next();
        const Token& operand = peek();
        if (operand.kind == Tok::Ident) return Formula::neg_prop(next().text);
        if (operand.kind == Tok::Dep) {
          auto [args, target] = parse_dep_body();
          return Formula::neg_dep(std::move(args), std::move(target));
        }
        fail(ParseError::Kind::Negation, operand,
             "negation applies only to propositions and dependence atoms");
      }
      case Tok::LParen: {
        next();
        Formula f = parse_cor();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Top:
        next();
        return Formula::top();
      case Tok::Bot:
        next();
        return Formula::bot();
      case Tok::Ident:
        return Formula::prop(next().text);
      case Tok::Dep: {
        auto [args, target] = parse_dep_body();
        return Formula::dep(std::move(args), std::move(target));
      }
      default:
        fail(ParseError::Kind::Syntax, t, std::string("expected a formula, found ") + describe(t.kind));
    }
  }

  // dep '(' [ident {',' ident}] ';' ident ')'
  std::pair<std::vector<std::string>, std::string> parse_dep_body() {
    expect(Tok::Dep);
    expect(Tok::LParen);
    std::vector<std::string> args;
    if (peek().kind != Tok::Semi) {
      args.push_back(expect(Tok::Ident, ParseError::Kind::Arity).text);
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(expect(Tok::Ident, ParseError::Kind::Arity).text);
      }
    }
    if (peek().kind != Tok::Semi)
      fail(ParseError::Kind::Arity, peek(),
           "malformed dependence atom: expected ';' before the determined proposition");
    next();
    std::string target = expect(Tok::Ident, ParseError::Kind::Arity).text;
    if (peek().kind != Tok::RParen)
      fail(ParseError::Kind::Arity, peek(),
           "malformed dependence atom: exactly one determined proposition allowed");
    next();
    return {std::move(args), std::move(target)};
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

const char* infix(Op op) {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    default: return " || ";
  }
}

void render_dep(const Formula& f, std::string& out) {
  out += "dep(";
  for (std::size_t i = 0; i < f.dep_args().size(); ++i) {
    if (i) out += ',';
    out += f.dep_args()[i];
  }
  out += ';';
  out += f.name();
  out += ')';
}

void render_into(const Formula& f, std::string& out);

// Binary operands are parenthesized unless they continue a left-nested chain
// of the same operator; this keeps mixed-operator text unambiguous to readers.
void render_operand(const Formula& parent, const Formula& child, bool left, std::string& out) {
  bool parens = child.is_binary() && (child.op() != parent.op() || !left);
  if (parent.is_modal()) parens = child.is_binary();
  if (parens) out += '(';
  render_into(child, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Top: out += "top"; return;
    case Op::Bot: out += "bot"; return;
    case Op::Prop: out += f.name(); return;
    case Op::NegProp:
      out += '~';
      out += f.name();
      return;
    case Op::Dep: render_dep(f, out); return;
    case Op::NegDep:
      out += '~';
      render_dep(f, out);
      return;
    case Op::Box:
    case Op::Diamond:
      out += f.op() == Op::Box ? "[]" : "<>";
      render_operand(f, f.child(), true, out);
      return;
    case Op::And:
    case Op::Or:
    case Op::Cor:
      render_operand(f, f.lhs(), true, out);
      out += infix(f.op());
      render_operand(f, f.rhs(), false, out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace mdl
