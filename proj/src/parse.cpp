#include "liesym/parse.hpp"

#include <cctype>

namespace liesym {

namespace {

enum class Tok { End, Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma };

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  Rat value;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Error::Kind::Syntax,
                "syntax error at position " + std::to_string(tok_pos + 1) + ": " + msg);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      value = Rat(text.substr(start, pos - start));
      tok = Tok::Int;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      auto body = [&](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '\'';
      };
      ++pos;
      while (pos < text.size() && body(text[pos])) ++pos;
      // one optional underscore suffix (jet coordinates, derivative atoms)
      if (pos < text.size() && text[pos] == '_' && pos + 1 < text.size() && body(text[pos + 1])) {
        ++pos;
        while (pos < text.size() && body(text[pos])) ++pos;
      }
      ident = text.substr(start, pos - start);
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '[': tok = Tok::LBracket; return;
      case ']': tok = Tok::RBracket; return;
      case ',': tok = Tok::Comma; return;
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }
};

// Jet spelling: "u_" followed by x's and t's in any order.
bool jet_from_name(const std::string& name, JetCoord* out) {
  if (name.size() < 3 || name[0] != 'u' || name[1] != '_') return false;
  JetCoord j;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (name[i] == 'x') {
      ++j.nx;
    } else if (name[i] == 't') {
      ++j.nt;
    } else {
      return false;
    }
  }
  *out = j;
  return true;
}

struct Parser {
  const SymbolTable& table;
  Lexer lex;

  Parser(const SymbolTable& t, const std::string& s) : table(t), lex(s) {}

  Expression parse_all() {
    Expression e = expression(0);
    if (lex.tok != Tok::End) lex.fail("trailing input");
    return e;
  }

  void expect(Tok t, const char* what) {
    if (lex.tok != t) lex.fail(std::string("expected ") + what);
    lex.next();
  }

  // precedence climbing: + - (10), * / (20); ^ binds directly to a primary
  Expression expression(int min_prec) {
    Expression left = unary();
    for (;;) {
      int prec;
      switch (lex.tok) {
        case Tok::Plus:
        case Tok::Minus: prec = 10; break;
        case Tok::Star:
        case Tok::Slash: prec = 20; break;
        default: return left;
      }
      if (prec < min_prec) return left;
      Tok op = lex.tok;
      lex.next();
      Expression right = expression(prec + 1);
      switch (op) {
        case Tok::Plus: left = left + right; break;
        case Tok::Minus: left = left - right; break;
        case Tok::Star: left = left * right; break;
        case Tok::Slash: {
          if (right.is_zero()) lex.fail("division by zero");
          if (right.terms().size() != 1) lex.fail("division requires a single-term divisor");
          left = left * pow(right, -1);
          break;
        }
        default: break;
      }
    }
  }

  int exponent() {
    bool neg = false;
    if (lex.tok == Tok::Minus) {
      neg = true;
      lex.next();
    }
    if (lex.tok != Tok::Int) lex.fail("expected integer exponent");
    if (!lex.value.get_num().fits_sint_p()) lex.fail("exponent too large");
    int n = static_cast<int>(lex.value.get_num().get_si());
    lex.next();
    return neg ? -n : n;
  }

  Expression unary() {
    if (lex.tok == Tok::Minus) {
      lex.next();
      return -unary();
    }
    Expression e = primary();
    while (lex.tok == Tok::Caret) {
      lex.next();
      e = pow(e, exponent());
    }
    return e;
  }

  Expression primary() {
    switch (lex.tok) {
      case Tok::Int: {
        Rat v = lex.value;
        lex.next();
        return Expression::rational(v);
      }
      case Tok::LParen: {
        lex.next();
        Expression e = expression(0);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        std::string name = lex.ident;
        lex.next();
        if (name == "exp" && lex.tok == Tok::LParen) return exponential();
        if (name == "D" && lex.tok == Tok::LBracket) return derivative();
        return named(name);
      }
      default:
        lex.fail("expected an expression");
    }
  }

  Expression exponential() {
    expect(Tok::LParen, "'('");
    Expression inner = expression(0);
    expect(Tok::RParen, "')'");
    LinForm lf;
    for (const auto& t : inner.terms()) {
      if (t.factors.size() != 1 || t.factors[0].power != 1 ||
          !std::holds_alternative<SymbolId>(t.factors[0].atom)) {
        lex.fail("exp argument must be a rational linear form in symbols");
      }
      lf.add(std::get<SymbolId>(t.factors[0].atom), t.coeff);
    }
    return Expression::exponential(lf);
  }

  Expression named(const std::string& name) {
    if (auto id = table.find(name)) {
      const SymbolInfo& info = table.info(*id);
      if (info.kind == SymbolKind::ArbitraryFunction) {
        if (lex.tok != Tok::LParen) lex.fail("function symbol " + name + " needs arguments");
        auto args = arguments();
        if (static_cast<int>(args.size()) != info.arity) {
          throw Error(Error::Kind::Arity, "function " + name + " expects " +
                                              std::to_string(info.arity) + " arguments, got " +
                                              std::to_string(args.size()));
        }
        std::vector<int> deriv(args.size(), 0);
        return Expression::apply(*id, std::move(deriv), std::move(args));
      }
      return Expression::symbol(*id);
    }
    JetCoord j;
    if (jet_from_name(name, &j)) return Expression::jet(j);
    throw Error(Error::Kind::UnknownSymbol, "unknown symbol: " + name);
  }

  std::vector<Expression> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Expression> args;
    if (lex.tok != Tok::RParen) {
      args.push_back(expression(0));
      while (lex.tok == Tok::Comma) {
        lex.next();
        args.push_back(expression(0));
      }
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  // D[f, slot, slot, ...](args): slots are 1-based indices or, when the
  // arguments are plain distinct symbols, the symbol names.
  Expression derivative() {
    expect(Tok::LBracket, "'['");
    if (lex.tok != Tok::Ident) lex.fail("expected function name in D[...]");
    std::string fname = lex.ident;
    lex.next();
    auto fid = table.find(fname);
    if (!fid || table.info(*fid).kind != SymbolKind::ArbitraryFunction) {
      throw Error(Error::Kind::UnknownSymbol, "unknown function symbol in D[...]: " + fname);
    }
    int arity = table.info(*fid).arity;
    struct Slot { bool by_index; int index; std::string name; };
    std::vector<Slot> slots;
    while (lex.tok == Tok::Comma) {
      lex.next();
      if (lex.tok == Tok::Int) {
        if (!is_integer(lex.value)) lex.fail("slot index must be an integer");
        long ix = lex.value.get_num().get_si();
        if (ix < 1 || ix > arity) lex.fail("slot index out of range in D[...]");
        slots.push_back({true, static_cast<int>(ix), ""});
        lex.next();
      } else if (lex.tok == Tok::Ident) {
        slots.push_back({false, 0, lex.ident});
        lex.next();
      } else {
        lex.fail("expected slot index or name in D[...]");
      }
    }
    if (slots.empty()) lex.fail("D[...] needs at least one derivative slot");
    expect(Tok::RBracket, "']'");
    auto args = arguments();
    if (static_cast<int>(args.size()) != arity) {
      throw Error(Error::Kind::Arity, "function " + fname + " expects " +
                                          std::to_string(arity) + " arguments");
    }
    std::vector<int> deriv(args.size(), 0);
    for (const auto& slot : slots) {
      if (slot.by_index) {
        deriv[slot.index - 1] += 1;
        continue;
      }
      // resolve the slot by name against plain-symbol arguments
      int found = -1;
      for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& ts = args[i].terms();
        if (ts.size() == 1 && ts[0].coeff == 1 && ts[0].factors.size() == 1 &&
            ts[0].factors[0].power == 1 &&
            std::holds_alternative<SymbolId>(ts[0].factors[0].atom) &&
            table.info(std::get<SymbolId>(ts[0].factors[0].atom)).name == slot.name) {
          if (found >= 0) lex.fail("ambiguous derivative slot name " + slot.name);
          found = static_cast<int>(i);
        }
      }
      if (found < 0) lex.fail("derivative slot " + slot.name + " does not name an argument");
      deriv[found] += 1;
    }
    return Expression::apply(*fid, std::move(deriv), std::move(args));
  }
};

}  // namespace

Expression parse(const SymbolTable& table, const std::string& text) {
  return Parser(table, text).parse_all();
}

}  // namespace liesym
