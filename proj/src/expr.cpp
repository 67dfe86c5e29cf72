#include "qcong/expr.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "qcong/config.hpp"
#include "qcong/oracle.hpp"

namespace qcong {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.power != b.power || !(a.factor == b.factor) ||
      a.args != b.args || a.quotient != b.quotient || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) {
      return false;
    }
  }
  return true;
}

namespace expr {

ExprPtr integer(Integer v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::integer;
  e->value = std::move(v);
  return e;
}

ExprPtr monomial(std::int64_t k) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::monomial;
  e->power = k;
  return e;
}

ExprPtr pochhammer(std::uint64_t a, std::uint64_t b, bool negated) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::pochhammer;
  e->factor = {a, b, 1, negated};
  return e;
}

ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->children = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr negate(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::neg;
  e->children = {std::move(x)};
  return e;
}

ExprPtr power(ExprPtr base, std::int64_t p) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::pow;
  e->power = p;
  e->children = {std::move(base)};
  return e;
}

ExprPtr call(ExprKind kind, std::vector<std::uint64_t> args, std::vector<ExprPtr> children) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = std::move(args);
  e->children = std::move(children);
  return e;
}

ExprPtr eta(EtaQuotient q) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::eta;
  e->quotient = std::move(q);
  return e;
}

}  // namespace expr

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0;
  }

  bool peek_alpha() {
    skip_space();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0;
  }

  std::string read_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t read_unsigned() {
    const std::string digits = read_digits();
    if (digits.size() > 18) {
      fail("integer too large");
    }
    return std::stoull(digits);
  }

  std::int64_t read_signed() {
    const bool negative = accept('-');
    const auto v = static_cast<std::int64_t>(read_unsigned());
    return negative ? -v : v;
  }

  std::uint64_t read_positive(const char* what) {
    const std::size_t at = pos_;
    const std::uint64_t v = read_unsigned();
    if (v == 0) {
      throw ParseError(std::string(what) + " must be positive", at);
    }
    return v;
  }

  std::string read_identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // "q", "q7", "q^7"; returns the exponent or nullopt if the identifier is not a q-term.
  std::optional<std::uint64_t> q_exponent(const std::string& ident) {
    if (ident.empty() || ident[0] != 'q') {
      return std::nullopt;
    }
    if (ident.size() == 1) {
      if (accept('^')) {
        return read_unsigned();
      }
      return 1;
    }
    for (std::size_t i = 1; i < ident.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(ident[i])) == 0) {
        return std::nullopt;
      }
    }
    return std::stoull(ident.substr(1));
  }

  ExprPtr parse_sum() {
    ExprPtr lhs;
    if (accept('-')) {
      lhs = expr::negate(parse_product());
    } else {
      lhs = parse_product();
    }
    while (true) {
      if (accept('+')) {
        lhs = expr::binary(ExprKind::add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = expr::binary(ExprKind::sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  bool starts_atom_by_juxtaposition() { return peek('(') || peek_alpha(); }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_power();
    while (true) {
      if (accept('*')) {
        lhs = expr::binary(ExprKind::mul, lhs, parse_power());
      } else if (accept('/')) {
        lhs = expr::binary(ExprKind::div, lhs, parse_power());
      } else if (starts_atom_by_juxtaposition()) {
        lhs = expr::binary(ExprKind::mul, lhs, parse_power());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    while (accept('^')) {
      std::int64_t e = 0;
      if (accept('(')) {
        e = read_signed();
        expect(')');
      } else {
        e = read_signed();
      }
      base = expr::power(base, e);
    }
    return base;
  }

  std::optional<ExprPtr> try_pochhammer() {
    const std::size_t saved = pos_;
    const bool negated = accept('-');
    if (!peek_alpha()) {
      pos_ = saved;
      return std::nullopt;
    }
    const auto a = q_exponent(read_identifier());
    if (!a || !accept(';')) {
      pos_ = saved;
      return std::nullopt;
    }
    const std::size_t b_at = pos_;
    const auto b = q_exponent(read_identifier());
    if (!b) {
      throw ParseError("expected q-term after ';'", b_at);
    }
    if (*a == 0 || *b == 0) {
      throw ParseError("Pochhammer exponents must be positive", b_at);
    }
    expect(')');
    ExprPtr p = expr::pochhammer(*a, *b, negated);
    if (peek_digit()) {
      p = expr::power(p, static_cast<std::int64_t>(read_unsigned()));
    }
    return p;
  }

  ExprPtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) {
      fail("unexpected end of input");
    }
    if (peek_digit()) {
      return expr::integer(Integer(read_digits()));
    }
    if (accept('(')) {
      if (auto p = try_pochhammer()) {
        return *p;
      }
      ExprPtr inner = parse_sum();
      expect(')');
      return inner;
    }
    if (peek_alpha()) {
      const std::size_t at = pos_;
      const std::string ident = read_identifier();
      if (auto k = q_exponent(ident)) {
        return expr::monomial(static_cast<std::int64_t>(*k));
      }
      return parse_call(ident, at);
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  ExprPtr parse_call(const std::string& name, std::size_t at) {
    static const std::map<std::string, ExprKind> kinds = {
        {"R", ExprKind::rr},           {"theta", ExprKind::theta},
        {"thetasum", ExprKind::theta_sum}, {"bprime", ExprKind::bprime},
        {"dissect", ExprKind::dissect}, {"subst", ExprKind::substitute},
        {"eta", ExprKind::eta}};
    const auto it = kinds.find(name);
    if (it == kinds.end()) {
      throw ParseError("unknown name '" + name + "'", at);
    }
    expect('(');
    switch (it->second) {
      case ExprKind::rr: {
        const auto m = read_positive("R() argument");
        expect(')');
        return expr::call(ExprKind::rr, {m});
      }
      case ExprKind::theta:
      case ExprKind::theta_sum: {
        const auto a = read_positive("theta argument");
        expect(',');
        const auto b = read_positive("theta argument");
        expect(')');
        return expr::call(it->second, {a, b});
      }
      case ExprKind::bprime: {
        const std::size_t ell_at = pos_;
        const auto ell = read_unsigned();
        if (ell < 2) {
          throw ParseError("bprime() needs ell >= 2", ell_at);
        }
        expect(')');
        return expr::call(ExprKind::bprime, {ell});
      }
      case ExprKind::dissect: {
        ExprPtr inner = parse_sum();
        expect(',');
        const auto t = read_positive("dissection modulus");
        expect(',');
        const auto j = read_unsigned();
        expect(')');
        return expr::call(ExprKind::dissect, {t, j}, {inner});
      }
      case ExprKind::substitute: {
        ExprPtr inner = parse_sum();
        expect(',');
        const auto m = read_positive("substitution power");
        expect(')');
        return expr::call(ExprKind::substitute, {m}, {inner});
      }
      case ExprKind::eta:
        return parse_eta_body(at);
      default:
        break;
    }
    fail("unreachable");
  }

  ExprPtr parse_eta_body(std::size_t at) {
    const auto level = read_positive("eta level");
    expect(';');
    std::map<std::uint64_t, std::int64_t> exponents;
    do {
      const std::size_t d_at = pos_;
      const auto delta = read_positive("eta divisor");
      std::int64_t r = 1;
      if (accept('^')) {
        r = read_signed();
      }
      if (!exponents.emplace(delta, r).second) {
        throw ParseError("repeated eta divisor " + std::to_string(delta), d_at);
      }
    } while (accept(','));
    expect(')');
    try {
      return expr::eta(EtaQuotient(level, std::move(exponents)));
    } catch (const SeriesError& err) {
      throw ParseError(err.what(), at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_sum(const Expr& e) {
  return e.kind == ExprKind::add || e.kind == ExprKind::sub || e.kind == ExprKind::neg;
}

bool is_product(const Expr& e) { return e.kind == ExprKind::mul || e.kind == ExprKind::div; }

void print(std::ostream& out, const Expr& e);

void print_wrapped(std::ostream& out, const Expr& e, bool wrap) {
  if (wrap) {
    out << '(';
  }
  print(out, e);
  if (wrap) {
    out << ')';
  }
}

void print(std::ostream& out, const Expr& e) {
  switch (e.kind) {
    case ExprKind::integer:
      out << e.value.get_str();
      return;
    case ExprKind::monomial:
      out << 'q';
      if (e.power != 1) {
        out << '^' << e.power;
      }
      return;
    case ExprKind::pochhammer: {
      auto qterm = [&](std::uint64_t k) {
        out << 'q';
        if (k != 1) {
          out << k;
        }
      };
      out << '(' << (e.factor.negated ? "-" : "");
      qterm(e.factor.a);
      out << ';';
      qterm(e.factor.b);
      out << ')';
      return;
    }
    case ExprKind::add:
    case ExprKind::sub:
      print(out, *e.children[0]);
      out << (e.kind == ExprKind::add ? " + " : " - ");
      print_wrapped(out, *e.children[1], is_sum(*e.children[1]));
      return;
    case ExprKind::mul:
    case ExprKind::div:
      print_wrapped(out, *e.children[0], is_sum(*e.children[0]));
      out << (e.kind == ExprKind::mul ? "*" : "/");
      print_wrapped(out, *e.children[1], is_sum(*e.children[1]) || is_product(*e.children[1]));
      return;
    case ExprKind::neg:
      out << '-';
      print_wrapped(out, *e.children[0], is_sum(*e.children[0]));
      return;
    case ExprKind::pow: {
      const Expr& base = *e.children[0];
      const bool atomic = base.kind == ExprKind::integer || base.kind == ExprKind::pochhammer ||
                          base.kind == ExprKind::rr || base.kind == ExprKind::theta ||
                          base.kind == ExprKind::theta_sum || base.kind == ExprKind::bprime ||
                          base.kind == ExprKind::dissect || base.kind == ExprKind::substitute ||
                          base.kind == ExprKind::eta;
      print_wrapped(out, base, !atomic);
      out << '^' << e.power;
      return;
    }
    case ExprKind::rr:
      out << "R(" << e.args[0] << ')';
      return;
    case ExprKind::theta:
    case ExprKind::theta_sum:
      out << (e.kind == ExprKind::theta ? "theta(" : "thetasum(") << e.args[0] << ','
          << e.args[1] << ')';
      return;
    case ExprKind::bprime:
      out << "bprime(" << e.args[0] << ')';
      return;
    case ExprKind::dissect:
      out << "dissect(";
      print(out, *e.children[0]);
      out << ", " << e.args[0] << ", " << e.args[1] << ')';
      return;
    case ExprKind::substitute:
      out << "subst(";
      print(out, *e.children[0]);
      out << ", " << e.args[0] << ')';
      return;
    case ExprKind::eta:
      out << e.quotient->to_string();
      return;
  }
}

// Coefficients k, k+1, ... of s.
Series drop_front(const Series& s, std::size_t k) {
  if (k == 0) {
    return s;
  }
  if (s.is_exact()) {
    const auto c = s.exact_coeffs().subspan(k);
    return Series(std::vector<Integer>(c.begin(), c.end()), c.size());
  }
  const auto c = s.residues().subspan(k);
  return Series(std::vector<std::uint32_t>(c.begin(), c.end()), c.size(), s.mode());
}

Series fit(Series s, std::size_t trunc) {
  if (s.trunc() < trunc) {
    throw SeriesError("expression could only be expanded to order " + std::to_string(s.trunc()) +
                      " (requested " + std::to_string(trunc) +
                      "); raise QCONG_MAX_TRUNC or lower the order");
  }
  return s.trunc() == trunc ? s : s.truncated(trunc);
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  std::ostringstream out;
  print(out, e);
  return out.str();
}

Series evaluate(const Expr& e, std::size_t trunc, CoeffMode mode) {
  if (trunc == 0) {
    throw SeriesError("evaluation order must be positive");
  }
  switch (e.kind) {
    case ExprKind::integer:
      return Series::constant(e.value, trunc, mode);
    case ExprKind::monomial:
      if (e.power < 0) {
        throw SeriesError("negative powers of q are not representable");
      }
      return Series::monomial(static_cast<std::size_t>(e.power), trunc, mode);
    case ExprKind::pochhammer:
      return e.factor.negated ? pochhammer_negated(e.factor.a, e.factor.b, 1, trunc, mode)
                              : pochhammer(e.factor.a, e.factor.b, 1, trunc, mode);
    case ExprKind::add:
      return add(evaluate(*e.children[0], trunc, mode), evaluate(*e.children[1], trunc, mode));
    case ExprKind::sub:
      return sub(evaluate(*e.children[0], trunc, mode), evaluate(*e.children[1], trunc, mode));
    case ExprKind::mul:
      return mul(evaluate(*e.children[0], trunc, mode), evaluate(*e.children[1], trunc, mode));
    case ExprKind::div:
      return divide(evaluate(*e.children[0], trunc, mode), evaluate(*e.children[1], trunc, mode));
    case ExprKind::neg:
      return neg(evaluate(*e.children[0], trunc, mode));
    case ExprKind::pow: {
      const Expr& base = *e.children[0];
      if (base.kind == ExprKind::pochhammer) {
        return base.factor.negated
                   ? pochhammer_negated(base.factor.a, base.factor.b, e.power, trunc, mode)
                   : pochhammer(base.factor.a, base.factor.b, e.power, trunc, mode);
      }
      return pow(evaluate(base, trunc, mode), e.power);
    }
    case ExprKind::rr: {
      const std::size_t m = e.args[0];
      return fit(substitute_power(rr_quotient((trunc + m - 1) / m, mode), m), trunc);
    }
    case ExprKind::theta:
      return theta_f(e.args[0], e.args[1], trunc, mode);
    case ExprKind::theta_sum:
      return theta_bilateral_sum(e.args[0], e.args[1], trunc, mode);
    case ExprKind::bprime:
      return bprime_series(e.args[0], trunc, mode);
    case ExprKind::dissect: {
      const std::size_t t = e.args[0];
      const std::size_t j = e.args[1];
      // j may exceed t: sum a(tn+j) q^n drops the first j/t terms of class j mod t.
      const Series inner = evaluate(*e.children[0], t * (trunc - 1) + j + 1, mode);
      return fit(drop_front(dissect(inner, t, j % t), j / t), trunc);
    }
    case ExprKind::substitute: {
      const std::size_t m = e.args[0];
      const Series inner = evaluate(*e.children[0], (trunc + m - 1) / m, mode);
      return fit(substitute_power(inner, m), trunc);
    }
    case ExprKind::eta:
      return eta_quotient_series(*e.quotient, trunc, mode);
  }
  throw SeriesError("unknown expression node");
}

}  // namespace qcong
