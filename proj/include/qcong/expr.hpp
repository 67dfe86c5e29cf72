#pragma once

// Expression trees over q-series and their text form.
//
// Grammar (informal; see docs/grammar.md):
//
//   expr    := ['-'] product (('+' | '-') product)*
//   product := power (('*' | '/' | <juxtaposition>) power)*
//   power   := atom ['^' ['-'] INT]
//   atom    := INT | q | q^INT | qINT
//            | '(' ['-'] qterm ';' qterm ')' [INT]        Pochhammer symbol
//            | '(' expr ')'
//            | R(m) | theta(A,B) | thetasum(A,B) | bprime(ell)
//            | dissect(expr, t, j) | subst(expr, m)     dissect: sum a(tn+j) q^n
//            | eta(N; d^r, ...)

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/eta_quotient.hpp"
#include "qcong/qfactory.hpp"
#include "qcong/series.hpp"

namespace qcong {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class ExprKind {
  integer,
  monomial,
  pochhammer,
  add,
  sub,
  mul,
  div,
  neg,
  pow,
  rr,          // R(q^m)
  theta,       // f(-q^A, -q^B), product form
  theta_sum,   // f(-q^A, -q^B), bilateral sum
  bprime,      // generating function of b'_ell
  dissect,     // coefficients of q^{tn+j}
  substitute,  // q -> q^m
  eta
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::integer;
  Integer value;                     // integer
  std::int64_t power = 0;            // monomial exponent, pow exponent
  PochhammerFactor factor;           // pochhammer (factor.e is always 1)
  std::vector<std::uint64_t> args;   // rr, theta, theta_sum, bprime, dissect, substitute
  std::vector<ExprPtr> children;
  std::optional<EtaQuotient> quotient;
};

bool operator==(const Expr& a, const Expr& b);

namespace expr {
ExprPtr integer(Integer v);
ExprPtr monomial(std::int64_t k);
ExprPtr pochhammer(std::uint64_t a, std::uint64_t b, bool negated = false);
ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr negate(ExprPtr x);
ExprPtr power(ExprPtr base, std::int64_t e);
ExprPtr call(ExprKind kind, std::vector<std::uint64_t> args, std::vector<ExprPtr> children = {});
ExprPtr eta(EtaQuotient q);
}  // namespace expr

/// Throws ParseError with the offending character offset.
ExprPtr parse_expression(std::string_view text);

/// Canonical text form; parse_expression(to_string(e)) is structurally equal to e.
std::string to_string(const Expr& e);

/// Expands e to exactly `trunc` coefficients in the requested mode.
Series evaluate(const Expr& e, std::size_t trunc, CoeffMode mode = CoeffMode::exact());

}  // namespace qcong
