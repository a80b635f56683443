#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "archimedes/interval.hpp"

namespace archimedes {

// Expression tree over the closure of the integers under the four
// arithmetic operations and square roots. Membership in this DSL is the
// constructibility criterion; evaluation yields certified enclosures.
//
// Text form: prefix s-expressions, e.g. (div (sub (mul 13 (sqrt 13)) 8) 27).
class AlgExpr {
public:
    enum class Kind { Integer, Add, Sub, Mul, Div, Sqrt };

    static AlgExpr integer(mpz_class value);
    static AlgExpr add(AlgExpr lhs, AlgExpr rhs);
    static AlgExpr sub(AlgExpr lhs, AlgExpr rhs);
    static AlgExpr mul(AlgExpr lhs, AlgExpr rhs);
    static AlgExpr div(AlgExpr lhs, AlgExpr rhs);
    static AlgExpr sqrt(AlgExpr operand);

    // Throws ParseError on anything outside the grammar.
    static AlgExpr parse(const std::string& text);

    Kind kind() const { return kind_; }
    const mpz_class& value() const;
    const AlgExpr& child(size_t index) const { return children_.at(index); }
    size_t arity() const { return children_.size(); }

    std::string to_text() const;

private:
    AlgExpr(Kind kind, mpz_class value, std::vector<AlgExpr> children);

    Kind kind_;
    mpz_class value_;
    std::vector<AlgExpr> children_;
};

// Certified evaluation. Throws DivisionByZeroRegion / NegativeRadicand with
// the offending subtree path (e.g. "/0/1") in the message.
Interval eval_expr(const AlgExpr& expr, int precision_bits = kDefaultPrecisionBits);

// Maximum nesting of sqrt nodes (the height of the quadratic tower).
int sqrt_depth(const AlgExpr& expr);

// Every well-formed expression is constructible; the certificate carries
// the tower depth and a 64-bit enclosure of the value.
struct ConstructibilityCertificate {
    bool constructible = false;
    int depth = 0;
    Interval enclosure;
};
ConstructibilityCertificate is_constructible(const AlgExpr& expr);

}  // namespace archimedes
