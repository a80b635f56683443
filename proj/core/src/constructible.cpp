#include "archimedes/constructible.hpp"

#include <cctype>
#include <stdexcept>

#include "archimedes/errors.hpp"

namespace archimedes {

AlgExpr::AlgExpr(Kind kind, mpz_class value, std::vector<AlgExpr> children)
    : kind_(kind), value_(std::move(value)), children_(std::move(children)) {}

AlgExpr AlgExpr::integer(mpz_class value) {
    return AlgExpr(Kind::Integer, std::move(value), {});
}

AlgExpr AlgExpr::add(AlgExpr lhs, AlgExpr rhs) {
    return AlgExpr(Kind::Add, 0, {std::move(lhs), std::move(rhs)});
}

AlgExpr AlgExpr::sub(AlgExpr lhs, AlgExpr rhs) {
    return AlgExpr(Kind::Sub, 0, {std::move(lhs), std::move(rhs)});
}

AlgExpr AlgExpr::mul(AlgExpr lhs, AlgExpr rhs) {
    return AlgExpr(Kind::Mul, 0, {std::move(lhs), std::move(rhs)});
}

AlgExpr AlgExpr::div(AlgExpr lhs, AlgExpr rhs) {
    return AlgExpr(Kind::Div, 0, {std::move(lhs), std::move(rhs)});
}

AlgExpr AlgExpr::sqrt(AlgExpr operand) {
    return AlgExpr(Kind::Sqrt, 0, {std::move(operand)});
}

const mpz_class& AlgExpr::value() const {
    if (kind_ != Kind::Integer) throw std::logic_error("value() on a non-integer node");
    return value_;
}

namespace {

struct Tokenizer {
    const std::string& text;
    size_t pos = 0;

    explicit Tokenizer(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }

    std::string next() {
        skip_space();
        if (pos >= text.size()) throw ParseError("unexpected end of expression");
        const char c = text[pos];
        if (c == '(' || c == ')') {
            ++pos;
            return std::string(1, c);
        }
        const size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        return text.substr(start, pos - start);
    }
};

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

AlgExpr parse_expression(Tokenizer& tok) {
    const std::string t = tok.next();
    if (t == ")") throw ParseError("unexpected ')'");
    if (t != "(") {
        if (!is_integer_token(t)) throw ParseError("unknown token '" + t + "'; only integers, add, sub, mul, div, sqrt are in the grammar");
        return AlgExpr::integer(mpz_class(t));
    }
    const std::string op = tok.next();
    if (op == "sqrt") {
        AlgExpr operand = parse_expression(tok);
        if (tok.next() != ")") throw ParseError("sqrt takes exactly one operand");
        return AlgExpr::sqrt(std::move(operand));
    }
    if (op != "add" && op != "sub" && op != "mul" && op != "div")
        throw ParseError("unknown operator '" + op + "'");
    AlgExpr lhs = parse_expression(tok);
    AlgExpr rhs = parse_expression(tok);
    if (tok.next() != ")") throw ParseError("'" + op + "' takes exactly two operands");
    if (op == "add") return AlgExpr::add(std::move(lhs), std::move(rhs));
    if (op == "sub") return AlgExpr::sub(std::move(lhs), std::move(rhs));
    if (op == "mul") return AlgExpr::mul(std::move(lhs), std::move(rhs));
    return AlgExpr::div(std::move(lhs), std::move(rhs));
}

}  // namespace

AlgExpr AlgExpr::parse(const std::string& text) {
    Tokenizer tok(text);
    AlgExpr expr = parse_expression(tok);
    if (!tok.done()) throw ParseError("trailing tokens after expression");
    return expr;
}

std::string AlgExpr::to_text() const {
    switch (kind_) {
        case Kind::Integer: return value_.get_str();
        case Kind::Add: return "(add " + children_[0].to_text() + " " + children_[1].to_text() + ")";
        case Kind::Sub: return "(sub " + children_[0].to_text() + " " + children_[1].to_text() + ")";
        case Kind::Mul: return "(mul " + children_[0].to_text() + " " + children_[1].to_text() + ")";
        case Kind::Div: return "(div " + children_[0].to_text() + " " + children_[1].to_text() + ")";
        case Kind::Sqrt: return "(sqrt " + children_[0].to_text() + ")";
    }
    throw std::logic_error("unknown AlgExpr kind");
}

namespace {

Interval eval_at(const AlgExpr& expr, int bits, const std::string& path) {
    switch (expr.kind()) {
        case AlgExpr::Kind::Integer:
            return Interval(Rational(expr.value(), mpz_class(1)), bits);
        case AlgExpr::Kind::Add:
            return eval_at(expr.child(0), bits, path + "/0") + eval_at(expr.child(1), bits, path + "/1");
        case AlgExpr::Kind::Sub:
            return eval_at(expr.child(0), bits, path + "/0") - eval_at(expr.child(1), bits, path + "/1");
        case AlgExpr::Kind::Mul:
            return eval_at(expr.child(0), bits, path + "/0") * eval_at(expr.child(1), bits, path + "/1");
        case AlgExpr::Kind::Div: {
            const Interval num = eval_at(expr.child(0), bits, path + "/0");
            const Interval den = eval_at(expr.child(1), bits, path + "/1");
            if (den.contains(Rational(0)))
                throw DivisionByZeroRegion("denominator enclosure contains zero at " +
                                           (path.empty() ? std::string("/") : path) + "/1");
            return num / den;
        }
        case AlgExpr::Kind::Sqrt: {
            const Interval operand = eval_at(expr.child(0), bits, path + "/0");
            if (operand.lo().sign() < 0)
                throw NegativeRadicand("radicand enclosure dips below zero at " +
                                       (path.empty() ? std::string("/") : path) + "/0");
            return interval_sqrt(operand);
        }
    }
    throw std::logic_error("unknown AlgExpr kind");
}

}  // namespace

Interval eval_expr(const AlgExpr& expr, int precision_bits) {
    return eval_at(expr, precision_bits, "");
}

int sqrt_depth(const AlgExpr& expr) {
    int deepest = 0;
    for (size_t i = 0; i < expr.arity(); ++i) deepest = std::max(deepest, sqrt_depth(expr.child(i)));
    return deepest + (expr.kind() == AlgExpr::Kind::Sqrt ? 1 : 0);
}

ConstructibilityCertificate is_constructible(const AlgExpr& expr) {
    ConstructibilityCertificate cert;
    cert.constructible = true;  // the DSL is exactly the constructible closure
    cert.depth = sqrt_depth(expr);
    cert.enclosure = eval_expr(expr, 64);
    return cert;
}

}  // namespace archimedes
