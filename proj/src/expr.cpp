#include "scfact/expr.hpp"

#include <cctype>
#include <cmath>

namespace scfact {

namespace {

ExprPtr node(ExprNode::Kind k, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

ExprPtr number(BigRat v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Number;
    n->value = std::move(v);
    return n;
}

class Parser {
public:
    Parser(const std::string& text, const RingDescriptor& ring) : text_(text), ring_(ring) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        for (;;) {
            if (consume('+')) e = node(ExprNode::Kind::Add, e, parse_product());
            else if (consume('-')) e = node(ExprNode::Kind::Sub, e, parse_product());
            else return e;
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        for (;;) {
            if (consume('*')) {
                e = node(ExprNode::Kind::Mul, e, parse_unary());
            } else if (consume('/')) {
                std::size_t at = pos_;
                ExprPtr rhs = parse_unary();
                // fold literal/literal so printed rationals like "1/2" round-trip
                if (e->kind == ExprNode::Kind::Number && rhs->kind == ExprNode::Kind::Number) {
                    if (rhs->value == 0) throw ParseError("division by zero literal", at);
                    e = number(BigRat(e->value / rhs->value));
                } else {
                    e = node(ExprNode::Kind::Div, e, rhs);
                }
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        if (consume('-')) return node(ExprNode::Kind::Neg, parse_unary());
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (consume('^')) {
            skip_ws();
            std::size_t at = pos_;
            ExprPtr exp = parse_atom();
            if (exp->kind != ExprNode::Kind::Number || denominator(exp->value) != 1 ||
                exp->value < 0)
                throw ParseError("exponent must be a nonnegative integer", at);
            return node(ExprNode::Kind::Pow, base, exp);
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t fstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string frac = text_.substr(fstart, pos_ - fstart);
            if (frac.empty()) throw ParseError("expected digits after decimal point", pos_);
            BigInt den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            return number(BigRat(BigInt(digits + frac), den));
        }
        return number(BigRat(BigInt(digits)));
    }

    ExprPtr parse_identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        bool exact = ring_.exact();
        if (name == "n") return node(ExprNode::Kind::VarN);
        if (name == "s") {
            if (ring_.kind() != RingKind::Sampled)
                throw TypeError("variable s requires a sampled ring");
            return node(ExprNode::Kind::VarS);
        }
        if (name == "pi") {
            if (exact) throw TypeError("pi requires a float ring");
            return node(ExprNode::Kind::Pi);
        }
        if (name == "cos" || name == "sin" || name == "sqrt") {
            if (exact && name != "sqrt")
                throw TypeError(name + " requires a float ring");
            if (!consume('(')) throw ParseError("expected '(' after " + name, pos_);
            ExprPtr arg = parse_sum();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            ExprNode::Kind k = name == "cos"   ? ExprNode::Kind::Cos
                               : name == "sin" ? ExprNode::Kind::Sin
                                               : ExprNode::Kind::Sqrt;
            return node(k, arg);
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    const std::string& text_;
    const RingDescriptor& ring_;
    std::size_t pos_ = 0;
};

int precedence(ExprNode::Kind k) {
    switch (k) {
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub: return 1;
    case ExprNode::Kind::Mul:
    case ExprNode::Kind::Div: return 2;
    case ExprNode::Kind::Neg: return 3;
    case ExprNode::Kind::Pow: return 4;
    default: return 5; // atoms
    }
}

void print(const ExprPtr& e, std::string& out, int parent_prec) {
    int prec = precedence(e->kind);
    bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e->kind) {
    case ExprNode::Kind::Number: {
        // parser output never contains negative literals (unary minus is Neg)
        out += numerator(e->value).str();
        if (denominator(e->value) != 1) out += "/" + denominator(e->value).str();
        break;
    }
    case ExprNode::Kind::VarN: out += "n"; break;
    case ExprNode::Kind::VarS: out += "s"; break;
    case ExprNode::Kind::Pi: out += "pi"; break;
    case ExprNode::Kind::Add:
        print(e->lhs, out, prec);
        out += "+";
        print(e->rhs, out, prec + 1);
        break;
    case ExprNode::Kind::Sub:
        print(e->lhs, out, prec);
        out += "-";
        print(e->rhs, out, prec + 1);
        break;
    case ExprNode::Kind::Mul:
        print(e->lhs, out, prec);
        out += "*";
        print(e->rhs, out, prec + 1);
        break;
    case ExprNode::Kind::Div:
        print(e->lhs, out, prec);
        out += "/";
        print(e->rhs, out, prec + 1);
        break;
    case ExprNode::Kind::Pow:
        print(e->lhs, out, prec + 1);
        out += "^";
        print(e->rhs, out, prec);
        break;
    case ExprNode::Kind::Neg:
        out += "-";
        print(e->lhs, out, prec);
        break;
    case ExprNode::Kind::Cos:
    case ExprNode::Kind::Sin:
    case ExprNode::Kind::Sqrt:
        out += e->kind == ExprNode::Kind::Cos ? "cos(" : e->kind == ExprNode::Kind::Sin ? "sin(" : "sqrt(";
        print(e->lhs, out, 0);
        out += ")";
        break;
    }
    if (parens) out += ")";
}

double eval_double(const ExprPtr& e, long long n, double s) {
    switch (e->kind) {
    case ExprNode::Kind::Number: return e->value.convert_to<double>();
    case ExprNode::Kind::VarN: return static_cast<double>(n);
    case ExprNode::Kind::VarS: return s;
    case ExprNode::Kind::Pi: return M_PI;
    case ExprNode::Kind::Add: return eval_double(e->lhs, n, s) + eval_double(e->rhs, n, s);
    case ExprNode::Kind::Sub: return eval_double(e->lhs, n, s) - eval_double(e->rhs, n, s);
    case ExprNode::Kind::Mul: return eval_double(e->lhs, n, s) * eval_double(e->rhs, n, s);
    case ExprNode::Kind::Div: {
        double d = eval_double(e->rhs, n, s);
        if (d == 0.0) throw EvalError("division by zero in formula");
        return eval_double(e->lhs, n, s) / d;
    }
    case ExprNode::Kind::Pow:
        return std::pow(eval_double(e->lhs, n, s), e->rhs->value.convert_to<double>());
    case ExprNode::Kind::Neg: return -eval_double(e->lhs, n, s);
    case ExprNode::Kind::Cos: return std::cos(eval_double(e->lhs, n, s));
    case ExprNode::Kind::Sin: return std::sin(eval_double(e->lhs, n, s));
    case ExprNode::Kind::Sqrt: {
        double v = eval_double(e->lhs, n, s);
        if (v < 0) throw EvalError("sqrt of negative value in formula");
        return std::sqrt(v);
    }
    }
    throw EvalError("unreachable");
}

RingValue eval_exact(const ExprPtr& e, const RingDescriptor& ring, long long n) {
    switch (e->kind) {
    case ExprNode::Kind::Number: return RingValue::make_rational(ring, e->value);
    case ExprNode::Kind::VarN: return from_int(ring, n);
    case ExprNode::Kind::Add:
        return ring_add(eval_exact(e->lhs, ring, n), eval_exact(e->rhs, ring, n));
    case ExprNode::Kind::Sub:
        return ring_sub(eval_exact(e->lhs, ring, n), eval_exact(e->rhs, ring, n));
    case ExprNode::Kind::Mul:
        return ring_mul(eval_exact(e->lhs, ring, n), eval_exact(e->rhs, ring, n));
    case ExprNode::Kind::Div:
        return ring_div(eval_exact(e->lhs, ring, n), eval_exact(e->rhs, ring, n));
    case ExprNode::Kind::Pow:
        return ring_pow(eval_exact(e->lhs, ring, n), e->rhs->value.convert_to<long long>());
    case ExprNode::Kind::Neg: return ring_neg(eval_exact(e->lhs, ring, n));
    case ExprNode::Kind::Sqrt: return ring_sqrt(eval_exact(e->lhs, ring, n));
    default:
        throw TypeError("operation not supported on exact rings");
    }
}

} // namespace

ExprPtr parse_expression(const std::string& text, const RingDescriptor& ring) {
    return Parser(text, ring).parse();
}

std::string pretty_print(const ExprPtr& e) {
    std::string out;
    print(e, out, 0);
    return out;
}

bool ast_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    if (a->kind == ExprNode::Kind::Number && a->value != b->value) return false;
    return ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
}

RingValue eval_expression(const ExprPtr& e, const RingDescriptor& ring, long long n) {
    switch (ring.kind()) {
    case RingKind::RealFloat:
        return RingValue::make_real(ring, eval_double(e, n, 0.0));
    case RingKind::Sampled: {
        std::vector<double> out(ring.grid().size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = eval_double(e, n, ring.grid()[i]);
        return RingValue::make_samples(ring, std::move(out));
    }
    default:
        return eval_exact(e, ring, n);
    }
}

} // namespace scfact
