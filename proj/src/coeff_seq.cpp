#include "scfact/coeff_seq.hpp"

namespace scfact {

CoefficientSequence CoefficientSequence::constant(RingValue v) {
    CoefficientSequence s;
    s.kind_ = Kind::Constant;
    s.ring_ = v.ring();
    s.tail_ = std::move(v);
    return s;
}

CoefficientSequence CoefficientSequence::periodic(std::vector<RingValue> values,
                                                  long long offset) {
    if (values.empty()) throw Error("periodic sequence requires at least one value");
    for (const auto& v : values)
        if (v.ring() != values.front().ring())
            throw DescriptorMismatch("periodic values must share one ring");
    CoefficientSequence s;
    s.kind_ = Kind::Periodic;
    s.ring_ = values.front().ring();
    s.values_ = std::move(values);
    s.offset_ = offset;
    return s;
}

CoefficientSequence CoefficientSequence::table(std::vector<RingValue> values, RingValue tail) {
    for (const auto& v : values)
        if (v.ring() != tail.ring())
            throw DescriptorMismatch("table values must share one ring");
    CoefficientSequence s;
    s.kind_ = Kind::Table;
    s.ring_ = tail.ring();
    s.values_ = std::move(values);
    s.tail_ = std::move(tail);
    return s;
}

CoefficientSequence CoefficientSequence::formula(const std::string& text,
                                                 const RingDescriptor& ring) {
    CoefficientSequence s;
    s.kind_ = Kind::Formula;
    s.ring_ = ring;
    s.expr_ = parse_expression(text, ring);
    s.text_ = pretty_print(s.expr_);
    return s;
}

CoefficientSequence CoefficientSequence::callback(RingDescriptor ring,
                                                  std::function<RingValue(long long)> fn) {
    CoefficientSequence s;
    s.kind_ = Kind::Callback;
    s.ring_ = std::move(ring);
    s.fn_ = std::move(fn);
    return s;
}

RingValue CoefficientSequence::eval(long long n) const {
    if (n < 0) throw EvalError("sequence index must be nonnegative");
    switch (kind_) {
    case Kind::Constant:
        return tail_;
    case Kind::Periodic: {
        long long p = period();
        long long i = ((n - offset_) % p + p) % p;
        return values_[static_cast<std::size_t>(i)];
    }
    case Kind::Table:
        return n < static_cast<long long>(values_.size()) ? values_[static_cast<std::size_t>(n)]
                                                          : tail_;
    case Kind::Formula:
        return eval_expression(expr_, ring_, n);
    case Kind::Callback:
        return fn_(n);
    }
    throw EvalError("unreachable");
}

bool CoefficientSequence::is_constant_zero() const {
    return kind_ == Kind::Constant && is_zero(tail_);
}

} // namespace scfact
