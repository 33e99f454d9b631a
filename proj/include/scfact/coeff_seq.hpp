#pragma once

#include <functional>
#include <vector>

#include "scfact/expr.hpp"
#include "scfact/ring.hpp"

namespace scfact {

/// A coefficient sequence a_{j,n} or forcing b_n: one value per index n >= 0.
class CoefficientSequence {
public:
    enum class Kind { Constant, Periodic, Table, Formula, Callback };

    static CoefficientSequence constant(RingValue v);
    /// values[(n - offset) mod p]; offset reproduces 1-based tables.
    static CoefficientSequence periodic(std::vector<RingValue> values, long long offset = 0);
    /// values[n] for n < size, then the constant tail.
    static CoefficientSequence table(std::vector<RingValue> values, RingValue tail);
    static CoefficientSequence formula(const std::string& text, const RingDescriptor& ring);
    /// Internal: arbitrary evaluator (used to wire factor recurrences).
    /// JSON export materializes Callback sequences as tables.
    static CoefficientSequence callback(RingDescriptor ring,
                                        std::function<RingValue(long long)> fn);

    Kind kind() const { return kind_; }
    const RingDescriptor& ring() const { return ring_; }
    long long period() const { return static_cast<long long>(values_.size()); }
    long long offset() const { return offset_; }
    const std::vector<RingValue>& values() const { return values_; }
    const RingValue& tail() const { return tail_; }
    const std::string& formula_text() const { return text_; }

    RingValue eval(long long n) const;

    bool is_constant_zero() const;

private:
    Kind kind_ = Kind::Constant;
    RingDescriptor ring_ = RingDescriptor::integers();
    std::vector<RingValue> values_;
    RingValue tail_;
    long long offset_ = 0;
    ExprPtr expr_;
    std::string text_;
    std::function<RingValue(long long)> fn_;
};

inline RingValue seq_eval(const CoefficientSequence& seq, long long n) { return seq.eval(n); }

} // namespace scfact
