#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "scfact/coeff_seq.hpp"

namespace scfact {

/// x_{n+1} = a_{0,n} x_n + a_{1,n} x_{n-1} + ... + a_{k,n} x_{n-k} + b_n
/// with initial values x_0..x_k; the recurrence first fires at n = k.
class LinearRecurrence {
public:
    LinearRecurrence(RingDescriptor ring, std::vector<CoefficientSequence> coeffs,
                     CoefficientSequence forcing, std::vector<RingValue> initials,
                     long long start_index = 0);

    const RingDescriptor& ring() const { return ring_; }
    /// k in the equation above; the equation order is k + 1.
    long long k() const { return static_cast<long long>(coeffs_.size()) - 1; }
    long long order() const { return static_cast<long long>(coeffs_.size()); }
    const std::vector<CoefficientSequence>& coeffs() const { return coeffs_; }
    const CoefficientSequence& forcing() const { return forcing_; }
    const std::vector<RingValue>& initials() const { return initials_; }
    long long start_index() const { return start_index_; }

    RingValue coeff(std::size_t j, long long n) const { return coeffs_[j].eval(n); }

    LinearRecurrence homogeneous() const;
    LinearRecurrence with_initials(std::vector<RingValue> initials) const;

    /// True when every coefficient sequence is Constant.
    bool constant_coefficients() const;

private:
    RingDescriptor ring_;
    std::vector<CoefficientSequence> coeffs_;
    CoefficientSequence forcing_;
    std::vector<RingValue> initials_;
    long long start_index_;
};

/// Lazily extended solution x_0, x_1, ... of a LinearRecurrence.
/// Copies share the computed prefix.
class SolutionStream {
public:
    explicit SolutionStream(LinearRecurrence rec);

    const LinearRecurrence& recurrence() const;
    /// x_n, extending the stream as needed.
    const RingValue& term(long long n) const;
    /// x_0..x_{n_max} as a vector.
    std::vector<RingValue> prefix(long long n_max) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Direct forward iteration: the oracle against which factorizations are checked.
SolutionStream iterate(const LinearRecurrence& rec, long long n_max);

struct UnitaryCheck {
    bool unitary = false;
    long long fails_at = -1;
    ElementClass classification = ElementClass::Undecidable;
};

/// Checks classify_element of every term x_0..x_{up_to}. Undecidable sampled
/// terms are accepted when every sample clears the zero tolerance.
UnitaryCheck is_unitary_solution(const LinearRecurrence& rec, long long up_to);

/// Cor. cp: positive solutions over float rings. Verifies pointwise that all
/// coefficient samples are >= 0, that some coefficient is strictly positive at
/// each step, and that the produced terms stay strictly positive.
SolutionStream positive_unitary_solution(const LinearRecurrence& rec, long long horizon);

/// One branch of a nonrecursive enumeration: terms t_1..t_horizon.
struct NonrecursiveBranches {
    std::vector<std::vector<RingValue>> sequences;
    bool truncated = false;
    /// Set when c is a unit: the enumeration collapses to t_{n+1} = m * t_n.
    std::optional<RingValue> recursive_multiplier;
};

/// All sequences (t_1..t_horizon) with c*t_{n+1} + d*t_n = 0, by per-step
/// exhaustive solve over a finite ring. t1 fixes the first term when given.
NonrecursiveBranches enumerate_nonrecursive(const RingValue& c, const RingValue& d,
                                            long long horizon,
                                            std::optional<RingValue> t1 = std::nullopt,
                                            std::size_t cap = 1000000);

/// x_{n+1} = alpha(n+1) * x_n + t_{n+1}, where t[m] holds t_{m+1}.
std::vector<RingValue> cofactor_reconstruct(const std::vector<RingValue>& t_seq,
                                            const std::function<RingValue(long long)>& alpha,
                                            const RingValue& x0, long long horizon);

} // namespace scfact
