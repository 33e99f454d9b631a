#pragma once

#include "scfact/recurrence.hpp"

namespace scfact {

/// A solution {r_n} (terms indexed from 1) of the characteristic equation of
/// the homogeneous part of a LinearRecurrence. Lazily extended; copies share
/// the computed prefix.
class Eigensequence {
public:
    enum class Source { Seeded, Extracted, Eigenvalue, UserSupplied };

    /// Generate from k seed values r_1..r_k via
    /// r_{n+1} = a_{0,n} + sum_{j=1}^k a_{j,n} (prod_{i=0}^{j-1} r_{n-i})^{-1}.
    static Eigensequence from_seed(const LinearRecurrence& rec, std::vector<RingValue> seeds);

    /// Ratio extraction r_n = x_n * x_{n-1}^{-1} from a unitary solution.
    /// side "left" gives x_{n-1}^{-1} * x_n; identical on commutative rings.
    enum class Side { Right, Left };
    static Eigensequence from_unitary(const SolutionStream& solution, Side side = Side::Right);

    /// Constant eigensequence (an eigenvalue).
    static Eigensequence eigenvalue(const RingValue& value);

    /// Explicit terms r_1..r_m; periodic repeats them, otherwise indexes past
    /// the list are an error.
    static Eigensequence user_supplied(std::vector<RingValue> terms, bool periodic);

    Source source() const;
    const RingDescriptor& ring() const;
    /// r_n for n >= 1. Throws NonUnitTerm when generation needs the inverse of
    /// a non-unit.
    RingValue term(long long n) const;
    std::vector<RingValue> prefix(long long n_max) const; // r_1..r_n_max

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Left side of the inversion-free characteristic equation at index n:
///   prod_{i=0}^k r_{n-i+1} - sum_{j=0}^{k-1} a_{j,n} prod_{i=j}^{k-1} r_{n-i} - a_{k,n}
/// window holds (r_{n-k+1}, ..., r_{n+1}) ascending, k+1 = rec order values.
RingValue char_residual(const LinearRecurrence& rec, const std::vector<RingValue>& window,
                        long long n);

struct EigenClassification {
    enum class Verdict { Unitary, Improper, ProperNonUnitary, Undecidable };
    Verdict verdict;
    long long witness_index = -1; // first non-unit / zero-divisor term
    ElementClass witness_class = ElementClass::Unit;
};

std::string to_string(EigenClassification::Verdict v);

/// Scan r_1..r_{up_to}: any zero-divisor makes it Improper; any zero or
/// non-unit-regular term makes it ProperNonUnitary; all units -> Unitary.
EigenClassification classify_eigenseq(const Eigensequence& e, long long up_to);

struct EigenvalueResult {
    std::vector<RingValue> values;
    bool incomplete = false;
    std::string note;
    std::optional<RingDescriptor> extension; // when roots required QuadraticExt
};

/// Roots of r^{k+1} - a_0 r^k - ... - a_k for a constant-coefficient
/// recurrence: exhaustion on finite rings, quadratic formula for order <= 2,
/// rational-root test (incomplete) for higher orders over Z / Q.
EigenvalueResult eigenvalues_constant(const LinearRecurrence& rec);

struct EquivalenceResult {
    bool equivalent = false;
    RingValue u;                  // y_n = x_n * u when equivalent
    long long divergence_at = -1; // first index with differing ratios
};

/// Lemma-of-ratios check: x, y (terms from index 0) are right equivalent iff
/// their right ratio sequences agree; u = x_0^{-1} y_0.
EquivalenceResult right_equivalent(const std::vector<RingValue>& x,
                                   const std::vector<RingValue>& y, long long up_to);

struct PPReport {
    std::vector<double> limiting_eigenvalues;
    std::vector<double> tail_samples; // r_n over the trailing window
    long long tail_start = 0;
    std::optional<double> converged_to;
    double max_deviation = 0.0; // from converged_to, over the window
    double coefficient_deviation = 0.0; // max |a_j(n) - limit_j| at the tail
};

/// Poincare-Perron behavior of the seeded eigensequence: does its tail stay
/// within tol of an eigenvalue of the limiting constant-coefficient equation?
/// limits holds the limiting constants a_0..a_k; order <= 2 only.
PPReport poincare_perron_check(const LinearRecurrence& rec,
                               const std::vector<RingValue>& seeds,
                               const std::vector<double>& limits, long long horizon,
                               long long tail_window, double tol);

} // namespace scfact
