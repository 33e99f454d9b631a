#pragma once

#include "scfact/eigenseq.hpp"

namespace scfact {

/// Semiconjugate factorization of x_{n+1} = sum_j a_{j,n} x_{n-j} + b_n into
///   factor:   t_{n+1} = sum_{m=0}^{k-1} a'_{m,n} t_{n-m} + b_n   (order k)
///   cofactor: x_{n+1} = alpha_{n+1} x_n + t_{n+1}
/// with t_{m+1} = x_{m+1} - alpha_{m+1} x_m and
/// a'_{m,n} = -sum_{i=m+1}^k a_{i,n} (prod_{j=m+1}^i alpha_{n-j+1})^{-1}.
///
/// The factor is stored as a LinearRecurrence over a shifted internal index:
/// its term at engine index nu is t_{nu+1}; its initials are t_1..t_k.
/// A k=0 original degenerates to factor == nullopt (t_{n+1} = b_n).
struct ScFactorization {
    LinearRecurrence original;
    Eigensequence alpha;
    std::optional<LinearRecurrence> factor;
    std::vector<RingValue> t_initials; // t_1..t_k

    /// a'_{m,n} as constructed (m in [0, k-1], n >= k).
    RingValue factor_coeff(long long m, long long n) const;
};

/// Verifies alpha against the multiplier equation
/// alpha_{n+1} = a_{0,n} + sum_{j=1}^k a_{j,n} (prod_{i=0}^{j-1} alpha_{n-i})^{-1}
/// at the given index; throws NotAnEigensequence on nonzero residual.
void verify_multiplier(const LinearRecurrence& rec, const Eigensequence& alpha, long long n);

/// Theorem-level factorization; verifies alpha at the first fired index and
/// lazily at every index consumed later.
ScFactorization sc_factorize(const LinearRecurrence& rec, const Eigensequence& alpha);

/// Solve factor then cofactor; returns x_0..x_horizon. Always cross-checked
/// against direct iteration (VerificationFailure on mismatch) and verifies the
/// multiplier residual at every index used.
std::vector<RingValue> solve_via_factorization(const ScFactorization& f, long long horizon);

/// Cascade of factorizations down to a first-order factor equation.
/// stages[0] factorizes the original; stages[i] factorizes stages[i-1].factor.
struct TriangularSystem {
    LinearRecurrence original;
    std::vector<ScFactorization> stages; // k stages for an order-k+1 original
};

/// Constant-coefficient cascade: picks unit eigenvalues (or, on finite rings,
/// unit-seeded eigensequences) per stage with backtracking. Supplied
/// eigensequences are used for the leading stages when given.
TriangularSystem cascade_factorize(const LinearRecurrence& rec,
                                   const std::vector<Eigensequence>& supplied = {});

/// Bottom-up solve of the cascade; returns x_0..x_horizon, oracle-checked.
std::vector<RingValue> solve_triangular(const TriangularSystem& sys, long long horizon);

/// Corollary-of-vanishing-coefficient shortcut for homogeneous order-2:
/// when a_{1,m} = 0, x_n = r_n r_{n-1} ... r_{m+1} x_m for n >= m+1.
std::vector<RingValue> b0_product_solution(const LinearRecurrence& rec,
                                           const Eigensequence& alpha, long long m,
                                           long long horizon);

/// Identity-free split of x_{n+1} = (a+b) x_n - a b x_{n-1} + c_n into
/// t_{n+1} = a t_n + c_n and x_{n+1} = b x_n + t_{n+1}. Works in any ring:
/// no inverses or multiplicative identity involved.
struct SplitAB {
    LinearRecurrence original;
    std::vector<RingValue> t; // t[m] = t_{m+1}
    std::vector<RingValue> x; // x_0..x_horizon
};

SplitAB split_ab(const RingValue& a, const RingValue& b, const CoefficientSequence& c,
                 const RingValue& x0, const RingValue& x1, long long horizon);

} // namespace scfact
