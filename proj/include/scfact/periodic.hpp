#pragma once

#include "scfact/sc_factor.hpp"

namespace scfact {

/// Companion table for x_{n+1} = a_n x_n + b_n x_{n-1} with periodic a, b:
/// both columns satisfy the recurrence with initial rows
/// (alpha_0, beta_0) = (0, 1), (alpha_1, beta_1) = (1, 0).
struct AlphaBetaTable {
    long long p; // lcm of the declared coefficient periods
    std::vector<RingValue> alpha; // alpha_0..alpha_{p+1}
    std::vector<RingValue> beta;  // beta_0..beta_{p+1}
};

/// a, b must be Periodic or Constant; j-indexing matches the sequences' own
/// convention (tables built with offset 1 evaluate a_1..a_p across one period).
AlphaBetaTable alpha_beta(const CoefficientSequence& a, const CoefficientSequence& b);

/// Coefficients (alpha_p, beta_p - alpha_{p+1}, -beta_{p+1}) of the
/// commutative period-closure quadratic alpha_p r^2 + (beta_p - alpha_{p+1}) r
/// - beta_{p+1} = 0.
struct PeriodicQuadratic {
    RingValue a2, a1, a0;
};

PeriodicQuadratic periodic_quadratic(const AlphaBetaTable& t);

/// One candidate root's verification record.
struct PeriodicSearchResult {
    RingValue r1;
    std::vector<RingValue> terms;  // r_1..r_p generated by r_{j+1} = a_j + b_j / r_j
    bool closes = false;           // r_{p+1} == r_1
    bool unitary = false;          // every term a unit
    bool success = false;          // closes && unitary && residual == 0 on a period
    std::string failure;           // first failed step, when not success
    std::vector<RingValue> l_witness; // L_j = alpha_j r1 + beta_j, j = 0..p
    bool l_witness_ok = false;     // (r1 - a_p) L_p == b_p L_{p-1}
};

struct PeriodicSearch {
    AlphaBetaTable table;
    PeriodicQuadratic quadratic;
    bool degenerate = false;       // quadratic has no leading/linear part
    std::optional<RingDescriptor> extension; // when roots needed QuadraticExt
    std::vector<PeriodicSearchResult> results; // Success-first
};

/// Theorem-of-periodic-coefficients search for period-p eigensequences of an
/// order-2 recurrence x_{n+1} = a_n x_n + b_n x_{n-1}. Roots come from
/// exhaustion on finite rings and the quadratic formula on Q (upgrading the
/// working ring to QuadraticExt when the discriminant is not a square; all
/// verification then runs in the extension).
PeriodicSearch find_periodic_eigenseq(const CoefficientSequence& a,
                                      const CoefficientSequence& b);

} // namespace scfact
