#pragma once

#include "scfact/recurrence.hpp"

namespace scfact {

/// Closed forms for x_{n+1} = (a+b) x_n - a b x_{n-1} (+ c_n where noted).

/// General-ring form (no inverses):
/// x_n = b^n x_0 + (a^{n-1} + b^{n-1} + sum_{i=2}^{n-1} b^{n-i} a^{i-1}) t_1
/// with t_1 = x_1 - b x_0; valid for n >= 2, n in {0,1} return the initials.
RingValue solve_order2_ring(const RingValue& a, const RingValue& b, const RingValue& x0,
                            const RingValue& x1, long long n);

/// Field form: c_1 a^n + c_2 b^n with c_1 = (x_1 - b x_0)/(a - b),
/// c_2 = (a x_0 - x_1)/(a - b); a = b gives [n x_1 - (n-1) b x_0] b^{n-1}.
RingValue solve_order2_field(const RingValue& a, const RingValue& b, const RingValue& x0,
                             const RingValue& x1, long long n);

/// Conjugate-pair region (f^2 + 4g < 0) for x_{n+1} = f x_n + g x_{n-1}:
/// x_n = (-g)^{n/2} [x_0 cos(n theta) + (2 x_1 - f x_0)/sqrt(-f^2-4g) sin(n theta)],
/// theta = arccos(f / (2 sqrt(-g))). Throws WrongRegion when f^2 + 4g >= 0.
double solve_order2_conjugate(double f, double g, double x0, double x1, long long n);

/// Pointwise over a sampled ring; every grid point must lie in the
/// conjugate-pair region.
RingValue solve_order2_conjugate(const RingValue& f, const RingValue& g, const RingValue& x0,
                                 const RingValue& x1, long long n);

/// Chebyshev polynomial T_n(s): cos(n arccos s) for |s| < 1,
/// (1/2)(s + sqrt(s^2-1))^n + (1/2)(s - sqrt(s^2-1))^n for |s| > 1,
/// and T_n(1) = 1, T_n(-1) = (-1)^n exactly.
double chebyshev_T(double s, long long n);

/// General solution of x_{n+1} = (2n/s) x_n + x_{n-1} on a sampled grid from
/// a positive unitary solution u (u_0 = u_1 = 1 or any positive pair):
/// t-propagation t_m = t_1 prod (-u_{i-1}/u_i), then the cofactor.
RingValue bessel_general_solution(const RingValue& x0, const RingValue& x1,
                                  const SolutionStream& u, long long n);

/// Regression record comparing the direct-iteration oracle with the corrected
/// closed form and with the form as printed in the source text.
struct FormulaAudit {
    std::string case_name;
    double oracle = 0.0;
    double corrected = 0.0;
    double paper_printed = 0.0;
    double corrected_deviation = 0.0;     // |corrected - oracle|
    double paper_deviation = 0.0;         // |paper_printed - oracle|
};

/// case "cxf": params {f, g, x0, x1} — conjugate-pair coefficient typo.
/// case "cbf": params {s, x0, x1} — Chebyshev instance of the same typo.
/// case "mof-u4": params {s} — u_4 coefficient 8/s printed as 2/s.
/// case "mof-sum": params {s, x0, x1} — summation upper limit n printed as n-1.
FormulaAudit paper_formula_audit(const std::string& case_name,
                                 const std::vector<double>& params, long long n);

} // namespace scfact
