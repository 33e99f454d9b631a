#include "scfact/closed_form.hpp"

#include <cmath>

namespace scfact {

namespace {

void require_same_ring(const RingValue& x, const RingValue& y) {
    if (x.ring() != y.ring()) throw DescriptorMismatch("closed-form inputs use different rings");
}

double conjugate_point(double f, double g, double x0, double x1, long long n) {
    double disc = f * f + 4.0 * g;
    if (!(disc < 0.0))
        throw WrongRegion("f^2 + 4g = " + format_double(disc) +
                          " is not negative; no conjugate pair");
    double rho = std::sqrt(-g);
    double theta = std::acos(f / (2.0 * rho));
    double c = (2.0 * x1 - f * x0) / std::sqrt(-disc);
    return std::pow(rho, static_cast<double>(n)) *
           (x0 * std::cos(n * theta) + c * std::sin(n * theta));
}

/// Forward iteration of x_{n+1} = f x_n + g x_{n-1} in doubles.
double iterate_order2(double f, double g, double x0, double x1, long long n) {
    if (n == 0) return x0;
    double prev = x0, cur = x1;
    for (long long m = 1; m < n; ++m) {
        double next = f * cur + g * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// u_0..u_{n_max} for u_{m+1} = (2m/s) u_m + u_{m-1}, u_0 = u_1 = 1.
std::vector<double> bessel_u(double s, long long n_max) {
    std::vector<double> u{1.0, 1.0};
    for (long long m = 1; m < n_max; ++m)
        u.push_back((2.0 * m / s) * u[static_cast<std::size_t>(m)] +
                    u[static_cast<std::size_t>(m - 1)]);
    return u;
}

} // namespace

RingValue solve_order2_ring(const RingValue& a, const RingValue& b, const RingValue& x0,
                            const RingValue& x1, long long n) {
    require_same_ring(a, b);
    require_same_ring(a, x0);
    require_same_ring(a, x1);
    if (n < 0) throw Error("negative index");
    if (n == 0) return x0;
    if (n == 1) return x1;
    RingValue t1 = ring_sub(x1, ring_mul(b, x0));
    // a^{n-1} + b^{n-1} + sum_{i=2}^{n-1} b^{n-i} a^{i-1}
    RingValue coeff = ring_add(ring_pow(a, n - 1), ring_pow(b, n - 1));
    for (long long i = 2; i <= n - 1; ++i)
        coeff = ring_add(coeff, ring_mul(ring_pow(b, n - i), ring_pow(a, i - 1)));
    return ring_add(ring_mul(ring_pow(b, n), x0), ring_mul(coeff, t1));
}

RingValue solve_order2_field(const RingValue& a, const RingValue& b, const RingValue& x0,
                             const RingValue& x1, long long n) {
    require_same_ring(a, b);
    require_same_ring(a, x0);
    require_same_ring(a, x1);
    if (n < 0) throw Error("negative index");
    if (n == 0) return x0;
    if (n == 1) return x1;
    if (values_equal(a, b)) {
        // [n x_1 - (n-1) b x_0] b^{n-1}
        const RingDescriptor& ring = a.ring();
        RingValue inner = ring_sub(ring_mul(from_int(ring, n), x1),
                                   ring_mul(from_int(ring, n - 1), ring_mul(b, x0)));
        return ring_mul(inner, ring_pow(b, n - 1));
    }
    RingValue inv = ring_inverse(ring_sub(a, b));
    RingValue c1 = ring_mul(ring_sub(x1, ring_mul(b, x0)), inv);
    RingValue c2 = ring_mul(ring_sub(ring_mul(a, x0), x1), inv);
    return ring_add(ring_mul(c1, ring_pow(a, n)), ring_mul(c2, ring_pow(b, n)));
}

double solve_order2_conjugate(double f, double g, double x0, double x1, long long n) {
    return conjugate_point(f, g, x0, x1, n);
}

RingValue solve_order2_conjugate(const RingValue& f, const RingValue& g, const RingValue& x0,
                                 const RingValue& x1, long long n) {
    require_same_ring(f, g);
    require_same_ring(f, x0);
    require_same_ring(f, x1);
    const RingDescriptor& ring = f.ring();
    if (ring.kind() == RingKind::RealFloat)
        return RingValue::make_real(
            ring, conjugate_point(f.as_real(), g.as_real(), x0.as_real(), x1.as_real(), n));
    if (ring.kind() != RingKind::Sampled)
        throw TypeError("conjugate-pair closed form needs a float ring");
    std::vector<double> out;
    for (std::size_t i = 0; i < ring.grid().size(); ++i)
        out.push_back(conjugate_point(f.as_samples()[i], g.as_samples()[i], x0.as_samples()[i],
                                      x1.as_samples()[i], n));
    return RingValue::make_samples(ring, std::move(out));
}

double chebyshev_T(double s, long long n) {
    if (s == 1.0) return 1.0;
    if (s == -1.0) return (n % 2 == 0) ? 1.0 : -1.0;
    if (s < -1.0) return (n % 2 == 0 ? 1.0 : -1.0) * chebyshev_T(-s, n);
    if (s > 1.0) {
        double w = std::sqrt(s * s - 1.0);
        return 0.5 * (std::pow(s + w, static_cast<double>(n)) +
                      std::pow(s - w, static_cast<double>(n)));
    }
    return std::cos(n * std::acos(s));
}

RingValue bessel_general_solution(const RingValue& x0, const RingValue& x1,
                                  const SolutionStream& u, long long n) {
    const RingDescriptor& ring = u.recurrence().ring();
    if (x0.ring() != ring || x1.ring() != ring)
        throw GridMismatch("initial values and unitary solution use different rings");
    if (n < 0) throw Error("negative index");
    if (n == 0) return x0;
    if (n == 1) return x1;
    // t_1 = x_1 - (u_1/u_0) x_0, then t_{m+1} = -(u_{m-1}/u_m) t_m
    RingValue t1 = ring_sub(x1, ring_mul(ring_div(u.term(1), u.term(0)), x0));
    std::vector<RingValue> t{t1}; // t[m] = t_{m+1}
    for (long long m = 1; m < n; ++m)
        t.push_back(ring_neg(ring_mul(ring_div(u.term(m - 1), u.term(m)), t.back())));
    auto alpha = [&](long long m) { return ring_div(u.term(m), u.term(m - 1)); };
    return cofactor_reconstruct(t, alpha, x0, n).back();
}

FormulaAudit paper_formula_audit(const std::string& case_name,
                                 const std::vector<double>& params, long long n) {
    FormulaAudit out;
    out.case_name = case_name;

    if (case_name == "cxf") {
        if (params.size() != 4) throw Error("cxf expects params {f, g, x0, x1}");
        double f = params[0], g = params[1], x0 = params[2], x1 = params[3];
        double disc = f * f + 4.0 * g;
        if (!(disc < 0.0)) throw WrongRegion("cxf audit needs f^2 + 4g < 0");
        out.oracle = iterate_order2(f, g, x0, x1, n);
        out.corrected = conjugate_point(f, g, x0, x1, n);
        double theta = std::acos(f / (2.0 * std::sqrt(-g)));
        out.paper_printed = std::pow(std::sqrt(-g), static_cast<double>(n)) *
                            (x0 * std::cos(n * theta) +
                             (f * x0 - 2.0 * x1) / disc * std::sin(n * theta));
    } else if (case_name == "cbf") {
        if (params.size() != 3) throw Error("cbf expects params {s, x0, x1}");
        double s = params[0], x0 = params[1], x1 = params[2];
        if (!(std::fabs(s) < 1.0)) throw WrongRegion("cbf audit needs |s| < 1");
        out.oracle = iterate_order2(2.0 * s, -1.0, x0, x1, n);
        double theta = std::acos(s);
        out.corrected = x0 * std::cos(n * theta) +
                        (x1 - s * x0) / std::sqrt(1.0 - s * s) * std::sin(n * theta);
        out.paper_printed = x0 * std::cos(n * theta) +
                            (s * x0 - x1) / (s * s - 1.0) * std::sin(n * theta);
    } else if (case_name == "mof-u4") {
        if (params.size() != 1) throw Error("mof-u4 expects params {s}");
        double s = params[0];
        out.oracle = bessel_u(s, 4).back();
        out.corrected = 48.0 / (s * s * s) + 24.0 / (s * s) + 8.0 / s + 1.0;
        out.paper_printed = 48.0 / (s * s * s) + 24.0 / (s * s) + 2.0 / s + 1.0;
    } else if (case_name == "mof-sum") {
        if (params.size() != 3) throw Error("mof-sum expects params {s, x0, x1}");
        double s = params[0], x0 = params[1], x1 = params[2];
        if (n < 1) throw Error("mof-sum needs n >= 1");
        auto u = bessel_u(s, n);
        auto xm = [&](long long m) { // iterate x_{m+1} = (2m/s) x_m + x_{m-1}
            double prev = x0, cur = x1;
            for (long long j = 1; j < m; ++j) {
                double next = (2.0 * j / s) * cur + prev;
                prev = cur;
                cur = next;
            }
            return m == 0 ? x0 : cur;
        };
        out.oracle = xm(n);
        double t1 = x1 - x0; // u_0 = u_1 = 1
        auto with_limit = [&](long long top) {
            double sum = 0.0;
            for (long long i = 1; i <= top; ++i)
                sum += (i % 2 == 1 ? 1.0 : -1.0) /
                       (u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i - 1)]);
            return u[static_cast<std::size_t>(n)] * (x0 + t1 * sum);
        };
        out.corrected = with_limit(n);
        out.paper_printed = with_limit(n - 1);
    } else {
        throw Error("unknown audit case: " + case_name);
    }

    out.corrected_deviation = std::fabs(out.corrected - out.oracle);
    out.paper_deviation = std::fabs(out.paper_printed - out.oracle);
    return out;
}

} // namespace scfact
