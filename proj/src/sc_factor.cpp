#include "scfact/sc_factor.hpp"

namespace scfact {

namespace {

RingValue multiplier_residual(const LinearRecurrence& rec, const Eigensequence& alpha,
                              long long n) {
    long long k = rec.k();
    RingValue rhs = rec.coeff(0, n);
    RingValue prod = ring_one(rec.ring());
    for (long long j = 1; j <= k; ++j) {
        prod = ring_mul(prod, alpha.term(n - j + 1)); // prod_{i=0}^{j-1} alpha_{n-i}
        rhs = ring_add(rhs, ring_mul(rec.coeff(static_cast<std::size_t>(j), n),
                                     ring_inverse(prod)));
    }
    return ring_sub(alpha.term(n + 1), rhs);
}

RingValue factor_coeff_impl(const LinearRecurrence& rec, const Eigensequence& alpha,
                            long long m, long long n) {
    long long k = rec.k();
    RingValue acc = ring_zero(rec.ring());
    RingValue prod = ring_one(rec.ring());
    for (long long i = m + 1; i <= k; ++i) {
        prod = ring_mul(prod, alpha.term(n - i + 1)); // prod_{j=m+1}^{i} alpha_{n-j+1}
        acc = ring_add(acc, ring_mul(rec.coeff(static_cast<std::size_t>(i), n),
                                     ring_inverse(prod)));
    }
    return ring_neg(acc);
}

} // namespace

void verify_multiplier(const LinearRecurrence& rec, const Eigensequence& alpha, long long n) {
    RingValue res;
    try {
        res = multiplier_residual(rec, alpha, n);
    } catch (const NotAUnit& e) {
        throw NonUnitTerm(std::string("multiplier term not invertible: ") + e.what(), n);
    }
    if (!is_zero(res))
        throw NotAnEigensequence("multiplier fails the eigensequence equation", n);
}

RingValue ScFactorization::factor_coeff(long long m, long long n) const {
    return factor_coeff_impl(original, alpha, m, n);
}

ScFactorization sc_factorize(const LinearRecurrence& rec, const Eigensequence& alpha) {
    if (alpha.ring() != rec.ring())
        throw DescriptorMismatch("eigensequence ring differs from recurrence ring");
    long long k = rec.k();

    ScFactorization f{rec, alpha, std::nullopt, {}};

    // t_{m+1} = x_{m+1} - alpha_{m+1} x_m for m = 0..k-1
    for (long long m = 0; m < k; ++m)
        f.t_initials.push_back(
            ring_sub(rec.initials()[static_cast<std::size_t>(m + 1)],
                     ring_mul(alpha.term(m + 1), rec.initials()[static_cast<std::size_t>(m)])));

    verify_multiplier(rec, alpha, k); // fail fast at the first fired index

    if (k == 0) return f; // degenerate: t_{n+1} = b_n, cofactor is the original

    // constant coefficients + constant multiplier give constant a'_{m,n};
    // fold them so downstream stages can keep using eigenvalue search
    bool fold = rec.constant_coefficients() &&
                alpha.source() == Eigensequence::Source::Eigenvalue;
    std::vector<CoefficientSequence> coeffs;
    for (long long m = 0; m < k; ++m) {
        if (fold)
            coeffs.push_back(
                CoefficientSequence::constant(factor_coeff_impl(rec, alpha, m, k + 1)));
        else
            coeffs.push_back(CoefficientSequence::callback(
                rec.ring(), [rec, alpha, m](long long nu) {
                    return factor_coeff_impl(rec, alpha, m, nu + 1);
                }));
    }
    CoefficientSequence forcing =
        rec.forcing().kind() == CoefficientSequence::Kind::Constant
            ? rec.forcing()
            : CoefficientSequence::callback(
                  rec.ring(), [rec](long long nu) { return rec.forcing().eval(nu + 1); });
    f.factor = LinearRecurrence(rec.ring(), std::move(coeffs), std::move(forcing),
                                f.t_initials);
    return f;
}

std::vector<RingValue> solve_via_factorization(const ScFactorization& f, long long horizon) {
    const LinearRecurrence& rec = f.original;
    long long k = rec.k();

    std::optional<SolutionStream> t_stream;
    if (f.factor) t_stream.emplace(*f.factor);

    auto t_at = [&](long long n) { // t_{n+1}
        if (t_stream) return t_stream->term(n);
        return rec.forcing().eval(n); // k = 0: t_{n+1} = b_n
    };

    std::vector<RingValue> x{rec.initials()[0]};
    for (long long n = 0; n < horizon; ++n) {
        if (n >= k) verify_multiplier(rec, f.alpha, n);
        x.push_back(ring_add(ring_mul(f.alpha.term(n + 1), x.back()), t_at(n)));
    }

    SolutionStream oracle = iterate(rec, horizon);
    for (long long n = 0; n <= horizon; ++n)
        if (!values_equal(x[static_cast<std::size_t>(n)], oracle.term(n)))
            throw VerificationFailure("factorized solution diverges from direct iteration at n=" +
                                      std::to_string(n));
    return x;
}

namespace {

// Candidate eigensequences for one cascade stage, best-first.
std::vector<Eigensequence> stage_candidates(const LinearRecurrence& rec) {
    std::vector<Eigensequence> out;
    if (rec.constant_coefficients()) {
        auto ev = eigenvalues_constant(rec);
        for (const auto& v : ev.values)
            if (classify_element(v) == ElementClass::Unit)
                out.push_back(Eigensequence::eigenvalue(v));
    }
    if (out.empty() && rec.ring().finite() && rec.k() == 1) {
        // unit-seeded search: a seed certifies within |R| + 1 steps or not at all
        long long probe = static_cast<long long>(rec.ring().kind() == RingKind::Modular
                                                     ? rec.ring().modulus()
                                                     : (1LL << rec.ring().universe_size())) +
                          1;
        for (const auto& u : all_elements(rec.ring())) {
            if (classify_element(u) != ElementClass::Unit) continue;
            Eigensequence e = Eigensequence::from_seed(rec, {u});
            try {
                e.prefix(probe);
            } catch (const NonUnitTerm&) {
                continue;
            }
            out.push_back(e);
        }
    }
    return out;
}

bool cascade_build(const LinearRecurrence& rec, const std::vector<Eigensequence>& supplied,
                   std::size_t depth, std::vector<ScFactorization>& stages,
                   std::string& last_error) {
    if (rec.order() <= 1) return true; // first-order: solved directly

    std::vector<Eigensequence> candidates;
    if (depth < supplied.size()) candidates.push_back(supplied[depth]);
    else candidates = stage_candidates(rec);
    if (candidates.empty()) {
        last_error = "no unitary eigensequence found";
        return false;
    }

    for (const auto& alpha : candidates) {
        ScFactorization f{rec, alpha, std::nullopt, {}};
        try {
            f = sc_factorize(rec, alpha);
        } catch (const Error& e) {
            last_error = e.what();
            continue;
        }
        stages.push_back(f);
        if (!f.factor) return true;
        // probe: the factor must itself be solvable further down
        if (cascade_build(*f.factor, supplied, depth + 1, stages, last_error)) return true;
        stages.pop_back();
    }
    return false;
}

} // namespace

TriangularSystem cascade_factorize(const LinearRecurrence& rec,
                                   const std::vector<Eigensequence>& supplied) {
    TriangularSystem sys{rec, {}};
    std::string last_error = "order-1 equation needs no factorization";
    if (!cascade_build(rec, supplied, 0, sys.stages, last_error))
        throw StageFailed(last_error, static_cast<int>(sys.stages.size()) + 1);
    return sys;
}

std::vector<RingValue> solve_triangular(const TriangularSystem& sys, long long horizon) {
    std::vector<RingValue> cur;
    if (sys.stages.empty()) {
        cur = iterate(sys.original, horizon).prefix(horizon);
    } else {
        const ScFactorization& deepest = sys.stages.back();
        // the deepest factor is first-order; iterate it directly
        if (deepest.factor) cur = iterate(*deepest.factor, horizon).prefix(horizon);
        for (auto it = sys.stages.rbegin(); it != sys.stages.rend(); ++it) {
            const ScFactorization& stage = *it;
            const LinearRecurrence& rec = stage.original;
            std::vector<RingValue> x{rec.initials()[0]};
            for (long long n = 0; n < horizon; ++n) {
                RingValue t = stage.factor ? cur[static_cast<std::size_t>(n)]
                                           : rec.forcing().eval(n);
                x.push_back(ring_add(ring_mul(stage.alpha.term(n + 1), x.back()), t));
            }
            cur = std::move(x);
        }
    }
    SolutionStream oracle = iterate(sys.original, horizon);
    for (long long n = 0; n <= horizon; ++n)
        if (!values_equal(cur[static_cast<std::size_t>(n)], oracle.term(n)))
            throw VerificationFailure("triangular solve diverges from direct iteration at n=" +
                                      std::to_string(n));
    return cur;
}

std::vector<RingValue> b0_product_solution(const LinearRecurrence& rec,
                                           const Eigensequence& alpha, long long m,
                                           long long horizon) {
    if (rec.order() != 2) throw Error("product shortcut applies to order-2 recurrences");
    if (!rec.forcing().is_constant_zero())
        throw Error("product shortcut applies to homogeneous recurrences");
    if (!is_zero(rec.coeff(1, m)))
        throw HypothesisViolated("a_{1,m} does not vanish", m);

    SolutionStream oracle = iterate(rec, horizon);
    std::vector<RingValue> x = oracle.prefix(std::min(m, horizon));
    RingValue acc = x[static_cast<std::size_t>(std::min(m, horizon))]; // x_m
    for (long long n = m + 1; n <= horizon; ++n) {
        acc = ring_mul(alpha.term(n), acc);
        x.push_back(acc);
        if (!values_equal(acc, oracle.term(n)))
            throw VerificationFailure("product formula diverges from direct iteration at n=" +
                                      std::to_string(n));
    }
    return x;
}

SplitAB split_ab(const RingValue& a, const RingValue& b, const CoefficientSequence& c,
                 const RingValue& x0, const RingValue& x1, long long horizon) {
    const RingDescriptor& ring = a.ring();
    LinearRecurrence original(
        ring,
        {CoefficientSequence::constant(ring_add(a, b)),
         CoefficientSequence::constant(ring_neg(ring_mul(a, b)))},
        c, {x0, x1});

    SplitAB out{original, {}, {}};
    out.t.push_back(ring_sub(x1, ring_mul(b, x0))); // t_1
    for (long long n = 1; n < horizon; ++n)
        out.t.push_back(ring_add(ring_mul(a, out.t.back()), c.eval(n))); // t_{n+1}

    out.x.push_back(x0);
    for (long long n = 0; n < horizon; ++n)
        out.x.push_back(ring_add(ring_mul(b, out.x.back()),
                                 out.t[static_cast<std::size_t>(n)]));

    SolutionStream oracle = iterate(original, horizon);
    for (long long n = 0; n <= horizon; ++n)
        if (!values_equal(out.x[static_cast<std::size_t>(n)], oracle.term(n)))
            throw VerificationFailure("split solution diverges from direct iteration at n=" +
                                      std::to_string(n));
    return out;
}

} // namespace scfact
