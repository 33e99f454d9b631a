#include "scfact/periodic.hpp"

#include <numeric>

namespace scfact {

namespace {

long long declared_period(const CoefficientSequence& s) {
    switch (s.kind()) {
    case CoefficientSequence::Kind::Constant: return 1;
    case CoefficientSequence::Kind::Periodic: return s.period();
    default:
        throw Error("periodic search requires Periodic or Constant coefficients");
    }
}

RingValue lift_value(const RingValue& v, const RingDescriptor& ext) {
    if (v.ring().kind() == RingKind::Rational)
        return RingValue::make_quadratic(ext, v.as_rational(), BigRat(0));
    throw Error("only rational coefficients can be lifted into a quadratic extension");
}

CoefficientSequence lift_seq(const CoefficientSequence& s, const RingDescriptor& ext) {
    if (s.kind() == CoefficientSequence::Kind::Constant)
        return CoefficientSequence::constant(lift_value(s.tail(), ext));
    std::vector<RingValue> vals;
    for (const auto& v : s.values()) vals.push_back(lift_value(v, ext));
    return CoefficientSequence::periodic(std::move(vals), s.offset());
}

PeriodicSearchResult verify_root(const CoefficientSequence& a, const CoefficientSequence& b,
                                 const AlphaBetaTable& table, const RingValue& r1) {
    const RingDescriptor& ring = r1.ring();
    long long p = table.p;
    PeriodicSearchResult res{r1, {r1}, false, false, false, "", {}, false};

    // generate r_{j+1} = a_j + b_j r_j^{-1} for j = 1..p; the p+1-th term
    // decides closure
    RingValue next = r1;
    for (long long j = 1; j <= p; ++j) {
        RingValue inv;
        try {
            inv = ring_inverse(res.terms.back());
        } catch (const NotAUnit& e) {
            res.failure = "term r_" + std::to_string(j) + " is not a unit (" +
                          std::string(e.witness()) + ")";
            return res;
        }
        next = ring_add(a.eval(j), ring_mul(b.eval(j), inv));
        if (j < p) res.terms.push_back(next);
    }
    res.closes = values_equal(next, r1);

    res.unitary = true;
    for (const auto& t : res.terms)
        if (classify_element(t) != ElementClass::Unit) res.unitary = false;

    // residual of the characteristic equation at every phase (periodic wrap)
    bool residual_ok = true;
    if (res.unitary) {
        auto term_at = [&](long long n) { // r_n with period p, n >= 1
            return res.terms[static_cast<std::size_t>((n - 1) % p)];
        };
        for (long long n = 1; n <= p && residual_ok; ++n) {
            // r_{n+1} r_n - a_n r_n - b_n
            RingValue resid = ring_sub(
                ring_sub(ring_mul(term_at(n + 1), term_at(n)),
                         ring_mul(a.eval(n), term_at(n))),
                b.eval(n));
            residual_ok = is_zero(resid);
        }
    }
    res.success = res.closes && res.unitary && residual_ok;
    if (!res.success && res.failure.empty()) {
        if (!res.closes) res.failure = "period does not close (r_{p+1} != r_1)";
        else if (!res.unitary) res.failure = "eigensequence exists but contains a non-unit";
        else res.failure = "characteristic residual nonzero";
    }

    // L-witness: L_j = alpha_j r_1 + beta_j, with (r_1 - a_p) L_p = b_p L_{p-1}
    for (long long j = 0; j <= p; ++j)
        res.l_witness.push_back(ring_add(
            ring_mul(table.alpha[static_cast<std::size_t>(j)], r1),
            table.beta[static_cast<std::size_t>(j)]));
    res.l_witness_ok = values_equal(
        ring_mul(ring_sub(r1, a.eval(p)), res.l_witness[static_cast<std::size_t>(p)]),
        ring_mul(b.eval(p), res.l_witness[static_cast<std::size_t>(p - 1)]));
    return res;
}

} // namespace

AlphaBetaTable alpha_beta(const CoefficientSequence& a, const CoefficientSequence& b) {
    if (a.ring() != b.ring()) throw DescriptorMismatch("coefficient rings differ");
    const RingDescriptor& ring = a.ring();
    AlphaBetaTable t;
    t.p = std::lcm(declared_period(a), declared_period(b));
    t.alpha = {ring_zero(ring), ring_one(ring)};
    t.beta = {ring_one(ring), ring_zero(ring)};
    for (long long j = 1; j <= t.p; ++j) {
        auto step = [&](const std::vector<RingValue>& col) {
            return ring_add(ring_mul(a.eval(j), col[static_cast<std::size_t>(j)]),
                            ring_mul(b.eval(j), col[static_cast<std::size_t>(j - 1)]));
        };
        t.alpha.push_back(step(t.alpha));
        t.beta.push_back(step(t.beta));
    }
    return t;
}

PeriodicQuadratic periodic_quadratic(const AlphaBetaTable& t) {
    std::size_t p = static_cast<std::size_t>(t.p);
    return {t.alpha[p], ring_sub(t.beta[p], t.alpha[p + 1]), ring_neg(t.beta[p + 1])};
}

PeriodicSearch find_periodic_eigenseq(const CoefficientSequence& a,
                                      const CoefficientSequence& b) {
    PeriodicSearch out{alpha_beta(a, b), {ring_zero(a.ring()), ring_zero(a.ring()),
                                          ring_zero(a.ring())},
                       false, std::nullopt, {}};
    out.quadratic = periodic_quadratic(out.table);
    const RingDescriptor& ring = a.ring();

    std::vector<RingValue> roots;
    CoefficientSequence va = a, vb = b; // verification sequences (maybe lifted)
    AlphaBetaTable vtable = out.table;

    if (ring.finite()) {
        roots = brute_force_roots(ring, {out.quadratic.a0, out.quadratic.a1, out.quadratic.a2});
    } else {
        RootResult rr = quadratic_roots(out.quadratic.a2, out.quadratic.a1, out.quadratic.a0);
        switch (rr.tag) {
        case RootResult::Tag::TwoRoots:
        case RootResult::Tag::DoubleRoot:
        case RootResult::Tag::DegenerateLinear:
            roots = rr.roots;
            break;
        case RootResult::Tag::ExtensionRoots: {
            out.extension = rr.extension;
            roots = rr.roots;
            va = lift_seq(a, *rr.extension);
            vb = lift_seq(b, *rr.extension);
            vtable = alpha_beta(va, vb);
            break;
        }
        case RootResult::Tag::Inconsistent:
        case RootResult::Tag::AllElements:
            out.degenerate = true;
            return out;
        default:
            return out; // no representable roots
        }
    }

    for (const auto& r1 : roots) out.results.push_back(verify_root(va, vb, vtable, r1));
    std::stable_sort(out.results.begin(), out.results.end(),
                     [](const PeriodicSearchResult& x, const PeriodicSearchResult& y) {
                         return x.success > y.success;
                     });
    return out;
}

} // namespace scfact
