#include "scfact/eigenseq.hpp"

#include <cmath>

namespace scfact {

struct Eigensequence::State {
    Source source;
    RingDescriptor ring = RingDescriptor::integers();
    std::vector<RingValue> terms; // terms[i] = r_{i+1}
    bool periodic = false;        // UserSupplied only

    // Seeded
    std::optional<LinearRecurrence> rec;

    // Extracted
    std::optional<SolutionStream> solution;
    Side side = Side::Right;
};

Eigensequence Eigensequence::from_seed(const LinearRecurrence& rec,
                                       std::vector<RingValue> seeds) {
    if (static_cast<long long>(seeds.size()) != rec.k())
        throw Error("seeded eigensequence requires exactly k seed values");
    for (const auto& s : seeds)
        if (classify_element(s) != ElementClass::Unit &&
            classify_element(s) != ElementClass::Undecidable)
            throw NonUnitTerm("seed is not a unit", 1);
    Eigensequence e;
    e.state_ = std::make_shared<State>();
    e.state_->source = Source::Seeded;
    e.state_->ring = rec.ring();
    e.state_->rec = rec.homogeneous();
    e.state_->terms = std::move(seeds);
    return e;
}

Eigensequence Eigensequence::from_unitary(const SolutionStream& solution, Side side) {
    Eigensequence e;
    e.state_ = std::make_shared<State>();
    e.state_->source = Source::Extracted;
    e.state_->ring = solution.recurrence().ring();
    e.state_->solution = solution;
    e.state_->side = side;
    return e;
}

Eigensequence Eigensequence::eigenvalue(const RingValue& value) {
    Eigensequence e;
    e.state_ = std::make_shared<State>();
    e.state_->source = Source::Eigenvalue;
    e.state_->ring = value.ring();
    e.state_->terms = {value};
    return e;
}

Eigensequence Eigensequence::user_supplied(std::vector<RingValue> terms, bool periodic) {
    if (terms.empty()) throw Error("user-supplied eigensequence requires terms");
    Eigensequence e;
    e.state_ = std::make_shared<State>();
    e.state_->source = Source::UserSupplied;
    e.state_->ring = terms.front().ring();
    e.state_->terms = std::move(terms);
    e.state_->periodic = periodic;
    return e;
}

Eigensequence::Source Eigensequence::source() const { return state_->source; }

const RingDescriptor& Eigensequence::ring() const { return state_->ring; }

RingValue Eigensequence::term(long long n) const {
    if (n < 1) throw EvalError("eigensequence terms are indexed from 1");
    State& st = *state_;
    switch (st.source) {
    case Source::Eigenvalue:
        return st.terms[0];
    case Source::UserSupplied: {
        long long m = static_cast<long long>(st.terms.size());
        if (st.periodic) return st.terms[static_cast<std::size_t>((n - 1) % m)];
        if (n > m) throw EvalError("user-supplied eigensequence exhausted at n=" +
                                   std::to_string(n));
        return st.terms[static_cast<std::size_t>(n - 1)];
    }
    case Source::Extracted: {
        long long m = static_cast<long long>(st.terms.size());
        while (m < n) {
            // r_{m+1} = x_{m+1} * x_m^{-1}
            const RingValue& num = st.solution->term(m + 1);
            const RingValue& den = st.solution->term(m);
            RingValue inv;
            try {
                inv = ring_inverse(den);
            } catch (const NotAUnit& err) {
                throw NonUnitTerm(std::string("solution term not a unit: ") + err.what(), m);
            }
            st.terms.push_back(st.side == Side::Right ? ring_mul(num, inv)
                                                      : ring_mul(inv, num));
            ++m;
        }
        return st.terms[static_cast<std::size_t>(n - 1)];
    }
    case Source::Seeded: {
        const LinearRecurrence& rec = *st.rec;
        long long k = rec.k();
        long long m = static_cast<long long>(st.terms.size());
        while (m < n) {
            // generate r_{m+1} from r_{m-k+1}..r_m at index m
            RingValue next = rec.coeff(0, m);
            RingValue prod = ring_one(st.ring); // prod_{i=0}^{j-1} r_{m-i}
            for (long long j = 1; j <= k; ++j) {
                prod = ring_mul(prod, st.terms[static_cast<std::size_t>(m - j)]);
                RingValue inv;
                try {
                    inv = ring_inverse(prod);
                } catch (const NotAUnit&) {
                    throw NonUnitTerm("eigensequence product not invertible", m - j + 1);
                }
                next = ring_add(next, ring_mul(rec.coeff(static_cast<std::size_t>(j), m), inv));
            }
            st.terms.push_back(std::move(next));
            ++m;
        }
        return st.terms[static_cast<std::size_t>(n - 1)];
    }
    }
    throw EvalError("unreachable");
}

std::vector<RingValue> Eigensequence::prefix(long long n_max) const {
    std::vector<RingValue> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (long long n = 1; n <= n_max; ++n) out.push_back(term(n));
    return out;
}

RingValue char_residual(const LinearRecurrence& rec, const std::vector<RingValue>& window,
                        long long n) {
    long long k = rec.k();
    if (static_cast<long long>(window.size()) != k + 1)
        throw Error("characteristic residual needs a window of k+1 terms");
    // window[idx] = r_{n-k+1+idx}; window.back() = r_{n+1}
    auto r = [&](long long index) -> const RingValue& {
        return window[static_cast<std::size_t>(index - (n - k + 1))];
    };
    RingValue lead = ring_one(rec.ring());
    for (long long i = 0; i <= k; ++i) lead = ring_mul(lead, r(n - i + 1));
    RingValue acc = lead;
    for (long long j = 0; j <= k - 1; ++j) {
        RingValue prod = ring_one(rec.ring());
        for (long long i = j; i <= k - 1; ++i) prod = ring_mul(prod, r(n - i));
        acc = ring_sub(acc, ring_mul(rec.coeff(static_cast<std::size_t>(j), n), prod));
    }
    return ring_sub(acc, rec.coeff(static_cast<std::size_t>(k), n));
}

std::string to_string(EigenClassification::Verdict v) {
    switch (v) {
    case EigenClassification::Verdict::Unitary: return "unitary";
    case EigenClassification::Verdict::Improper: return "improper";
    case EigenClassification::Verdict::ProperNonUnitary: return "proper_non_unitary";
    case EigenClassification::Verdict::Undecidable: return "undecidable";
    }
    return "?";
}

EigenClassification classify_eigenseq(const Eigensequence& e, long long up_to) {
    EigenClassification out{EigenClassification::Verdict::Unitary, -1, ElementClass::Unit};
    bool any_undecidable = false;
    for (long long n = 1; n <= up_to; ++n) {
        ElementClass c = classify_element(e.term(n));
        if (c == ElementClass::ZeroDivisor)
            return {EigenClassification::Verdict::Improper, n, c};
        if (c == ElementClass::Undecidable) {
            any_undecidable = true;
            if (out.witness_index < 0) {
                out.witness_index = n;
                out.witness_class = c;
            }
        } else if (c != ElementClass::Unit &&
                   out.verdict == EigenClassification::Verdict::Unitary) {
            out.verdict = EigenClassification::Verdict::ProperNonUnitary;
            out.witness_index = n;
            out.witness_class = c;
        }
    }
    if (out.verdict == EigenClassification::Verdict::Unitary && any_undecidable)
        out.verdict = EigenClassification::Verdict::Undecidable;
    return out;
}

namespace {

// ascending coefficients of r^{k+1} - a_0 r^k - ... - a_k
std::vector<RingValue> char_poly(const LinearRecurrence& rec) {
    long long k = rec.k();
    std::vector<RingValue> coeffs(static_cast<std::size_t>(k + 2), ring_zero(rec.ring()));
    coeffs[static_cast<std::size_t>(k + 1)] = ring_one(rec.ring());
    for (long long j = 0; j <= k; ++j)
        coeffs[static_cast<std::size_t>(k - j)] = ring_neg(rec.coeff(static_cast<std::size_t>(j), 0));
    return coeffs;
}

RingValue poly_eval(const std::vector<RingValue>& coeffs, const RingValue& x) {
    RingValue acc = ring_zero(x.ring());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = ring_add(ring_mul(acc, x), *it);
    return acc;
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out;
    BigInt a = abs(n);
    if (a == 0) return {BigInt(0)};
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    return out;
}

} // namespace

EigenvalueResult eigenvalues_constant(const LinearRecurrence& rec) {
    if (!rec.constant_coefficients())
        throw Error("eigenvalues require constant coefficients");
    const RingDescriptor& ring = rec.ring();
    auto coeffs = char_poly(rec);
    EigenvalueResult out;

    if (ring.finite()) {
        out.values = brute_force_roots(ring, coeffs);
        return out;
    }

    if (coeffs.size() <= 3 && ring.kind() != RingKind::Sampled) {
        RingValue a2 = coeffs.size() == 3 ? coeffs[2] : ring_zero(ring);
        RingValue a1 = coeffs.size() >= 2 ? coeffs[1] : ring_zero(ring);
        RootResult res = quadratic_roots(a2, a1, coeffs[0]);
        switch (res.tag) {
        case RootResult::Tag::TwoRoots:
        case RootResult::Tag::DoubleRoot:
        case RootResult::Tag::DegenerateLinear:
            out.values = res.roots;
            return out;
        case RootResult::Tag::ExtensionRoots:
            out.values = res.roots;
            out.extension = res.extension;
            return out;
        case RootResult::Tag::ConjugatePair:
        case RootResult::Tag::NoRoots:
            out.incomplete = true;
            out.note = res.note.empty() ? "complex pair" : res.note;
            return out;
        default:
            out.incomplete = true;
            out.note = res.note;
            return out;
        }
    }

    if (ring.kind() == RingKind::Rational || ring.kind() == RingKind::BigInteger) {
        // rational-root test: integerize, try p/q with p | constant, q | leading
        BigInt common_den = 1;
        std::vector<BigRat> q_coeffs;
        for (const auto& c : coeffs) {
            BigRat v = ring.kind() == RingKind::Rational ? c.as_rational() : BigRat(c.as_integer());
            q_coeffs.push_back(v);
            common_den = boost::multiprecision::lcm(common_den, denominator(v));
        }
        std::vector<BigInt> int_coeffs;
        for (const auto& v : q_coeffs)
            int_coeffs.push_back(BigInt(numerator(v) * (common_den / denominator(v))));
        BigInt constant = int_coeffs.front(), leading = int_coeffs.back();
        std::vector<BigRat> candidates{BigRat(0)};
        if (constant != 0) {
            candidates.clear();
            for (const auto& p : divisors(constant))
                for (const auto& q : divisors(leading)) {
                    candidates.push_back(BigRat(p, q));
                    candidates.push_back(BigRat(-p, q));
                }
        }
        for (const auto& cand : candidates) {
            if (ring.kind() == RingKind::BigInteger && denominator(cand) != 1) continue;
            RingValue x = RingValue::make_rational(ring, cand);
            if (is_zero(poly_eval(coeffs, x))) {
                bool seen = false;
                for (const auto& v : out.values) seen |= values_equal(v, x);
                if (!seen) out.values.push_back(x);
            }
        }
        out.incomplete = true;
        out.note = "rational-root candidates only";
        return out;
    }

    out.incomplete = true;
    out.note = "no root-finding method for this ring at this degree";
    return out;
}

EquivalenceResult right_equivalent(const std::vector<RingValue>& x,
                                   const std::vector<RingValue>& y, long long up_to) {
    if (x.empty() || y.empty()) throw Error("equivalence check requires nonempty sequences");
    EquivalenceResult out;
    out.u = ring_mul(ring_inverse(x[0]), y[0]);
    long long last = std::min<long long>(
        up_to, static_cast<long long>(std::min(x.size(), y.size())) - 1);
    for (long long n = 1; n <= last; ++n) {
        RingValue rx = ring_mul(x[static_cast<std::size_t>(n)],
                                ring_inverse(x[static_cast<std::size_t>(n - 1)]));
        RingValue ry = ring_mul(y[static_cast<std::size_t>(n)],
                                ring_inverse(y[static_cast<std::size_t>(n - 1)]));
        if (!values_equal(rx, ry)) {
            out.divergence_at = n;
            return out;
        }
        // ratio equality propagates y_n = x_n * u; verify explicitly
        if (!values_equal(y[static_cast<std::size_t>(n)],
                          ring_mul(x[static_cast<std::size_t>(n)], out.u))) {
            out.divergence_at = n;
            return out;
        }
    }
    out.equivalent = true;
    return out;
}

PPReport poincare_perron_check(const LinearRecurrence& rec, const std::vector<RingValue>& seeds,
                               const std::vector<double>& limits, long long horizon,
                               long long tail_window, double tol) {
    const RingDescriptor& ring = rec.ring();
    if (ring.kind() != RingKind::Rational && ring.kind() != RingKind::RealFloat)
        throw Error("Poincare-Perron check supports ordered field kinds only");
    if (limits.size() != static_cast<std::size_t>(rec.order()))
        throw Error("one limiting constant per coefficient required");
    if (rec.order() > 2) throw Error("limiting eigenvalues implemented for order <= 2");

    PPReport report;
    // limiting characteristic polynomial roots
    if (rec.order() == 1) {
        report.limiting_eigenvalues = {limits[0]};
    } else {
        double disc = limits[0] * limits[0] + 4 * limits[1];
        if (disc >= 0) {
            double s = std::sqrt(disc);
            report.limiting_eigenvalues = {(limits[0] + s) / 2, (limits[0] - s) / 2};
        }
    }

    // coefficient convergence at the tail
    for (long long j = 0; j < rec.order(); ++j) {
        double dev = std::abs(to_double(rec.coeff(static_cast<std::size_t>(j), horizon)) -
                              limits[static_cast<std::size_t>(j)]);
        report.coefficient_deviation = std::max(report.coefficient_deviation, dev);
    }

    Eigensequence e = Eigensequence::from_seed(rec, seeds);
    report.tail_start = horizon - tail_window + 1;
    for (long long n = report.tail_start; n <= horizon; ++n)
        report.tail_samples.push_back(to_double(e.term(n)));

    for (double lambda : report.limiting_eigenvalues) {
        double dev = 0.0;
        for (double v : report.tail_samples) dev = std::max(dev, std::abs(v - lambda));
        if (dev <= tol) {
            report.converged_to = lambda;
            report.max_deviation = dev;
            return report;
        }
    }
    // no eigenvalue within tol: report deviation from the nearest one
    double best = std::numeric_limits<double>::infinity();
    for (double lambda : report.limiting_eigenvalues) {
        double dev = 0.0;
        for (double v : report.tail_samples) dev = std::max(dev, std::abs(v - lambda));
        best = std::min(best, dev);
    }
    report.max_deviation = std::isfinite(best) ? best : 0.0;
    return report;
}

} // namespace scfact
