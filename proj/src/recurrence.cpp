#include "scfact/recurrence.hpp"

#include <cmath>

namespace scfact {

LinearRecurrence::LinearRecurrence(RingDescriptor ring, std::vector<CoefficientSequence> coeffs,
                                   CoefficientSequence forcing, std::vector<RingValue> initials,
                                   long long start_index)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), forcing_(std::move(forcing)),
      initials_(std::move(initials)), start_index_(start_index) {
    if (coeffs_.empty()) throw Error("recurrence requires at least one coefficient");
    if (initials_.size() != coeffs_.size())
        throw Error("recurrence of order k+1 requires exactly k+1 initial values");
    for (const auto& c : coeffs_)
        if (c.ring() != ring_) throw DescriptorMismatch("coefficient ring mismatch");
    if (forcing_.ring() != ring_) throw DescriptorMismatch("forcing ring mismatch");
    for (const auto& x : initials_)
        if (x.ring() != ring_) throw DescriptorMismatch("initial value ring mismatch");
}

LinearRecurrence LinearRecurrence::homogeneous() const {
    return LinearRecurrence(ring_, coeffs_, CoefficientSequence::constant(ring_zero(ring_)),
                            initials_, start_index_);
}

LinearRecurrence LinearRecurrence::with_initials(std::vector<RingValue> initials) const {
    return LinearRecurrence(ring_, coeffs_, forcing_, std::move(initials), start_index_);
}

bool LinearRecurrence::constant_coefficients() const {
    for (const auto& c : coeffs_)
        if (c.kind() != CoefficientSequence::Kind::Constant) return false;
    return true;
}

struct SolutionStream::State {
    LinearRecurrence rec;
    std::vector<RingValue> terms;
};

SolutionStream::SolutionStream(LinearRecurrence rec)
    : state_(std::make_shared<State>(State{std::move(rec), {}})) {
    state_->terms = state_->rec.initials();
}

const LinearRecurrence& SolutionStream::recurrence() const { return state_->rec; }

const RingValue& SolutionStream::term(long long n) const {
    if (n < 0) throw EvalError("solution index must be nonnegative");
    auto& terms = state_->terms;
    const auto& rec = state_->rec;
    long long k = rec.k();
    while (static_cast<long long>(terms.size()) <= n) {
        long long m = static_cast<long long>(terms.size()) - 1; // producing x_{m+1}
        RingValue next = rec.forcing().eval(m);
        for (long long j = 0; j <= k; ++j)
            next = ring_add(next, ring_mul(rec.coeff(static_cast<std::size_t>(j), m),
                                           terms[static_cast<std::size_t>(m - j)]));
        terms.push_back(std::move(next));
    }
    return terms[static_cast<std::size_t>(n)];
}

std::vector<RingValue> SolutionStream::prefix(long long n_max) const {
    term(n_max);
    return {state_->terms.begin(), state_->terms.begin() + n_max + 1};
}

SolutionStream iterate(const LinearRecurrence& rec, long long n_max) {
    SolutionStream s(rec);
    s.term(n_max);
    return s;
}

UnitaryCheck is_unitary_solution(const LinearRecurrence& rec, long long up_to) {
    SolutionStream s(rec);
    for (long long n = 0; n <= up_to; ++n) {
        ElementClass c = classify_element(s.term(n));
        bool ok = c == ElementClass::Unit;
        if (c == ElementClass::Undecidable && rec.ring().kind() == RingKind::Sampled) {
            // accepted when every sample clears tolerance — but Undecidable
            // means some sample is inside tolerance, so it stays a failure
            ok = false;
        }
        if (!ok) return {false, n, c};
    }
    return {true, -1, ElementClass::Unit};
}

SolutionStream positive_unitary_solution(const LinearRecurrence& rec, long long horizon) {
    const RingDescriptor& ring = rec.ring();
    if (ring.kind() != RingKind::Sampled && ring.kind() != RingKind::RealFloat)
        throw Error("positive solutions are certified on float rings only");

    auto samples_of = [&](const RingValue& v) {
        return ring.kind() == RingKind::Sampled ? v.as_samples()
                                                : std::vector<double>{v.as_real()};
    };

    for (const auto& x : rec.initials())
        for (std::size_t p = 0; p < samples_of(x).size(); ++p)
            if (samples_of(x)[p] <= 0.0)
                throw HypothesisViolated("initial value not strictly positive", 0,
                                         static_cast<long long>(p));

    SolutionStream s(rec);
    long long k = rec.k();
    for (long long n = k; n < horizon; ++n) {
        std::size_t points = samples_of(rec.coeff(0, n)).size();
        for (std::size_t p = 0; p < points; ++p) {
            double sum = 0.0;
            for (long long j = 0; j <= k; ++j) {
                double a = samples_of(rec.coeff(static_cast<std::size_t>(j), n))[p];
                if (a < 0.0)
                    throw HypothesisViolated("negative coefficient sample", n,
                                             static_cast<long long>(p));
                sum += a;
            }
            if (sum <= 0.0)
                throw HypothesisViolated("all coefficients vanish (sum not positive)", n,
                                         static_cast<long long>(p));
        }
    }
    for (long long n = 0; n <= horizon; ++n) {
        auto vals = samples_of(s.term(n));
        for (std::size_t p = 0; p < vals.size(); ++p)
            if (vals[p] <= 0.0)
                throw HypothesisViolated("solution term not strictly positive", n,
                                         static_cast<long long>(p));
    }
    return s;
}

NonrecursiveBranches enumerate_nonrecursive(const RingValue& c, const RingValue& d,
                                            long long horizon, std::optional<RingValue> t1,
                                            std::size_t cap) {
    const RingDescriptor& ring = c.ring();
    if (!ring.finite()) throw InfiniteRing("nonrecursive enumeration requires a finite ring");
    if (horizon < 1) throw Error("horizon must be at least 1");

    NonrecursiveBranches out;

    if (classify_element(c) == ElementClass::Unit) {
        RingValue m = ring_neg(ring_mul(ring_inverse(c), d));
        out.recursive_multiplier = m;
        std::vector<RingValue> starts =
            t1 ? std::vector<RingValue>{*t1} : all_elements(ring);
        for (const auto& start : starts) {
            std::vector<RingValue> seq{start};
            for (long long n = 1; n < horizon; ++n) seq.push_back(ring_mul(m, seq.back()));
            out.sequences.push_back(std::move(seq));
        }
        return out;
    }

    const auto elements = all_elements(ring);
    auto successors = [&](const RingValue& t) {
        std::vector<RingValue> next;
        RingValue dt = ring_mul(d, t);
        for (const auto& cand : elements)
            if (is_zero(ring_add(ring_mul(c, cand), dt))) next.push_back(cand);
        return next;
    };

    std::vector<RingValue> starts = t1 ? std::vector<RingValue>{*t1} : elements;
    std::vector<std::vector<RingValue>> frontier;
    for (const auto& s : starts) frontier.push_back({s});
    for (long long n = 1; n < horizon && !out.truncated; ++n) {
        std::vector<std::vector<RingValue>> next_frontier;
        for (const auto& seq : frontier) {
            for (const auto& t : successors(seq.back())) {
                if (next_frontier.size() >= cap) {
                    out.truncated = true;
                    break;
                }
                auto extended = seq;
                extended.push_back(t);
                next_frontier.push_back(std::move(extended));
            }
            if (out.truncated) break;
        }
        frontier = std::move(next_frontier);
    }
    out.sequences = std::move(frontier);
    return out;
}

std::vector<RingValue> cofactor_reconstruct(const std::vector<RingValue>& t_seq,
                                            const std::function<RingValue(long long)>& alpha,
                                            const RingValue& x0, long long horizon) {
    std::vector<RingValue> x{x0};
    for (long long n = 0; n < horizon; ++n) {
        RingValue next = ring_mul(alpha(n + 1), x.back());
        if (n < static_cast<long long>(t_seq.size()))
            next = ring_add(next, t_seq[static_cast<std::size_t>(n)]);
        x.push_back(std::move(next));
    }
    return x;
}

} // namespace scfact
