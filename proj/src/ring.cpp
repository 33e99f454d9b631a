#include "scfact/ring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace scfact {

namespace {

void require_same_ring(const RingValue& x, const RingValue& y) {
    if (x.ring() != y.ring()) {
        throw DescriptorMismatch("operands belong to different rings: " + x.ring().name() +
                                 " vs " + y.ring().name());
    }
}

long long mod_reduce(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

long long mod_mul(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

} // namespace

// -- RingDescriptor ---------------------------------------------------------

RingDescriptor RingDescriptor::integers() {
    return RingDescriptor(RingKind::BigInteger, 0, 0.0, nullptr);
}

RingDescriptor RingDescriptor::rationals() {
    return RingDescriptor(RingKind::Rational, 0, 0.0, nullptr);
}

RingDescriptor RingDescriptor::modular(long long m) {
    if (m < 2) throw Error("modular ring requires m >= 2");
    if (m > (1LL << 31)) throw Error("modulus too large");
    return RingDescriptor(RingKind::Modular, m, 0.0, nullptr);
}

RingDescriptor RingDescriptor::quadratic_ext(long long d) {
    if (d == 0 || d == 1) throw Error("quadratic extension requires d != 0, 1");
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(std::llabs(d)))));
    for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
        if (c * c == d) throw Error("quadratic extension requires a non-square d");
    return RingDescriptor(RingKind::QuadraticExt, d, 0.0, nullptr);
}

RingDescriptor RingDescriptor::boolean_set(int universe_size) {
    if (universe_size < 1 || universe_size > 63)
        throw Error("boolean universe size must be in [1, 63]");
    return RingDescriptor(RingKind::BooleanSet, universe_size, 0.0, nullptr);
}

RingDescriptor RingDescriptor::sampled(std::vector<double> grid, double tol) {
    if (grid.empty()) throw Error("sampled ring requires a nonempty grid");
    if (tol < 0) throw Error("tolerance must be nonnegative");
    auto sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("sampled grid points must be distinct");
    return RingDescriptor(RingKind::Sampled, 0, tol,
                          std::make_shared<const std::vector<double>>(std::move(grid)));
}

RingDescriptor RingDescriptor::real_float(double tol) {
    if (tol < 0) throw Error("tolerance must be nonnegative");
    return RingDescriptor(RingKind::RealFloat, 0, tol, nullptr);
}

bool RingDescriptor::is_field() const {
    switch (kind_) {
    case RingKind::Rational:
    case RingKind::QuadraticExt:
    case RingKind::RealFloat:
        return true;
    case RingKind::Modular:
        return is_prime(param_);
    default:
        return false;
    }
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case RingKind::Modular:
    case RingKind::QuadraticExt:
    case RingKind::BooleanSet:
        return param_ == other.param_;
    case RingKind::Sampled:
        return *grid_ == *other.grid_ && tol_ == other.tol_;
    case RingKind::RealFloat:
        return tol_ == other.tol_;
    default:
        return true;
    }
}

std::string RingDescriptor::name() const {
    switch (kind_) {
    case RingKind::BigInteger: return "Z";
    case RingKind::Rational: return "Q";
    case RingKind::Modular: return "Z_" + std::to_string(param_);
    case RingKind::QuadraticExt: return "Q(sqrt(" + std::to_string(param_) + "))";
    case RingKind::BooleanSet: return "Bool(" + std::to_string(param_) + ")";
    case RingKind::Sampled: return "Sampled[" + std::to_string(grid_->size()) + "]";
    case RingKind::RealFloat: return "R";
    }
    return "?";
}

// -- construction -----------------------------------------------------------

RingValue RingValue::make_integer(const RingDescriptor& ring, const BigInt& v) {
    RingValue r;
    r.ring_ = ring;
    switch (ring.kind()) {
    case RingKind::BigInteger:
        r.payload_ = v;
        break;
    case RingKind::Rational:
        r.payload_ = BigRat(v);
        break;
    case RingKind::Modular: {
        BigInt red = v % ring.modulus();
        if (red < 0) red += ring.modulus();
        r.payload_ = red.convert_to<long long>();
        break;
    }
    case RingKind::QuadraticExt:
        r.payload_ = QuadValue{BigRat(v), BigRat(0)};
        break;
    case RingKind::BooleanSet: {
        // characteristic 2: the image of an integer is 0 or 1 by parity
        r.payload_ = (v % 2 != 0) ? ((1ULL << ring.universe_size()) - 1) : 0ULL;
        break;
    }
    case RingKind::Sampled:
        r.payload_ = std::vector<double>(ring.grid().size(), v.convert_to<double>());
        break;
    case RingKind::RealFloat:
        r.payload_ = v.convert_to<double>();
        break;
    }
    return r;
}

RingValue RingValue::make_rational(const RingDescriptor& ring, const BigRat& v) {
    RingValue r;
    r.ring_ = ring;
    switch (ring.kind()) {
    case RingKind::Rational:
        r.payload_ = v;
        break;
    case RingKind::QuadraticExt:
        r.payload_ = QuadValue{v, BigRat(0)};
        break;
    case RingKind::Sampled:
        r.payload_ = std::vector<double>(ring.grid().size(), v.convert_to<double>());
        break;
    case RingKind::RealFloat:
        r.payload_ = v.convert_to<double>();
        break;
    default:
        if (denominator(v) == 1) return make_integer(ring, numerator(v));
        // image of p/q where the image of q is a unit (Modular, BooleanSet)
        return ring_div(make_integer(ring, numerator(v)), make_integer(ring, denominator(v)));
    }
    return r;
}

RingValue RingValue::make_quadratic(const RingDescriptor& ring, BigRat p, BigRat q) {
    if (ring.kind() != RingKind::QuadraticExt)
        throw Error("make_quadratic requires a quadratic extension ring");
    RingValue r;
    r.ring_ = ring;
    r.payload_ = QuadValue{std::move(p), std::move(q)};
    return r;
}

RingValue RingValue::make_boolean(const RingDescriptor& ring, std::uint64_t bits) {
    if (ring.kind() != RingKind::BooleanSet)
        throw Error("make_boolean requires a boolean-set ring");
    RingValue r;
    r.ring_ = ring;
    r.payload_ = bits & ((1ULL << ring.universe_size()) - 1);
    return r;
}

RingValue RingValue::make_samples(const RingDescriptor& ring, std::vector<double> samples) {
    if (ring.kind() != RingKind::Sampled)
        throw Error("make_samples requires a sampled ring");
    if (samples.size() != ring.grid().size())
        throw GridMismatch("sample vector length does not match grid");
    RingValue r;
    r.ring_ = ring;
    r.payload_ = std::move(samples);
    return r;
}

RingValue RingValue::make_real(const RingDescriptor& ring, double v) {
    if (ring.kind() == RingKind::Sampled)
        return make_samples(ring, std::vector<double>(ring.grid().size(), v));
    if (ring.kind() != RingKind::RealFloat)
        throw Error("make_real requires a float ring");
    RingValue r;
    r.ring_ = ring;
    r.payload_ = v;
    return r;
}

RingValue ring_zero(const RingDescriptor& ring) { return RingValue::make_integer(ring, 0); }

RingValue ring_one(const RingDescriptor& ring) {
    if (ring.kind() == RingKind::BooleanSet)
        return RingValue::make_boolean(ring, (1ULL << ring.universe_size()) - 1);
    return RingValue::make_integer(ring, 1);
}

RingValue from_int(const RingDescriptor& ring, long long v) {
    return RingValue::make_integer(ring, BigInt(v));
}

// -- arithmetic --------------------------------------------------------------

RingValue ring_add(const RingValue& x, const RingValue& y) {
    require_same_ring(x, y);
    RingValue r;
    r.ring_ = x.ring();
    switch (x.ring().kind()) {
    case RingKind::BigInteger:
        r.payload_ = BigInt(x.as_integer() + y.as_integer());
        break;
    case RingKind::Rational:
        r.payload_ = BigRat(x.as_rational() + y.as_rational());
        break;
    case RingKind::Modular:
        r.payload_ = mod_reduce(x.as_residue() + y.as_residue(), x.ring().modulus());
        break;
    case RingKind::QuadraticExt:
        r.payload_ = QuadValue{x.as_quadratic().p + y.as_quadratic().p,
                               x.as_quadratic().q + y.as_quadratic().q};
        break;
    case RingKind::BooleanSet:
        r.payload_ = x.as_bits() ^ y.as_bits(); // symmetric difference
        break;
    case RingKind::Sampled: {
        std::vector<double> v = x.as_samples();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.as_samples()[i];
        r.payload_ = std::move(v);
        break;
    }
    case RingKind::RealFloat:
        r.payload_ = x.as_real() + y.as_real();
        break;
    }
    return r;
}

RingValue ring_neg(const RingValue& x) {
    RingValue r;
    r.ring_ = x.ring();
    switch (x.ring().kind()) {
    case RingKind::BigInteger:
        r.payload_ = BigInt(-x.as_integer());
        break;
    case RingKind::Rational:
        r.payload_ = BigRat(-x.as_rational());
        break;
    case RingKind::Modular:
        r.payload_ = mod_reduce(-x.as_residue(), x.ring().modulus());
        break;
    case RingKind::QuadraticExt:
        r.payload_ = QuadValue{-x.as_quadratic().p, -x.as_quadratic().q};
        break;
    case RingKind::BooleanSet:
        r.payload_ = x.as_bits(); // characteristic 2
        break;
    case RingKind::Sampled: {
        std::vector<double> v = x.as_samples();
        for (auto& s : v) s = -s;
        r.payload_ = std::move(v);
        break;
    }
    case RingKind::RealFloat:
        r.payload_ = -x.as_real();
        break;
    }
    return r;
}

RingValue ring_sub(const RingValue& x, const RingValue& y) { return ring_add(x, ring_neg(y)); }

RingValue ring_mul(const RingValue& x, const RingValue& y) {
    require_same_ring(x, y);
    RingValue r;
    r.ring_ = x.ring();
    switch (x.ring().kind()) {
    case RingKind::BigInteger:
        r.payload_ = BigInt(x.as_integer() * y.as_integer());
        break;
    case RingKind::Rational:
        r.payload_ = BigRat(x.as_rational() * y.as_rational());
        break;
    case RingKind::Modular:
        r.payload_ = mod_mul(x.as_residue(), y.as_residue(), x.ring().modulus());
        break;
    case RingKind::QuadraticExt: {
        const auto& a = x.as_quadratic();
        const auto& b = y.as_quadratic();
        BigRat d(x.ring().ext_d());
        r.payload_ = QuadValue{a.p * b.p + d * a.q * b.q, a.p * b.q + a.q * b.p};
        break;
    }
    case RingKind::BooleanSet:
        r.payload_ = x.as_bits() & y.as_bits(); // intersection
        break;
    case RingKind::Sampled: {
        std::vector<double> v = x.as_samples();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= y.as_samples()[i];
        r.payload_ = std::move(v);
        break;
    }
    case RingKind::RealFloat:
        r.payload_ = x.as_real() * y.as_real();
        break;
    }
    return r;
}

RingValue ring_inverse(const RingValue& x) {
    const RingDescriptor& ring = x.ring();
    switch (ring.kind()) {
    case RingKind::BigInteger: {
        if (x.as_integer() == 1 || x.as_integer() == -1) return x;
        throw NotAUnit("integer is not invertible", "only +-1 are units in Z");
    }
    case RingKind::Rational: {
        if (x.as_rational() == 0) throw NotAUnit("zero is not invertible", "zero");
        return RingValue::make_rational(ring, BigRat(1) / x.as_rational());
    }
    case RingKind::Modular: {
        long long a = x.as_residue(), m = ring.modulus();
        long long g = std::gcd(a, m);
        if (g != 1)
            throw NotAUnit("residue shares a divisor with the modulus",
                           "gcd(" + std::to_string(a) + "," + std::to_string(m) + ")=" +
                               std::to_string(g));
        // extended Euclid
        long long t = 0, new_t = 1, r = m, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            std::swap(t -= q * new_t, new_t);
            std::swap(r -= q * new_r, new_r);
        }
        return from_int(ring, mod_reduce(t, m));
    }
    case RingKind::QuadraticExt: {
        const auto& v = x.as_quadratic();
        BigRat norm = v.p * v.p - BigRat(ring.ext_d()) * v.q * v.q;
        if (norm == 0) throw NotAUnit("element is not invertible", "zero norm");
        return RingValue::make_quadratic(ring, v.p / norm, -v.q / norm);
    }
    case RingKind::BooleanSet: {
        std::uint64_t full = (1ULL << ring.universe_size()) - 1;
        if (x.as_bits() == full) return x;
        throw NotAUnit("boolean set is not invertible", "only the full universe is a unit");
    }
    case RingKind::Sampled: {
        std::vector<double> v = x.as_samples();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) <= ring.tolerance())
                throw NotAUnit("sample vanishes", "zero sample index " + std::to_string(i));
            v[i] = 1.0 / v[i];
        }
        return RingValue::make_samples(ring, std::move(v));
    }
    case RingKind::RealFloat: {
        if (std::abs(x.as_real()) <= ring.tolerance())
            throw NotAUnit("value within zero tolerance", "zero");
        return RingValue::make_real(ring, 1.0 / x.as_real());
    }
    }
    throw Error("unreachable");
}

RingValue ring_div(const RingValue& x, const RingValue& y) {
    return ring_mul(x, ring_inverse(y));
}

RingValue ring_pow(const RingValue& x, long long e) {
    if (e < 0) return ring_pow(ring_inverse(x), -e);
    RingValue acc = ring_one(x.ring());
    RingValue base = x;
    while (e > 0) {
        if (e & 1) acc = ring_mul(acc, base);
        base = ring_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_zero(const RingValue& x) {
    switch (x.ring().kind()) {
    case RingKind::BigInteger: return x.as_integer() == 0;
    case RingKind::Rational: return x.as_rational() == 0;
    case RingKind::Modular: return x.as_residue() == 0;
    case RingKind::QuadraticExt: return x.as_quadratic().p == 0 && x.as_quadratic().q == 0;
    case RingKind::BooleanSet: return x.as_bits() == 0;
    case RingKind::Sampled:
        for (double s : x.as_samples())
            if (std::abs(s) > x.ring().tolerance()) return false;
        return true;
    case RingKind::RealFloat: return std::abs(x.as_real()) <= x.ring().tolerance();
    }
    return false;
}

bool values_equal(const RingValue& x, const RingValue& y) {
    require_same_ring(x, y);
    switch (x.ring().kind()) {
    case RingKind::BigInteger: return x.as_integer() == y.as_integer();
    case RingKind::Rational: return x.as_rational() == y.as_rational();
    case RingKind::Modular: return x.as_residue() == y.as_residue();
    case RingKind::QuadraticExt: return x.as_quadratic() == y.as_quadratic();
    case RingKind::BooleanSet: return x.as_bits() == y.as_bits();
    case RingKind::Sampled:
    case RingKind::RealFloat: return is_zero(ring_sub(x, y));
    }
    return false;
}

ElementClass classify_element(const RingValue& x) {
    const RingDescriptor& ring = x.ring();
    switch (ring.kind()) {
    case RingKind::BigInteger:
        if (x.as_integer() == 0) return ElementClass::Zero;
        if (x.as_integer() == 1 || x.as_integer() == -1) return ElementClass::Unit;
        return ElementClass::NonUnitRegular;
    case RingKind::Rational:
        return x.as_rational() == 0 ? ElementClass::Zero : ElementClass::Unit;
    case RingKind::Modular: {
        if (x.as_residue() == 0) return ElementClass::Zero;
        return std::gcd(x.as_residue(), ring.modulus()) == 1 ? ElementClass::Unit
                                                             : ElementClass::ZeroDivisor;
    }
    case RingKind::QuadraticExt:
        return is_zero(x) ? ElementClass::Zero : ElementClass::Unit;
    case RingKind::BooleanSet: {
        std::uint64_t full = (1ULL << ring.universe_size()) - 1;
        if (x.as_bits() == 0) return ElementClass::Zero;
        if (x.as_bits() == full) return ElementClass::Unit;
        return ElementClass::ZeroDivisor; // complement annihilates it
    }
    case RingKind::Sampled: {
        bool all_above = true, all_below = true;
        for (double s : x.as_samples()) {
            (std::abs(s) > ring.tolerance() ? all_below : all_above) = false;
        }
        if (all_below) return ElementClass::Zero;
        if (all_above) return ElementClass::Unit;
        return ElementClass::Undecidable; // grid sampling cannot certify zero divisors
    }
    case RingKind::RealFloat:
        return is_zero(x) ? ElementClass::Zero : ElementClass::Unit;
    }
    return ElementClass::Undecidable;
}

std::string to_string(ElementClass c) {
    switch (c) {
    case ElementClass::Zero: return "zero";
    case ElementClass::Unit: return "unit";
    case ElementClass::ZeroDivisor: return "zero_divisor";
    case ElementClass::NonUnitRegular: return "non_unit_regular";
    case ElementClass::Undecidable: return "undecidable";
    }
    return "?";
}

double to_double(const RingValue& x) {
    switch (x.ring().kind()) {
    case RingKind::BigInteger: return x.as_integer().convert_to<double>();
    case RingKind::Rational: return x.as_rational().convert_to<double>();
    case RingKind::Modular: return static_cast<double>(x.as_residue());
    case RingKind::QuadraticExt:
        return x.as_quadratic().p.convert_to<double>() +
               x.as_quadratic().q.convert_to<double>() *
                   std::sqrt(static_cast<double>(x.ring().ext_d()));
    case RingKind::RealFloat: return x.as_real();
    default:
        throw Error("no scalar numeric image for " + x.ring().name());
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    // normalize "-0"
    if (std::string(buf) == "-0") return "0";
    return buf;
}

namespace {

std::string rat_to_string(const BigRat& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << "/" << denominator(v);
    return os.str();
}

} // namespace

std::string to_string(const RingValue& x) {
    switch (x.ring().kind()) {
    case RingKind::BigInteger: return x.as_integer().str();
    case RingKind::Rational: return rat_to_string(x.as_rational());
    case RingKind::Modular: return std::to_string(x.as_residue());
    case RingKind::QuadraticExt: {
        const auto& v = x.as_quadratic();
        std::string radical = "sqrt(" + std::to_string(x.ring().ext_d()) + ")";
        if (v.q == 0) return rat_to_string(v.p);
        std::string qpart = rat_to_string(v.q < 0 ? BigRat(-v.q) : v.q) + "*" + radical;
        if (v.p == 0) return (v.q < 0 ? "-" : "") + qpart;
        return rat_to_string(v.p) + (v.q < 0 ? "-" : "+") + qpart;
    }
    case RingKind::BooleanSet: {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < x.ring().universe_size(); ++i) {
            if (x.as_bits() >> i & 1) {
                if (!first) s += ",";
                s += std::to_string(i + 1);
                first = false;
            }
        }
        return s + "}";
    }
    case RingKind::Sampled: {
        std::string s = "[";
        for (std::size_t i = 0; i < x.as_samples().size(); ++i) {
            if (i) s += ",";
            s += format_double(x.as_samples()[i]);
        }
        return s + "]";
    }
    case RingKind::RealFloat: return format_double(x.as_real());
    }
    return "?";
}

// -- root finding -------------------------------------------------------------

std::vector<RingValue> all_elements(const RingDescriptor& ring) {
    std::vector<RingValue> out;
    switch (ring.kind()) {
    case RingKind::Modular:
        out.reserve(static_cast<std::size_t>(ring.modulus()));
        for (long long v = 0; v < ring.modulus(); ++v) out.push_back(from_int(ring, v));
        return out;
    case RingKind::BooleanSet: {
        if (ring.universe_size() > 20) throw Error("boolean universe too large to enumerate");
        std::uint64_t count = 1ULL << ring.universe_size();
        out.reserve(count);
        for (std::uint64_t b = 0; b < count; ++b) out.push_back(RingValue::make_boolean(ring, b));
        return out;
    }
    default:
        throw InfiniteRing("cannot enumerate elements of " + ring.name());
    }
}

namespace {

RingValue poly_eval(const std::vector<RingValue>& coeffs, const RingValue& x) {
    RingValue acc = ring_zero(x.ring());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = ring_add(ring_mul(acc, x), *it);
    return acc;
}

} // namespace

std::vector<RingValue> brute_force_roots(const RingDescriptor& ring,
                                         const std::vector<RingValue>& coeffs) {
    if (coeffs.empty()) throw Error("brute_force_roots requires coefficients");
    if (!ring.finite()) throw InfiniteRing("brute_force_roots requires a finite ring");
    std::vector<RingValue> roots;
    for (const RingValue& x : all_elements(ring))
        if (is_zero(poly_eval(coeffs, x))) roots.push_back(x);
    return roots;
}

std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n) {
    if (n < 0) throw Error("squarefree_decompose requires n >= 0");
    BigInt rest = n, d = 1, s = 1;
    if (rest == 0) return {BigInt(0), BigInt(1)};
    for (BigInt p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    d *= rest; // remaining prime (exponent 1)
    return {d, s};
}

std::optional<BigRat> rational_sqrt(const BigRat& v) {
    if (v < 0) return std::nullopt;
    BigInt num = numerator(v), den = denominator(v);
    BigInt rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return BigRat(rn, rd);
}

RingValue ring_sqrt(const RingValue& x) {
    const RingDescriptor& ring = x.ring();
    switch (ring.kind()) {
    case RingKind::BigInteger: {
        if (x.as_integer() < 0) throw NoSquareRoot("negative integer");
        BigInt r = sqrt(x.as_integer());
        if (r * r != x.as_integer()) throw NoSquareRoot("integer is not a perfect square");
        return RingValue::make_integer(ring, r);
    }
    case RingKind::Rational: {
        auto r = rational_sqrt(x.as_rational());
        if (!r) throw NoSquareRoot("rational is not a perfect square");
        return RingValue::make_rational(ring, *r);
    }
    case RingKind::QuadraticExt: {
        const auto& v = x.as_quadratic();
        BigRat d(ring.ext_d());
        if (v.q == 0) {
            if (auto r = rational_sqrt(v.p)) return RingValue::make_quadratic(ring, *r, BigRat(0));
            if (d != 0 && v.p != 0) {
                // maybe p = d * q0^2, so sqrt = q0 * sqrt(d)
                if (auto r = rational_sqrt(v.p / d))
                    return RingValue::make_quadratic(ring, BigRat(0), *r);
            }
            throw NoSquareRoot("no square root in this quadratic extension");
        }
        // solve (a + b sqrt(d))^2 = p + q sqrt(d): a^2 + d b^2 = p, 2ab = q
        BigRat norm = v.p * v.p - d * v.q * v.q;
        auto w = rational_sqrt(norm);
        if (!w) throw NoSquareRoot("norm is not a perfect square");
        for (const BigRat& a2 : {BigRat((v.p + *w) / 2), BigRat((v.p - *w) / 2)}) {
            auto a = rational_sqrt(a2);
            if (!a || *a == 0) continue;
            BigRat b = v.q / (2 * *a);
            if (*a * *a + d * b * b == v.p && 2 * *a * b == v.q)
                return RingValue::make_quadratic(ring, *a, b);
        }
        throw NoSquareRoot("no square root in this quadratic extension");
    }
    case RingKind::Sampled: {
        std::vector<double> v = x.as_samples();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < -ring.tolerance())
                throw NoSquareRoot("negative sample at index " + std::to_string(i));
            v[i] = std::sqrt(std::max(0.0, v[i]));
        }
        return RingValue::make_samples(ring, std::move(v));
    }
    case RingKind::RealFloat: {
        if (x.as_real() < -ring.tolerance()) throw NoSquareRoot("negative value");
        return RingValue::make_real(ring, std::sqrt(std::max(0.0, x.as_real())));
    }
    default:
        throw NoSquareRoot("square roots unsupported in " + ring.name());
    }
}

RootResult quadratic_roots(const RingValue& a2, const RingValue& a1, const RingValue& a0) {
    require_same_ring(a2, a1);
    require_same_ring(a1, a0);
    const RingDescriptor& ring = a2.ring();
    if (ring.finite())
        throw Error("use brute_force_roots for finite rings");

    RootResult res;
    if (is_zero(a2)) {
        if (is_zero(a1)) {
            if (is_zero(a0)) {
                res.tag = RootResult::Tag::AllElements;
                res.note = "identically zero: every element is a root";
            } else {
                res.tag = RootResult::Tag::Inconsistent;
                res.note = "constant nonzero: no roots";
            }
            return res;
        }
        res.tag = RootResult::Tag::DegenerateLinear;
        res.roots.push_back(ring_neg(ring_div(a0, a1)));
        return res;
    }

    switch (ring.kind()) {
    case RingKind::Rational: {
        BigRat A = a2.as_rational(), B = a1.as_rational(), C = a0.as_rational();
        BigRat disc = B * B - 4 * A * C;
        if (disc == 0) {
            res.tag = RootResult::Tag::DoubleRoot;
            res.roots.push_back(RingValue::make_rational(ring, -B / (2 * A)));
            return res;
        }
        if (auto s = rational_sqrt(disc)) {
            res.tag = RootResult::Tag::TwoRoots;
            res.roots.push_back(RingValue::make_rational(ring, (-B + *s) / (2 * A)));
            res.roots.push_back(RingValue::make_rational(ring, (-B - *s) / (2 * A)));
            return res;
        }
        if (disc < 0) {
            res.tag = RootResult::Tag::NoRoots;
            res.note = "complex pair";
            return res;
        }
        // disc = (m/n): sqrt = sqrt(m*n)/n = s*sqrt(d)/n
        BigInt m = numerator(disc), n = denominator(disc);
        auto [d, s] = squarefree_decompose(m * n);
        RingDescriptor ext = RingDescriptor::quadratic_ext(d.convert_to<long long>());
        BigRat scale = BigRat(s, n) / (2 * A);
        res.tag = RootResult::Tag::ExtensionRoots;
        res.extension = ext;
        res.roots.push_back(RingValue::make_quadratic(ext, -B / (2 * A), scale));
        res.roots.push_back(RingValue::make_quadratic(ext, -B / (2 * A), -scale));
        return res;
    }
    case RingKind::BigInteger: {
        // solve over Q, keep integer roots
        RingDescriptor q = RingDescriptor::rationals();
        RootResult inner = quadratic_roots(RingValue::make_rational(q, BigRat(a2.as_integer())),
                                           RingValue::make_rational(q, BigRat(a1.as_integer())),
                                           RingValue::make_rational(q, BigRat(a0.as_integer())));
        res.tag = inner.tag;
        res.note = inner.note;
        res.extension = inner.extension;
        for (const auto& r : inner.roots) {
            if (r.ring().kind() == RingKind::Rational && denominator(r.as_rational()) == 1)
                res.roots.push_back(RingValue::make_integer(ring, numerator(r.as_rational())));
            else if (r.ring().kind() == RingKind::QuadraticExt)
                res.roots.push_back(r);
        }
        if ((inner.tag == RootResult::Tag::TwoRoots || inner.tag == RootResult::Tag::DoubleRoot) &&
            res.roots.size() < inner.roots.size()) {
            res.note = "rational roots outside Z dropped";
            if (res.roots.empty()) res.tag = RootResult::Tag::NoRoots;
        }
        return res;
    }
    case RingKind::QuadraticExt: {
        RingValue disc = ring_sub(ring_mul(a1, a1),
                                  ring_mul(from_int(ring, 4), ring_mul(a2, a0)));
        if (is_zero(disc)) {
            res.tag = RootResult::Tag::DoubleRoot;
            res.roots.push_back(ring_neg(ring_div(a1, ring_mul(from_int(ring, 2), a2))));
            return res;
        }
        try {
            RingValue s = ring_sqrt(disc);
            RingValue twoA = ring_mul(from_int(ring, 2), a2);
            res.tag = RootResult::Tag::TwoRoots;
            res.roots.push_back(ring_div(ring_add(ring_neg(a1), s), twoA));
            res.roots.push_back(ring_div(ring_sub(ring_neg(a1), s), twoA));
        } catch (const NoSquareRoot&) {
            res.tag = RootResult::Tag::NoRoots;
            res.note = "discriminant has no square root in this extension";
        }
        return res;
    }
    case RingKind::RealFloat: {
        double A = a2.as_real(), B = a1.as_real(), C = a0.as_real();
        double disc = B * B - 4 * A * C;
        if (std::abs(disc) <= ring.tolerance()) {
            res.tag = RootResult::Tag::DoubleRoot;
            res.roots.push_back(RingValue::make_real(ring, -B / (2 * A)));
            return res;
        }
        if (disc > 0) {
            double s = std::sqrt(disc);
            res.tag = RootResult::Tag::TwoRoots;
            res.roots.push_back(RingValue::make_real(ring, (-B + s) / (2 * A)));
            res.roots.push_back(RingValue::make_real(ring, (-B - s) / (2 * A)));
            return res;
        }
        res.tag = RootResult::Tag::ConjugatePair;
        res.modulus = std::sqrt(C / A);
        res.angle = std::acos(-B / (2 * A) / res.modulus);
        return res;
    }
    case RingKind::Sampled: {
        // uniform-sign discriminant only; mixed regions are handled pointwise upstream
        const auto& A = a2.as_samples();
        const auto& B = a1.as_samples();
        const auto& C = a0.as_samples();
        bool any_neg = false, any_pos = false;
        for (std::size_t i = 0; i < A.size(); ++i) {
            double disc = B[i] * B[i] - 4 * A[i] * C[i];
            (disc < -ring.tolerance() ? any_neg : any_pos) = true;
        }
        if (any_neg && any_pos)
            throw EvalError("discriminant changes sign across the grid; solve pointwise");
        if (any_neg) {
            res.tag = RootResult::Tag::ConjugatePair;
            res.note = "pointwise conjugate pair";
            return res;
        }
        std::vector<double> r1(A.size()), r2(A.size());
        for (std::size_t i = 0; i < A.size(); ++i) {
            double s = std::sqrt(std::max(0.0, B[i] * B[i] - 4 * A[i] * C[i]));
            r1[i] = (-B[i] + s) / (2 * A[i]);
            r2[i] = (-B[i] - s) / (2 * A[i]);
        }
        res.tag = RootResult::Tag::TwoRoots;
        res.roots.push_back(RingValue::make_samples(ring, std::move(r1)));
        res.roots.push_back(RingValue::make_samples(ring, std::move(r2)));
        return res;
    }
    default:
        throw Error("quadratic_roots unsupported in " + ring.name());
    }
}

} // namespace scfact
