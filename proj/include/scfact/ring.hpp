#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scfact/errors.hpp"

namespace scfact {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class RingKind {
    BigInteger,
    Rational,
    Modular,
    QuadraticExt,
    BooleanSet,
    Sampled,
    RealFloat,
};

/// Handle to one of the supported concrete rings. Cheap to copy and compare;
/// two values interoperate only when their descriptors are equal.
class RingDescriptor {
public:
    static RingDescriptor integers();
    static RingDescriptor rationals();
    static RingDescriptor modular(long long m);
    static RingDescriptor quadratic_ext(long long d);
    static RingDescriptor boolean_set(int universe_size = 16);
    static RingDescriptor sampled(std::vector<double> grid, double tol = 1e-12);
    static RingDescriptor real_float(double tol = 1e-12);

    RingKind kind() const { return kind_; }
    long long modulus() const { return param_; }
    long long ext_d() const { return param_; }
    int universe_size() const { return static_cast<int>(param_); }
    const std::vector<double>& grid() const { return *grid_; }
    double tolerance() const { return tol_; }

    bool finite() const { return kind_ == RingKind::Modular || kind_ == RingKind::BooleanSet; }
    bool exact() const { return kind_ != RingKind::Sampled && kind_ != RingKind::RealFloat; }
    /// Fields among the supported kinds (Modular only when the modulus is prime).
    bool is_field() const;

    bool operator==(const RingDescriptor& other) const;
    bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

    std::string name() const;

private:
    RingDescriptor(RingKind kind, long long param, double tol,
                   std::shared_ptr<const std::vector<double>> grid)
        : kind_(kind), param_(param), tol_(tol), grid_(std::move(grid)) {}

    RingKind kind_;
    long long param_; // modulus, extension d, or universe size
    double tol_;
    std::shared_ptr<const std::vector<double>> grid_;
};

/// p + q*sqrt(d) with rational p, q; d lives in the descriptor.
struct QuadValue {
    BigRat p;
    BigRat q;
    bool operator==(const QuadValue&) const = default;
};

enum class ElementClass { Zero, Unit, ZeroDivisor, NonUnitRegular, Undecidable };

std::string to_string(ElementClass c);

/// Immutable element of a concrete ring.
class RingValue {
public:
    RingValue() = default; // empty; usable only as a placeholder

    static RingValue make_integer(const RingDescriptor& ring, const BigInt& v);
    static RingValue make_rational(const RingDescriptor& ring, const BigRat& v);
    static RingValue make_quadratic(const RingDescriptor& ring, BigRat p, BigRat q);
    static RingValue make_boolean(const RingDescriptor& ring, std::uint64_t bits);
    static RingValue make_samples(const RingDescriptor& ring, std::vector<double> samples);
    static RingValue make_real(const RingDescriptor& ring, double v);

    const RingDescriptor& ring() const { return ring_; }

    const BigInt& as_integer() const { return std::get<BigInt>(payload_); }
    const BigRat& as_rational() const { return std::get<BigRat>(payload_); }
    long long as_residue() const { return std::get<long long>(payload_); }
    const QuadValue& as_quadratic() const { return std::get<QuadValue>(payload_); }
    std::uint64_t as_bits() const { return std::get<std::uint64_t>(payload_); }
    const std::vector<double>& as_samples() const { return std::get<std::vector<double>>(payload_); }
    double as_real() const { return std::get<double>(payload_); }

private:
    RingDescriptor ring_ = RingDescriptor::integers();
    std::variant<BigInt, BigRat, long long, QuadValue, std::uint64_t, std::vector<double>, double>
        payload_ = BigInt{0};

    friend RingValue ring_add(const RingValue&, const RingValue&);
    friend RingValue ring_neg(const RingValue&);
    friend RingValue ring_mul(const RingValue&, const RingValue&);
};

// -- element construction -------------------------------------------------

/// Additive identity of the ring.
RingValue ring_zero(const RingDescriptor& ring);
/// Multiplicative identity (the full universe set for BooleanSet).
RingValue ring_one(const RingDescriptor& ring);
/// Canonical image of a small integer (n * 1).
RingValue from_int(const RingDescriptor& ring, long long v);

// -- arithmetic ------------------------------------------------------------

RingValue ring_add(const RingValue& x, const RingValue& y);
RingValue ring_sub(const RingValue& x, const RingValue& y);
RingValue ring_neg(const RingValue& x);
RingValue ring_mul(const RingValue& x, const RingValue& y);
/// Multiplicative inverse; throws NotAUnit with a witness.
RingValue ring_inverse(const RingValue& x);
/// x * inverse(y).
RingValue ring_div(const RingValue& x, const RingValue& y);
RingValue ring_pow(const RingValue& x, long long e);

bool is_zero(const RingValue& x);
/// Equality; float kinds compare within the descriptor tolerance.
bool values_equal(const RingValue& x, const RingValue& y);

ElementClass classify_element(const RingValue& x);

/// Numeric image of an exact value (QuadraticExt uses a float sqrt(d)).
double to_double(const RingValue& x);

/// Canonical text form: "3/2", "1+1*sqrt(2)", "{1,3}", 12-significant-digit floats.
std::string to_string(const RingValue& x);

std::string format_double(double v); // fixed 12 significant digits

// -- polynomial root finding ----------------------------------------------

/// All roots of sum coeffs[i]*x^i in a finite ring, by exhaustion.
/// coeffs are ascending. Throws InfiniteRing otherwise.
std::vector<RingValue> brute_force_roots(const RingDescriptor& ring,
                                         const std::vector<RingValue>& coeffs);

struct RootResult {
    enum class Tag {
        TwoRoots,
        DoubleRoot,
        ExtensionRoots, // roots live in the QuadraticExt carried below
        DegenerateLinear,
        Inconsistent,  // a2 = a1 = 0, a0 != 0
        AllElements,   // a2 = a1 = a0 = 0
        ConjugatePair, // float kinds, negative discriminant
        NoRoots,       // no representable roots (QuadraticExt discriminant not a square)
    };
    Tag tag{Tag::NoRoots};
    std::vector<RingValue> roots;
    std::optional<RingDescriptor> extension;
    double modulus = 0.0; // ConjugatePair: |root|
    double angle = 0.0;   // ConjugatePair: arg(root)
    std::string note;
};

/// Roots of a2*r^2 + a1*r + a0 over a non-finite commutative ring.
/// Rational inputs with non-square discriminant come back in an
/// automatically constructed QuadraticExt.
RootResult quadratic_roots(const RingValue& a2, const RingValue& a1, const RingValue& a0);

/// Principal square root where one exists exactly (partial).
RingValue ring_sqrt(const RingValue& x);

/// d * s^2 decomposition of |n|: returns {squarefree d, s}. n must be >= 0.
std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n);

/// sqrt of a rational if it is a perfect square.
std::optional<BigRat> rational_sqrt(const BigRat& v);

/// All elements of a finite ring (Modular residues / BooleanSet subsets).
std::vector<RingValue> all_elements(const RingDescriptor& ring);

} // namespace scfact
