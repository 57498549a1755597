#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planeshell {

/// Coefficient domains. Z and Zphi are ring modes, Q and Qphi the
/// corresponding fraction fields.
enum class RingTag { Z, Zphi, Q, Qphi };

const char* ring_tag_name(RingTag tag);
bool ring_tag_is_field(RingTag tag);
bool ring_tag_has_phi(RingTag tag);

struct RingMismatchError : std::invalid_argument {
    explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Exact scalar a + b*phi with phi^2 = phi + 1.
 *
 * Ring-mode values (Z, Zphi) keep integer coefficients; field-mode values
 * (Q, Qphi) keep lowest-terms fractions with positive denominators, which
 * mpq_class maintains on every operation. Values without phi keep b = 0.
 * Immutable after construction.
 */
class GoldenScalar {
public:
    /// Zero in Z; the common default for aggregate members.
    GoldenScalar() : a_(0), b_(0), tag_(RingTag::Z) {}
    GoldenScalar(mpq_class a, mpq_class b, RingTag tag);

    static GoldenScalar zero(RingTag tag) { return GoldenScalar(0, 0, tag); }
    static GoldenScalar one(RingTag tag) { return GoldenScalar(1, 0, tag); }
    static GoldenScalar phi(RingTag tag) { return GoldenScalar(0, 1, tag); }
    static GoldenScalar integer(long v, RingTag tag) { return GoldenScalar(v, 0, tag); }
    /// p/q as a field-mode value.
    static GoldenScalar fraction(long num, long den, RingTag tag);

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    RingTag tag() const { return tag_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Image under the nontrivial Galois automorphism, phi -> 1 - phi.
    GoldenScalar galois() const { return GoldenScalar(a_ + b_, -b_, tag_); }

    /// Exact sign of a + b*phi as a real number. Writes the value as
    /// ((2a+b) + b*sqrt(5))/2 and resolves the sign by comparing (2a+b)^2
    /// against 5 b^2, splitting on the signs of 2a+b and b. No floating point.
    int sign_exact() const;

    /// Nonnegative in both real embeddings.
    bool is_totally_nonneg() const {
        return sign_exact() >= 0 && galois().sign_exact() >= 0;
    }
    bool is_totally_positive() const {
        return sign_exact() > 0 && galois().sign_exact() > 0;
    }

    /// True when the value is representable with the given tag.
    bool in_ring(RingTag tag) const;

    /// Lossless promotion along Z -> {Zphi, Q} -> Qphi. Throws RingMismatchError
    /// when the target does not contain the source domain.
    GoldenScalar widened(RingTag to) const;

    /// Checked conversion to a smaller domain.
    std::optional<GoldenScalar> narrowed(RingTag to) const;

    /// Rational trace 2a + b, the sum of the two real embeddings.
    mpq_class trace_rational() const { return 2 * a_ + b_; }

    /// Field-mode serialization "p/q+r/s*phi", lowest terms, signed numerators.
    std::string field_string() const;

    /// Ring-mode coefficients as a pair of arbitrary-precision integers.
    std::pair<mpz_class, mpz_class> ring_pair() const;

    /// Canonical string key for hashing and ordering, any tag.
    std::string key() const;

    friend GoldenScalar operator+(const GoldenScalar& x, const GoldenScalar& y);
    friend GoldenScalar operator-(const GoldenScalar& x, const GoldenScalar& y);
    friend GoldenScalar operator*(const GoldenScalar& x, const GoldenScalar& y);
    friend GoldenScalar operator-(const GoldenScalar& x);
    friend bool operator==(const GoldenScalar& x, const GoldenScalar& y);
    friend bool operator!=(const GoldenScalar& x, const GoldenScalar& y) { return !(x == y); }

    /// Multiplicative inverse; field tags only.
    GoldenScalar inverse() const;

private:
    mpq_class a_, b_;
    RingTag tag_;
};

inline GoldenScalar gmul(const GoldenScalar& x, const GoldenScalar& y) { return x * y; }

GoldenScalar operator/(const GoldenScalar& x, const GoldenScalar& y);

/// All pairs (a, b) with a + b = 1, both totally nonnegative, and both
/// coefficients bounded by search_bound in absolute value. ring must be
/// Z or Zphi, search_bound >= 1.
std::vector<std::pair<GoldenScalar, GoldenScalar>>
one_decompositions(RingTag ring, long search_bound);

}  // namespace planeshell
