#pragma once

#include <map>
#include <string>
#include <vector>

#include "planeshell/shells.hpp"

namespace planeshell {

/// Value of the algebraic Hopf map h(a, b) = (2 a conj(b), N(a) - N(b)).
/// Construction checks the norm identity N(first) + second^2 = (N(a)+N(b))^2.
struct HopfImagePoint {
    AlgebraElement first;
    GoldenScalar second;
};

HopfImagePoint hopf(const AlgebraElement& a, const AlgebraElement& b);

/// N(2 a conj(b)) + (N(a) - N(b))^2 == (N(a) + N(b))^2, exactly.
bool norm_identity_check(const AlgebraElement& a, const AlgebraElement& b);

struct EquatorReport {
    long pairs = 0;
    long failures = 0;
    long image_size = 0;
    bool image_equals_unit = false;
    bool ok() const { return failures == 0 && image_equals_unit; }
};

/// For every unscaled balanced pair (u, v): the second Hopf coordinate
/// vanishes and the scale-aware first coordinate u conj(v) lies in the unit
/// shell. Exhaustive and exact.
EquatorReport equator_restriction(const Shell& unit);

struct FibrationProfile {
    long base_size = 0;
    long fiber_size = 0;  // common fiber cardinality when constant
    bool constant = false;
    bool closed = false;  // every value of pi lies in the unit shell
    long total_pairs = 0;
    std::map<std::string, long> multiplicity;  // value key -> fiber size
};

/// Profile of pi(u, v) = u v^{-1} over all pairs, computed as u conj(v) on
/// the unit shell. Constant fibers of size |U| over a base of size |U| is
/// the principal-fibration statement.
FibrationProfile fibration_profile(const Shell& unit, int threads = 1);

struct LoopReport {
    bool closure = false;
    bool unit_member = false;
    bool inverse_property = false;
    bool moufang = false;
    bool artin = false;
    bool moufang_exhaustive = false;
    long moufang_triples = 0;
    long pair_checks = 0;
    bool all() const { return closure && unit_member && inverse_property && moufang && artin; }
};

/// Loop-theoretic battery on the unit shell: multiplicative closure, unit
/// membership, two-sided inverse property, Moufang identity (exhaustive for
/// |U| <= 24 or when forced, else 10^4 seeded random triples), and the Artin
/// reassociation (u v^{-1}) v = u on all pairs.
LoopReport loop_checks(const Shell& unit, bool exhaustive_moufang = false);

}  // namespace planeshell
