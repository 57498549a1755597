#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeshell/golden.hpp"
#include "planeshell/linalg.hpp"

namespace planeshell {

/**
 * A finite set of exact coordinate vectors with a diagonal inner product
 * <u, v> = sum w_i u_i v_i, equal to half the polar form of the ambient
 * quadratic module. ring is the coefficient ring used for the Cartan
 * integrality axiom.
 */
struct VectorSet {
    std::vector<GoldenVector> vectors;
    GoldenVector weights;
    RingTag ring = RingTag::Z;
};

GoldenScalar inner(const VectorSet& set, const GoldenVector& u, const GoldenVector& v);

/// Cartan coefficient 2<alpha, beta>/<alpha, alpha>.
GoldenScalar cartan_coefficient(const VectorSet& set, const GoldenVector& alpha,
                                const GoldenVector& beta);

/// Reflection r_alpha(x) = x - (2<x,alpha>/<alpha,alpha>) alpha; alpha nonzero.
GoldenVector reflect(const VectorSet& set, const GoldenVector& alpha, const GoldenVector& x);

struct ComponentInfo {
    int rank = 0;
    long cardinality = 0;
    std::string label;  // "unknown" when no classification row matches
    std::vector<int> members;
};

struct RootShellReport {
    bool r1_central_symmetry = false;
    bool r2_single_sphere = false;
    bool r3_reflection_closed = false;
    bool r4_cartan_in_ring = false;
    std::vector<GoldenScalar> cartan_value_set;  // deduplicated, canonically sorted
    int rank = 0;
    std::vector<ComponentInfo> components;
    bool crystallographic = false;  // every Cartan value lies in Z
    bool all_axioms() const {
        return r1_central_symmetry && r2_single_sphere && r3_reflection_closed &&
               r4_cartan_in_ring;
    }
};

/// Exhaustive check of axioms (R1)-(R4) plus decomposition and type
/// identification. A mixed-level input fails R2 but the remaining checks
/// still run.
RootShellReport verify_root_shell(const VectorSet& set);

/// Connected components of the graph with edges at nonzero inner product.
std::vector<std::vector<int>> decompose(const VectorSet& set);

/// Type of an indecomposable component: lookup on (rank, cardinality) with a
/// Cartan-histogram cross-check; "unknown" on any mismatch.
std::string identify(const VectorSet& set, const std::vector<int>& component);

/// Composite label for a component list, e.g. "2A1", "D4+D4", "16A1".
std::string composite_label(const std::vector<ComponentInfo>& components);

/// Euler totient via trial-division factorization.
unsigned long totient(unsigned long n);

struct DihedralResult {
    bool admissible = false;        // totient(2m) <= 4
    bool crystallographic = false;  // m in {3, 4, 6}
    std::optional<GoldenScalar> cartan_value;  // 2cos(pi/m) when in Z[phi]
};

/// Admissibility of the dihedral system I_2(m), m >= 3: the Cartan value
/// 2cos(pi/m) has degree totient(2m)/2 over Q and must live in Q(sqrt 5).
DihedralResult dihedral_admissible(long m);

struct ObstructionSummary {
    long max_m = 0;
    std::vector<long> admissible_m;               // all admissible m <= max_m
    std::vector<long> noncrystallographic_m;      // expected {5}
    std::optional<GoldenScalar> pentagon_cartan;  // expected phi
    bool h3_verified = false;
    bool h4_verified = false;
    std::vector<int> rank_list;                   // expected {2, 3, 4}
    bool no_rank_ge5 = false;
};

/// The computational content of the rank obstruction: a totient scan over all
/// dihedral orders up to max_m, combined with exhaustive verification of the
/// H4 shell passed in and of its rank-3 subsystem (the roots orthogonal to a
/// fixed root).
ObstructionSummary rank_obstruction_scan(long max_m, const VectorSet& h4_shell);

/// Sub-vector-set of the roots orthogonal to set.vectors[pivot].
VectorSet orthogonal_subsystem(const VectorSet& set, size_t pivot);

}  // namespace planeshell
