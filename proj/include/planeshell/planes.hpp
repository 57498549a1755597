#pragma once

#include <string>
#include <vector>

#include "planeshell/rootshell.hpp"
#include "planeshell/shells.hpp"

namespace planeshell {

/// Point of the integral plane O^2 = O + O, components in one algebra.
struct PlaneElement {
    AlgebraElement x;
    AlgebraElement y;
    std::string key() const { return x.key() + "#" + y.key(); }
};

/// inv_sqrt2 marks balanced shells: the stored elements are the unscaled
/// Q = 2 representatives and the tag records the symbolic 1/sqrt(2)
/// normalization, which never materializes (1/sqrt(2) is not in Q(phi)).
enum class ScaleTag { unit, inv_sqrt2 };

struct PlaneShell {
    const Order* order = nullptr;
    GoldenScalar level;
    ScaleTag scale = ScaleTag::unit;
    std::vector<PlaneElement> elements;  // canonically sorted
};

/// Q(x, y) = N(x) + N(y), exact.
GoldenScalar plane_q(const PlaneElement& p);

/// 2r x 2r Gram matrix of the plane polar form on the concatenated ring
/// basis; block diagonal with two copies of the order Gram matrix.
GoldenMatrix plane_gram(const Order& order);

/// (S_1 x {0}) union ({0} x S_1), at Q = 1.
PlaneShell axis_shell(const Order& order, const Shell& unit);

/// Full level set of Q computed by short-vector enumeration on the rank-2n
/// plane trace form, independent of the no-splitting lemma.
PlaneShell enumerate_plane_shell(const Order& order, const GoldenScalar& level, int threads = 1);

/// Exact set equality of the enumerated plane shell with the axis shell.
bool no_splitting_check(const PlaneShell& enumerated, const PlaneShell& axis);

struct DoublingReport {
    bool ok = false;
    std::string label;
    bool factors_clean = false;        // every axis component lies in one factor
    bool factor_types_match = false;   // per-factor types equal the unit-shell types
    bool factor_elements_match = false;  // each factor restricts to S_1 exactly
    std::vector<ComponentInfo> axis_components;
    std::vector<ComponentInfo> unit_components;
};

/// Decomposes and identifies the axis shell and checks that it consists of
/// two orthogonal copies of the unit-shell system.
DoublingReport doubling_report(const Order& order, const Shell& unit, const PlaneShell& axis);

/// All pairs (u, v) of unit-shell elements, stored unscaled at Q = 2 with
/// scale tag inv_sqrt2. Cardinality |S_1|^2.
PlaneShell balanced_shell(const Order& order, const Shell& unit);

struct HullReport {
    bool single_level = false;
    bool cardinality_ok = false;
    long vertex_count = 0;
    bool ok() const { return single_level && cardinality_ok; }
};

/// Vertex-level hull facts: all elements on one Q-level, and the free-sum /
/// product vertex counts 2|S_1| (axis) and |S_1|^2 (balanced).
HullReport hull_vertex_checks(const PlaneShell& shell, long unit_cardinality);

/// True iff (x, y) -> (y, x) maps the shell onto itself.
bool swap_check(const PlaneShell& shell);

/// Axis or plane shell as a vector set over the 2d plane coordinates, with
/// the plane inner product B_Q / 2.
VectorSet plane_vector_set(const PlaneShell& shell);

/// Unit shell as a vector set with inner product B / 2.
VectorSet shell_vector_set(const Shell& shell);

}  // namespace planeshell
