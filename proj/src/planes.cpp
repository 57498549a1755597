#include "planeshell/planes.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace planeshell {

namespace {

bool plane_key_less(const PlaneElement& a, const PlaneElement& b) {
    std::string ax = a.x.key(), bx = b.x.key();
    if (ax != bx) return ax < bx;
    return a.y.key() < b.y.key();
}

}  // namespace

GoldenScalar plane_q(const PlaneElement& p) { return norm(p.x) + norm(p.y); }

GoldenMatrix plane_gram(const Order& order) {
    const int r = order.ring_rank();
    const RingTag tag = order.ring();
    GoldenMatrix g(static_cast<size_t>(2 * r),
                   GoldenVector(static_cast<size_t>(2 * r), GoldenScalar::zero(tag)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const GoldenScalar& v = order.gram()[static_cast<size_t>(i)][static_cast<size_t>(j)];
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            g[static_cast<size_t>(r + i)][static_cast<size_t>(r + j)] = v;
        }
    }
    return g;
}

PlaneShell axis_shell(const Order& order, const Shell& unit) {
    const AlgebraElement zero = zero_element(order.spec());
    std::vector<PlaneElement> elems;
    elems.reserve(2 * unit.elements.size());
    for (const AlgebraElement& u : unit.elements) elems.push_back({u, zero});
    for (const AlgebraElement& u : unit.elements) elems.push_back({zero, u});
    std::sort(elems.begin(), elems.end(), plane_key_less);
    return PlaneShell{&order, unit.level, ScaleTag::unit, std::move(elems)};
}

PlaneShell enumerate_plane_shell(const Order& order, const GoldenScalar& level, int threads) {
    auto ring_level = level.narrowed(order.ring());
    if (!ring_level) {
        throw EnumerationError(order.name() + ": plane level not in coefficient ring");
    }
    if (!ring_level->is_totally_nonneg()) {
        throw EnumerationError(order.name() + ": plane level must be totally nonnegative");
    }

    // Plane trace form diag(T, T) on the doubled Z-basis.
    const auto& t = order.trace_gram();
    const size_t n = t.size();
    std::vector<std::vector<mpz_class>> doubled(2 * n, std::vector<mpz_class>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            doubled[i][j] = t[i][j];
            doubled[n + i][n + j] = t[i][j];
        }
    }
    TraceForm form = trace_form_of_matrix(std::move(doubled), order.name() + " plane");

    mpq_class target_q = (order.ring() == RingTag::Z) ? 2 * ring_level->a()
                                                      : 2 * ring_level->trace_rational();
    auto vectors = enumerate_exact_level(form, target_q.get_num(), threads);

    const AlgebraSpec& spec = order.spec();
    const auto& zb = order.z_basis();
    GoldenScalar want = ring_level->widened(spec.field);
    auto combine = [&](const std::vector<long>& c, size_t offset) {
        std::vector<GoldenScalar> coords(static_cast<size_t>(spec.dim),
                                         GoldenScalar::zero(spec.field));
        for (size_t i = 0; i < n; ++i) {
            long ci = c[offset + i];
            if (ci == 0) continue;
            GoldenScalar mult = GoldenScalar::integer(ci, spec.field);
            for (int k = 0; k < spec.dim; ++k) {
                const GoldenScalar& v = zb[i].coord(k);
                if (v.is_zero()) continue;
                coords[static_cast<size_t>(k)] = coords[static_cast<size_t>(k)] + mult * v;
            }
        }
        return AlgebraElement(spec, std::move(coords));
    };

    std::vector<PlaneElement> elems;
    for (const auto& c : vectors) {
        PlaneElement p{combine(c, 0), combine(c, n)};
        if (plane_q(p) == want) elems.push_back(std::move(p));
    }
    std::sort(elems.begin(), elems.end(), plane_key_less);
    return PlaneShell{&order, *ring_level, ScaleTag::unit, std::move(elems)};
}

bool no_splitting_check(const PlaneShell& enumerated, const PlaneShell& axis) {
    if (enumerated.elements.size() != axis.elements.size()) return false;
    for (size_t i = 0; i < axis.elements.size(); ++i) {
        if (enumerated.elements[i].key() != axis.elements[i].key()) return false;
    }
    return true;
}

PlaneShell balanced_shell(const Order& order, const Shell& unit) {
    std::vector<PlaneElement> elems;
    elems.reserve(unit.elements.size() * unit.elements.size());
    // The unit list is canonically sorted, so pair order is already canonical.
    for (const AlgebraElement& u : unit.elements) {
        for (const AlgebraElement& v : unit.elements) elems.push_back({u, v});
    }
    GoldenScalar two = GoldenScalar::integer(2, order.ring());
    return PlaneShell{&order, two, ScaleTag::inv_sqrt2, std::move(elems)};
}

HullReport hull_vertex_checks(const PlaneShell& shell, long unit_cardinality) {
    HullReport rep;
    rep.vertex_count = static_cast<long>(shell.elements.size());
    GoldenScalar want = shell.level.widened(shell.order->spec().field);
    rep.single_level = true;
    for (const PlaneElement& p : shell.elements) {
        if (plane_q(p) != want) rep.single_level = false;
    }
    long expected = (shell.scale == ScaleTag::inv_sqrt2) ? unit_cardinality * unit_cardinality
                                                         : 2 * unit_cardinality;
    rep.cardinality_ok = rep.vertex_count == expected;
    return rep;
}

bool swap_check(const PlaneShell& shell) {
    std::unordered_set<std::string> keys;
    keys.reserve(shell.elements.size() * 2);
    for (const PlaneElement& p : shell.elements) keys.insert(p.key());
    for (const PlaneElement& p : shell.elements) {
        if (!keys.count(PlaneElement{p.y, p.x}.key())) return false;
    }
    return true;
}

VectorSet shell_vector_set(const Shell& shell) {
    VectorSet set;
    set.ring = shell.order->ring();
    set.weights = shell.order->spec().norm_diagonal;
    set.vectors.reserve(shell.elements.size());
    for (const AlgebraElement& x : shell.elements) set.vectors.push_back(x.coords());
    return set;
}

VectorSet plane_vector_set(const PlaneShell& shell) {
    VectorSet set;
    set.ring = shell.order->ring();
    const auto& diag = shell.order->spec().norm_diagonal;
    set.weights = diag;
    set.weights.insert(set.weights.end(), diag.begin(), diag.end());
    set.vectors.reserve(shell.elements.size());
    for (const PlaneElement& p : shell.elements) {
        GoldenVector v = p.x.coords();
        const GoldenVector& y = p.y.coords();
        v.insert(v.end(), y.begin(), y.end());
        set.vectors.push_back(std::move(v));
    }
    return set;
}

DoublingReport doubling_report(const Order& order, const Shell& unit, const PlaneShell& axis) {
    if (unit.order != &order || axis.order != &order) {
        throw std::invalid_argument("doubling_report: shells of a different order");
    }
    DoublingReport rep;

    VectorSet unit_set = shell_vector_set(unit);
    for (const auto& comp : decompose(unit_set)) {
        ComponentInfo info;
        info.members = comp;
        info.cardinality = static_cast<long>(comp.size());
        std::vector<GoldenVector> vecs;
        for (int i : comp) vecs.push_back(unit_set.vectors[static_cast<size_t>(i)]);
        info.rank = rank_of(vecs);
        info.label = identify(unit_set, comp);
        rep.unit_components.push_back(std::move(info));
    }

    VectorSet axis_set = plane_vector_set(axis);
    std::vector<std::vector<int>> axis_comps = decompose(axis_set);
    for (const auto& comp : axis_comps) {
        ComponentInfo info;
        info.members = comp;
        info.cardinality = static_cast<long>(comp.size());
        std::vector<GoldenVector> vecs;
        for (int i : comp) vecs.push_back(axis_set.vectors[static_cast<size_t>(i)]);
        info.rank = rank_of(vecs);
        info.label = identify(axis_set, comp);
        rep.axis_components.push_back(std::move(info));
    }

    // Each axis component must lie in a single factor, and the two factor
    // halves must each restrict to the unit shell exactly.
    rep.factors_clean = true;
    std::vector<std::string> first_types, second_types;
    std::unordered_set<std::string> first_keys, second_keys;
    for (size_t ci = 0; ci < axis_comps.size(); ++ci) {
        bool any_first = false, any_second = false;
        for (int i : axis_comps[ci]) {
            const PlaneElement& p = axis.elements[static_cast<size_t>(i)];
            if (!p.x.is_zero()) any_first = true;
            if (!p.y.is_zero()) any_second = true;
        }
        if (any_first == any_second) {
            rep.factors_clean = false;
            continue;
        }
        const std::string& label = rep.axis_components[ci].label;
        for (int i : axis_comps[ci]) {
            const PlaneElement& p = axis.elements[static_cast<size_t>(i)];
            if (any_first) first_keys.insert(p.x.key());
            else second_keys.insert(p.y.key());
        }
        (any_first ? first_types : second_types).push_back(label);
    }

    std::vector<std::string> unit_types;
    for (const ComponentInfo& c : rep.unit_components) unit_types.push_back(c.label);
    std::sort(unit_types.begin(), unit_types.end());
    std::sort(first_types.begin(), first_types.end());
    std::sort(second_types.begin(), second_types.end());
    rep.factor_types_match = (first_types == unit_types) && (second_types == unit_types);

    std::unordered_set<std::string> unit_keys;
    for (const AlgebraElement& u : unit.elements) unit_keys.insert(u.key());
    rep.factor_elements_match = (first_keys == unit_keys) && (second_keys == unit_keys);

    rep.label = composite_label(rep.axis_components);
    bool identified = true;
    for (const ComponentInfo& c : rep.axis_components) {
        if (c.label == "unknown") identified = false;
    }
    rep.ok = rep.factors_clean && rep.factor_types_match && rep.factor_elements_match && identified;
    return rep;
}

}  // namespace planeshell
