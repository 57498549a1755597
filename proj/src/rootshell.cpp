#include "planeshell/rootshell.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace planeshell {

namespace {

std::string vector_key(const GoldenVector& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << '|';
        os << v[i].field_string();
    }
    return os.str();
}

RingTag field_of(const VectorSet& set) {
    return set.weights.empty() ? RingTag::Qphi : set.weights[0].tag();
}

// Known single-length indecomposable types: (rank, cardinality) lookup plus
// the per-root Cartan histograms. Counts are the classical kissing data; -1
// marks a value whose exact count is not asserted (H3, which no built-in
// order realizes directly).
struct TypeRow {
    const char* label;
    int rank;
    long cardinality;
    // Cartan value as (a, b) for a + b*phi, with per-root count.
    std::vector<std::pair<std::pair<long, long>, long>> histogram;
};

const std::vector<TypeRow>& type_rows() {
    static const std::vector<TypeRow> rows = {
        {"A1", 1, 2, {{{2, 0}, 1}, {{-2, 0}, 1}}},
        {"A2", 2, 6, {{{2, 0}, 1}, {{1, 0}, 2}, {{-1, 0}, 2}, {{-2, 0}, 1}}},
        {"H2", 2, 10,
         {{{2, 0}, 1}, {{0, 1}, 2}, {{-1, 1}, 2}, {{1, -1}, 2}, {{0, -1}, 2}, {{-2, 0}, 1}}},
        {"H3", 3, 30,
         {{{2, 0}, 1}, {{0, 1}, -1}, {{1, 0}, -1}, {{-1, 1}, -1}, {{0, 0}, -1},
          {{1, -1}, -1}, {{-1, 0}, -1}, {{0, -1}, -1}, {{-2, 0}, 1}}},
        {"D4", 4, 24, {{{2, 0}, 1}, {{1, 0}, 8}, {{0, 0}, 6}, {{-1, 0}, 8}, {{-2, 0}, 1}}},
        {"H4", 4, 120,
         {{{2, 0}, 1}, {{0, 1}, 12}, {{1, 0}, 20}, {{-1, 1}, 12}, {{0, 0}, 30},
          {{1, -1}, 12}, {{-1, 0}, 20}, {{0, -1}, 12}, {{-2, 0}, 1}}},
        {"E8", 8, 240, {{{2, 0}, 1}, {{1, 0}, 56}, {{0, 0}, 126}, {{-1, 0}, 56}, {{-2, 0}, 1}}},
    };
    return rows;
}

}  // namespace

GoldenScalar inner(const VectorSet& set, const GoldenVector& u, const GoldenVector& v) {
    GoldenScalar s = GoldenScalar::zero(field_of(set));
    for (size_t i = 0; i < set.weights.size(); ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        s = s + set.weights[i] * u[i] * v[i];
    }
    return s;
}

GoldenScalar cartan_coefficient(const VectorSet& set, const GoldenVector& alpha,
                                const GoldenVector& beta) {
    GoldenScalar aa = inner(set, alpha, alpha);
    if (aa.is_zero()) throw std::domain_error("cartan_coefficient: zero root");
    GoldenScalar ab = inner(set, alpha, beta);
    return (ab + ab) / aa;
}

GoldenVector reflect(const VectorSet& set, const GoldenVector& alpha, const GoldenVector& x) {
    // Note the paper convention r_alpha(x) = x - (2<x,alpha>/<alpha,alpha>) alpha,
    // i.e. the Cartan coefficient of the pair (alpha, x).
    GoldenScalar c = cartan_coefficient(set, alpha, x);
    GoldenVector out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] - c * alpha[i];
    return out;
}

std::vector<std::vector<int>> decompose(const VectorSet& set) {
    const size_t n = set.vectors.size();
    std::vector<int> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int i) {
        while (parent[static_cast<size_t>(i)] != i) {
            parent[static_cast<size_t>(i)] = parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
            i = parent[static_cast<size_t>(i)];
        }
        return i;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (!inner(set, set.vectors[i], set.vectors[j]).is_zero()) {
                parent[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
            }
        }
    }
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    // Canonical order: by first member index (members are already sorted).
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::string identify(const VectorSet& set, const std::vector<int>& component) {
    std::vector<GoldenVector> vecs;
    vecs.reserve(component.size());
    for (int i : component) vecs.push_back(set.vectors[static_cast<size_t>(i)]);
    const int rank = rank_of(vecs);
    const long card = static_cast<long>(vecs.size());

    const TypeRow* row = nullptr;
    for (const TypeRow& r : type_rows()) {
        if (r.rank == rank && r.cardinality == card) {
            row = &r;
            break;
        }
    }
    if (!row) return "unknown";

    // Cross-check: per-root Cartan histograms must be identical across roots
    // (the reflection group is transitive on a single-length system) and must
    // match the classification row.
    std::map<std::string, long> first_hist;
    for (size_t a = 0; a < vecs.size(); ++a) {
        std::map<std::string, long> hist;
        for (size_t b = 0; b < vecs.size(); ++b) {
            hist[cartan_coefficient(set, vecs[a], vecs[b]).key()]++;
        }
        if (a == 0) {
            first_hist = std::move(hist);
        } else if (hist != first_hist) {
            return "unknown";
        }
    }
    RingTag tag = field_of(set);
    std::map<std::string, long> expected;
    for (const auto& [coeff, count] : row->histogram) {
        expected[GoldenScalar(coeff.first, coeff.second, tag).key()] = count;
    }
    if (expected.size() != first_hist.size()) return "unknown";
    for (const auto& [key, count] : first_hist) {
        auto it = expected.find(key);
        if (it == expected.end()) return "unknown";
        if (it->second >= 0 && it->second != count) return "unknown";
    }
    return row->label;
}

std::string composite_label(const std::vector<ComponentInfo>& components) {
    if (components.empty()) return "empty";
    std::map<std::string, int> counts;
    for (const ComponentInfo& c : components) counts[c.label]++;
    if (counts.size() == 1) {
        const std::string& label = counts.begin()->first;
        int k = counts.begin()->second;
        if (k == 1) return label;
        if (k == 2 && label != "A1") return label + "+" + label;
        return std::to_string(k) + label;
    }
    std::string out;
    for (const ComponentInfo& c : components) {
        if (!out.empty()) out += "+";
        out += c.label;
    }
    return out;
}

RootShellReport verify_root_shell(const VectorSet& set) {
    RootShellReport rep;
    const size_t n = set.vectors.size();
    if (n == 0) throw std::invalid_argument("verify_root_shell: empty shell");

    std::unordered_set<std::string> keys;
    for (const GoldenVector& v : set.vectors) keys.insert(vector_key(v));

    // R1: central symmetry.
    rep.r1_central_symmetry = true;
    for (const GoldenVector& v : set.vectors) {
        GoldenVector m = v;
        for (GoldenScalar& c : m) c = -c;
        if (!keys.count(vector_key(m))) rep.r1_central_symmetry = false;
    }

    // R2: one norm level, nonzero.
    rep.r2_single_sphere = true;
    GoldenScalar level = inner(set, set.vectors[0], set.vectors[0]);
    if (level.is_zero()) rep.r2_single_sphere = false;
    for (const GoldenVector& v : set.vectors) {
        if (inner(set, v, v) != level) rep.r2_single_sphere = false;
    }

    // R3 and R4, exhaustively over ordered pairs.
    rep.r3_reflection_closed = true;
    rep.r4_cartan_in_ring = true;
    std::map<std::string, GoldenScalar> values;
    for (const GoldenVector& alpha : set.vectors) {
        if (inner(set, alpha, alpha).is_zero()) {
            rep.r3_reflection_closed = false;
            rep.r4_cartan_in_ring = false;
            continue;
        }
        for (const GoldenVector& x : set.vectors) {
            if (!keys.count(vector_key(reflect(set, alpha, x)))) {
                rep.r3_reflection_closed = false;
            }
            GoldenScalar c = cartan_coefficient(set, alpha, x);
            if (!c.in_ring(set.ring)) rep.r4_cartan_in_ring = false;
            values.emplace(c.key(), c);
        }
    }
    for (const auto& [key, value] : values) rep.cartan_value_set.push_back(value);

    rep.crystallographic = true;
    for (const GoldenScalar& c : rep.cartan_value_set) {
        if (!c.in_ring(RingTag::Z)) rep.crystallographic = false;
    }

    rep.rank = rank_of(set.vectors);

    for (const auto& comp : decompose(set)) {
        ComponentInfo info;
        info.members = comp;
        info.cardinality = static_cast<long>(comp.size());
        std::vector<GoldenVector> vecs;
        for (int i : comp) vecs.push_back(set.vectors[static_cast<size_t>(i)]);
        info.rank = rank_of(vecs);
        info.label = identify(set, comp);
        rep.components.push_back(std::move(info));
    }
    return rep;
}

unsigned long totient(unsigned long n) {
    if (n == 0) return 0;
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

DihedralResult dihedral_admissible(long m) {
    if (m < 3) throw std::invalid_argument("dihedral_admissible: m must be >= 3");
    DihedralResult r;
    r.admissible = totient(2 * static_cast<unsigned long>(m)) <= 4;
    r.crystallographic = (m == 3 || m == 4 || m == 6);
    if (r.admissible && !r.crystallographic && m == 5) {
        // 2cos(pi/5) = phi.
        r.cartan_value = GoldenScalar::phi(RingTag::Zphi);
    }
    return r;
}

VectorSet orthogonal_subsystem(const VectorSet& set, size_t pivot) {
    VectorSet sub;
    sub.weights = set.weights;
    sub.ring = set.ring;
    const GoldenVector& alpha = set.vectors.at(pivot);
    for (const GoldenVector& v : set.vectors) {
        if (inner(set, alpha, v).is_zero()) sub.vectors.push_back(v);
    }
    return sub;
}

ObstructionSummary rank_obstruction_scan(long max_m, const VectorSet& h4_shell) {
    if (max_m < 6) throw std::invalid_argument("rank_obstruction_scan: max_m must be >= 6");
    ObstructionSummary s;
    s.max_m = max_m;
    for (long m = 3; m <= max_m; ++m) {
        DihedralResult r = dihedral_admissible(m);
        if (!r.admissible) continue;
        s.admissible_m.push_back(m);
        if (!r.crystallographic) {
            s.noncrystallographic_m.push_back(m);
            if (m == 5) s.pentagon_cartan = r.cartan_value;
        }
    }

    RootShellReport h4 = verify_root_shell(h4_shell);
    s.h4_verified = h4.all_axioms() && !h4.crystallographic && h4.rank == 4 &&
                    h4.components.size() == 1 && h4.components[0].label == "H4";

    VectorSet h3_shell = orthogonal_subsystem(h4_shell, 0);
    RootShellReport h3 = verify_root_shell(h3_shell);
    s.h3_verified = h3.all_axioms() && !h3.crystallographic && h3.rank == 3 &&
                    h3.components.size() == 1 && h3.components[0].label == "H3";

    // Dihedral scan admits only m = 5 (rank 2) among non-crystallographic
    // systems; H3 and H4 provide ranks 3 and 4. Nothing admissible remains in
    // rank 5 or higher.
    bool only_pentagon = s.noncrystallographic_m == std::vector<long>{5};
    if (only_pentagon) s.rank_list.push_back(2);
    if (s.h3_verified) s.rank_list.push_back(3);
    if (s.h4_verified) s.rank_list.push_back(4);
    s.no_rank_ge5 = only_pentagon && s.h3_verified && s.h4_verified;
    return s;
}

}  // namespace planeshell
