#include "planeshell/algebra.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>

namespace planeshell {

namespace {

constexpr RingTag kField = RingTag::Qphi;

GoldenScalar fsc(long num, long den = 1) { return GoldenScalar(mpq_class(num, den), 0, kField); }
GoldenScalar fphi(long anum, long aden, long bnum, long bden) {
    return GoldenScalar(mpq_class(anum, aden), mpq_class(bnum, bden), kField);
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
    if (&a.spec() != &b.spec()) {
        throw AlgebraMismatchError(std::string(op) + ": elements of " + a.spec().name + " and " +
                                   b.spec().name);
    }
}

using Table = std::vector<std::vector<MonomialTerm>>;

Table diagonal_square_table(int dim, const GoldenScalar& t_squared) {
    // Basis {1, t} with t^2 given; dim is 1 or 2.
    Table t(static_cast<size_t>(dim), std::vector<MonomialTerm>(static_cast<size_t>(dim),
                                                                MonomialTerm{0, fsc(1)}));
    for (int i = 0; i < dim; ++i) {
        t[0][static_cast<size_t>(i)] = {i, fsc(1)};
        t[static_cast<size_t>(i)][0] = {i, fsc(1)};
    }
    if (dim == 2) t[1][1] = {0, t_squared};
    return t;
}

Table quaternion_table() {
    Table t(4, std::vector<MonomialTerm>(4, MonomialTerm{0, fsc(1)}));
    auto set = [&](int i, int j, int k, long sign) { t[static_cast<size_t>(i)][static_cast<size_t>(j)] = {k, fsc(sign)}; };
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        set(i, 0, i, 1);
    }
    for (int i = 1; i < 4; ++i) set(i, i, 0, -1);
    // i j = k cyclically.
    const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (auto& c : cyc) {
        set(c[0], c[1], c[2], 1);
        set(c[1], c[0], c[2], -1);
    }
    return t;
}

Table octonion_table() {
    // Fano triples (a,b,c) read cyclically: e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b.
    static const std::array<std::array<int, 3>, 7> triples = {
        {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
    Table t(8, std::vector<MonomialTerm>(8, MonomialTerm{0, fsc(1)}));
    auto set = [&](int i, int j, int k, long sign) { t[static_cast<size_t>(i)][static_cast<size_t>(j)] = {k, fsc(sign)}; };
    for (int i = 0; i < 8; ++i) {
        set(0, i, i, 1);
        set(i, 0, i, 1);
    }
    for (int i = 1; i < 8; ++i) set(i, i, 0, -1);
    for (const auto& tr : triples) {
        const int rot[3][3] = {{tr[0], tr[1], tr[2]}, {tr[1], tr[2], tr[0]}, {tr[2], tr[0], tr[1]}};
        for (auto& r : rot) {
            set(r[0], r[1], r[2], 1);
            set(r[1], r[0], r[2], -1);
        }
    }
    return t;
}

// Cayley-Dickson style doubling with gamma = -1: basis e_0..e_{d-1}, e_k l.
// (x + y l)(u + v l) = (x u - conj(v) y) + (v x + y conj(u)) l.
Table doubled_table(const Table& base, int d) {
    auto base_conj_sign = [&](int k) { return k == 0 ? 1 : -1; };
    Table t(static_cast<size_t>(2 * d),
            std::vector<MonomialTerm>(static_cast<size_t>(2 * d), MonomialTerm{0, fsc(1)}));
    for (int i = 0; i < 2 * d; ++i) {
        for (int j = 0; j < 2 * d; ++j) {
            MonomialTerm r{0, fsc(0)};
            if (i < d && j < d) {
                r = base[static_cast<size_t>(i)][static_cast<size_t>(j)];
            } else if (i < d && j >= d) {
                // e_i (e_{j'} l) = (e_{j'} e_i) l
                MonomialTerm m = base[static_cast<size_t>(j - d)][static_cast<size_t>(i)];
                r = {m.index + d, m.coeff};
            } else if (i >= d && j < d) {
                // (e_{i'} l) e_j = (e_{i'} conj(e_j)) l
                MonomialTerm m = base[static_cast<size_t>(i - d)][static_cast<size_t>(j)];
                r = {m.index + d, m.coeff * fsc(base_conj_sign(j))};
            } else {
                // (e_{i'} l)(e_{j'} l) = -(conj(e_{j'}) e_{i'})
                MonomialTerm m = base[static_cast<size_t>(j - d)][static_cast<size_t>(i - d)];
                r = {m.index, m.coeff * fsc(-base_conj_sign(j - d))};
            }
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = r;
        }
    }
    return t;
}

std::vector<GoldenScalar> doubled_diagonal(const std::vector<GoldenScalar>& base) {
    std::vector<GoldenScalar> d = base;
    d.insert(d.end(), base.begin(), base.end());
    return d;
}

AlgebraElement random_element(const AlgebraSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    std::vector<GoldenScalar> c;
    c.reserve(static_cast<size_t>(spec.dim));
    for (int i = 0; i < spec.dim; ++i) {
        c.push_back(GoldenScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                                 spec.field));
    }
    return AlgebraElement(spec, std::move(c));
}

void validate_spec(const AlgebraSpec& spec) {
    const int d = spec.dim;
    for (int i = 0; i < d; ++i) {
        const MonomialTerm& left = spec.structure_constants[0][static_cast<size_t>(i)];
        const MonomialTerm& right = spec.structure_constants[static_cast<size_t>(i)][0];
        if (left.index != i || right.index != i || left.coeff != fsc(1) || right.coeff != fsc(1)) {
            throw std::logic_error(spec.name + ": e_0 is not a two-sided unit");
        }
    }
    for (const GoldenScalar& w : spec.norm_diagonal) {
        if (!w.is_totally_positive()) {
            throw std::logic_error(spec.name + ": norm diagonal not totally positive");
        }
    }
    std::mt19937_64 rng(0x706c616e65u ^ static_cast<unsigned long>(spec.dim));
    for (int s = 0; s < 100; ++s) {
        AlgebraElement x = random_element(spec, rng);
        AlgebraElement y = random_element(spec, rng);
        if (norm(mul(x, y)) != norm(x) * norm(y)) {
            throw std::logic_error(spec.name + ": norm not multiplicative");
        }
    }
}

std::map<std::string, std::unique_ptr<AlgebraSpec>> build_registry() {
    std::map<std::string, std::unique_ptr<AlgebraSpec>> reg;
    auto put = [&](std::string name, int dim, Table table, std::vector<GoldenScalar> diag) {
        auto spec = std::make_unique<AlgebraSpec>();
        spec->name = name;
        spec->dim = dim;
        spec->field = kField;
        spec->structure_constants = std::move(table);
        spec->norm_diagonal = std::move(diag);
        validate_spec(*spec);
        reg.emplace(std::move(name), std::move(spec));
    };

    const GoldenScalar one = fsc(1);
    put("R", 1, diagonal_square_table(1, fsc(0)), {one});
    put("C", 2, diagonal_square_table(2, fsc(-1)), {one, one});
    put("Ceis", 2, diagonal_square_table(2, fsc(-3, 4)), {one, fsc(3, 4)});
    // t^2 = -(3 - phi)/4, so zeta_10 = phi/2 + t has norm phi^2/4 + (3-phi)/4 = 1.
    put("Cgolden", 2, diagonal_square_table(2, fphi(-3, 4, 1, 4)), {one, fphi(3, 4, -1, 4)});
    put("H", 4, quaternion_table(), {one, one, one, one});
    put("O", 8, octonion_table(), std::vector<GoldenScalar>(8, one));

    Table ceis = diagonal_square_table(2, fsc(-3, 4));
    Table heis = doubled_table(ceis, 2);
    std::vector<GoldenScalar> heis_diag = doubled_diagonal({one, fsc(3, 4)});
    put("Heis", 4, heis, heis_diag);
    put("Oeis", 8, doubled_table(heis, 4), doubled_diagonal(heis_diag));
    return reg;
}

}  // namespace

std::vector<GoldenScalar> AlgebraSpec::structure_vector(int i, int j) const {
    std::vector<GoldenScalar> v(static_cast<size_t>(dim), GoldenScalar::zero(field));
    const MonomialTerm& m = structure_constants[static_cast<size_t>(i)][static_cast<size_t>(j)];
    v[static_cast<size_t>(m.index)] = m.coeff;
    return v;
}

const AlgebraSpec& algebra(const std::string& name) {
    static const std::map<std::string, std::unique_ptr<AlgebraSpec>> registry = build_registry();
    auto it = registry.find(name);
    if (it == registry.end()) {
        throw std::invalid_argument("unknown algebra presentation: " + name);
    }
    return *it->second;
}

AlgebraElement::AlgebraElement(const AlgebraSpec& spec, std::vector<GoldenScalar> coords)
    : spec_(&spec) {
    if (static_cast<int>(coords.size()) != spec.dim) {
        throw AlgebraMismatchError("coordinate length does not match algebra dimension");
    }
    for (const GoldenScalar& c : coords) {
        if (c.tag() != spec.field) {
            throw RingMismatchError("element coordinates must use the algebra base field");
        }
    }
    coords_ = std::make_shared<const std::vector<GoldenScalar>>(std::move(coords));
}

bool AlgebraElement::is_zero() const {
    for (const GoldenScalar& c : *coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::string AlgebraElement::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < coords_->size(); ++i) {
        if (i) os << '|';
        os << (*coords_)[i].field_string();
    }
    return os.str();
}

AlgebraElement zero_element(const AlgebraSpec& spec) {
    return AlgebraElement(spec, std::vector<GoldenScalar>(static_cast<size_t>(spec.dim),
                                                          GoldenScalar::zero(spec.field)));
}

AlgebraElement unit_element(const AlgebraSpec& spec) { return basis_element(spec, 0); }

AlgebraElement basis_element(const AlgebraSpec& spec, int k) {
    std::vector<GoldenScalar> c(static_cast<size_t>(spec.dim), GoldenScalar::zero(spec.field));
    c[static_cast<size_t>(k)] = GoldenScalar::one(spec.field);
    return AlgebraElement(spec, std::move(c));
}

AlgebraElement element_from_ints(const AlgebraSpec& spec, const std::vector<long>& v) {
    std::vector<GoldenScalar> c;
    c.reserve(v.size());
    for (long x : v) c.push_back(GoldenScalar::integer(x, spec.field));
    return AlgebraElement(spec, std::move(c));
}

AlgebraElement element_from_halves(const AlgebraSpec& spec, const std::vector<long>& v) {
    std::vector<GoldenScalar> c;
    c.reserve(v.size());
    for (long x : v) c.push_back(GoldenScalar(mpq_class(x, 2), 0, spec.field));
    return AlgebraElement(spec, std::move(c));
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b, "mul");
    const AlgebraSpec& spec = a.spec();
    std::vector<GoldenScalar> out(static_cast<size_t>(spec.dim), GoldenScalar::zero(spec.field));
    for (int i = 0; i < spec.dim; ++i) {
        const GoldenScalar& ai = a.coord(i);
        if (ai.is_zero()) continue;
        for (int j = 0; j < spec.dim; ++j) {
            const GoldenScalar& bj = b.coord(j);
            if (bj.is_zero()) continue;
            const MonomialTerm& m = spec.structure_constants[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (m.coeff.is_zero()) continue;
            out[static_cast<size_t>(m.index)] = out[static_cast<size_t>(m.index)] + ai * bj * m.coeff;
        }
    }
    return AlgebraElement(spec, std::move(out));
}

AlgebraElement conj(const AlgebraElement& a) {
    std::vector<GoldenScalar> c = a.coords();
    for (size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
    return AlgebraElement(a.spec(), std::move(c));
}

GoldenScalar norm(const AlgebraElement& a) {
    GoldenScalar n = GoldenScalar::zero(a.spec().field);
    for (int i = 0; i < a.dim(); ++i) {
        const GoldenScalar& c = a.coord(i);
        if (c.is_zero()) continue;
        n = n + a.spec().norm_diagonal[static_cast<size_t>(i)] * c * c;
    }
    return n;
}

GoldenScalar polar(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b, "polar");
    // B(x, y) = N(x+y) - N(x) - N(y) = 2 sum d_i x_i y_i for a diagonal norm.
    GoldenScalar s = GoldenScalar::zero(a.spec().field);
    for (int i = 0; i < a.dim(); ++i) {
        const GoldenScalar& x = a.coord(i);
        const GoldenScalar& y = b.coord(i);
        if (x.is_zero() || y.is_zero()) continue;
        s = s + a.spec().norm_diagonal[static_cast<size_t>(i)] * x * y;
    }
    return s + s;
}

AlgebraElement inverse(const AlgebraElement& u) {
    GoldenScalar n = norm(u);
    if (n.is_zero()) throw ZeroNormError("inverse of a zero-norm element");
    return scale(n.inverse(), conj(u));
}

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c) {
    require_same_algebra(a, b, "associator");
    require_same_algebra(a, c, "associator");
    return sub(mul(mul(a, b), c), mul(a, mul(b, c)));
}

bool moufang_check(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
    return mul(mul(mul(a, b), a), c) == mul(a, mul(b, mul(a, c)));
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b, "add");
    std::vector<GoldenScalar> c;
    c.reserve(a.coords().size());
    for (int i = 0; i < a.dim(); ++i) c.push_back(a.coord(i) + b.coord(i));
    return AlgebraElement(a.spec(), std::move(c));
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b, "sub");
    std::vector<GoldenScalar> c;
    c.reserve(a.coords().size());
    for (int i = 0; i < a.dim(); ++i) c.push_back(a.coord(i) - b.coord(i));
    return AlgebraElement(a.spec(), std::move(c));
}

AlgebraElement neg(const AlgebraElement& a) {
    std::vector<GoldenScalar> c;
    c.reserve(a.coords().size());
    for (int i = 0; i < a.dim(); ++i) c.push_back(-a.coord(i));
    return AlgebraElement(a.spec(), std::move(c));
}

AlgebraElement scale(const GoldenScalar& s, const AlgebraElement& a) {
    std::vector<GoldenScalar> c;
    c.reserve(a.coords().size());
    for (int i = 0; i < a.dim(); ++i) c.push_back(s * a.coord(i));
    return AlgebraElement(a.spec(), std::move(c));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (&a.spec() != &b.spec()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        if (a.coord(i) != b.coord(i)) return false;
    }
    return true;
}

}  // namespace planeshell
