#include "planeshell/orders.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace planeshell {

namespace {

GoldenScalar narrow_or_throw(const GoldenScalar& v, RingTag ring, const std::string& what) {
    auto n = v.narrowed(ring);
    if (!n) {
        throw OrderValidationError(what + ": value " + v.field_string() + " not in " +
                                   ring_tag_name(ring));
    }
    return *n;
}

std::vector<GoldenVector> basis_columns(const std::vector<AlgebraElement>& basis) {
    std::vector<GoldenVector> cols;
    cols.reserve(basis.size());
    for (const AlgebraElement& b : basis) cols.push_back(b.coords());
    return cols;
}

}  // namespace

Order::Order(std::string name, RingTag ring, const AlgebraSpec& spec,
             std::vector<AlgebraElement> basis)
    : name_(std::move(name)), ring_(ring), spec_(&spec), basis_(std::move(basis)) {
    if (ring_ != RingTag::Z && ring_ != RingTag::Zphi) {
        throw OrderValidationError(name_ + ": coefficient ring must be Z or Zphi");
    }
    if (basis_.empty()) throw OrderValidationError(name_ + ": empty basis");
    for (const AlgebraElement& b : basis_) {
        if (&b.spec() != spec_) {
            throw OrderValidationError(name_ + ": basis element in wrong algebra");
        }
    }

    const int r = ring_rank();
    gram_.assign(static_cast<size_t>(r), GoldenVector());
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            gram_[static_cast<size_t>(i)].push_back(
                narrow_or_throw(polar(basis_[static_cast<size_t>(i)], basis_[static_cast<size_t>(j)]),
                                ring_, name_ + ": Gram entry"));
        }
    }
    for (const AlgebraElement& b : basis_) {
        narrow_or_throw(norm(b), ring_, name_ + ": basis norm");
    }

    // Independence plus positive definiteness in both embeddings: every LDL
    // pivot of the Gram matrix must be totally positive.
    GoldenMatrix field_gram(static_cast<size_t>(r), GoldenVector());
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            field_gram[static_cast<size_t>(i)].push_back(
                gram_[static_cast<size_t>(i)][static_cast<size_t>(j)].widened(spec_->field));
        }
    }
    auto pivots = ldl_pivots(field_gram);
    if (!pivots) throw OrderValidationError(name_ + ": basis not linearly independent");
    for (const GoldenScalar& p : *pivots) {
        if (!p.is_totally_positive()) {
            throw OrderValidationError(name_ + ": Gram matrix not totally positive definite");
        }
    }

    z_basis_ = basis_;
    if (ring_ == RingTag::Zphi) {
        GoldenScalar phi = GoldenScalar::phi(spec_->field);
        for (const AlgebraElement& b : basis_) z_basis_.push_back(scale(phi, b));
    }

    const int n = z_rank();
    trace_gram_.assign(static_cast<size_t>(n), std::vector<mpz_class>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GoldenScalar bij = polar(z_basis_[static_cast<size_t>(i)], z_basis_[static_cast<size_t>(j)]);
            mpq_class t = (ring_ == RingTag::Z) ? bij.a() : bij.trace_rational();
            if (ring_ == RingTag::Z && bij.b() != 0) {
                throw OrderValidationError(name_ + ": polar value outside Z on a Z-order basis");
            }
            if (t.get_den() != 1) {
                throw OrderValidationError(name_ + ": trace form entry not an integer");
            }
            trace_gram_[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.get_num();
        }
    }

    // Unitality: 1 must be a ring combination of the basis.
    if (!contains(*this, unit_element(*spec_))) {
        throw OrderValidationError(name_ + ": 1 is not a ring combination of the basis");
    }
}

std::optional<GoldenVector> contains(const Order& order, const AlgebraElement& x) {
    if (&x.spec() != &order.spec()) {
        throw AlgebraMismatchError("contains: element not in the order's ambient algebra");
    }
    auto sol = solve_columns(basis_columns(order.basis()), x.coords());
    if (!sol) return std::nullopt;
    GoldenVector witness;
    witness.reserve(sol->size());
    for (const GoldenScalar& c : *sol) {
        auto n = c.narrowed(order.ring());
        if (!n) return std::nullopt;
        witness.push_back(*n);
    }
    return witness;
}

AxiomReport verify_order_axioms(const Order& order) {
    AxiomReport rep;
    rep.unit_member = contains(order, unit_element(order.spec())).has_value();
    rep.conj_stable = true;
    for (const AlgebraElement& b : order.basis()) {
        if (!contains(order, conj(b))) rep.conj_stable = false;
    }
    rep.mult_closed = true;
    for (const AlgebraElement& bi : order.basis()) {
        for (const AlgebraElement& bj : order.basis()) {
            ++rep.products_checked;
            if (!contains(order, mul(bi, bj))) rep.mult_closed = false;
        }
    }
    rep.norms_in_ring = true;
    for (const AlgebraElement& b : order.basis()) {
        if (!norm(b).in_ring(order.ring())) rep.norms_in_ring = false;
    }
    rep.polar_in_ring = true;
    for (const AlgebraElement& bi : order.basis()) {
        for (const AlgebraElement& bj : order.basis()) {
            if (!polar(bi, bj).in_ring(order.ring())) rep.polar_in_ring = false;
        }
    }
    return rep;
}

namespace detail {

std::vector<std::vector<mpz_class>> row_hnf(std::vector<std::vector<mpz_class>> rows) {
    if (rows.empty()) return rows;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows.size(); ++col) {
        // Reduce column below row r until a single nonzero entry remains.
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] != 0 &&
                    (best == rows.size() ||
                     mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0)) {
                    best = i;
                }
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool reduced = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0) {
            for (size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        }
        // Canonicalize entries above the pivot into [0, pivot).
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
            }
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<AlgebraElement> coxeter_dickson_generators(int swap_a, int swap_b) {
    const AlgebraSpec& oct = algebra("O");
    // Kirmse family: {0} together with each Fano line, plus the complements.
    static const std::array<std::array<int, 3>, 7> lines = {
        {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
    auto apply_swap = [&](int v) {
        if (v == swap_a) return swap_b;
        if (v == swap_b) return swap_a;
        return v;
    };
    std::vector<AlgebraElement> gens;
    for (int i = 0; i < 8; ++i) gens.push_back(basis_element(oct, i));
    for (const auto& line : lines) {
        std::array<bool, 8> in_set{};
        in_set[static_cast<size_t>(apply_swap(0))] = true;
        for (int v : line) in_set[static_cast<size_t>(apply_swap(v))] = true;
        std::vector<long> halves(8, 0), co_halves(8, 0);
        for (int k = 0; k < 8; ++k) {
            halves[static_cast<size_t>(k)] = in_set[static_cast<size_t>(k)] ? 1 : 0;
            co_halves[static_cast<size_t>(k)] = in_set[static_cast<size_t>(k)] ? 0 : 1;
        }
        gens.push_back(element_from_halves(oct, halves));
        gens.push_back(element_from_halves(oct, co_halves));
    }
    return gens;
}

std::vector<AlgebraElement> hnf_basis(const AlgebraSpec& spec,
                                      const std::vector<AlgebraElement>& gens) {
    std::vector<std::vector<mpz_class>> rows;
    for (const AlgebraElement& g : gens) {
        std::vector<mpz_class> row;
        for (const GoldenScalar& c : g.coords()) {
            mpq_class doubled = 2 * c.a();
            if (c.b() != 0 || doubled.get_den() != 1) {
                throw std::invalid_argument("hnf_basis: coordinates must lie in (1/2)Z");
            }
            row.push_back(doubled.get_num());
        }
        rows.push_back(std::move(row));
    }
    std::vector<AlgebraElement> basis;
    for (const auto& row : row_hnf(std::move(rows))) {
        std::vector<GoldenScalar> coords;
        for (const mpz_class& v : row) {
            coords.push_back(GoldenScalar(mpq_class(v, 2), 0, spec.field));
        }
        basis.push_back(AlgebraElement(spec, std::move(coords)));
    }
    return basis;
}

}  // namespace detail

namespace {

std::unique_ptr<Order> make_order(const std::string& name) {
    const GoldenScalar half(mpq_class(1, 2), 0, RingTag::Qphi);
    const GoldenScalar mhalf(mpq_class(-1, 2), 0, RingTag::Qphi);
    const GoldenScalar zero = GoldenScalar::zero(RingTag::Qphi);
    const GoldenScalar one = GoldenScalar::one(RingTag::Qphi);
    const GoldenScalar half_phi(0, mpq_class(1, 2), RingTag::Qphi);

    if (name == "Z") {
        const AlgebraSpec& a = algebra("R");
        return std::make_unique<Order>(name, RingTag::Z, a,
                                       std::vector<AlgebraElement>{unit_element(a)});
    }
    if (name == "gaussian") {
        const AlgebraSpec& a = algebra("C");
        return std::make_unique<Order>(
            name, RingTag::Z, a,
            std::vector<AlgebraElement>{basis_element(a, 0), basis_element(a, 1)});
    }
    if (name == "eisenstein") {
        const AlgebraSpec& a = algebra("Ceis");
        AlgebraElement omega(a, {mhalf, one});
        return std::make_unique<Order>(
            name, RingTag::Z, a, std::vector<AlgebraElement>{basis_element(a, 0), omega});
    }
    if (name == "cyclotomic10") {
        const AlgebraSpec& a = algebra("Cgolden");
        AlgebraElement zeta(a, {half_phi, one});
        return std::make_unique<Order>(
            name, RingTag::Zphi, a, std::vector<AlgebraElement>{basis_element(a, 0), zeta});
    }
    if (name == "hamilton") {
        const AlgebraSpec& a = algebra("H");
        std::vector<AlgebraElement> basis;
        for (int i = 0; i < 4; ++i) basis.push_back(basis_element(a, i));
        return std::make_unique<Order>(name, RingTag::Z, a, std::move(basis));
    }
    if (name == "hurwitz") {
        const AlgebraSpec& a = algebra("H");
        return std::make_unique<Order>(
            name, RingTag::Z, a,
            std::vector<AlgebraElement>{basis_element(a, 0), basis_element(a, 1),
                                        basis_element(a, 2),
                                        element_from_halves(a, {1, 1, 1, 1})});
    }
    if (name == "icosian") {
        const AlgebraSpec& a = algebra("H");
        // Z[phi]-basis {1, i, (1+i+j+k)/2, (-1+(phi-1)i-phi j)/2}.
        AlgebraElement b3(a, {mhalf, GoldenScalar(mpq_class(-1, 2), mpq_class(1, 2), RingTag::Qphi),
                              GoldenScalar(0, mpq_class(-1, 2), RingTag::Qphi), zero});
        return std::make_unique<Order>(
            name, RingTag::Zphi, a,
            std::vector<AlgebraElement>{basis_element(a, 0), basis_element(a, 1),
                                        element_from_halves(a, {1, 1, 1, 1}), b3});
    }
    if (name == "cayley_graves") {
        const AlgebraSpec& a = algebra("O");
        std::vector<AlgebraElement> basis;
        for (int i = 0; i < 8; ++i) basis.push_back(basis_element(a, i));
        return std::make_unique<Order>(name, RingTag::Z, a, std::move(basis));
    }
    if (name == "coxeter_dickson") {
        // Kirmse halving family with coordinates 0 and 1 interchanged; the
        // unswapped family is not multiplicatively closed. The choice is
        // certified downstream: order axioms, |S_1| = 240, E8 identification.
        const AlgebraSpec& a = algebra("O");
        return std::make_unique<Order>(name, RingTag::Z, a,
                                       detail::hnf_basis(a, detail::coxeter_dickson_generators(0, 1)));
    }
    if (name == "hybrid_2A2") {
        const AlgebraSpec& a = algebra("Heis");
        AlgebraElement omega(a, {mhalf, one, zero, zero});
        AlgebraElement omega_j(a, {zero, zero, mhalf, one});
        return std::make_unique<Order>(
            name, RingTag::Z, a,
            std::vector<AlgebraElement>{basis_element(a, 0), omega, basis_element(a, 2), omega_j});
    }
    if (name == "hybrid_4A2") {
        const AlgebraSpec& a = algebra("Oeis");
        std::vector<AlgebraElement> basis;
        for (int block = 0; block < 4; ++block) {
            basis.push_back(basis_element(a, 2 * block));
            std::vector<GoldenScalar> w(8, zero);
            w[static_cast<size_t>(2 * block)] = mhalf;
            w[static_cast<size_t>(2 * block + 1)] = one;
            basis.push_back(AlgebraElement(a, std::move(w)));
        }
        return std::make_unique<Order>(name, RingTag::Z, a, std::move(basis));
    }
    if (name == "hybrid_2D4") {
        const AlgebraSpec& a = algebra("O");
        return std::make_unique<Order>(
            name, RingTag::Z, a,
            std::vector<AlgebraElement>{basis_element(a, 0), basis_element(a, 1),
                                        basis_element(a, 2),
                                        element_from_halves(a, {1, 1, 1, 1, 0, 0, 0, 0}),
                                        basis_element(a, 4), basis_element(a, 5),
                                        basis_element(a, 6),
                                        element_from_halves(a, {0, 0, 0, 0, 1, 1, 1, 1})});
    }
    throw UnknownOrderError("unknown order: " + name);
}

}  // namespace

const Order& builtin(const std::string& name) {
    static std::map<std::string, std::unique_ptr<Order>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(name);
    if (it == registry.end()) {
        it = registry.emplace(name, make_order(name)).first;
    }
    return *it->second;
}

std::vector<std::string> builtin_names(bool with_hybrids) {
    std::vector<std::string> names = {"Z",        "gaussian",      "eisenstein",
                                      "hamilton", "hurwitz",       "cayley_graves",
                                      "coxeter_dickson", "cyclotomic10", "icosian"};
    if (with_hybrids) {
        names.push_back("hybrid_2A2");
        names.push_back("hybrid_4A2");
        names.push_back("hybrid_2D4");
    }
    return names;
}

}  // namespace planeshell
