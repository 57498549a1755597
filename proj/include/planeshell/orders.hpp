#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeshell/algebra.hpp"
#include "planeshell/golden.hpp"
#include "planeshell/linalg.hpp"

namespace planeshell {

struct UnknownOrderError : std::invalid_argument {
    explicit UnknownOrderError(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderValidationError : std::runtime_error {
    explicit OrderValidationError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * A named integral order: coefficient ring, ambient algebra presentation,
 * explicit ring basis, cached Gram and trace-form matrices.
 *
 * Construction validates that the basis is linearly independent over the
 * fraction field, that the Gram matrix has ring entries and is positive
 * definite in both embeddings, that basis norms lie in the ring, and that
 * 1 is a ring combination of the basis. Instances are immutable.
 */
class Order {
public:
    Order(std::string name, RingTag ring, const AlgebraSpec& spec,
          std::vector<AlgebraElement> basis);

    const std::string& name() const { return name_; }
    RingTag ring() const { return ring_; }
    const AlgebraSpec& spec() const { return *spec_; }

    /// Ring basis (length = ring rank).
    const std::vector<AlgebraElement>& basis() const { return basis_; }
    /// Z-basis: the ring basis for Z-orders, {b_i} then {phi b_i} for Z[phi]-orders.
    const std::vector<AlgebraElement>& z_basis() const { return z_basis_; }

    int ring_rank() const { return static_cast<int>(basis_.size()); }
    int z_rank() const { return static_cast<int>(z_basis_.size()); }

    /// Gram matrix of the polar form on the ring basis, entries ring-tagged.
    const GoldenMatrix& gram() const { return gram_; }

    /// Integer Gram matrix of the trace form on the Z-basis: B itself for
    /// Z-orders, Tr(B) summed over both embeddings for Z[phi]-orders.
    const std::vector<std::vector<mpz_class>>& trace_gram() const { return trace_gram_; }

private:
    std::string name_;
    RingTag ring_;
    const AlgebraSpec* spec_;
    std::vector<AlgebraElement> basis_;
    std::vector<AlgebraElement> z_basis_;
    GoldenMatrix gram_;
    std::vector<std::vector<mpz_class>> trace_gram_;
};

/// Registry of the built-in orders. Names: Z, gaussian, eisenstein, hamilton,
/// hurwitz, cayley_graves, coxeter_dickson, cyclotomic10, icosian, plus the
/// optional hybrids hybrid_2A2, hybrid_4A2, hybrid_2D4.
const Order& builtin(const std::string& name);

/// The nine synoptic-table orders in table order; hybrids appended on request.
std::vector<std::string> builtin_names(bool with_hybrids = false);

/// Membership test with coefficient witness: solves the exact linear system
/// over the fraction field and checks ring integrality of the coefficients.
std::optional<GoldenVector> contains(const Order& order, const AlgebraElement& x);

struct AxiomReport {
    bool unit_member = false;
    bool conj_stable = false;
    bool mult_closed = false;
    bool norms_in_ring = false;
    bool polar_in_ring = false;
    int products_checked = 0;
    bool all() const {
        return unit_member && conj_stable && mult_closed && norms_in_ring && polar_in_ring;
    }
};

/// Full order-axiom battery: 1 in O, conjugation stability, closure of all
/// basis products, basis norms and polar values in the ring.
AxiomReport verify_order_axioms(const Order& order);

namespace detail {
/// Integer row Hermite normal form; returns the canonical upper-triangular
/// basis of the row span. Used to build the Coxeter-Dickson basis.
std::vector<std::vector<mpz_class>> row_hnf(std::vector<std::vector<mpz_class>> rows);

/// The Coxeter-Dickson generator set for a given coordinate transposition
/// applied to the Kirmse halving family (lines plus complements).
std::vector<AlgebraElement> coxeter_dickson_generators(int swap_a, int swap_b);

/// HNF-derived basis of the Z-span of the given generators, which must have
/// coordinates in (1/2)Z^d.
std::vector<AlgebraElement> hnf_basis(const AlgebraSpec& spec,
                                      const std::vector<AlgebraElement>& gens);
}  // namespace detail

}  // namespace planeshell
