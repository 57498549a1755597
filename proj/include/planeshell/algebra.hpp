#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "planeshell/golden.hpp"

namespace planeshell {

struct AlgebraMismatchError : std::invalid_argument {
    explicit AlgebraMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroNormError : std::domain_error {
    explicit ZeroNormError(const std::string& what) : std::domain_error(what) {}
};

/// One entry of a structure-constant table: e_i * e_j = coeff * e_index.
struct MonomialTerm {
    int index;
    GoldenScalar coeff;
};

/**
 * A real composition algebra given by structure constants over Q(phi),
 * with a diagonal norm form N(sum x_i e_i) = sum norm_diagonal[i] x_i^2.
 *
 * Registered presentations:
 *   R        dim 1
 *   C        dim 2, i^2 = -1
 *   Ceis     dim 2, t^2 = -3/4        (t = sqrt(3)/2 * i; omega = -1/2 + t)
 *   Cgolden  dim 2, t^2 = -(3-phi)/4  (zeta_10 = phi/2 + t)
 *   H        dim 4, quaternions over {1, i, j, k}
 *   Heis     dim 4, doubling of Ceis over {1, t, j, tj}
 *   O        dim 8, octonions with Fano triples
 *            (1,2,3),(1,4,5),(1,7,6),(2,4,6),(2,5,7),(3,4,7),(3,6,5)
 *   Oeis     dim 8, doubling of Heis
 *
 * Each registration validates that e_0 is a two-sided unit, that the norm
 * diagonal is totally positive, and that N(xy) = N(x) N(y) holds exactly on
 * a fixed sample of 100 random pairs.
 */
class AlgebraSpec {
public:
    std::string name;
    int dim;
    RingTag field;  // always Qphi
    std::vector<std::vector<MonomialTerm>> structure_constants;  // dim x dim
    std::vector<GoldenScalar> norm_diagonal;

    /// Structure constants of e_i e_j expanded to a full coordinate vector.
    std::vector<GoldenScalar> structure_vector(int i, int j) const;

    AlgebraSpec() = default;
    AlgebraSpec(const AlgebraSpec&) = delete;
    AlgebraSpec& operator=(const AlgebraSpec&) = delete;
};

/// Immutable registry lookup by presentation name; throws on unknown names.
const AlgebraSpec& algebra(const std::string& name);

/**
 * Immutable element of a composition algebra. Coordinate storage is shared,
 * so copies are cheap and elements are safe to use across threads.
 */
class AlgebraElement {
public:
    AlgebraElement(const AlgebraSpec& spec, std::vector<GoldenScalar> coords);

    const AlgebraSpec& spec() const { return *spec_; }
    const std::vector<GoldenScalar>& coords() const { return *coords_; }
    const GoldenScalar& coord(int i) const { return (*coords_)[static_cast<size_t>(i)]; }
    int dim() const { return spec_->dim; }

    bool is_zero() const;

    /// Canonical serialization of the coordinates, also the sort key.
    std::string key() const;

private:
    const AlgebraSpec* spec_;
    std::shared_ptr<const std::vector<GoldenScalar>> coords_;
};

AlgebraElement zero_element(const AlgebraSpec& spec);
AlgebraElement unit_element(const AlgebraSpec& spec);
AlgebraElement basis_element(const AlgebraSpec& spec, int k);
/// Element with integer coordinates.
AlgebraElement element_from_ints(const AlgebraSpec& spec, const std::vector<long>& v);
/// Element with coordinates v[i]/2.
AlgebraElement element_from_halves(const AlgebraSpec& spec, const std::vector<long>& v);

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement conj(const AlgebraElement& a);
GoldenScalar norm(const AlgebraElement& a);
GoldenScalar polar(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement inverse(const AlgebraElement& u);
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c);
/// Moufang identity ((ab)a)c == a(b(ac)), exact.
bool moufang_check(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement neg(const AlgebraElement& a);
AlgebraElement scale(const GoldenScalar& s, const AlgebraElement& a);

bool operator==(const AlgebraElement& a, const AlgebraElement& b);
inline bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

}  // namespace planeshell
