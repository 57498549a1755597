#pragma once

#include <string>
#include <vector>

#include "planeshell/orders.hpp"

namespace planeshell {

struct IndefiniteFormError : std::runtime_error {
    explicit IndefiniteFormError(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationError : std::invalid_argument {
    explicit EnumerationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Integer Gram matrix of the trace form on a Z-basis of the order, together
/// with its exact rational LDL^T factors. Positive definite by construction.
struct TraceForm {
    std::vector<std::vector<mpz_class>> matrix;
    std::vector<std::vector<mpq_class>> lower;  // unit lower triangular
    std::vector<mpq_class> pivots;              // positive
};

TraceForm trace_form(const Order& order);

/// Builds the LDL data for an arbitrary symmetric positive definite integer
/// matrix; throws IndefiniteFormError when a pivot is not positive.
TraceForm trace_form_of_matrix(std::vector<std::vector<mpz_class>> m, const std::string& what);

/// All integer vectors c with c^T M c equal to target, exactly. The outermost
/// coefficient range may be partitioned across threads; the result is sorted
/// lexicographically and independent of the schedule.
std::vector<std::vector<long>> enumerate_exact_level(const TraceForm& form,
                                                     const mpz_class& target, int threads = 1);

/// Finite norm shell S_m = {x in O : N(x) = m}, canonically sorted.
struct Shell {
    const Order* order = nullptr;
    GoldenScalar level;
    std::vector<AlgebraElement> elements;
};

/// Enumerates S_m by exact short-vector search at trace level Tr(2m) on the
/// trace-form lattice, then filters by exact norm equality in the ring.
/// The level must be totally nonnegative.
Shell enumerate_shell(const Order& order, const GoldenScalar& level, int threads = 1);

/// Histogram of coordinate types: elements grouped by the multiset of
/// absolute coordinate values, each type listed with its count.
struct ProfileEntry {
    std::vector<std::string> type;  // sorted serialized absolute values
    long count = 0;
};
std::vector<ProfileEntry> shell_profile(const Shell& shell);

/// Canonical sort key shared by shells and certificates.
bool element_key_less(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace planeshell
