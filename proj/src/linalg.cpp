#include "planeshell/linalg.hpp"

#include <stdexcept>

namespace planeshell {

namespace {

RingTag field_of(const GoldenMatrix& m) {
    if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
    return m[0][0].tag();
}

}  // namespace

std::optional<GoldenVector> solve_columns(const std::vector<GoldenVector>& columns,
                                          const GoldenVector& rhs) {
    const size_t r = columns.size();
    const size_t d = rhs.size();
    const RingTag tag = rhs.empty() ? RingTag::Qphi : rhs[0].tag();
    // Augmented matrix, rows d x (r + 1).
    GoldenMatrix aug(d, GoldenVector(r + 1, GoldenScalar::zero(tag)));
    for (size_t j = 0; j < r; ++j) {
        for (size_t i = 0; i < d; ++i) aug[i][j] = columns[j][i];
    }
    for (size_t i = 0; i < d; ++i) aug[i][r] = rhs[i];

    size_t row = 0;
    std::vector<size_t> pivot_rows;
    for (size_t col = 0; col < r && row < d; ++col) {
        size_t p = row;
        while (p < d && aug[p][col].is_zero()) ++p;
        if (p == d) {
            // Full column rank is a precondition; a zero column below the
            // current row means dependent basis vectors.
            throw std::invalid_argument("solve_columns: columns not independent");
        }
        std::swap(aug[p], aug[row]);
        GoldenScalar inv = aug[row][col].inverse();
        for (size_t j = col; j <= r; ++j) aug[row][j] = aug[row][j] * inv;
        for (size_t i = 0; i < d; ++i) {
            if (i == row || aug[i][col].is_zero()) continue;
            GoldenScalar f = aug[i][col];
            for (size_t j = col; j <= r; ++j) aug[i][j] = aug[i][j] - f * aug[row][j];
        }
        pivot_rows.push_back(row);
        ++row;
    }
    // Consistency: all rows below the pivots must have zero rhs.
    for (size_t i = row; i < d; ++i) {
        if (!aug[i][r].is_zero()) return std::nullopt;
    }
    GoldenVector out(r, GoldenScalar::zero(tag));
    for (size_t col = 0; col < r; ++col) out[col] = aug[col][r];
    return out;
}

int rank_of(const std::vector<GoldenVector>& vectors) {
    if (vectors.empty()) return 0;
    GoldenMatrix basis;
    for (const GoldenVector& v : vectors) {
        GoldenVector w = v;
        for (const GoldenVector& b : basis) {
            // b is normalized with leading 1 at its pivot.
            size_t p = 0;
            while (p < b.size() && b[p].is_zero()) ++p;
            if (p < w.size() && !w[p].is_zero()) {
                GoldenScalar f = w[p];
                for (size_t j = p; j < w.size(); ++j) w[j] = w[j] - f * b[j];
            }
        }
        size_t p = 0;
        while (p < w.size() && w[p].is_zero()) ++p;
        if (p == w.size()) continue;
        GoldenScalar inv = w[p].inverse();
        for (size_t j = p; j < w.size(); ++j) w[j] = w[j] * inv;
        basis.push_back(std::move(w));
    }
    return static_cast<int>(basis.size());
}

std::optional<GoldenVector> ldl_pivots(const GoldenMatrix& m) {
    const size_t n = m.size();
    const RingTag tag = field_of(m);
    GoldenMatrix lower(n, GoldenVector(n, GoldenScalar::zero(tag)));
    GoldenVector d(n, GoldenScalar::zero(tag));
    for (size_t j = 0; j < n; ++j) {
        GoldenScalar sum = m[j][j];
        for (size_t k = 0; k < j; ++k) sum = sum - lower[j][k] * lower[j][k] * d[k];
        if (sum.is_zero()) return std::nullopt;
        d[j] = sum;
        for (size_t i = j + 1; i < n; ++i) {
            GoldenScalar s = m[i][j];
            for (size_t k = 0; k < j; ++k) s = s - lower[i][k] * lower[j][k] * d[k];
            lower[i][j] = s / d[j];
        }
    }
    return d;
}

}  // namespace planeshell
