#include "planeshell/shells.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_set>

namespace planeshell {

namespace {

// Integer range of x with d (x + s)^2 <= r, for d > 0, r >= 0. Empty range is
// signalled by lo > hi. Exact: the square root is bracketed by integer square
// roots of the scaled numerator, then the candidates are adjusted by direct
// comparison.
struct LevelRange {
    long lo = 0, hi = -1;
};

LevelRange level_range(const mpq_class& d, const mpq_class& s, const mpq_class& r) {
    if (r < 0) return {};
    mpq_class q = r / d;
    mpz_class scaled = q.get_num() * q.get_den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpq_class upper((root + 1), q.get_den());  // sqrt(q) <= upper

    auto cost_ok = [&](const mpz_class& x) {
        mpq_class e = mpq_class(x) + s;
        return d * e * e <= r;
    };

    mpq_class hv = -s + upper;
    mpz_class hi;
    mpz_fdiv_q(hi.get_mpz_t(), hv.get_num().get_mpz_t(), hv.get_den().get_mpz_t());
    while (!cost_ok(hi)) {
        if (mpq_class(hi) + s <= 0) return {};
        --hi;
    }
    mpq_class lv = -s - upper;
    mpz_class lo;
    mpz_cdiv_q(lo.get_mpz_t(), lv.get_num().get_mpz_t(), lv.get_den().get_mpz_t());
    while (!cost_ok(lo)) {
        if (mpq_class(lo) + s >= 0) return {};
        ++lo;
    }
    if (lo > hi) return {};
    if (!lo.fits_slong_p() || !hi.fits_slong_p()) {
        throw std::overflow_error("enumeration coefficient out of long range");
    }
    return {lo.get_si(), hi.get_si()};
}

struct Enumerator {
    const TraceForm& form;
    int n;

    mpq_class shift(int j, const std::vector<long>& coords) const {
        mpq_class s = 0;
        for (int i = j + 1; i < n; ++i) {
            if (coords[static_cast<size_t>(i)] == 0) continue;
            s += form.lower[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 coords[static_cast<size_t>(i)];
        }
        return s;
    }

    void descend(int j, std::vector<long>& coords, const mpq_class& remaining,
                 std::vector<std::vector<long>>& out) const {
        if (j < 0) {
            if (remaining == 0) out.push_back(coords);
            return;
        }
        const mpq_class& d = form.pivots[static_cast<size_t>(j)];
        mpq_class s = shift(j, coords);
        LevelRange range = level_range(d, s, remaining);
        for (long v = range.lo; v <= range.hi; ++v) {
            coords[static_cast<size_t>(j)] = v;
            mpq_class e = mpq_class(v) + s;
            descend(j - 1, coords, remaining - d * e * e, out);
        }
        coords[static_cast<size_t>(j)] = 0;
    }
};

}  // namespace

TraceForm trace_form_of_matrix(std::vector<std::vector<mpz_class>> m, const std::string& what) {
    TraceForm form;
    form.matrix = std::move(m);
    const size_t n = form.matrix.size();
    form.lower.assign(n, std::vector<mpq_class>(n, 0));
    form.pivots.assign(n, 0);
    for (size_t j = 0; j < n; ++j) {
        mpq_class sum = form.matrix[j][j];
        for (size_t k = 0; k < j; ++k) sum -= form.lower[j][k] * form.lower[j][k] * form.pivots[k];
        if (sum <= 0) {
            throw IndefiniteFormError(what + ": trace form is not positive definite");
        }
        form.pivots[j] = sum;
        form.lower[j][j] = 1;
        for (size_t i = j + 1; i < n; ++i) {
            mpq_class s = form.matrix[i][j];
            for (size_t k = 0; k < j; ++k) s -= form.lower[i][k] * form.lower[j][k] * form.pivots[k];
            form.lower[i][j] = s / form.pivots[j];
        }
    }
    return form;
}

TraceForm trace_form(const Order& order) {
    return trace_form_of_matrix(order.trace_gram(), order.name());
}

std::vector<std::vector<long>> enumerate_exact_level(const TraceForm& form,
                                                     const mpz_class& target, int threads) {
    const int n = static_cast<int>(form.matrix.size());
    Enumerator en{form, n};
    std::vector<std::vector<long>> result;
    if (target < 0) return result;
    if (n == 0) return result;

    // Top level range, then a partition of its values across workers.
    mpq_class top_target(target);
    const mpq_class& d = form.pivots[static_cast<size_t>(n - 1)];
    LevelRange top = level_range(d, 0, top_target);
    if (top.lo > top.hi) return result;

    long span = top.hi - top.lo + 1;
    int workers = static_cast<int>(std::max<long>(1, std::min<long>(threads, span)));
    if (workers == 1) {
        std::vector<long> coords(static_cast<size_t>(n), 0);
        for (long v = top.lo; v <= top.hi; ++v) {
            coords[static_cast<size_t>(n - 1)] = v;
            mpq_class e(v);
            en.descend(n - 2, coords, top_target - d * e * e, result);
        }
        return result;
    }

    std::vector<std::future<std::vector<std::vector<long>>>> futures;
    for (int w = 0; w < workers; ++w) {
        long lo = top.lo + span * w / workers;
        long hi = top.lo + span * (w + 1) / workers - 1;
        futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
            std::vector<std::vector<long>> part;
            std::vector<long> coords(static_cast<size_t>(n), 0);
            for (long v = lo; v <= hi; ++v) {
                coords[static_cast<size_t>(n - 1)] = v;
                mpq_class e(v);
                en.descend(n - 2, coords, top_target - d * e * e, part);
            }
            return part;
        }));
    }
    for (auto& f : futures) {
        auto part = f.get();
        result.insert(result.end(), part.begin(), part.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool element_key_less(const AlgebraElement& a, const AlgebraElement& b) {
    return a.key() < b.key();
}

Shell enumerate_shell(const Order& order, const GoldenScalar& level, int threads) {
    auto ring_level = level.narrowed(order.ring());
    if (!ring_level) {
        throw EnumerationError(order.name() + ": level not in coefficient ring");
    }
    if (!ring_level->is_totally_nonneg()) {
        throw EnumerationError(order.name() + ": level must be totally nonnegative");
    }

    // Trace target: B(x,x) = 2 N(x), summed over the ring's real embeddings.
    mpq_class target_q = (order.ring() == RingTag::Z) ? 2 * ring_level->a()
                                                      : 2 * ring_level->trace_rational();
    if (target_q.get_den() != 1) {
        throw EnumerationError(order.name() + ": non-integral trace target");
    }

    TraceForm form = trace_form(order);
    auto vectors = enumerate_exact_level(form, target_q.get_num(), threads);

    const AlgebraSpec& spec = order.spec();
    GoldenScalar want = ring_level->widened(spec.field);
    std::vector<AlgebraElement> elements;
    const auto& zb = order.z_basis();
    for (const auto& c : vectors) {
        std::vector<GoldenScalar> coords(static_cast<size_t>(spec.dim),
                                         GoldenScalar::zero(spec.field));
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            GoldenScalar mult = GoldenScalar::integer(c[i], spec.field);
            for (int k = 0; k < spec.dim; ++k) {
                const GoldenScalar& v = zb[i].coord(k);
                if (v.is_zero()) continue;
                coords[static_cast<size_t>(k)] = coords[static_cast<size_t>(k)] + mult * v;
            }
        }
        AlgebraElement x(spec, std::move(coords));
        if (norm(x) == want) elements.push_back(std::move(x));
    }
    std::sort(elements.begin(), elements.end(), element_key_less);

    Shell shell{&order, *ring_level, std::move(elements)};

    // Shell invariants: pairwise distinct, closed under negation.
    std::unordered_set<std::string> keys;
    for (const AlgebraElement& x : shell.elements) {
        if (!keys.insert(x.key()).second) {
            throw std::logic_error(order.name() + ": duplicate shell element");
        }
    }
    for (const AlgebraElement& x : shell.elements) {
        if (!keys.count(neg(x).key())) {
            throw std::logic_error(order.name() + ": shell not closed under negation");
        }
    }
    return shell;
}

std::vector<ProfileEntry> shell_profile(const Shell& shell) {
    std::map<std::vector<std::string>, long> hist;
    for (const AlgebraElement& x : shell.elements) {
        std::vector<std::string> type;
        type.reserve(x.coords().size());
        for (const GoldenScalar& c : x.coords()) {
            GoldenScalar a = c.sign_exact() < 0 ? -c : c;
            type.push_back(a.field_string());
        }
        std::sort(type.begin(), type.end());
        ++hist[type];
    }
    std::vector<ProfileEntry> out;
    out.reserve(hist.size());
    for (auto& [type, count] : hist) out.push_back({type, count});
    return out;
}

}  // namespace planeshell
