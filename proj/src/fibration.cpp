#include "planeshell/fibration.hpp"

#include <future>
#include <random>
#include <unordered_set>

namespace planeshell {

namespace {

AlgebraElement pi_value(const AlgebraElement& u, const AlgebraElement& v) {
    // u v^{-1} on a unit shell, division-free since conj(v) = v^{-1} there.
    return mul(u, conj(v));
}

std::unordered_set<std::string> key_set(const Shell& shell) {
    std::unordered_set<std::string> keys;
    keys.reserve(shell.elements.size() * 2);
    for (const AlgebraElement& x : shell.elements) keys.insert(x.key());
    return keys;
}

}  // namespace

HopfImagePoint hopf(const AlgebraElement& a, const AlgebraElement& b) {
    if (&a.spec() != &b.spec()) {
        throw AlgebraMismatchError("hopf: elements of different algebras");
    }
    const GoldenScalar two = GoldenScalar::integer(2, a.spec().field);
    HopfImagePoint p{mul(scale(two, a), conj(b)), norm(a) - norm(b)};
    GoldenScalar total = norm(a) + norm(b);
    if (norm(p.first) + p.second * p.second != total * total) {
        throw std::logic_error("hopf: norm identity failed at construction");
    }
    return p;
}

bool norm_identity_check(const AlgebraElement& a, const AlgebraElement& b) {
    const GoldenScalar two = GoldenScalar::integer(2, a.spec().field);
    GoldenScalar lhs = norm(mul(scale(two, a), conj(b)));
    GoldenScalar diff = norm(a) - norm(b);
    GoldenScalar total = norm(a) + norm(b);
    return lhs + diff * diff == total * total;
}

EquatorReport equator_restriction(const Shell& unit) {
    EquatorReport rep;
    auto keys = key_set(unit);
    std::unordered_set<std::string> image;
    for (const AlgebraElement& u : unit.elements) {
        for (const AlgebraElement& v : unit.elements) {
            ++rep.pairs;
            // Scale-aware: for (u, v)/sqrt(2) the second coordinate is
            // (N(u) - N(v))/2 and the first is 2 (u/sqrt2)(conj v/sqrt2) = u conj(v).
            if (!(norm(u) - norm(v)).is_zero()) {
                ++rep.failures;
                continue;
            }
            std::string k = pi_value(u, v).key();
            if (!keys.count(k)) {
                ++rep.failures;
                continue;
            }
            image.insert(std::move(k));
        }
    }
    rep.image_size = static_cast<long>(image.size());
    rep.image_equals_unit = image.size() == keys.size();
    return rep;
}

FibrationProfile fibration_profile(const Shell& unit, int threads) {
    FibrationProfile prof;
    const auto& elems = unit.elements;
    const long n = static_cast<long>(elems.size());
    auto keys = key_set(unit);

    auto sweep = [&](long lo, long hi) {
        std::map<std::string, long> local;
        for (long i = lo; i < hi; ++i) {
            for (long j = 0; j < n; ++j) {
                local[pi_value(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]).key()]++;
            }
        }
        return local;
    };

    int workers = static_cast<int>(std::max<long>(1, std::min<long>(threads, n)));
    if (workers == 1) {
        prof.multiplicity = sweep(0, n);
    } else {
        std::vector<std::future<std::map<std::string, long>>> futures;
        for (int w = 0; w < workers; ++w) {
            long lo = n * w / workers;
            long hi = n * (w + 1) / workers;
            futures.push_back(std::async(std::launch::async, sweep, lo, hi));
        }
        for (auto& f : futures) {
            for (const auto& [k, c] : f.get()) prof.multiplicity[k] += c;
        }
    }

    prof.total_pairs = 0;
    prof.base_size = static_cast<long>(prof.multiplicity.size());
    prof.closed = true;
    prof.constant = true;
    long common = -1;
    for (const auto& [k, c] : prof.multiplicity) {
        prof.total_pairs += c;
        if (!keys.count(k)) prof.closed = false;
        if (common < 0) common = c;
        if (c != common) prof.constant = false;
    }
    prof.fiber_size = prof.constant ? common : -1;
    return prof;
}

LoopReport loop_checks(const Shell& unit, bool exhaustive_moufang) {
    LoopReport rep;
    const auto& elems = unit.elements;
    const long n = static_cast<long>(elems.size());
    auto keys = key_set(unit);

    rep.unit_member = keys.count(unit_element(unit.order->spec()).key()) > 0;

    rep.closure = true;
    rep.inverse_property = true;
    rep.artin = true;
    for (const AlgebraElement& w : elems) {
        for (const AlgebraElement& v : elems) {
            ++rep.pair_checks;
            AlgebraElement wv = mul(w, v);
            if (!keys.count(wv.key())) rep.closure = false;
            AlgebraElement vinv = inverse(v);
            if (mul(wv, vinv) != w) rep.inverse_property = false;
            if (mul(vinv, mul(v, w)) != w) rep.inverse_property = false;
            if (mul(mul(w, vinv), v) != w) rep.artin = false;
        }
    }

    rep.moufang = true;
    rep.moufang_exhaustive = exhaustive_moufang || n <= 24;
    if (rep.moufang_exhaustive) {
        for (const AlgebraElement& a : elems) {
            for (const AlgebraElement& b : elems) {
                for (const AlgebraElement& c : elems) {
                    ++rep.moufang_triples;
                    if (!moufang_check(a, b, c)) rep.moufang = false;
                }
            }
        }
    } else {
        std::mt19937_64 rng(0x6d6f7566616e67ULL);  // fixed seed, deterministic sample
        std::uniform_int_distribution<long> pick(0, n - 1);
        for (int s = 0; s < 10000; ++s) {
            ++rep.moufang_triples;
            const AlgebraElement& a = elems[static_cast<size_t>(pick(rng))];
            const AlgebraElement& b = elems[static_cast<size_t>(pick(rng))];
            const AlgebraElement& c = elems[static_cast<size_t>(pick(rng))];
            if (!moufang_check(a, b, c)) rep.moufang = false;
        }
    }
    return rep;
}

}  // namespace planeshell
