#include "planeshell/golden.hpp"

#include <algorithm>

namespace planeshell {

const char* ring_tag_name(RingTag tag) {
    switch (tag) {
        case RingTag::Z: return "Z";
        case RingTag::Zphi: return "Zphi";
        case RingTag::Q: return "Q";
        case RingTag::Qphi: return "Qphi";
    }
    return "?";
}

bool ring_tag_is_field(RingTag tag) { return tag == RingTag::Q || tag == RingTag::Qphi; }

bool ring_tag_has_phi(RingTag tag) { return tag == RingTag::Zphi || tag == RingTag::Qphi; }

namespace {

void require_same_tag(const GoldenScalar& x, const GoldenScalar& y, const char* op) {
    if (x.tag() != y.tag()) {
        throw RingMismatchError(std::string(op) + ": ring tags differ (" +
                                ring_tag_name(x.tag()) + " vs " + ring_tag_name(y.tag()) + ")");
    }
}

bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

GoldenScalar::GoldenScalar(mpq_class a, mpq_class b, RingTag tag)
    : a_(std::move(a)), b_(std::move(b)), tag_(tag) {
    a_.canonicalize();
    b_.canonicalize();
    if (!ring_tag_is_field(tag_) && (!is_integral(a_) || !is_integral(b_))) {
        throw RingMismatchError(std::string("non-integral coefficients for ring mode ") +
                                ring_tag_name(tag_));
    }
    if (!ring_tag_has_phi(tag_) && b_ != 0) {
        throw RingMismatchError(std::string("phi coefficient not representable in ") +
                                ring_tag_name(tag_));
    }
}

GoldenScalar GoldenScalar::fraction(long num, long den, RingTag tag) {
    if (!ring_tag_is_field(tag)) {
        throw RingMismatchError("fraction requires a field tag");
    }
    return GoldenScalar(mpq_class(num, den), 0, tag);
}

int GoldenScalar::sign_exact() const {
    mpq_class u = 2 * a_ + b_;
    const mpq_class& v = b_;
    int su = sgn(u);
    int sv = sgn(v);
    if (su == 0 && sv == 0) return 0;
    if (su >= 0 && sv >= 0) return +1;
    if (su <= 0 && sv <= 0) return -1;
    // Opposite strict signs: compare u^2 with 5 v^2. Equality would force
    // sqrt(5) rational, impossible for nonzero u, v.
    int c = cmp(u * u, 5 * v * v);
    if (c == 0) throw std::logic_error("sign_exact: u^2 == 5 v^2 with nonzero u, v");
    if (su > 0) return c > 0 ? +1 : -1;
    return c > 0 ? -1 : +1;
}

bool GoldenScalar::in_ring(RingTag tag) const {
    if (!ring_tag_is_field(tag) && (!is_integral(a_) || !is_integral(b_))) return false;
    if (!ring_tag_has_phi(tag) && b_ != 0) return false;
    return true;
}

GoldenScalar GoldenScalar::widened(RingTag to) const {
    bool ok = (to == tag_);
    switch (tag_) {
        case RingTag::Z: ok = ok || to == RingTag::Zphi || to == RingTag::Q || to == RingTag::Qphi; break;
        case RingTag::Zphi: ok = ok || to == RingTag::Qphi; break;
        case RingTag::Q: ok = ok || to == RingTag::Qphi; break;
        case RingTag::Qphi: break;
    }
    if (!ok) {
        throw RingMismatchError(std::string("cannot widen ") + ring_tag_name(tag_) + " to " +
                                ring_tag_name(to));
    }
    return GoldenScalar(a_, b_, to);
}

std::optional<GoldenScalar> GoldenScalar::narrowed(RingTag to) const {
    if (!in_ring(to)) return std::nullopt;
    return GoldenScalar(a_, b_, to);
}

std::string GoldenScalar::field_string() const {
    return a_.get_num().get_str() + "/" + a_.get_den().get_str() + "+" +
           b_.get_num().get_str() + "/" + b_.get_den().get_str() + "*phi";
}

std::pair<mpz_class, mpz_class> GoldenScalar::ring_pair() const {
    if (ring_tag_is_field(tag_)) {
        throw RingMismatchError("ring_pair on field-mode value");
    }
    return {a_.get_num(), b_.get_num()};
}

std::string GoldenScalar::key() const {
    if (ring_tag_is_field(tag_)) return field_string();
    return a_.get_num().get_str() + "," + b_.get_num().get_str();
}

GoldenScalar operator+(const GoldenScalar& x, const GoldenScalar& y) {
    require_same_tag(x, y, "add");
    return GoldenScalar(x.a_ + y.a_, x.b_ + y.b_, x.tag_);
}

GoldenScalar operator-(const GoldenScalar& x, const GoldenScalar& y) {
    require_same_tag(x, y, "sub");
    return GoldenScalar(x.a_ - y.a_, x.b_ - y.b_, x.tag_);
}

GoldenScalar operator*(const GoldenScalar& x, const GoldenScalar& y) {
    require_same_tag(x, y, "mul");
    // (a1 + b1 phi)(a2 + b2 phi), reduced via phi^2 = phi + 1.
    mpq_class bb = x.b_ * y.b_;
    return GoldenScalar(x.a_ * y.a_ + bb, x.a_ * y.b_ + x.b_ * y.a_ + bb, x.tag_);
}

GoldenScalar operator-(const GoldenScalar& x) { return GoldenScalar(-x.a_, -x.b_, x.tag_); }

bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
    require_same_tag(x, y, "compare");
    return x.a_ == y.a_ && x.b_ == y.b_;
}

GoldenScalar GoldenScalar::inverse() const {
    if (!ring_tag_is_field(tag_)) {
        throw RingMismatchError("inverse requires a field tag");
    }
    // 1/(a + b phi) = (a + b - b phi) / (a^2 + a b - b^2).
    mpq_class field_norm = a_ * a_ + a_ * b_ - b_ * b_;
    if (field_norm == 0) throw std::domain_error("division by zero scalar");
    return GoldenScalar((a_ + b_) / field_norm, -b_ / field_norm, tag_);
}

GoldenScalar operator/(const GoldenScalar& x, const GoldenScalar& y) {
    require_same_tag(x, y, "div");
    return x * y.inverse();
}

std::vector<std::pair<GoldenScalar, GoldenScalar>>
one_decompositions(RingTag ring, long search_bound) {
    if (ring != RingTag::Z && ring != RingTag::Zphi) {
        throw RingMismatchError("one_decompositions requires ring tag Z or Zphi");
    }
    if (search_bound < 1) throw std::invalid_argument("search_bound must be >= 1");

    std::vector<std::pair<GoldenScalar, GoldenScalar>> out;
    const bool golden = ring_tag_has_phi(ring);
    for (long a0 = -search_bound; a0 <= search_bound; ++a0) {
        long b_lo = golden ? -search_bound : 0;
        long b_hi = golden ? search_bound : 0;
        for (long a1 = b_lo; a1 <= b_hi; ++a1) {
            GoldenScalar a(a0, a1, ring);
            GoldenScalar b = GoldenScalar::one(ring) - a;
            if (abs(b.a()) > search_bound || abs(b.b()) > search_bound) continue;
            if (a.is_totally_nonneg() && b.is_totally_nonneg()) {
                out.emplace_back(a, b);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (p.first.key() != q.first.key()) return p.first.key() < q.first.key();
        return p.second.key() < q.second.key();
    });
    return out;
}

}  // namespace planeshell
