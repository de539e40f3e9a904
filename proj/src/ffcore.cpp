#include "affq/ffcore.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace affq {

namespace zp {

u64 pow(u64 base, u64 exp, u64 p) {
    base %= p;
    u64 r = 1 % p;
    while (exp) {
        if (exp & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return r;
}

u64 inv(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw DivisionByZeroError("zp::inv: zero has no inverse");
    // extended Euclid on (a, p); p need not be prime but gcd must be 1
    std::int64_t t = 0, t1 = 1;
    u64 r = p, r1 = a;
    while (r1 != 0) {
        u64 q = r / r1;
        std::int64_t ts = t - static_cast<std::int64_t>(q) * t1;
        t = t1;
        t1 = ts;
        u64 rs = r - q * r1;
        r = r1;
        r1 = rs;
    }
    if (r != 1) throw DivisionByZeroError("zp::inv: argument not invertible");
    return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(p)) : static_cast<u64>(t);
}

} // namespace zp

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these witnesses decide primality for all n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = zp::pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = zp::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PolyZp

PolyZp poly_add(const PolyZp& a, const PolyZp& b, u64 p) {
    std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = zp::add(a.coeff(i), b.coeff(i), p);
    return PolyZp(std::move(c));
}

PolyZp poly_sub(const PolyZp& a, const PolyZp& b, u64 p) {
    std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = zp::sub(a.coeff(i), b.coeff(i), p);
    return PolyZp(std::move(c));
}

PolyZp poly_mul(const PolyZp& a, const PolyZp& b, u64 p) {
    if (a.is_zero() || b.is_zero()) return PolyZp{};
    std::vector<u64> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            c[i + j] = zp::add(c[i + j], zp::mul(a.c[i], b.c[j], p), p);
        }
    }
    return PolyZp(std::move(c));
}

PolyZp poly_rem(PolyZp a, const PolyZp& f, u64 p) {
    if (f.is_zero()) throw DivisionByZeroError("poly_rem: division by zero polynomial");
    const int df = f.degree();
    const u64 lead_inv = zp::inv(f.c.back(), p);
    while (a.degree() >= df) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - df);
        const u64 q = zp::mul(a.c.back(), lead_inv, p);
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            a.c[shift + i] = zp::sub(a.c[shift + i], zp::mul(q, f.c[i], p), p);
        }
        a.trim();
    }
    return a;
}

PolyZp poly_gcd(PolyZp a, PolyZp b, u64 p) {
    while (!b.is_zero()) {
        PolyZp r = poly_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() != 1) {
        const u64 s = zp::inv(a.c.back(), p);
        for (auto& x : a.c) x = zp::mul(x, s, p);
    }
    return a;
}

PolyZp poly_powmod(const PolyZp& base, u64 exp, const PolyZp& f, u64 p) {
    PolyZp r{{1 % p}};
    PolyZp b = poly_rem(base, f, p);
    while (exp) {
        if (exp & 1) r = poly_rem(poly_mul(r, b, p), f, p);
        b = poly_rem(poly_mul(b, b, p), f, p);
        exp >>= 1;
    }
    return r;
}

bool is_irreducible(const PolyZp& f, u64 p) {
    if (!f.is_monic() || f.degree() < 1) {
        throw std::invalid_argument("is_irreducible: polynomial must be monic of degree >= 1");
    }
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;

    // prime divisors of n
    std::vector<unsigned> qs;
    unsigned m = n;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) qs.push_back(m);

    // Frobenius chain g_i = x^(p^i) mod f
    const PolyZp x = PolyZp::x();
    PolyZp g = poly_rem(x, f, p);
    std::vector<PolyZp> chain(n + 1);
    chain[0] = g;
    for (unsigned i = 1; i <= n; ++i) {
        g = poly_powmod(g, p, f, p);
        chain[i] = g;
    }
    if (!(chain[n] == poly_rem(x, f, p))) return false;
    for (unsigned q : qs) {
        PolyZp h = poly_sub(chain[n / q], x, p);
        PolyZp d = poly_gcd(h, f, p);
        if (d.degree() != 0) return false;
    }
    return true;
}

PolyZp smallest_irreducible(u64 p, unsigned n) {
    if (n == 0) throw std::invalid_argument("smallest_irreducible: degree must be >= 1");
    // counting order on (c_0..c_{n-1}), c_0 least significant base-p digit
    u64 limit = kDefaultEnumCap;
    for (u64 t = 0; t < limit; ++t) {
        std::vector<u64> c(n + 1, 0);
        u64 v = t;
        bool overflow = (n >= 64);
        for (unsigned i = 0; i < n; ++i) {
            c[i] = v % p;
            v /= p;
        }
        if (v != 0 && !overflow) break; // exhausted all p^n candidates
        c[n] = 1;
        PolyZp f(std::move(c));
        if (is_irreducible(f, p)) return f;
    }
    throw InternalCheckError("smallest_irreducible: no irreducible found within scan limit");
}

PolyZp parse_poly(u64 p, std::string_view text) {
    std::vector<u64> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        u64 v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw ParseError("parse_poly: bad digit '" + std::string(tok) + "'");
        }
        if (v >= p) {
            throw ParseError("parse_poly: digit " + std::to_string(v) + " out of range for p=" + std::to_string(p));
        }
        c.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return PolyZp(std::move(c));
}

std::string poly_to_string(const PolyZp& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ',';
        os << f.c[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldSpec / FieldElement

FieldSpec::FieldSpec(u64 p, unsigned n) : p_(p), n_(n) {
    if (!is_prime(p)) throw NotPrimeError("FieldSpec: p=" + std::to_string(p) + " is not prime");
    if (n == 0) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
    modulus_ = smallest_irreducible(p, n);
}

FieldSpec::FieldSpec(u64 p, unsigned n, PolyZp modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw NotPrimeError("FieldSpec: p=" + std::to_string(p) + " is not prime");
    if (n == 0) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
    if (!modulus_.is_monic() || modulus_.degree() != static_cast<int>(n)) {
        throw NotIrreducibleError("FieldSpec: modulus must be monic of degree n");
    }
    for (u64 c : modulus_.c) {
        if (c >= p) throw NotIrreducibleError("FieldSpec: modulus coefficient out of range");
    }
    if (!is_irreducible(modulus_, p)) {
        throw NotIrreducibleError("FieldSpec: modulus " + poly_to_string(modulus_) + " is reducible over Z_" + std::to_string(p));
    }
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, std::vector<u64>(n_, 0)); }

FieldElement FieldSpec::one() const {
    std::vector<u64> c(n_, 0);
    c[0] = 1 % p_; // GF(p^n) with n >= 1, p >= 2: always 1
    return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::gen() const {
    if (n_ == 1) {
        // x reduces to -m_0 mod the linear modulus
        return FieldElement(*this, {zp::neg(modulus_.coeff(0), p_)});
    }
    std::vector<u64> c(n_, 0);
    c[1] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::element(std::vector<u64> coeffs) const {
    if (coeffs.size() > n_) {
        throw std::invalid_argument("FieldSpec::element: coefficient vector longer than n");
    }
    for (u64 c : coeffs) {
        if (c >= p_) throw std::invalid_argument("FieldSpec::element: coefficient out of range");
    }
    coeffs.resize(n_, 0);
    return FieldElement(*this, std::move(coeffs));
}

FieldElement FieldSpec::element_at(u64 index) const {
    std::vector<u64> c(n_, 0);
    for (unsigned i = 0; i < n_ && index; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    if (index != 0) throw std::out_of_range("FieldSpec::element_at: index out of range");
    return FieldElement(*this, std::move(c));
}

u64 FieldSpec::order_capped(u64 cap) const {
    u128 o = 1;
    for (unsigned i = 0; i < n_; ++i) {
        o *= p_;
        if (o > cap) {
            throw CapExceededError("field order p^n exceeds cap " + std::to_string(cap));
        }
    }
    return static_cast<u64>(o);
}

FieldElement::FieldElement(const FieldSpec& spec, std::vector<u64> coeffs)
    : spec_(&spec), c_(std::move(coeffs)) {
    if (c_.size() != spec.degree()) c_.resize(spec.degree(), 0);
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

void FieldElement::check_compat(const FieldElement& o) const {
    if (spec_ == o.spec_) return;
    if (!spec_->same_as(*o.spec_)) {
        throw SpecMismatchError("operands belong to different field specs");
    }
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    const u64 p = spec_->p();
    for (auto& v : r.c_) v = zp::neg(v, p);
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_compat(o);
    const u64 p = spec_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = zp::add(c_[i], o.c_[i], p);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_compat(o);
    const u64 p = spec_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = zp::sub(c_[i], o.c_[i], p);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_compat(o);
    const u64 p = spec_->p();
    const unsigned n = spec_->degree();
    const auto& m = spec_->modulus().c;
    std::vector<u64> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] = zp::add(prod[i + j], zp::mul(c_[i], o.c_[j], p), p);
        }
    }
    // reduce by the monic modulus
    for (unsigned i = 2 * n - 2; i >= n && i < 2 * n; --i) {
        const u64 q = prod[i];
        if (q == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < n; ++j) {
            prod[i - n + j] = zp::sub(prod[i - n + j], zp::mul(q, m[j], p), p);
        }
    }
    prod.resize(n);
    c_ = std::move(prod);
    return *this;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZeroError("FieldElement::inv: zero has no inverse");
    const u64 p = spec_->p();
    // extended Euclid on (this, modulus) in Z_p[x]
    PolyZp r0 = spec_->modulus();
    PolyZp r1(std::vector<u64>(c_));
    PolyZp s0{}, s1{{1}};
    while (!r1.is_zero()) {
        // divide r0 by r1
        PolyZp q{};
        PolyZp rem = r0;
        const u64 lead_inv = zp::inv(r1.c.back(), p);
        while (rem.degree() >= r1.degree() && !rem.is_zero()) {
            const std::size_t shift = static_cast<std::size_t>(rem.degree() - r1.degree());
            const u64 qc = zp::mul(rem.c.back(), lead_inv, p);
            std::vector<u64> qv(shift + 1, 0);
            qv[shift] = qc;
            PolyZp qterm(std::move(qv));
            rem = poly_sub(rem, poly_mul(qterm, r1, p), p);
            q = poly_add(q, qterm, p);
        }
        PolyZp s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant, since the modulus is irreducible)
    if (r0.degree() != 0) throw InternalCheckError("FieldElement::inv: gcd with irreducible modulus not constant");
    const u64 scale = zp::inv(r0.c[0], p);
    std::vector<u64> out(spec_->degree(), 0);
    for (std::size_t i = 0; i < s0.c.size(); ++i) out[i] = zp::mul(s0.c[i], scale, p);
    return FieldElement(*spec_, std::move(out));
}

FieldElement FieldElement::pow(u64 e) const {
    FieldElement r = spec_->one();
    FieldElement b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frob(u64 m) const {
    m %= spec_->degree();
    FieldElement r = *this;
    const u64 p = spec_->p();
    for (u64 i = 0; i < m; ++i) r = r.pow(p);
    return r;
}

u64 FieldElement::index(u64 cap) const {
    spec_->order_capped(cap);
    u64 idx = 0;
    const u64 p = spec_->p();
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * p + c_[i];
    return idx;
}

bool FieldElement::operator<(const FieldElement& o) const {
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

FieldSpec make_field(u64 p, unsigned n) { return FieldSpec(p, n); }

FieldSpec make_field(u64 p, unsigned n, const PolyZp& modulus) { return FieldSpec(p, n, modulus); }

FieldElement frob_pow(const FieldElement& x, u64 m) { return x.frob(m); }

FieldElement scalar_mul(u64 c, const FieldElement& x) {
    const u64 p = x.spec().p();
    c %= p;
    std::vector<u64> out(x.coeffs());
    for (auto& v : out) v = zp::mul(v, c, p);
    return FieldElement(x.spec(), std::move(out));
}

std::vector<FieldElement> enumerate(const FieldSpec& spec, u64 cap) {
    const u64 size = spec.order_capped(cap);
    std::vector<FieldElement> out;
    out.reserve(size);
    for (u64 i = 0; i < size; ++i) out.push_back(spec.element_at(i));
    return out;
}

FieldElement parse_element(const FieldSpec& spec, std::string_view text) {
    PolyZp f = parse_poly(spec.p(), text);
    if (f.degree() >= static_cast<int>(spec.degree())) {
        throw ParseError("parse_element: element has degree >= n");
    }
    std::vector<u64> c = std::move(f.c);
    c.resize(spec.degree(), 0);
    return FieldElement(spec, std::move(c));
}

std::string to_string(const FieldElement& x) {
    std::ostringstream os;
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

} // namespace affq
