#pragma once

// Exact arithmetic in Z_p and in GF(p^n) = Z_p[x]/(m(x)).
//
// Elements are dense coefficient vectors of length n over Z_p, reduced modulo
// an explicit monic irreducible. A FieldSpec is immutable after construction
// and must outlive every FieldElement that refers to it; all operations are
// pure, so a shared spec is safe to use from any number of threads.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "affq/errors.hpp"

namespace affq {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Residue arithmetic mod p (p < 2^63; products go through 128-bit temporaries)

namespace zp {

inline u64 add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p) s -= p;
    return s;
}

inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

inline u64 mul(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<u128>(a) * b) % p);
}

u64 pow(u64 base, u64 exp, u64 p);

/// Inverse of a mod p; throws DivisionByZeroError when a == 0 mod p.
u64 inv(u64 a, u64 p);

} // namespace zp

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// ---------------------------------------------------------------------------
// Polynomials over Z_p

/// Dense polynomial over Z_p, coefficients lowest degree first.
/// Canonical form carries no trailing zeros; the zero polynomial is empty.
struct PolyZp {
    std::vector<u64> c;

    PolyZp() = default;
    explicit PolyZp(std::vector<u64> coeffs) : c(std::move(coeffs)) { trim(); }

    static PolyZp x() { return PolyZp{{0, 1}}; }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    u64 coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const PolyZp& o) const { return c == o.c; }
};

PolyZp poly_add(const PolyZp& a, const PolyZp& b, u64 p);
PolyZp poly_sub(const PolyZp& a, const PolyZp& b, u64 p);
PolyZp poly_mul(const PolyZp& a, const PolyZp& b, u64 p);
/// Remainder of a modulo f (f nonzero).
PolyZp poly_rem(PolyZp a, const PolyZp& f, u64 p);
/// Monic gcd.
PolyZp poly_gcd(PolyZp a, PolyZp b, u64 p);
/// base^exp mod f by square-and-multiply.
PolyZp poly_powmod(const PolyZp& base, u64 exp, const PolyZp& f, u64 p);

/// Rabin's criterion: f monic of degree n >= 1 is irreducible over Z_p iff
/// x^(p^n) == x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
bool is_irreducible(const PolyZp& f, u64 p);

/// First monic irreducible of degree n over Z_p in base-p counting order on
/// the low coefficient vector (c_0 least significant digit).
PolyZp smallest_irreducible(u64 p, unsigned n);

/// Parses the comma-separated digit format, e.g. "1,1,0,1" = 1 + x + x^3.
PolyZp parse_poly(u64 p, std::string_view text);
std::string poly_to_string(const PolyZp& f);

// ---------------------------------------------------------------------------
// GF(p^n)

inline constexpr u64 kDefaultEnumCap = u64{1} << 20;

class FieldElement;

class FieldSpec {
public:
    /// Builds GF(p^n) with the smallest monic irreducible modulus of degree n.
    FieldSpec(u64 p, unsigned n);
    /// Builds GF(p^n) with an explicit modulus (monic, degree n, irreducible).
    FieldSpec(u64 p, unsigned n, PolyZp modulus);

    u64 p() const { return p_; }
    unsigned degree() const { return n_; }
    const PolyZp& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x (the generator of the power basis).
    FieldElement gen() const;
    /// Element from a coefficient vector of length <= n (padded with zeros).
    FieldElement element(std::vector<u64> coeffs) const;
    /// Element with index i in base-p counting order on coefficient vectors.
    FieldElement element_at(u64 index) const;

    /// p^n when it fits and does not exceed cap, otherwise CapExceededError.
    u64 order_capped(u64 cap = kDefaultEnumCap) const;

    /// Structural identity: same p, n and modulus.
    bool same_as(const FieldSpec& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
    }

private:
    u64 p_;
    unsigned n_;
    PolyZp modulus_;
};

/// Value type; stores a fixed-length-n coefficient vector and a pointer to its
/// spec. Two elements compare equal iff their coefficient vectors are equal.
class FieldElement {
public:
    FieldElement(const FieldSpec& spec, std::vector<u64> coeffs);

    const FieldSpec& spec() const { return *spec_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

    /// Multiplicative inverse; DivisionByZeroError on zero.
    FieldElement inv() const;
    /// x^e by binary exponentiation (e is a plain integer exponent).
    FieldElement pow(u64 e) const;
    /// x^(p^m); m is reduced mod n, then applied as m single Frobenius steps.
    FieldElement frob(u64 m) const;

    /// Index in base-p counting order (only for fields with p^n <= cap).
    u64 index(u64 cap = kDefaultEnumCap) const;

    bool operator==(const FieldElement& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElement& o) const { return c_ != o.c_; }
    /// Counting order (numeric order of the index).
    bool operator<(const FieldElement& o) const;

private:
    friend class FieldSpec;
    const FieldSpec* spec_;
    std::vector<u64> c_; // length n, entries in [0, p)

    void check_compat(const FieldElement& o) const;
};

FieldSpec make_field(u64 p, unsigned n);
FieldSpec make_field(u64 p, unsigned n, const PolyZp& modulus);

FieldElement frob_pow(const FieldElement& x, u64 m);
FieldElement scalar_mul(u64 c, const FieldElement& x);

/// All p^n elements in counting order; CapExceededError when p^n > cap.
std::vector<FieldElement> enumerate(const FieldSpec& spec, u64 cap = kDefaultEnumCap);

/// Comma-separated base-p digits, low degree first ("1,0,1" = 1 + x^2 in GF(8)).
FieldElement parse_element(const FieldSpec& spec, std::string_view text);
std::string to_string(const FieldElement& x);

} // namespace affq
