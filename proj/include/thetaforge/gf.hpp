#pragma once

#include <cstdint>
#include <vector>

namespace thetaforge {

/// Dense polynomial over a finite field: coefficient codes, low degree first.
/// The zero polynomial is the empty vector; anything else carries no trailing
/// zero coefficients.
using Poly = std::vector<std::uint32_t>;

/// Exact arithmetic in GF(p^e), q = p^e <= 2^16.
///
/// Elements are integer codes in [0, q): the base-p digits of a code are the
/// coefficients of the residue polynomial, least significant digit = constant
/// coefficient. Code 0 is zero, code 1 is one. A Field is immutable after
/// construction; all operations are pure and safe to call concurrently.
class Field {
public:
    /// Empty placeholder (q == 0); assign a real field before any arithmetic.
    Field() = default;

    /// GF(p) for prime p, with modulus x.
    static Field prime_field(std::uint32_t p);

    /// GF(p^e) with an explicit monic irreducible modulus of degree e over
    /// Z_p, coefficients low degree first (length e+1). Throws
    /// std::invalid_argument if p is not prime, q exceeds 2^16, or the
    /// modulus is not monic irreducible of degree e.
    Field(std::uint32_t p, std::uint32_t e, Poly modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const Poly& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    /// Multiplicative inverse; throws std::invalid_argument on zero.
    std::uint32_t inv(std::uint32_t a) const;
    /// a^k by square-and-multiply. pow(0, 0) == 1.
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

    /// Base-p digits of a code, length e, constant coefficient first.
    std::vector<std::uint32_t> decode(std::uint32_t a) const;
    std::uint32_t encode(const std::vector<std::uint32_t>& digits) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
    void require_element(std::uint32_t a) const;

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    Poly modulus_;
    // Lookup tables for small fields (q <= 256); empty otherwise.
    std::vector<std::uint16_t> mul_lut_;
    std::vector<std::uint16_t> inv_lut_;
};

int poly_degree(const Poly& f);
Poly poly_trim(Poly f);
Poly poly_add(const Field& gf, const Poly& a, const Poly& b);
Poly poly_sub(const Field& gf, const Poly& a, const Poly& b);
Poly poly_mul(const Field& gf, const Poly& a, const Poly& b);
/// Remainder of a mod m; m must be nonzero.
Poly poly_rem(const Field& gf, Poly a, const Poly& m);
/// Monic greatest common divisor.
Poly poly_gcd(const Field& gf, Poly a, Poly b);
Poly poly_mulmod(const Field& gf, const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(const Field& gf, Poly base, std::uint64_t k, const Poly& m);

/// Rabin test: f monic of degree d is irreducible over GF(q) iff
/// x^(q^d) == x (mod f) and gcd(x^(q^(d/r)) - x, f) == 1 for every prime r | d.
bool poly_is_irreducible(const Field& gf, const Poly& f);

/// Deterministic monic irreducible of the given degree: scans candidates in
/// lexicographic order of their low-coefficient vector, starting at an offset
/// derived from the seed and wrapping around. Same (field, degree, seed)
/// always yields the same polynomial.
Poly find_irreducible(const Field& gf, std::uint32_t degree, std::uint64_t seed);

/// GF(q^t) built as GF(q)[x]/(ext_modulus) in the power basis 1, x, ...,
/// x^(t-1). Elements are length-t coefficient vectors over the base field;
/// the coefficient vector of an element is exactly its field reduction with
/// respect to that basis. Immutable and thread-safe like Field.
class ExtField {
public:
    using Elem = std::vector<std::uint32_t>;

    /// Throws std::invalid_argument unless ext_modulus is monic of degree t
    /// and irreducible over the base field.
    ExtField(Field base, std::uint32_t t, Poly ext_modulus);

    const Field& base() const { return base_; }
    std::uint32_t t() const { return t_; }
    const Poly& ext_modulus() const { return mod_; }
    /// q^t.
    std::uint64_t order() const { return order_; }

    Elem zero() const { return Elem(t_, 0); }
    Elem one() const;
    Elem from_base(std::uint32_t code) const;
    bool is_zero(const Elem& a) const;
    /// True when all coordinates above the first vanish, i.e. the element
    /// lies in the embedded copy of the base field.
    bool in_base(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scalar_mul(std::uint32_t c, const Elem& a) const;
    /// Throws std::invalid_argument on zero.
    Elem inv(const Elem& a) const;
    /// a^k by square-and-multiply; pow(0, 0) == 1 by convention (the norm
    /// exponent (q^t-1)/(q-1) is always >= 1, so the convention is never hit
    /// through norm()).
    Elem pow(const Elem& a, std::uint64_t k) const;
    /// x -> x^q.
    Elem frobenius(const Elem& a) const;

    /// Norm down to the base field via the power form x^((q^t-1)/(q-1)).
    /// The result always lands in the base subfield; returned as a base code.
    std::uint32_t norm(const Elem& a) const;
    /// Same map via the conjugate product x * x^q * ... * x^(q^(t-1)).
    std::uint32_t norm_frobenius(const Elem& a) const;

    /// Enumeration of all q^t elements: index digits in base q, least
    /// significant digit = constant coefficient.
    Elem element_at(std::uint64_t index) const;
    std::uint64_t index_of(const Elem& a) const;

private:
    std::uint32_t base_code(const Elem& a) const;

    Field base_;
    std::uint32_t t_ = 0;
    Poly mod_;
    std::uint64_t order_ = 0;
};

}  // namespace thetaforge
