#include "thetaforge/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace thetaforge {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 16;
constexpr std::uint32_t kLutLimit = 256;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime_field(std::uint32_t p) { return Field(p, 1, Poly{0, 1}); }

Field::Field(std::uint32_t p, std::uint32_t e, Poly modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("Field: p must be prime, got " + std::to_string(p_));
    if (e_ < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > kMaxFieldSize) throw std::invalid_argument("Field: q = p^e exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
        throw std::invalid_argument("Field: modulus must be monic of degree e");
    for (std::uint32_t c : modulus_)
        if (c >= p_) throw std::invalid_argument("Field: modulus coefficient out of range");
    if (e_ > 1) {
        Field zp = Field::prime_field(p_);
        if (!poly_is_irreducible(zp, modulus_))
            throw std::invalid_argument("Field: modulus is reducible over Z_p");
    }
    if (q_ <= kLutLimit) {
        mul_lut_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b <= a; ++b) {
                std::uint16_t m = static_cast<std::uint16_t>(mul_generic(a, b));
                mul_lut_[a * q_ + b] = m;
                mul_lut_[b * q_ + a] = m;
            }
        inv_lut_.assign(q_, 0);
        for (std::uint32_t a = 1; a < q_; ++a) {
            // a^(q-2) is the inverse; mul_lut_ is already filled.
            std::uint32_t acc = 1, base = a;
            std::uint64_t k = q_ - 2;
            while (k) {
                if (k & 1) acc = mul_lut_[acc * q_ + base];
                base = mul_lut_[base * q_ + base];
                k >>= 1;
            }
            inv_lut_[a] = static_cast<std::uint16_t>(acc);
        }
    }
}

void Field::require_element(std::uint32_t a) const {
    if (a >= q_) throw std::invalid_argument("Field: element code out of range");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    require_element(a);
    require_element(b);
    if (e_ == 1) return (a + b) % p_;
    std::uint32_t out = 0, shift = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * shift;
        shift *= p_;
    }
    return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    require_element(a);
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t out = 0, shift = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * shift;
        shift *= p_;
    }
    return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_generic(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    // Schoolbook product of the digit vectors, then reduction by the modulus.
    std::uint32_t da[17] = {0}, db[17] = {0}, acc[33] = {0};
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < e_; ++i, x /= p_) da[i] = x % p_;
    for (std::uint32_t i = 0; i < e_; ++i, y /= p_) db[i] = y % p_;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            acc[i + j] = static_cast<std::uint32_t>((acc[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    }
    for (std::uint32_t i = 2 * e_ - 2; i >= e_ && i < 33; --i) {
        std::uint32_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (std::uint32_t j = 0; j < e_; ++j) {
            std::uint64_t sub = std::uint64_t(c) * modulus_[j] % p_;
            acc[i - e_ + j] = static_cast<std::uint32_t>((acc[i - e_ + j] + p_ - sub) % p_);
        }
    }
    std::uint32_t out = 0, shift = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += acc[i] * shift;
        shift *= p_;
    }
    return out;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    require_element(a);
    require_element(b);
    if (!mul_lut_.empty()) return mul_lut_[a * q_ + b];
    return mul_generic(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
    require_element(a);
    if (k == 0) return 1;
    if (a == 0) return 0;
    std::uint32_t acc = 1;
    while (k) {
        if (k & 1) acc = mul(acc, a);
        a = mul(a, a);
        k >>= 1;
    }
    return acc;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    require_element(a);
    if (a == 0) throw std::invalid_argument("Field: inversion of zero");
    if (!inv_lut_.empty()) return inv_lut_[a];
    return pow(a, q_ - 2);
}

std::vector<std::uint32_t> Field::decode(std::uint32_t a) const {
    require_element(a);
    std::vector<std::uint32_t> digits(e_);
    for (std::uint32_t i = 0; i < e_; ++i, a /= p_) digits[i] = a % p_;
    return digits;
}

std::uint32_t Field::encode(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() != e_) throw std::invalid_argument("Field: digit vector has wrong length");
    std::uint32_t out = 0, shift = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (digits[i] >= p_) throw std::invalid_argument("Field: digit out of range");
        out += digits[i] * shift;
        shift *= p_;
    }
    return out;
}

int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_add(const Field& gf, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t ca = i < a.size() ? a[i] : 0;
        std::uint32_t cb = i < b.size() ? b[i] : 0;
        out[i] = gf.add(ca, cb);
    }
    return poly_trim(std::move(out));
}

Poly poly_sub(const Field& gf, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t ca = i < a.size() ? a[i] : 0;
        std::uint32_t cb = i < b.size() ? b[i] : 0;
        out[i] = gf.sub(ca, cb);
    }
    return poly_trim(std::move(out));
}

Poly poly_mul(const Field& gf, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = gf.add(out[i + j], gf.mul(a[i], b[j]));
    }
    return poly_trim(std::move(out));
}

Poly poly_rem(const Field& gf, Poly a, const Poly& m) {
    if (m.empty()) throw std::invalid_argument("poly_rem: division by the zero polynomial");
    std::uint32_t lead_inv = gf.inv(m.back());
    while (a.size() >= m.size()) {
        std::uint32_t c = gf.mul(a.back(), lead_inv);
        std::size_t off = a.size() - m.size();
        if (c != 0)
            for (std::size_t j = 0; j < m.size(); ++j)
                a[off + j] = gf.sub(a[off + j], gf.mul(c, m[j]));
        a.pop_back();
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_gcd(const Field& gf, Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(gf, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint32_t s = gf.inv(a.back());
        for (auto& c : a) c = gf.mul(c, s);
    }
    return a;
}

Poly poly_mulmod(const Field& gf, const Poly& a, const Poly& b, const Poly& m) {
    return poly_rem(gf, poly_mul(gf, a, b), m);
}

Poly poly_powmod(const Field& gf, Poly base, std::uint64_t k, const Poly& m) {
    base = poly_rem(gf, std::move(base), m);
    Poly acc = poly_rem(gf, Poly{1}, m);
    while (k) {
        if (k & 1) acc = poly_mulmod(gf, acc, base, m);
        base = poly_mulmod(gf, base, base, m);
        k >>= 1;
    }
    return acc;
}

bool poly_is_irreducible(const Field& gf, const Poly& f) {
    int d = poly_degree(f);
    if (d < 1) return false;
    if (f.back() != 1) throw std::invalid_argument("poly_is_irreducible: polynomial must be monic");
    if (d == 1) return true;
    const Poly x{0, 1};
    // x^(q^j) mod f, advanced one Frobenius step at a time.
    auto frobenius_iterate = [&](std::uint32_t steps) {
        Poly h = poly_rem(gf, x, f);
        for (std::uint32_t j = 0; j < steps; ++j) h = poly_powmod(gf, h, gf.q(), f);
        return h;
    };
    if (frobenius_iterate(static_cast<std::uint32_t>(d)) != poly_rem(gf, x, f)) return false;
    std::uint32_t rest = static_cast<std::uint32_t>(d);
    for (std::uint32_t r = 2; r <= rest; ++r) {
        if (rest % r != 0) continue;
        while (rest % r == 0) rest /= r;
        Poly g = poly_sub(gf, frobenius_iterate(static_cast<std::uint32_t>(d) / r), x);
        if (poly_degree(poly_gcd(gf, g, f)) != 0) return false;
    }
    return true;
}

Poly find_irreducible(const Field& gf, std::uint32_t degree, std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        count *= gf.q();
        if (count > (1ull << 32)) throw std::invalid_argument("find_irreducible: candidate space too large");
    }
    std::uint64_t start = seed % count;
    for (std::uint64_t step = 0; step < count; ++step) {
        std::uint64_t idx = (start + step) % count;
        Poly f(degree + 1, 0);
        f[degree] = 1;
        std::uint64_t rem = idx;
        for (std::uint32_t i = 0; i < degree; ++i, rem /= gf.q())
            f[i] = static_cast<std::uint32_t>(rem % gf.q());
        if (poly_is_irreducible(gf, f)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

ExtField::ExtField(Field base, std::uint32_t t, Poly ext_modulus)
    : base_(std::move(base)), t_(t), mod_(std::move(ext_modulus)) {
    if (t_ < 1) throw std::invalid_argument("ExtField: t must be >= 1");
    if (mod_.size() != t_ + 1 || mod_.back() != 1)
        throw std::invalid_argument("ExtField: modulus must be monic of degree t");
    for (std::uint32_t c : mod_)
        if (c >= base_.q()) throw std::invalid_argument("ExtField: modulus coefficient out of range");
    if (!poly_is_irreducible(base_, mod_))
        throw std::invalid_argument("ExtField: modulus is reducible over the base field");
    order_ = 1;
    for (std::uint32_t i = 0; i < t_; ++i) {
        if (order_ > (1ull << 62) / base_.q())
            throw std::invalid_argument("ExtField: q^t too large");
        order_ *= base_.q();
    }
}

ExtField::Elem ExtField::one() const {
    Elem a(t_, 0);
    a[0] = 1;
    return a;
}

ExtField::Elem ExtField::from_base(std::uint32_t code) const {
    if (code >= base_.q()) throw std::invalid_argument("ExtField: base code out of range");
    Elem a(t_, 0);
    a[0] = code;
    return a;
}

bool ExtField::is_zero(const Elem& a) const {
    for (std::uint32_t c : a)
        if (c != 0) return false;
    return true;
}

bool ExtField::in_base(const Elem& a) const {
    for (std::uint32_t i = 1; i < t_; ++i)
        if (a[i] != 0) return false;
    return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem out(t_);
    for (std::uint32_t i = 0; i < t_; ++i) out[i] = base_.add(a[i], b[i]);
    return out;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem out(t_);
    for (std::uint32_t i = 0; i < t_; ++i) out[i] = base_.sub(a[i], b[i]);
    return out;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
    Elem out(t_);
    for (std::uint32_t i = 0; i < t_; ++i) out[i] = base_.neg(a[i]);
    return out;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint32_t> acc(2 * t_ - 1, 0);
    for (std::uint32_t i = 0; i < t_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < t_; ++j)
            acc[i + j] = base_.add(acc[i + j], base_.mul(a[i], b[j]));
    }
    for (std::uint32_t i = 2 * t_ - 2; i >= t_ && i < acc.size(); --i) {
        std::uint32_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (std::uint32_t j = 0; j < t_; ++j)
            acc[i - t_ + j] = base_.sub(acc[i - t_ + j], base_.mul(c, mod_[j]));
    }
    acc.resize(t_);
    return acc;
}

ExtField::Elem ExtField::scalar_mul(std::uint32_t c, const Elem& a) const {
    Elem out(t_);
    for (std::uint32_t i = 0; i < t_; ++i) out[i] = base_.mul(c, a[i]);
    return out;
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t k) const {
    if (k == 0) return one();
    if (is_zero(a)) return zero();
    Elem acc = one();
    Elem base = a;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::invalid_argument("ExtField: inversion of zero");
    return pow(a, order_ - 2);
}

ExtField::Elem ExtField::frobenius(const Elem& a) const { return pow(a, base_.q()); }

std::uint32_t ExtField::base_code(const Elem& a) const {
    if (!in_base(a)) throw std::logic_error("ExtField: norm left the base subfield");
    return a[0];
}

std::uint32_t ExtField::norm(const Elem& a) const {
    std::uint64_t exponent = (order_ - 1) / (base_.q() - 1);
    return base_code(pow(a, exponent));
}

std::uint32_t ExtField::norm_frobenius(const Elem& a) const {
    Elem acc = a;
    Elem conj = a;
    for (std::uint32_t i = 1; i < t_; ++i) {
        conj = frobenius(conj);
        acc = mul(acc, conj);
    }
    return base_code(acc);
}

ExtField::Elem ExtField::element_at(std::uint64_t index) const {
    if (index >= order_) throw std::invalid_argument("ExtField: element index out of range");
    Elem a(t_);
    for (std::uint32_t i = 0; i < t_; ++i, index /= base_.q())
        a[i] = static_cast<std::uint32_t>(index % base_.q());
    return a;
}

std::uint64_t ExtField::index_of(const Elem& a) const {
    std::uint64_t idx = 0, shift = 1;
    for (std::uint32_t i = 0; i < t_; ++i) {
        idx += std::uint64_t(a[i]) * shift;
        shift *= base_.q();
    }
    return idx;
}

}  // namespace thetaforge
