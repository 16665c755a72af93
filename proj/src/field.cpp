#include "wps/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wps/numtheory.hpp"

namespace wps {

namespace {

// Dense base-p polynomial arithmetic on small coefficient vectors. Degree
// stays below 2k <= 32, so plain O(n^2) schoolbook routines are plenty.

using Poly = std::vector<std::uint32_t>; // coefficient i of x^i

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    trim(out);
    return out;
}

// Remainder of a modulo monic divisor d.
Poly poly_rem(Poly a, const Poly& d, std::uint32_t p) {
    trim(a);
    const std::size_t deg_d = d.size() - 1;
    while (a.size() > deg_d) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - deg_d;
        if (lead) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                std::uint64_t sub = std::uint64_t(lead) * d[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool poly_is_zero(const Poly& f) { return f.empty(); }

// Monic polynomial of degree deg whose lower coefficients are the base-p
// digits of idx, least significant digit = constant term.
Poly monic_from_index(std::uint64_t idx, std::uint32_t deg, std::uint32_t p) {
    Poly f(deg + 1, 0);
    f[deg] = 1;
    for (std::uint32_t j = 0; j < deg; ++j) {
        f[j] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return f;
}

bool divides_some_monic(const Poly& candidate, std::uint32_t deg, std::uint32_t p) {
    // Trial division against every monic divisor of degree 1..deg/2.
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t j = 0; j < d; ++j) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly divisor = monic_from_index(idx, d, p);
            if (poly_is_zero(poly_rem(candidate, divisor, p))) return true;
        }
    }
    return false;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// comparing coefficient vectors (c_0,...,c_{k-1}) left to right.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    // Lex order on (c_0,...,c_{k-1}) makes c_0 the most significant digit.
    std::vector<std::uint32_t> c(k, 0);
    for (;;) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (!divides_some_monic(f, k, p)) return c;
        // Advance the odometer, last coordinate fastest.
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (++c[j] < p) break;
            c[j] = 0;
            if (j == 0)
                throw std::logic_error("smallest_irreducible: search exhausted (impossible)");
        }
    }
}

} // namespace

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k, std::uint32_t bound) {
    if (!is_prime(p))
        throw std::invalid_argument("Field: characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("Field: extension degree must be positive");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > bound)
            throw std::invalid_argument("Field: p^k exceeds the configured bound " +
                                        std::to_string(bound));
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = static_cast<std::uint32_t>(q);
    if (k > 1) f->modulus_ = smallest_irreducible(p, k);

    // Generator: smallest encoding whose order is exactly q-1, certified by
    // g^((q-1)/r) != 1 for every prime r | q-1.
    const std::uint32_t qm1 = f->q_ - 1;
    auto radicals = prime_factors(qm1 == 0 ? 1 : qm1);
    std::uint32_t gen = 0;
    for (std::uint32_t v = 1; v < f->q_; ++v) {
        bool ok = true;
        for (const auto& [r, e] : radicals) {
            (void)e;
            // bootstrap pow by square-and-multiply on the raw representation
            std::uint64_t exp = qm1 / r;
            std::uint32_t acc = 1, base = v;
            while (exp) {
                if (exp & 1) acc = f->mul_poly(acc, base);
                base = f->mul_poly(base, base);
                exp >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (qm1 == 1) ok = (v == 1); // F_2: the identity generates the trivial group
        if (ok) { gen = v; break; }
    }
    if (gen == 0) throw std::logic_error("Field: no generator found (impossible)");
    f->generator_ = {gen};

    f->exp_.resize(qm1 == 0 ? 1 : qm1);
    f->log_.assign(f->q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t e = 0; e < f->exp_.size(); ++e) {
        f->exp_[e] = acc;
        f->log_[acc] = e;
        acc = f->mul_poly(acc, gen);
    }
    if (acc != 1) throw std::logic_error("Field: generator order mismatch (impossible)");

    if (f->q_ <= 256) {
        f->mul_table_.resize(std::size_t(f->q_) * f->q_);
        for (std::uint32_t a = 0; a < f->q_; ++a)
            for (std::uint32_t b = 0; b <= a; ++b) {
                auto prod = static_cast<std::uint16_t>(f->mul_poly(a, b));
                f->mul_table_[std::size_t(a) * f->q_ + b] = prod;
                f->mul_table_[std::size_t(b) * f->q_ + a] = prod;
            }
    }
    return f;
}

std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t k, std::uint32_t bound) {
    return Field::make(p, k, bound);
}

bool same_field(const Field& a, const Field& b) {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree();
}

void Field::check(FieldElement a) const {
    if (a.value >= q_)
        throw std::out_of_range("Field: encoding " + std::to_string(a.value) +
                                " out of range for q=" + std::to_string(q_));
}

FieldElement Field::element(std::uint32_t value) const {
    FieldElement e{value};
    check(e);
    return e;
}

std::vector<std::uint32_t> Field::decompose(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> digits(k_);
    std::uint32_t v = a.value;
    for (std::uint32_t j = 0; j < k_; ++j) {
        digits[j] = v % p_;
        v /= p_;
    }
    return digits;
}

FieldElement Field::compose(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() != k_)
        throw std::invalid_argument("Field: digit vector has wrong length");
    std::uint32_t v = 0;
    for (std::size_t j = digits.size(); j > 0; --j) {
        if (digits[j - 1] >= p_) throw std::invalid_argument("Field: digit out of range");
        v = v * p_ + digits[j - 1];
    }
    return {v};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check(a); check(b);
    if (k_ == 1) return {(a.value + b.value) % p_};
    std::uint32_t out = 0, mult = 1;
    std::uint32_t va = a.value, vb = b.value;
    for (std::uint32_t j = 0; j < k_; ++j) {
        out += (va % p_ + vb % p_) % p_ * mult;
        va /= p_; vb /= p_;
        mult *= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    check(a);
    if (k_ == 1) return {(p_ - a.value) % p_};
    std::uint32_t out = 0, mult = 1;
    std::uint32_t va = a.value;
    for (std::uint32_t j = 0; j < k_; ++j) {
        out += (p_ - va % p_) % p_ * mult;
        va /= p_;
        mult *= p_;
    }
    return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

std::uint32_t Field::mul_poly(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    Poly fa, fb;
    for (std::uint32_t v = a; v; v /= p_) fa.push_back(v % p_);
    for (std::uint32_t v = b; v; v /= p_) fb.push_back(v % p_);
    Poly prod = poly_mul(fa, fb, p_);
    Poly mod(modulus_.begin(), modulus_.end());
    mod.push_back(1);
    Poly rem = poly_rem(std::move(prod), mod, p_);
    std::uint32_t out = 0;
    for (std::size_t j = rem.size(); j > 0; --j) out = out * p_ + rem[j - 1];
    return out;
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check(a); check(b);
    if (!mul_table_.empty()) return {mul_table_[std::size_t(a.value) * q_ + b.value]};
    if (a.value == 0 || b.value == 0) return {0};
    std::uint64_t e = std::uint64_t(log_[a.value]) + log_[b.value];
    return {exp_[e % (q_ - 1)]};
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.value == 0) throw std::domain_error("Field: zero has no inverse");
    return {exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    check(a);
    if (a.value == 0) return e == 0 ? one() : zero();
    std::uint64_t r = std::uint64_t(log_[a.value]) % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
    return {exp_[r]};
}

FieldElement Field::frobenius(FieldElement a, std::uint64_t base_q) const {
    check(a);
    // base_q must be p^d with d | k
    std::uint64_t b = base_q;
    std::uint32_t d = 0;
    while (b > 1 && b % p_ == 0) { b /= p_; ++d; }
    if (b != 1 || d == 0 || k_ % d != 0)
        throw std::invalid_argument("Field: " + std::to_string(base_q) +
                                    " is not a subfield order of q=" + std::to_string(q_));
    return pow(a, base_q);
}

std::vector<FieldElement> Field::roots_of_unity(std::uint64_t r) const {
    if (r == 0) throw std::invalid_argument("Field: roots_of_unity needs positive r");
    std::vector<FieldElement> out;
    for (std::uint32_t v = 1; v < q_; ++v)
        if (pow({v}, r) == one()) out.push_back({v});
    return out; // ascending by construction
}

std::uint32_t Field::log(FieldElement a) const {
    check(a);
    if (a.value == 0) throw std::domain_error("Field: zero has no discrete log");
    return log_[a.value];
}

FieldElement Field::exp(std::uint64_t e) const {
    return {exp_[e % (q_ - 1 == 0 ? 1 : q_ - 1)]};
}

} // namespace wps
