#include "rees/scalar.hpp"

#include "rees/errors.hpp"

namespace rees {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

// Inverse of a mod p via extended Euclid; a in [1, p).
std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw InternalError("inverse_mod: argument not invertible");
    return old_s >= 0 ? old_s : old_s + p;
}

}  // namespace

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0) {
        if (p_ >= (1u << 31))
            throw InputError("characteristic must be 0 or a prime below 2^31");
        if (!is_prime_u32(p_))
            throw InputError("characteristic " + std::to_string(p_) + " is not prime");
    }
}

Scalar Field::zero() const {
    return p_ ? Scalar(std::int64_t{0}) : Scalar(mpq_class(0));
}

Scalar Field::one() const {
    return p_ ? Scalar(std::int64_t{1}) : Scalar(mpq_class(1));
}

Scalar Field::from_int(std::int64_t v) const {
    if (p_ == 0)
        return mpq_class(static_cast<long>(v));
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return r;
}

Scalar Field::from_digits(const std::string& digits) const {
    mpz_class z;
    if (z.set_str(digits, 10) != 0)
        throw InputError("bad integer literal '" + digits + "'");
    if (p_ == 0)
        return mpq_class(z);
    mpz_class r = z % p_;
    return static_cast<std::int64_t>(r.get_si());
}

std::int64_t Field::residue(const Scalar& a) const {
    return std::get<std::int64_t>(a);
}

bool Field::is_zero(const Scalar& a) const {
    return p_ ? residue(a) == 0 : std::get<mpq_class>(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    return p_ ? residue(a) == 1 : std::get<mpq_class>(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    return p_ ? residue(a) == residue(b) : std::get<mpq_class>(a) == std::get<mpq_class>(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0)
        return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    std::int64_t r = residue(a) + residue(b);
    if (r >= p_)
        r -= p_;
    return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (p_ == 0)
        return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
    std::int64_t r = residue(a) - residue(b);
    if (r < 0)
        r += p_;
    return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0)
        return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    return (residue(a) * residue(b)) % p_;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    return mul(a, inv(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ == 0)
        return mpq_class(-std::get<mpq_class>(a));
    const std::int64_t r = residue(a);
    return r == 0 ? r : p_ - r;
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a))
        throw InternalError("division by zero in the coefficient field");
    if (p_ == 0)
        return mpq_class(1 / std::get<mpq_class>(a));
    return inverse_mod(residue(a), p_);
}

bool Field::is_negative_display(const Scalar& a) const {
    if (p_ == 0)
        return std::get<mpq_class>(a) < 0;
    return residue(a) > p_ / 2;
}

std::string Field::to_string(const Scalar& a) const {
    if (p_ == 0)
        return std::get<mpq_class>(a).get_str();
    const std::int64_t r = residue(a);
    return std::to_string(r > p_ / 2 ? r - p_ : r);
}

std::string Field::to_string_magnitude(const Scalar& a) const {
    std::string s = to_string(a);
    return s.size() && s[0] == '-' ? s.substr(1) : s;
}

}  // namespace rees
