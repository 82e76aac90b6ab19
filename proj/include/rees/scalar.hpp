#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace rees {

// Element of the coefficient field.  Prime characteristic stores the
// canonical residue in [0, p); characteristic zero stores a GMP rational.
using Scalar = std::variant<std::int64_t, mpq_class>;

// The coefficient field: Q when characteristic == 0, else GF(p) for a prime
// p < 2^31 (so a product of residues fits in int64 before reduction).
class Field {
public:
    explicit Field(std::uint32_t characteristic);

    std::uint32_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    // Decimal digit string of arbitrary length (no sign), e.g. from the parser.
    Scalar from_digits(const std::string& digits) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    // Display form.  Prime fields use the balanced representative, so with
    // p = 32003 the residue 32001 prints (and sign-reports) as -2.
    bool is_negative_display(const Scalar& a) const;
    std::string to_string(const Scalar& a) const;           // e.g. "-2", "3/4"
    std::string to_string_magnitude(const Scalar& a) const;  // e.g. "2", "3/4"

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
    std::int64_t residue(const Scalar& a) const;
    std::uint32_t p_;  // 0 for the rationals
};

}  // namespace rees
