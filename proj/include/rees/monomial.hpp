#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rees {

enum class OrderKind { Lex, Grevlex, Block };

// Term order on power products.  Block compares a leading group of variables
// first (grevlex within each group), which is the elimination order used to
// project an ideal onto the trailing variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::uint32_t front_size = 0;  // Block only: width of the leading group

    friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

// Power product of the ring variables.  Exponents are stored densely; the
// support bitmask makes divisibility and coprimality tests one AND each
// (rings are capped at 64 variables for this reason).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial one(std::size_t var_count);
    static Monomial variable(std::size_t index, std::size_t var_count);

    std::size_t var_count() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::int64_t degree() const { return degree_; }
    std::int64_t degree_in(std::size_t lo, std::size_t hi) const;
    std::uint64_t support_mask() const { return mask_; }
    bool is_one() const { return degree_ == 0; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial divide_exact(const Monomial& other) const;  // this / other
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::int64_t degree_ = 0;
    std::uint64_t mask_ = 0;
};

// Three-way comparisons returning <0, 0, >0 like memcmp.
int cmp_grevlex(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
int cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace rees
