#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rees/monomial.hpp"
#include "rees/ring.hpp"

namespace rees {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Sparse multivariate polynomial.  Terms are kept strictly descending under
// the ring's storage order with no zero coefficients, so equality is a
// term-for-term comparison and printing is canonical.
class Polynomial {
public:
    Polynomial() = default;  // detached placeholder; only assignment is valid
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial m, Scalar c);
    // Normalizes: sorts, merges equal monomials, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    std::size_t term_count() const { return terms_.size(); }
    const Term& leading_term() const;  // under the storage order
    std::int64_t total_degree() const;  // -1 for the zero polynomial
    std::int64_t degree_in(std::size_t lo, std::size_t hi) const;
    // OR of the support masks of all terms.
    std::uint64_t support_mask() const;

    Polynomial scaled(const Scalar& c) const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, std::uint32_t e);

// "3*x^2*y - 2*y + 1"; deterministic, round-trips through parse_polynomial.
std::string to_string(const Polynomial& f);

// Accepts + - * ^, parentheses, integer literals of any size, and implicit
// multiplication by juxtaposition ("2x", "x(y+1)").  Variable names must
// match the ring exactly; exponents are nonnegative integers.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// f with variable i replaced by images[i]; all images must live in `target`.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images);

// Transport f to a ring containing the same-named variables (in any slots).
Polynomial map_to_ring(const Polynomial& f, const RingPtr& target);

// Quotient f/d when d divides f exactly, nullopt otherwise.
std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& d);

}  // namespace rees
