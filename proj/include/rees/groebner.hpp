#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

// Remainder of f under full multivariate division by G (tail terms reduced
// too).  G need not be a Groebner basis; the divisor tried first is the
// earliest element of G whose leading term divides, so the result is
// deterministic for a fixed G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

// The reduced Groebner basis of (gens) under ord: monic, mutually reduced,
// sorted descending by leading term.  This is the unique reduced basis, so
// any two generating sets of the same ideal give byte-identical output.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens,
                                       const MonomialOrder& ord);

// An ideal of a polynomial ring.  Generators are kept as given (minus zeros);
// reduced Groebner bases are computed on demand and cached per order.  The
// cache is shared by copies and safe to fill from several threads.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // Reduced Groebner basis under ord (storage order by default).
    const std::vector<Polynomial>& basis(const MonomialOrder& ord) const;
    const std::vector<Polynomial>& basis() const;

    bool is_unit() const;
    bool contains(const Polynomial& f) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };
    std::shared_ptr<Cache> cache_;
};

// Equality as ideals: identical reduced Groebner bases under the storage order.
bool ideal_equal(const Ideal& a, const Ideal& b);

// The ideal I restricted to the subring without the leading elimination
// variable.  Requires I.ring()->has_elim(); computes a Groebner basis under
// the block order and keeps the elements free of the eliminated variable,
// mapped into the parent ring.
Ideal eliminate_front_var(const Ideal& I);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& I, std::uint32_t e);

}  // namespace rees
