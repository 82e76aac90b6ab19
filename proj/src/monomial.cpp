#include "rees/monomial.hpp"

#include <limits>

#include "rees/errors.hpp"

namespace rees {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
    if (exps_.size() > 64)
        throw InputError("rings are limited to 64 variables");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        degree_ += exps_[i];
        if (exps_[i])
            mask_ |= std::uint64_t{1} << i;
    }
}

Monomial Monomial::one(std::size_t var_count) {
    return Monomial(std::vector<std::uint32_t>(var_count, 0));
}

Monomial Monomial::variable(std::size_t index, std::size_t var_count) {
    std::vector<std::uint32_t> e(var_count, 0);
    e.at(index) = 1;
    return Monomial(std::move(e));
}

std::int64_t Monomial::degree_in(std::size_t lo, std::size_t hi) const {
    std::int64_t d = 0;
    for (std::size_t i = lo; i < hi; ++i)
        d += exps_[i];
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const std::uint64_t s = std::uint64_t{exps_[i]} + other.exps_[i];
        if (s > std::numeric_limits<std::uint32_t>::max())
            throw InternalError("monomial exponent overflow");
        e[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::divide_exact(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (other.exps_[i] > exps_[i])
            throw InternalError("divide_exact: divisor does not divide");
        e[i] = exps_[i] - other.exps_[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

int cmp_grevlex(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    std::int64_t da = 0, db = 0;
    for (auto v : a)
        da += v;
    for (auto v : b)
        db += v;
    if (da != db)
        return da < db ? -1 : 1;
    // Equal degree: the monomial whose trailing difference is negative wins.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (ord.kind) {
    case OrderKind::Lex:
        for (std::size_t i = 0; i < ea.size(); ++i)
            if (ea[i] != eb[i])
                return ea[i] < eb[i] ? -1 : 1;
        return 0;
    case OrderKind::Grevlex:
        return cmp_grevlex(ea, eb);
    case OrderKind::Block: {
        const std::size_t f = ord.front_size;
        const int front = cmp_grevlex(std::span(ea).first(f), std::span(eb).first(f));
        if (front != 0)
            return front;
        return cmp_grevlex(std::span(ea).subspan(f), std::span(eb).subspan(f));
    }
    }
    throw InternalError("unknown monomial order");
}

}  // namespace rees
