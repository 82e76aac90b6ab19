#include "rees/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "rees/errors.hpp"

namespace rees {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
        throw InternalError("operands live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    Polynomial f(ring);
    if (!ring->field().is_zero(c))
        f.terms_.push_back({Monomial::one(ring->var_count()), std::move(c)});
    return f;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    Scalar s = ring->field().from_int(c);
    return constant(std::move(ring), std::move(s));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->var_count())
        throw InternalError("variable index out of range");
    Polynomial f(ring);
    f.terms_.push_back({Monomial::variable(index, ring->var_count()), ring->field().one()});
    return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
    Polynomial f(ring);
    if (!ring->field().is_zero(c))
        f.terms_.push_back({std::move(m), std::move(c)});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const MonomialOrder ord = ring->storage_order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return cmp_monomials(a.mono, b.mono, ord) > 0;
    });
    Polynomial f(ring);
    const Field& field = ring->field();
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            f.terms_.back().coeff = field.add(f.terms_.back().coeff, t.coeff);
            if (field.is_zero(f.terms_.back().coeff))
                f.terms_.pop_back();
        } else if (!field.is_zero(t.coeff)) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw InternalError("leading term of the zero polynomial");
    return terms_[0];
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

std::int64_t Polynomial::degree_in(std::size_t lo, std::size_t hi) const {
    std::int64_t d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree_in(lo, hi));
    return d;
}

std::uint64_t Polynomial::support_mask() const {
    std::uint64_t m = 0;
    for (const auto& t : terms_)
        m |= t.mono.support_mask();
    return m;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    const Field& field = ring_->field();
    if (field.is_zero(c))
        return Polynomial(ring_);
    Polynomial f(ring_);
    f.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        f.terms_.push_back({t.mono, field.mul(t.coeff, c)});
    return f;
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    return scaled(ring_->field().inv(terms_[0].coeff));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    const Field& field = a.ring()->field();
    const MonomialOrder ord = a.ring()->storage_order();
    Polynomial r(a.ring());
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const int c = cmp_monomials(a.terms_[i].mono, b.terms_[j].mono, ord);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Scalar s = field.add(a.terms_[i].coeff, b.terms_[j].coeff);
            if (!field.is_zero(s))
                r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i)
        r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
        r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a) {
    const Field& field = a.ring()->field();
    Polynomial r(a.ring());
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_)
        r.terms_.push_back({t.mono, field.neg(t.coeff)});
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    const Field& field = a.ring()->field();
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            products.push_back({ta.mono.times(tb.mono), field.mul(ta.coeff, tb.coeff)});
    return Polynomial::from_terms(a.ring(), std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring())
        return !a.ring() && !b.ring();
    if (!a.ring()->same_as(*b.ring()) || a.terms_.size() != b.terms_.size())
        return false;
    const Field& field = a.ring()->field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) ||
            !field.equal(a.terms_[i].coeff, b.terms_[i].coeff))
            return false;
    return true;
}

Polynomial pow(const Polynomial& base, std::uint32_t e) {
    Polynomial result = Polynomial::constant(base.ring(), 1);
    Polynomial sq = base;
    while (e) {
        if (e & 1)
            result = result * sq;
        e >>= 1;
        if (e)
            sq = sq * sq;
    }
    return result;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero())
        return "0";
    const Field& field = f.ring()->field();
    std::string out;
    for (std::size_t k = 0; k < f.terms().size(); ++k) {
        const Term& t = f.terms()[k];
        const bool neg = field.is_negative_display(t.coeff);
        if (k == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mag = field.to_string_magnitude(t.coeff);
        std::string mono;
        for (std::size_t i = 0; i < t.mono.var_count(); ++i) {
            const std::uint32_t e = t.mono.exponent(i);
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += f.ring()->var_name(i);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += mono;
        } else {
            out += mag + "*" + mono;
        }
    }
    return out;
}

namespace {

// Recursive-descent parser over a small token stream.
struct Parser {
    const RingPtr& ring;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("parse error at position " + std::to_string(pos) + " in '" +
                         std::string(text) + "': " + why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool starts_atom() {
        const char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial parse_expr() {
        Polynomial acc(ring);
        bool negate = false;
        if (peek() == '-') {
            ++pos;
            negate = true;
        } else if (peek() == '+') {
            ++pos;
        }
        acc = parse_product();
        if (negate)
            acc = -acc;
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_product();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_product();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_product() {
        Polynomial acc = parse_power();
        while (true) {
            if (peek() == '*') {
                ++pos;
                acc = acc * parse_power();
            } else if (starts_atom()) {
                acc = acc * parse_power();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (peek() != '^')
            return base;
        ++pos;
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected a nonnegative integer exponent after '^'");
        unsigned long e = 0;
        try {
            e = std::stoul(std::string(text.substr(start, pos - start)));
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
        if (e > 4096)
            fail("exponent out of range");
        return pow(base, static_cast<std::uint32_t>(e));
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= text.size())
            fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            return Polynomial::constant(
                ring, ring->field().from_digits(std::string(text.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string name(text.substr(start, pos - start));
            const auto idx = ring->var_index(name);
            if (!idx)
                fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    Parser p{ring, text};
    Polynomial f = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return f;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
    if (images.size() != f.ring()->var_count())
        throw InternalError("substitute: one image per variable required");
    for (const auto& g : images)
        if (!g.ring() || !g.ring()->same_as(*target))
            throw InternalError("substitute: image in the wrong ring");
    // Lazy power tables: images are reused across terms.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
        auto& table = powers[var];
        if (table.empty())
            table.push_back(Polynomial::constant(target, 1));
        while (table.size() <= e)
            table.push_back(table.back() * images[var]);
        return table[e];
    };
    Polynomial acc(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (const std::uint32_t e = t.mono.exponent(i))
                prod = prod * power_of(i, e);
        acc = acc + prod;
    }
    return acc;
}

Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
    if (f.ring()->same_as(*target))
        return Polynomial::from_terms(target, f.terms());
    const std::size_t n = f.ring()->var_count();
    // Only variables that actually occur need a slot in the target, so a
    // polynomial free of the elimination variable can be contracted.
    const std::uint64_t used = f.support_mask();
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(used >> i & 1))
            continue;
        const auto idx = target->var_index(f.ring()->var_name(i));
        if (!idx)
            throw InternalError("map_to_ring: target lacks variable '" +
                                f.ring()->var_name(i) + "'");
        slot[i] = *idx;
    }
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e(target->var_count(), 0);
        for (std::size_t i = 0; i < n; ++i)
            if (const std::uint32_t exp = t.mono.exponent(i))
                e[slot[i]] = exp;
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& d) {
    require_same_ring(f, d);
    if (d.is_zero())
        throw InternalError("division by the zero polynomial");
    const Field& field = f.ring()->field();
    Polynomial rem = f;
    std::vector<Term> quotient;
    // Over a domain with a compatible order, LT(q*d) = LT(q)*LT(d); when the
    // division is exact, cancelling leading terms must run to zero.
    while (!rem.is_zero()) {
        const Term& lt_r = rem.leading_term();
        const Term& lt_d = d.leading_term();
        if (!lt_d.mono.divides(lt_r.mono))
            return std::nullopt;
        Term q{lt_r.mono.divide_exact(lt_d.mono), field.div(lt_r.coeff, lt_d.coeff)};
        rem = rem - Polynomial::term(f.ring(), q.mono, q.coeff) * d;
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(f.ring(), std::move(quotient));
}

}  // namespace rees
