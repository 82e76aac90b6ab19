#include "rees/groebner.hpp"

#include <algorithm>

#include "rees/errors.hpp"
#include "rees/util.hpp"

namespace rees {

namespace {

// Working representation inside the engine: terms sorted strictly descending
// under the *working* order, which may differ from the storage order.
using Work = std::vector<Term>;

Work to_work(const Polynomial& f, const MonomialOrder& ord) {
    Work w(f.terms().begin(), f.terms().end());
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) {
        return cmp_monomials(a.mono, b.mono, ord) > 0;
    });
    return w;
}

Polynomial from_work(const RingPtr& ring, Work w) {
    return Polynomial::from_terms(ring, std::move(w));
}

// f := f - c * m * g, all sorted under ord.  Multiplying g through by the
// fixed monomial m preserves its term order, so this is a linear-time merge.
Work subtract_scaled(const Work& f, const Scalar& c, const Monomial& m, const Work& g,
                     const Field& field, const MonomialOrder& ord) {
    Work out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        const Monomial gm = g[j].mono.times(m);
        const int cmp = cmp_monomials(f[i].mono, gm, ord);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, field.neg(field.mul(c, g[j].coeff))});
            ++j;
        } else {
            Scalar s = field.sub(f[i].coeff, field.mul(c, g[j].coeff));
            if (!field.is_zero(s))
                out.push_back({f[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i)
        out.push_back(f[i]);
    for (; j < g.size(); ++j)
        out.push_back({g[j].mono.times(m), field.neg(field.mul(c, g[j].coeff))});
    return out;
}

// Full normal form of f against basis: every term of the remainder is
// irreducible.  The divisor tried first is the earliest basis element whose
// leading term divides, making the reduction deterministic.
Work reduce_full(Work f, const std::vector<Work>& basis, const Field& field,
                 const MonomialOrder& ord) {
    Work remainder;
    unsigned steps = 0;
    while (!f.empty()) {
        if (++steps % 256 == 0)
            check_deadline();
        const Term& head = f.front();
        const Work* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g.front().mono.divides(head.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(head);
            f.erase(f.begin());
            continue;
        }
        const Scalar c = field.div(head.coeff, divisor->front().coeff);
        const Monomial m = head.mono.divide_exact(divisor->front().mono);
        f = subtract_scaled(f, c, m, *divisor, field, ord);
    }
    return remainder;
}

struct Pair {
    std::uint32_t i, j;  // i < j, indices into the basis
    Monomial lcm;
    std::int64_t degree;
};

// Buchberger with the Gebauer-Moeller pair filters.  Elements are kept monic;
// redundancy is cleaned up by the final interreduction rather than mid-run.
class Engine {
public:
    Engine(RingPtr ring, MonomialOrder ord)
        : ring_(std::move(ring)), field_(ring_->field()), ord_(ord) {}

    std::vector<Polynomial> run(std::vector<Polynomial> gens) {
        for (const auto& g : gens) {
            if (g.is_zero())
                continue;
            Work w = reduce_full(to_work(g, ord_), basis_, field_, ord_);
            if (!add_reduced(w))
                return unit_basis();
        }
        while (!pairs_.empty()) {
            check_deadline();
            const Pair p = pop_best_pair();
            Work s = s_polynomial(p);
            Work r = reduce_full(std::move(s), basis_, field_, ord_);
            if (!add_reduced(r))
                return unit_basis();
        }
        return finalize();
    }

private:
    std::vector<Polynomial> unit_basis() const {
        return {Polynomial::constant(ring_, 1)};
    }

    // Adds an already-reduced element (monicized here); false means the ideal
    // is the whole ring and the caller should stop.
    bool add_reduced(Work& w) {
        if (w.empty())
            return true;
        if (w.front().mono.is_one())
            return false;
        const Scalar inv = field_.inv(w.front().coeff);
        for (auto& t : w)
            t.coeff = field_.mul(t.coeff, inv);
        update_pairs(w.front().mono);
        basis_.push_back(std::move(w));
        return true;
    }

    // Gebauer-Moeller update for the arrival of a new leading term.
    void update_pairs(const Monomial& lt_new) {
        const std::uint32_t u = static_cast<std::uint32_t>(basis_.size());
        // Chain criterion on the old pairs: (i, j) is superfluous once the
        // new term divides lcm(i, j) strictly inside both flanking pairs.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (auto& p : pairs_) {
            if (lt_new.divides(p.lcm)) {
                const Monomial li = basis_[p.i].front().mono.lcm(lt_new);
                const Monomial lj = basis_[p.j].front().mono.lcm(lt_new);
                if (!(li == p.lcm) && !(lj == p.lcm))
                    continue;
            }
            kept.push_back(std::move(p));
        }
        pairs_ = std::move(kept);

        struct Candidate {
            std::uint32_t i;
            Monomial lcm;
            bool coprime;
            bool dropped = false;
        };
        std::vector<Candidate> cand;
        cand.reserve(basis_.size());
        for (std::uint32_t i = 0; i < u; ++i) {
            const Monomial& lt_i = basis_[i].front().mono;
            cand.push_back({i, lt_i.lcm(lt_new), lt_i.coprime(lt_new)});
        }
        // M criterion: a candidate whose lcm strictly contains another
        // candidate's lcm is superfluous.
        for (auto& a : cand)
            for (const auto& b : cand) {
                if (&a == &b || a.dropped)
                    continue;
                if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
                    a.dropped = true;
                    break;
                }
            }
        // F/B criteria: within each group of equal lcms keep a single pair,
        // and none at all if some member has coprime leading terms (its
        // S-polynomial reduces to zero, covering the whole group).
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (cand[a].dropped)
                continue;
            bool coprime_seen = cand[a].coprime;
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                if (cand[b].dropped || !(cand[b].lcm == cand[a].lcm))
                    continue;
                cand[b].dropped = true;
                coprime_seen = coprime_seen || cand[b].coprime;
            }
            cand[a].dropped = coprime_seen;
        }
        for (auto& c : cand)
            if (!c.dropped) {
                const std::int64_t deg = c.lcm.degree();
                pairs_.push_back({c.i, u, std::move(c.lcm), deg});
            }
    }

    // Normal selection: smallest lcm degree, then smallest lcm under the
    // working order, then lowest indices.  Deterministic by construction.
    Pair pop_best_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            int better = 0;
            if (a.degree != b.degree) {
                better = a.degree < b.degree ? 1 : -1;
            } else {
                const int c = cmp_monomials(a.lcm, b.lcm, ord_);
                if (c != 0)
                    better = c < 0 ? 1 : -1;
                else if (a.i != b.i)
                    better = a.i < b.i ? 1 : -1;
                else if (a.j != b.j)
                    better = a.j < b.j ? 1 : -1;
            }
            if (better > 0)
                best = k;
        }
        Pair p = std::move(pairs_[best]);
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }

    Work s_polynomial(const Pair& p) const {
        const Work& f = basis_[p.i];
        const Work& g = basis_[p.j];
        // Both are monic: S = (lcm/lt_f) f - (lcm/lt_g) g.
        const Monomial mf = p.lcm.divide_exact(f.front().mono);
        const Monomial mg = p.lcm.divide_exact(g.front().mono);
        Work s;
        s.reserve(f.size());
        for (const auto& t : f)
            s.push_back({t.mono.times(mf), t.coeff});
        return subtract_scaled(s, field_.one(), mg, g, field_, ord_);
    }

    // Minimalize then tail-reduce: the unique reduced basis, sorted
    // descending by leading term.
    std::vector<Polynomial> finalize() {
        std::vector<std::size_t> order(basis_.size());
        for (std::size_t k = 0; k < order.size(); ++k)
            order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const int c = cmp_monomials(basis_[a].front().mono, basis_[b].front().mono, ord_);
            return c != 0 ? c < 0 : a < b;
        });
        std::vector<Work> minimal;
        for (std::size_t k : order) {
            const Monomial& lt = basis_[k].front().mono;
            bool redundant = false;
            for (const auto& kept : minimal)
                if (kept.front().mono.divides(lt)) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                minimal.push_back(std::move(basis_[k]));
        }
        // Tail reduction never changes a leading term (they are mutually
        // minimal), so one pass over the final set suffices.
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Work> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t l = 0; l < minimal.size(); ++l)
                if (l != k)
                    others.push_back(minimal[l]);
            minimal[k] = reduce_full(std::move(minimal[k]), others, field_, ord_);
        }
        std::sort(minimal.begin(), minimal.end(), [&](const Work& a, const Work& b) {
            return cmp_monomials(a.front().mono, b.front().mono, ord_) > 0;
        });
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (auto& w : minimal)
            out.push_back(from_work(ring_, std::move(w)));
        return out;
    }

    RingPtr ring_;
    const Field& field_;
    MonomialOrder ord_;
    std::vector<Work> basis_;
    std::vector<Pair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
    std::vector<Work> basis;
    basis.reserve(G.size());
    for (const auto& g : G) {
        if (!g.ring()->same_as(*f.ring()))
            throw InternalError("normal_form: mixed rings");
        if (!g.is_zero())
            basis.push_back(to_work(g, ord));
    }
    return from_work(f.ring(), reduce_full(to_work(f, ord), basis, f.ring()->field(), ord));
}

std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens,
                                       const MonomialOrder& ord) {
    for (const auto& g : gens)
        if (!g.is_zero() && !g.ring()->same_as(*ring))
            throw InternalError("groebner_basis: generator outside the ring");
    if (ord.kind == OrderKind::Block && ord.front_size >= ring->var_count())
        throw InternalError("block order must leave a nonempty tail");
    Engine engine(ring, ord);
    return engine.run(std::move(gens));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        if (!g.ring()->same_as(*ring_))
            throw InternalError("Ideal: generator outside the ring");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::zero(RingPtr ring) {
    return Ideal(std::move(ring), {});
}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& ord) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(ord);
        if (it != cache_->bases.end())
            return *it->second;
    }
    // Compute outside the lock; a racing thread computes the same canonical
    // basis, and whichever lands first is kept.
    auto computed = std::make_shared<const std::vector<Polynomial>>(
        groebner_basis(ring_, gens_, ord));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(ord, std::move(computed));
    return *it->second;
}

const std::vector<Polynomial>& Ideal::basis() const {
    return basis(ring_->storage_order());
}

bool Ideal::is_unit() const {
    const auto& b = basis();
    return b.size() == 1 && b[0].is_constant();
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero())
        return true;
    if (!f.ring()->same_as(*ring_))
        throw InternalError("contains: argument outside the ring");
    return normal_form(f, basis(), ring_->storage_order()).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw InternalError("ideal_equal: different rings");
    const auto& ga = a.basis();
    const auto& gb = b.basis();
    if (ga.size() != gb.size())
        return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i]))
            return false;
    return true;
}

Ideal eliminate_front_var(const Ideal& I) {
    const RingPtr& ring = I.ring();
    if (!ring->has_elim())
        throw InternalError("eliminate_front_var: no elimination variable");
    const RingPtr& target = ring->parent();
    const auto& gb = I.basis(ring->elim_order());
    std::vector<Polynomial> kept;
    for (const auto& g : gb)
        if ((g.support_mask() & 1) == 0)  // free of the leading variable
            kept.push_back(map_to_ring(g, target));
    return Ideal(target, std::move(kept));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw InternalError("ideal_sum: different rings");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw InternalError("ideal_product: different rings");
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& f : a.gens())
        for (const auto& g : b.gens())
            gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, std::uint32_t e) {
    if (e == 0)
        return Ideal::unit(I.ring());
    if (I.gens().empty())
        return Ideal::zero(I.ring());
    // All degree-e products of generators, enumerated as nondecreasing index
    // tuples so the generator list is deterministic.
    std::vector<Polynomial> gens;
    std::vector<std::size_t> idx(e, 0);
    while (true) {
        Polynomial prod = I.gens()[idx[0]];
        for (std::uint32_t k = 1; k < e; ++k)
            prod = prod * I.gens()[idx[k]];
        gens.push_back(std::move(prod));
        std::size_t pos = e;
        while (pos-- > 0) {
            if (idx[pos] + 1 < I.gens().size()) {
                const std::size_t next = idx[pos] + 1;
                for (std::size_t k = pos; k < e; ++k)
                    idx[k] = next;
                break;
            }
            if (pos == 0)
                return Ideal(I.ring(), std::move(gens));
        }
    }
}

}  // namespace rees
