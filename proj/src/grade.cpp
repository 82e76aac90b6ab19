#include "rees/grade.hpp"

#include <algorithm>
#include <bit>

#include "rees/errors.hpp"

namespace rees {

namespace {

// Minimum number of variables needed to meet every support mask, by
// branch-and-bound on the variables of the first unmet mask.  The masks come
// from leading terms of a Groebner basis, so there are few and they are small.
class HittingSetSolver {
public:
    explicit HittingSetSolver(std::vector<std::uint64_t> masks) : masks_(std::move(masks)) {
        // Keep only inclusion-minimal masks; supersets are hit for free.
        std::sort(masks_.begin(), masks_.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::popcount(a) < std::popcount(b);
        });
        std::vector<std::uint64_t> minimal;
        for (const auto m : masks_) {
            bool covered = false;
            for (const auto k : minimal)
                if ((k & ~m) == 0) {
                    covered = true;
                    break;
                }
            if (!covered)
                minimal.push_back(m);
        }
        masks_ = std::move(minimal);
    }

    unsigned solve() {
        best_ = greedy();
        descend(0, 0);
        return best_;
    }

private:
    unsigned greedy() {
        std::uint64_t chosen = 0;
        unsigned count = 0;
        while (true) {
            const std::uint64_t* first_unmet = nullptr;
            for (const auto& m : masks_)
                if ((m & chosen) == 0) {
                    first_unmet = &m;
                    break;
                }
            if (!first_unmet)
                return count;
            // Pick the variable meeting the most unmet masks (lowest index on ties).
            unsigned best_var = 0;
            std::size_t best_hits = 0;
            std::uint64_t todo = *first_unmet;
            while (todo) {
                const unsigned v = static_cast<unsigned>(std::countr_zero(todo));
                todo &= todo - 1;
                std::size_t hits = 0;
                for (const auto m : masks_)
                    if ((m & chosen) == 0 && (m >> v & 1))
                        ++hits;
                if (hits > best_hits) {
                    best_hits = hits;
                    best_var = v;
                }
            }
            chosen |= std::uint64_t{1} << best_var;
            ++count;
        }
    }

    void descend(std::uint64_t chosen, unsigned count) {
        if (count >= best_)
            return;
        const std::uint64_t* unmet = nullptr;
        for (const auto& m : masks_)
            if ((m & chosen) == 0) {
                unmet = &m;
                break;
            }
        if (!unmet) {
            best_ = count;
            return;
        }
        std::uint64_t todo = *unmet;
        while (todo) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(todo));
            todo &= todo - 1;
            descend(chosen | (std::uint64_t{1} << v), count + 1);
        }
    }

    std::vector<std::uint64_t> masks_;
    unsigned best_ = 0;
};

}  // namespace

std::int64_t krull_dimension(const Ideal& I, const MonomialOrder& ord) {
    const auto& gb = I.basis(ord);
    const std::int64_t nvars = static_cast<std::int64_t>(I.ring()->var_count());
    if (gb.empty())
        return nvars;  // zero ideal: the whole space
    std::vector<std::uint64_t> masks;
    masks.reserve(gb.size());
    for (const auto& g : gb) {
        // Leading term under the requested order, not the storage order.
        const Term* lead = &g.terms()[0];
        for (const auto& t : g.terms())
            if (cmp_monomials(t.mono, lead->mono, ord) > 0)
                lead = &t;
        if (lead->mono.is_one())
            throw InputError("krull_dimension: the unit ideal has an empty variety");
        masks.push_back(lead->mono.support_mask());
    }
    // A subset U of variables is independent iff no leading-term support lies
    // inside U, i.e. the complement of U meets every mask.  Maximizing |U|
    // is therefore nvars minus the minimum hitting set.
    HittingSetSolver solver(std::move(masks));
    return nvars - static_cast<std::int64_t>(solver.solve());
}

std::int64_t krull_dimension(const Ideal& I) {
    return krull_dimension(I, I.ring()->storage_order());
}

GradeValue grade(const Ideal& I) {
    if (I.is_zero_ideal())
        return GradeValue::finite(0);
    if (I.is_unit())
        return GradeValue::infinite();
    const std::int64_t nvars = static_cast<std::int64_t>(I.ring()->var_count());
    return GradeValue::finite(nvars - krull_dimension(I));
}

bool grade_at_least(const Ideal& I, std::int64_t bound) {
    return grade(I).at_least(bound);
}

}  // namespace rees
