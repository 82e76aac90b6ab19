#include "rees/koszul.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "rees/errors.hpp"
#include "rees/groebner.hpp"
#include "rees/util.hpp"

namespace rees {

namespace {

// Visit all strictly increasing k-subsets of {0..n-1} in lexicographic order.
void for_each_index_set(std::size_t n, std::size_t k,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > n)
        return;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    while (true) {
        visit(pick);
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] + (k - i) < n) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
        if (k == 0)
            return;
    }
}

// All exponent vectors of total degree d in n slots, grevlex-descending.
std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::size_t n, std::int64_t d) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current(n, 0);
    auto fill = [&](auto&& self, std::size_t slot, std::int64_t remaining) -> void {
        if (slot + 1 == n) {
            current[slot] = static_cast<std::uint32_t>(remaining);
            out.push_back(current);
            return;
        }
        for (std::int64_t e = remaining; e >= 0; --e) {
            current[slot] = static_cast<std::uint32_t>(e);
            self(self, slot + 1, remaining - e);
        }
        current[slot] = 0;
    };
    if (n == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    fill(fill, 0, d);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return cmp_grevlex(a, b) > 0;
    });
    return out;
}

// C(n,k)*C(p,q) but saturating at cap+1 so callers can compare with a budget
// without risking overflow.
std::int64_t capped_binomial_product(std::int64_t n, std::int64_t k, std::int64_t p,
                                     std::int64_t q, std::int64_t cap) {
    auto capped = [cap](std::int64_t top, std::int64_t bot) -> std::int64_t {
        if (bot < 0 || bot > top)
            return 0;
        bot = std::min(bot, top - bot);
        unsigned __int128 acc = 1;
        for (std::int64_t i = 1; i <= bot; ++i) {
            acc = acc * static_cast<unsigned __int128>(top - bot + i) / static_cast<unsigned __int128>(i);
            if (acc > static_cast<unsigned __int128>(cap))
                return cap + 1;
        }
        return static_cast<std::int64_t>(acc);
    };
    const std::int64_t a = capped(n, k);
    if (a > cap)
        return cap + 1;
    const std::int64_t b = capped(p, q);
    if (b > cap || (b != 0 && a > cap / b))
        return cap + 1;
    return a * b;
}

// Above this many minors the exact minors-ideal grade at position 1 is
// replaced by the rank argument (see GradeMethod::kRankNonzero).
constexpr std::int64_t kMinorBudget = 512;

}  // namespace

std::string basis_label(const WedgeBasisElement& b) {
    std::string out;
    if (!b.indices.empty()) {
        out += "e(";
        for (std::size_t i = 0; i < b.indices.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(b.indices[i] + 1);
        }
        out += ')';
    }
    for (std::size_t j = 0; j < b.t_exponents.size(); ++j) {
        if (b.t_exponents[j] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "T" + std::to_string(j + 1);
        if (b.t_exponents[j] > 1)
            out += "^" + std::to_string(b.t_exponents[j]);
    }
    return out.empty() ? "1" : out;
}

std::vector<WedgeBasisElement> strand_basis(std::size_t m, std::size_t n, std::size_t r,
                                            std::int64_t ell) {
    std::vector<WedgeBasisElement> out;
    if (ell < static_cast<std::int64_t>(r))
        return out;
    const auto monos = monomials_of_degree(n, ell - static_cast<std::int64_t>(r));
    for_each_index_set(m, r, [&](const std::vector<std::size_t>& pick) {
        for (const auto& exps : monos)
            out.push_back({pick, exps});
    });
    return out;
}

std::int64_t strand_rank(std::size_t m, std::size_t n, std::size_t r, std::int64_t ell) {
    if (ell < static_cast<std::int64_t>(r))
        return 0;
    return binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(r)) *
           binomial(ell - static_cast<std::int64_t>(r) + static_cast<std::int64_t>(n) - 1,
                    static_cast<std::int64_t>(n) - 1);
}

std::vector<std::int64_t> strand_ranks(std::size_t m, std::size_t n, std::int64_t ell) {
    if (ell < 0)
        throw InputError("strand degree must be nonnegative");
    std::vector<std::int64_t> out;
    out.reserve(m + 1);
    for (std::size_t r = 0; r <= m; ++r)
        out.push_back(strand_rank(m, n, r, ell));
    return out;
}

PolyMatrix strand_matrix(const PolyMatrix& M, std::size_t r, std::int64_t ell) {
    const std::size_t m = M.rows(), n = M.cols();
    if (r < 1 || r > m)
        throw InputError("boundary index must lie in [1, rows]");
    if (ell < 0)
        throw InputError("strand degree must be nonnegative");
    if (ell < static_cast<std::int64_t>(r))
        return PolyMatrix(M.ring(), 0, 0);

    const auto cols = strand_basis(m, n, r, ell);
    const auto rows = strand_basis(m, n, r - 1, ell);
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::uint32_t>>, std::size_t>
        row_of;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_of.emplace(std::make_pair(rows[i].indices, rows[i].t_exponents), i);

    PolyMatrix out(M.ring(), rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& src = cols[c];
        for (std::size_t p = 0; p < src.indices.size(); ++p) {
            std::vector<std::size_t> reduced = src.indices;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(p));
            for (std::size_t j = 0; j < n; ++j) {
                auto exps = src.t_exponents;
                ++exps[j];
                const auto it = row_of.find(std::make_pair(reduced, exps));
                if (it == row_of.end())
                    throw InternalError("boundary target missing from strand basis");
                const Polynomial& x = M.at(src.indices[p], j);
                out.at(it->second, c) =
                    out.at(it->second, c) + (p % 2 == 0 ? x : -x);
            }
        }
    }
    return out;
}

bool check_top_strand_minors(const PolyMatrix& M) {
    const std::size_t m = M.rows();
    return ideal_equal(minors_ideal(strand_matrix(M, m, static_cast<std::int64_t>(m)), 1),
                       minors_ideal(M, 1));
}

bool check_bottom_strand_minors(const PolyMatrix& M) {
    const std::size_t m = M.rows();
    return ideal_equal(minors_ideal(strand_matrix(M, 1, 1), m), minors_ideal(M, m));
}

GradedComplex::GradedComplex(RingPtr ring, std::vector<std::int64_t> ranks,
                             std::vector<PolyMatrix> maps,
                             std::optional<PolyMatrix> augmentation)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), maps_(std::move(maps)),
      augmentation_(std::move(augmentation)) {
    if (ranks_.size() != maps_.size() + 1)
        throw InputError("complex needs one rank per module, maps + 1 in total");
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
        if (ranks_[k] < 0)
            throw InputError("module ranks must be nonnegative");
        if (k < maps_.size()) {
            const PolyMatrix& a = maps_[k];
            if (!a.ring()->same_as(*ring_))
                throw InputError("all complex maps must live over one ring");
            if (a.rows() != static_cast<std::size_t>(ranks_[k]) ||
                a.cols() != static_cast<std::size_t>(ranks_[k + 1]))
                throw InputError("map shape disagrees with recorded module ranks");
        }
    }
    for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
        if (!(maps_[k] * maps_[k + 1]).is_zero())
            throw InputError("adjacent maps do not compose to zero");
    }
    if (augmentation_) {
        if (!augmentation_->ring()->same_as(*ring_))
            throw InputError("augmentation must live over the complex ring");
        if (augmentation_->rows() != 1 ||
            augmentation_->cols() != static_cast<std::size_t>(ranks_[0]))
            throw InputError("augmentation must be a single row matching rank 0");
        if (!maps_.empty() && !(*augmentation_ * maps_[0]).is_zero())
            throw InputError("augmentation composed with the first map is nonzero");
    }
}

const PolyMatrix& GradedComplex::map_at(std::size_t k) const {
    if (k < 1 || k > maps_.size())
        throw InputError("complex has no map at position " + std::to_string(k));
    return maps_[k - 1];
}

GradedComplex strand_complex(const PolyMatrix& M, std::int64_t ell) {
    const std::size_t m = M.rows(), n = M.cols();
    if (m == 0)
        throw InputError("strand complex needs a nonempty matrix");
    if (ell < 0)
        throw InputError("strand degree must be nonnegative");
    const std::size_t s = std::min<std::size_t>(m, static_cast<std::size_t>(ell));
    std::vector<std::int64_t> ranks;
    std::vector<PolyMatrix> maps;
    for (std::size_t r = 0; r <= s; ++r) {
        ranks.push_back(strand_rank(m, n, r, ell));
        if (r >= 1)
            maps.push_back(strand_matrix(M, r, ell));
    }
    return GradedComplex(M.ring(), std::move(ranks), std::move(maps));
}

GradedComplex power_resolution(const PolyMatrix& M, std::int64_t r_deg) {
    if (M.cols() != M.rows() + 1)
        throw InputError("power resolution needs one more column than rows");
    if (r_deg < 1)
        throw InputError("power resolution needs a positive power");
    const std::vector<Polynomial> g = signed_maximal_minors(M);
    const auto monomial_basis = strand_basis(M.rows(), M.cols(), 0, r_deg);
    PolyMatrix eps(M.ring(), 1, monomial_basis.size());
    for (std::size_t c = 0; c < monomial_basis.size(); ++c) {
        Polynomial prod = Polynomial::constant(M.ring(), 1);
        for (std::size_t j = 0; j < g.size(); ++j)
            if (monomial_basis[c].t_exponents[j] > 0)
                prod = prod * pow(g[j], monomial_basis[c].t_exponents[j]);
        eps.at(0, c) = std::move(prod);
    }
    GradedComplex strand = strand_complex(M, r_deg);
    std::vector<std::int64_t> ranks = strand.ranks();
    std::vector<PolyMatrix> maps;
    for (std::size_t k = 1; k <= strand.length(); ++k)
        maps.push_back(strand.map_at(k));
    return GradedComplex(M.ring(), std::move(ranks), std::move(maps), std::move(eps));
}

AcyclicityReport certify_acyclic(const GradedComplex& complex, unsigned jobs) {
    // Assemble the chain to certify: the augmentation, when present, is the
    // innermost map (position 1) and every A_k shifts one position outward.
    std::vector<const PolyMatrix*> chain;
    std::vector<std::int64_t> module_ranks;  // module_ranks[k] = rank F_k
    if (complex.augmentation()) {
        module_ranks.push_back(1);
        chain.push_back(&*complex.augmentation());
    }
    for (std::size_t k = 0; k < complex.ranks().size(); ++k) {
        module_ranks.push_back(complex.ranks()[k]);
        if (k + 1 < complex.ranks().size())
            chain.push_back(&complex.map_at(k + 1));
    }

    const std::size_t s = chain.size();
    std::vector<std::int64_t> expected(s + 2, 0);
    for (std::size_t k = s; k >= 1; --k)
        expected[k] = module_ranks[k] - expected[k + 1];

    AcyclicityReport report;
    report.positions.resize(s);
    parallel_for(s, jobs, [&](std::size_t idx) {
        const std::size_t k = idx + 1;
        const PolyMatrix& a = *chain[idx];
        PositionRecord rec;
        rec.position = k;
        rec.rank_expected = expected[k];
        rec.rank_computed = static_cast<std::int64_t>(matrix_rank(a));
        rec.rank_ok = rec.rank_expected >= 0 && rec.rank_computed == rec.rank_expected;
        if (!rec.rank_ok) {
            rec.grade_method = GradeMethod::kSkipped;
        } else if (rec.rank_expected == 0) {
            rec.grade_method = GradeMethod::kUnitIdeal;
            rec.grade_computed = GradeValue::infinite();
            rec.grade_ok = true;
        } else if (k == 1 && capped_binomial_product(
                                 static_cast<std::int64_t>(a.rows()), rec.rank_expected,
                                 static_cast<std::int64_t>(a.cols()), rec.rank_expected,
                                 kMinorBudget) > kMinorBudget) {
            rec.grade_method = GradeMethod::kRankNonzero;
            rec.grade_ok = true;
        } else {
            const Ideal minors =
                minors_ideal(a, static_cast<std::size_t>(rec.rank_expected));
            const GradeValue g = grade(minors);
            rec.grade_method = GradeMethod::kMinors;
            rec.grade_computed = g;
            rec.grade_ok = g.at_least(static_cast<std::int64_t>(k));
        }
        rec.pass = rec.rank_ok && rec.grade_ok;
        report.positions[idx] = std::move(rec);
    });
    report.pass = std::all_of(report.positions.begin(), report.positions.end(),
                              [](const PositionRecord& r) { return r.pass; });
    return report;
}

nlohmann::json AcyclicityReport::to_json() const {
    nlohmann::json out;
    out["pass"] = pass;
    out["positions"] = nlohmann::json::array();
    for (const auto& rec : positions) {
        nlohmann::json p;
        p["position"] = rec.position;
        p["rank_expected"] = rec.rank_expected;
        p["rank_computed"] = rec.rank_computed;
        p["rank_ok"] = rec.rank_ok;
        p["grade_required"] = rec.position;
        switch (rec.grade_method) {
        case GradeMethod::kMinors: p["grade_method"] = "minors"; break;
        case GradeMethod::kUnitIdeal: p["grade_method"] = "unit-ideal"; break;
        case GradeMethod::kRankNonzero: p["grade_method"] = "rank-nonzero"; break;
        case GradeMethod::kSkipped: p["grade_method"] = "skipped"; break;
        }
        p["grade"] = rec.grade_computed ? nlohmann::json(rec.grade_computed->to_string())
                                        : nlohmann::json(nullptr);
        p["grade_ok"] = rec.grade_ok;
        p["pass"] = rec.pass;
        out["positions"].push_back(std::move(p));
    }
    return out;
}

nlohmann::json strand_report(const PolyMatrix& M, std::int64_t ell) {
    const std::size_t m = M.rows(), n = M.cols();
    nlohmann::json out;
    out["degree"] = ell;
    out["ranks"] = strand_ranks(m, n, ell);
    out["maps"] = nlohmann::json::array();
    const std::size_t s = std::min<std::size_t>(m, static_cast<std::size_t>(std::max<std::int64_t>(ell, 0)));
    for (std::size_t r = 1; r <= s; ++r) {
        const PolyMatrix a = strand_matrix(M, r, ell);
        nlohmann::json entry;
        entry["position"] = r;
        auto labels = [&](std::size_t rr) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& b : strand_basis(m, n, rr, ell))
                arr.push_back(basis_label(b));
            return arr;
        };
        entry["row_labels"] = labels(r - 1);
        entry["col_labels"] = labels(r);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < a.cols(); ++j)
                row.push_back(to_string(a.at(i, j)));
            rows.push_back(std::move(row));
        }
        entry["entries"] = std::move(rows);
        out["maps"].push_back(std::move(entry));
    }
    return out;
}

}  // namespace rees
