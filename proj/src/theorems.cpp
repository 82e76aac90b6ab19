#include "rees/theorems.hpp"

#include <algorithm>

#include "rees/errors.hpp"
#include "rees/util.hpp"

namespace rees {

namespace {

std::string forms_label(std::size_t m) {
    if (m == 1)
        return "(f_1)S";
    if (m == 2)
        return "(f_1,f_2)S";
    return "(f_1,...,f_" + std::to_string(m) + ")S";
}

// The "grade (f)S = m" clause shared by both checks.
ClauseRecord forms_grade_clause(const PolyMatrix& M) {
    const std::size_t m = M.rows();
    const GradeValue g = grade_linear_forms(M);
    ClauseRecord rec;
    rec.label = "grade " + forms_label(m) + " = " + std::to_string(m);
    rec.expected = "= " + std::to_string(m);
    rec.computed = g.to_string();
    rec.pass = g == GradeValue::finite(static_cast<std::int64_t>(m));
    return rec;
}

// One "grade I_k(M) >= bound" clause.
ClauseRecord minor_grade_clause(const PolyMatrix& M, std::size_t k, std::int64_t bound) {
    const GradeValue g = grade(minors_ideal(M, k));
    ClauseRecord rec;
    rec.label = "grade I_" + std::to_string(k) + "(M) >= " + std::to_string(bound);
    rec.expected = ">= " + std::to_string(bound);
    rec.computed = g.to_string();
    rec.pass = g.at_least(bound);
    return rec;
}

std::string verdict_of(bool side1, bool side2) {
    if (side1 != side2)
        return "VIOLATION";
    return side1 ? "EQUIV_BOTH_TRUE" : "EQUIV_BOTH_FALSE";
}

}  // namespace

RingPtr forms_ring(const PolyMatrix& M) {
    return Ring::extend_with_forms(M.ring(), M.cols());
}

Ideal symmetric_ideal(const PolyMatrix& M, const RingPtr& S) {
    return Ideal(S, linear_forms(M, S));
}

GradeValue grade_linear_forms(const PolyMatrix& M) {
    return grade(symmetric_ideal(M, forms_ring(M)));
}

Ideal rees_ideal(const PolyMatrix& M, const RingPtr& S) {
    if (M.cols() != M.rows() + 1)
        throw InputError("Rees kernel needs one more column than rows");
    if (S->form_count() != M.cols())
        throw InputError("ring provides " + std::to_string(S->form_count()) +
                         " forms for a matrix with " + std::to_string(M.cols()) +
                         " columns");
    const std::vector<Polynomial> g = signed_maximal_minors(M);
    if (std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); }))
        throw InputError("the maximal minors all vanish; the Rees construction is degenerate");

    const RingPtr St = Ring::extend_with_elim(S);
    const Polynomial t = Polynomial::variable(St, 0);
    std::vector<Polynomial> gens;
    gens.reserve(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) {
        const Polynomial Tj = Polynomial::variable(St, St->forms_begin() + j);
        gens.push_back(Tj - t * map_to_ring(g[j], St));
    }
    return eliminate_front_var(Ideal(St, std::move(gens)));
}

TheoremReport check_theorem1(const PolyMatrix& M, unsigned jobs) {
    const std::size_t m = M.rows();
    TheoremReport report;
    report.theorem = "1.1";
    report.conditions.resize(m + 1);
    parallel_for(m + 1, jobs, [&](std::size_t idx) {
        if (idx < m)
            report.conditions[idx] =
                minor_grade_clause(M, idx + 1, static_cast<std::int64_t>(m - (idx + 1) + 1));
        else
            report.conditions[idx] = forms_grade_clause(M);
    });
    report.side1 = std::all_of(report.conditions.begin(), report.conditions.end() - 1,
                               [](const ClauseRecord& c) { return c.pass; });
    report.side2 = report.conditions.back().pass;
    report.verdict = verdict_of(report.side1, report.side2);
    return report;
}

TheoremReport check_theorem2(const PolyMatrix& M, unsigned jobs) {
    if (M.cols() != M.rows() + 1)
        throw InputError("this equivalence needs one more column than rows");
    const std::size_t m = M.rows();
    TheoremReport report;
    report.theorem = "1.2";
    report.conditions.resize(m + 2);
    parallel_for(m + 2, jobs, [&](std::size_t idx) {
        if (idx < m) {
            report.conditions[idx] =
                minor_grade_clause(M, idx + 1, static_cast<std::int64_t>(m - (idx + 1) + 2));
        } else if (idx == m) {
            // Kernel clause.  With all minors zero the map S -> R[It] kills
            // every T_j, so the kernel is the irrelevant T-ideal.
            const RingPtr S = forms_ring(M);
            const Ideal sym = symmetric_ideal(M, S);
            Ideal kernel = Ideal::zero(S);
            if (minors_ideal(M, m).is_zero_ideal()) {
                std::vector<Polynomial> ts;
                for (std::size_t j = 0; j < M.cols(); ++j)
                    ts.push_back(Polynomial::variable(S, S->forms_begin() + j));
                kernel = Ideal(S, std::move(ts));
            } else {
                kernel = rees_ideal(M, S);
            }
            ClauseRecord rec;
            rec.label = "Rees kernel = " + forms_label(m);
            rec.expected = "equal";
            rec.pass = ideal_equal(kernel, sym);
            rec.computed = rec.pass ? "equal" : "different";
            report.conditions[idx] = std::move(rec);
        } else {
            report.conditions[idx] = forms_grade_clause(M);
        }
    });
    report.side1 = std::all_of(report.conditions.begin(), report.conditions.begin() + m,
                               [](const ClauseRecord& c) { return c.pass; });
    report.side2 = report.conditions[m].pass && report.conditions[m + 1].pass;
    report.verdict = verdict_of(report.side1, report.side2);
    return report;
}

nlohmann::json TheoremReport::to_json() const {
    nlohmann::json out;
    out["theorem"] = theorem;
    out["conditions"] = nlohmann::json::array();
    for (const auto& c : conditions) {
        nlohmann::json rec;
        rec["label"] = c.label;
        rec["expected"] = c.expected;
        rec["computed"] = c.computed;
        rec["pass"] = c.pass;
        out["conditions"].push_back(std::move(rec));
    }
    out["side1"] = side1;
    out["side2"] = side2;
    out["verdict"] = verdict;
    return out;
}

}  // namespace rees
