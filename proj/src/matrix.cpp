#include "rees/matrix.hpp"

#include <algorithm>

#include "rees/errors.hpp"
#include "rees/util.hpp"

namespace rees {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    a_.assign(rows_ * cols_, Polynomial(ring_));
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    PolyMatrix out(std::move(ring), m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n)
            throw InputError("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[i][j].ring() || !rows[i][j].ring()->same_as(*out.ring_))
                throw InternalError("matrix entry outside the ring");
            out.at(i, j) = std::move(rows[i][j]);
        }
    }
    return out;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw InternalError("matrix index out of range");
    return a_[i * cols_ + j];
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw InternalError("matrix index out of range");
    return a_[i * cols_ + j];
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    PolyMatrix out(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(i, j) = at(row_idx[i], col_idx[j]);
    return out;
}

PolyMatrix PolyMatrix::delete_column(std::size_t j) const {
    if (j >= cols_)
        throw InternalError("delete_column: index out of range");
    std::vector<std::size_t> rows_idx(rows_), cols_idx;
    for (std::size_t i = 0; i < rows_; ++i)
        rows_idx[i] = i;
    for (std::size_t c = 0; c < cols_; ++c)
        if (c != j)
            cols_idx.push_back(c);
    return submatrix(rows_idx, cols_idx);
}

bool PolyMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_ || !a.ring_->same_as(*b.ring_))
        throw InternalError("matrix product shape mismatch");
    PolyMatrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Polynomial& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero())
                    out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
        }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !a.ring_->same_as(*b.ring_))
        return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i]))
            return false;
    return true;
}

PolyMatrix make_input_matrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
    PolyMatrix m = PolyMatrix::from_rows(std::move(ring), std::move(rows));
    if (m.rows() == 0 || m.cols() == 0)
        throw InputError("the matrix must be nonempty");
    if (m.rows() > m.cols())
        throw InputError("the matrix must have at least as many columns as rows (m <= n)");
    // Entries must live in the base subring: no T-variables, no t.
    const RingPtr& R = m.ring();
    std::uint64_t allowed = 0;
    for (std::size_t v = R->base_begin(); v < R->forms_begin(); ++v)
        allowed |= std::uint64_t{1} << v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if ((m.at(i, j).support_mask() & ~allowed) != 0)
                throw InputError("matrix entries must use base variables only");
    return m;
}

namespace {

Polynomial det_by_cofactors(const PolyMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1)
        return a.at(0, 0);
    if (n == 2)
        return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    // Expand along the row with the most zeros.
    std::size_t best_row = 0, best_zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t z = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j).is_zero())
                ++z;
        if (z > best_zeros) {
            best_zeros = z;
            best_row = i;
        }
    }
    Polynomial acc(a.ring());
    std::vector<std::size_t> rows_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (i != best_row)
            rows_idx.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(best_row, j).is_zero())
            continue;
        std::vector<std::size_t> cols_idx;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j)
                cols_idx.push_back(c);
        Polynomial term = a.at(best_row, j) * det_by_cofactors(a.submatrix(rows_idx, cols_idx));
        acc = ((best_row + j) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// One fraction-free elimination pass.  Returns the rank; when want_det is set
// (square input) also produces the determinant.  Entries of the working
// matrix stay genuine minors of the input (Bareiss), so divisions are exact.
std::size_t bareiss(PolyMatrix w, bool want_det, Polynomial* det_out) {
    const std::size_t rows = w.rows(), cols = w.cols();
    const RingPtr& R = w.ring();
    Polynomial prev = Polynomial::constant(R, 1);
    bool negate = false;
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        check_deadline();
        // Deterministic pivot: fewest terms, ties toward the smallest (i, j).
        std::size_t pi = rows, pj = cols;
        std::size_t best_terms = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const Polynomial& e = w.at(i, j);
                if (e.is_zero())
                    continue;
                if (pi == rows || e.term_count() < best_terms) {
                    pi = i, pj = j;
                    best_terms = e.term_count();
                }
            }
        if (pi == rows)
            break;  // all remaining entries vanish
        if (pi != k) {
            negate = !negate;
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(w.at(k, j), w.at(pi, j));
        }
        if (pj != k) {
            negate = !negate;
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(w.at(i, k), w.at(i, pj));
        }
        for (std::size_t i = k + 1; i < rows; ++i)
            for (std::size_t j = k + 1; j < cols; ++j) {
                Polynomial num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                auto q = try_divide_exact(num, prev);
                if (!q)
                    throw InternalError("Bareiss division was not exact");
                w.at(i, j) = std::move(*q);
            }
        for (std::size_t i = k + 1; i < rows; ++i)
            w.at(i, k) = Polynomial(R);
        prev = w.at(k, k);
    }
    if (want_det && det_out) {
        if (k < rows) {
            *det_out = Polynomial(R);  // singular
        } else {
            *det_out = negate ? -prev : prev;
        }
    }
    return k;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return;
    while (true) {
        visit(idx);
        std::size_t pos = k;
        while (pos-- > 0) {
            if (idx[pos] + 1 <= n - (k - pos)) {
                ++idx[pos];
                for (std::size_t q = pos + 1; q < k; ++q)
                    idx[q] = idx[q - 1] + 1;
                break;
            }
            if (pos == 0)
                return;
        }
    }
}

}  // namespace

Polynomial determinant(const PolyMatrix& a) {
    if (a.rows() != a.cols())
        throw InternalError("determinant of a non-square matrix");
    if (a.rows() == 0)
        return Polynomial::constant(a.ring(), 1);
    if (a.rows() <= 3)
        return det_by_cofactors(a);
    Polynomial det(a.ring());
    bareiss(a, true, &det);
    return det;
}

Ideal minors_ideal(const PolyMatrix& m, std::size_t k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw InputError("minor size out of range");
    std::vector<Polynomial> gens;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
        combinations(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
            Polynomial d = determinant(m.submatrix(ri, ci));
            if (!d.is_zero())
                gens.push_back(std::move(d));
        });
    });
    return Ideal(m.ring(), std::move(gens));
}

std::size_t matrix_rank(const PolyMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    return bareiss(a, false, nullptr);
}

GradeProfile grade_profile(const PolyMatrix& m, unsigned jobs) {
    if (m.rows() > m.cols())
        throw InputError("grade_profile expects rows <= cols");
    GradeProfile profile;
    profile.entries.resize(m.rows());
    parallel_for(m.rows(), jobs, [&](std::size_t idx) {
        profile.entries[idx] = {idx + 1, grade(minors_ideal(m, idx + 1))};
    });
    return profile;
}

std::vector<Polynomial> linear_forms(const PolyMatrix& m, const RingPtr& S) {
    if (S->form_count() != m.cols())
        throw InputError("the presentation ring must have one T per matrix column");
    std::vector<Polynomial> forms;
    forms.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial f(S);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero())
                continue;
            f = f + map_to_ring(m.at(i, j), S) * Polynomial::variable(S, S->forms_begin() + j);
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

Ideal linear_forms_ideal(const PolyMatrix& m, const RingPtr& S) {
    return Ideal(S, linear_forms(m, S));
}

std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& m) {
    if (m.cols() != m.rows() + 1)
        throw InputError("signed maximal minors need an m x (m+1) matrix");
    std::vector<Polynomial> g;
    g.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Polynomial d = determinant(m.delete_column(j));
        g.push_back(j % 2 == 0 ? std::move(d) : -d);
    }
    return g;
}

namespace {

void require_unit_scalar(const Polynomial& c) {
    if (c.is_zero() || !c.is_constant())
        throw InputError("scaling requires a nonzero field constant");
}

void require_base_coeff(const Polynomial& c) {
    if (!c.ring())
        throw InputError("missing coefficient");
}

}  // namespace

ElementaryOp ElementaryOp::row_swap(std::size_t i, std::size_t k) {
    if (i == k)
        throw InputError("swap needs two distinct rows");
    return {Kind::RowSwap, i, k, Polynomial()};
}

ElementaryOp ElementaryOp::row_scale(std::size_t i, Polynomial c) {
    require_unit_scalar(c);
    return {Kind::RowScale, i, i, std::move(c)};
}

ElementaryOp ElementaryOp::row_add(std::size_t i, std::size_t k, Polynomial c) {
    if (i == k)
        throw InputError("row addition needs two distinct rows");
    require_base_coeff(c);
    return {Kind::RowAdd, i, k, std::move(c)};
}

ElementaryOp ElementaryOp::col_swap(std::size_t j, std::size_t l) {
    if (j == l)
        throw InputError("swap needs two distinct columns");
    return {Kind::ColSwap, j, l, Polynomial()};
}

ElementaryOp ElementaryOp::col_scale(std::size_t j, Polynomial c) {
    require_unit_scalar(c);
    return {Kind::ColScale, j, j, std::move(c)};
}

ElementaryOp ElementaryOp::col_add(std::size_t j, std::size_t l, Polynomial c) {
    if (j == l)
        throw InputError("column addition needs two distinct columns");
    require_base_coeff(c);
    return {Kind::ColAdd, j, l, std::move(c)};
}

PolyMatrix apply_elementary_op(const PolyMatrix& m, const ElementaryOp& op) {
    PolyMatrix out = m;
    switch (op.kind) {
    case ElementaryOp::Kind::RowSwap:
        if (op.a >= m.rows() || op.b >= m.rows())
            throw InputError("row index out of range");
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(out.at(op.a, j), out.at(op.b, j));
        return out;
    case ElementaryOp::Kind::RowScale:
        if (op.a >= m.rows())
            throw InputError("row index out of range");
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(op.a, j) = op.coeff * out.at(op.a, j);
        return out;
    case ElementaryOp::Kind::RowAdd:
        if (op.a >= m.rows() || op.b >= m.rows())
            throw InputError("row index out of range");
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(op.a, j) = out.at(op.a, j) + op.coeff * m.at(op.b, j);
        return out;
    case ElementaryOp::Kind::ColSwap:
        if (op.a >= m.cols() || op.b >= m.cols())
            throw InputError("column index out of range");
        for (std::size_t i = 0; i < m.rows(); ++i)
            std::swap(out.at(i, op.a), out.at(i, op.b));
        return out;
    case ElementaryOp::Kind::ColScale:
        if (op.a >= m.cols())
            throw InputError("column index out of range");
        for (std::size_t i = 0; i < m.rows(); ++i)
            out.at(i, op.a) = op.coeff * out.at(i, op.a);
        return out;
    case ElementaryOp::Kind::ColAdd:
        if (op.a >= m.cols() || op.b >= m.cols())
            throw InputError("column index out of range");
        for (std::size_t i = 0; i < m.rows(); ++i)
            out.at(i, op.a) = out.at(i, op.a) + op.coeff * m.at(i, op.b);
        return out;
    }
    throw InternalError("unknown elementary operation");
}

FormSubstitution FormSubstitution::identity(RingPtr S) {
    FormSubstitution phi;
    phi.S = std::move(S);
    for (std::size_t j = 0; j < phi.S->form_count(); ++j)
        phi.images.push_back(Polynomial::variable(phi.S, phi.S->forms_begin() + j));
    return phi;
}

Polynomial FormSubstitution::apply(const Polynomial& f) const {
    // Extend the T-images by the identity on every other ring variable.
    std::vector<Polynomial> all;
    all.reserve(S->var_count());
    for (std::size_t v = 0; v < S->var_count(); ++v) {
        if (v >= S->forms_begin())
            all.push_back(images[v - S->forms_begin()]);
        else
            all.push_back(Polynomial::variable(S, v));
    }
    return substitute(f, S, all);
}

Ideal FormSubstitution::apply(const Ideal& I) const {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens())
        gens.push_back(apply(g));
    return Ideal(S, std::move(gens));
}

FormSubstitution FormSubstitution::after(const FormSubstitution& earlier) const {
    FormSubstitution out;
    out.S = S;
    out.images.reserve(earlier.images.size());
    for (const auto& img : earlier.images)
        out.images.push_back(apply(img));
    return out;
}

FormSubstitution form_substitution(const ElementaryOp& op, const RingPtr& S) {
    FormSubstitution phi = FormSubstitution::identity(S);
    const std::size_t t0 = S->forms_begin();
    switch (op.kind) {
    case ElementaryOp::Kind::RowSwap:
    case ElementaryOp::Kind::RowScale:
    case ElementaryOp::Kind::RowAdd:
        return phi;  // row operations only remix the forms, not the T's
    case ElementaryOp::Kind::ColSwap:
        std::swap(phi.images[op.a], phi.images[op.b]);
        return phi;
    case ElementaryOp::Kind::ColScale:
        phi.images[op.a] = map_to_ring(op.coeff, S) * Polynomial::variable(S, t0 + op.a);
        return phi;
    case ElementaryOp::Kind::ColAdd:
        // Column j gains c * column l, so the forms gain c * x_{il} T_j;
        // contragradiently T_l picks up c * T_j.
        phi.images[op.b] =
            Polynomial::variable(S, t0 + op.b) +
            map_to_ring(op.coeff, S) * Polynomial::variable(S, t0 + op.a);
        return phi;
    }
    throw InternalError("unknown elementary operation");
}

TransformedForms transform_linear_forms(const PolyMatrix& m, const ElementaryOp& op,
                                        const RingPtr& S) {
    PolyMatrix n = apply_elementary_op(m, op);
    return {n, linear_forms(n, S), form_substitution(op, S)};
}

TransformedForms transform_linear_forms(const PolyMatrix& m,
                                        const std::vector<ElementaryOp>& ops, const RingPtr& S) {
    PolyMatrix n = m;
    FormSubstitution phi = FormSubstitution::identity(S);
    for (const auto& op : ops) {
        n = apply_elementary_op(n, op);
        phi = form_substitution(op, S).after(phi);
    }
    return {n, linear_forms(n, S), phi};
}

}  // namespace rees
