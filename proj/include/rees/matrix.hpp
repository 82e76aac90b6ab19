#pragma once

#include <cstdint>
#include <vector>

#include "rees/grade.hpp"
#include "rees/groebner.hpp"

namespace rees {

// Dense matrix of polynomials.  The shape is unconstrained here — boundary
// maps of complexes come in all sizes — while the stricter requirements on
// *input* matrices (1 <= rows <= cols, entries in the base subring) are
// enforced by make_input_matrix and by the operations that assume them.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Polynomial& at(std::size_t i, std::size_t j) const;
    Polynomial& at(std::size_t i, std::size_t j);

    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;
    PolyMatrix delete_column(std::size_t j) const;
    bool is_zero() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> a_;  // row-major
};

// Checks the standing assumptions on input matrices: nonempty, rows <= cols,
// every entry free of presentation/elimination variables.
PolyMatrix make_input_matrix(RingPtr ring, std::vector<std::vector<Polynomial>> rows);

Polynomial determinant(const PolyMatrix& a);

// Ideal of all k x k minors, generators enumerated with row and column index
// sets ascending lexicographically (zero minors dropped).  Requires
// 1 <= k <= min(rows, cols).
Ideal minors_ideal(const PolyMatrix& m, std::size_t k);

// Largest k with a nonvanishing k-minor, via fraction-free (Bareiss)
// elimination with deterministic pivoting.
std::size_t matrix_rank(const PolyMatrix& a);

// Grade of I_k(M) for k = 1..rows; requires rows <= cols.
struct GradeProfile {
    std::vector<std::pair<std::size_t, GradeValue>> entries;
};
GradeProfile grade_profile(const PolyMatrix& m, unsigned jobs = 1);

// f_i = sum_j M(i,j) * T_j inside S = R[T_1..T_n]; S must carry exactly
// cols presentation variables.
std::vector<Polynomial> linear_forms(const PolyMatrix& m, const RingPtr& S);
Ideal linear_forms_ideal(const PolyMatrix& m, const RingPtr& S);

// g_j = (-1)^(j+1) det(M with column j removed), for n = rows + 1.  The signs
// make the rows of M literal syzygies: M * (g_1..g_n)^T = 0.
std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& m);

// Row/column operations (0-based indices).  Scalings require a nonzero field
// constant (the units of R); additions allow any base-subring coefficient.
struct ElementaryOp {
    enum class Kind { RowSwap, RowScale, RowAdd, ColSwap, ColScale, ColAdd };
    Kind kind;
    std::size_t a = 0;  // the row/column acted on
    std::size_t b = 0;  // the other row/column (swap source or add source)
    Polynomial coeff;   // scale factor or addition multiplier

    static ElementaryOp row_swap(std::size_t i, std::size_t k);
    static ElementaryOp row_scale(std::size_t i, Polynomial c);
    // row i += c * row k
    static ElementaryOp row_add(std::size_t i, std::size_t k, Polynomial c);
    static ElementaryOp col_swap(std::size_t j, std::size_t l);
    static ElementaryOp col_scale(std::size_t j, Polynomial c);
    // col j += c * col l
    static ElementaryOp col_add(std::size_t j, std::size_t l, Polynomial c);
};

PolyMatrix apply_elementary_op(const PolyMatrix& m, const ElementaryOp& op);

// A ring map S -> S fixing R and sending each T_j to a linear form in the T's.
struct FormSubstitution {
    RingPtr S;
    std::vector<Polynomial> images;  // image of T_j, for j = 0..n-1

    static FormSubstitution identity(RingPtr S);
    Polynomial apply(const Polynomial& f) const;
    Ideal apply(const Ideal& I) const;
    // this ∘ earlier (apply `earlier` first).
    FormSubstitution after(const FormSubstitution& earlier) const;
};

// The substitution phi with phi(f-ideal of M) = (f-ideal of the transformed
// matrix): identity for row operations; for column operations the T's move
// contragradiently (swap <-> swap, scale j by c <-> T_j -> c T_j, and
// "col j += c col l" <-> T_l -> T_l + c T_j).
FormSubstitution form_substitution(const ElementaryOp& op, const RingPtr& S);

struct TransformedForms {
    PolyMatrix matrix;
    std::vector<Polynomial> forms;
    FormSubstitution phi;
};
TransformedForms transform_linear_forms(const PolyMatrix& m, const ElementaryOp& op,
                                        const RingPtr& S);
TransformedForms transform_linear_forms(const PolyMatrix& m,
                                        const std::vector<ElementaryOp>& ops, const RingPtr& S);

}  // namespace rees
