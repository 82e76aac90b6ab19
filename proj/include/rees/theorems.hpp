#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rees/grade.hpp"
#include "rees/matrix.hpp"

namespace rees {

// For an m x n matrix M over R, the linear forms f_i = sum_j M[i][j]*T_j in
// S = R[T_1..T_n] present the symmetric algebra of the column space: S(I) is
// S/(f_1..f_m)S when the T_j are sent to the generators of I.  When M has one
// more column than rows and I = I_m(M) is nonzero, the Rees algebra R[It]
// carries a second presentation, and the two coincide exactly when I is of
// linear type.  The checks below verify the equivalences between those
// algebra-level statements and plain grade inequalities on the minor ideals
// of M, reporting each clause separately.

// S = R[T_1..T_n] for M's shape, the common ring of all the ideals below.
RingPtr forms_ring(const PolyMatrix& M);

// (f_1,...,f_m)S, the defining ideal of the symmetric algebra.
Ideal symmetric_ideal(const PolyMatrix& M, const RingPtr& S);

// grade (f_1,...,f_m)S, computed in S.
GradeValue grade_linear_forms(const PolyMatrix& M);

// The kernel of S -> R[It], T_j -> g_j * t, with g the signed maximal minors
// of M: eliminate t from (T_1 - t*g_1, ..., T_n - t*g_n) in S[t].  Requires
// cols = rows + 1 and I_m(M) nonzero; the result lives in S.
Ideal rees_ideal(const PolyMatrix& M, const RingPtr& S);

struct ClauseRecord {
    std::string label;
    std::string expected;
    std::string computed;
    bool pass = false;
};

// Outcome of one equivalence check.  Each side of the equivalence is the
// conjunction of its clauses; since the underlying statements are theorems,
// a VIOLATION verdict certifies a bug in this library, never new mathematics.
struct TheoremReport {
    std::string theorem;  // "1.1" or "1.2"
    std::vector<ClauseRecord> conditions;
    bool side1 = false;
    bool side2 = false;
    std::string verdict;  // EQUIV_BOTH_TRUE | EQUIV_BOTH_FALSE | VIOLATION

    nlohmann::json to_json() const;
};

// Equivalence for an m x n matrix (m <= n):
//   (1) grade I_k(M) >= m - k + 1 for k = 1..m
//   (2) grade (f_1,...,f_m)S = m.
// Grade computations for distinct k run on `jobs` threads.
TheoremReport check_theorem1(const PolyMatrix& M, unsigned jobs = 1);

// Equivalence for an m x (m+1) matrix:
//   (1) grade I_k(M) >= m - k + 2 for k = 1..m
//   (2) the Rees kernel equals (f_1,...,f_m)S, and grade (f_1,...,f_m)S = m.
// The kernel comparison subsumes both "S(I) -> R(I) is an isomorphism" and
// "S(I) = S/(f)S": elimination computes Ker(S -> R[It]) outright and side
// (2) asks that it be exactly the linear presentation.  When I_m(M) = 0 the
// kernel degenerates to (T_1,...,T_n) because every T_j maps to zero.
TheoremReport check_theorem2(const PolyMatrix& M, unsigned jobs = 1);

}  // namespace rees
