#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rees/grade.hpp"
#include "rees/matrix.hpp"

namespace rees {

// The Koszul complex of the linear forms f_i = sum_j M[i][j]*T_j is graded by
// total degree in the T-variables.  Its degree-ell strand is a finite complex
// of free modules over the base ring,
//
//     0 -> [K_m]_ell -> ... -> [K_1]_ell -> [K_0]_ell -> 0,
//
// where [K_r]_ell is free on symbols e_{i_1}^...^e_{i_r} * T^alpha with
// i_1 < ... < i_r and deg(T^alpha) = ell - r.  Everything below works with
// explicit matrices of the boundary maps in a fixed basis order so results
// are reproducible bit for bit.

// One basis symbol of [K_r]_ell: a strictly increasing set of 0-based row
// indices plus the exponent vector of a T-monomial of degree ell - r.
struct WedgeBasisElement {
    std::vector<std::size_t> indices;
    std::vector<std::uint32_t> t_exponents;

    friend bool operator==(const WedgeBasisElement&, const WedgeBasisElement&) = default;
};

// Human-readable label, e.g. "e(1,3)*T1^2*T2" (indices 1-based); "1" for the
// empty wedge with the trivial monomial.
std::string basis_label(const WedgeBasisElement& b);

// The full ordered basis of [K_r]_ell for an m-row matrix with n forms:
// index sets in lexicographic order, and for each index set the degree
// (ell - r) T-monomials in grevlex-descending order (T1 > T2 > ... > Tn).
// Empty when ell < r.
std::vector<WedgeBasisElement> strand_basis(std::size_t m, std::size_t n, std::size_t r,
                                            std::int64_t ell);

// rank [K_r]_ell = C(m,r) * C(ell-r+n-1, n-1), or 0 when ell < r.
std::int64_t strand_rank(std::size_t m, std::size_t n, std::size_t r, std::int64_t ell);

// Ranks for r = 0..m at a fixed degree ell.
std::vector<std::int64_t> strand_ranks(std::size_t m, std::size_t n, std::int64_t ell);

// The matrix of the boundary [d_r]_ell : [K_r]_ell -> [K_{r-1}]_ell over the
// matrix's own ring.  The column of (e_I, T^alpha) places (-1)^p * M[i_p][j]
// on the row (e_{I minus i_p}, T_j * T^alpha), for each p and j.  Rows and
// columns follow strand_basis order.  Returns a 0x0 matrix when ell < r.
// Throws InputError when r is outside [1, rows] or ell < 0.
PolyMatrix strand_matrix(const PolyMatrix& M, std::size_t r, std::int64_t ell);

// Identity at the top of the top strand: the entries of [d_m]_m generate the
// same ideal as the entries of M, i.e. I_1([d_m]_m) = I_1(M).
bool check_top_strand_minors(const PolyMatrix& M);

// Identity at the bottom: [d_1]_1 is the transpose of M, so its maximal
// minors generate I_m(M), i.e. I_m([d_1]_1) = I_m(M).
bool check_bottom_strand_minors(const PolyMatrix& M);

// A finite complex of free modules F_s -> ... -> F_1 -> F_0 given by the
// matrices A_k : F_k -> F_{k-1}, optionally augmented by a row matrix
// eps : F_0 -> R^1.  Construction verifies A_k * A_{k+1} = 0, eps * A_1 = 0,
// and that every matrix matches the recorded ranks; failures throw
// InputError, so a constructed value really is a complex.
class GradedComplex {
  public:
    GradedComplex(RingPtr ring, std::vector<std::int64_t> ranks, std::vector<PolyMatrix> maps,
                  std::optional<PolyMatrix> augmentation = std::nullopt);

    const RingPtr& ring() const { return ring_; }
    // Number of maps A_1..A_s (the augmentation not included).
    std::size_t length() const { return maps_.size(); }
    // ranks()[k] is the rank of F_k, k = 0..s.
    const std::vector<std::int64_t>& ranks() const { return ranks_; }
    // A_k for k in [1, length()].
    const PolyMatrix& map_at(std::size_t k) const;
    const std::optional<PolyMatrix>& augmentation() const { return augmentation_; }

  private:
    RingPtr ring_;
    std::vector<std::int64_t> ranks_;
    std::vector<PolyMatrix> maps_;
    std::optional<PolyMatrix> augmentation_;
};

// The degree-ell strand of the Koszul complex of M's linear forms, as a
// GradedComplex over M's ring (no augmentation).  Requires ell >= 0.
GradedComplex strand_complex(const PolyMatrix& M, std::int64_t ell);

// For an m x (m+1) matrix: the degree-r_deg strand augmented by the map
// sending the basis monomial T^alpha of [K_0]_r_deg to g^alpha, the
// corresponding product of signed maximal minors.  When the certificate
// below passes, this is a free resolution of I_m(M)^r_deg, whose image
// ideal is generated by the augmentation row.  Requires r_deg >= 1 and
// cols = rows + 1.
GradedComplex power_resolution(const PolyMatrix& M, std::int64_t r_deg);

// How the grade condition at one position was settled.
enum class GradeMethod {
    kMinors,      // grade of the minors ideal computed outright
    kUnitIdeal,   // expected rank 0: I_0 = (1) has infinite grade
    kRankNonzero, // position 1 with rank verified: some r_1-minor is a nonzero
                  // polynomial, and a nonzero ideal of a polynomial ring has
                  // grade >= 1, which is all position 1 requires
    kSkipped,     // rank check already failed; grade not computed
};

struct PositionRecord {
    std::size_t position = 0;        // k, counted from the augmented end
    std::int64_t rank_expected = 0;  // r_k = rank F_k - r_{k+1}
    std::int64_t rank_computed = 0;
    bool rank_ok = false;
    GradeMethod grade_method = GradeMethod::kSkipped;
    std::optional<GradeValue> grade_computed;  // present for kMinors/kUnitIdeal
    bool grade_ok = false;
    bool pass = false;
};

struct AcyclicityReport {
    bool pass = false;
    std::vector<PositionRecord> positions;  // ascending position order

    nlohmann::json to_json() const;
};

// Exactness certificate for the complex (including the augmentation, when
// present, as the innermost map at position 1): with expected ranks r_k
// accumulated from the top via r_k = rank F_k - r_{k+1}, the complex is
// acyclic if and only if at every position rank A_k = r_k and
// grade I_{r_k}(A_k) >= k.  Positions are independent and are evaluated on
// `jobs` threads.
AcyclicityReport certify_acyclic(const GradedComplex& complex, unsigned jobs = 1);

// Serialized strand report: ranks plus each boundary matrix with its row and
// column basis labels and polynomial-string entries.
nlohmann::json strand_report(const PolyMatrix& M, std::int64_t ell);

}  // namespace rees
