#ifndef SYMDET_CLASSIFY_HPP
#define SYMDET_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symdet/resolution.hpp"

namespace symdet {

enum class Family { symmetric, hankel, pfaffian_square };

std::string_view to_string(Family f);
/// Accepts "symmetric", "hankel", "pfaffian-square".
Family parse_family(std::string_view text);

/* Scalar shadow of the almost-Gorenstein necessity argument for a
 * non-Gorenstein symmetric determinantal ring. With μ = n(n+1)/2 the
 * embedding dimension, β_ℓ, β_{ℓ-1} the last two Betti numbers and d the
 * dimension:
 *
 *     lower = μ β_ℓ - β_{ℓ-1}          (a lower bound on μ(m K_R))
 *     upper = μ + (d - 1)(β_ℓ - 1)     (what almost Gorenstein would force)
 *
 * and equivalently (β_ℓ - 1)(μ - d + 1) <= β_{ℓ-1}. Failing the check rules
 * out the almost Gorenstein property; passing it proves nothing. */
struct ObstructionReport {
    int mu_m = 0;
    BigInt beta_last;
    BigInt beta_prev;
    BigInt lower_bound;
    BigInt upper_bound;
    BigInt reduced_lhs; // (β_ℓ - 1)(μ - d + 1)
    BigInt reduced_rhs; // β_{ℓ-1}
    bool passes = false;
};

struct ShiftedBetti {
    int hom_index = 0;
    int degree = 0;
    BigInt rank;
};

struct Classification {
    Family family = Family::symmetric;
    int n = 0;
    std::optional<int> t;
    int dim = 0;
    std::optional<int> projdim;
    int a_invariant = 0;
    std::optional<int> top_shift;   // largest twist in the last resolution term
    std::optional<BigInt> cm_type;  // empty: not computed
    bool gorenstein = false;
    bool almost_gorenstein = false;
    std::optional<ObstructionReport> obstruction;
    std::vector<ShiftedBetti> betti; // filled for the closed-form Pfaffian family
    std::string notes;
};

/// n - t odd.
bool gorenstein_symmetric(const RingParams& params);

/* Almost Gorenstein iff n - t is odd or (n, t) = (3, 1). Invariants are
 * read off the computed Betti table. The same answer holds for the local
 * ring at the irrelevant ideal, and for the ring of O(t)-invariants of an
 * n x t generic matrix in characteristic 0 (which is this ring). */
Classification classify_symmetric(const RingParams& params);

/// Throws std::domain_error when n - t is odd.
ObstructionReport ag_obstruction(const RingParams& params);
ObstructionReport ag_obstruction(const BettiTable& table);

/* For a non-Gorenstein level standard graded Cohen-Macaulay domain:
 * almost Gorenstein iff a(R) = 1 - dim R. */
bool gtt_criterion(int a_invariant, int dim);

/// Maximal minors of a t x n Hankel matrix, 1 <= t <= n.
Classification classify_hankel(int n, int t);

/// S/I^2 for I the submaximal Pfaffians of a generic skew n x n matrix, n odd >= 3.
Classification classify_pfaffian_square(int n);

} // namespace symdet

#endif
