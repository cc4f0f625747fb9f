#ifndef SYMDET_RESOLUTION_HPP
#define SYMDET_RESOLUTION_HPP

#include <utility>
#include <vector>

#include "symdet/partition.hpp"
#include "symdet/schur_rank.hpp"

namespace symdet {

/* Ring S/I_{t+1}(X) for X a generic symmetric n x n matrix, 0 < t < n.
 * S has n(n+1)/2 variables. */
struct RingParams {
    int n = 0;
    int t = 0;

    /// Throws std::invalid_argument unless 1 <= t < n.
    static RingParams make(int n, int t);

    int num_variables() const noexcept { return n * (n + 1) / 2; }
    int dimension() const noexcept { return n * t - t * (t - 1) / 2; }

    friend bool operator==(const RingParams&, const RingParams&) = default;
};

/* One Schur-module summand L_λ E ⊗ S of F_i. λ = λ(α, u) has diagonal
 * rank 2u and hook notation with arms exceeding legs by t - 1. */
struct ResolutionTerm {
    Partition lambda;
    Partition alpha;
    int u = 0;
    int hom_index = 0;
    int degree = 0; // |λ| / 2
    BigInt rank;
};

/* The partition (α_1+2u+t-1, ..., α_{2u}+2u+t-1, α'_1, ..., α'_v).
 * α must have at most 2u rows. */
Partition lambda_of(const Partition& alpha, int u, int t);

/* All λ(α, u) with u >= 1 and |λ| = two_m, without any bound on λ_1. */
std::vector<Partition> enumerate_Q_constructive(int t, int two_m);

inline constexpr int default_Q_cap = 24;

/* Brute-force: every partition of weight two_m with even, nonzero diagonal
 * rank whose hook notation has a_j = b_j + t - 1. Throws OracleTooLarge
 * when two_m exceeds `cap`. Sorted ascending. */
std::vector<Partition> enumerate_Q_oracle(int t, int two_m, int cap = default_Q_cap);

/* Summands of F_i, i >= 1, with nonzero rank. Sorted by degree, then λ. */
std::vector<ResolutionTerm> enumerate_terms(const RingParams& params, int i, const RankFn& rank = schur_rank);

struct BettiEntry {
    int hom_index = 0;
    int degree = 0;
    BigInt multiplicity;
    std::vector<Partition> partitions; // ascending
};

class BettiTable {
public:
    BettiTable(RingParams params, int projdim, std::vector<BettiEntry> entries);

    const RingParams& params() const noexcept { return params_; }
    int projdim() const noexcept { return projdim_; }
    /// Sorted by homological index, then degree.
    const std::vector<BettiEntry>& entries() const noexcept { return entries_; }

    /// Total rank of F_i.
    BigInt beta(int i) const;
    std::vector<const BettiEntry*> entries_at(int i) const;
    /// Largest i with a nonzero entry.
    int max_index() const;
    BigInt alternating_sum() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b);

private:
    RingParams params_;
    int projdim_;
    std::vector<BettiEntry> entries_;
};

/// F_i for i = 1..projdim evaluated in parallel (OpenMP), merged deterministically.
BettiTable betti_table(const RingParams& params, const RankFn& rank = schur_rank);

/// Single-threaded reference for betti_table.
BettiTable betti_table_serial(const RingParams& params, const RankFn& rank = schur_rank);

/// n(n+1)/2 - nt + t(t-1)/2
int projective_dimension(const RingParams& params);

/* (C(n,t), n C(n,t+1) - C(n,t+2)): ranks of the last two terms when n - t
 * is even. Throws std::domain_error when n - t is odd (Gorenstein case,
 * where the last term has rank 1). */
std::pair<BigInt, BigInt> last_two_closed_form(const RingParams& params);

/// Top internal degree of F_projdim minus the number of variables.
int a_invariant_symmetric(const RingParams& params);
int a_invariant_symmetric(const BettiTable& table);

/// True iff the last term sits in a single internal degree.
bool is_level(const RingParams& params);
bool is_level(const BettiTable& table);

BigInt binomial(int n, int k);

} // namespace symdet

#endif
