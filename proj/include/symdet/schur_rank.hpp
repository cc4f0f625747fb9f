#ifndef SYMDET_SCHUR_RANK_HPP
#define SYMDET_SCHUR_RANK_HPP

#include <functional>
#include <stdexcept>

#include <gmpxx.h>

#include "symdet/partition.hpp"

namespace symdet {

using BigInt = mpz_class;

/* Rank of the Schur module L_λ E built from exterior powers, dim E = n.
 * L_(k) E is the k-th exterior power, so the rank is the number of
 * semistandard tableaux of the conjugate shape λ' with entries in 1..n,
 * i.e. the hook-content product over λ':
 *
 *     prod (n + j - i) / prod hook(i, j)
 *
 * evaluated as one exact quotient. Zero exactly when λ_1 > n.
 */
BigInt schur_rank(const Partition& lambda, int n);

using RankFn = std::function<BigInt(const Partition&, int)>;

class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int default_ssyt_cap = 14;

/* Brute-force count of semistandard fillings of `shape` with entries in
 * 1..n (rows weakly increasing, columns strictly increasing). Reference
 * for schur_rank; throws OracleTooLarge when the shape has more than
 * `cap` boxes. */
BigInt ssyt_count(const Partition& shape, int n, int cap = default_ssyt_cap);

} // namespace symdet

#endif
