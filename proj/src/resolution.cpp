#include "symdet/resolution.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include <omp.h>

namespace symdet {

RingParams RingParams::make(int n, int t)
{
    if (t < 1 || t >= n)
        throw std::invalid_argument("need 1 <= t < n, got n=" + std::to_string(n) + ", t=" + std::to_string(t));
    return RingParams{n, t};
}

Partition lambda_of(const Partition& alpha, int u, int t)
{
    if (u < 1 || static_cast<int>(alpha.length()) > 2 * u)
        throw std::invalid_argument("alpha " + alpha.to_string() + " needs at most 2u rows, u=" + std::to_string(u));
    std::vector<int> rows;
    for (int j = 1; j <= 2 * u; ++j)
        rows.push_back(alpha.row(static_cast<std::size_t>(j)) + 2 * u + t - 1);
    const Partition below = conjugate(alpha);
    rows.insert(rows.end(), below.parts().begin(), below.parts().end());
    return Partition::make(std::move(rows));
}

std::vector<Partition> enumerate_Q_constructive(int t, int two_m)
{
    std::vector<Partition> out;
    if (two_m <= 0 || two_m % 2 != 0)
        return out;
    const int m = two_m / 2;
    for (int u = 1; 2 * u * u + u * (t - 1) <= m; ++u)
        for (const auto& alpha : partitions_in_box(m - 2 * u * u - u * (t - 1), 2 * u))
            out.push_back(lambda_of(alpha, u, t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_Q_oracle(int t, int two_m, int cap)
{
    if (two_m > cap)
        throw OracleTooLarge("oracle too large: weight " + std::to_string(two_m) + " exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    if (two_m <= 0)
        return out;
    for (const auto& p : partitions_of(two_m)) {
        const int r = diagonal_rank(p);
        if (r % 2 != 0)
            continue;
        const HookNotation h = to_hook_notation(p);
        bool ok = true;
        for (std::size_t j = 0; j < h.rank() && ok; ++j)
            ok = h.arms()[j] == h.legs()[j] + t - 1;
        if (ok)
            out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ResolutionTerm> enumerate_terms(const RingParams& params, int i, const RankFn& rank)
{
    std::vector<ResolutionTerm> out;
    const int n = params.n;
    const int t = params.t;
    for (int u = 1; 2 * u * u - u <= i && 2 * u + t - 1 <= n; ++u) {
        const int max_part = n - 2 * u - t + 1; // keeps λ_1 <= n
        for (const auto& alpha : partitions_in_box(i - (2 * u * u - u), 2 * u, max_part)) {
            Partition lambda = lambda_of(alpha, u, t);
            BigInt r = rank(lambda, n);
            if (r == 0)
                continue;
            out.push_back(ResolutionTerm{std::move(lambda), alpha, u, i, i + u * t, std::move(r)});
        }
    }
    std::sort(out.begin(), out.end(), [](const ResolutionTerm& a, const ResolutionTerm& b) {
        return std::tie(a.degree, a.lambda) < std::tie(b.degree, b.lambda);
    });
    return out;
}

BettiTable::BettiTable(RingParams params, int projdim, std::vector<BettiEntry> entries)
    : params_(params)
    , projdim_(projdim)
    , entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
        return std::tie(a.hom_index, a.degree) < std::tie(b.hom_index, b.degree);
    });
}

BigInt BettiTable::beta(int i) const
{
    BigInt s = 0;
    for (const auto& e : entries_)
        if (e.hom_index == i)
            s += e.multiplicity;
    return s;
}

std::vector<const BettiEntry*> BettiTable::entries_at(int i) const
{
    std::vector<const BettiEntry*> out;
    for (const auto& e : entries_)
        if (e.hom_index == i)
            out.push_back(&e);
    return out;
}

int BettiTable::max_index() const
{
    int top = -1;
    for (const auto& e : entries_)
        if (e.multiplicity != 0)
            top = std::max(top, e.hom_index);
    return top;
}

BigInt BettiTable::alternating_sum() const
{
    BigInt s = 0;
    for (const auto& e : entries_) {
        if (e.hom_index % 2 == 0)
            s += e.multiplicity;
        else
            s -= e.multiplicity;
    }
    return s;
}

bool operator==(const BettiTable& a, const BettiTable& b)
{
    if (!(a.params_ == b.params_) || a.projdim_ != b.projdim_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        const auto& x = a.entries_[k];
        const auto& y = b.entries_[k];
        if (x.hom_index != y.hom_index || x.degree != y.degree || x.multiplicity != y.multiplicity || x.partitions != y.partitions)
            return false;
    }
    return true;
}

namespace {

/* Largest homological index any λ(α, u) with λ_1 <= n can reach: α fills
 * its whole 2u x (n - t + 1 - 2u) box. */
int index_bound(const RingParams& p)
{
    int bound = 0;
    for (int u = 1; 2 * u + p.t - 1 <= p.n; ++u)
        bound = std::max(bound, 2 * u * u - u + 2 * u * (p.n - p.t + 1 - 2 * u));
    return bound;
}

BettiTable assemble(const RingParams& params, const std::vector<std::vector<ResolutionTerm>>& per_index)
{
    std::vector<BettiEntry> entries;
    entries.push_back(BettiEntry{0, 0, 1, {Partition{}}});
    for (const auto& terms : per_index) {
        std::map<int, BettiEntry> by_degree;
        for (const auto& term : terms) {
            auto& e = by_degree[term.degree];
            e.hom_index = term.hom_index;
            e.degree = term.degree;
            e.multiplicity += term.rank;
            e.partitions.push_back(term.lambda);
        }
        for (auto& [deg, e] : by_degree) {
            std::sort(e.partitions.begin(), e.partitions.end());
            entries.push_back(std::move(e));
        }
    }
    return BettiTable(params, projective_dimension(params), std::move(entries));
}

} // namespace

BettiTable betti_table_serial(const RingParams& params, const RankFn& rank)
{
    const int bound = index_bound(params);
    std::vector<std::vector<ResolutionTerm>> per_index(static_cast<std::size_t>(bound));
    for (int i = 1; i <= bound; ++i)
        per_index[static_cast<std::size_t>(i - 1)] = enumerate_terms(params, i, rank);
    return assemble(params, per_index);
}

BettiTable betti_table(const RingParams& params, const RankFn& rank)
{
    const int bound = index_bound(params);
    std::vector<std::vector<ResolutionTerm>> per_index(static_cast<std::size_t>(bound));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(bound));

#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i <= bound; ++i) {
        try {
            per_index[static_cast<std::size_t>(i - 1)] = enumerate_terms(params, i, rank);
        } catch (...) {
            errors[static_cast<std::size_t>(i - 1)] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return assemble(params, per_index);
}

int projective_dimension(const RingParams& params)
{
    const int n = params.n;
    const int t = params.t;
    return n * (n + 1) / 2 - n * t + t * (t - 1) / 2;
}

BigInt binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::pair<BigInt, BigInt> last_two_closed_form(const RingParams& params)
{
    const int n = params.n;
    const int t = params.t;
    if ((n - t) % 2 != 0)
        throw std::domain_error("closed forms need n - t even; n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                                " is the Gorenstein case (last term has rank 1)");
    BigInt prev = n * binomial(n, t + 1) - binomial(n, t + 2);
    return {binomial(n, t), prev};
}

int a_invariant_symmetric(const BettiTable& table)
{
    const auto last = table.entries_at(table.projdim());
    if (last.empty())
        throw std::logic_error("no resolution term at the projective dimension");
    int top = last.front()->degree;
    for (const auto* e : last)
        top = std::max(top, e->degree);
    return top - table.params().num_variables();
}

int a_invariant_symmetric(const RingParams& params)
{
    return a_invariant_symmetric(betti_table(params));
}

bool is_level(const BettiTable& table)
{
    return table.entries_at(table.projdim()).size() == 1;
}

bool is_level(const RingParams& params)
{
    return is_level(betti_table(params));
}

} // namespace symdet
