// Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <optional>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "symdet/classify.hpp"
#include "symdet/resolution.hpp"
#include "symdet/schur_rank.hpp"

using namespace symdet;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string cell(int n, int t)
{
    return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
}

BigInt choose(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Outcome closed_forms()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        for (int t = 1; t < n; ++t) {
            if ((n - t) % 2 != 0)
                continue;
            const BettiTable table = betti_table(RingParams::make(n, t));
            const int ell = table.projdim();
            o.require(table.beta(ell) == choose(n, t), "beta_l at " + cell(n, t));
            o.require(table.beta(ell - 1) == n * choose(n, t + 1) - choose(n, t + 2), "beta_l-1 at " + cell(n, t));
        }
    }
    return o;
}

Outcome gorenstein_detection()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        for (int t = 1; t < n; ++t) {
            const BettiTable table = betti_table(RingParams::make(n, t));
            o.require((table.beta(table.projdim()) == 1) == ((n - t) % 2 != 0), "beta_l = 1 mismatch at " + cell(n, t));
        }
    }
    return o;
}

Outcome worked_table(int n, int t, const std::vector<BigInt>& ranks, const std::vector<int>& degs, std::optional<int> a)
{
    Outcome o;
    const BettiTable table = betti_table(RingParams::make(n, t));
    std::vector<BigInt> got_ranks;
    std::vector<int> got_degs;
    for (const auto& e : table.entries()) {
        got_ranks.push_back(e.multiplicity);
        got_degs.push_back(e.degree);
    }
    o.require(got_ranks == ranks, "ranks differ at " + cell(n, t));
    o.require(got_degs == degs, "degrees differ at " + cell(n, t));
    if (a)
        o.require(a_invariant_symmetric(table) == *a, "a-invariant differs at " + cell(n, t));
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    for (int w = 0; w <= 10; ++w)
        for (const auto& p : partitions_of(w))
            for (int n = 1; n <= 5; ++n)
                o.require(schur_rank(p, n) == ssyt_count(conjugate(p), n), "lambda=" + p.to_string() + ", n=" + std::to_string(n));
    return o;
}

Outcome q_sets()
{
    Outcome o;
    for (int t = 1; t <= 3; ++t)
        for (int two_m = 2; two_m <= 20; two_m += 2)
            o.require(enumerate_Q_constructive(t, two_m) == enumerate_Q_oracle(t, two_m),
                      "t=" + std::to_string(t) + ", 2m=" + std::to_string(two_m));
    return o;
}

Outcome telescope()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n)
        for (int t = 1; t < n; ++t)
            o.require(betti_table(RingParams::make(n, t)).alternating_sum() == 0, "nonzero alternating sum at " + cell(n, t));
    return o;
}

Outcome theorem_reproduction()
{
    Outcome o;
    struct Hand {
        int n, t, lhs, rhs;
    };
    for (const Hand h : {Hand{3, 1, 8, 8}, Hand{4, 2, 20, 15}, Hand{5, 1, 44, 40}}) {
        const ObstructionReport r = ag_obstruction(RingParams::make(h.n, h.t));
        o.require(r.reduced_lhs == h.lhs && r.reduced_rhs == h.rhs, "hand-checked values at " + cell(h.n, h.t));
    }
    for (int n = 2; n <= 10; ++n) {
        for (int t = 1; t < n; ++t) {
            if ((n - t) % 2 != 0)
                continue;
            const RingParams params = RingParams::make(n, t);
            const BettiTable table = betti_table(params);
            const ObstructionReport r = ag_obstruction(table);
            o.require(r.passes == (n == 3 && t == 1), "obstruction outcome at " + cell(n, t));
            const Classification c = classify_symmetric(params);
            const bool route = gtt_criterion(a_invariant_symmetric(table), params.dimension()) && is_level(table);
            o.require(c.almost_gorenstein == route, "a(R) = 1 - dim R route disagrees at " + cell(n, t));
        }
    }
    return o;
}

Outcome family_corollaries()
{
    Outcome o;
    for (int n = 1; n <= 10; ++n)
        for (int t = 1; t <= n; ++t)
            o.require(classify_hankel(n, t).almost_gorenstein == (n == t || t == 2), "hankel " + cell(n, t));
    for (int n = 3; n <= 15; n += 2) {
        const Classification c = classify_pfaffian_square(n);
        o.require(c.almost_gorenstein == (n == 3), "pfaffian-square AG at n=" + std::to_string(n));
        const std::vector<BigInt> expect{1, choose(n + 1, 2), BigInt(n * n - 1), choose(n, 2)};
        BigInt alt = 0;
        for (std::size_t k = 0; k < c.betti.size(); ++k) {
            o.require(k < expect.size() && c.betti[k].rank == expect[k], "pfaffian-square betti at n=" + std::to_string(n));
            alt += k % 2 == 0 ? c.betti[k].rank : BigInt(-c.betti[k].rank);
        }
        o.require(c.betti.size() == 4 && alt == 0, "pfaffian-square alternating sum at n=" + std::to_string(n));
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* id;
        const char* title;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "last two Betti numbers match the closed forms, n - t even, n <= 8", 10, closed_forms},
        {"AC2", "beta_l = 1 iff n - t odd, n <= 8", 10, gorenstein_detection},
        {"AC3a", "betti(3,1) = (1,6,8,3) in degrees (0,2,3,4), a = -2", 1,
         [] { return worked_table(3, 1, {1, 6, 8, 3}, {0, 2, 3, 4}, -2); }},
        {"AC3b", "betti(5,3) = (1,15,24,10) in degrees (0,4,5,6)", 1,
         [] { return worked_table(5, 3, {1, 15, 24, 10}, {0, 4, 5, 6}, std::nullopt); }},
        {"AC4", "schur_rank = tableau count on the conjugate, weight <= 10, n <= 5", 60, oracle_equivalence},
        {"AC5", "constructive Q-set = hook-condition filter, t <= 3, 2m <= 20", 60, q_sets},
        {"AC6", "alternating Betti sum is 0, n <= 8", 10, telescope},
        {"AC7", "obstruction passes exactly at (3,1) for n <= 10; a-invariant route agrees", 30, theorem_reproduction},
        {"AC8", "Hankel and Pfaffian-square family classifications", 5, family_corollaries},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_s) {
            o.ok = false;
            o.detail = "exceeded time budget of " + std::to_string(c.budget_s) + " s";
        }
        failures += !o.ok;
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << secs << " s / " << c.budget_s << " s]";
        if (!o.ok)
            std::cout << "  -- " << o.detail;
        std::cout << '\n';
    }
    std::cout << (failures ? "acceptance: FAILED\n" : "acceptance: all criteria passed\n");
    return failures ? 1 : 0;
}
