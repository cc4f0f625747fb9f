#include "symdet/classify.hpp"

#include <stdexcept>
#include <string>

namespace symdet {

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::symmetric:
        return "symmetric";
    case Family::hankel:
        return "hankel";
    case Family::pfaffian_square:
        return "pfaffian-square";
    }
    return "unknown";
}

Family parse_family(std::string_view text)
{
    if (text == "symmetric")
        return Family::symmetric;
    if (text == "hankel")
        return Family::hankel;
    if (text == "pfaffian-square")
        return Family::pfaffian_square;
    throw std::invalid_argument("unknown family \"" + std::string(text) + "\" (expected symmetric, hankel or pfaffian-square)");
}

bool gorenstein_symmetric(const RingParams& params)
{
    return (params.n - params.t) % 2 != 0;
}

bool gtt_criterion(int a_invariant, int dim)
{
    return a_invariant == 1 - dim;
}

ObstructionReport ag_obstruction(const BettiTable& table)
{
    const RingParams& p = table.params();
    if (gorenstein_symmetric(p))
        throw std::domain_error("obstruction is vacuous for Gorenstein rings (n - t odd); n=" + std::to_string(p.n) +
                                ", t=" + std::to_string(p.t));
    const int ell = table.projdim();
    ObstructionReport r;
    r.mu_m = p.num_variables();
    r.beta_last = table.beta(ell);
    r.beta_prev = table.beta(ell - 1);
    const int d = p.dimension();
    r.lower_bound = r.mu_m * r.beta_last - r.beta_prev;
    r.upper_bound = r.mu_m + (d - 1) * (r.beta_last - 1);
    r.reduced_lhs = (r.beta_last - 1) * (r.mu_m - d + 1);
    r.reduced_rhs = r.beta_prev;
    r.passes = r.lower_bound <= r.upper_bound;
    return r;
}

ObstructionReport ag_obstruction(const RingParams& params)
{
    if (gorenstein_symmetric(params))
        throw std::domain_error("obstruction is vacuous for Gorenstein rings (n - t odd); n=" + std::to_string(params.n) +
                                ", t=" + std::to_string(params.t));
    return ag_obstruction(betti_table(params));
}

Classification classify_symmetric(const RingParams& params)
{
    const BettiTable table = betti_table(params);
    const int ell = table.projdim();

    Classification c;
    c.family = Family::symmetric;
    c.n = params.n;
    c.t = params.t;
    c.dim = params.dimension();
    c.projdim = ell;
    c.a_invariant = a_invariant_symmetric(table);
    c.top_shift = c.a_invariant + params.num_variables();
    c.cm_type = table.beta(ell);
    c.gorenstein = gorenstein_symmetric(params);
    c.almost_gorenstein = c.gorenstein || (params.n == 3 && params.t == 1);
    if (!c.gorenstein)
        c.obstruction = ag_obstruction(table);
    c.notes = "Betti numbers over a field of characteristic 0. "
              "The graded ring and its localization at the irrelevant ideal are almost Gorenstein together. "
              "In characteristic 0 this ring is the O(t)-invariant ring of an n x t generic matrix, so the same answer applies there.";
    return c;
}

Classification classify_hankel(int n, int t)
{
    if (t < 1 || t > n)
        throw std::invalid_argument("hankel family needs 1 <= t <= n, got n=" + std::to_string(n) + ", t=" + std::to_string(t));
    Classification c;
    c.family = Family::hankel;
    c.n = n;
    c.t = t;
    c.dim = 2 * t - 2;
    c.a_invariant = 1 - t;
    c.gorenstein = n == t;
    c.almost_gorenstein = c.gorenstein || gtt_criterion(c.a_invariant, c.dim);
    c.notes = "Maximal minors of a t x n Hankel matrix in n+t-1 variables. CM type and projective dimension not computed.";
    if (t == 1)
        c.notes += " For t = 1 the minors are the variables themselves.";
    return c;
}

Classification classify_pfaffian_square(int n)
{
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("pfaffian-square family needs odd n >= 3, got n=" + std::to_string(n));
    const int vars = n * (n - 1) / 2;

    Classification c;
    c.family = Family::pfaffian_square;
    c.n = n;
    c.dim = vars - 3;
    c.projdim = 3;
    // linear resolution of I^2, generated in degree n - 1
    c.betti = {
        {0, 0, 1},
        {1, n - 1, binomial(n + 1, 2)},
        {2, n, BigInt(n) * n - 1},
        {3, n + 1, binomial(n, 2)},
    };
    c.top_shift = c.betti.back().degree;
    c.a_invariant = *c.top_shift - vars;
    c.cm_type = c.betti.back().rank;
    c.gorenstein = *c.cm_type == 1;
    c.almost_gorenstein = c.gorenstein || gtt_criterion(c.a_invariant, c.dim);
    c.notes = "top_shift is the twist of the last resolution term; a_invariant is top_shift minus the " +
              std::to_string(vars) + " variables.";
    if (n == 3)
        c.notes += " For n = 3 the ring is Artinian.";
    return c;
}

} // namespace symdet
