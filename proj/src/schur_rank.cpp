#include "symdet/schur_rank.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symdet {

BigInt schur_rank(const Partition& lambda, int n)
{
    if (n < 1)
        throw std::invalid_argument("schur_rank needs n >= 1");
    if (lambda.row(1) > n)
        return 0;

    const Partition shape = conjugate(lambda);
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 1; i <= static_cast<int>(shape.length()); ++i) {
        for (int j = 1; j <= shape.row(static_cast<std::size_t>(i)); ++j) {
            num *= n + j - i;
            // hook in the conjugate shape: arm along row i of λ', leg along row j of λ
            den *= shape.row(static_cast<std::size_t>(i)) - j + lambda.row(static_cast<std::size_t>(j)) - i + 1;
        }
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("hook-content product not divisible by hook product for " + lambda.to_string());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

namespace {

struct SsytCounter {
    const Partition& shape;
    int n;
    std::vector<std::vector<int>> fill;
    std::uint64_t count = 0;

    void place(int i, int j)
    {
        const int rows = static_cast<int>(shape.length());
        if (i > rows) {
            ++count;
            return;
        }
        if (j > shape.row(static_cast<std::size_t>(i))) {
            place(i + 1, 1);
            return;
        }
        int lo = 1;
        if (j > 1)
            lo = std::max(lo, fill[i - 1][j - 2]);
        if (i > 1)
            lo = std::max(lo, fill[i - 2][j - 1] + 1);
        // every box below in this column needs a strictly larger entry
        const int below = static_cast<int>(conjugate_col(j)) - i;
        for (int v = lo; v + below <= n; ++v) {
            fill[i - 1][j - 1] = v;
            place(i, j + 1);
        }
    }

    std::size_t conjugate_col(int j) const
    {
        std::size_t len = 0;
        while (len < shape.length() && shape.parts()[len] >= j)
            ++len;
        return len;
    }
};

} // namespace

BigInt ssyt_count(const Partition& shape, int n, int cap)
{
    if (n < 1)
        throw std::invalid_argument("ssyt_count needs n >= 1");
    if (shape.weight() > cap)
        throw OracleTooLarge("oracle too large: shape " + shape.to_string() + " has " + std::to_string(shape.weight()) +
                             " boxes, cap is " + std::to_string(cap));
    SsytCounter c{shape, n, {}, 0};
    for (int len : shape.parts())
        c.fill.emplace_back(static_cast<std::size_t>(len), 0);
    c.place(1, 1);
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(c.count), 0, 0, &c.count);
    return out;
}

} // namespace symdet
