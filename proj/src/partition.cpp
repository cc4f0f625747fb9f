#include "symdet/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace symdet {

namespace {

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("not an integer list: \"" + std::string(text) + "\"");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

bool strictly_decreasing_positive(const std::vector<int>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0)
            return false;
        if (i + 1 < v.size() && v[i] <= v[i + 1])
            return false;
    }
    return true;
}

void fill_box(int remaining, int max_parts, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition::make(cur));
        return;
    }
    if (max_parts == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // the remaining rows can hold at most p * (max_parts - 1) more boxes
        if (max_parts > 0 && static_cast<long>(p) * max_parts < remaining)
            break;
        cur.push_back(p);
        fill_box(remaining - p, max_parts < 0 ? -1 : max_parts - 1, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

Partition Partition::make(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive: " + join(parts));
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: " + join(parts));
    }
    Partition p;
    p.weight_ = std::accumulate(parts.begin(), parts.end(), 0);
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::parse(std::string_view text)
{
    return make(parse_int_list(text));
}

std::string Partition::to_string() const
{
    return join(parts_);
}

HookNotation HookNotation::make(std::vector<int> arms, std::vector<int> legs)
{
    if (arms.size() != legs.size())
        throw std::invalid_argument("hook notation needs as many arms as legs");
    if (!strictly_decreasing_positive(arms) || !strictly_decreasing_positive(legs))
        throw std::invalid_argument("hook notation arms and legs must be strictly decreasing and positive: " + join(arms) + "|" + join(legs));
    HookNotation h;
    h.arms_ = std::move(arms);
    h.legs_ = std::move(legs);
    return h;
}

HookNotation HookNotation::parse(std::string_view text)
{
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("hook notation must look like \"a1,...,ar|b1,...,br\"");
    return make(parse_int_list(text.substr(0, bar)), parse_int_list(text.substr(bar + 1)));
}

int HookNotation::weight() const noexcept
{
    int w = 0;
    for (std::size_t i = 0; i < arms_.size(); ++i)
        w += arms_[i] + legs_[i];
    return w - static_cast<int>(arms_.size());
}

std::string HookNotation::to_string() const
{
    return join(arms_) + "|" + join(legs_);
}

Partition make_partition(std::vector<int> parts)
{
    return Partition::make(std::move(parts));
}

Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<int> cols(static_cast<std::size_t>(p.parts().front()), 0);
    for (int len : p.parts())
        for (int j = 0; j < len; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition::make(std::move(cols));
}

int diagonal_rank(const Partition& p)
{
    int r = 0;
    while (p.row(static_cast<std::size_t>(r + 1)) >= r + 1)
        ++r;
    return r;
}

HookNotation to_hook_notation(const Partition& p)
{
    if (p.empty())
        throw std::invalid_argument("the empty partition has no hook notation");
    const Partition c = conjugate(p);
    const int r = diagonal_rank(p);
    std::vector<int> arms, legs;
    for (int i = 1; i <= r; ++i) {
        arms.push_back(p.row(static_cast<std::size_t>(i)) - i + 1);
        legs.push_back(c.row(static_cast<std::size_t>(i)) - i + 1);
    }
    return HookNotation::make(std::move(arms), std::move(legs));
}

Partition from_hook_notation(const HookNotation& h)
{
    const int r = static_cast<int>(h.rank());
    std::vector<int> rows;
    std::vector<int> cols;
    for (int i = 1; i <= r; ++i) {
        rows.push_back(h.arms()[static_cast<std::size_t>(i - 1)] + i - 1);
        cols.push_back(h.legs()[static_cast<std::size_t>(i - 1)] + i - 1);
    }
    // rows below the diagonal square only meet the first r columns
    for (int i = r + 1; r > 0 && i <= cols.front(); ++i) {
        int len = 0;
        for (int c : cols)
            len += c >= i;
        rows.push_back(len);
    }
    return Partition::make(std::move(rows));
}

int hook_length(const Partition& p, int i, int j)
{
    if (!p.contains(i, j))
        throw std::invalid_argument("box (" + std::to_string(i) + "," + std::to_string(j) + ") is not in partition " + p.to_string());
    const Partition c = conjugate(p);
    return p.row(static_cast<std::size_t>(i)) - j + c.row(static_cast<std::size_t>(j)) - i + 1;
}

std::vector<Partition> partitions_in_box(int weight, int max_parts, int max_part)
{
    std::vector<Partition> out;
    if (weight < 0)
        return out;
    std::vector<int> cur;
    fill_box(weight, max_parts, max_part < 0 ? weight : max_part, cur, out);
    return out;
}

} // namespace symdet
