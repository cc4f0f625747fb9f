#ifndef SYMDET_PARTITION_HPP
#define SYMDET_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace symdet {

/* An integer partition, stored without trailing zeros. All row/column
 * indices in the public interface are 1-based, matching the usual Young
 * diagram conventions (English notation, rows numbered top to bottom).
 */
class Partition {
public:
    Partition() = default;

    /* Strips trailing zeros, then requires a weakly decreasing sequence of
     * positive integers. Throws std::invalid_argument otherwise. */
    static Partition make(std::vector<int> parts);

    /* Parses "4,4,2,1". The empty string is the empty partition. */
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row length; 0 beyond the last row.
    int row(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    bool contains(int i, int j) const noexcept { return i >= 1 && j >= 1 && j <= row(static_cast<std::size_t>(i)); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/* Arm and leg lengths of the diagonal boxes, each counting the diagonal box
 * itself: (a_1,...,a_r | b_1,...,b_r) with a_i = λ_i - i + 1 and
 * b_i = λ'_i - i + 1. */
class HookNotation {
public:
    HookNotation() = default;

    /// Both sequences must be strictly decreasing, positive, and of equal length.
    static HookNotation make(std::vector<int> arms, std::vector<int> legs);

    /// Parses "4,3|4,2".
    static HookNotation parse(std::string_view text);

    const std::vector<int>& arms() const noexcept { return arms_; }
    const std::vector<int>& legs() const noexcept { return legs_; }
    std::size_t rank() const noexcept { return arms_.size(); }
    int weight() const noexcept;

    std::string to_string() const;

    friend bool operator==(const HookNotation&, const HookNotation&) = default;

private:
    std::vector<int> arms_;
    std::vector<int> legs_;
};

Partition make_partition(std::vector<int> parts);

Partition conjugate(const Partition& p);

/// Side of the largest square that fits in the diagram.
int diagonal_rank(const Partition& p);

/// Throws std::invalid_argument for the empty partition.
HookNotation to_hook_notation(const Partition& p);
Partition from_hook_notation(const HookNotation& h);

/// λ_i - j + λ'_j - i + 1; the box (i, j) must lie in the diagram.
int hook_length(const Partition& p, int i, int j);

/* All partitions of `weight` with at most `max_parts` rows, each of length
 * at most `max_part` (negative bounds mean unbounded). Emitted in
 * lexicographically decreasing order. */
std::vector<Partition> partitions_in_box(int weight, int max_parts = -1, int max_part = -1);

inline std::vector<Partition> partitions_of(int weight) { return partitions_in_box(weight); }

} // namespace symdet

#endif
