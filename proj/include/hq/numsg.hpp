#pragma once

/**
 * @file numsg.hpp
 * @brief Numerical semigroups: membership, gaps, Frobenius number,
 * telescopic sequences and runs of consecutive gaps.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hq::numsg {

class NumericalSemigroup {
  public:
    /// Throws UsageError on an empty list, a zero generator or gcd != 1.
    static NumericalSemigroup from_generators(std::span<const std::uint64_t> gens);

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    /// Largest gap, -1 for the full semigroup N.
    std::int64_t frobenius() const { return frobenius_; }
    std::uint64_t genus() const { return gaps_.size(); }
    const std::vector<std::uint64_t>& gaps() const { return gaps_; }
    /// Membership table on [0, frobenius + 2).
    const std::vector<bool>& table() const { return member_; }

    bool contains(std::uint64_t n) const { return n >= member_.size() || member_[n]; }
    bool is_gap(std::uint64_t n) const { return !contains(n); }
    /// Number of members in [0, m].
    std::uint64_t count_members_upto(std::uint64_t m) const;

  private:
    std::vector<std::uint64_t> gens_;
    std::vector<bool> member_;
    std::vector<std::uint64_t> gaps_;
    std::int64_t frobenius_ = -1;
};

inline NumericalSemigroup from_generators(std::span<const std::uint64_t> gens) {
    return NumericalSemigroup::from_generators(gens);
}
inline NumericalSemigroup from_generators(std::initializer_list<std::uint64_t> gens) {
    return NumericalSemigroup::from_generators(std::span<const std::uint64_t>(gens.begin(), gens.size()));
}

struct GapRun {
    std::uint64_t start = 0;
    std::uint64_t length = 0;

    std::uint64_t last() const { return start + length - 1; }
    bool covers(std::uint64_t lo, std::uint64_t hi) const { return start <= lo && hi <= last(); }
    bool operator==(const GapRun&) const = default;
};

/// Maximal runs of consecutive gaps, by start.
std::vector<GapRun> gap_runs(const NumericalSemigroup& s);
/// The maximal run containing n, if n is a gap.
std::optional<GapRun> run_containing(const NumericalSemigroup& s, std::uint64_t n);

struct TelescopicReport {
    std::vector<std::uint64_t> sequence;
    /// d_0 = 0, d_i = gcd(a_1, ..., a_i); size k + 1.
    std::vector<std::uint64_t> d_chain;
    /// Outcome of a_i/d_i in S_{i-1} for i = 2..k.
    std::vector<bool> checks;
    bool telescopic = false;
    std::int64_t l_g = 0;
    std::int64_t g = 0;
};

/// Throws UsageError if gcd(seq) != 1 or seq is empty. l_g and g are filled
/// only for telescopic input.
TelescopicReport is_telescopic(std::span<const std::uint64_t> seq);

struct TelescopicNumbers {
    std::int64_t l_g = 0;
    std::int64_t g = 0;
};

/// l_g = sum_{i=1..k} (d_{i-1}/d_i - 1) a_i, g = (l_g + 1)/2.
/// Throws UsageError for non-telescopic input.
TelescopicNumbers telescopic_numbers(std::span<const std::uint64_t> seq);

}  // namespace hq::numsg
