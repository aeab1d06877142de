#include "hq/numsg.hpp"

#include <algorithm>
#include <numeric>

#include "hq/error.hpp"

namespace hq::numsg {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::uint64_t> gens) {
    if (gens.empty()) throw UsageError("semigroup needs at least one generator");
    std::uint64_t g = 0;
    for (auto a : gens) {
        if (a == 0) throw UsageError("semigroup generators must be positive");
        g = std::gcd(g, a);
    }
    if (g != 1) throw UsageError("generators have gcd " + std::to_string(g) + " != 1; infinitely many gaps");

    NumericalSemigroup s;
    s.gens_.assign(gens.begin(), gens.end());
    std::sort(s.gens_.begin(), s.gens_.end());
    s.gens_.erase(std::unique(s.gens_.begin(), s.gens_.end()), s.gens_.end());

    // Extend until a_1 consecutive members appear; beyond that everything is a member.
    const std::uint64_t a1 = s.gens_.front();
    std::vector<bool> member{true};
    std::uint64_t streak = 1;
    while (streak < a1) {
        const std::uint64_t n = member.size();
        bool in = false;
        for (auto a : s.gens_) {
            if (a > n) break;
            if (member[n - a]) {
                in = true;
                break;
            }
        }
        member.push_back(in);
        streak = in ? streak + 1 : 0;
    }
    for (std::uint64_t n = 0; n < member.size(); ++n)
        if (!member[n]) s.gaps_.push_back(n);
    s.frobenius_ = s.gaps_.empty() ? -1 : static_cast<std::int64_t>(s.gaps_.back());
    member.resize(static_cast<std::size_t>(s.frobenius_ + 2), true);
    s.member_ = std::move(member);
    return s;
}

std::uint64_t NumericalSemigroup::count_members_upto(std::uint64_t m) const {
    const auto gaps_upto = std::upper_bound(gaps_.begin(), gaps_.end(), m) - gaps_.begin();
    return m + 1 - static_cast<std::uint64_t>(gaps_upto);
}

std::vector<GapRun> gap_runs(const NumericalSemigroup& s) {
    std::vector<GapRun> runs;
    for (auto g : s.gaps()) {
        if (!runs.empty() && runs.back().last() + 1 == g)
            ++runs.back().length;
        else
            runs.push_back({g, 1});
    }
    return runs;
}

std::optional<GapRun> run_containing(const NumericalSemigroup& s, std::uint64_t n) {
    if (s.contains(n)) return std::nullopt;
    std::uint64_t lo = n;
    while (lo > 0 && s.is_gap(lo - 1)) --lo;
    std::uint64_t hi = n;
    while (s.is_gap(hi + 1)) ++hi;
    return GapRun{lo, hi - lo + 1};
}

TelescopicReport is_telescopic(std::span<const std::uint64_t> seq) {
    if (seq.empty()) throw UsageError("empty sequence");
    TelescopicReport r;
    r.sequence.assign(seq.begin(), seq.end());
    r.d_chain.push_back(0);
    for (auto a : seq) {
        if (a == 0) throw UsageError("sequence entries must be positive");
        r.d_chain.push_back(std::gcd(r.d_chain.back(), a));
    }
    if (r.d_chain.back() != 1) throw UsageError("sequence has gcd != 1");

    r.telescopic = true;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const std::uint64_t di_prev = r.d_chain[i];
        std::vector<std::uint64_t> prev;
        for (std::size_t j = 0; j < i; ++j) prev.push_back(seq[j] / di_prev);
        const auto s_prev = NumericalSemigroup::from_generators(prev);
        const bool ok = s_prev.contains(seq[i] / r.d_chain[i + 1]);
        r.checks.push_back(ok);
        r.telescopic = r.telescopic && ok;
    }
    if (r.telescopic) {
        std::int64_t lg = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const auto ratio = static_cast<std::int64_t>(r.d_chain[i] / r.d_chain[i + 1]);
            lg += (ratio - 1) * static_cast<std::int64_t>(seq[i]);
        }
        r.l_g = lg;
        r.g = (lg + 1) / 2;
    }
    return r;
}

TelescopicNumbers telescopic_numbers(std::span<const std::uint64_t> seq) {
    const auto r = is_telescopic(seq);
    if (!r.telescopic) throw UsageError("sequence is not telescopic");
    return {r.l_g, r.g};
}

}  // namespace hq::numsg
