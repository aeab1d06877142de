#include "hq/cover.hpp"

#include <algorithm>
#include <unordered_map>

#include "hq/error.hpp"

namespace hq::cover {

using curves::Family;
using curves::HermitianForm;
using gf::Elem;
using gf::Field;

namespace {

struct FiberKey {
    std::uint32_t x, y, branch;
    bool operator==(const FiberKey&) const = default;
};

struct FiberKeyHash {
    std::size_t operator()(const FiberKey& k) const noexcept {
        std::uint64_t v = (static_cast<std::uint64_t>(k.x) << 32) ^ k.y;
        v ^= static_cast<std::uint64_t>(k.branch) * 0x9e3779b97f4a7c15ull;
        return std::hash<std::uint64_t>{}(v);
    }
};

}  // namespace

HermitianForm source_form(Family family) {
    switch (family) {
        case Family::Hermitian:
        case Family::IntermediateNoncenter:
        case Family::FamilyIII: return HermitianForm::Plus;
        default: return HermitianForm::Minus;
    }
}

curves::HermitianModel source_model(const CurveSpec& spec) {
    return curves::hermitian_model(spec, source_form(spec.family));
}

std::optional<AffinePoint> project_unchecked(const CurveSpec& s, AffinePoint pt) {
    const Field& F = s.F();
    const auto [x, y] = pt;
    auto as_minus = [&]() { return F.sub(F.pow(y, s.p), y); };  // y^p - y
    auto xi_eta = [&]() {
        const Elem half = F.inv(F.from_int(2));
        return std::pair{F.sub(F.pow(x, s.p), x), F.sub(y, F.mul(half, F.mul(x, x)))};
    };
    switch (s.family) {
        case Family::Hermitian: return pt;
        case Family::IntermediateCenter: return AffinePoint{x, as_minus()};
        case Family::IntermediateNoncenter: {
            auto [xi, eta] = xi_eta();
            return AffinePoint{xi, eta};
        }
        case Family::FamilyI: return AffinePoint{F.pow(x, *s.d), as_minus()};
        case Family::FamilyII: {
            if (x == F.zero()) return std::nullopt;
            return AffinePoint{F.pow(x, *s.d), F.neg(F.div(as_minus(), F.mul(x, x)))};
        }
        case Family::FamilyIII: {
            auto [xi, eta] = xi_eta();
            if (eta == F.zero()) return std::nullopt;
            const Elem iota = F.neg(F.div(F.mul(xi, xi), F.mul(F.from_int(2), eta)));
            return AffinePoint{iota, F.pow(xi, *s.d)};
        }
    }
    return std::nullopt;
}

AffinePoint quotient_project(const CurveSpec& spec, AffinePoint pt) {
    if (!source_model(spec).on_curve(pt)) throw UsageError("quotient_project: point is not on the source Hermitian curve");
    auto img = project_unchecked(spec, pt);
    if (!img) throw ExcludedLocus("quotient_project: point lies on the excluded locus of the substitution");
    return *img;
}

CoverReport verify_points(const CurveSpec& spec, std::span<const AffinePoint> sources) {
    CoverReport r;
    r.source_points = sources.size();
    r.group_order = spec.d ? static_cast<std::uint64_t>(*spec.d) * spec.p : spec.p;
    if (spec.family == Family::Hermitian) r.group_order = 1;
    const bool branched = spec.family == Family::FamilyIII;
    const Field& F = spec.F();
    const Elem minus_two = F.neg(F.from_int(2));
    const Elem half = F.inv(F.from_int(2));
    std::unordered_map<FiberKey, std::uint64_t, FiberKeyHash> fibers;
    std::unordered_map<std::uint64_t, std::uint32_t> branches_at;
    fibers.reserve(sources.size());
    for (const auto& pt : sources) {
        auto img = project_unchecked(spec, pt);
        if (!img) {
            ++r.excluded;
            continue;
        }
        ++r.admissible;
        if (!curves::on_curve(spec, *img)) {
            ++r.violations;
            if (r.violating_images.size() < 8) r.violating_images.push_back(*img);
        }
        FiberKey key{img->x.v, img->y.v, 0};
        if (branched) {
            const Elem eta = F.sub(pt.y, F.mul(half, F.mul(pt.x, pt.x)));
            key.branch = F.pow(F.mul(minus_two, eta), *spec.d).v;
        }
        if (fibers[key]++ == 0) ++branches_at[(static_cast<std::uint64_t>(key.x) << 32) | key.y];
    }
    r.images = branches_at.size();
    for (const auto& [pt, n] : branches_at)
        if (n > 1) ++r.branched_images;
    for (const auto& [key, size] : fibers) {
        ++r.fiber_histogram[size];
        if (r.group_order % size != 0) r.fibers_divide_group_order = false;
    }
    return r;
}

CoverReport verify_cover(const CurveSpec& spec, const curves::EnumerationOptions& opts) {
    const auto sources = curves::enumerate_hermitian(source_model(spec), opts);
    return verify_points(spec, sources);
}

}  // namespace hq::cover
