#include "hq/rrspace.hpp"

#include <algorithm>
#include <numeric>

#include "hq/error.hpp"

namespace hq::rr {

using curves::Family;

CabShape cab_parameters(const curves::CurveSpec& spec) {
    const std::uint64_t q = spec.q;
    switch (spec.family) {
        case Family::Hermitian: return {q, q + 1, q};
        case Family::IntermediateCenter: return {q / spec.p, q + 1, q / spec.p};
        case Family::FamilyI: return {q / spec.p, (q + 1) / *spec.d, q / spec.p};
        default:
            throw UsageError("family " + std::string(curves::family_name(spec.family)) +
                             " has no C_ab plane model");
    }
}

WeierstrassData weierstrass_semigroup(const curves::CurveSpec& spec) {
    WeierstrassData w;
    const std::uint64_t q = spec.q;
    if (curves::is_cab_family(spec.family)) {
        const auto shape = cab_parameters(spec);
        w.semigroup = numsg::from_generators({shape.a, shape.b});
        if (spec.family == Family::FamilyI)
            w.notes.push_back("generators (q/p, (q+1)/d); the alternative statement <q/p, q+1> disagrees with the "
                              "genus and is not used");
        return w;
    }
    PartialMembership pm;
    switch (spec.family) {
        case Family::FamilyII:
            pm.theorem_members = {q / spec.p, (q - 1) / *spec.d};
            pm.proof_members = pm.theorem_members;
            break;
        case Family::FamilyIII:
            pm.theorem_members = {2 * (q - 1) / *spec.d, q - 1};
            pm.proof_members = {(q - 1) / *spec.d, q / spec.p};
            w.notes.push_back("theorem and proof member lists differ; neither is checked");
            break;
        case Family::IntermediateNoncenter:
            pm.theorem_members = {2 * q / spec.p, q, q + 1};
            pm.proof_members = pm.theorem_members;
            w.notes.push_back("see proof_sequence_check for the telescopic genus comparison");
            break;
        default: break;
    }
    w.partial = std::move(pm);
    return w;
}

std::uint64_t pole_order(std::uint64_t i, std::uint64_t j, const CabShape& shape) {
    if (j >= shape.deg_y) throw UsageError("monomial y-exponent must be below the y-degree of the model");
    return i * shape.a + j * shape.b;
}

MonomialBasis rr_basis(const CabShape& shape, std::uint64_t m) {
    MonomialBasis basis;
    basis.m = m;
    std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>> items;
    for (std::uint64_t j = 0; j < shape.deg_y && j * shape.b <= m; ++j)
        for (std::uint64_t i = 0; i * shape.a + j * shape.b <= m; ++i) items.push_back({pole_order(i, j, shape), {i, j}});
    std::sort(items.begin(), items.end());
    for (const auto& [pole, mono] : items) {
        basis.pole_orders.push_back(pole);
        basis.monomials.push_back(mono);
    }
    return basis;
}

MonomialBasis rr_basis(const curves::CurveSpec& spec, std::uint64_t m) { return rr_basis(cab_parameters(spec), m); }

ProofSequenceCheck proof_sequence_check(const curves::CurveSpec& spec) {
    if (spec.family != Family::IntermediateNoncenter)
        throw UsageError("the (2q/p, q, q+1) sequence belongs to the noncentral order-p quotient");
    ProofSequenceCheck c;
    const std::uint64_t q = spec.q;
    const std::uint64_t qp = q / spec.p;
    c.sequence = {2 * qp, q, q + 1};
    c.report = numsg::is_telescopic(c.sequence);
    c.closed_form_l_g = -static_cast<std::int64_t>(2 * qp) + static_cast<std::int64_t>(q) +
                        static_cast<std::int64_t>((qp - 1) * (q + 1));
    c.semigroup_genus = numsg::from_generators(c.sequence).genus();
    c.curve_genus = spec.genus;
    c.matches = c.report.telescopic && c.report.l_g == c.closed_form_l_g &&
                static_cast<std::uint64_t>(c.report.g) == c.semigroup_genus && c.semigroup_genus == c.curve_genus;
    return c;
}

}  // namespace hq::rr
