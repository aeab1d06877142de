#pragma once

/**
 * @file rrspace.hpp
 * @brief Pole orders at the point at infinity, monomial Riemann-Roch bases on
 * the C_ab models, and Weierstrass semigroup data per family.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hq/curves.hpp"
#include "hq/numsg.hpp"

namespace hq::rr {

struct CabShape {
    std::uint64_t a = 0;  // pole order of x
    std::uint64_t b = 0;  // pole order of y
    std::uint64_t deg_y = 0;
};

/// Hermitian (q, q+1); IntermediateCenter (q/p, q+1); FamilyI (q/p, (q+1)/d).
/// Throws UsageError for the other families.
CabShape cab_parameters(const curves::CurveSpec& spec);

/// Member lists stated for a family whose semigroup is not computed here.
struct PartialMembership {
    std::vector<std::uint64_t> theorem_members;
    std::vector<std::uint64_t> proof_members;
    std::string status = "asserted, unverified";
};

struct WeierstrassData {
    std::optional<numsg::NumericalSemigroup> semigroup;  // C_ab families
    std::optional<PartialMembership> partial;            // everything else
    std::vector<std::string> notes;
};

WeierstrassData weierstrass_semigroup(const curves::CurveSpec& spec);

/// i a + j b; throws UsageError if j >= deg_y.
std::uint64_t pole_order(std::uint64_t i, std::uint64_t j, const CabShape& shape);

struct MonomialBasis {
    std::uint64_t m = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> monomials;  // (i, j) for x^i y^j
    std::vector<std::uint64_t> pole_orders;                          // ascending
};

MonomialBasis rr_basis(const CabShape& shape, std::uint64_t m);
MonomialBasis rr_basis(const curves::CurveSpec& spec, std::uint64_t m);

/// The telescopic sequence (2q/p, q, q+1) generated by the pole numbers of
/// the order-p quotient with a noncentral group, checked against its genus.
struct ProofSequenceCheck {
    std::vector<std::uint64_t> sequence;
    numsg::TelescopicReport report;
    std::int64_t closed_form_l_g = 0;  // -2q/p + q + (q/p - 1)(q + 1)
    std::uint64_t semigroup_genus = 0;
    std::uint64_t curve_genus = 0;
    bool matches = false;
};

/// For IntermediateNoncenter specs; throws UsageError otherwise.
ProofSequenceCheck proof_sequence_check(const curves::CurveSpec& spec);

}  // namespace hq::rr
