#pragma once

/**
 * @file cover.hpp
 * @brief Pointwise realization of the quotient maps from the Hermitian curve.
 *
 * Substitution chains (source form in brackets):
 *
 *   IntermediateCenter  [minus]  (x, y^p - y)
 *   IntermediateNoncenter [plus] (x^p - x, y - x^2/2)
 *   FamilyI             [minus]  (x^d, y^p - y)
 *   FamilyII            [minus]  (x^d, -(y^p - y)/x^2),            x != 0
 *   FamilyIII           [plus]   (-xi^2/(2 eta), xi^d),            eta != 0
 *                                with xi = x^p - x, eta = y - x^2/2
 *
 * The sign in FamilyII and the factor -1/2 in FamilyIII normalize the image
 * onto the printed equations of those families; without them the images
 * satisfy the equations with A replaced by -A (II) or -A/2 (III).
 *
 * The cleared FamilyIII model is singular at the origin: several places of
 * the curve (distinguished by u = y^2/x^d of the uncleared equation) meet
 * there. Fibers are therefore grouped by (image point, u), with u computed
 * on the source as (-2 eta)^d.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hq/curves.hpp"

namespace hq::cover {

using curves::AffinePoint;
using curves::CurveSpec;

/// Thrown by quotient_project for points on the excluded locus.
class ExcludedLocus : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Canonical form of the Hermitian curve the family's chain starts from.
curves::HermitianForm source_form(curves::Family family);
curves::HermitianModel source_model(const CurveSpec& spec);

/// nullopt on the excluded locus; no on-curve check of the input.
std::optional<AffinePoint> project_unchecked(const CurveSpec& spec, AffinePoint hermitian_point);
/// Checks the input lies on the source model; throws ExcludedLocus if excluded.
AffinePoint quotient_project(const CurveSpec& spec, AffinePoint hermitian_point);

struct CoverReport {
    std::uint64_t source_points = 0;
    std::uint64_t admissible = 0;
    std::uint64_t excluded = 0;
    std::uint64_t violations = 0;
    std::uint64_t images = 0;  // distinct image points
    std::uint64_t branched_images = 0;  // image points carrying several places
    std::uint64_t group_order = 0;  // dp, or p for the intermediate covers
    std::map<std::uint64_t, std::uint64_t> fiber_histogram;  // place fiber size -> count
    bool fibers_divide_group_order = true;
    std::vector<AffinePoint> violating_images;  // first few
};

/// Projects every given point (no on-curve check of the sources) and checks
/// each image against the family equation.
CoverReport verify_points(const CurveSpec& spec, std::span<const AffinePoint> sources);
/// Enumerates the source Hermitian curve and verifies the whole cover.
CoverReport verify_cover(const CurveSpec& spec, const curves::EnumerationOptions& opts = {});

}  // namespace hq::cover
