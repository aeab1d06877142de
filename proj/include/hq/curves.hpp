#pragma once

/**
 * @file curves.hpp
 * @brief The Hermitian curve, its two order-p quotients and the three order-dp
 * quotient families, with rational point enumeration and maximality audits.
 *
 * All curves live over F_{q^2}, q = p^h, represented as one degree-2h extension
 * of F_p. Equations (x, y stand for the family's own coordinate pair):
 *
 *   Hermitian               y^q + y - x^{q+1}
 *   IntermediateCenter      sum_{i<h} y^{p^i} + w x^{q+1}
 *   IntermediateNoncenter   y^q + y + 1/2 (sum_{i<h} x^{p^i})^2
 *   FamilyI                 sum_{i<h} y^{p^i} + w x^{(q+1)/d}
 *   FamilyII                w x^{(q-1)/d} - sum_{i<h} x^{2(p^i-1)/d} y^{p^i}
 *   FamilyIII (cleared)     y^{2(q-1)/d} + x^{q-1} - x^q (sum_{i<h} y^{(p^i-1)/d})^2
 *
 * with w^{q-1} = -1. FamilyIII is the rational equation
 * (y^2/x^d)^{(q-1)/d} + 1 - A(x, y) = 0 multiplied through by x^{q-1}; its
 * x = 0 solutions are kept apart from the affine chart.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hq/gf.hpp"

namespace hq::curves {

enum class Family { Hermitian, IntermediateCenter, IntermediateNoncenter, FamilyI, FamilyII, FamilyIII };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
/// Families whose model is a C_ab curve with one place at infinity.
bool is_cab_family(Family f);
bool needs_d(Family f);

struct AffinePoint {
    gf::Elem x;
    gf::Elem y;

    constexpr auto operator<=>(const AffinePoint&) const = default;
};

struct CurveSpec {
    Family family = Family::Hermitian;
    std::uint32_t p = 0;
    std::uint32_t h = 0;
    std::optional<std::uint32_t> d;
    bool strict = false;
    gf::FieldPtr field;
    std::optional<gf::Elem> omega;
    std::uint64_t q = 0;
    std::uint64_t genus = 0;
    std::vector<std::string> warnings;

    const gf::Field& F() const { return *field; }
};

/// Validates parameters and precomputes q, the field, omega and the genus.
/// Divisibility violations are errors; in permissive mode p < 5 or d < 5 only
/// produce warnings.
CurveSpec build_curve(Family family, std::uint32_t p, std::uint32_t h, std::optional<std::uint32_t> d,
                      bool strict = false);

/// Closed-form genus for the family; throws if the formula is not integral.
std::uint64_t genus_formula(Family family, std::uint32_t p, std::uint32_t h, std::optional<std::uint32_t> d);
inline std::uint64_t genus(const CurveSpec& spec) { return spec.genus; }

gf::Elem equation_eval(const CurveSpec& spec, AffinePoint pt);
inline bool on_curve(const CurveSpec& spec, AffinePoint pt) { return equation_eval(spec, pt) == gf::Elem{}; }

/// Total degree of the plane model used for the deficit bound.
std::uint64_t model_degree(const CurveSpec& spec);

struct EnumerationOptions {
    std::uint64_t max_field_size = 1ull << 24;
    /// Cap on (field size)^2 for families enumerated by root scan.
    std::uint64_t max_scan = 1ull << 30;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct PointTable {
    /// Affine rational points, sorted.
    std::vector<AffinePoint> points;
    /// Solutions of the cleared FamilyIII form on x = 0 (empty otherwise).
    std::vector<AffinePoint> cleared_locus;
};

PointTable enumerate_points(const CurveSpec& spec, const EnumerationOptions& opts = {});

struct MaximalityReport {
    std::uint64_t affine = 0;
    std::uint64_t expected_total = 0;  // q^2 + 2 g q + 1
    std::int64_t deficit = 0;
    std::uint64_t cleared_locus = 0;
    bool exact = false;  // true: deficit must equal 1
    std::uint64_t bound = 1;
    bool pass = false;
};

/// Throws AuditFailure when the deficit is negative.
MaximalityReport maximality_audit(const CurveSpec& spec, const PointTable& table);
MaximalityReport maximality_audit(const CurveSpec& spec, const EnumerationOptions& opts = {});

// ---------------------------------------------------------------------------
// The Hermitian curve in either canonical form.

enum class HermitianForm {
    Plus,   ///< y^q + y = x^{q+1}
    Minus,  ///< y^q - y + w x^{q+1} = 0
};

struct HermitianModel {
    gf::FieldPtr field;
    HermitianForm form = HermitianForm::Plus;
    gf::Elem omega;
    std::uint32_t p = 0;
    std::uint32_t h = 0;
    std::uint64_t q = 0;

    const gf::Field& F() const { return *field; }
    gf::Elem eval(AffinePoint pt) const;
    bool on_curve(AffinePoint pt) const { return eval(pt) == gf::Elem{}; }
};

HermitianModel hermitian_model(std::uint32_t p, std::uint32_t h, HermitianForm form);
/// Same field and omega as an existing spec.
HermitianModel hermitian_model(const CurveSpec& spec, HermitianForm form);
/// All q^3 affine points, sorted.
std::vector<AffinePoint> enumerate_hermitian(const HermitianModel& model, const EnumerationOptions& opts = {});

}  // namespace hq::curves
