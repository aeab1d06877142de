#pragma once

/**
 * @file automorphism.hpp
 * @brief Automorphisms of the Hermitian curve fixing the point at infinity,
 * and the three order-dp subgroup presets.
 *
 * Every such map is affine-triangular:
 *
 *   (x, y) -> (l x + a, c x + l^{q+1} y + b)
 *
 * with c = a^q l (plus form, b^q + b = a^{q+1}) or c = a^q l w (minus form,
 * b^q - b = -w a^{q+1}). Composition is function composition: compose(f, g)
 * applies g first.
 */

#include <cstdint>
#include <vector>

#include "hq/curves.hpp"

namespace hq::autom {

using curves::AffinePoint;
using curves::HermitianModel;

struct Automorphism {
    gf::Elem a;
    gf::Elem b;
    gf::Elem lambda;

    constexpr auto operator<=>(const Automorphism&) const = default;
};

/// Validates the canonical-form condition for the model's form.
Automorphism make_automorphism(const HermitianModel& m, gf::Elem a, gf::Elem b, gf::Elem lambda);
bool is_valid(const HermitianModel& m, const Automorphism& f);
Automorphism identity(const HermitianModel& m);

/// Throws UsageError if pt is not on the model.
AffinePoint apply(const HermitianModel& m, const Automorphism& f, AffinePoint pt);
AffinePoint apply_unchecked(const HermitianModel& m, const Automorphism& f, AffinePoint pt);

Automorphism compose(const HermitianModel& m, const Automorphism& f, const Automorphism& g);
Automorphism inverse(const HermitianModel& m, const Automorphism& f);
/// f^i by binary exponentiation.
Automorphism power(const HermitianModel& m, const Automorphism& f, std::uint64_t i);
/// Closed form of f_{a,b,1}^i, 1 <= i <= p:
///   plus:  (i a, a^{q+1}(i^2 - i)/2 + i b, 1)
///   minus: (i a, a^{q+1} w (i^2 - i)/2 + i b, 1)
Automorphism closed_form_power(const HermitianModel& m, gf::Elem a, gf::Elem b, std::uint64_t i);

enum class PresetCase { I, II, III };

struct GroupPreset {
    PresetCase which = PresetCase::I;
    HermitianModel model;  // minus form
    std::uint32_t d = 0;
    Automorphism s;  // order p
    Automorphism t;  // order d
    std::vector<Automorphism> elements;  // closure, sorted
    /// t^{-1} s t = s^conj_exponent; 1 in the abelian case.
    std::uint64_t conj_exponent = 1;
    bool abelian = false;
};

/// Builds the preset and verifies |G| = dp and the commutation relation.
GroupPreset build_dp_group(PresetCase which, std::uint32_t p, std::uint32_t h, std::uint32_t d);

std::uint64_t element_order(const HermitianModel& m, const Automorphism& f, std::uint64_t bound);

struct OrbitPartition {
    std::vector<std::vector<AffinePoint>> orbits;  // each sorted; ordered by least point
    /// The point at infinity is fixed by every element (affine maps).
    bool infinity_fixed = true;
};

OrbitPartition orbits(const GroupPreset& preset, const std::vector<AffinePoint>& points);

}  // namespace hq::autom
