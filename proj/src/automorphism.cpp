#include "hq/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "hq/error.hpp"

namespace hq::autom {

using gf::Elem;
using gf::Field;

namespace {

Elem x_coeff_in_y(const HermitianModel& m, const Automorphism& f) {
    const Field& F = m.F();
    Elem c = F.mul(F.pow(f.a, m.q), f.lambda);
    if (m.form == curves::HermitianForm::Minus) c = F.mul(c, m.omega);
    return c;
}

Elem y_scale(const HermitianModel& m, const Automorphism& f) { return m.F().pow(f.lambda, m.q + 1); }

std::uint64_t point_key(AffinePoint pt) { return (static_cast<std::uint64_t>(pt.x.v) << 32) | pt.y.v; }

}  // namespace

bool is_valid(const HermitianModel& m, const Automorphism& f) {
    const Field& F = m.F();
    if (f.lambda == F.zero()) return false;
    const Elem bq = F.pow(f.b, m.q);
    const Elem aq1 = F.pow(f.a, m.q + 1);
    if (m.form == curves::HermitianForm::Plus) return F.add(bq, f.b) == aq1;
    return F.sub(bq, f.b) == F.neg(F.mul(m.omega, aq1));
}

Automorphism make_automorphism(const HermitianModel& m, Elem a, Elem b, Elem lambda) {
    Automorphism f{a, b, lambda};
    if (!is_valid(m, f)) throw UsageError("automorphism parameters violate the canonical-form condition");
    return f;
}

Automorphism identity(const HermitianModel& m) { return {m.F().zero(), m.F().zero(), m.F().one()}; }

AffinePoint apply_unchecked(const HermitianModel& m, const Automorphism& f, AffinePoint pt) {
    const Field& F = m.F();
    const Elem x = F.add(F.mul(f.lambda, pt.x), f.a);
    const Elem y = F.add(F.add(F.mul(x_coeff_in_y(m, f), pt.x), F.mul(y_scale(m, f), pt.y)), f.b);
    return {x, y};
}

AffinePoint apply(const HermitianModel& m, const Automorphism& f, AffinePoint pt) {
    if (!m.on_curve(pt)) throw UsageError("apply: point is not on the Hermitian curve");
    return apply_unchecked(m, f, pt);
}

Automorphism compose(const HermitianModel& m, const Automorphism& f, const Automorphism& g) {
    const Field& F = m.F();
    Automorphism r;
    r.lambda = F.mul(f.lambda, g.lambda);
    r.a = F.add(F.mul(f.lambda, g.a), f.a);
    r.b = F.add(F.add(F.mul(x_coeff_in_y(m, f), g.a), F.mul(y_scale(m, f), g.b)), f.b);
    return r;
}

Automorphism inverse(const HermitianModel& m, const Automorphism& f) {
    const Field& F = m.F();
    Automorphism r;
    r.lambda = F.inv(f.lambda);
    r.a = F.neg(F.mul(f.a, r.lambda));
    r.b = F.neg(F.div(F.add(f.b, F.mul(x_coeff_in_y(m, f), r.a)), y_scale(m, f)));
    return r;
}

Automorphism power(const HermitianModel& m, const Automorphism& f, std::uint64_t i) {
    Automorphism r = identity(m);
    Automorphism base = f;
    while (i) {
        if (i & 1) r = compose(m, r, base);
        base = compose(m, base, base);
        i >>= 1;
    }
    return r;
}

Automorphism closed_form_power(const HermitianModel& m, Elem a, Elem b, std::uint64_t i) {
    const Field& F = m.F();
    const Elem ie = F.from_int(static_cast<std::int64_t>(i % m.p));
    const Elem tri = F.from_int(static_cast<std::int64_t>(((i * i - i) / 2) % m.p));
    Elem lead = F.mul(F.pow(a, m.q + 1), tri);
    if (m.form == curves::HermitianForm::Minus) lead = F.mul(lead, m.omega);
    return {F.mul(ie, a), F.add(lead, F.mul(ie, b)), F.one()};
}

std::uint64_t element_order(const HermitianModel& m, const Automorphism& f, std::uint64_t bound) {
    const Automorphism id = identity(m);
    Automorphism g = f;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (g == id) return n;
        g = compose(m, g, f);
    }
    return 0;
}

GroupPreset build_dp_group(PresetCase which, std::uint32_t p, std::uint32_t h, std::uint32_t d) {
    if (!gf::is_prime(d) || d == p) throw UsageError("d must be a prime different from p");
    GroupPreset g;
    g.which = which;
    g.model = curves::hermitian_model(p, h, curves::HermitianForm::Minus);
    g.d = d;
    const HermitianModel& m = g.model;
    const Field& F = m.F();
    if (which == PresetCase::I && (m.q + 1) % d != 0) throw UsageError("case I requires d | q+1");
    if (which != PresetCase::I && (p - 1) % d != 0) throw UsageError("cases II and III require d | p-1");

    const Elem lambda = gf::least_element_of_order(F, d);
    g.t = make_automorphism(m, F.zero(), F.zero(), lambda);
    if (which == PresetCase::III)
        g.s = make_automorphism(m, F.one(), F.mul(m.omega, F.inv(F.from_int(2))), F.one());
    else
        g.s = make_automorphism(m, F.zero(), F.one(), F.one());

    // closure under right multiplication by the generators
    std::set<Automorphism> seen{identity(m)};
    std::deque<Automorphism> queue{identity(m)};
    const std::uint64_t target = static_cast<std::uint64_t>(d) * p;
    while (!queue.empty()) {
        const Automorphism cur = queue.front();
        queue.pop_front();
        for (const auto& gen : {g.s, g.t}) {
            const Automorphism nxt = compose(m, cur, gen);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
        if (seen.size() > target) break;
    }
    g.elements.assign(seen.begin(), seen.end());
    if (g.elements.size() != target)
        throw AuditFailure("preset closure has " + std::to_string(g.elements.size()) + " elements, expected " +
                           std::to_string(target));

    const Automorphism conj = compose(m, inverse(m, g.t), compose(m, g.s, g.t));
    g.conj_exponent = 0;
    for (std::uint64_t i = 1; i < p; ++i)
        if (power(m, g.s, i) == conj) {
            g.conj_exponent = i;
            break;
        }
    if (g.conj_exponent == 0) throw AuditFailure("t^{-1} s t is not a power of s");
    g.abelian = compose(m, g.s, g.t) == compose(m, g.t, g.s);

    const Elem ie = F.from_int(static_cast<std::int64_t>(g.conj_exponent));
    switch (which) {
        case PresetCase::I:
            if (!g.abelian) throw AuditFailure("case I preset is not abelian");
            break;
        case PresetCase::II:
            if (g.abelian || ie != F.inv(F.pow(lambda, m.q + 1)))
                throw AuditFailure("case II relation s t = t s^i with i = 1/lambda^{q+1} fails");
            break;
        case PresetCase::III:
            if (g.abelian || F.mul(ie, lambda) != F.one())
                throw AuditFailure("case III relation s t = t s^i with i lambda = 1 fails");
            break;
    }
    return g;
}

OrbitPartition orbits(const GroupPreset& preset, const std::vector<AffinePoint>& points) {
    const HermitianModel& m = preset.model;
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(points.size() * 2);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!m.on_curve(points[i])) throw UsageError("orbits: point is not on the Hermitian curve");
        index.emplace(point_key(points[i]), i);
    }
    std::vector<bool> visited(points.size(), false);
    OrbitPartition part;
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    for (std::size_t start : order) {
        if (visited[start]) continue;
        std::vector<AffinePoint> orbit;
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            orbit.push_back(points[cur]);
            for (const auto& gen : {preset.s, preset.t}) {
                const AffinePoint img = apply_unchecked(m, gen, points[cur]);
                auto it = index.find(point_key(img));
                if (it == index.end()) throw AuditFailure("orbits: input set is not invariant under the group");
                if (!visited[it->second]) {
                    visited[it->second] = true;
                    stack.push_back(it->second);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

}  // namespace hq::autom
