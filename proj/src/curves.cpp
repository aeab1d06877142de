#include "hq/curves.hpp"

#include <algorithm>

#include "hq/error.hpp"
#include "parallel.hpp"

namespace hq::curves {

using gf::Elem;
using gf::Field;

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Hermitian, "hermitian"},
    {Family::IntermediateCenter, "intermediate_center"},
    {Family::IntermediateNoncenter, "intermediate_noncenter"},
    {Family::FamilyI, "I"},
    {Family::FamilyII, "II"},
    {Family::FamilyIII, "III"},
};

// sum_{i<h} y^{p^i}
Elem partial_trace(const Field& F, Elem y, std::uint32_t h) { return F.trace(y, h); }

gf::AdditiveOperator partial_trace_operator(const Field& F, std::uint32_t h) {
    gf::AdditiveOperator op;
    for (std::uint32_t i = 0; i < h; ++i) op.terms.push_back({F.one(), i});
    return op;
}

// y^q + y
gf::AdditiveOperator hermitian_plus_operator(const Field& F, std::uint32_t h) {
    return {{{F.one(), h}, {F.one(), 0}}};
}

Elem half(const Field& F) { return F.inv(F.from_int(2)); }

// sum_{i<h} y^{(p^i-1)/d}, the inner sum of the cleared FamilyIII form
Elem family3_inner(const CurveSpec& s, Elem y) {
    const Field& F = s.F();
    Elem acc = F.zero();
    for (std::uint32_t i = 0; i < s.h; ++i) acc = F.add(acc, F.pow(y, (gf::ipow(s.p, i) - 1) / *s.d));
    return acc;
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& info : kFamilies)
        if (info.family == f) return info.name;
    return "?";
}

Family parse_family(std::string_view name) {
    for (const auto& info : kFamilies)
        if (info.name == name) return info.family;
    if (name == "Hermitian" || name == "H") return Family::Hermitian;
    if (name == "i" || name == "1") return Family::FamilyI;
    if (name == "ii" || name == "2") return Family::FamilyII;
    if (name == "iii" || name == "3") return Family::FamilyIII;
    throw UsageError("unknown curve family '" + std::string(name) + "'");
}

bool is_cab_family(Family f) {
    return f == Family::Hermitian || f == Family::IntermediateCenter || f == Family::FamilyI;
}

bool needs_d(Family f) { return f == Family::FamilyI || f == Family::FamilyII || f == Family::FamilyIII; }

std::uint64_t genus_formula(Family family, std::uint32_t p, std::uint32_t h, std::optional<std::uint32_t> d) {
    const std::uint64_t q = gf::ipow(p, h);
    const std::uint64_t qp = q / p;
    auto exact = [](std::uint64_t num, std::uint64_t den) {
        if (num % den != 0) throw UsageError("genus formula is not integral for these parameters");
        return num / den;
    };
    switch (family) {
        case Family::Hermitian: return q * (q - 1) / 2;
        case Family::IntermediateCenter: return exact(q * (qp - 1), 2);
        case Family::IntermediateNoncenter: return exact(qp * (q - 1), 2);
        case Family::FamilyI: return exact((q - *d + 1) * (qp - 1), 2ull * *d);
        case Family::FamilyII: return exact(q * (q - p), 2ull * *d * p);
        case Family::FamilyIII: return exact(q * (q - 1), 2ull * *d * p);
    }
    return 0;
}

CurveSpec build_curve(Family family, std::uint32_t p, std::uint32_t h, std::optional<std::uint32_t> d, bool strict) {
    if (!gf::is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
    if (p == 2) throw UsageError("characteristic 2 is not supported");
    if (h == 0) throw UsageError("h must be positive");
    CurveSpec s;
    s.family = family;
    s.p = p;
    s.h = h;
    s.strict = strict;
    s.q = gf::ipow(p, h);
    if (p < 5) {
        if (strict) throw UsageError("strict mode requires p >= 5");
        s.warnings.push_back("p = " + std::to_string(p) + " is below the p >= 5 hypothesis");
    }
    if (needs_d(family)) {
        if (!d) throw UsageError(std::string(family_name(family)) + " requires the parameter d");
        const std::uint32_t dv = *d;
        if (!gf::is_prime(dv)) throw UsageError("d = " + std::to_string(dv) + " is not prime");
        if (dv == p) throw UsageError("d must differ from p");
        if (family == Family::FamilyI && (s.q + 1) % dv != 0)
            throw UsageError("d = " + std::to_string(dv) + " does not divide q+1 = " + std::to_string(s.q + 1));
        if (family != Family::FamilyI && (p - 1) % dv != 0)
            throw UsageError("d = " + std::to_string(dv) + " does not divide p-1 = " + std::to_string(p - 1));
        if (dv < 5) {
            if (strict) throw UsageError("strict mode requires d >= 5");
            s.warnings.push_back("d = " + std::to_string(dv) + " is below the d >= 5 hypothesis");
        }
        s.d = dv;
    } else if (d) {
        throw UsageError(std::string(family_name(family)) + " takes no parameter d");
    }
    s.field = gf::make_field(p, 2 * h);
    if (family == Family::IntermediateCenter || family == Family::FamilyI || family == Family::FamilyII)
        s.omega = gf::find_omega(*s.field);
    s.genus = genus_formula(family, p, h, s.d);
    return s;
}

Elem equation_eval(const CurveSpec& s, AffinePoint pt) {
    const Field& F = s.F();
    const auto [x, y] = pt;
    const std::uint64_t q = s.q;
    switch (s.family) {
        case Family::Hermitian:
            return F.sub(F.add(F.pow(y, q), y), F.pow(x, q + 1));
        case Family::IntermediateCenter:
            return F.add(partial_trace(F, y, s.h), F.mul(*s.omega, F.pow(x, q + 1)));
        case Family::IntermediateNoncenter: {
            const Elem t = partial_trace(F, x, s.h);
            return F.add(F.add(F.pow(y, q), y), F.mul(half(F), F.mul(t, t)));
        }
        case Family::FamilyI:
            return F.add(partial_trace(F, y, s.h), F.mul(*s.omega, F.pow(x, (q + 1) / *s.d)));
        case Family::FamilyII: {
            Elem a = F.zero();
            for (std::uint32_t i = 0; i < s.h; ++i) {
                const std::uint64_t pi = gf::ipow(s.p, i);
                a = F.add(a, F.mul(F.pow(x, 2 * (pi - 1) / *s.d), F.pow(y, pi)));
            }
            return F.sub(F.mul(*s.omega, F.pow(x, (q - 1) / *s.d)), a);
        }
        case Family::FamilyIII: {
            const Elem inner = family3_inner(s, y);
            const Elem lhs = F.add(F.pow(y, 2 * (q - 1) / *s.d), F.pow(x, q - 1));
            return F.sub(lhs, F.mul(F.pow(x, q), F.mul(inner, inner)));
        }
    }
    return F.zero();
}

std::uint64_t model_degree(const CurveSpec& s) {
    const std::uint64_t q = s.q;
    switch (s.family) {
        case Family::Hermitian:
        case Family::IntermediateCenter: return q + 1;
        case Family::IntermediateNoncenter: return std::max<std::uint64_t>(q, 2 * (q / s.p));
        case Family::FamilyI: return std::max<std::uint64_t>(q / s.p, (q + 1) / *s.d);
        case Family::FamilyII: {
            std::uint64_t deg = (q - 1) / *s.d;
            for (std::uint32_t i = 0; i < s.h; ++i) {
                const std::uint64_t pi = gf::ipow(s.p, i);
                deg = std::max(deg, 2 * (pi - 1) / *s.d + pi);
            }
            return deg;
        }
        case Family::FamilyIII:
            return std::max<std::uint64_t>(2 * (q - 1) / *s.d, q + 2 * (q / s.p - 1) / *s.d);
    }
    return 0;
}

PointTable enumerate_points(const CurveSpec& s, const EnumerationOptions& opts) {
    const Field& F = s.F();
    const std::uint32_t N = F.size();
    if (N > opts.max_field_size)
        throw BudgetExceeded("enumeration over F_" + std::to_string(N) + " exceeds the field-size budget");
    const std::uint64_t q = s.q;
    PointTable table;

    auto collect_fixed = [&](const gf::AdditiveOperator& op, auto rhs) {
        const gf::AdditiveSolver solver(F, op);
        return detail::parallel_collect<AffinePoint>(N, opts.threads, [&](std::uint64_t i, std::vector<AffinePoint>& out) {
            const Elem x{static_cast<std::uint32_t>(i)};
            std::vector<Elem> ys;
            solver.solve_into(rhs(x), ys);
            for (Elem y : ys) out.push_back({x, y});
        });
    };

    switch (s.family) {
        case Family::Hermitian:
            table.points = collect_fixed(hermitian_plus_operator(F, s.h), [&](Elem x) { return F.pow(x, q + 1); });
            break;
        case Family::IntermediateCenter:
            table.points = collect_fixed(partial_trace_operator(F, s.h),
                                         [&](Elem x) { return F.neg(F.mul(*s.omega, F.pow(x, q + 1))); });
            break;
        case Family::IntermediateNoncenter: {
            const Elem hf = half(F);
            table.points = collect_fixed(hermitian_plus_operator(F, s.h), [&](Elem x) {
                const Elem t = partial_trace(F, x, s.h);
                return F.neg(F.mul(hf, F.mul(t, t)));
            });
            break;
        }
        case Family::FamilyI:
            table.points = collect_fixed(partial_trace_operator(F, s.h),
                                         [&](Elem x) { return F.neg(F.mul(*s.omega, F.pow(x, (q + 1) / *s.d))); });
            break;
        case Family::FamilyII: {
            // A(x, y) is additive in y with x-dependent coefficients.
            const std::uint32_t d = *s.d;
            table.points = detail::parallel_collect<AffinePoint>(N, opts.threads, [&](std::uint64_t i, std::vector<AffinePoint>& out) {
                const Elem x{static_cast<std::uint32_t>(i)};
                gf::AdditiveOperator op;
                for (std::uint32_t j = 0; j < s.h; ++j) op.terms.push_back({F.pow(x, 2 * (gf::ipow(s.p, j) - 1) / d), j});
                std::vector<Elem> ys;
                gf::AdditiveSolver(F, op).solve_into(F.mul(*s.omega, F.pow(x, (q - 1) / d)), ys);
                for (Elem y : ys) out.push_back({x, y});
            });
            break;
        }
        case Family::FamilyIII: {
            if (static_cast<std::uint64_t>(N) * N > opts.max_scan)
                throw BudgetExceeded("root scan over F_" + std::to_string(N) + " exceeds the scan budget");
            // y-only parts, tabulated once
            std::vector<Elem> ypow(N), inner_sq(N);
            for (std::uint32_t v = 0; v < N; ++v) {
                const Elem y{v};
                ypow[v] = F.pow(y, 2 * (q - 1) / *s.d);
                const Elem in = family3_inner(s, y);
                inner_sq[v] = F.mul(in, in);
            }
            for (std::uint32_t v = 0; v < N; ++v)
                if (ypow[v] == F.zero()) table.cleared_locus.push_back({F.zero(), Elem{v}});
            table.points = detail::parallel_collect<AffinePoint>(N - 1, opts.threads, [&](std::uint64_t i, std::vector<AffinePoint>& out) {
                const Elem x{static_cast<std::uint32_t>(i + 1)};
                const Elem xq1 = F.pow(x, q - 1);
                const Elem xq = F.mul(xq1, x);
                for (std::uint32_t v = 0; v < N; ++v)
                    if (F.add(ypow[v], xq1) == F.mul(xq, inner_sq[v])) out.push_back({x, Elem{v}});
            });
            break;
        }
    }
    return table;
}

MaximalityReport maximality_audit(const CurveSpec& s, const PointTable& table) {
    MaximalityReport r;
    r.affine = table.points.size();
    r.cleared_locus = table.cleared_locus.size();
    r.expected_total = s.q * s.q + 2 * s.genus * s.q + 1;
    r.deficit = static_cast<std::int64_t>(r.expected_total) - static_cast<std::int64_t>(r.affine);
    if (r.deficit < 0)
        throw AuditFailure("maximality audit: " + std::to_string(r.affine) + " affine points exceed the Hasse-Weil total " +
                           std::to_string(r.expected_total));
    r.exact = is_cab_family(s.family);
    r.bound = r.exact ? 1 : model_degree(s);
    r.pass = r.exact ? r.deficit == 1 : static_cast<std::uint64_t>(r.deficit) <= r.bound;
    return r;
}

MaximalityReport maximality_audit(const CurveSpec& s, const EnumerationOptions& opts) {
    return maximality_audit(s, enumerate_points(s, opts));
}

// ---------------------------------------------------------------------------

Elem HermitianModel::eval(AffinePoint pt) const {
    const Field& f = F();
    const Elem yq = f.pow(pt.y, q);
    const Elem xq1 = f.pow(pt.x, q + 1);
    if (form == HermitianForm::Plus) return f.sub(f.add(yq, pt.y), xq1);
    return f.add(f.sub(yq, pt.y), f.mul(omega, xq1));
}

HermitianModel hermitian_model(std::uint32_t p, std::uint32_t h, HermitianForm form) {
    if (!gf::is_prime(p) || p == 2) throw UsageError("hermitian_model: p must be an odd prime");
    if (h == 0) throw UsageError("hermitian_model: h must be positive");
    HermitianModel m;
    m.field = gf::make_field(p, 2 * h);
    m.form = form;
    m.omega = gf::find_omega(*m.field);
    m.p = p;
    m.h = h;
    m.q = gf::ipow(p, h);
    return m;
}

HermitianModel hermitian_model(const CurveSpec& spec, HermitianForm form) {
    HermitianModel m;
    m.field = spec.field;
    m.form = form;
    m.omega = spec.omega ? *spec.omega : gf::find_omega(*spec.field);
    m.p = spec.p;
    m.h = spec.h;
    m.q = spec.q;
    return m;
}

std::vector<AffinePoint> enumerate_hermitian(const HermitianModel& m, const EnumerationOptions& opts) {
    const Field& F = m.F();
    if (F.size() > opts.max_field_size)
        throw BudgetExceeded("enumeration over F_" + std::to_string(F.size()) + " exceeds the field-size budget");
    gf::AdditiveOperator op{{{F.one(), m.h}}};
    op.terms.push_back({m.form == HermitianForm::Plus ? F.one() : F.neg(F.one()), 0});
    const gf::AdditiveSolver solver(F, op);
    return detail::parallel_collect<AffinePoint>(F.size(), opts.threads, [&](std::uint64_t i, std::vector<AffinePoint>& out) {
        const Elem x{static_cast<std::uint32_t>(i)};
        const Elem xq1 = F.pow(x, m.q + 1);
        const Elem rhs = m.form == HermitianForm::Plus ? xq1 : F.neg(F.mul(m.omega, xq1));
        std::vector<Elem> ys;
        solver.solve_into(rhs, ys);
        for (Elem y : ys) out.push_back({x, y});
    });
}

}  // namespace hq::curves
