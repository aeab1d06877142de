#include "hq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hq/agc.hpp"
#include "hq/cover.hpp"
#include "hq/error.hpp"

namespace hq::cli {

using io::json;

namespace {

struct CurveFlags {
    std::string family;
    std::uint32_t p = 0;
    std::uint32_t h = 0;
    std::uint32_t d = 0;  // 0: absent
    bool strict = false;

    std::optional<std::uint32_t> d_value() const { return d ? std::optional<std::uint32_t>(d) : std::nullopt; }
};

struct Common {
    std::string cache_dir;  // empty: fall back to the environment
    std::string format = "json";
    unsigned threads = 0;
    std::uint64_t max_field = 1ull << 24;
    std::uint64_t max_scan = 1ull << 30;

    std::optional<std::string> cache() const {
        if (!cache_dir.empty()) return cache_dir;
        if (const char* env = std::getenv(kCacheEnv); env && *env) return std::string(env);
        return std::nullopt;
    }
    curves::EnumerationOptions enum_opts() const { return {max_field, max_scan, threads}; }
};

void add_curve_flags(CLI::App* app, CurveFlags& f, bool required) {
    auto* fam = app->add_option("--family", f.family,
                                "hermitian, intermediate_center, intermediate_noncenter, I, II or III");
    auto* p = app->add_option("-p,--prime", f.p, "characteristic p");
    auto* h = app->add_option("-h,--exponent", f.h, "q = p^h");
    app->add_option("-d,--divisor", f.d, "prime d for families I, II, III")->check(CLI::PositiveNumber);
    app->add_flag("--strict", f.strict, "reject p < 5 and d < 5 instead of warning");
    if (required) {
        fam->required();
        p->required();
        h->required();
    }
}

void add_common_flags(CLI::App* app, Common& c) {
    app->add_option("--cache-dir", c.cache_dir, std::string("point-table cache (default $") + kCacheEnv + ")");
    app->add_option("--format", c.format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
    app->add_option("--threads", c.threads, "worker threads (0: all cores)");
    app->add_option("--max-field", c.max_field, "largest field size to enumerate");
    app->add_option("--max-scan", c.max_scan, "largest (field size)^2 for root scans");
}

curves::CurveSpec make_spec(const CurveFlags& f) {
    return curves::build_curve(curves::parse_family(f.family), f.p, f.h, f.d_value(), f.strict);
}

json parameters_json(const CurveFlags& f) {
    json j{{"family", f.family}, {"p", f.p}, {"h", f.h}};
    j["d"] = f.d_value() ? json(*f.d_value()) : json(nullptr);
    j["strict"] = f.strict;
    return j;
}

json metadata(json parameters, const curves::CurveSpec* spec, double seconds) {
    json m;
    m["tool"] = "hq";
    m["version"] = kVersion;
    m["parameters"] = std::move(parameters);
    m["modulus"] = spec ? json(spec->F().modulus()) : json(nullptr);
    m["omega"] = spec && spec->omega ? io::coeffs_json(spec->F(), *spec->omega) : json(nullptr);
    m["timing"] = json{{"seconds", seconds}};
    return m;
}

struct Points {
    curves::PointTable table;
    json cache = nullptr;
};

Points load_points(const curves::CurveSpec& spec, const std::optional<std::string>& cache_dir,
                   const curves::EnumerationOptions& opts) {
    Points pts;
    if (cache_dir) {
        auto r = io::cached_points(spec, *cache_dir, opts);
        pts.table = std::move(r.table);
        pts.cache = json{{"dir", *cache_dir}, {"stem", io::cache_stem(spec)}, {"hit", r.hit}, {"sha256", r.hash}};
    } else {
        pts.table = curves::enumerate_points(spec, opts);
    }
    return pts;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        return;
    }
    if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        return;
    }
    if (j.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        rows.emplace_back(prefix, s);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

void emit(std::ostream& out, const json& report, const std::string& format) {
    if (format == "json") {
        out << report.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    if (format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << io::csv_field(k) << ',' << io::csv_field(v) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

json check(const std::string& name, const json& expected, const json& actual, const std::string& source) {
    return json{{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}, {"source", source}};
}

json refused_json(agc::BoundKind kind, const std::string& why) {
    return json{{"kind", agc::bound_kind_name(kind)}, {"value", nullptr}, {"witness", json{{"refused", why}}}};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------------------

int cmd_curve(const CurveFlags& f, const Common& c, const std::string& points_out, std::ostream& out) {
    const auto t0 = Clock::now();
    const auto spec = make_spec(f);
    auto pts = load_points(spec, c.cache(), c.enum_opts());
    const auto audit = curves::maximality_audit(spec, pts.table);
    if (!points_out.empty()) {
        std::ofstream file(points_out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + points_out);
        io::write_points_csv(file, spec.F(), pts.table.points);
    }
    json report;
    report["metadata"] = metadata(parameters_json(f), &spec, seconds_since(t0));
    report["curve"] = io::curve_json(spec);
    report["maximality"] = io::maximality_json(audit);
    report["cache"] = pts.cache;
    report["status"] = audit.pass ? "PASS" : "FAIL";
    emit(out, report, c.format);
    return audit.pass ? 0 : 2;
}

int cmd_semigroup(const std::vector<std::uint64_t>& gens, bool telescopic, const CurveFlags& f, const Common& c,
                  std::ostream& out) {
    const auto t0 = Clock::now();
    json report;
    json params{{"generators", gens}, {"telescopic", telescopic}};
    std::optional<curves::CurveSpec> spec;
    if (!f.family.empty()) {
        if (!gens.empty()) throw UsageError("give either generators or --family, not both");
        spec = make_spec(f);
        params["curve"] = parameters_json(f);
        const auto w = rr::weierstrass_semigroup(*spec);
        report["curve"] = io::curve_json(*spec);
        report["weierstrass"] = io::weierstrass_json(w);
        if (w.semigroup)
            report["genus_check"] = json{{"curve_genus", spec->genus},
                                         {"semigroup_genus", w.semigroup->genus()},
                                         {"pass", spec->genus == w.semigroup->genus()}};
        if (spec->family == curves::Family::IntermediateNoncenter) {
            const auto pc = rr::proof_sequence_check(*spec);
            report["proof_sequence"] = json{{"telescopic", io::telescopic_json(pc.report)},
                                            {"closed_form_l_g", pc.closed_form_l_g},
                                            {"semigroup_genus", pc.semigroup_genus},
                                            {"curve_genus", pc.curve_genus},
                                            {"pass", pc.matches}};
        }
    } else {
        if (gens.empty()) throw UsageError("semigroup needs generators or --family");
        const auto s = numsg::from_generators(gens);
        report["semigroup"] = io::semigroup_json(s);
        if (telescopic) {
            const auto t = numsg::is_telescopic(gens);
            json tj = io::telescopic_json(t);
            if (t.telescopic)
                tj["closed_form_check"] = json{{"frobenius", s.frobenius()},
                                               {"genus", s.genus()},
                                               {"pass", t.l_g == s.frobenius() &&
                                                            static_cast<std::uint64_t>(t.g) == s.genus()}};
            report["telescopic"] = tj;
        }
    }
    json full;
    full["metadata"] = metadata(params, spec ? &*spec : nullptr, seconds_since(t0));
    for (auto& [k, v] : report.items()) full[k] = v;
    emit(out, full, c.format);
    return 0;
}

struct CodeFlags {
    std::uint64_t gamma = 0;
    CLI::Option* gamma_opt = nullptr;
    std::uint64_t n = 0;
    CLI::Option* n_opt = nullptr;
    bool bounds = false;
    bool brute = false;
    std::uint64_t budget = 1ull << 24;
    bool omega = false;
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    std::uint64_t t = 0;
    CLI::Option* t_opt = nullptr;
    std::string matrix_out;
};

int cmd_code(const CurveFlags& f, const CodeFlags& cf, const Common& c, std::ostream& out) {
    const auto t0 = Clock::now();
    const auto spec = make_spec(f);
    const auto w = rr::weierstrass_semigroup(spec);
    if (!w.semigroup) throw UsageError("codes are built only on families with a C_ab model");
    const auto& S = *w.semigroup;

    std::uint64_t gamma = cf.gamma;
    if (cf.omega) {
        if (cf.alpha == 0 || cf.beta == 0) throw UsageError("--omega-bound needs --alpha and --beta");
        if (cf.gamma_opt->count() && cf.gamma != cf.alpha + cf.beta - 1)
            throw UsageError("--gamma must equal alpha + beta - 1 with --omega-bound");
        gamma = cf.alpha + cf.beta - 1;
    } else if (!cf.gamma_opt->count()) {
        throw UsageError("--gamma is required");
    }

    auto pts = load_points(spec, c.cache(), c.enum_opts());
    std::vector<curves::AffinePoint> D = pts.table.points;
    const std::uint64_t n_max = D.size();
    if (cf.n_opt->count()) {
        if (cf.n == 0 || cf.n > D.size())
            throw UsageError("--n must be between 1 and " + std::to_string(D.size()));
        D.resize(cf.n);
    }
    const std::uint64_t n = D.size();
    const std::uint64_t rows = S.count_members_upto(gamma);

    json params = parameters_json(f);
    params["gamma"] = gamma;
    params["n"] = cf.n_opt->count() ? json(cf.n) : json(nullptr);

    std::optional<agc::EvaluationCode> code;
    std::uint64_t k = 0;
    std::string k_source;
    constexpr std::uint64_t kMatrixLimit = 1ull << 25;
    if (rows * n <= kMatrixLimit || cf.brute || !cf.matrix_out.empty()) {
        code = agc::build_CL(spec, gamma, D, c.threads);
        k = code->k;
        k_source = "rank of generator matrix";
    } else if (gamma < n) {
        k = rows;
        k_source = "non-gaps up to gamma (gamma < n); generator matrix not assembled";
    } else {
        throw BudgetExceeded("generator matrix of " + std::to_string(rows) + " x " + std::to_string(n) +
                             " is too large; pass a smaller --n");
    }
    if (!cf.matrix_out.empty()) {
        std::ofstream file(cf.matrix_out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + cf.matrix_out);
        io::write_matrix_csv(file, spec.F(), code->G);
    }

    const auto dd = agc::designed_distances(n, gamma, spec.genus);
    std::vector<json> certs;
    bool failed = false;
    std::int64_t cl_bound = dd.cl_vacuous ? 0 : dd.d_CL;
    if (cf.bounds) {
        if (!dd.cl_vacuous) certs.push_back(json{{"kind", "designed_CL"}, {"value", dd.d_CL}, {"witness", "n - gamma"}});
        if (!dd.omega_vacuous)
            certs.push_back(json{{"kind", "designed_COmega"}, {"value", dd.d_COmega}, {"witness", "gamma - (2g - 2)"}});
        try {
            const auto g = agc::gkl_bound_CL(S, gamma, n);
            certs.push_back(io::certificate_json(spec.F(), g));
            cl_bound = std::max(cl_bound, g.value);
        } catch (const agc::CertificateRefused& e) {
            certs.push_back(refused_json(agc::BoundKind::GklCL, e.what()));
        }
    }
    json omega_report = nullptr;
    if (cf.omega) {
        std::uint64_t t = cf.t;
        if (!cf.t_opt->count()) {
            t = 0;
            auto holds = [&](std::uint64_t tt) {
                if (tt > cf.beta) return false;
                for (std::uint64_t v = 0; v <= tt; ++v)
                    if (S.contains(cf.alpha + v) || S.contains(cf.beta - v)) return false;
                return true;
            };
            while (holds(t + 1)) ++t;
        }
        omega_report = json{{"alpha", cf.alpha},
                            {"beta", cf.beta},
                            {"t", t},
                            {"formula_value", agc::gkl_COmega_value(cf.alpha, cf.beta, t, spec.genus)},
                            {"maximal_n", n_max}};
        try {
            certs.push_back(io::certificate_json(spec.F(), agc::gkl_bound_COmega(S, cf.alpha, cf.beta, t, spec.genus)));
        } catch (const agc::CertificateRefused& e) {
            certs.push_back(refused_json(agc::BoundKind::GklCOmega, e.what()));
            failed = true;
        }
    }
    json brute_check = nullptr;
    if (cf.brute) {
        const auto b = agc::brute_min_distance(*code, cf.budget, c.threads);
        certs.push_back(io::certificate_json(spec.F(), b));
        const bool consistent = b.value >= cl_bound && static_cast<std::uint64_t>(b.value) + code->k <= n + 1;
        brute_check = json{{"exact_distance", b.value}, {"issued_bound", cl_bound}, {"singleton_ok", b.value + code->k <= n + 1},
                           {"pass", consistent}};
        failed = failed || !consistent;
    }

    json report;
    report["metadata"] = metadata(params, &spec, 0.0);
    report["curve"] = io::curve_json(spec);
    report["semigroup"] = io::semigroup_json(S);
    report["code"] = io::code_report_json(n, k, gamma, dd, certs);
    report["code"]["k_source"] = k_source;
    report["code"]["two_g_minus_two"] = 2 * static_cast<std::int64_t>(spec.genus) - 2;
    report["omega_bound"] = omega_report;
    report["brute_check"] = brute_check;
    report["cache"] = pts.cache;
    report["notes"] = w.notes;
    report["metadata"]["timing"]["seconds"] = seconds_since(t0);
    emit(out, report, c.format);
    return failed ? 2 : 0;
}

int cmd_verify(const CurveFlags& f, std::uint64_t inject, const Common& c, std::ostream& out) {
    const auto t0 = Clock::now();
    const auto spec = make_spec(f);
    const auto model = cover::source_model(spec);
    auto sources = curves::enumerate_hermitian(model, c.enum_opts());
    const gf::Field& F = spec.F();
    if (inject > sources.size()) throw UsageError("cannot inject more points than the source curve has");
    for (std::uint64_t i = 0; i < inject; ++i) sources[i].y = F.add(sources[i].y, F.primitive());
    const auto r = cover::verify_points(spec, sources);
    json params = parameters_json(f);
    params["inject_off_curve"] = inject;
    json report;
    report["metadata"] = metadata(params, &spec, seconds_since(t0));
    report["curve"] = io::curve_json(spec);
    report["source_form"] = cover::source_form(spec.family) == curves::HermitianForm::Plus ? "plus" : "minus";
    report["cover"] = io::cover_json(F, r);
    const bool pass = r.violations == 0 && r.fibers_divide_group_order;
    report["status"] = pass ? "PASS" : "FAIL";
    emit(out, report, c.format);
    return pass ? 0 : 2;
}

}  // namespace

// ---------------------------------------------------------------------------

json strip_timing(json report) {
    if (report.contains("metadata")) report["metadata"].erase("timing");
    return report;
}

namespace {

const std::vector<std::uint64_t> kGaps_7_10{1,  2,  3,  4,  5,  6,  8,  9,  11, 12, 13, 15, 16, 18,
                                               19, 22, 23, 25, 26, 29, 32, 33, 36, 39, 43, 46, 53};

ReproduceResult reproduce_1(const ReproduceOptions& opts, Clock::time_point t0) {
    const auto spec = curves::build_curve(curves::Family::FamilyI, 7, 2, 5);
    auto pts = load_points(spec, opts.cache_dir, {1ull << 24, 1ull << 30, opts.threads});
    const auto audit = curves::maximality_audit(spec, pts.table);
    const auto S = *rr::weierstrass_semigroup(spec).semigroup;
    const std::uint64_t gamma = 13;
    const auto code = agc::build_CL(spec, gamma, pts.table.points, opts.threads);
    const auto dd = agc::designed_distances(code);
    const auto gkl = agc::gkl_bound_CL(S, gamma, code.n);

    std::vector<json> checks;
    checks.push_back(check("genus", 27, spec.genus, "stated"));
    checks.push_back(check("semigroup generators", std::vector<std::uint64_t>{7, 10}, S.generators(), "stated"));
    checks.push_back(check("gap sequence", kGaps_7_10, S.gaps(), "stated"));
    checks.push_back(check("semigroup genus equals curve genus", spec.genus, S.genus(), "computed"));
    checks.push_back(check("affine points", 5047, audit.affine, "computed"));
    checks.push_back(check("total points q^2+2gq+1", 5048, audit.expected_total, "computed"));
    checks.push_back(check("deficit", 1, audit.deficit, "computed"));
    checks.push_back(check("dimension k", 3, code.k, "computed"));
    checks.push_back(check("designed distance d'", 5034, dd.d_CL, "stated"));
    checks.push_back(check("improved distance d*", 5037, gkl.value, "stated"));
    checks.push_back(check("gap run at gamma", json::array({11, 13}), json::array({gkl.witness.runs[0].start, gkl.witness.runs[0].last()}), "stated"));

    ReproduceResult r;
    r.all_pass = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["pass"].get<bool>(); });
    r.report["metadata"] = metadata(json{{"example", 1}}, &spec, 0.0);
    r.report["curve"] = io::curve_json(spec);
    r.report["maximality"] = io::maximality_json(audit);
    r.report["semigroup"] = io::semigroup_json(S);
    r.report["code"] = io::code_report_json(code.n, code.k, gamma, dd,
                                            {json{{"kind", "designed_CL"}, {"value", dd.d_CL}, {"witness", "n - gamma"}},
                                             io::certificate_json(spec.F(), gkl)});
    r.report["checks"] = checks;
    r.report["all_pass"] = r.all_pass;
    r.report["metadata"]["timing"]["seconds"] = seconds_since(t0);
    return r;
}

ReproduceResult reproduce_2(const ReproduceOptions& opts, Clock::time_point t0) {
    const auto spec = curves::build_curve(curves::Family::FamilyI, 5, 3, 3, false);
    auto pts = load_points(spec, opts.cache_dir, {1ull << 24, 1ull << 30, opts.threads});
    const auto audit = curves::maximality_audit(spec, pts.table);
    const auto S = *rr::weierstrass_semigroup(spec).semigroup;
    const std::uint64_t alpha = 1022, beta = 1072, t = 8;
    const std::uint64_t gamma = alpha + beta - 1;
    const auto dd = agc::designed_distances(audit.affine, gamma, spec.genus);

    std::vector<json> checks;
    checks.push_back(check("semigroup generators", std::vector<std::uint64_t>{25, 42}, S.generators(), "stated"));
    checks.push_back(check("genus", 492, spec.genus, "stated"));
    checks.push_back(check("semigroup genus equals curve genus", spec.genus, S.genus(), "computed"));
    checks.push_back(check("Frobenius number", 983, S.frobenius(), "stated"));
    auto run_check = [&](std::uint64_t lo, std::uint64_t hi) {
        json nongaps = json::array();
        for (auto v = lo; v <= hi; ++v)
            if (S.contains(v)) nongaps.push_back(v);
        return check("gap run " + std::to_string(lo) + ".." + std::to_string(hi) + " (non-gaps inside)", json::array(),
                     nongaps, "stated");
    };
    checks.push_back(run_check(1022, 1030));
    checks.push_back(run_check(1063, 1072));
    checks.push_back(check("2g-2", 982, 2 * static_cast<std::int64_t>(spec.genus) - 2, "stated"));
    checks.push_back(check("gamma = alpha+beta-1", 2093, gamma, "stated"));
    checks.push_back(check("designed distance d'", 1112, dd.d_COmega, "stated"));
    json cert;
    try {
        const auto c = agc::gkl_bound_COmega(S, alpha, beta, t, spec.genus);
        cert = io::certificate_json(spec.F(), c);
        checks.push_back(check("improved distance d* (certified)", 1120, c.value, "stated"));
    } catch (const agc::CertificateRefused& e) {
        cert = refused_json(agc::BoundKind::GklCOmega, e.what());
        checks.push_back(check("improved distance d* (certified)", 1120, nullptr, "stated"));
    }
    checks.push_back(check("improved distance d* (formula only)", 1120,
                           agc::gkl_COmega_value(alpha, beta, t, spec.genus), "stated"));
    checks.push_back(check("affine points", 138625, audit.affine, "computed"));
    checks.push_back(check("total points q^2+2gq+1", 138626, audit.expected_total, "computed"));
    checks.push_back(check("deficit", 1, audit.deficit, "computed"));

    ReproduceResult r;
    r.all_pass = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["pass"].get<bool>(); });
    r.report["metadata"] = metadata(json{{"example", 2}}, &spec, 0.0);
    r.report["curve"] = io::curve_json(spec);
    r.report["maximality"] = io::maximality_json(audit);
    json sg = io::semigroup_json(S);
    sg.erase("gaps");
    sg["gaps_listed"] = "omitted; see runs";
    r.report["semigroup"] = sg;
    json code = io::code_report_json(audit.affine, S.count_members_upto(gamma), gamma, dd, {cert});
    code["n_note"] = "n is the maximal possible |D|; the differential bound does not depend on it";
    code["k_source"] = "non-gaps up to gamma (gamma < n)";
    r.report["code"] = code;
    r.report["checks"] = checks;
    r.report["all_pass"] = r.all_pass;
    r.report["metadata"]["timing"]["seconds"] = seconds_since(t0);
    return r;
}

}  // namespace

ReproduceResult reproduce(int example, const ReproduceOptions& opts) {
    const auto t0 = Clock::now();
    if (example == 1) return reproduce_1(opts, t0);
    if (example == 2) return reproduce_2(opts, t0);
    throw UsageError("unknown example " + std::to_string(example) + "; choose 1 or 2");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal quotient curves of the Hermitian curve: points, semigroups and codes", "hq"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common common;
    CurveFlags curve_flags;

    auto* curve = app.add_subcommand("curve", "build a curve and audit maximality");
    curve->set_help_flag("--help", "print help");
    add_curve_flags(curve, curve_flags, true);
    add_common_flags(curve, common);
    std::string points_out;
    curve->add_option("--points-out", points_out, "write the affine point table as CSV");

    auto* semi = app.add_subcommand("semigroup", "numerical semigroup report");
    semi->set_help_flag("--help", "print help");
    std::vector<std::uint64_t> gens;
    bool telescopic = false;
    semi->add_option("generators", gens, "generators");
    semi->add_flag("--telescopic", telescopic, "check the sequence for telescopy in the given order");
    add_curve_flags(semi, curve_flags, false);
    add_common_flags(semi, common);

    auto* code = app.add_subcommand("code", "one-point code parameters and bounds");
    code->set_help_flag("--help", "print help");
    add_curve_flags(code, curve_flags, true);
    add_common_flags(code, common);
    CodeFlags cf;
    cf.gamma_opt = code->add_option("--gamma", cf.gamma, "pole bound");
    cf.n_opt = code->add_option("--n", cf.n, "use the first n affine points");
    code->add_flag("--bounds", cf.bounds, "designed and gap-run bounds");
    code->add_flag("--brute", cf.brute, "exhaustive minimum distance");
    code->add_option("--budget", cf.budget, "message budget for --brute");
    code->add_flag("--omega-bound", cf.omega, "gap-run bound for the dual code");
    code->add_option("--alpha", cf.alpha, "start of the first gap run");
    code->add_option("--beta", cf.beta, "end of the second gap run");
    cf.t_opt = code->add_option("--t", cf.t, "run length minus one (default: largest valid)");
    code->add_option("--matrix-out", cf.matrix_out, "write the generator matrix as CSV");

    auto* repro = app.add_subcommand("reproduce", "rerun a worked example and check every number");
    repro->set_help_flag("--help", "print help");
    int example = 0;
    repro->add_option("example", example, "1 or 2")->required();
    add_common_flags(repro, common);

    auto* verify = app.add_subcommand("verify", "check the quotient map pointwise");
    verify->set_help_flag("--help", "print help");
    add_curve_flags(verify, curve_flags, true);
    add_common_flags(verify, common);
    std::uint64_t inject = 0;
    verify->add_option("--inject-off-curve", inject, "perturb this many source points (negative control)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (*curve) return cmd_curve(curve_flags, common, points_out, out);
        if (*semi) return cmd_semigroup(gens, telescopic, curve_flags, common, out);
        if (*code) return cmd_code(curve_flags, cf, common, out);
        if (*verify) return cmd_verify(curve_flags, inject, common, out);
        if (*repro) {
            ReproduceOptions ro{common.cache(), common.threads};
            auto r = reproduce(example, ro);
            emit(out, r.report, common.format);
            return r.all_pass ? 0 : 2;
        }
    } catch (const AuditFailure& e) {
        err << "audit failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace hq::cli
