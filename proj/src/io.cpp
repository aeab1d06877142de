#include "hq/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hq/error.hpp"

namespace hq::io {

json context_json(const gf::Field& F) {
    return json{{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

json coeffs_json(const gf::Field& F, gf::Elem e) { return F.coeffs(e); }

json curve_json(const curves::CurveSpec& spec) {
    json j;
    j["family"] = curves::family_name(spec.family);
    j["p"] = spec.p;
    j["h"] = spec.h;
    j["d"] = spec.d ? json(*spec.d) : json(nullptr);
    j["omega"] = spec.omega ? coeffs_json(spec.F(), *spec.omega) : json(nullptr);
    j["genus"] = spec.genus;
    j["q"] = spec.q;
    j["strict"] = spec.strict;
    j["warnings"] = spec.warnings;
    return j;
}

json maximality_json(const curves::MaximalityReport& r) {
    return json{{"affine", r.affine},     {"expected_total", r.expected_total}, {"deficit", r.deficit},
                {"cleared_locus", r.cleared_locus}, {"deficit_exact", r.exact},  {"deficit_bound", r.bound},
                {"pass", r.pass}};
}

json semigroup_json(const numsg::NumericalSemigroup& s) {
    json runs = json::array();
    for (const auto& r : numsg::gap_runs(s)) runs.push_back({r.start, r.length});
    return json{{"generators", s.generators()},
                {"genus", s.genus()},
                {"frobenius", s.frobenius()},
                {"gaps", s.gaps()},
                {"runs", runs}};
}

json telescopic_json(const numsg::TelescopicReport& r) {
    json j{{"sequence", r.sequence}, {"d_chain", r.d_chain}, {"checks", r.checks}, {"telescopic", r.telescopic}};
    j["l_g"] = r.telescopic ? json(r.l_g) : json(nullptr);
    j["g"] = r.telescopic ? json(r.g) : json(nullptr);
    return j;
}

json basis_json(const rr::MonomialBasis& b) {
    json monos = json::array();
    for (const auto& [i, jexp] : b.monomials) monos.push_back({i, jexp});
    return json{{"m", b.m}, {"monomials", monos}, {"pole_orders", b.pole_orders}};
}

json weierstrass_json(const rr::WeierstrassData& w) {
    json j;
    if (w.semigroup) j["semigroup"] = semigroup_json(*w.semigroup);
    if (w.partial)
        j["partial"] = json{{"theorem_members", w.partial->theorem_members},
                            {"proof_members", w.partial->proof_members},
                            {"status", w.partial->status}};
    j["notes"] = w.notes;
    return j;
}

json certificate_json(const gf::Field& F, const agc::BoundCertificate& c) {
    json runs = json::array();
    for (const auto& r : c.witness.runs) runs.push_back({r.start, r.length});
    json w{{"gap_runs", runs}, {"checked", c.witness.checked}, {"unchecked", c.witness.unchecked}};
    if (c.kind == agc::BoundKind::Brute) {
        w["codewords_searched"] = c.witness.codewords_searched;
        json msg = json::array();
        for (auto e : c.witness.min_weight_message) msg.push_back(F.to_text(e));
        w["min_weight_message"] = msg;
    }
    return json{{"kind", agc::bound_kind_name(c.kind)}, {"value", c.value}, {"witness", w}};
}

json cover_json(const gf::Field& F, const cover::CoverReport& r) {
    json hist = json::array();
    for (const auto& [size, count] : r.fiber_histogram) hist.push_back({size, count});
    json bad = json::array();
    for (const auto& pt : r.violating_images) bad.push_back({F.to_text(pt.x), F.to_text(pt.y)});
    return json{{"source_points", r.source_points},
                {"admissible", r.admissible},
                {"excluded", r.excluded},
                {"violations", r.violations},
                {"images", r.images},
                {"branched_images", r.branched_images},
                {"group_order", r.group_order},
                {"fiber_histogram", hist},
                {"fibers_divide_group_order", r.fibers_divide_group_order},
                {"violating_images", bad}};
}

json code_report_json(std::uint64_t n, std::uint64_t k, std::uint64_t gamma, const agc::DesignedDistances& dd,
                      const std::vector<json>& certificates) {
    return json{{"n", n},
                {"k", k},
                {"gamma", gamma},
                {"designed_CL", dd.cl_vacuous ? json(nullptr) : json(dd.d_CL)},
                {"designed_COmega", dd.omega_vacuous ? json(nullptr) : json(dd.d_COmega)},
                {"certificates", certificates}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted) throw UsageError("unterminated quote in CSV record");
    return fields;
}

void write_points_csv(std::ostream& out, const gf::Field& F, const std::vector<curves::AffinePoint>& pts) {
    out << "x,y\n";
    for (const auto& pt : pts) out << csv_field(F.to_text(pt.x)) << ',' << csv_field(F.to_text(pt.y)) << '\n';
}

std::vector<curves::AffinePoint> read_points_csv(std::istream& in, const gf::Field& F) {
    std::string line;
    if (!std::getline(in, line) || line != "x,y") throw UsageError("point table must start with the header x,y");
    std::vector<curves::AffinePoint> pts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = csv_split(line);
        if (f.size() != 2) throw UsageError("point table record must have two fields");
        pts.push_back({F.parse(f[0]), F.parse(f[1])});
    }
    return pts;
}

void write_matrix_csv(std::ostream& out, const gf::Field& F, const agc::Matrix& m) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) out << (c ? "," : "") << csv_field(F.to_text(m.at(r, c)));
        out << '\n';
    }
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

std::string cache_stem(const curves::CurveSpec& spec) {
    std::string s = std::string(curves::family_name(spec.family)) + "_p" + std::to_string(spec.p) + "_h" +
                    std::to_string(spec.h) + "_d";
    return s + (spec.d ? std::to_string(*spec.d) : std::string("none"));
}

namespace {

json points_json(const gf::Field& F, const std::vector<curves::AffinePoint>& pts) {
    json a = json::array();
    for (const auto& pt : pts) a.push_back({F.to_text(pt.x), F.to_text(pt.y)});
    return a;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

CacheResult cached_points(const curves::CurveSpec& spec, const std::filesystem::path& dir,
                          const curves::EnumerationOptions& opts) {
    const gf::Field& F = spec.F();
    const auto stem = cache_stem(spec);
    const auto csv_path = dir / (stem + ".points.csv");
    const auto meta_path = dir / (stem + ".meta.json");
    json descriptor = curve_json(spec);
    descriptor.erase("warnings");
    descriptor.erase("strict");

    if (std::filesystem::exists(csv_path) && std::filesystem::exists(meta_path)) {
        try {
            const json meta = json::parse(read_file(meta_path));
            const std::string body = read_file(csv_path);
            const std::string hash = sha256_hex(body);
            if (meta.at("context") == context_json(F) && meta.at("curve") == descriptor &&
                meta.at("sha256").get<std::string>() == hash) {
                CacheResult r;
                std::istringstream in(body);
                r.table.points = read_points_csv(in, F);
                for (const auto& pair : meta.at("cleared_locus"))
                    r.table.cleared_locus.push_back({F.parse(pair.at(0).get<std::string>()),
                                                     F.parse(pair.at(1).get<std::string>())});
                if (std::is_sorted(r.table.points.begin(), r.table.points.end()) &&
                    r.table.points.size() == meta.at("count").get<std::size_t>()) {
                    r.hit = true;
                    r.hash = hash;
                    return r;
                }
            }
        } catch (const std::exception&) {
            // unreadable or stale cache: recompute
        }
    }

    CacheResult r;
    r.table = curves::enumerate_points(spec, opts);
    std::ostringstream body;
    write_points_csv(body, F, r.table.points);
    r.hash = sha256_hex(body.str());
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(csv_path, std::ios::binary);
        out << body.str();
    }
    json meta{{"context", context_json(F)},
              {"curve", descriptor},
              {"count", r.table.points.size()},
              {"cleared_locus", points_json(F, r.table.cleared_locus)},
              {"sha256", r.hash}};
    std::ofstream(meta_path, std::ios::binary) << meta.dump(2) << '\n';
    return r;
}

}  // namespace hq::io
