#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV serialization and the on-disk point-table cache.
 */

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hq/agc.hpp"
#include "hq/cover.hpp"
#include "hq/curves.hpp"
#include "hq/numsg.hpp"
#include "hq/rrspace.hpp"

namespace hq::io {

using json = nlohmann::ordered_json;

json context_json(const gf::Field& F);
json coeffs_json(const gf::Field& F, gf::Elem e);
json curve_json(const curves::CurveSpec& spec);
json maximality_json(const curves::MaximalityReport& r);
json semigroup_json(const numsg::NumericalSemigroup& s);
json telescopic_json(const numsg::TelescopicReport& r);
json basis_json(const rr::MonomialBasis& b);
json weierstrass_json(const rr::WeierstrassData& w);
json certificate_json(const gf::Field& F, const agc::BoundCertificate& c);
json cover_json(const gf::Field& F, const cover::CoverReport& r);

/// Code report; designed values are reported as null when vacuous.
json code_report_json(std::uint64_t n, std::uint64_t k, std::uint64_t gamma, const agc::DesignedDistances& dd,
                      const std::vector<json>& certificates);

/// RFC 4180 field: quoted when it contains a comma or a quote.
std::string csv_field(const std::string& s);
/// Splits one CSV record, honoring quotes.
std::vector<std::string> csv_split(const std::string& line);

void write_points_csv(std::ostream& out, const gf::Field& F, const std::vector<curves::AffinePoint>& pts);
std::vector<curves::AffinePoint> read_points_csv(std::istream& in, const gf::Field& F);
void write_matrix_csv(std::ostream& out, const gf::Field& F, const agc::Matrix& m);

std::string sha256_hex(const std::string& data);

std::string cache_stem(const curves::CurveSpec& spec);

struct CacheResult {
    curves::PointTable table;
    bool hit = false;
    std::string hash;
};

/// Loads the point table from dir when the descriptor and hash match,
/// otherwise enumerates and rewrites the cache files.
CacheResult cached_points(const curves::CurveSpec& spec, const std::filesystem::path& dir,
                          const curves::EnumerationOptions& opts = {});

}  // namespace hq::io
