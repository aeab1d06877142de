#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hq/cli.hpp"
#include "hq/io.hpp"

using namespace hq;
using curves::Family;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("hq_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("io_cli") {

TEST_CASE("csv fields") {
    CHECK(io::csv_field("1,0") == "\"1,0\"");
    CHECK(io::csv_field("plain") == "plain");
    CHECK(io::csv_field("a\"b") == "\"a\"\"b\"");
    const auto parts = io::csv_split("\"1,0\",\"a\"\"b\",x");
    CHECK(parts == std::vector<std::string>{"1,0", "a\"b", "x"});
}

TEST_CASE("point csv round trip") {
    const auto spec = curves::build_curve(Family::FamilyI, 5, 2, 13);
    const auto pts = curves::enumerate_points(spec).points;
    std::stringstream ss;
    io::write_points_csv(ss, spec.F(), pts);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "x,y");
    ss.seekg(0);
    CHECK(io::read_points_csv(ss, spec.F()) == pts);
}

TEST_CASE("sha256") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("point cache") {
    const auto dir = scratch_dir("cache");
    const auto spec = curves::build_curve(Family::FamilyIII, 11, 1, 5);
    CHECK(io::cache_stem(spec) == "III_p11_h1_d5");
    CHECK(io::cache_stem(curves::build_curve(Family::Hermitian, 5, 1, std::nullopt)) == "hermitian_p5_h1_dnone");
    const auto first = io::cached_points(spec, dir);
    CHECK_FALSE(first.hit);
    const auto second = io::cached_points(spec, dir);
    CHECK(second.hit);
    CHECK(second.hash == first.hash);
    CHECK(second.table.points == first.table.points);
    CHECK(second.table.cleared_locus == first.table.cleared_locus);

    // a corrupted table is detected by its hash and rebuilt
    const auto csv = dir / (io::cache_stem(spec) + ".points.csv");
    REQUIRE(std::filesystem::exists(csv));
    {
        std::ofstream f(csv, std::ios::app);
        f << "\"0,0\",\"0,0\"\n";
    }
    const auto third = io::cached_points(spec, dir);
    CHECK_FALSE(third.hit);
    CHECK(third.table.points == first.table.points);
    CHECK(io::cached_points(spec, dir).hit);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli({"--version"}).code == 0);
    CHECK(run_cli({"curve", "--family", "I", "-p", "7", "-h", "2", "-d", "5"}).code == 0);
    const auto herm = run_cli({"curve", "--family", "H", "-p", "5", "-h", "1"});
    CHECK(herm.code == 0);
    CHECK(herm.out.find("\"affine\": 125") != std::string::npos);
    CHECK(run_cli({"curve", "--family", "II", "-p", "7", "-h", "2", "-d", "5"}).code == 1);
    CHECK(run_cli({"curve", "--family", "I", "-p", "7", "-h", "2"}).code == 1);
    CHECK(run_cli({"semigroup", "2", "4"}).code == 1);
    CHECK(run_cli({"semigroup", "7", "10"}).code == 0);
    CHECK(run_cli({"reproduce", "3"}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"verify", "--family", "I", "-p", "5", "-h", "2", "-d", "13"}).code == 0);
    CHECK(run_cli({"verify", "--family", "I", "-p", "5", "-h", "2", "-d", "13", "--inject-off-curve", "10"}).code == 2);
}

TEST_CASE("cli code subcommand") {
    const auto r = run_cli({"code", "--family", "I", "-p", "7", "-h", "2", "-d", "5", "--gamma", "0", "--n", "10",
                            "--brute"});
    CHECK(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["code"]["k"] == 1);
    bool found = false;
    for (const auto& c : j["code"]["certificates"])
        if (c["kind"] == "brute") {
            CHECK(c["value"] == 10);
            found = true;
        }
    CHECK(found);
    const auto refused = run_cli({"code", "--family", "I", "-p", "7", "-h", "2", "-d", "5", "--gamma", "14",
                                  "--bounds"});
    CHECK(refused.code == 0);
    const auto omega = run_cli({"semigroup", "25", "42"});
    CHECK(omega.code == 0);
}

TEST_CASE("reproduce outputs are deterministic") {
    const auto dir = scratch_dir("repro");
    cli::ReproduceOptions opts{dir.string(), 1};
    const auto a = cli::reproduce(1, opts);
    opts.threads = 3;
    const auto b = cli::reproduce(1, opts);
    CHECK(a.all_pass);
    CHECK(cli::strip_timing(a.report).dump() == cli::strip_timing(b.report).dump());
    const auto two = cli::reproduce(2, opts);
    CHECK_FALSE(two.all_pass);
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
