#pragma once

/**
 * @file agc.hpp
 * @brief One-point evaluation codes C_L(gamma P, D) on the C_ab models, their
 * duals, designed distances, gap-run bounds and exhaustive minimum distance.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/curves.hpp"
#include "hq/numsg.hpp"
#include "hq/rrspace.hpp"

namespace hq::agc {

using curves::AffinePoint;
using gf::Elem;
using gf::Field;

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduced row echelon form in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(const Field& F, Matrix& m);
std::size_t rank(const Field& F, Matrix m);
/// Basis of {v : m v = 0}, one vector per row.
Matrix nullspace(const Field& F, const Matrix& m);
bool same_row_space(const Field& F, const Matrix& a, const Matrix& b);

struct EvaluationCode {
    curves::CurveSpec spec;
    std::uint64_t gamma = 0;
    std::vector<AffinePoint> D;
    rr::MonomialBasis basis;
    Matrix G;
    std::size_t n = 0;
    std::size_t k = 0;
};

/// D defaults to all affine points in lexicographic order. Throws UsageError
/// for an empty D, off-curve points in D, or a family without a C_ab model.
EvaluationCode build_CL(const curves::CurveSpec& spec, std::uint64_t gamma,
                        std::optional<std::vector<AffinePoint>> D = std::nullopt, unsigned threads = 0);

/// Dual code: generator is a nullspace basis of G, dimension n - k.
EvaluationCode dual_code(const EvaluationCode& code);

struct DesignedDistances {
    std::int64_t d_CL = 0;      // n - gamma
    std::int64_t d_COmega = 0;  // gamma - (2g - 2)
    bool cl_vacuous = false;
    bool omega_vacuous = false;
};

DesignedDistances designed_distances(std::uint64_t n, std::uint64_t gamma, std::uint64_t genus);
DesignedDistances designed_distances(const EvaluationCode& code);

enum class BoundKind { DesignedCL, DesignedCOmega, GklCL, GklCOmega, Brute };
std::string bound_kind_name(BoundKind kind);

struct Witness {
    std::vector<numsg::GapRun> runs;
    std::vector<std::string> checked;
    std::vector<std::string> unchecked;
    std::uint64_t codewords_searched = 0;
    std::vector<Elem> min_weight_message;
};

struct BoundCertificate {
    BoundKind kind = BoundKind::DesignedCL;
    std::int64_t value = 0;
    Witness witness;
};

/// The gap-run hypothesis of a bound does not hold.
class CertificateRefused : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// t = largest with gamma, ..., gamma - t all gaps; value n - gamma + t + 1.
/// Throws CertificateRefused if gamma is a non-gap.
BoundCertificate gkl_bound_CL(const numsg::NumericalSemigroup& s, std::uint64_t gamma, std::uint64_t n);

/// alpha + beta - 1 - (2 genus - 2) + (t + 1), without checking anything.
std::int64_t gkl_COmega_value(std::uint64_t alpha, std::uint64_t beta, std::uint64_t t, std::uint64_t genus);
/// Requires alpha..alpha+t and beta-t..beta to be gaps; throws CertificateRefused otherwise.
BoundCertificate gkl_bound_COmega(const numsg::NumericalSemigroup& s, std::uint64_t alpha, std::uint64_t beta,
                                  std::uint64_t t, std::uint64_t genus);

/// Exact minimum distance over all nonzero messages, normalized so the first
/// nonzero coordinate is 1. Throws BudgetExceeded if |F|^k > budget.
BoundCertificate brute_min_distance(const EvaluationCode& code, std::uint64_t budget = 1ull << 24,
                                    unsigned threads = 0);

}  // namespace hq::agc
