#include "hq/agc.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hq/error.hpp"
#include "parallel.hpp"

namespace hq::agc {

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == F.zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Elem inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == F.zero()) continue;
            const Elem f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows = r;
    m.data.resize(r * m.cols);
    return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return rref(F, m).size(); }

Matrix nullspace(const Field& F, const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref(F, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix ns(m.cols - pivots.size(), m.cols);
    std::size_t row = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        ns.at(row, f) = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) ns.at(row, pivots[i]) = F.neg(r.at(i, f));
        ++row;
    }
    return ns;
}

bool same_row_space(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) return false;
    Matrix stacked(a.rows + b.rows, a.cols);
    std::copy(a.data.begin(), a.data.end(), stacked.data.begin());
    std::copy(b.data.begin(), b.data.end(), stacked.data.begin() + static_cast<std::ptrdiff_t>(a.data.size()));
    const std::size_t ra = rank(F, a);
    return ra == rank(F, b) && ra == rank(F, std::move(stacked));
}

EvaluationCode build_CL(const curves::CurveSpec& spec, std::uint64_t gamma, std::optional<std::vector<AffinePoint>> D,
                        unsigned threads) {
    EvaluationCode code;
    code.spec = spec;
    code.gamma = gamma;
    code.basis = rr::rr_basis(spec, gamma);
    if (D) {
        if (D->empty()) throw UsageError("evaluation set D is empty");
        std::set<AffinePoint> seen;
        for (const auto& pt : *D) {
            if (!curves::on_curve(spec, pt)) throw UsageError("evaluation set D contains a point off the curve");
            if (!seen.insert(pt).second) throw UsageError("evaluation set D contains a repeated point");
        }
        code.D = std::move(*D);
    } else {
        code.D = curves::enumerate_points(spec).points;
    }
    const Field& F = spec.F();
    const std::size_t rows = code.basis.monomials.size();
    code.n = code.D.size();

    const auto columns = detail::parallel_collect<Elem>(code.n, threads, [&](std::uint64_t c, std::vector<Elem>& out) {
        const AffinePoint pt = code.D[c];
        for (const auto& [i, j] : code.basis.monomials) out.push_back(F.mul(F.pow(pt.x, i), F.pow(pt.y, j)));
    });
    code.G = Matrix(rows, code.n);
    for (std::size_t c = 0; c < code.n; ++c)
        for (std::size_t r = 0; r < rows; ++r) code.G.at(r, c) = columns[c * rows + r];
    code.k = rank(F, code.G);
    return code;
}

EvaluationCode dual_code(const EvaluationCode& code) {
    EvaluationCode dual;
    dual.spec = code.spec;
    dual.gamma = code.gamma;
    dual.D = code.D;
    dual.G = nullspace(code.spec.F(), code.G);
    dual.n = code.n;
    dual.k = dual.G.rows;
    return dual;
}

DesignedDistances designed_distances(std::uint64_t n, std::uint64_t gamma, std::uint64_t genus) {
    DesignedDistances d;
    d.d_CL = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(gamma);
    d.d_COmega = static_cast<std::int64_t>(gamma) - (2 * static_cast<std::int64_t>(genus) - 2);
    d.cl_vacuous = d.d_CL <= 0;
    d.omega_vacuous = d.d_COmega <= 0;
    return d;
}

DesignedDistances designed_distances(const EvaluationCode& code) {
    return designed_distances(code.n, code.gamma, code.spec.genus);
}

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::DesignedCL: return "designed_CL";
        case BoundKind::DesignedCOmega: return "designed_COmega";
        case BoundKind::GklCL: return "gkl_CL";
        case BoundKind::GklCOmega: return "gkl_COmega";
        case BoundKind::Brute: return "brute";
    }
    return "unknown";
}

BoundCertificate gkl_bound_CL(const numsg::NumericalSemigroup& s, std::uint64_t gamma, std::uint64_t n) {
    if (s.contains(gamma))
        throw CertificateRefused("gamma = " + std::to_string(gamma) + " is a non-gap; only the designed bound applies");
    std::uint64_t t = 0;
    while (t < gamma && s.is_gap(gamma - t - 1)) ++t;
    BoundCertificate c;
    c.kind = BoundKind::GklCL;
    c.value = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(gamma) + static_cast<std::int64_t>(t) + 1;
    c.witness.runs.push_back({gamma - t, t + 1});
    c.witness.checked.push_back("gamma - t, ..., gamma are gaps and gamma - t - 1 is a non-gap");
    c.witness.unchecked.push_back("order-sequence hypothesis: as cited, unchecked");
    return c;
}

std::int64_t gkl_COmega_value(std::uint64_t alpha, std::uint64_t beta, std::uint64_t t, std::uint64_t genus) {
    return static_cast<std::int64_t>(alpha + beta) - 1 - (2 * static_cast<std::int64_t>(genus) - 2) +
           static_cast<std::int64_t>(t) + 1;
}

BoundCertificate gkl_bound_COmega(const numsg::NumericalSemigroup& s, std::uint64_t alpha, std::uint64_t beta,
                                  std::uint64_t t, std::uint64_t genus) {
    if (t > beta) throw UsageError("t exceeds beta");
    std::vector<std::uint64_t> members;
    for (std::uint64_t v = alpha; v <= alpha + t; ++v)
        if (s.contains(v)) members.push_back(v);
    for (std::uint64_t v = beta - t; v <= beta; ++v)
        if (s.contains(v)) members.push_back(v);
    if (!members.empty()) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::string list;
        for (std::size_t i = 0; i < members.size() && i < 6; ++i) list += (i ? ", " : "") + std::to_string(members[i]);
        if (members.size() > 6) list += ", ...";
        throw CertificateRefused("gap-run hypothesis fails: " + std::to_string(members.size()) +
                                 " required values are non-gaps (" + list + "); Frobenius number is " +
                                 std::to_string(s.frobenius()));
    }
    BoundCertificate c;
    c.kind = BoundKind::GklCOmega;
    c.value = gkl_COmega_value(alpha, beta, t, genus);
    c.witness.runs.push_back({alpha, t + 1});
    c.witness.runs.push_back({beta - t, t + 1});
    c.witness.checked.push_back("alpha, ..., alpha + t are gaps");
    c.witness.checked.push_back("beta - t, ..., beta are gaps");
    c.witness.unchecked.push_back("order-sequence hypothesis: as cited, unchecked");
    return c;
}

BoundCertificate brute_min_distance(const EvaluationCode& code, std::uint64_t budget, unsigned threads) {
    const Field& F = code.spec.F();
    const std::size_t k = code.G.rows;
    const std::size_t n = code.n;
    if (k == 0) throw UsageError("code has dimension 0");
    Matrix G = code.G;
    rref(F, G);
    if (G.rows != k) throw UsageError("generator matrix rows are not independent");

    const std::uint64_t Q = F.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / Q) throw BudgetExceeded("brute force needs |F|^k > " + std::to_string(budget) + " messages");
        total *= Q;
    }

    // Messages with leading 1 at position lead and free coordinates after it.
    struct Best {
        std::uint64_t weight;
        std::vector<Elem> msg;
        std::uint64_t searched;
    };
    Best best{std::numeric_limits<std::uint64_t>::max(), {}, 0};
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t free = k - 1 - lead;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= Q;
        const auto parts = detail::parallel_collect<Best>(
            count, threads, [&, lead, free](std::uint64_t idx, std::vector<Best>& out) {
                std::vector<Elem> msg(k, F.zero());
                msg[lead] = F.one();
                std::uint64_t rest = idx;
                for (std::size_t i = 0; i < free; ++i) {
                    msg[k - 1 - i] = Elem{static_cast<std::uint32_t>(rest % Q)};
                    rest /= Q;
                }
                std::uint64_t w = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    Elem acc = F.zero();
                    for (std::size_t r = lead; r < k; ++r)
                        if (msg[r] != F.zero()) acc = F.add(acc, F.mul(msg[r], G.at(r, c)));
                    if (acc != F.zero()) ++w;
                }
                if (out.empty()) out.push_back({w, msg, 0});
                else if (w < out.back().weight) out.back() = {w, msg, out.back().searched};
                ++out.back().searched;
            });
        for (const auto& p : parts) {
            best.searched += p.searched;
            if (p.weight < best.weight) best = {p.weight, p.msg, best.searched};
        }
    }
    BoundCertificate c;
    c.kind = BoundKind::Brute;
    c.value = static_cast<std::int64_t>(best.weight);
    c.witness.codewords_searched = best.searched;
    c.witness.min_weight_message = best.msg;
    c.witness.checked.push_back("exhaustive over all nonzero messages up to scalars");
    return c;
}

}  // namespace hq::agc
