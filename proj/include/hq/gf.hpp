#pragma once

/**
 * @file gf.hpp
 * @brief Arithmetic in F_p and F_{p^k} as a single extension of the prime field.
 *
 * Elements are handled as lightweight handles (Elem) whose meaning is fixed by
 * the Field they were produced by. The handle value is the rank of the
 * coefficient vector (c_0, ..., c_{k-1}) in lexicographic order with c_0 most
 * significant, i.e.
 *
 *     value = c_0 * p^{k-1} + c_1 * p^{k-2} + ... + c_{k-1}
 *
 * so integer comparison of handles equals lexicographic comparison of
 * coefficient lists. Coefficient c_i multiplies the i-th power of the class of
 * X modulo the field modulus.
 *
 * Small fields (up to 2^20 elements) use log/antilog tables for products and
 * split digit tables for sums; larger ones fall back to polynomial arithmetic.
 *
 * FieldElement is the checked, operator-friendly counterpart that carries its
 * field and rejects mixing elements of different fields.
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hq::gf {

struct Elem {
    std::uint32_t v = 0;

    constexpr auto operator<=>(const Elem&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Builds F_{p^k} with the lexicographically least monic irreducible modulus.
FieldPtr make_field(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

namespace poly {
/// Dense polynomials over F_p, constant term first, no trailing zeros
/// (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint32_t>;

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
/// Ben-Or style test: gcd(X^{p^m} - X, f) = 1 for all m <= deg f / 2.
bool is_irreducible(const Poly& f, std::uint32_t p);
}  // namespace poly

class Field {
  public:
    Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t size() const { return size_; }
    /// Monic modulus, constant term first, k + 1 entries.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{pw_[0]}; }
    /// Embeds an integer into the prime subfield.
    Elem from_int(std::int64_t n) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;
    std::vector<std::uint32_t> coeffs(Elem e) const;
    /// The class of X^j, i.e. the j-th basis vector (j < k).
    Elem basis(std::uint32_t j) const;
    bool contains(Elem e) const { return e.v < size_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// Scalar multiple by an integer (prime field action).
    Elem scale(Elem a, std::uint32_t s) const;

    /// e^{p^i}
    Elem frobenius(Elem e, std::uint32_t i) const;
    /// sum_{i=0}^{m-1} e^{p^i}; m = k gives the absolute trace.
    Elem trace(Elem e, std::uint32_t m) const;
    Elem trace(Elem e) const { return trace(e, k_); }
    /// True iff e lies in the subfield of order p^m (m | k).
    bool in_subfield(Elem e, std::uint32_t m) const { return frobenius(e, m) == e; }
    /// Value of a prime-subfield element as an integer in [0, p).
    std::uint32_t prime_value(Elem e) const;
    bool in_prime_field(Elem e) const { return e.v % pw_[0] == 0; }

    /// Least (lexicographic) generator of the multiplicative group.
    Elem primitive() const { return primitive_; }
    std::uint64_t order(Elem e) const;

    std::string to_text(Elem e) const;
    Elem parse(std::string_view text) const;

    bool same_as(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

  private:
    Elem mul_slow(Elem a, Elem b) const;
    Elem pow_slow(Elem a, std::uint64_t e) const;
    Elem add_slow(Elem a, Elem b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t size_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pw_;  // pw_[i] = p^{k-1-i}, weight of c_i

    // split addition tables: value = hi * lo_size_ + lo
    std::uint32_t lo_size_ = 0;
    std::uint32_t hi_size_ = 0;
    std::vector<std::uint32_t> add_lo_;
    std::vector<std::uint32_t> add_hi_;
    std::vector<std::uint32_t> neg_;

    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;  // length 2(size-1)
    Elem primitive_{};
};

/// Element bound to its field; arithmetic between different fields throws.
class FieldElement {
  public:
    FieldElement(FieldPtr field, Elem e);

    const FieldPtr& field() const { return field_; }
    Elem raw() const { return e_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(e_); }
    bool is_zero() const { return e_.v == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius(std::uint32_t i) const;

    bool operator==(const FieldElement& o) const;
    std::string to_text() const { return field_->to_text(e_); }

  private:
    const Field& common(const FieldElement& o) const;

    FieldPtr field_;
    Elem e_;
};

/// L(Y) = sum_i c_i * Y^{p^{e_i}}, an F_p-linear map of the field.
struct AdditiveOperator {
    struct Term {
        Elem coeff;
        std::uint32_t frob;
    };
    std::vector<Term> terms;

    Elem apply(const Field& f, Elem y) const;
};

/// Solves L(y) = c for a fixed operator by one elimination over F_p; each
/// solve is then a matrix-vector product plus a kernel sweep.
class AdditiveSolver {
  public:
    AdditiveSolver(const Field& f, const AdditiveOperator& op);

    /// All y with L(y) = c, ascending.
    std::vector<Elem> solve(Elem c) const;
    /// Appends solutions to out (ascending within the call). Returns count.
    std::size_t solve_into(Elem c, std::vector<Elem>& out) const;
    std::uint32_t kernel_dimension() const { return k_ - rank_; }
    const std::vector<Elem>& kernel() const { return kernel_; }

  private:
    const Field* f_;
    std::uint32_t k_;
    std::uint32_t rank_ = 0;
    // transform_ (k x k) maps coefficient vectors of c to the echelon basis
    std::vector<std::uint32_t> transform_;
    std::vector<std::uint32_t> pivot_col_;  // per pivot row
    std::vector<Elem> kernel_;              // full kernel, ascending
};

std::vector<Elem> additive_solve(const Field& f, const AdditiveOperator& op, Elem c);

/// omega with omega^{q-1} = -1 where |F| = q^2, taken as g^{(q+1)/2} for the
/// least primitive element g. Requires odd p and even k.
Elem find_omega(const Field& f);

/// Least element of exact multiplicative order n; throws if n does not divide |F*|.
Elem least_element_of_order(const Field& f, std::uint64_t n);

}  // namespace hq::gf
