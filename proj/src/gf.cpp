#include "hq/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hq/error.hpp"

namespace hq::gf {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 20;

void trim(poly::Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        auto q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return static_cast<std::uint32_t>((t % p + p) % p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

namespace poly {

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

static Poly mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return mod(std::move(r), m, p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r{1};
    r = mod(r, m, p);
    base = mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const std::uint32_t li = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % p);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    Poly xp = x;  // X^{p^m} mod f
    for (std::size_t m = 1; m <= n / 2; ++m) {
        xp = powmod(xp, p, f, p);
        const Poly g = gcd(f, sub(xp, x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace poly

FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw UsageError("make_field: characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw UsageError("make_field: extension degree must be positive");
    const std::uint64_t size = ipow(p, k);
    if (size > (1ull << 31)) throw BudgetExceeded("make_field: field too large for 32-bit handles");

    // Enumerate monic degree-k polynomials in lexicographic order of
    // (c_0, ..., c_{k-1}) with c_0 most significant.
    std::vector<std::uint32_t> c(k, 0);
    for (std::uint64_t rank = 0; rank < size; ++rank) {
        std::uint64_t r = rank;
        for (std::uint32_t i = k; i-- > 0;) {
            c[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        poly::Poly f(c.begin(), c.end());
        f.push_back(1);
        if (poly::is_irreducible(f, p)) return std::make_shared<const Field>(p, k, std::move(f));
    }
    throw std::logic_error("make_field: no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), size_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw UsageError("Field: p is not prime");
    if (modulus_.size() != k + 1 || modulus_.back() != 1)
        throw UsageError("Field: modulus must be monic of degree k");
    if (!poly::is_irreducible(modulus_, p)) throw UsageError("Field: modulus is reducible");
    pw_.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) pw_[i] = static_cast<std::uint32_t>(ipow(p, k - 1 - i));

    // least primitive element by exhaustive order check
    const std::uint64_t n = size_ - 1;
    const auto factors = prime_factors(n);
    for (std::uint32_t v = 1; v < size_; ++v) {
        Elem g{v};
        bool prim = true;
        for (auto r : factors) {
            if (pow_slow(g, n / r) == one()) {
                prim = false;
                break;
            }
        }
        if (prim) {
            primitive_ = g;
            break;
        }
    }
    if (size_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
    const std::uint32_t n = size_ - 1;
    exp_.resize(2 * static_cast<std::size_t>(n));
    log_.assign(size_, 0);
    Elem x = one();
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x.v;
        log_[x.v] = i;
        x = mul_slow(x, primitive_);
    }
    for (std::uint32_t i = 0; i < n; ++i) exp_[n + i] = exp_[i];

    const std::uint32_t lo_digits = k_ / 2;
    lo_size_ = static_cast<std::uint32_t>(ipow(p_, lo_digits));
    hi_size_ = size_ / lo_size_;
    auto digit_add = [this](std::uint32_t a, std::uint32_t b) {
        std::uint32_t r = 0, w = 1;
        while (a || b) {
            r += ((a % p_ + b % p_) % p_) * w;
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return r;
    };
    add_lo_.resize(static_cast<std::size_t>(lo_size_) * lo_size_);
    for (std::uint32_t a = 0; a < lo_size_; ++a)
        for (std::uint32_t b = 0; b < lo_size_; ++b) add_lo_[a * lo_size_ + b] = digit_add(a, b);
    add_hi_.resize(static_cast<std::size_t>(hi_size_) * hi_size_);
    for (std::uint32_t a = 0; a < hi_size_; ++a)
        for (std::uint32_t b = 0; b < hi_size_; ++b) add_hi_[a * hi_size_ + b] = digit_add(a, b);
    neg_.resize(size_);
    for (std::uint32_t v = 0; v < size_; ++v) {
        std::uint32_t r = 0, w = 1, a = v;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += ((p_ - a % p_) % p_) * w;
            a /= p_;
            w *= p_;
        }
        neg_[v] = r;
    }
}

Elem Field::from_int(std::int64_t n) const {
    const std::int64_t r = ((n % static_cast<std::int64_t>(p_)) + p_) % p_;
    return Elem{static_cast<std::uint32_t>(r) * pw_[0]};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != k_) throw UsageError("from_coeffs: expected " + std::to_string(k_) + " coefficients");
    std::uint32_t v = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (c[i] >= p_) throw UsageError("from_coeffs: coefficient out of range");
        v += c[i] * pw_[i];
    }
    return Elem{v};
}

std::vector<std::uint32_t> Field::coeffs(Elem e) const {
    std::vector<std::uint32_t> c(k_);
    std::uint32_t v = e.v;
    for (std::uint32_t i = k_; i-- > 0;) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Elem Field::basis(std::uint32_t j) const { return Elem{pw_.at(j)}; }

std::uint32_t Field::prime_value(Elem e) const {
    if (!in_prime_field(e)) throw UsageError("prime_value: element not in the prime field");
    return e.v / pw_[0];
}

Elem Field::add_slow(Elem a, Elem b) const {
    std::uint32_t r = 0, w = 1, x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((x % p_ + y % p_) % p_) * w;
        x /= p_;
        y /= p_;
        w *= p_;
    }
    return Elem{r};
}

Elem Field::add(Elem a, Elem b) const {
    if (!add_lo_.empty()) {
        const std::uint32_t alo = a.v % lo_size_, ahi = a.v / lo_size_;
        const std::uint32_t blo = b.v % lo_size_, bhi = b.v / lo_size_;
        return Elem{add_hi_[ahi * hi_size_ + bhi] * lo_size_ + add_lo_[alo * lo_size_ + blo]};
    }
    return add_slow(a, b);
}

Elem Field::neg(Elem a) const {
    if (!neg_.empty()) return Elem{neg_[a.v]};
    std::uint32_t r = 0, w = 1, x = a.v;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += ((p_ - x % p_) % p_) * w;
        x /= p_;
        w *= p_;
    }
    return Elem{r};
}

Elem Field::scale(Elem a, std::uint32_t s) const { return mul(a, from_int(s)); }

Elem Field::mul_slow(Elem a, Elem b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    trim(ca);
    trim(cb);
    auto r = poly::mulmod(ca, cb, modulus_, p_);
    r.resize(k_, 0);
    return from_coeffs(r);
}

Elem Field::mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    if (!exp_.empty()) return Elem{exp_[log_[a.v] + log_[b.v]]};
    return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    if (!exp_.empty()) {
        const std::uint32_t n = size_ - 1;
        return Elem{exp_[(n - log_[a.v]) % n]};
    }
    return pow_slow(a, size_ - 2);
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.v == 0) return zero();
    const std::uint64_t n = size_ - 1;
    if (!exp_.empty()) return Elem{exp_[(static_cast<std::uint64_t>(log_[a.v]) * (e % n)) % n]};
    return pow_slow(a, e % n == 0 ? n : e % n);
}

Elem Field::frobenius(Elem e, std::uint32_t i) const { return pow(e, ipow(p_, i % k_)); }

Elem Field::trace(Elem e, std::uint32_t m) const {
    Elem s = zero();
    Elem t = e;
    for (std::uint32_t i = 0; i < m; ++i) {
        s = add(s, t);
        t = pow(t, p_);
    }
    return s;
}

std::uint64_t Field::order(Elem e) const {
    if (e.v == 0) throw std::domain_error("order of zero");
    std::uint64_t n = size_ - 1;
    for (auto r : prime_factors(size_ - 1))
        while (n % r == 0 && pow(e, n / r) == one()) n /= r;
    return n;
}

std::string Field::to_text(Elem e) const {
    std::string s;
    auto c = coeffs(e);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

Elem Field::parse(std::string_view text) const {
    std::vector<std::uint32_t> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(pos, end - pos);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw UsageError("parse: malformed element '" + std::string(text) + "'");
        c.push_back(v);
        pos = end + 1;
    }
    return from_coeffs(c);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {
    if (!field_) throw UsageError("FieldElement: null field");
    if (!field_->contains(e)) throw UsageError("FieldElement: handle out of range");
}

const Field& FieldElement::common(const FieldElement& o) const {
    if (field_ != o.field_ && !field_->same_as(*o.field_))
        throw UsageError("field element context mismatch");
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, common(o).add(e_, o.e_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, common(o).sub(e_, o.e_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, common(o).mul(e_, o.e_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, common(o).div(e_, o.e_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(e_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(e_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(e_, e)}; }
FieldElement FieldElement::frobenius(std::uint32_t i) const { return {field_, field_->frobenius(e_, i)}; }

bool FieldElement::operator==(const FieldElement& o) const { return e_ == o.e_ && field_->same_as(*o.field_); }

// ---------------------------------------------------------------------------

Elem AdditiveOperator::apply(const Field& f, Elem y) const {
    Elem s = f.zero();
    for (const auto& t : terms) s = f.add(s, f.mul(t.coeff, f.frobenius(y, t.frob)));
    return s;
}

AdditiveSolver::AdditiveSolver(const Field& f, const AdditiveOperator& op) : f_(&f), k_(f.k()) {
    const std::uint32_t p = f.p();
    const std::uint32_t k = k_;
    // column j of M holds the coefficients of L(X^j)
    std::vector<std::uint32_t> m(static_cast<std::size_t>(k) * k);
    for (std::uint32_t j = 0; j < k; ++j) {
        auto col = f.coeffs(op.apply(f, f.basis(j)));
        for (std::uint32_t i = 0; i < k; ++i) m[i * k + j] = col[i];
    }
    transform_.assign(static_cast<std::size_t>(k) * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) transform_[i * k + i] = 1;

    auto row_op = [&](std::vector<std::uint32_t>& a, std::uint32_t dst, std::uint32_t src, std::uint32_t c) {
        // a[dst] -= c * a[src]
        for (std::uint32_t j = 0; j < k; ++j)
            a[dst * k + j] = static_cast<std::uint32_t>((a[dst * k + j] + static_cast<std::uint64_t>(p - c) * a[src * k + j]) % p);
    };
    auto row_scale = [&](std::vector<std::uint32_t>& a, std::uint32_t r, std::uint32_t c) {
        for (std::uint32_t j = 0; j < k; ++j) a[r * k + j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[r * k + j]) * c % p);
    };
    auto row_swap = [&](std::vector<std::uint32_t>& a, std::uint32_t r, std::uint32_t s) {
        for (std::uint32_t j = 0; j < k; ++j) std::swap(a[r * k + j], a[s * k + j]);
    };

    std::vector<bool> is_pivot(k, false);
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < k && row < k; ++col) {
        std::uint32_t piv = row;
        while (piv < k && m[piv * k + col] == 0) ++piv;
        if (piv == k) continue;
        row_swap(m, row, piv);
        row_swap(transform_, row, piv);
        const std::uint32_t s = inv_mod(m[row * k + col], p);
        row_scale(m, row, s);
        row_scale(transform_, row, s);
        for (std::uint32_t r = 0; r < k; ++r) {
            if (r == row || m[r * k + col] == 0) continue;
            const std::uint32_t c = m[r * k + col];
            row_op(m, r, row, c);
            row_op(transform_, r, row, c);
        }
        pivot_col_.push_back(col);
        is_pivot[col] = true;
        ++row;
    }
    rank_ = row;

    // kernel basis: one vector per free column
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::uint32_t free = 0; free < k; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(k, 0);
        v[free] = 1;
        for (std::uint32_t r = 0; r < rank_; ++r) v[pivot_col_[r]] = (p - m[r * k + free]) % p;
        basis.push_back(std::move(v));
    }
    kernel_.push_back(f.zero());
    for (const auto& b : basis) {
        const Elem be = f.from_coeffs(b);
        const std::size_t cur = kernel_.size();
        Elem mult = f.zero();
        for (std::uint32_t s = 1; s < p; ++s) {
            mult = f.add(mult, be);
            for (std::size_t i = 0; i < cur; ++i) kernel_.push_back(f.add(kernel_[i], mult));
        }
    }
    std::sort(kernel_.begin(), kernel_.end());
}

std::size_t AdditiveSolver::solve_into(Elem c, std::vector<Elem>& out) const {
    const Field& f = *f_;
    const std::uint32_t p = f.p();
    const std::uint32_t k = k_;
    const auto cc = f.coeffs(c);
    std::vector<std::uint32_t> t(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint64_t s = 0;
        for (std::uint32_t j = 0; j < k; ++j) s += static_cast<std::uint64_t>(transform_[i * k + j]) * cc[j];
        t[i] = static_cast<std::uint32_t>(s % p);
    }
    for (std::uint32_t i = rank_; i < k; ++i)
        if (t[i] != 0) return 0;
    std::vector<std::uint32_t> y(k, 0);
    for (std::uint32_t r = 0; r < rank_; ++r) y[pivot_col_[r]] = t[r];
    const Elem base = f.from_coeffs(y);
    const std::size_t start = out.size();
    for (const Elem& z : kernel_) out.push_back(f.add(base, z));
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
    return kernel_.size();
}

std::vector<Elem> AdditiveSolver::solve(Elem c) const {
    std::vector<Elem> out;
    solve_into(c, out);
    return out;
}

std::vector<Elem> additive_solve(const Field& f, const AdditiveOperator& op, Elem c) {
    return AdditiveSolver(f, op).solve(c);
}

Elem find_omega(const Field& f) {
    if (f.p() == 2) throw UsageError("find_omega: characteristic 2 is not supported");
    if (f.k() % 2 != 0) throw UsageError("find_omega: field degree must be even (F_{q^2})");
    const std::uint64_t q = ipow(f.p(), f.k() / 2);
    const Elem omega = f.pow(f.primitive(), (q + 1) / 2);
    if (f.pow(omega, q - 1) != f.neg(f.one())) throw std::logic_error("find_omega: omega^{q-1} != -1");
    return omega;
}

Elem least_element_of_order(const Field& f, std::uint64_t n) {
    const std::uint64_t group = f.size() - 1;
    if (n == 0 || group % n != 0)
        throw UsageError("no element of order " + std::to_string(n) + " in F_" + std::to_string(f.size()));
    for (std::uint32_t v = 1; v < f.size(); ++v)
        if (f.order(Elem{v}) == n) return Elem{v};
    throw std::logic_error("least_element_of_order: not found");
}

}  // namespace hq::gf
