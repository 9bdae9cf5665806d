#include "braidlab/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "braidlab/cyclotomic.hpp"

namespace braidlab {

namespace {

using detail::CycloTable;
using detail::cyclo_table;

// Reduce a raw power-basis vector (indices 0..m-1) to canonical coefficients
// (indices 0..phi(m)-1). Rows in the table are already fully reduced.
std::vector<mpq_class> canonicalize(std::vector<mpq_class> raw, const CycloTable& table) {
    raw.resize(table.order, mpq_class(0));
    for (unsigned e = table.order; e-- > table.degree;) {
        if (raw[e] == 0) continue;
        const auto& row = table.row(e);
        for (unsigned j = 0; j < table.degree; ++j) raw[j] += raw[e] * row[j];
    }
    raw.resize(table.degree);
    return raw;
}

// Polynomial helpers over Q for the extended-Euclid inverse. Coefficients
// ascending; invariant: back() != 0 unless the polynomial is empty (zero).
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub_scaled(Poly a, const Poly& b, const mpq_class& c, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpq_class(0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    trim(a);
    return a;
}

// a mod b together with the Bezout update: returns (quotient, remainder).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        a = poly_sub_scaled(std::move(a), b, c, shift);
    }
    trim(quot);
    return {std::move(quot), std::move(a)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
    trim(a);
    return a;
}

unsigned long mod_reduce(long k, unsigned m) {
    long r = k % static_cast<long>(m);
    if (r < 0) r += m;
    return static_cast<unsigned long>(r);
}

}  // namespace

Scalar::Scalar(mpq_class rational) : mode_(Mode::exact), order_(1), coeffs_{std::move(rational)} {}

Scalar Scalar::root_of_unity(long k, unsigned m) {
    if (m == 0) throw std::invalid_argument("root_of_unity: order must be positive");
    const auto& table = cyclo_table(m);
    std::vector<mpq_class> raw(m, mpq_class(0));
    raw[mod_reduce(k, m)] = 1;
    return Scalar(m, canonicalize(std::move(raw), table));
}

Scalar Scalar::zero(Mode mode) {
    return mode == Mode::exact ? Scalar(mpq_class(0)) : Scalar(std::complex<double>(0.0, 0.0));
}

Scalar Scalar::one(Mode mode) {
    return mode == Mode::exact ? Scalar(mpq_class(1)) : Scalar(std::complex<double>(1.0, 0.0));
}

Scalar Scalar::i_unit(Mode mode) {
    return mode == Mode::exact ? root_of_unity(1, 4) : Scalar(std::complex<double>(0.0, 1.0));
}

void Scalar::require_same_mode(const Scalar& rhs, const char* what) const {
    if (mode_ != rhs.mode_)
        throw ModeMismatchError(std::string(what) +
                                ": mixed exact/float operands (coerce explicitly with to_float)");
}

unsigned Scalar::common_order(const Scalar& a, const Scalar& b) {
    return std::lcm(a.order_, b.order_);
}

Scalar Scalar::embedded(unsigned to) const {
    if (to == order_) return *this;
    if (to % order_ != 0) throw std::logic_error("embedded: target order not a multiple");
    const auto& table = cyclo_table(to);
    const unsigned stride = to / order_;
    std::vector<mpq_class> raw(to, mpq_class(0));
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        raw[(static_cast<unsigned long>(k) * stride) % to] += coeffs_[k];
    }
    return Scalar(to, canonicalize(std::move(raw), table));
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_mode(rhs, "add");
    if (mode_ == Mode::floating) return Scalar(approx_ + rhs.approx_);
    const unsigned L = common_order(*this, rhs);
    Scalar a = embedded(L), b = rhs.embedded(L);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    return a;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_mode(rhs, "sub");
    if (mode_ == Mode::floating) return Scalar(approx_ - rhs.approx_);
    const unsigned L = common_order(*this, rhs);
    Scalar a = embedded(L), b = rhs.embedded(L);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] -= b.coeffs_[k];
    return a;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_mode(rhs, "mul");
    if (mode_ == Mode::floating) return Scalar(approx_ * rhs.approx_);
    const unsigned L = common_order(*this, rhs);
    Scalar a = embedded(L), b = rhs.embedded(L);
    const auto& table = cyclo_table(L);
    std::vector<mpq_class> raw(L, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[(i + j) % L] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Scalar(L, canonicalize(std::move(raw), table));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_mode(rhs, "div");
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (mode_ == Mode::floating) return Scalar(-approx_);
    Scalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Scalar Scalar::conj() const {
    if (mode_ == Mode::floating) return Scalar(std::conj(approx_));
    const auto& table = cyclo_table(order_);
    std::vector<mpq_class> raw(order_, mpq_class(0));
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        raw[(order_ - k) % order_] += coeffs_[k];
    }
    return Scalar(order_, canonicalize(std::move(raw), table));
}

Scalar Scalar::inverse() const {
    if (mode_ == Mode::floating) {
        if (approx_ == std::complex<double>(0.0, 0.0))
            throw std::domain_error("inverse: division by zero");
        return Scalar(1.0 / approx_);
    }
    if (fast_zero()) throw std::domain_error("inverse: division by zero");

    // Fast path: if a * conj(a) is rational, 1/a = conj(a) / |a|^2.
    Scalar cj = conj();
    if (auto norm = (*this * cj).as_rational()) {
        mpq_class inv_norm = 1 / *norm;
        Scalar out = cj;
        for (auto& c : out.coeffs_) c *= inv_norm;
        return out;
    }

    // General case: Bezout coefficient of a against Phi_m in Q[x]. Phi_m is
    // irreducible, so gcd(a, Phi_m) is a nonzero constant.
    const auto& table = cyclo_table(order_);
    Poly phi(table.min_poly.size());
    for (std::size_t j = 0; j < phi.size(); ++j) phi[j] = mpq_class(table.min_poly[j]);
    Poly r0 = phi, r1 = coeffs_;
    trim(r1);
    Poly u0 = {}, u1 = {mpq_class(1)};  // r_i = s_i * Phi + u_i * a
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(std::move(r0), r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw std::logic_error("inverse: minimal polynomial not coprime");
    mpq_class c = 1 / r0[0];
    u0.resize(table.degree, mpq_class(0));
    for (auto& x : u0) x *= c;
    return Scalar(order_, std::move(u0));
}

bool Scalar::operator==(const Scalar& rhs) const {
    require_same_mode(rhs, "equality");
    if (mode_ == Mode::floating) return approx_ == rhs.approx_;
    return (*this - rhs).fast_zero();
}

bool Scalar::is_zero(double tol) const {
    if (tol < 0) throw ToleranceError("is_zero: negative tolerance");
    if (mode_ == Mode::exact) {
        if (tol != 0)
            throw ToleranceError("is_zero: positive tolerance rejected in exact mode");
        return fast_zero();
    }
    if (tol == 0) throw ToleranceError("is_zero: float mode requires a positive tolerance");
    return std::abs(approx_) < tol;
}

bool Scalar::fast_zero() const {
    if (mode_ == Mode::floating) return approx_ == std::complex<double>(0.0, 0.0);
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::complex<double> Scalar::approx() const {
    if (mode_ == Mode::floating) return approx_;
    std::complex<double> acc(0.0, 0.0);
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        acc += coeffs_[k].get_d() *
               std::polar(1.0, 2.0 * std::numbers::pi * k / static_cast<double>(order_));
    }
    return acc;
}

unsigned Scalar::order() const {
    if (mode_ != Mode::exact) throw ModeMismatchError("order: float-mode scalar");
    return order_;
}

const std::vector<mpq_class>& Scalar::coefficients() const {
    if (mode_ != Mode::exact) throw ModeMismatchError("coefficients: float-mode scalar");
    return coeffs_;
}

std::optional<mpq_class> Scalar::as_rational() const {
    if (mode_ != Mode::exact) return std::nullopt;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return std::nullopt;
    return coeffs_[0];
}

std::optional<std::pair<unsigned, unsigned>> Scalar::as_root_of_unity() const {
    if (mode_ != Mode::exact || fast_zero()) return std::nullopt;
    const unsigned M = std::lcm(2u, order_);  // the roots of unity inside Q(zeta_m)
    const double arg = std::arg(approx());
    const double turns = arg / (2.0 * std::numbers::pi);
    long guess = std::lround(turns * M);
    auto reduced = [&](unsigned long k) -> std::pair<unsigned, unsigned> {
        if (k == 0) return {1u, 0u};
        unsigned long g = std::gcd(k, static_cast<unsigned long>(M));
        return {static_cast<unsigned>(M / g), static_cast<unsigned>(k / g)};
    };
    unsigned long k0 = mod_reduce(guess, M);
    if (*this == root_of_unity(static_cast<long>(k0), M)) return reduced(k0);
    for (unsigned long k = 0; k < M; ++k) {
        if (k == k0) continue;
        if (*this == root_of_unity(static_cast<long>(k), M)) return reduced(k);
    }
    return std::nullopt;
}

Scalar Scalar::sqrt_principal() const {
    if (mode_ == Mode::floating) return Scalar(std::sqrt(approx_));
    auto ru = as_root_of_unity();
    if (!ru)
        throw std::domain_error("sqrt_principal: exact square root only defined for roots of unity");
    auto [m, k] = *ru;
    // Angle 2*pi*k/m mapped to (-pi, pi], halved: zeta_{2m}^{k'} with signed k'.
    long ks = static_cast<long>(k);
    if (2 * k > m) ks -= static_cast<long>(m);
    return root_of_unity(ks, 2 * m);
}

bool Scalar::is_real() const {
    if (mode_ == Mode::floating) return approx_.imag() == 0.0;
    return *this == conj();
}

std::string Scalar::to_string() const {
    if (mode_ == Mode::floating) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", approx_.real(), approx_.imag());
        return buf;
    }
    if (auto q = as_rational()) return q->get_str();
    std::string out;
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[k].get_str();
        if (k > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

PiRational::PiRational(mpq_class multiple_of_pi) : value_(std::move(multiple_of_pi)) {
    // Normalize into [-1, 1): subtract 2*floor((v + 1)/2).
    mpq_class shifted = (value_ + 1) / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    value_ -= 2 * fl;
}

PiRational::PiRational(long num, long den) : PiRational(mpq_class(0)) {
    if (den == 0) throw std::invalid_argument("PiRational: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    *this = PiRational(v);
}

double PiRational::radians() const { return value_.get_d() * std::numbers::pi; }

Scalar PiRational::phase() const {
    // e^{i pi p/q} = zeta_{2q}^p with q = den >= 1 after canonicalization.
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (!num.fits_slong_p() || !den.fits_ulong_p())
        throw std::overflow_error("PiRational::phase: angle too large");
    unsigned long q = den.get_ui();
    return Scalar::root_of_unity(num.get_si(), static_cast<unsigned>(2 * q));
}

Scalar PiRational::cos_value() const {
    Scalar p = phase();
    return Scalar(mpq_class(1, 2)) * (p + p.conj());
}

Scalar PiRational::i_sin_value() const {
    Scalar p = phase();
    return Scalar(mpq_class(1, 2)) * (p - p.conj());
}

std::string PiRational::to_string() const { return value_.get_str(); }

}  // namespace braidlab
