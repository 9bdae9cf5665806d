#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidlab {

enum class Mode { exact, floating };

// Exact/float arithmetic is kept strictly separate: mixing modes in one
// operation throws instead of silently promoting, because silent promotion
// would corrupt exact vanishing detection downstream.
class ModeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ToleranceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A scalar is either an element of a cyclotomic field Q(zeta_m), stored as
// rational coefficients over the canonical power basis {1, ..., zeta^{phi(m)-1}},
// or a complex<double>. Exact values are always kept in canonical reduced form,
// so the zero test is "all coefficients vanish".
class Scalar {
public:
    Scalar() : Scalar(mpq_class(0)) {}
    explicit Scalar(mpq_class rational);
    explicit Scalar(long n) : Scalar(mpq_class(n)) {}
    explicit Scalar(std::complex<double> z) : mode_(Mode::floating), approx_(z) {}

    // zeta_m^k with k reduced mod m.
    static Scalar root_of_unity(long k, unsigned m);
    static Scalar embed_complex(double re, double im) { return Scalar(std::complex<double>(re, im)); }
    static Scalar zero(Mode mode);
    static Scalar one(Mode mode);
    static Scalar i_unit(Mode mode);

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::exact; }

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    Scalar conj() const;
    Scalar inverse() const;

    // Exact equality in exact mode; bitwise equality in float mode. Mixed
    // modes throw like every other binary operation.
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    // tol must be 0 in exact mode and > 0 in float mode; anything else throws.
    bool is_zero(double tol) const;

    // Structural zero: exact canonical coefficients all vanish, or float
    // payload compares equal to 0.0. Used to skip work, never as a tolerance.
    bool fast_zero() const;

    std::complex<double> approx() const;
    Scalar to_float() const { return Scalar(approx()); }

    // Exact payload accessors (throw in float mode).
    unsigned order() const;
    const std::vector<mpq_class>& coefficients() const;
    // The value as a rational, if it lies in Q.
    std::optional<mpq_class> as_rational() const;
    // Recognize the value as a root of unity zeta_m^k (minimal m, 0 <= k < m).
    std::optional<std::pair<unsigned, unsigned>> as_root_of_unity() const;
    // Principal square root; exact mode requires a root of unity.
    Scalar sqrt_principal() const;

    bool is_real() const;  // equals its own conjugate (exact) / zero imag (float)

    std::string to_string() const;

private:
    Scalar(unsigned order, std::vector<mpq_class> coeffs)
        : mode_(Mode::exact), order_(order), coeffs_(std::move(coeffs)) {}

    // Re-express over Q(zeta_to) where order_ | to.
    Scalar embedded(unsigned to) const;
    static unsigned common_order(const Scalar& a, const Scalar& b);
    void require_same_mode(const Scalar& rhs, const char* what) const;

    Mode mode_ = Mode::exact;
    unsigned order_ = 1;
    std::vector<mpq_class> coeffs_;  // size phi(order_), canonical
    std::complex<double> approx_{0.0, 0.0};
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

// An angle (or exponent) that is an exact rational multiple of pi, normalized
// to the half-open window [-1, 1) in units of pi. This covers every phase the
// library needs exactly: e^{i pi p/q} = zeta_{2q}^p.
class PiRational {
public:
    PiRational() : value_(0) {}
    explicit PiRational(mpq_class multiple_of_pi);
    PiRational(long num, long den);

    const mpq_class& multiple_of_pi() const { return value_; }
    double radians() const;

    PiRational operator+(const PiRational& rhs) const { return PiRational(value_ + rhs.value_); }
    PiRational operator-(const PiRational& rhs) const { return PiRational(value_ - rhs.value_); }
    PiRational operator-() const { return PiRational(-value_); }
    bool operator==(const PiRational& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const PiRational& rhs) const { return value_ != rhs.value_; }

    Scalar phase() const;        // e^{i pi p/q}, exact
    Scalar cos_value() const;    // cos(pi p/q), exact
    Scalar i_sin_value() const;  // i sin(pi p/q), exact

    std::string to_string() const;  // "p/q" (in units of pi)

private:
    mpq_class value_;  // in (-1, 1] shifted to [-1, 1): canonical window
};

}  // namespace braidlab
