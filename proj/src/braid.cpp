#include "braidlab/braid.hpp"

#include <numeric>
#include <stdexcept>

namespace braidlab {

BraidParameter BraidParameter::level(long r, long s) {
    if (s < 2) throw std::invalid_argument("BraidParameter: level requires s >= 2");
    if (r < 1 || r >= s) throw std::invalid_argument("BraidParameter: level requires 1 <= r < s");
    if (std::gcd(r, s) != 1) throw std::invalid_argument("BraidParameter: gcd(r, s) must be 1");
    BraidParameter p;
    p.is_level_ = true;
    p.r_ = r;
    p.s_ = s;
    return p;
}

BraidParameter BraidParameter::generic(Scalar t) {
    if (t.fast_zero()) throw std::invalid_argument("BraidParameter: t must be nonzero");
    BraidParameter p;
    p.t_ = std::move(t);
    return p;
}

long BraidParameter::r() const {
    if (!is_level_) throw std::logic_error("BraidParameter::r: generic parameter");
    return r_;
}

long BraidParameter::s() const {
    if (!is_level_) throw std::logic_error("BraidParameter::s: generic parameter");
    return s_;
}

Scalar BraidParameter::t_value(Mode mode) const {
    if (is_level_) {
        // t = -e^{2*pi*i*r/s} = zeta_{2s}^{2r+s}
        Scalar t = -Scalar::root_of_unity(r_, static_cast<unsigned>(s_));
        return mode == Mode::exact ? t : t.to_float();
    }
    if (t_->mode() == mode) return *t_;
    if (mode == Mode::floating) return t_->to_float();
    throw ModeMismatchError("BraidParameter::t_value: generic float t has no exact form");
}

std::string BraidParameter::describe() const {
    if (is_level_) return "level " + std::to_string(r_) + "/" + std::to_string(s_);
    return "t=" + t_->to_string();
}

GradedOperator braid_matrix(const BraidParameter& p, Mode mode) {
    const Scalar t = p.t_value(mode);
    const Scalar one = Scalar::one(mode);
    Matrix b(4, 4, mode);
    b.at(0, 0) = one;
    b.at(1, 1) = one - t;
    b.at(1, 2) = t;
    b.at(2, 1) = one;
    b.at(3, 3) = -t;
    return GradedOperator{std::move(b), Parity::even, 2};
}

double check_yang_baxter(const GradedOperator& b) {
    if (b.dim() != 4) throw std::invalid_argument("check_yang_baxter: expected a 4x4 operator");
    const Matrix i2 = Matrix::identity(2, b.mode());
    const Matrix b1 = b.matrix.kron(i2);  // B (x) I
    const Matrix b2 = i2.kron(b.matrix);  // I (x) B
    return (b1 * b2 * b1 - b2 * b1 * b2).max_residual();
}

GradedOperator intertwiner(const BraidParameter& p, Mode mode) {
    Matrix w(2, 2, mode);
    if (p.is_level() && mode == Mode::exact) {
        w.at(0, 0) = Scalar::root_of_unity(-p.r(), static_cast<unsigned>(2 * p.s()));
        w.at(1, 1) = Scalar::root_of_unity(p.r(), static_cast<unsigned>(2 * p.s()));
    } else {
        // Principal branch of (-t)^{1/2}; exact mode requires -t to be a root
        // of unity, which sqrt_principal enforces.
        const Scalar root = (-p.t_value(mode)).sqrt_principal();
        w.at(0, 0) = root.inverse();
        w.at(1, 1) = root;
    }
    return GradedOperator{std::move(w), Parity::even, 1};
}

bool check_exchange(const GradedOperator& w, const GradedOperator& gamma,
                    const BraidParameter& p, double tol) {
    const Mode mode = w.mode();
    const Matrix lhs = w.matrix * gamma.matrix;
    const Matrix rhs = (gamma.matrix * w.matrix).scaled(-p.t_value(mode));
    return (lhs - rhs).max_residual() <= tol;
}

bool check_braided_product(const BraidParameter& p, Mode mode, double tol) {
    const GradedOperator w = intertwiner(p, mode);
    const GradedOperator gamma = gl11_generators(mode).gamma;
    const Matrix lhs = (w.matrix * gamma.matrix).kron(gamma.matrix);
    const Matrix rhs = braid_matrix(p, mode).matrix * (gamma.matrix * w.matrix).kron(gamma.matrix);
    return (lhs - rhs).max_residual() <= tol;
}

std::optional<long> braid_order_generic(const BraidParameter& p, long cap, Mode mode, double tol) {
    const GradedOperator b = braid_matrix(p, mode);
    const Matrix identity = Matrix::identity(4, mode);
    Matrix power = identity;
    for (long k = 1; k <= cap; ++k) {
        power = power * b.matrix;
        if ((power - identity).max_residual() <= tol) return k;
    }
    return std::nullopt;
}

BraidOrderReport braid_order(long s, long cap_factor) {
    if (s < 2) throw std::invalid_argument("braid_order: s >= 2 required");
    BraidOrderReport report;
    report.s = s;
    const long cap = cap_factor * s;

    const BraidParameter primary = BraidParameter::level(1, s);
    const Matrix identity = Matrix::identity(4, Mode::exact);
    {
        const Matrix b = braid_matrix(primary, Mode::exact).matrix;
        Matrix power = identity;
        for (long k = 1; k <= cap; ++k) {
            power = power * b;
            if (power == identity) {
                report.minimal_order = k;
                break;
            }
        }
        report.holds_at_s = b.pow(static_cast<unsigned>(s)) == identity;
    }
    {
        // Alternate convention t' = e^{-2*pi*i/s}: B^s = I only when (-t')^s = 1.
        const BraidParameter alt =
            BraidParameter::generic(Scalar::root_of_unity(-1, static_cast<unsigned>(s)));
        const Matrix b = braid_matrix(alt, Mode::exact).matrix;
        Matrix power = identity;
        for (long k = 1; k <= cap; ++k) {
            power = power * b;
            if (power == identity) {
                report.alt_minimal_order = k;
                break;
            }
        }
        report.alt_holds_at_s = b.pow(static_cast<unsigned>(s)) == identity;
    }
    return report;
}

}  // namespace braidlab
