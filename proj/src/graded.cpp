#include "braidlab/graded.hpp"

#include <bit>
#include <stdexcept>

namespace braidlab {

unsigned state_parity(std::size_t basis_index) {
    return static_cast<unsigned>(std::popcount(basis_index) & 1);
}

Parity classify_parity(const Matrix& m) {
    bool any = false, all_equal = true, all_opposite = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).fast_zero()) continue;
            any = true;
            if (state_parity(i) == state_parity(j)) all_opposite = false;
            else all_equal = false;
        }
    }
    if (!any) return Parity::even;  // zero operator: even by convention
    if (all_equal) return Parity::even;
    if (all_opposite) return Parity::odd;
    return Parity::nonhomogeneous;
}

GradedOperator make_graded(Matrix m, unsigned particles) {
    if (m.rows() != m.cols() || m.rows() != (std::size_t{1} << particles))
        throw std::invalid_argument("make_graded: dimension is not 2^particles");
    Parity p = classify_parity(m);
    return GradedOperator{std::move(m), p, particles};
}

GradedOperator graded_identity(unsigned particles, Mode mode) {
    return GradedOperator{Matrix::identity(std::size_t{1} << particles, mode), Parity::even,
                          particles};
}

StateVector basis_state(unsigned particles, std::size_t word, Mode mode) {
    const std::size_t dim = std::size_t{1} << particles;
    if (word >= dim) throw std::invalid_argument("basis_state: word out of range");
    StateVector v{particles, std::vector<Scalar>(dim, Scalar::zero(mode))};
    v.amplitudes[word] = Scalar::one(mode);
    return v;
}

GradedOperator kron(const GradedOperator& a, const GradedOperator& b) {
    Parity p = Parity::nonhomogeneous;
    if (a.parity != Parity::nonhomogeneous && b.parity != Parity::nonhomogeneous) {
        // even + x = x, odd + odd = even
        const bool odd = (a.parity == Parity::odd) != (b.parity == Parity::odd);
        p = odd ? Parity::odd : Parity::even;
    }
    return GradedOperator{a.matrix.kron(b.matrix), p, a.particles + b.particles};
}

GradedOperator bracket(const GradedOperator& x, const GradedOperator& y, BracketKind kind) {
    if (x.dim() != y.dim() || x.particles != y.particles)
        throw std::invalid_argument("bracket: dimension mismatch");
    bool anti = false;
    switch (kind) {
        case BracketKind::commutator: anti = false; break;
        case BracketKind::anticommutator: anti = true; break;
        case BracketKind::graded:
            if (x.parity == Parity::nonhomogeneous || y.parity == Parity::nonhomogeneous)
                throw std::invalid_argument("bracket: graded kind needs homogeneous operands");
            anti = x.parity == Parity::odd && y.parity == Parity::odd;
            break;
    }
    Matrix xy = x.matrix * y.matrix;
    Matrix yx = y.matrix * x.matrix;
    return make_graded(anti ? xy + yx : xy - yx, x.particles);
}

StateVector apply(const GradedOperator& a, const StateVector& v) {
    if (a.particles != v.particles) throw std::invalid_argument("apply: dimension mismatch");
    return StateVector{v.particles, a.matrix.apply(v.amplitudes)};
}

bool is_superselected(const StateVector& v) {
    bool seen[2] = {false, false};
    for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
        if (!v.amplitudes[i].fast_zero()) seen[state_parity(i)] = true;
    }
    return !(seen[0] && seen[1]);
}

Gl11 gl11_generators(Mode mode) {
    const Scalar one = Scalar::one(mode);
    Matrix a(2, 2, mode), b(2, 2, mode), g(2, 2, mode), d(2, 2, mode);
    a.at(0, 0) = one;  // alpha = diag(1, 0)
    b.at(0, 1) = one;  // beta: annihilates the excited state downward
    g.at(1, 0) = one;  // gamma: fermionic creation
    d.at(1, 1) = one;  // delta = diag(0, 1) = H_1
    return Gl11{GradedOperator{std::move(a), Parity::even, 1},
                GradedOperator{std::move(b), Parity::odd, 1},
                GradedOperator{std::move(g), Parity::odd, 1},
                GradedOperator{std::move(d), Parity::even, 1}};
}

std::vector<BracketCheck> gl11_bracket_checks(const GradedOperator& alpha,
                                              const GradedOperator& beta,
                                              const GradedOperator& gamma,
                                              const GradedOperator& delta) {
    for (const auto* op : {&alpha, &beta, &gamma, &delta})
        if (op->dim() != 2) throw std::invalid_argument("gl11_bracket_checks: operators must be 2x2");

    const Mode mode = alpha.mode();
    const Matrix zero2(2, 2, mode);
    const Matrix unit = alpha.matrix + delta.matrix;  // expected {beta, gamma}

    auto comm = [](const GradedOperator& x, const GradedOperator& y) {
        return bracket(x, y, BracketKind::commutator).matrix;
    };
    auto anti = [](const GradedOperator& x, const GradedOperator& y) {
        return bracket(x, y, BracketKind::anticommutator).matrix;
    };

    std::vector<BracketCheck> out;
    auto push = [&out](std::string name, const Matrix& got, const Matrix& expected) {
        out.push_back({std::move(name), (got - expected).max_residual()});
    };
    push("[alpha,beta]=beta", comm(alpha, beta), beta.matrix);
    push("[alpha,gamma]=-gamma", comm(alpha, gamma), -gamma.matrix);
    push("[alpha,delta]=0", comm(alpha, delta), zero2);
    push("[delta,beta]=-beta", comm(delta, beta), -beta.matrix);
    push("[delta,gamma]=gamma", comm(delta, gamma), gamma.matrix);
    push("{beta,beta}=0", anti(beta, beta), zero2);
    push("{gamma,gamma}=0", anti(gamma, gamma), zero2);
    push("{beta,gamma}=alpha+delta", anti(beta, gamma), unit);
    push("{gamma,beta}=alpha+delta", anti(gamma, beta), unit);
    return out;
}

std::vector<std::string> check_gl11(const GradedOperator& alpha, const GradedOperator& beta,
                                    const GradedOperator& gamma, const GradedOperator& delta,
                                    double tol) {
    std::vector<std::string> violations;
    for (auto& check : gl11_bracket_checks(alpha, beta, gamma, delta)) {
        if (check.residual > tol) violations.push_back(std::move(check.name));
    }
    return violations;
}

}  // namespace braidlab
