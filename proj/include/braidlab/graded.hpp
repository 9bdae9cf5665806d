#pragma once

#include <string>
#include <vector>

#include "braidlab/matrix.hpp"

namespace braidlab {

enum class Parity { even, odd, nonhomogeneous };

enum class BracketKind { commutator, anticommutator, graded };

// Parity of a basis state: number of occupied slots mod 2. Basis indices are
// big-endian occupation words, slot 1 = leftmost = most significant bit.
unsigned state_parity(std::size_t basis_index);

// Operator on an N-fold tensor power of the 2-dimensional qubit space,
// tagged with its Z2 parity. The zero operator counts as even.
struct GradedOperator {
    Matrix matrix;
    Parity parity = Parity::even;
    unsigned particles = 1;

    std::size_t dim() const { return matrix.rows(); }
    Mode mode() const { return matrix.mode(); }
};

// Classify from the entry pattern: even iff every nonzero entry connects
// equal-parity basis states, odd iff all opposite, else nonhomogeneous.
Parity classify_parity(const Matrix& m);

GradedOperator make_graded(Matrix m, unsigned particles);
GradedOperator graded_identity(unsigned particles, Mode mode);

struct StateVector {
    unsigned particles = 1;
    std::vector<Scalar> amplitudes;  // length 2^N

    Mode mode() const { return amplitudes.front().mode(); }
    Scalar norm_squared() const { return braidlab::norm_squared(amplitudes); }
    bool fast_zero() const { return vector_fast_zero(amplitudes); }
};

StateVector basis_state(unsigned particles, std::size_t word, Mode mode);

GradedOperator kron(const GradedOperator& a, const GradedOperator& b);

// XY - YX, XY + YX, or the parity-driven choice (anticommutator iff both odd).
// The graded kind rejects nonhomogeneous operands.
GradedOperator bracket(const GradedOperator& x, const GradedOperator& y, BracketKind kind);

StateVector apply(const GradedOperator& a, const StateVector& v);

// True iff every structurally nonzero amplitude sits on one parity.
bool is_superselected(const StateVector& v);

// The gl(1|1) generators alpha = diag(1,0), beta = E12, gamma = E21,
// delta = diag(0,1) with parities even, odd, odd, even.
struct Gl11 {
    GradedOperator alpha, beta, gamma, delta;
};
Gl11 gl11_generators(Mode mode = Mode::exact);

// One defining bracket, evaluated: residual is the largest deviation from the
// expected right-hand side (0.0 certifies exact equality in exact mode).
struct BracketCheck {
    std::string name;
    double residual;
};

// All nine defining brackets of the algebra, in a fixed order.
std::vector<BracketCheck> gl11_bracket_checks(const GradedOperator& alpha,
                                              const GradedOperator& beta,
                                              const GradedOperator& gamma,
                                              const GradedOperator& delta);

// Names of the brackets whose residual exceeds tol (tol = 0 in exact mode).
std::vector<std::string> check_gl11(const GradedOperator& alpha, const GradedOperator& beta,
                                    const GradedOperator& gamma, const GradedOperator& delta,
                                    double tol = 0.0);

}  // namespace braidlab
