#pragma once

#include <optional>

#include "braidlab/braid.hpp"

namespace braidlab {

// |0>^(x N): amplitude 1 on the all-zeros occupation word.
StateVector vacuum(unsigned particles, Mode mode);

// Q_N = sum_k W^(x(k-1)) (x) gamma (x) I^(x(N-k)); odd parity.
GradedOperator creation_total(const BraidParameter& p, unsigned particles, Mode mode);

// Hermitian conjugate of creation_total.
GradedOperator annihilation_total(const BraidParameter& p, unsigned particles, Mode mode);

// Total occupation number: Kronecker sum of diag(0, 1); diagonal, even.
GradedOperator hamiltonian(unsigned particles, Mode mode);

struct LadderEntry {
    unsigned n = 0;
    Scalar norm_squared;
    std::optional<long> energy;  // H_N eigenvalue when the state survives
    bool vanished = false;
};

struct LadderReport {
    BraidParameter level;
    unsigned particles = 1;
    std::vector<LadderEntry> entries;              // n = 0 .. n_max
    std::optional<unsigned> truncation_index;      // least n with v_n = 0
};

// v_n = Q_N^n |0>_N for n = 0..n_max, unnormalized. Vanishing uses the exact
// zero test in exact mode and |.| < tol in float mode.
LadderReport ladder(const BraidParameter& p, unsigned particles, unsigned n_max, Mode mode,
                    double tol = 0.0);

struct SpectrumReport {
    BraidParameter level;
    unsigned particles = 1;
    std::vector<long> energies;      // sorted, no repeats
    std::optional<long> plateau;     // s - 1 once N >= s at a root-of-unity level
    std::optional<unsigned> truncation_index;
};

// Energy set of the ladder with the default n_max = N + 1, so the vanishing
// step is always witnessed.
SpectrumReport spectrum(const BraidParameter& p, unsigned particles, Mode mode, double tol = 0.0);

}  // namespace braidlab
