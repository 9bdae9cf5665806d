#include "braidlab/fock.hpp"

#include <bit>
#include <stdexcept>

namespace braidlab {

namespace {

void require_particles(unsigned particles) {
    if (particles < 1) throw std::invalid_argument("particle count must be >= 1");
}

void check_tol(Mode mode, double tol) {
    if (tol < 0) throw ToleranceError("negative tolerance");
    if (mode == Mode::exact && tol != 0)
        throw ToleranceError("positive tolerance rejected in exact mode");
    if (mode == Mode::floating && tol == 0)
        throw ToleranceError("float mode requires a positive tolerance");
}

bool state_vanished(const StateVector& v, Mode mode, double tol) {
    if (mode == Mode::exact) return v.fast_zero();
    return vector_max_residual(v.amplitudes) < tol;
}

Scalar integer_scalar(long n, Mode mode) {
    return mode == Mode::exact ? Scalar(n) : Scalar(std::complex<double>(static_cast<double>(n), 0.0));
}

// W used inside ladder operators. The principal-branch intertwiner when it is
// expressible; otherwise (exact generic t with -t not a root of unity) the
// gauge W = diag(1, -t), which also satisfies W*gamma = (-t)*gamma*W. The two
// choices are conjugate by a diagonal slot rescaling that fixes the vacuum and
// commutes with H_N, so truncation indices, energies and superselection are
// identical; only the unnormalized ladder norms are gauge-dependent.
Matrix ladder_intertwiner(const BraidParameter& p, Mode mode) {
    if (p.is_level() || mode == Mode::floating) return intertwiner(p, mode).matrix;
    const Scalar minus_t = -p.t_value(mode);
    if (minus_t.as_root_of_unity()) return intertwiner(p, mode).matrix;
    Matrix w(2, 2, mode);
    w.at(0, 0) = Scalar::one(mode);
    w.at(1, 1) = minus_t;
    return w;
}

}  // namespace

StateVector vacuum(unsigned particles, Mode mode) {
    require_particles(particles);
    return basis_state(particles, 0, mode);
}

GradedOperator creation_total(const BraidParameter& p, unsigned particles, Mode mode) {
    require_particles(particles);
    const Matrix w = ladder_intertwiner(p, mode);
    const Matrix gamma = gl11_generators(mode).gamma.matrix;
    const Matrix i2 = Matrix::identity(2, mode);

    const std::size_t dim = std::size_t{1} << particles;
    Matrix total(dim, dim, mode);
    for (unsigned k = 1; k <= particles; ++k) {
        Matrix term = k == 1 ? gamma : w;
        for (unsigned slot = 2; slot <= particles; ++slot)
            term = term.kron(slot < k ? w : (slot == k ? gamma : i2));
        total = total + term;
    }
    return GradedOperator{std::move(total), Parity::odd, particles};
}

GradedOperator annihilation_total(const BraidParameter& p, unsigned particles, Mode mode) {
    GradedOperator q = creation_total(p, particles, mode);
    return GradedOperator{q.matrix.dagger(), Parity::odd, particles};
}

GradedOperator hamiltonian(unsigned particles, Mode mode) {
    require_particles(particles);
    const std::size_t dim = std::size_t{1} << particles;
    Matrix h(dim, dim, mode);
    for (std::size_t word = 0; word < dim; ++word) {
        const long count = std::popcount(word);
        if (count) h.at(word, word) = integer_scalar(count, mode);
    }
    return GradedOperator{std::move(h), Parity::even, particles};
}

LadderReport ladder(const BraidParameter& p, unsigned particles, unsigned n_max, Mode mode,
                    double tol) {
    require_particles(particles);
    check_tol(mode, tol);
    const GradedOperator q = creation_total(p, particles, mode);
    const GradedOperator h = hamiltonian(particles, mode);

    LadderReport report{p, particles, {}, std::nullopt};
    StateVector v = vacuum(particles, mode);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) v = apply(q, v);
        LadderEntry entry;
        entry.n = n;
        entry.norm_squared = v.norm_squared();
        entry.vanished = state_vanished(v, mode, tol);
        if (entry.vanished) {
            if (!report.truncation_index) report.truncation_index = n;
        } else {
            // H_N eigenvalue: v must satisfy H v = n v; record n only if it does.
            StateVector hv = apply(h, v);
            for (std::size_t i = 0; i < hv.amplitudes.size(); ++i)
                hv.amplitudes[i] -= integer_scalar(n, mode) * v.amplitudes[i];
            if (state_vanished(hv, mode, tol == 0 ? 0 : tol)) entry.energy = n;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

SpectrumReport spectrum(const BraidParameter& p, unsigned particles, Mode mode, double tol) {
    LadderReport lr = ladder(p, particles, particles + 1, mode, tol);
    SpectrumReport report{p, particles, {}, std::nullopt, lr.truncation_index};
    for (const auto& entry : lr.entries) {
        if (!entry.vanished && entry.energy) report.energies.push_back(*entry.energy);
    }
    if (p.is_level() && particles >= static_cast<unsigned>(p.s()))
        report.plateau = p.s() - 1;
    return report;
}

}  // namespace braidlab
