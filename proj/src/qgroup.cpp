#include "braidlab/qgroup.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <limits>
#include <stdexcept>

namespace braidlab {

namespace {

Scalar rational_scalar(const mpq_class& x, Mode mode) {
    if (mode == Mode::exact) return Scalar(x);
    return Scalar(std::complex<double>(x.get_d(), 0.0));
}

double columns_max_residual(const Matrix& m, std::size_t col_end) {
    double worst = 0.0;
    for (std::size_t j = 0; j < col_end; ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Scalar& e = m.at(i, j);
            if (e.fast_zero()) continue;
            double mag = std::abs(e.approx());
            if (e.is_exact()) mag = std::max(mag, std::numeric_limits<double>::min());
            worst = std::max(worst, mag);
        }
    }
    return worst;
}

}  // namespace

Eta Eta::exact_i_pi(mpq_class rho) {
    Eta eta;
    eta.mode_ = Mode::exact;
    eta.rho_ = std::move(rho);
    eta.value_ = std::complex<double>(0.0, eta.rho_.get_d() * std::numbers::pi);
    return eta;
}

Eta Eta::floating(std::complex<double> value) {
    Eta eta;
    eta.mode_ = Mode::floating;
    eta.value_ = value;
    return eta;
}

const mpq_class& Eta::rho() const {
    if (mode_ != Mode::exact) throw ModeMismatchError("Eta::rho: float-mode eta");
    return rho_;
}

std::complex<double> Eta::approx() const { return value_; }

Scalar Eta::exp_multiple(const mpq_class& x) const {
    if (mode_ == Mode::exact) return PiRational(rho_ * x).phase();
    return Scalar(std::exp(value_ * x.get_d()));
}

Scalar Eta::sinh_multiple(const mpq_class& x) const {
    // sinh(i*pi*rho*x) = i*sin(pi*rho*x), exact through the phase pair.
    if (mode_ == Mode::exact) return PiRational(rho_ * x).i_sin_value();
    return Scalar(std::sinh(value_ * x.get_d()));
}

bool Eta::is_zero() const {
    if (mode_ == Mode::exact) return rho_ == 0;
    return value_ == std::complex<double>(0.0, 0.0);
}

bool Eta::singular() const { return sinh_multiple(2).fast_zero(); }

Scalar QGroupRep::weight(unsigned n) const {
    return rational_scalar(lambda + mpq_class(n, 2), mode);
}

Scalar QGroupRep::lowering(unsigned n) const {
    if (n == 0 || n > cutoff) throw std::out_of_range("QGroupRep::lowering: n outside 1..M");
    return f_minus.at(n - 1, n);
}

QGroupRep build_rep(const Eta& eta, const mpq_class& lambda, unsigned cutoff) {
    // eta = 0 is subsumed: sinh(0) = 0.
    if (eta.singular())
        throw SingularLevelError("build_rep: sinh(2*eta) = 0, lowering coefficients undefined");
    if (cutoff < 2) throw std::invalid_argument("build_rep: cutoff M >= 2 required");

    const Mode mode = eta.mode();
    const unsigned dim = cutoff + 1;
    QGroupRep rep{mode,
                  eta,
                  lambda,
                  cutoff,
                  Matrix(dim, dim, mode),
                  Matrix(dim, dim, mode),
                  Matrix(dim, dim, mode),
                  eta.exp_multiple(1)};

    const Scalar sinh2 = eta.sinh_multiple(2);
    for (unsigned n = 0; n < dim; ++n) rep.h.at(n, n) = rep.weight(n);
    for (unsigned n = 0; n + 1 < dim; ++n) rep.f_plus.at(n + 1, n) = Scalar::one(mode);
    Scalar c = Scalar::zero(mode);
    for (unsigned n = 1; n < dim; ++n) {
        // c_n = sinh(eta*(lambda + (n-1)/2)) / sinh(2*eta) - c_{n-1}
        c = eta.sinh_multiple(lambda + mpq_class(n - 1, 2)) / sinh2 - c;
        rep.f_minus.at(n - 1, n) = c;
    }
    return rep;
}

QGroupRep build_rep_level(long r, long s, unsigned cutoff, Mode mode) {
    const BraidParameter level = BraidParameter::level(r, s);  // validates (r, s)
    mpq_class rho(2 * (s - 2 * r), s);
    rho.canonicalize();
    const Eta eta = mode == Mode::exact
                        ? Eta::exact_i_pi(rho)
                        : Eta::floating(std::complex<double>(0.0, rho.get_d() * std::numbers::pi));
    return build_rep(eta, mpq_class(0), cutoff);
}

double check_relations(const QGroupRep& rep) {
    const unsigned dim = rep.cutoff + 1;
    const Mode mode = rep.mode;
    const Scalar half = rep.mode == Mode::exact ? Scalar(mpq_class(1, 2))
                                                : Scalar(std::complex<double>(0.5, 0.0));

    const Matrix raise_defect =
        rep.h * rep.f_plus - rep.f_plus * rep.h - rep.f_plus.scaled(half);
    const Matrix lower_defect =
        rep.h * rep.f_minus - rep.f_minus * rep.h + rep.f_minus.scaled(half);

    Matrix sinh_h(dim, dim, mode);
    const Scalar sinh2 = rep.eta.sinh_multiple(2);
    for (unsigned n = 0; n < dim; ++n)
        sinh_h.at(n, n) = rep.eta.sinh_multiple(rep.lambda + mpq_class(n, 2)) / sinh2;
    const Matrix anti_defect = rep.f_plus * rep.f_minus + rep.f_minus * rep.f_plus - sinh_h;

    double worst = columns_max_residual(raise_defect, rep.cutoff);
    worst = std::max(worst, columns_max_residual(lower_defect, rep.cutoff));
    worst = std::max(worst, columns_max_residual(anti_defect, rep.cutoff));
    return worst;
}

namespace {

// Diagonal e^{+-eta H/2} as entry vectors. F_+ is odd, so slots sitting left
// of a raise see the parity-twisted diagonal (Koszul sign (-1)^n threaded
// through the occupied slots); slots to the right see the plain one.
std::vector<Scalar> k_diagonal(const QGroupRep& rep, int sign, bool parity_twist = false) {
    std::vector<Scalar> out;
    out.reserve(rep.cutoff + 1);
    for (unsigned n = 0; n <= rep.cutoff; ++n) {
        Scalar entry =
            rep.eta.exp_multiple(mpq_class(sign) * (rep.lambda + mpq_class(n, 2)) / 2);
        if (parity_twist && (n & 1u)) entry = -entry;
        out.push_back(entry);
    }
    return out;
}

}  // namespace

Matrix coproduct_raise(const QGroupRep& rep, unsigned slots) {
    if (slots < 2) throw std::invalid_argument("coproduct_raise: slots >= 2 required");
    const unsigned dim = rep.cutoff + 1;
    const Mode mode = rep.mode;
    const Matrix k_plus = Matrix::diagonal(k_diagonal(rep, +1));
    const Matrix k_minus = Matrix::diagonal(k_diagonal(rep, -1, true));

    std::size_t total_dim = 1;
    for (unsigned i = 0; i < slots; ++i) total_dim *= dim;
    Matrix total(total_dim, total_dim, mode);
    for (unsigned j = 1; j <= slots; ++j) {
        Matrix term = j == 1 ? rep.f_plus : k_minus;
        for (unsigned slot = 2; slot <= slots; ++slot)
            term = term.kron(slot < j ? k_minus : (slot == j ? rep.f_plus : k_plus));
        total = total + term;
    }
    return total;
}

double coassociativity_residual(const QGroupRep& rep) {
    // Delta(F+) = F+ (x) K + K^{-1} (x) F+ with group-like K: apply Delta to
    // the left factor for the LHS, to the right factor for the RHS. The
    // K^{-1} legs always sit left of the raise and carry the parity twist.
    const Matrix k_plus = Matrix::diagonal(k_diagonal(rep, +1));
    const Matrix k_minus = Matrix::diagonal(k_diagonal(rep, -1, true));
    const Matrix delta_f = coproduct_raise(rep, 2);
    const Matrix lhs = delta_f.kron(k_plus) + k_minus.kron(k_minus).kron(rep.f_plus);
    const Matrix rhs = rep.f_plus.kron(k_plus.kron(k_plus)) + k_minus.kron(delta_f);
    return (lhs - rhs).max_residual();
}

ProjectedTower projected_tower(const BraidParameter& level, unsigned steps, unsigned n_max,
                               Mode mode, double tol) {
    if (!level.is_level()) throw std::invalid_argument("projected_tower: level parameter required");
    if (tol < 0 || (mode == Mode::exact && tol != 0) || (mode == Mode::floating && tol == 0))
        throw ToleranceError("projected_tower: tolerance must match the mode");
    const unsigned slots = steps + 1;
    const unsigned cutoff = std::max(2u, n_max);
    const QGroupRep rep = build_rep_level(level.r(), level.s(), cutoff, mode);
    const unsigned dim = cutoff + 1;

    std::size_t total_dim = 1;
    for (unsigned i = 0; i < slots; ++i) total_dim *= dim;

    const std::vector<Scalar> k_plus = k_diagonal(rep, +1);
    const std::vector<Scalar> k_minus = k_diagonal(rep, -1, true);

    // Tower states are sparse (support = digit words of one excitation
    // count), so they are held as ordered index->amplitude maps; the full
    // dim^slots vector is never materialized.
    using Sparse = std::map<std::size_t, Scalar>;

    // One application of Delta^{(steps)}(F_+), term by term: the j-th term
    // raises slot j and scales the other slots diagonally.
    auto apply_raise = [&](const Sparse& v) {
        Sparse out;
        std::vector<unsigned> digits(slots);
        for (const auto& [idx, amp] : v) {
            if (amp.fast_zero()) continue;
            std::size_t rem = idx;
            for (unsigned k = slots; k-- > 0;) {
                digits[k] = static_cast<unsigned>(rem % dim);
                rem /= dim;
            }
            std::size_t stride = total_dim / dim;  // stride of slot 1 (leftmost)
            for (unsigned j = 0; j < slots; ++j, stride /= dim) {
                if (digits[j] + 1 >= dim) continue;  // raising past the cutoff
                Scalar coeff = amp;
                for (unsigned k = 0; k < slots; ++k) {
                    if (k < j) coeff = coeff * k_minus[digits[k]];
                    else if (k > j) coeff = coeff * k_plus[digits[k]];
                }
                auto [it, fresh] = out.emplace(idx + stride, coeff);
                if (!fresh) it->second += coeff;
            }
        }
        return out;
    };

    auto all_digits_binary = [&](std::size_t idx) {
        for (unsigned k = 0; k < slots; ++k) {
            if (idx % dim > 1) return false;
            idx /= dim;
        }
        return true;
    };

    auto project = [&](const Sparse& v) {
        Sparse out;
        for (const auto& [idx, amp] : v)
            if (all_digits_binary(idx)) out.emplace(idx, amp);
        return out;
    };

    auto digit_sum = [&](std::size_t idx) {
        long sum = 0;
        while (idx) {
            sum += static_cast<long>(idx % dim);
            idx /= dim;
        }
        return sum;
    };

    ProjectedTower tower{level.r(), level.s(), slots, cutoff, {}, std::nullopt};
    Sparse u;
    u.emplace(0, Scalar::one(mode));
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) u = apply_raise(u);
        const Sparse w = project(u);
        TowerEntry entry;
        entry.n = n;
        Scalar nsq = Scalar::zero(mode);
        bool structurally_zero = true;
        double largest = 0.0;
        bool uniform = true;
        for (const auto& [idx, amp] : w) {
            nsq += amp.conj() * amp;
            if (!amp.fast_zero()) {
                structurally_zero = false;
                largest = std::max(largest, std::abs(amp.approx()));
                if (digit_sum(idx) != static_cast<long>(n)) uniform = false;
            }
        }
        entry.norm_squared = nsq;
        entry.vanished = mode == Mode::exact ? structurally_zero : largest < tol;
        if (!entry.vanished) {
            // Normalized total Hamiltonian (2x the Kronecker sum of H at
            // lambda = 0) acts as the digit sum; the state must be an
            // eigenvector with eigenvalue n.
            if (uniform) entry.energy = n;
        } else if (!tower.truncation_index) {
            tower.truncation_index = n;
        }
        tower.entries.push_back(std::move(entry));
    }
    return tower;
}

MatchResult match_spectrum(const BraidParameter& level, unsigned particles, Mode mode,
                           double tol) {
    if (particles < 1) throw std::invalid_argument("match_spectrum: particles >= 1 required");
    ProjectedTower tower = projected_tower(level, particles - 1, particles + 1, mode, tol);
    SpectrumReport fock = spectrum(level, particles, mode, tol);
    std::vector<long> energies;
    for (const auto& entry : tower.entries)
        if (!entry.vanished && entry.energy) energies.push_back(*entry.energy);
    const bool matched = energies == fock.energies;
    return MatchResult{matched, std::move(energies), std::move(fock), std::move(tower)};
}

}  // namespace braidlab
