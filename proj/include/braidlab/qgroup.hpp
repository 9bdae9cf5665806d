#pragma once

#include <optional>

#include "braidlab/braid.hpp"
#include "braidlab/fock.hpp"

namespace braidlab {

class SingularLevelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deformation parameter eta. Root-of-unity runs use eta = i*pi*rho with
// rational rho, so every e^{eta x} and sinh(eta x) with rational x stays an
// exact cyclotomic value; float mode holds an arbitrary complex eta. rho is
// kept unnormalized: eta feeds half- and quarter-weight exponents, where
// shifting rho by 2 (a no-op for whole phases) would flip signs.
class Eta {
public:
    static Eta exact_i_pi(mpq_class rho);
    static Eta floating(std::complex<double> value);

    Mode mode() const { return mode_; }
    const mpq_class& rho() const;
    std::complex<double> approx() const;

    Scalar exp_multiple(const mpq_class& x) const;   // e^{eta*x}
    Scalar sinh_multiple(const mpq_class& x) const;  // sinh(eta*x)
    bool is_zero() const;
    bool singular() const;  // sinh(2*eta) = 0

private:
    Mode mode_ = Mode::exact;
    mpq_class rho_ = 0;
    std::complex<double> value_{0.0, 0.0};
};

// Lowest-weight representation data on the unnormalized basis |n> = F_+^n |0>,
// n = 0..M. The defining relations hold exactly away from the boundary row.
struct QGroupRep {
    Mode mode = Mode::exact;
    Eta eta;
    mpq_class lambda;  // vacuum weight
    unsigned cutoff = 2;  // M
    Matrix h, f_plus, f_minus;
    Scalar q;  // e^eta

    Scalar weight(unsigned n) const;  // lambda + n/2 in the right mode
    // Lowering coefficient c_n (the (n-1, n) entry of F_-).
    Scalar lowering(unsigned n) const;
};

// H = diag(lambda + n/2); F_+ the unit raising shift; F_- from the recursion
// c_0 = 0, c_{n+1} = sinh(eta(lambda + n/2))/sinh(2 eta) - c_n.
QGroupRep build_rep(const Eta& eta, const mpq_class& lambda, unsigned cutoff);

// Level (r, s): lambda = 0 and eta = -2*pi*i*(2r/s - 1) = i*pi*(2(s-2r)/s).
// Throws SingularLevelError when sinh(2 eta) = 0, i.e. when s divides 8.
QGroupRep build_rep_level(long r, long s, unsigned cutoff, Mode mode);

// Largest deviation of [H, F+-] -+ F+-/2 and {F+, F-} - sinh(eta H)/sinh(2 eta)
// on basis states n <= M-1 (boundary column excluded).
double check_relations(const QGroupRep& rep);

// Evaluated Delta^{(slots-1)}(F_+): sum over j of K^{-1} factors left of the
// raising slot and K factors right of it, with K = e^{eta H / 2}. F_+ is odd,
// so on the tensor space the left factors pick up the parity sign (-1)^n of
// the states they act on (the usual fermionic string).
Matrix coproduct_raise(const QGroupRep& rep, unsigned slots);

// Largest entry deviation of (Delta x id)Delta(F_+) - (id x Delta)Delta(F_+)
// on 3 slots, with Delta(K^{+-1}) = K^{+-1} x K^{+-1} (K is group-like).
double coassociativity_residual(const QGroupRep& rep);

struct TowerEntry {
    unsigned n = 0;
    Scalar norm_squared;
    bool vanished = false;
    std::optional<long> energy;  // digit-sum eigenvalue of the projected state
};

struct ProjectedTower {
    long r = 1, s = 2;
    unsigned slots = 1;
    unsigned cutoff = 2;
    std::vector<TowerEntry> entries;
    std::optional<unsigned> truncation_index;
};

// States P^{(x slots)} Delta^{(steps)}(F_+^n)|0...0> for n = 0..n_max, with
// slots = steps + 1 and per-slot cutoff M = n_max. Applied term-by-term to
// vectors; the dense coproduct matrix is never materialized.
ProjectedTower projected_tower(const BraidParameter& level, unsigned steps, unsigned n_max,
                               Mode mode, double tol = 0.0);

struct MatchResult {
    bool matched = false;
    std::vector<long> qgroup_energies;
    SpectrumReport fock;
    ProjectedTower tower;
};

// Compares the nonvanishing projected-tower excitations on N slots against
// the N-particle ladder energy set at the same level.
MatchResult match_spectrum(const BraidParameter& level, unsigned particles, Mode mode,
                           double tol = 0.0);

}  // namespace braidlab
