// Acceptance harness: runs every gate criterion, prints one PASS/FAIL line
// each, and exits nonzero if any failed. Budgets are wall-clock seconds;
// criteria without a stated budget print their runtime uninforced.
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/fock.hpp"
#include "braidlab/graded.hpp"
#include "braidlab/mixed.hpp"
#include "braidlab/qgroup.hpp"

using namespace braidlab;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget = 0.0;  // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

bool fail(std::string& why, const std::string& msg) {
    if (!why.empty()) why += "; ";
    why += msg;
    return false;
}

std::vector<long> upto(long top) {
    std::vector<long> out;
    for (long e = 0; e <= top; ++e) out.push_back(e);
    return out;
}

std::string pending_note;  // extra context printed under the criterion line

// ---- criterion bodies -------------------------------------------------

bool crit_gl11(std::string& why) {
    auto g = gl11_generators(Mode::exact);
    auto checks = gl11_bracket_checks(g.alpha, g.beta, g.gamma, g.delta);
    if (checks.size() != 9) return fail(why, "expected nine brackets");
    for (const auto& c : checks)
        if (c.residual != 0.0) return fail(why, c.name + " residual nonzero");
    return true;
}

bool crit_yang_baxter(std::string& why) {
    bool ok = true;
    for (long s = 2; s <= 12; ++s) {
        double r = check_yang_baxter(braid_matrix(BraidParameter::level(1, s), Mode::exact));
        if (r != 0.0) ok = fail(why, "level 1/" + std::to_string(s) + " residual nonzero");
    }
    std::mt19937_64 rng(1);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 20; ++i) {
        const double radius =
            std::exp(std::log(0.5) + unit() * (std::log(2.0) - std::log(0.5)));
        const double angle = unit() * 2.0 * std::numbers::pi;
        auto p = BraidParameter::generic(Scalar(std::polar(radius, angle)));
        double r = check_yang_baxter(braid_matrix(p, Mode::floating));
        if (r > 1e-12) ok = fail(why, "random t residual " + std::to_string(r));
    }
    return ok;
}

bool crit_braid_order(std::string& why) {
    bool ok = true;
    for (long s = 2; s <= 12; ++s) {
        auto rep = braid_order(s);
        if (!rep.holds_at_s || rep.minimal_order != s)
            ok = fail(why, "s=" + std::to_string(s) + " order not minimal");
    }
    if (braid_order_generic(BraidParameter::generic(Scalar(-1L)), 100, Mode::exact))
        ok = fail(why, "t=-1 claims a finite order <= 100");
    return ok;
}

bool crit_truncation(std::string& why) {
    bool ok = true;
    for (long s = 2; s <= 6; ++s)
        for (unsigned n = 1; n <= 8; ++n) {
            auto lr = ladder(BraidParameter::level(1, s), n, n + 1, Mode::exact);
            std::vector<long> energies;
            for (const auto& e : lr.entries)
                if (!e.vanished) {
                    if (!e.energy || *e.energy != static_cast<long>(e.n)) {
                        ok = fail(why, "s=" + std::to_string(s) + " N=" + std::to_string(n) +
                                           " v_" + std::to_string(e.n) +
                                           " is not an exact eigenvector");
                        continue;
                    }
                    energies.push_back(*e.energy);
                }
            const long top = static_cast<long>(n) < s ? static_cast<long>(n) : s - 1;
            if (energies != upto(top))
                ok = fail(why,
                          "s=" + std::to_string(s) + " N=" + std::to_string(n) + " energy set");
        }
    return ok;
}

bool crit_untruncated(std::string& why) {
    bool ok = true;
    for (Scalar t : {Scalar(-1L), Scalar(2L)})
        for (unsigned n = 1; n <= 8; ++n) {
            auto sp = spectrum(BraidParameter::generic(t), n, Mode::exact);
            if (sp.energies != upto(static_cast<long>(n)))
                ok = fail(why, "t=" + t.to_string() + " N=" + std::to_string(n));
        }
    return ok;
}

bool crit_r_independence(std::string& why) {
    bool ok = true;
    for (long s = 2; s <= 9; ++s) {
        const unsigned n_hi = static_cast<unsigned>(std::min<long>(s + 1, 8));
        for (unsigned n = 1; n <= n_hi; ++n) {
            auto base = spectrum(BraidParameter::level(1, s), n, Mode::exact);
            for (long r = 2; r < s; ++r) {
                if (std::gcd(r, s) != 1) continue;
                auto other = spectrum(BraidParameter::level(r, s), n, Mode::exact);
                if (other.energies != base.energies ||
                    other.truncation_index != base.truncation_index)
                    ok = fail(why, "r=" + std::to_string(r) + "/" + std::to_string(s) +
                                       " N=" + std::to_string(n) + " differs");
            }
        }
    }
    return ok;
}

bool crit_nilpotency(std::string& why) {
    bool ok = true;
    for (long s = 2; s <= 5; ++s)
        for (unsigned n = 1; n <= 6; ++n) {
            auto q = creation_total(BraidParameter::level(1, s), n, Mode::exact);
            const unsigned deg = std::min<unsigned>(static_cast<unsigned>(s), n + 1);
            if (!q.matrix.pow(deg).fast_zero() || q.matrix.pow(deg - 1).fast_zero())
                ok = fail(why, "s=" + std::to_string(s) + " N=" + std::to_string(n));
        }
    return ok;
}

bool crit_lowering_oracle(std::string& why) {
    // Substitutes the assembled generators into the defining anticommutator
    // and compares entrywise against direct sinh evaluation, independently of
    // the recursion that produced the lowering coefficients.
    bool ok = true;
    for (long s : {3L, 5L, 6L, 7L, 9L})
        for (mpq_class lambda : {mpq_class(0), mpq_class(1, 3)}) {
            Eta eta = Eta::exact_i_pi(mpq_class(2 * (s - 2), s));
            auto rep = build_rep(eta, lambda, 6);
            Matrix anti = rep.f_plus * rep.f_minus + rep.f_minus * rep.f_plus;
            const Scalar inv = eta.sinh_multiple(mpq_class(2)).inverse();
            for (unsigned n = 0; n < 6; ++n) {
                Scalar expect = eta.sinh_multiple(lambda + mpq_class(n, 2)) * inv;
                if (!(anti.at(n, n) - expect).fast_zero())
                    ok = fail(why, "s=" + std::to_string(s) + " n=" + std::to_string(n));
                for (unsigned i = 0; i <= 6; ++i)
                    if (i != n && !anti.at(i, n).fast_zero())
                        ok = fail(why, "off-diagonal at s=" + std::to_string(s));
            }
        }
    return ok;
}

bool crit_qgroup(std::string& why) {
    bool ok = true;
    for (long s : {3L, 5L, 6L, 7L, 9L}) {
        auto rep = build_rep_level(1, s, 5, Mode::exact);
        if (check_relations(rep) != 0.0)
            ok = fail(why, "relations at s=" + std::to_string(s));
        if (coassociativity_residual(rep) != 0.0)
            ok = fail(why, "coassociativity at s=" + std::to_string(s));
        for (unsigned n = 1; n <= 4; ++n)
            if (!match_spectrum(BraidParameter::level(1, s), n, Mode::exact).matched)
                ok = fail(why, "match s=" + std::to_string(s) + " N=" + std::to_string(n));
    }
    for (long s : {2L, 4L, 8L}) {
        bool threw = false;
        try {
            build_rep_level(1, s, 4, Mode::exact);
        } catch (const SingularLevelError&) {
            threw = true;
        }
        if (!threw) ok = fail(why, "s=" + std::to_string(s) + " missing singular error");
    }
    return ok;
}

bool crit_mixed(std::string& why) {
    bool ok = true;
    // interpolation identities at the two classical angles, plus swap symmetry
    auto fam = generator_family(BraidParameter::level(1, 3), 2, Mode::exact);
    auto x = fam.creators[0], y = fam.annihilators[0];
    if (!(mixed_bracket(x, y, PiRational(0, 1)).matrix ==
          bracket(x, y, BracketKind::anticommutator).matrix))
        ok = fail(why, "theta=0 is not the anticommutator");
    if (!(mixed_bracket(x, y, PiRational(1, 2)).matrix ==
          bracket(x, y, BracketKind::commutator).matrix.scaled(Scalar::i_unit(Mode::exact))))
        ok = fail(why, "theta=pi/2 is not i times the commutator");
    for (auto th : {PiRational(2, 7), PiRational(-3, 5)})
        if (!(mixed_bracket(x, y, th).matrix == mixed_bracket(y, x, -th).matrix))
            ok = fail(why, "swap symmetry");

    // solved cross angles, both signs
    for (long s = 2; s <= 12; ++s) {
        auto f = generator_family(BraidParameter::level(1, s), 2, Mode::exact);
        auto sol = solve_angle(f.creators[0], f.creators[1]);
        if (!sol || sol->theta != PiRational(s + 2, 2 * s))
            ok = fail(why, "cross angle at s=" + std::to_string(s));
        auto table = verify_heisenberg(BraidParameter::level(1, s), 2).table;
        if (table.at(2, 1).theta != -PiRational(s + 2, 2 * s))
            ok = fail(why, "mirror angle at s=" + std::to_string(s));
    }

    // mixed metaabelianess on the full grid
    for (long s = 2; s <= 6; ++s)
        for (unsigned n = 2; n <= 4; ++n) {
            if (!verify_heisenberg(BraidParameter::level(1, s), n).passed())
                ok = fail(why, "closure s=" + std::to_string(s) + " N=" + std::to_string(n));
            if (!check_meta_abelian_mixed(BraidParameter::level(1, s), n))
                ok = fail(why, "mixed s=" + std::to_string(s) + " N=" + std::to_string(n));
        }

    // ordinary commutators must fail with a witness for every s >= 3; the
    // designated reference triple is evaluated and reported, not presumed.
    for (long s = 3; s <= 9; ++s) {
        auto ord = check_meta_abelian_ordinary(BraidParameter::level(1, s), 2);
        if (ord.violations.empty())
            ok = fail(why, "no ordinary witness at s=" + std::to_string(s));
        if (s == 3)
            pending_note = std::string("reference triple evaluates to ") +
                           (ord.reference_nonzero ? "a nonzero matrix" : "zero") +
                           " at s=3 (reported, not asserted)";
    }
    return ok;
}

std::string cli_path;  // set from --cli

bool run_cli(const std::string& args, const std::filesystem::path& out) {
    const std::string cmd = cli_path + " " + args + " --out " + out.string();
    return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool crit_determinism(std::string& why) {
    if (cli_path.empty()) return fail(why, "no --cli path given; cannot drive the binary");
    const auto dir = std::filesystem::temp_directory_path();
    bool ok = true;
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"verify --seed 42", "det-verify"},
        {"qgroup --level 1/3 --level 2/5 --particles 1..3", "det-qgroup"},
        {"algebra --level 1/3 --particles 2..3", "det-algebra"},
    };
    for (const auto& [args, stem] : runs) {
        const auto a = dir / (stem + "-a.json");
        const auto b = dir / (stem + "-b.json");
        if (!run_cli(args, a) || !run_cli(args, b)) {
            ok = fail(why, stem + " run failed");
            continue;
        }
        if (slurp(a) != slurp(b) || slurp(a).empty())
            ok = fail(why, stem + " outputs differ");
        std::filesystem::remove(a);
        std::filesystem::remove(b);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    // The lowering-coefficient oracle (9) deliberately runs before the main
    // quantum-group suite (8).
    std::vector<Criterion> criteria = {
        {1, "gl(1|1) bracket suite", 1.0, crit_gl11},
        {2, "Yang-Baxter residuals", 1.0, crit_yang_baxter},
        {3, "braid order minimality", 1.0, crit_braid_order},
        {4, "spectrum truncation grid", 30.0, crit_truncation},
        {5, "untruncated generic spectra", 10.0, crit_untruncated},
        {6, "r-independence", 0.0, crit_r_independence},
        {7, "creation operator nilpotency", 0.0, crit_nilpotency},
        {9, "lowering-coefficient oracle", 0.0, crit_lowering_oracle},
        {8, "quantum-group cross-check", 60.0, crit_qgroup},
        {10, "mixed-bracket suite", 30.0, crit_mixed},
        {11, "CLI determinism", 0.0, crit_determinism},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            fail(why, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0.0 && secs > c.budget) {
            ok = false;
            fail(why, "over budget");
        }
        std::printf("%s  criterion %2d: %-32s %6.2fs", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), secs);
        if (c.budget > 0.0) std::printf(" (budget %.0fs)", c.budget);
        if (!ok) std::printf("  [%s]", why.c_str());
        std::printf("\n");
        if (!pending_note.empty()) {
            std::printf("      note: %s\n", pending_note.c_str());
            pending_note.clear();
        }
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
