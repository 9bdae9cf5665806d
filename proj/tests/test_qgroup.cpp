#include "braidlab/qgroup.hpp"

#include <numeric>
#include <vector>

#include "doctest.h"

using namespace braidlab;

TEST_CASE("rep_coefficients_at_level_one_third") {
    auto rep = build_rep_level(1, 3, 4, Mode::exact);
    // lowest-weight vacuum: c_1 = 0 here, c_2 = -1
    CHECK(rep.lowering(1).fast_zero());
    CHECK(rep.lowering(2) == Scalar(-1L));
    // H |n> = (n/2) |n> at weight 0
    CHECK(rep.h.at(3, 3) == Scalar(mpq_class(3, 2)));
    // e^{-eta/2} recovers the braid parameter
    CHECK(rep.eta.exp_multiple(mpq_class(-1, 2)) ==
          BraidParameter::level(1, 3).t_value(Mode::exact));
}

TEST_CASE("relations_hold_for_all_coprime_levels") {
    for (long s : {3L, 5L, 6L, 7L, 9L})
        for (long r = 1; r < s; ++r) {
            if (std::gcd(r, s) != 1) continue;
            auto rp = build_rep_level(r, s, 5, Mode::exact);
            CHECK(check_relations(rp) == 0.0);
            CHECK(coassociativity_residual(rp) == 0.0);
            CHECK(rp.eta.exp_multiple(mpq_class(-1, 2)) ==
                  BraidParameter::level(r, s).t_value(Mode::exact));
        }
}

TEST_CASE("singular_levels_throw_the_dedicated_error") {
    for (long s : {2L, 4L, 8L})
        CHECK_THROWS_AS(build_rep_level(1, s, 4, Mode::exact), SingularLevelError);
}

TEST_CASE("relation_check_detects_a_perturbed_generator") {
    auto rp = build_rep_level(1, 5, 4, Mode::exact);
    rp.f_minus.at(1, 2) += Scalar(1L);
    CHECK(check_relations(rp) > 0.5);
}

TEST_CASE("lowering_recursion_matches_the_closed_form") {
    // {F_+, F_-} acts diagonally as sinh(eta H) / sinh(2 eta); substitute the
    // assembled matrices and compare entrywise against direct evaluation.
    for (long s : {3L, 5L, 6L, 7L, 9L}) {
        for (mpq_class lambda : {mpq_class(0), mpq_class(1, 3)}) {
            const long r = 1;
            Eta eta = Eta::exact_i_pi(mpq_class(2 * (s - 2 * r), s));
            auto rep = build_rep(eta, lambda, 6);
            Matrix anti = rep.f_plus * rep.f_minus + rep.f_minus * rep.f_plus;
            const Scalar inv_sinh2 = eta.sinh_multiple(mpq_class(2)).inverse();
            for (unsigned n = 0; n < 6; ++n) {
                Scalar expect = eta.sinh_multiple(lambda + mpq_class(n, 2)) * inv_sinh2;
                CHECK(anti.at(n, n) == expect);
                for (unsigned i = 0; i <= 6; ++i)
                    if (i != n) CHECK(anti.at(i, n).fast_zero());
            }
        }
    }
}

TEST_CASE("small_eta_float_rep_approaches_the_classical_algebra") {
    // as eta -> 0 the anticommutator tends to H/2
    auto rp = build_rep(Eta::floating({1e-4, 0.0}), mpq_class(1, 3), 5);
    Matrix anti = rp.f_plus * rp.f_minus + rp.f_minus * rp.f_plus;
    Matrix half_h = rp.h.scaled(Scalar(std::complex<double>(0.5, 0)));
    double worst = 0;
    for (unsigned j = 0; j < 5; ++j)
        for (unsigned i = 0; i < 6; ++i)
            worst = std::max(worst, std::abs((anti.at(i, j) - half_h.at(i, j)).approx()));
    CHECK(worst < 1e-6);
}

TEST_CASE("projected_tower_truncates_like_the_fock_ladder") {
    auto tower = projected_tower(BraidParameter::level(1, 3), 1, 3, Mode::exact);
    CHECK(!tower.entries[0].vanished);
    CHECK(!tower.entries[1].vanished);
    CHECK(!tower.entries[2].vanished);
    CHECK(tower.entries[3].vanished);
    REQUIRE(tower.truncation_index);
    CHECK(*tower.truncation_index == 3);
    REQUIRE(tower.entries[2].energy);
    CHECK(*tower.entries[2].energy == 2);

    auto tall = projected_tower(BraidParameter::level(1, 5), 2, 4, Mode::exact);
    for (int n = 0; n <= 3; ++n) {
        CHECK(!tall.entries[n].vanished);
        CHECK(tall.entries[n].energy);
    }
    CHECK(tall.entries[4].vanished);
}

TEST_CASE("tower_and_ladder_spectra_match_on_a_grid") {
    for (long s : {3L, 5L, 6L, 7L, 9L})
        for (unsigned n = 1; n <= 4; ++n)
            CHECK(match_spectrum(BraidParameter::level(1, s), n, Mode::exact).matched);
    auto m1 = match_spectrum(BraidParameter::level(1, 3), 4, Mode::exact);
    CHECK(m1.qgroup_energies == std::vector<long>{0, 1, 2});
    auto m2 = match_spectrum(BraidParameter::level(1, 7), 3, Mode::exact);
    CHECK(m2.qgroup_energies == std::vector<long>{0, 1, 2, 3});
}

TEST_CASE("match_holds_at_the_plateau_boundary") {
    auto m = match_spectrum(BraidParameter::level(1, 6), 6, Mode::exact);
    CHECK(m.matched);
    CHECK(m.qgroup_energies == std::vector<long>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("match_is_r_independent") {
    for (long s : {5L, 7L, 9L})
        for (long r = 2; r < s; ++r) {
            if (std::gcd(r, s) != 1) continue;
            CHECK(match_spectrum(BraidParameter::level(r, s), 3, Mode::exact).matched);
        }
}
