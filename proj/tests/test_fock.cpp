#include "braidlab/fock.hpp"

#include <complex>
#include <vector>

#include "doctest.h"

using namespace braidlab;

TEST_CASE("ladder_norms_at_level_one_third") {
    // N = 2 at s = 3: |v_n|^2 = 1, 2, 1 and v_3 = 0
    auto lr = ladder(BraidParameter::level(1, 3), 2, 3, Mode::exact);
    CHECK(lr.entries[0].norm_squared == Scalar(1L));
    CHECK(lr.entries[1].norm_squared == Scalar(2L));
    CHECK(lr.entries[2].norm_squared == Scalar(1L));
    CHECK(lr.entries[3].vanished);
    REQUIRE(lr.truncation_index);
    CHECK(*lr.truncation_index == 3);
    REQUIRE(lr.entries[2].energy);
    CHECK(*lr.entries[2].energy == 2);
}

TEST_CASE("spectrum_truncates_at_the_level") {
    auto sp = spectrum(BraidParameter::level(1, 3), 5, Mode::exact);
    CHECK(sp.energies == std::vector<long>{0, 1, 2});
    REQUIRE(sp.plateau);
    CHECK(*sp.plateau == 2);
    // below the level nothing truncates
    auto sp2 = spectrum(BraidParameter::level(1, 5), 3, Mode::exact);
    CHECK(sp2.energies == std::vector<long>{0, 1, 2, 3});
    CHECK(!sp2.plateau);
}

TEST_CASE("generic_t_spectrum_never_truncates") {
    auto sp = spectrum(BraidParameter::generic(Scalar(-1L)), 4, Mode::exact);
    CHECK(sp.energies == std::vector<long>{0, 1, 2, 3, 4});
    auto sp2 = spectrum(BraidParameter::generic(Scalar(2L)), 4, Mode::exact);
    CHECK(sp2.energies == std::vector<long>{0, 1, 2, 3, 4});
    auto spf = spectrum(BraidParameter::generic(Scalar(std::complex<double>(0.3, 1.7))), 5,
                        Mode::floating, 1e-9);
    CHECK(spf.energies == std::vector<long>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("spectrum_is_r_independent") {
    // coprime numerators at s = 5 give the same energy sets
    for (long r : {2L, 3L, 4L}) {
        for (unsigned n = 1; n <= 6; ++n) {
            auto base = spectrum(BraidParameter::level(1, 5), n, Mode::exact);
            auto other = spectrum(BraidParameter::level(r, 5), n, Mode::exact);
            CHECK(base.energies == other.energies);
            CHECK(base.truncation_index == other.truncation_index);
        }
    }
}

TEST_CASE("pauli_exclusion_at_s_equals_two") {
    // the total creation operator squares to zero on two sites
    auto q = creation_total(BraidParameter::level(1, 2), 2, Mode::exact);
    CHECK(q.matrix.pow(2).fast_zero());
    CHECK(!q.matrix.fast_zero());
}

TEST_CASE("nilpotency_degree_matches_the_level") {
    for (long s : {2L, 3L, 4L, 5L})
        for (unsigned n = 1; n <= 4; ++n) {
            auto q = creation_total(BraidParameter::level(1, s), n, Mode::exact);
            const unsigned degree = std::min<unsigned>(static_cast<unsigned>(s), n + 1);
            CHECK(q.matrix.pow(degree).fast_zero());
            CHECK(!q.matrix.pow(degree - 1).fast_zero());
        }
}

TEST_CASE("ladder_states_stay_superselected") {
    StateVector v = vacuum(3, Mode::exact);
    auto q = creation_total(BraidParameter::level(1, 4), 3, Mode::exact);
    for (int n = 0; n <= 3; ++n) {
        CHECK(is_superselected(v));
        v = apply(q, v);
    }
}
