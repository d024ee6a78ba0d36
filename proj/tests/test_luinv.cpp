#include <sstream>

#include "doctest.h"
#include "qlink/local_unitary.hpp"
#include "qlink/random.hpp"

using namespace qlink;

TEST_CASE("identity and bit-flip unitaries act as expected") {
    PureState zero(1, {cplx{1, 0}, cplx{}});
    const PureState same = apply_single_qubit(zero, 1, LocalUnitary::identity());
    CHECK(same.amp(0) == cplx{1, 0});

    const LocalUnitary flip{cplx{}, cplx{1, 0}, 0.0};
    const PureState flipped = apply_single_qubit(zero, 1, flip);
    CHECK(std::abs(flipped.amp(0)) < 1e-15);
    CHECK(std::abs(std::abs(flipped.amp(1)) - 1.0) < 1e-15);

    CHECK_THROWS_AS(apply_single_qubit(zero, 2, flip), std::out_of_range);
}

TEST_CASE("apply_single_qubit preserves the norm") {
    auto rng = make_rng(101);
    for (int t = 0; t < 100; ++t) {
        const PureState psi = random_state(3, rng);
        const LocalUnitary u = random_local_unitary(rng);
        u.validate();
        const PureState out = apply_single_qubit(psi, 1 + t % 3, u);
        CHECK(std::abs(out.norm() - psi.norm()) < 1e-12);
    }
}

TEST_CASE("minor values on known states") {
    // two qubits: the single minor is a00*a11 - a01*a10
    PureState s(2, {cplx{2, 0}, cplx{3, 0}, cplx{5, 0}, cplx{7, 0}});
    CHECK(minor_det(s, MinorSpec{1, 0, 1}) == cplx{2 * 7 - 3 * 5, 0});

    PureState w(3);
    w.amp(bits_to_index("110")) = 1.0;
    w.amp(bits_to_index("011")) = 1.0;
    // k=1, contexts 10 and 11: det = a_010*a_111 - a_011*a_110 = -1
    const cplx m = minor_det(w, MinorSpec{1, bits_to_index("10"), bits_to_index("11")});
    CHECK(std::abs(std::abs(m) - 1.0) < 1e-15);

    CHECK_THROWS_AS(minor_det(s, MinorSpec{1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(minor_det(s, MinorSpec{3, 0, 1}), std::invalid_argument);
}

TEST_CASE("minor enumeration counts") {
    auto rng = make_rng(107);
    const PureState s2 = random_state(2, rng);
    CHECK(all_minors(s2, 1).size() == 1);  // (2^{n-1} choose 2) = 1 per position
    CHECK(all_minors(s2, 2).size() == 1);
    const PureState s3 = random_state(3, rng);
    CHECK(all_minors(s3, 1).size() == 6);  // (4 choose 2)
}

TEST_CASE("all minors vanish exactly for products, not for GHZ") {
    auto rng = make_rng(109);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 25; ++t) CHECK(all_minors_vanish(random_product_state(n, rng), 1e-9));

    PureState ghz(3);
    const double r = 1.0 / std::sqrt(2.0);
    ghz.amp(bits_to_index("000")) = r;
    ghz.amp(bits_to_index("111")) = r;
    CHECK_FALSE(all_minors_vanish(ghz, 1e-9));
    CHECK(std::abs(minor_det(ghz, MinorSpec{1, bits_to_index("00"), bits_to_index("11")}) -
                   cplx{0.5, 0}) < 1e-15);
}

TEST_CASE("minor modulus is invariant under a local unitary at its position") {
    auto rng = make_rng(113);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 2;
        const PureState psi = random_state(n, rng);
        const int k = 1 + t % n;
        const std::uint64_t contexts = std::uint64_t{1} << (n - 1);
        std::uniform_int_distribution<std::uint64_t> ctx(0, contexts - 1);
        std::uint64_t a = ctx(rng), b = ctx(rng);
        if (a == b) continue;
        const MinorSpec spec{k, std::min(a, b), std::max(a, b)};
        const LocalUnitary u = random_local_unitary(rng);
        const double before = std::abs(minor_det(psi, spec));
        const double after = std::abs(minor_det(apply_single_qubit(psi, k, u), spec));
        CHECK(std::abs(before - after) < 1e-9);
    }
}

TEST_CASE("two-qubit minor modulus survives U (x) V") {
    auto rng = make_rng(127);
    for (int t = 0; t < 300; ++t) {
        const PureState psi = random_state(2, rng);
        const MinorSpec spec{1, 0, 1};
        PureState out = apply_single_qubit(psi, 1, random_local_unitary(rng));
        out = apply_single_qubit(out, 2, random_local_unitary(rng));
        CHECK(std::abs(std::abs(minor_det(out, spec)) - std::abs(minor_det(psi, spec))) < 1e-9);
    }
}

TEST_CASE("conjecture scan runs and reports") {
    std::ostringstream table;
    const ScanReport report = conjecture_scan(3, 60, 12345, &table);
    CHECK(report.trials == 60);
    CHECK(table.str().find("counterexamples=" + std::to_string(report.counterexamples)) !=
          std::string::npos);
}
