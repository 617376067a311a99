#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/combinatorics.hpp"
#include "wedgelab/config.hpp"
#include "wedgelab/verify.hpp"

using wedgelab::betti_closed;
using wedgelab::betti_from_y_rank;
using wedgelab::betti_recurrence;
using wedgelab::BettiTable;
using wedgelab::build_unordered;
using wedgelab::euler_characteristic;
using wedgelab::euler_from_cells;
using wedgelab::euler_from_formula;
using wedgelab::factorial;
using wedgelab::full_simplex;
using wedgelab::Integer;
using wedgelab::ipow;
using wedgelab::run_verification;
using wedgelab::y_rank;

TEST_CASE("top betti closed form") {
    for (int n = 1; n <= 8; ++n) CHECK(betti_closed(2, n) == 1);
    for (int n = 2; n <= 10; ++n) CHECK(betti_closed(3, n) == ipow(Integer(2), n + 1) - 3);
    for (int n = 3; n <= 10; ++n)
        CHECK(betti_closed(4, n) ==
              ipow(Integer(3), n + 1) - 4 * ipow(Integer(2), n + 1) + 6);
    CHECK(betti_closed(3, 2) == 5);
    CHECK(betti_closed(3, 5) == 61);
    CHECK(betti_closed(4, 4) == 121);
    // k = n+1: a cloud of k! points, so k!-1 reduced zero-spheres
    for (int k = 1; k <= 7; ++k) CHECK(betti_closed(k, k - 1) == factorial(k) - 1);
    CHECK_THROWS_AS(betti_closed(0, 3), std::domain_error);
    CHECK_THROWS_AS(betti_closed(4, 2), std::domain_error);
}

TEST_CASE("euler characteristic via the betti number") {
    CHECK(euler_from_formula(2, 2) == 0);
    CHECK(euler_from_formula(2, 3) == 2);
    for (int k = 1; k <= 8; ++k) CHECK(euler_from_formula(k, k - 1) == factorial(k));
}

TEST_CASE("euler characteristic via alternating cell counts") {
    CHECK(euler_from_cells(2, 2) == 0);
    CHECK(euler_from_cells(2, 3) == 2);
    CHECK(euler_from_cells(4, 5) == 480);
    for (int n = 0; n <= 10; ++n)
        for (int k = 1; k <= n + 1; ++k) CHECK(euler_from_cells(k, n) == euler_from_formula(k, n));
}

TEST_CASE("degenerate slices of the cell-count euler characteristic") {
    for (int n = -1; n <= 8; ++n) CHECK(euler_from_cells(0, n) == 1);
    for (int k = 1; k <= 8; ++k) CHECK(euler_from_cells(k, -1) == 0);
    // fewer than k vertices: empty complex
    CHECK(euler_from_cells(3, 0) == 0);
    CHECK(euler_from_cells(5, 2) == 0);
    CHECK_THROWS_AS(euler_from_cells(-1, 2), std::domain_error);
    CHECK_THROWS_AS(euler_from_cells(2, -2), std::domain_error);
}

TEST_CASE("rank of the surviving bottom row") {
    CHECK(y_rank(3, 3) == 9);
    CHECK(y_rank(3, 4) == 14);
    CHECK(y_rank(4, 4) == 56);
    CHECK_THROWS_AS(y_rank(2, 5), std::domain_error);
    CHECK_THROWS_AS(y_rank(3, 2), std::domain_error);
}

TEST_CASE("the peeling recurrence reproduces the closed form") {
    CHECK(betti_recurrence(3, 3) == 13);
    CHECK(betti_recurrence(3, 4) == 29);
    for (int k = 3; k <= 10; ++k)
        for (int n = k; n <= 10; ++n) CHECK(betti_recurrence(k, n) == betti_closed(k, n));
    // also at n = k-1, where the closed form gives k!-1
    for (int k = 3; k <= 8; ++k) CHECK(betti_recurrence(k, k - 1) == factorial(k) - 1);
    // the k=2 grounding pins the base convention directly
    CHECK(betti_recurrence(2, 1) == 2);
    for (int n = 2; n <= 6; ++n) CHECK(betti_recurrence(2, n) == 1);
}

TEST_CASE("the alternate base convention breaks the recurrence") {
    auto minus_one = [](int j) { return Integer(factorial(j) - 1); };
    CHECK(betti_recurrence(3, 3, minus_one) == 7);  // -3 + 6*1 + 4*1
    CHECK(betti_recurrence(3, 3, minus_one) != betti_closed(3, 3));
    CHECK(betti_recurrence(3, 4, minus_one) != betti_closed(3, 4));
}

TEST_CASE("the bottom-row split of the recurrence agrees as well") {
    CHECK(betti_from_y_rank(3, 3) == 13);  // 9 + 4*1
    for (int k = 3; k <= 10; ++k)
        for (int n = k; n <= 10; ++n) CHECK(betti_from_y_rank(k, n) == betti_closed(k, n));
    CHECK_THROWS_AS(betti_from_y_rank(3, 2), std::domain_error);
}

TEST_CASE("generating function slices") {
    wedgelab::BivariateSeries S = wedgelab::egf_series(12);
    using wedgelab::Rational;
    for (int n = 0; n <= 12; ++n)
        CHECK(S.coeff(0, n) == Rational(1) / Rational(factorial(n)));
    // x^2 y^3: chi of the hexagon; x^2 y^4: chi of the cuboctahedron
    CHECK(S.coeff(2, 3) * Rational(factorial(2) * factorial(3)) == Rational(0));
    CHECK(S.coeff(2, 4) * Rational(factorial(2) * factorial(4)) == Rational(2));
    CHECK_THROWS_AS(wedgelab::egf_series(25), std::domain_error);
}

TEST_CASE("generating function coefficients equal the euler characteristics") {
    const int D = 12;
    wedgelab::BivariateSeries S = wedgelab::egf_series(D);
    using wedgelab::Rational;
    for (int k = 0; k <= D; ++k)
        for (int n = 0; k + n <= D; ++n) {
            Rational lhs = S.coeff(k, n) * Rational(factorial(k) * factorial(n));
            CHECK(lhs == Rational(euler_from_cells(k, n - 1)));
        }
}

TEST_CASE("quotient euler characteristic divides by the group order") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            Integer chi = euler_from_cells(k, n);
            Integer q, r;
            boost::multiprecision::divide_qr(chi, factorial(k), q, r);
            CHECK(r == 0);
            CHECK(euler_characteristic(build_unordered(full_simplex(n), k)) == q);
        }
}

TEST_CASE("verification table, formulas only") {
    BettiTable T = run_verification(4, 4, false);
    CHECK(T.all_pass());
    const wedgelab::BettiRow* r33 = T.find(3, 3);
    REQUIRE(r33 != nullptr);
    CHECK(r33->betti_formula == 13);
    REQUIRE(r33->betti_recurrence.has_value());
    CHECK(*r33->betti_recurrence == 13);
    CHECK(!r33->betti_homology.has_value());
    // the k=2, n=1 row records both conventions without failing the table
    const wedgelab::BettiRow* r21 = T.find(2, 1);
    REQUIRE(r21 != nullptr);
    CHECK(r21->betti_formula == 1);
    CHECK(*r21->betti_recurrence == 2);
    CHECK(r21->pass);
}

TEST_CASE("verification table with homology") {
    BettiTable T = run_verification(4, 4, true);
    CHECK(T.all_pass());
    const wedgelab::BettiRow* r = T.find(2, 3);
    REQUIRE(r != nullptr);
    REQUIRE(r->betti_homology.has_value());
    CHECK(*r->betti_homology == 1);
    int homology_rows = 0;
    for (const auto& row : T.rows)
        if (row.betti_homology) ++homology_rows;
    CHECK(homology_rows == 6);  // 2<=k<=n<=4
}

TEST_CASE("worker pool aggregation is deterministic") {
    BettiTable a = run_verification(4, 4, true, 1);
    BettiTable b = run_verification(4, 4, true, 3);
    CHECK(wedgelab::table_to_csv(a) == wedgelab::table_to_csv(b));
}

TEST_CASE("fault injection is caught and reported") {
    BettiTable T = run_verification(3, 3, false, 1, true);
    CHECK(!T.all_pass());
    bool found = false;
    for (const auto& r : T.rows)
        if (!r.pass && r.note.find("compose to zero") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("table serialization") {
    BettiTable T = run_verification(3, 3, false);
    std::string csv = wedgelab::table_to_csv(T);
    CHECK(csv.rfind("k,n,betti_formula,betti_recurrence,betti_homology,euler_cells,euler_formula,"
                    "status\n", 0) == 0);
    CHECK(csv.find("3,3,13,13,,-12,-12,pass") != std::string::npos);
    CHECK(csv == wedgelab::table_to_csv(run_verification(3, 3, false)));
    nlohmann::ordered_json j = wedgelab::table_to_json(T);
    REQUIRE(!j.empty());
    CHECK(j[0]["k"] == "1");
    CHECK(j[0]["betti_homology"].is_null());
    for (const auto& row : j) CHECK(row["status"] == "pass");
}
