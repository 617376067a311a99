#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "wedgelab/combinatorics.hpp"
#include "wedgelab/config.hpp"
#include "wedgelab/homology.hpp"
#include "wedgelab/simplicial.hpp"

using wedgelab::binomial;
using wedgelab::build_ordered;
using wedgelab::build_unordered;
using wedgelab::complete_graph;
using wedgelab::ConfigComplex;
using wedgelab::euler_characteristic;
using wedgelab::f_vector;
using wedgelab::factorial;
using wedgelab::full_simplex;
using wedgelab::Integer;
using wedgelab::SimplicialComplex;
using wedgelab::stirling2;

namespace {

// Independent count: a d-cell of the k-point complex on the n-simplex picks
// k+d of the n+1 vertices, groups them into k nonempty blocks and assigns
// the blocks to the k slots.
Integer expected_cells(int n, int k, int d) {
    return factorial(k) * binomial(n + 1, k + d) * stirling2(k + d, k);
}

bool is_zero(const wedgelab::SparseIntMatrix& M) { return M.entries().empty(); }

}  // namespace

TEST_CASE("cell counts on simplices match the choose-partition-order count") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 1; k <= n + 1; ++k) {
            ConfigComplex C = build_ordered(full_simplex(n), k);
            CHECK(C.dim() == n + 1 - k);
            for (int d = 0; d <= C.dim(); ++d)
                CHECK(Integer(C.cell_count(d)) == expected_cells(n, k, d));
        }
}

TEST_CASE("two points on the triangle form a hexagon") {
    ConfigComplex C = build_ordered(full_simplex(2), 2);
    CHECK(f_vector(C) == std::vector<long long>{6, 6});
    CHECK(euler_characteristic(C) == 0);
}

TEST_CASE("two points on the tetrahedron form a cuboctahedron") {
    ConfigComplex C = build_ordered(full_simplex(3), 2);
    CHECK(f_vector(C) == std::vector<long long>{12, 24, 14});
    CHECK(euler_characteristic(C) == 2);
    // 2-cells: eight triangle-by-vertex products with three sides, six
    // edge-by-edge squares with four
    auto bnd = boundary_matrices(C);
    REQUIRE(bnd.size() == 2);
    int tri = 0, sq = 0;
    for (long long c = 0; c < bnd[1].cols(); ++c) {
        auto [lo, hi] = bnd[1].col_range(c);
        long long nnz = hi - lo;
        if (nnz == 3) ++tri;
        if (nnz == 4) ++sq;
    }
    CHECK(tri == 8);
    CHECK(sq == 6);
}

TEST_CASE("three points on the tetrahedron") {
    ConfigComplex C = build_ordered(full_simplex(3), 3);
    CHECK(f_vector(C) == std::vector<long long>{24, 36});
    CHECK(euler_characteristic(C) == -12);
}

TEST_CASE("maximal point count gives a discrete set of permutations") {
    ConfigComplex C = build_ordered(full_simplex(2), 3);
    CHECK(f_vector(C) == std::vector<long long>{6});
    CHECK(euler_characteristic(C) == 6);
    ConfigComplex D = build_ordered(full_simplex(4), 5);
    CHECK(f_vector(D) == std::vector<long long>{120});
}

TEST_CASE("too many points leaves nothing") {
    ConfigComplex C = build_ordered(full_simplex(2), 4);
    CHECK(C.dim() == -1);
    CHECK(C.total_cells() == 0);
    CHECK(f_vector(C).empty());
    CHECK(euler_characteristic(C) == 0);
}

TEST_CASE("zero points is a single point") {
    ConfigComplex C = build_ordered(full_simplex(3), 0);
    CHECK(f_vector(C) == std::vector<long long>{1});
    CHECK(euler_characteristic(C) == 1);
}

TEST_CASE("two points on the complete graph on five vertices") {
    ConfigComplex C = build_ordered(complete_graph(5), 2);
    CHECK(f_vector(C) == std::vector<long long>{20, 60, 30});
    CHECK(euler_characteristic(C) == -10);
}

TEST_CASE("cells are stored in strictly increasing tuple order") {
    ConfigComplex C = build_ordered(full_simplex(3), 2);
    for (int d = 0; d <= C.dim(); ++d)
        for (long long i = 1; i < C.cell_count(d); ++i) {
            auto a = C.cell_parts(d, i - 1);
            auto b = C.cell_parts(d, i);
            CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
        }
}

TEST_CASE("cell lookup round-trips") {
    ConfigComplex C = build_ordered(full_simplex(4), 3);
    for (int d = 0; d <= C.dim(); ++d)
        for (long long i = 0; i < C.cell_count(d); ++i)
            CHECK(C.cell_index(d, C.cell_parts(d, i)) == i);
    std::vector<int> bogus{0, 0, 0};
    CHECK(C.cell_index(0, bogus) == -1);
}

TEST_CASE("unordered complexes have one representative per orbit") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= std::min(n + 1, 4); ++k) {
            ConfigComplex O = build_ordered(full_simplex(n), k);
            ConfigComplex U = build_unordered(full_simplex(n), k);
            CHECK(U.dim() == O.dim());
            for (int d = 0; d <= O.dim(); ++d)
                CHECK(Integer(O.cell_count(d)) == factorial(k) * U.cell_count(d));
            for (int d = 0; d <= U.dim(); ++d)
                for (long long i = 0; i < U.cell_count(d); ++i) {
                    auto parts = U.cell_parts(d, i);
                    for (size_t t = 1; t < parts.size(); ++t) CHECK(parts[t - 1] < parts[t]);
                }
        }
}

TEST_CASE("unordered two points on the tetrahedron") {
    ConfigComplex U = build_unordered(full_simplex(3), 2);
    CHECK(f_vector(U) == std::vector<long long>{6, 12, 7});
    CHECK(euler_characteristic(U) == 1);
}

TEST_CASE("boundaries compose to zero") {
    std::vector<SimplicialComplex> spaces = {full_simplex(3), full_simplex(4), complete_graph(5),
                                             wedgelab::skeleton(full_simplex(3), 1)};
    for (const SimplicialComplex& X : spaces)
        for (int k = 1; k <= 3; ++k)
            for (bool ordered : {true, false}) {
                ConfigComplex C = ordered ? build_ordered(X, k) : build_unordered(X, k);
                auto bnd = boundary_matrices(C);
                for (size_t d = 1; d < bnd.size(); ++d)
                    CHECK(is_zero(multiply(bnd[d - 1], bnd[d])));
            }
}

TEST_CASE("boundary of the hexagon has rank five") {
    ConfigComplex C = build_ordered(full_simplex(2), 2);
    auto bnd = boundary_matrices(C);
    REQUIRE(bnd.size() == 1);
    CHECK(wedgelab::smith_rank(bnd[0]) == 5);
}

TEST_CASE("face poset of the hexagon") {
    ConfigComplex C = build_ordered(full_simplex(2), 2);
    wedgelab::Poset P = wedgelab::face_poset(C);
    CHECK(P.size() == 12);
    for (int a = 0; a < P.size(); ++a) CHECK(P.leq(a, a));
    // each edge covers exactly its two endpoints
    CHECK(P.hasse_edges().size() == 12);
    ConfigComplex U = build_unordered(full_simplex(2), 2);
    CHECK_THROWS_AS(wedgelab::face_poset(U), std::invalid_argument);
}

TEST_CASE("complex summary serializes counts as strings") {
    ConfigComplex C = build_ordered(full_simplex(3), 2);
    nlohmann::ordered_json j = wedgelab::complex_summary(C, "simplex:3");
    CHECK(j["space"] == "simplex:3");
    CHECK(j["k"] == "2");
    CHECK(j["ordered"] == true);
    CHECK(j["f_vector"] == nlohmann::ordered_json::array({"12", "24", "14"}));
    CHECK(j["dim"] == "2");
    CHECK(j["euler"] == "2");
}
