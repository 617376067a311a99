// Acceptance gate: one line per criterion, wall-clock timed against budgets
// pinned below.  Exits nonzero if any criterion fails its checks or budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "wedgelab/combinatorics.hpp"
#include "wedgelab/config.hpp"
#include "wedgelab/homology.hpp"
#include "wedgelab/partitions.hpp"
#include "wedgelab/verify.hpp"

using namespace wedgelab;

namespace {

int g_passed = 0;
int g_total = 0;

void run_criterion(int id, const char* desc, long long budget_ms,
                   const std::function<bool(std::string&)>& body) {
    ++g_total;
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
        ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (ok && ms > budget_ms) {
        ok = false;
        note = "exceeded budget of " + std::to_string(budget_ms) + " ms";
    }
    if (ok) ++g_passed;
    std::printf("%s %2d %s (%lld ms)\n", ok ? "PASS" : "FAIL", id, desc, ms);
    if (!ok && !note.empty()) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
}

bool expect_homology(const HomologyResult& H, const std::vector<long long>& free_ranks,
                     std::string& note, const char* label) {
    if (static_cast<int>(free_ranks.size()) != H.top_degree() + 1) {
        note = std::string(label) + ": wrong number of degrees";
        return false;
    }
    for (size_t d = 0; d < free_ranks.size(); ++d) {
        if (H.free_rank[d] != free_ranks[d]) {
            note = std::string(label) + ": free rank mismatch in degree " + std::to_string(d);
            return false;
        }
        if (!H.torsion[d].empty()) {
            note = std::string(label) + ": unexpected torsion in degree " + std::to_string(d);
            return false;
        }
    }
    return true;
}

std::vector<long long> f_vector_oracle(int n, int k) {
    std::vector<long long> f;
    for (int d = 0;; ++d) {
        Integer c = factorial(k) * binomial(n + 1, k + d) * stirling2(k + d, k);
        if (c == 0) break;
        f.push_back(c.convert_to<long long>());
    }
    return f;
}

}  // namespace

int main() {
    run_criterion(1, "two points on a triangle form a hexagon", 100, [](std::string& note) {
        ConfigComplex C = build_ordered(full_simplex(2), 2);
        if (f_vector(C) != std::vector<long long>{6, 6}) {
            note = "f-vector is not (6, 6)";
            return false;
        }
        if (euler_characteristic(C) != 0) {
            note = "euler characteristic is not 0";
            return false;
        }
        return expect_homology(chain_homology(C), {1, 1}, note, "hexagon");
    });

    run_criterion(2, "two points on a tetrahedron form a cuboctahedron sphere", 100,
                  [](std::string& note) {
        ConfigComplex C = build_ordered(full_simplex(3), 2);
        if (f_vector(C) != std::vector<long long>{12, 24, 14}) {
            note = "f-vector is not (12, 24, 14)";
            return false;
        }
        if (euler_characteristic(C) != 2) {
            note = "euler characteristic is not 2";
            return false;
        }
        return expect_homology(chain_homology(C), {1, 0, 1}, note, "cuboctahedron");
    });

    run_criterion(3, "two points on the 4-simplex form a 3-sphere", 1000, [](std::string& note) {
        ConfigComplex C = build_ordered(full_simplex(4), 2);
        return expect_homology(chain_homology(C), {1, 0, 0, 1}, note, "4-simplex pair space");
    });

    run_criterion(4, "two points on the complete graph K5 form a genus-6 surface", 1000,
                  [](std::string& note) {
        ConfigComplex C = build_ordered(complete_graph(5), 2);
        if (euler_characteristic(C) != -10) {
            note = "euler characteristic is not -10";
            return false;
        }
        return expect_homology(chain_homology(C), {1, 12, 1}, note, "K5 pair space");
    });

    run_criterion(5, "verification table to n=6 with homology cross-checks", 300000,
                  [](std::string& note) {
        BettiTable T = run_verification(6, 6, true, 1);
        if (!T.all_pass()) {
            std::ostringstream os;
            os << "table has failing rows:";
            for (const auto& r : T.rows)
                if (!r.pass) os << " (" << r.k << "," << r.n << ")";
            note = os.str();
            return false;
        }
        const BettiRow* a = T.find(3, 5);
        const BettiRow* b = T.find(4, 4);
        if (!a || a->betti_formula != 61) {
            note = "row (3,5) does not report 61";
            return false;
        }
        if (!b || b->betti_formula != 121) {
            note = "row (4,4) does not report 121";
            return false;
        }
        int homology_rows = 0;
        for (const auto& r : T.rows)
            if (r.betti_homology) ++homology_rows;
        if (homology_rows != 15) {
            note = "expected 15 homology-verified rows, got " + std::to_string(homology_rows);
            return false;
        }
        return true;
    });

    run_criterion(6, "top homology rank matches the closed form for k=3,4", 120000,
                  [](std::string& note) {
        const std::pair<int, int> cases[] = {{3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}};
        for (auto [k, n] : cases) {
            HomologyResult H = chain_homology(build_ordered(full_simplex(n), k));
            int top = n - k + 1;
            if (H.top_degree() != top) {
                note = "unexpected top degree for k=" + std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
            if (Integer(H.free_rank[top]) != betti_closed(k, n) || !H.torsion[top].empty()) {
                note = "top homology mismatch for k=" + std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run_criterion(7, "first homology of the point-cloud-adjacent spaces", 30000,
                  [](std::string& note) {
        // H_1 of the k=n space on the n-simplex: rank (n-2)(n+1)!/2 + 1
        for (int n : {3, 4}) {
            HomologyResult H = chain_homology(build_ordered(full_simplex(n), n));
            Integer expected = Integer(n - 2) * factorial(n + 1) / 2 + 1;
            if (H.top_degree() != 1 || Integer(H.free_rank[1]) != expected ||
                !H.torsion[1].empty()) {
                note = "H_1 mismatch for n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    run_criterion(8, "three euler characteristic computations agree through n=7", 5000,
                  [](std::string& note) {
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= n + 1; ++k) {
                Integer a = euler_from_cells(k, n);
                Integer b = euler_from_formula(k, n);
                ConfigComplex C = build_ordered(full_simplex(n), k);
                Integer c = euler_characteristic(C);
                if (f_vector(C) != f_vector_oracle(n, k)) {
                    note = "cell counts disagree with the product formula at k=" +
                           std::to_string(k) + " n=" + std::to_string(n);
                    return false;
                }
                if (a != b || b != c) {
                    note = "euler characteristics disagree at k=" + std::to_string(k) +
                           " n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    run_criterion(9, "peeling recurrence equals closed form; wrong base breaks it", 1000,
                  [](std::string& note) {
        for (int k = 3; k <= 10; ++k)
            for (int n = k; n <= 10; ++n)
                if (betti_recurrence(k, n) != betti_closed(k, n)) {
                    note = "mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n);
                    return false;
                }
        auto minus_one = [](int j) { return Integer(factorial(j) - 1); };
        if (betti_recurrence(3, 3, minus_one) == betti_closed(3, 3)) {
            note = "alternate base convention unexpectedly matches at (3,3)";
            return false;
        }
        return true;
    });

    run_criterion(10, "exponential generating function matches cell counts", 5000,
                  [](std::string& note) {
        const int D = 12;
        BivariateSeries S = egf_series(D);
        for (int k = 0; k <= D; ++k)
            for (int n = 0; k + n <= D; ++n) {
                Rational lhs = S.coeff(k, n) * Rational(factorial(k) * factorial(n));
                if (lhs != Rational(euler_from_cells(k, n - 1))) {
                    note = "coefficient mismatch at x^" + std::to_string(k) + " y^" +
                           std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    run_criterion(11, "face poset is isomorphic to the partial partition poset", 30000,
                  [](std::string& note) {
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= n; ++k) face_poset_isomorphism(n, k);  // throws on failure
        PartitionPoset P = build_poset(4, 2);
        HomologyResult ho = chain_homology(order_complex(P));
        HomologyResult hc = chain_homology(build_ordered(full_simplex(3), 2));
        if (ho.free_rank != hc.free_rank || ho.torsion != hc.torsion) {
            note = "order complex homology differs from the configuration space";
            return false;
        }
        return expect_homology(ho, {1, 0, 1}, note, "order complex");
    });

    run_criterion(12, "unordered pair spaces carry 2-torsion", 5000, [](std::string& note) {
        HomologyResult a = chain_homology(build_unordered(full_simplex(3), 2));
        bool ok3 = a.free_rank == std::vector<long long>{1, 0, 0} && a.torsion[0].empty() &&
                   a.torsion[1] == std::vector<Integer>{2} && a.torsion[2].empty();
        if (!ok3) {
            note = "projective plane homology mismatch on the tetrahedron";
            return false;
        }
        HomologyResult b = chain_homology(build_unordered(full_simplex(4), 2));
        if (b.free_rank[0] != 1 || b.free_rank[1] != 0 || b.torsion[1] != std::vector<Integer>{2}) {
            note = "expected H_1 = Z/2 on the 4-simplex";
            return false;
        }
        return true;
    });

    run_criterion(13, "boundary operators square to zero; smith form matches an oracle", 60000,
                  [](std::string& note) {
        std::vector<std::pair<SimplicialComplex, int>> spaces;
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= n + 1; ++k) spaces.emplace_back(full_simplex(n), k);
        spaces.emplace_back(complete_graph(5), 2);
        for (const auto& [X, k] : spaces)
            for (bool ordered : {true, false}) {
                ConfigComplex C = ordered ? build_ordered(X, k) : build_unordered(X, k);
                auto B = boundary_matrices(C);
                for (size_t i = 0; i + 1 < B.size(); ++i)
                    if (multiply(B[i], B[i + 1]).nnz() != 0) {
                        note = "boundary composition is nonzero for k=" + std::to_string(k);
                        return false;
                    }
            }
        std::mt19937 rng(777001);
        std::uniform_int_distribution<int> dim(1, 8), val(-4, 4);
        for (int rep = 0; rep < 200; ++rep) {
            int r = dim(rng), c = dim(rng);
            std::vector<std::vector<Integer>> dense(r, std::vector<Integer>(c));
            SparseIntMatrix M(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) {
                    int v = val(rng);
                    dense[i][j] = v;
                    if (v != 0) M.add(i, j, v);
                }
            M.finalize();
            if (smith_invariants(M) != testsupport::snf_by_elimination(dense)) {
                note = "smith invariants disagree with the oracle at rep " + std::to_string(rep);
                return false;
            }
        }
        return true;
    });

    std::printf("acceptance: %d/%d criteria passed\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
