// Integer homology of chain complexes via Smith normal form of sparse
// boundary matrices.  Elimination runs on machine words with overflow
// detection and falls back to arbitrary precision when needed.

#ifndef WEDGELAB_HOMOLOGY_HPP
#define WEDGELAB_HOMOLOGY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "integer.hpp"
#include "simplicial.hpp"
#include "sparse_matrix.hpp"

namespace wedgelab {

namespace detail {

struct snf_overflow {};

inline std::uint64_t uabs64(long long v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

// Heap key: clamped absolute value, then (row, col).  Pivot selection pops
// the smallest absolute value, ties broken by lowest row then column.
constexpr std::uint64_t kAbsClamp = 1ull << 62;

struct PivotKey {
    std::uint64_t a;
    int r;
    int c;
    bool operator>(const PivotKey& o) const {
        if (a != o.a) return a > o.a;
        if (r != o.r) return r > o.r;
        return c > o.c;
    }
};

template <class T>
std::uint64_t clamped_abs(const T& v) {
    if constexpr (std::is_same_v<T, long long>) {
        return std::min(uabs64(v), kAbsClamp);
    } else {
        T a = v < 0 ? T(-v) : v;
        if (a > kAbsClamp) return kAbsClamp;
        return a.template convert_to<std::uint64_t>();
    }
}

// v2 = q*v + rem with |rem| minimized (|rem| <= |v|/2).
template <class T>
void symdiv(const T& v2, const T& v, T& q, T& rem) {
    if constexpr (std::is_same_v<T, long long>) {
        if (v2 == std::numeric_limits<long long>::min() ||
            v == std::numeric_limits<long long>::min())
            throw snf_overflow{};
        q = v2 / v;
        rem = v2 - q * v;
        if (rem != 0) {
            std::uint64_t ur = uabs64(rem), uv = uabs64(v);
            if (ur > uv - ur) {
                q += ((rem < 0) == (v < 0)) ? 1 : -1;
                rem = ((rem < 0) == (v < 0)) ? rem - v : rem + v;
            }
        }
    } else {
        boost::multiprecision::divide_qr(v2, v, q, rem);
        if (rem != 0) {
            T ar = rem < 0 ? T(-rem) : rem;
            T av = v < 0 ? T(-v) : v;
            if (2 * ar > av) {
                q += ((rem < 0) == (v < 0)) ? 1 : -1;
                rem = ((rem < 0) == (v < 0)) ? T(rem - v) : T(rem + v);
            }
        }
    }
}

// x - q*y, overflow-checked on the word path.
template <class T>
T mul_sub(const T& x, const T& q, const T& y) {
    if constexpr (std::is_same_v<T, long long>) {
        long long p, r;
        if (__builtin_mul_overflow(q, y, &p)) throw snf_overflow{};
        if (__builtin_sub_overflow(x, p, &r)) throw snf_overflow{};
        return r;
    } else {
        return T(x - q * y);
    }
}

// Sort a diagonal into invariant factors: diag(a, b) and diag(gcd, lcm)
// present the same group, so pairwise refinement yields the divisibility
// chain.  Unit pivots are counted separately.
inline std::vector<Integer> normalize_diagonal(std::vector<Integer> diag) {
    size_t ones = 0;
    std::vector<Integer> rest;
    for (Integer& v : diag) {
        if (v < 0) v = -v;
        if (v == 0) throw std::logic_error("normalize_diagonal: zero pivot");
        if (v == 1)
            ++ones;
        else
            rest.push_back(v);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < rest.size(); ++i)
            for (size_t j = i + 1; j < rest.size(); ++j) {
                if (rest[j] % rest[i] == 0) continue;
                Integer g = boost::multiprecision::gcd(rest[i], rest[j]);
                Integer l = rest[i] / g * rest[j];
                rest[i] = g;
                rest[j] = l;
                changed = true;
            }
    }
    std::sort(rest.begin(), rest.end());
    std::vector<Integer> out(ones, Integer(1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

template <class T>
class SmithEngine {
public:
    SmithEngine(long long nrows, long long ncols,
                const std::vector<SparseIntMatrix::Entry>& ents)
        : rows_(static_cast<size_t>(nrows)),
          col_rows_(static_cast<size_t>(ncols)),
          row_live_(static_cast<size_t>(nrows), true),
          col_live_(static_cast<size_t>(ncols), true) {
        for (const auto& e : ents) {
            T v;
            if constexpr (std::is_same_v<T, long long>) {
                static const Integer lo = std::numeric_limits<long long>::min();
                static const Integer hi = std::numeric_limits<long long>::max();
                if (e.value < lo || e.value > hi) throw snf_overflow{};
                v = e.value.convert_to<long long>();
            } else {
                v = e.value;
            }
            rows_[static_cast<size_t>(e.row)].push_back({static_cast<int>(e.col), v});
            col_rows_[static_cast<size_t>(e.col)].push_back(static_cast<int>(e.row));
            heap_.push({clamped_abs(v), static_cast<int>(e.row), static_cast<int>(e.col)});
        }
        nnz_ = static_cast<long long>(ents.size());
    }

    std::vector<Integer> run() {
        std::vector<Integer> diag;
        while (!heap_.empty()) {
            PivotKey k = heap_.top();
            heap_.pop();
            if (!row_live_[static_cast<size_t>(k.r)] || !col_live_[static_cast<size_t>(k.c)]) continue;
            const T* pv = find(k.r, k.c);
            if (!pv || clamped_abs(*pv) != k.a) continue;
            int r = k.r, c = k.c;
            T v = *pv;
            // On a failed reduction a strictly smaller remainder sits in this
            // row or column, so retrying from the smallest entry of the cross
            // always terminates.  (Going back through the heap instead can
            // livelock once values exceed the key clamp and tie.)
            while (!reduce_column(r, c, v) || !reduce_row(r, c, v)) repick_in_cross(r, c, v);
            diag.push_back(Integer(v));
            row_live_[static_cast<size_t>(r)] = false;
            col_live_[static_cast<size_t>(c)] = false;
            nnz_ -= static_cast<long long>(rows_[static_cast<size_t>(r)].size());
            rows_[static_cast<size_t>(r)].clear();
            rows_[static_cast<size_t>(r)].shrink_to_fit();
            maybe_rebuild();
        }
        return diag;
    }

private:
    using Row = std::vector<std::pair<int, T>>;

    const T* find(int r, int c) const {
        const Row& row = rows_[static_cast<size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const std::pair<int, T>& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }

    static bool abs_lt(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, long long>) {
            return uabs64(a) < uabs64(b);
        } else {
            T aa = a < 0 ? T(-a) : a;
            T ab = b < 0 ? T(-b) : b;
            return aa < ab;
        }
    }

    // Move the pivot to the smallest entry in row r or column c.
    void repick_in_cross(int& r, int& c, T& v) {
        T best = v;
        int br = r, bc = c;
        for (const auto& [c2, w] : rows_[static_cast<size_t>(r)])
            if (col_live_[static_cast<size_t>(c2)] && abs_lt(w, best)) {
                best = w;
                br = r;
                bc = c2;
            }
        for (int r2 : col_rows_[static_cast<size_t>(c)]) {
            if (!row_live_[static_cast<size_t>(r2)]) continue;
            const T* w = find(r2, c);
            if (w && abs_lt(*w, best)) {
                best = *w;
                br = r2;
                bc = c;
            }
        }
        r = br;
        c = bc;
        v = best;
    }

    // Clear column c against pivot row r.  Returns false if a nonzero
    // remainder appeared (a strictly smaller pivot now exists).
    bool reduce_column(int r, int c, const T& v) {
        auto& list = col_rows_[static_cast<size_t>(c)];
        std::vector<int> live;
        for (int r2 : list)
            if (row_live_[static_cast<size_t>(r2)] && find(r2, c)) live.push_back(r2);
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        list = live;
        for (int r2 : live) {
            if (r2 == r) continue;
            T v2 = *find(r2, c);
            T q, rem;
            symdiv(v2, v, q, rem);
            if (q != 0) row_sub(r2, r, q);
            if (rem != 0) return false;
        }
        return true;
    }

    // With column c already cleared, column operations against the pivot
    // column only touch row r itself.
    bool reduce_row(int r, int c, const T& v) {
        Row& row = rows_[static_cast<size_t>(r)];
        Row out;
        out.reserve(row.size());
        bool clean = true;
        for (auto& [c2, v2] : row) {
            if (c2 == c) {
                out.push_back({c2, v2});
                continue;
            }
            T q, rem;
            symdiv(v2, v, q, rem);
            if (rem != 0) {
                out.push_back({c2, rem});
                heap_.push({clamped_abs(rem), r, c2});
                clean = false;
            } else {
                --nnz_;
            }
        }
        row = std::move(out);
        return clean;
    }

    // rows[r2] -= q * rows[r], maintaining the column index and pivot heap.
    void row_sub(int r2, int r, const T& q) {
        const Row& a = rows_[static_cast<size_t>(r)];
        Row& b = rows_[static_cast<size_t>(r2)];
        Row out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < b.size() || j < a.size()) {
            if (j == a.size() || (i < b.size() && b[i].first < a[j].first)) {
                out.push_back(b[i++]);
            } else if (i == b.size() || a[j].first < b[i].first) {
                T w = mul_sub(T(0), q, a[j].second);
                if (w != 0) {
                    out.push_back({a[j].first, w});
                    col_rows_[static_cast<size_t>(a[j].first)].push_back(r2);
                    heap_.push({clamped_abs(w), r2, a[j].first});
                    ++nnz_;
                }
                ++j;
            } else {
                T w = mul_sub(b[i].second, q, a[j].second);
                if (w != 0) {
                    out.push_back({b[i].first, w});
                    heap_.push({clamped_abs(w), r2, b[i].first});
                } else {
                    --nnz_;
                }
                ++i;
                ++j;
            }
        }
        b = std::move(out);
    }

    void maybe_rebuild() {
        const size_t cap = std::max<size_t>(4 * static_cast<size_t>(std::max<long long>(nnz_, 0)),
                                            size_t(1) << 20);
        if (heap_.size() <= cap) return;
        std::priority_queue<PivotKey, std::vector<PivotKey>, std::greater<PivotKey>> fresh;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (!row_live_[r]) continue;
            for (const auto& [c, v] : rows_[r]) fresh.push({clamped_abs(v), static_cast<int>(r), c});
        }
        heap_ = std::move(fresh);
    }

    std::vector<Row> rows_;
    std::vector<std::vector<int>> col_rows_;
    std::vector<char> row_live_, col_live_;
    std::priority_queue<PivotKey, std::vector<PivotKey>, std::greater<PivotKey>> heap_;
    long long nnz_ = 0;
};

// Textbook elimination on a dense array, used for small matrices.
inline std::vector<Integer> snf_dense(long long nrows, long long ncols,
                                      const std::vector<SparseIntMatrix::Entry>& ents) {
    std::vector<std::vector<Integer>> m(static_cast<size_t>(nrows),
                                        std::vector<Integer>(static_cast<size_t>(ncols), Integer(0)));
    for (const auto& e : ents) m[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] = e.value;
    std::vector<char> row_live(static_cast<size_t>(nrows), true), col_live(static_cast<size_t>(ncols), true);
    std::vector<Integer> diag;
    while (true) {
        int pr = -1, pc = -1;
        Integer best = 0;
        for (int r = 0; r < nrows; ++r) {
            if (!row_live[static_cast<size_t>(r)]) continue;
            for (int c = 0; c < ncols; ++c) {
                if (!col_live[static_cast<size_t>(c)]) continue;
                const Integer& v = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (v == 0) continue;
                Integer a = v < 0 ? Integer(-v) : v;
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        bool clean = false;
        while (!clean) {
            clean = true;
            const Integer v = m[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
            for (int r = 0; r < nrows && clean; ++r) {
                if (!row_live[static_cast<size_t>(r)] || r == pr) continue;
                Integer& v2 = m[static_cast<size_t>(r)][static_cast<size_t>(pc)];
                if (v2 == 0) continue;
                Integer q, rem;
                symdiv(v2, v, q, rem);
                if (q != 0)
                    for (int c = 0; c < ncols; ++c)
                        if (col_live[static_cast<size_t>(c)])
                            m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                                q * m[static_cast<size_t>(pr)][static_cast<size_t>(c)];
                if (rem != 0) clean = false;  // smaller value appeared in the pivot column
            }
            for (int c = 0; clean && c < ncols; ++c) {
                if (!col_live[static_cast<size_t>(c)] || c == pc) continue;
                Integer& v2 = m[static_cast<size_t>(pr)][static_cast<size_t>(c)];
                if (v2 == 0) continue;
                Integer q, rem;
                symdiv(v2, v, q, rem);
                if (q != 0)
                    for (int r = 0; r < nrows; ++r)
                        if (row_live[static_cast<size_t>(r)])
                            m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                                q * m[static_cast<size_t>(r)][static_cast<size_t>(pc)];
                if (rem != 0) clean = false;
            }
            if (!clean) {
                // a strictly smaller entry exists somewhere in the pivot row
                // or column; re-run selection within this cross
                Integer nb = 0;
                int nr = -1, nc = -1;
                for (int r = 0; r < nrows; ++r) {
                    if (!row_live[static_cast<size_t>(r)]) continue;
                    const Integer& w = m[static_cast<size_t>(r)][static_cast<size_t>(pc)];
                    if (w == 0) continue;
                    Integer a = w < 0 ? Integer(-w) : w;
                    if (nr < 0 || a < nb) {
                        nb = a;
                        nr = r;
                        nc = pc;
                    }
                }
                for (int c = 0; c < ncols; ++c) {
                    if (!col_live[static_cast<size_t>(c)]) continue;
                    const Integer& w = m[static_cast<size_t>(pr)][static_cast<size_t>(c)];
                    if (w == 0) continue;
                    Integer a = w < 0 ? Integer(-w) : w;
                    if (nr < 0 || a < nb) {
                        nb = a;
                        nr = pr;
                        nc = c;
                    }
                }
                pr = nr;
                pc = nc;
            }
        }
        diag.push_back(m[static_cast<size_t>(pr)][static_cast<size_t>(pc)]);
        row_live[static_cast<size_t>(pr)] = false;
        col_live[static_cast<size_t>(pc)] = false;
    }
    return diag;
}

}  // namespace detail

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix; the rank is
// the number of factors.  Small matrices take a dense path; larger ones run
// sparse elimination on 64-bit words first and redo the computation with
// arbitrary-precision integers if any intermediate value overflows.
inline std::vector<Integer> smith_invariants(const SparseIntMatrix& M) {
    const auto& ents = M.entries();
    if (M.rows() < 64 && M.cols() < 64)
        return detail::normalize_diagonal(detail::snf_dense(M.rows(), M.cols(), ents));
    try {
        detail::SmithEngine<long long> eng(M.rows(), M.cols(), ents);
        return detail::normalize_diagonal(eng.run());
    } catch (const detail::snf_overflow&) {
        detail::SmithEngine<Integer> eng(M.rows(), M.cols(), ents);
        return detail::normalize_diagonal(eng.run());
    }
}

inline long long smith_rank(const SparseIntMatrix& M) {
    return static_cast<long long>(smith_invariants(M).size());
}

// Homology groups of a chain complex, one entry per degree:
// H_d = Z^free_rank[d] + sum of Z/t for t in torsion[d].
struct HomologyResult {
    std::vector<long long> free_rank;
    std::vector<std::vector<Integer>> torsion;

    int top_degree() const { return static_cast<int>(free_rank.size()) - 1; }
};

// cell_counts[d] = number of d-cells; boundaries[d-1] maps d-chains to
// (d-1)-chains.  Checks that consecutive boundaries compose to zero.
inline HomologyResult chain_homology(const std::vector<long long>& cell_counts,
                                     const std::vector<SparseIntMatrix>& boundaries) {
    const int dim = static_cast<int>(cell_counts.size()) - 1;
    if (static_cast<int>(boundaries.size()) != std::max(dim, 0))
        throw std::invalid_argument("chain_homology: need one boundary per positive degree");
    for (int d = 1; d <= dim; ++d) {
        const SparseIntMatrix& B = boundaries[static_cast<size_t>(d - 1)];
        if (B.rows() != cell_counts[static_cast<size_t>(d - 1)] ||
            B.cols() != cell_counts[static_cast<size_t>(d)])
            throw std::invalid_argument("chain_homology: boundary shape mismatch");
        if (d >= 2 &&
            !multiply(boundaries[static_cast<size_t>(d - 2)], B).entries().empty())
            throw std::logic_error("chain_homology: boundaries do not compose to zero");
    }
    HomologyResult H;
    if (dim < 0) return H;
    std::vector<std::vector<Integer>> inv(static_cast<size_t>(dim) + 1);
    for (int d = 1; d <= dim; ++d)
        inv[static_cast<size_t>(d)] = smith_invariants(boundaries[static_cast<size_t>(d - 1)]);
    H.free_rank.resize(static_cast<size_t>(dim) + 1);
    H.torsion.resize(static_cast<size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        long long r_d = d >= 1 ? static_cast<long long>(inv[static_cast<size_t>(d)].size()) : 0;
        long long r_up = d < dim ? static_cast<long long>(inv[static_cast<size_t>(d) + 1].size()) : 0;
        long long beta = cell_counts[static_cast<size_t>(d)] - r_d - r_up;
        if (beta < 0) throw std::logic_error("chain_homology: negative free rank");
        H.free_rank[static_cast<size_t>(d)] = beta;
        if (d < dim)
            for (const Integer& t : inv[static_cast<size_t>(d) + 1])
                if (t > 1) H.torsion[static_cast<size_t>(d)].push_back(t);
    }
    return H;
}

inline HomologyResult chain_homology(const ConfigComplex& C) {
    std::vector<long long> counts;
    for (int d = 0; d <= C.dim(); ++d) counts.push_back(C.cell_count(d));
    return chain_homology(counts, boundary_matrices(C));
}

// Boundary operators of a plain simplicial complex, with the usual
// (-1)^j sign on omitting the j-th vertex.
inline std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& X) {
    std::vector<SparseIntMatrix> out;
    for (int d = 1; d <= X.dim(); ++d) {
        const auto& lo = X.face_ids_of_dim(d - 1);
        const auto& hi = X.face_ids_of_dim(d);
        SparseIntMatrix M(static_cast<long long>(lo.size()), static_cast<long long>(hi.size()));
        for (size_t cidx = 0; cidx < hi.size(); ++cidx) {
            const Simplex& s = X.face(hi[cidx]);
            for (int j = 0; j <= d; ++j) {
                int child = X.face_id(omit_vertex(s, j));
                auto it = std::lower_bound(lo.begin(), lo.end(), child);
                if (it == lo.end() || *it != child)
                    throw std::logic_error("boundary_matrices: missing face");
                M.add(static_cast<long long>(it - lo.begin()), static_cast<long long>(cidx),
                      j % 2 == 0 ? 1 : -1);
            }
        }
        M.finalize();
        out.push_back(std::move(M));
    }
    return out;
}

inline HomologyResult chain_homology(const SimplicialComplex& X) {
    std::vector<long long> counts;
    for (int d = 0; d <= X.dim(); ++d)
        counts.push_back(static_cast<long long>(X.face_ids_of_dim(d).size()));
    return chain_homology(counts, boundary_matrices(X));
}

// [{degree, free_rank, torsion: [...]}, ...] with numbers as decimal strings.
inline nlohmann::ordered_json homology_to_json(const HomologyResult& H) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int d = 0; d <= H.top_degree(); ++d) {
        nlohmann::ordered_json g;
        g["degree"] = std::to_string(d);
        g["free_rank"] = std::to_string(H.free_rank[static_cast<size_t>(d)]);
        nlohmann::ordered_json tor = nlohmann::ordered_json::array();
        for (const Integer& t : H.torsion[static_cast<size_t>(d)]) tor.push_back(to_decimal(t));
        g["torsion"] = std::move(tor);
        arr.push_back(std::move(g));
    }
    return arr;
}

}  // namespace wedgelab

#endif
