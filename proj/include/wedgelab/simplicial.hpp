// Abstract finite simplicial complexes on 1-based vertex labels, stored as
// explicit face lists in lexicographic order of vertex sequences.

#ifndef WEDGELAB_SIMPLICIAL_HPP
#define WEDGELAB_SIMPLICIAL_HPP

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedgelab {

// A single simplex: strictly increasing sequence of 1-based vertex labels.
struct Simplex {
    std::vector<int> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    // Lexicographic order on vertex sequences, across all dimensions; a
    // proper prefix precedes its extensions.
    bool operator<(const Simplex& o) const {
        return std::lexicographical_compare(vertices.begin(), vertices.end(),
                                            o.vertices.begin(), o.vertices.end());
    }
};

// The face obtained by deleting the j-th vertex (0-based position).
inline Simplex omit_vertex(const Simplex& s, int j) {
    Simplex f;
    f.vertices.reserve(s.vertices.size() - 1);
    for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i)
        if (i != j) f.vertices.push_back(s.vertices[i]);
    return f;
}

class SimplicialComplex {
public:
    // Construct from an explicit face family.  Validates vertex labels,
    // strict ordering within each simplex, and closure under subsets.
    SimplicialComplex(int vertex_count, std::vector<Simplex> faces)
        : vertex_count_(vertex_count), faces_(std::move(faces)) {
        if (vertex_count_ < 0)
            throw std::invalid_argument("SimplicialComplex: negative vertex count");
        std::sort(faces_.begin(), faces_.end());
        faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
        dim_ = -1;
        for (const Simplex& s : faces_) {
            if (s.vertices.empty())
                throw std::invalid_argument("SimplicialComplex: empty simplex");
            for (size_t i = 0; i < s.vertices.size(); ++i) {
                int v = s.vertices[i];
                if (v < 1 || v > vertex_count_)
                    throw std::invalid_argument("SimplicialComplex: vertex label out of range");
                if (i > 0 && s.vertices[i - 1] >= v)
                    throw std::invalid_argument("SimplicialComplex: vertices not strictly increasing");
            }
            dim_ = std::max(dim_, s.dim());
        }
        by_dim_.assign(static_cast<size_t>(dim_ + 1), {});
        for (int id = 0; id < static_cast<int>(faces_.size()); ++id)
            by_dim_[static_cast<size_t>(faces_[id].dim())].push_back(id);
        // closure under subsets
        for (const Simplex& s : faces_) {
            if (s.dim() == 0) continue;
            for (int j = 0; j <= s.dim(); ++j)
                if (face_id(omit_vertex(s, j)) < 0)
                    throw std::invalid_argument("SimplicialComplex: not closed under faces");
        }
    }

    // Construct as the downward closure of a facet list.
    static SimplicialComplex from_facets(int vertex_count, const std::vector<Simplex>& facets) {
        std::set<std::vector<int>> all;
        for (const Simplex& f : facets) {
            size_t m = f.vertices.size();
            if (m == 0) throw std::invalid_argument("from_facets: empty facet");
            if (m > 30) throw std::invalid_argument("from_facets: facet too large");
            for (unsigned long long mask = 1; mask < (1ull << m); ++mask) {
                std::vector<int> sub;
                for (size_t i = 0; i < m; ++i)
                    if (mask & (1ull << i)) sub.push_back(f.vertices[i]);
                all.insert(std::move(sub));
            }
        }
        std::vector<Simplex> faces;
        faces.reserve(all.size());
        for (const auto& v : all) faces.push_back(Simplex{v});
        return SimplicialComplex(vertex_count, std::move(faces));
    }

    int vertex_count() const { return vertex_count_; }
    int dim() const { return dim_; }

    // All faces in lexicographic order of vertex sequences (all dimensions
    // interleaved); the position in this list is the face id.
    const std::vector<Simplex>& faces() const { return faces_; }
    const Simplex& face(int id) const { return faces_.at(static_cast<size_t>(id)); }

    // Face id of s, or -1 if s is not a face.
    int face_id(const Simplex& s) const {
        auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
        if (it == faces_.end() || !(*it == s)) return -1;
        return static_cast<int>(it - faces_.begin());
    }

    // Ids of the faces of dimension exactly d, in lexicographic order.
    const std::vector<int>& face_ids_of_dim(int d) const {
        static const std::vector<int> empty;
        if (d < 0 || d > dim_) return empty;
        return by_dim_[static_cast<size_t>(d)];
    }

    long long face_count(int d) const {
        return static_cast<long long>(face_ids_of_dim(d).size());
    }
    long long total_faces() const { return static_cast<long long>(faces_.size()); }

private:
    int vertex_count_;
    int dim_;
    std::vector<Simplex> faces_;
    std::vector<std::vector<int>> by_dim_;
};

// All faces of X of dimension exactly d, in lexicographic order.
inline std::vector<Simplex> faces_of_dim(const SimplicialComplex& X, int d) {
    std::vector<Simplex> out;
    for (int id : X.face_ids_of_dim(d)) out.push_back(X.face(id));
    return out;
}

// The full simplex on the vertex set [n+1]: every nonempty subset is a face.
inline SimplicialComplex full_simplex(int n) {
    if (n < 0) throw std::domain_error("full_simplex: negative dimension");
    if (n > 25) throw std::domain_error("full_simplex: dimension too large");
    std::vector<int> all(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n + 1; ++v) all[static_cast<size_t>(v) - 1] = v;
    return SimplicialComplex::from_facets(n + 1, {Simplex{all}});
}

// All faces of X of dimension at most d.
inline SimplicialComplex skeleton(const SimplicialComplex& X, int d) {
    if (d < 0) throw std::domain_error("skeleton: negative dimension");
    std::vector<Simplex> faces;
    for (const Simplex& s : X.faces())
        if (s.dim() <= d) faces.push_back(s);
    return SimplicialComplex(X.vertex_count(), std::move(faces));
}

// The complete graph K_d on the vertex set [d] (the 1-skeleton of the full
// simplex on d vertices).
inline SimplicialComplex complete_graph(int d) {
    if (d < 1) throw std::domain_error("complete_graph: need at least one vertex");
    return skeleton(full_simplex(d - 1), 1);
}

// Text format for custom complexes: one facet per line as comma-separated
// vertex labels.  Blank lines and lines starting with '#' are ignored.
// The vertex count is the largest label that appears.
inline SimplicialComplex read_complex(std::istream& in) {
    std::vector<Simplex> facets;
    int max_label = 0;
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        Simplex f;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("read_complex: bad vertex label '" + tok + "'");
            }
            while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t' || tok[pos] == '\r'))
                ++pos;
            if (pos != tok.size())
                throw std::invalid_argument("read_complex: bad vertex label '" + tok + "'");
            if (v < 1) throw std::invalid_argument("read_complex: vertex labels are 1-based");
            f.vertices.push_back(v);
            max_label = std::max(max_label, v);
        }
        if (f.vertices.empty()) throw std::invalid_argument("read_complex: empty facet line");
        std::sort(f.vertices.begin(), f.vertices.end());
        f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
        facets.push_back(std::move(f));
    }
    if (facets.empty()) throw std::invalid_argument("read_complex: no facets");
    return SimplicialComplex::from_facets(max_label, facets);
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open complex file: " + path);
    return read_complex(in);
}

}  // namespace wedgelab

#endif
