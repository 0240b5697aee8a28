#pragma once
// The hexagonal torus graph on 9n^2 black + 9n^2 white vertices (n x n tiling
// of the 18-vertex fundamental domain), with the boundary-crossing markers
// that turn its weighted adjacency determinant into a polynomial in x, y.
//
// Fundamental-domain structure (n = 1): black vertices A..I and white
// vertices a..i in three rows r = 0,1,2 of three columns k = 0,1,2
// (A..C | D..F | G..I and likewise a..i). White (r,k) is adjacent to
//   Black (r, k)           plain edge,
//   Black (r, (k+1) mod 3) crossing the y-boundary when k = 2,
//   Black ((r+2) mod 3, k) crossing the x-boundary when r = 0.
// This reproduces exactly the 27 nonzero entries of the reference matrix,
// x-marks {Ga, Hb, Ic} and y-marks {Ac, Df, Gi} included.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimers {

enum class Crossing : unsigned char { none = 0, x = 1, y = 2 };

struct TorusEdge {
    int black;         // black vertex index
    int white;         // white vertex index
    Crossing crossing; // fundamental-parallelogram boundary marker
    int base;          // index into edge_labels(): the 3L-invariant edge class
};

struct BaseEdge {
    int black_rk;      // 3r + k of the black endpoint
    int white_rk;      // 3r + k of the white endpoint
    Crossing crossing;
};

// The 27 fundamental-domain edge classes in canonical label order
// (Aa, Ba, Ga, Bb, ..., Ii): grouped by white vertex, blacks ascending.
inline const std::vector<BaseEdge>& base_edges() {
    static const std::vector<BaseEdge> table = [] {
        std::vector<BaseEdge> t;
        for (int w = 0; w < 9; ++w) {
            int r = w / 3, k = w % 3;
            std::array<std::pair<int, Crossing>, 3> blacks = {{
                {3 * r + k, Crossing::none},
                {3 * r + (k + 1) % 3, k == 2 ? Crossing::y : Crossing::none},
                {3 * ((r + 2) % 3) + k, r == 0 ? Crossing::x : Crossing::none},
            }};
            std::sort(blacks.begin(), blacks.end());
            for (auto [b, c] : blacks) t.push_back({b, w, c});
        }
        return t;
    }();
    return table;
}

inline std::string edge_label(int base) {
    const BaseEdge& e = base_edges().at(static_cast<size_t>(base));
    return std::string() + char('A' + e.black_rk) + char('a' + e.white_rk);
}

inline const std::vector<std::string>& edge_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> v;
        for (int i = 0; i < 27; ++i) v.push_back(edge_label(i));
        return v;
    }();
    return labels;
}

inline int edge_label_index(const std::string& label) {
    const auto& ls = edge_labels();
    for (int i = 0; i < 27; ++i)
        if (ls[static_cast<size_t>(i)] == label) return i;
    throw std::invalid_argument("unknown edge label: '" + label + "'");
}

struct TorusGraph {
    int n = 1;
    std::vector<TorusEdge> edges;
    std::vector<std::string> black_labels;
    std::vector<std::string> white_labels;
    std::vector<std::complex<double>> black_pos; // triangle centroids, for rendering
    std::vector<std::complex<double>> white_pos;
    std::vector<std::vector<int>> white_adj; // white vertex -> incident edge ids, ascending

    int num_black() const { return 9 * n * n; }
    int num_white() const { return 9 * n * n; }
    int num_vertices() const { return 18 * n * n; }
};

namespace detail {
// Eisenstein coordinates p = a + b*omega, omega = exp(2*pi*i/3). Vertex (r,k)
// anchors at p = -k(1+omega) + r*omega; x-direction cells step by -3*omega and
// y-direction cells by -3(1+omega); coordinates reduce mod 3n componentwise.
struct Eis {
    long a = 0, b = 0;
    Eis operator+(Eis o) const { return {a + o.a, b + o.b}; }
    Eis operator-(Eis o) const { return {a - o.a, b - o.b}; }
};

inline Eis anchor(int r, int k) { return {-k, static_cast<long>(r - k)}; }
inline Eis cell_shift(int i, int j) { return {-3L * j, -3L * (i + j)}; }
inline Eis reduce(Eis p, int n) {
    long m = 3L * n;
    return {((p.a % m) + m) % m, ((p.b % m) + m) % m};
}
inline std::complex<double> to_plane(Eis p) {
    static const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
    return double(p.a) + double(p.b) * omega;
}
} // namespace detail

inline TorusGraph build_torus_graph(int n) {
    if (n < 1) throw std::invalid_argument("torus scale n must be >= 1");
    TorusGraph g;
    g.n = n;
    auto vid = [n](int i, int j, int rk) { return (i * n + j) * 9 + rk; };
    g.black_labels.resize(static_cast<size_t>(9 * n * n));
    g.white_labels.resize(static_cast<size_t>(9 * n * n));
    g.black_pos.resize(static_cast<size_t>(9 * n * n));
    g.white_pos.resize(static_cast<size_t>(9 * n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int rk = 0; rk < 9; ++rk) {
                std::string suffix = n == 1 ? "" : "[" + std::to_string(i) + "," + std::to_string(j) + "]";
                int v = vid(i, j, rk);
                g.black_labels[static_cast<size_t>(v)] = char('A' + rk) + suffix;
                g.white_labels[static_cast<size_t>(v)] = char('a' + rk) + suffix;
                using namespace detail;
                Eis p = reduce(anchor(rk / 3, rk % 3) + cell_shift(i, j), n);
                // centroids: up triangle p + (2+omega)/3, down triangle p + (1-omega)/3
                static const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
                g.black_pos[static_cast<size_t>(v)] = to_plane(p) + (2.0 + omega) / 3.0;
                g.white_pos[static_cast<size_t>(v)] = to_plane(p) + (1.0 - omega) / 3.0;
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int base = 0; base < 27; ++base) {
                const BaseEdge& e = base_edges()[static_cast<size_t>(base)];
                int bi = i, bj = j;
                Crossing mark = Crossing::none;
                if (e.crossing == Crossing::x) {
                    bi = (i + 1) % n;
                    if (i + 1 == n) mark = Crossing::x;
                } else if (e.crossing == Crossing::y) {
                    bj = (j + 1) % n;
                    if (j + 1 == n) mark = Crossing::y;
                }
                g.edges.push_back({vid(bi, bj, e.black_rk), vid(i, j, e.white_rk), mark, base});
            }
    g.white_adj.assign(static_cast<size_t>(g.num_white()), {});
    for (int id = 0; id < static_cast<int>(g.edges.size()); ++id)
        g.white_adj[static_cast<size_t>(g.edges[static_cast<size_t>(id)].white)].push_back(id);
    return g;
}

// A perfect matching, stored as edge ids ascending (one per white vertex).
using Matching = std::vector<int>;

struct EnumerationOptions {
    int max_vertices = 40; // refuse larger graphs unless overridden
    bool override_work_bound = false;
    std::vector<bool> edge_allowed; // empty = all allowed
};

inline std::vector<Matching> enumerate_matchings(const TorusGraph& g, EnumerationOptions opts = {}) {
    if (g.num_vertices() > opts.max_vertices && !opts.override_work_bound)
        throw std::runtime_error("enumeration refused: " + std::to_string(g.num_vertices()) +
                                 " vertices exceed the work bound of " + std::to_string(opts.max_vertices) +
                                 " (set the override to proceed)");
    const bool filtered = !opts.edge_allowed.empty();
    if (filtered && opts.edge_allowed.size() != g.edges.size())
        throw std::invalid_argument("edge_allowed mask size mismatch");
    std::vector<Matching> result;
    std::vector<bool> black_used(static_cast<size_t>(g.num_black()), false);
    Matching current;
    current.reserve(static_cast<size_t>(g.num_white()));
    auto rec = [&](auto&& self, int w) -> void {
        if (w == g.num_white()) {
            result.push_back(current);
            return;
        }
        for (int id : g.white_adj[static_cast<size_t>(w)]) {
            if (filtered && !opts.edge_allowed[static_cast<size_t>(id)]) continue;
            const TorusEdge& e = g.edges[static_cast<size_t>(id)];
            if (black_used[static_cast<size_t>(e.black)]) continue;
            black_used[static_cast<size_t>(e.black)] = true;
            current.push_back(id);
            self(self, w + 1);
            current.pop_back();
            black_used[static_cast<size_t>(e.black)] = false;
        }
    };
    rec(rec, 0);
    return result;
}

// (a, b) = number of x- and y-crossing edges of a matching.
inline std::pair<int, int> matching_exponents(const TorusGraph& g, const Matching& m) {
    int a = 0, b = 0;
    for (int id : m) {
        Crossing c = g.edges[static_cast<size_t>(id)].crossing;
        if (c == Crossing::x) ++a;
        else if (c == Crossing::y) ++b;
    }
    return {a, b};
}

// Permutation sign of the matching viewed as the bijection white -> black.
inline int matching_sign(const TorusGraph& g, const Matching& m) {
    std::vector<int> perm(static_cast<size_t>(g.num_white()), -1);
    for (int id : m) {
        const TorusEdge& e = g.edges[static_cast<size_t>(id)];
        perm[static_cast<size_t>(e.white)] = e.black;
    }
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace dimers
