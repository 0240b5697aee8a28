#pragma once
// Matchings drawn as rhombus tilings: each matched graph edge glues the two
// unit triangles dual to its endpoints into a rhombus, and weight-0 edges
// of the graph become tessellation edges that are forced to be present.

#include <array>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "torus_graph.hpp"
#include "weighting.hpp"

namespace dimers {

struct Rhombus {
    int edge_id;     // the matched graph edge this rhombus came from
    int orientation; // 0, 1, 2 for the three orientation classes (0/120/240 degrees)
    std::array<std::complex<double>, 4> quad; // perimeter, counterclockwise-ish
};

struct Segment {
    std::complex<double> a, b;
};

struct RhombusTiling {
    int n = 1;
    std::vector<Rhombus> rhombi;
    std::vector<Segment> forced; // dual to weight-0 graph edges
};

namespace detail {
// Geometric case of a fundamental-domain edge class: 0 when black and white
// triangles share the (p, p+1) side, 1 for the (p+1, p-omega) side (the
// x-direction neighbour), 2 for the (p, p-omega) side (the y-direction one).
inline int edge_case(int base) {
    const BaseEdge& e = base_edges().at(static_cast<size_t>(base));
    if (e.black_rk == e.white_rk) return 0;
    if (e.black_rk % 3 == e.white_rk % 3) return 1;
    return 2;
}

inline Eis white_anchor(const TorusGraph& g, int white, int n) {
    int cell = white / 9, rk = white % 9;
    int i = cell / n, j = cell % n;
    return reduce(anchor(rk / 3, rk % 3) + cell_shift(i, j), n);
}

inline std::array<std::complex<double>, 4> rhombus_quad(Eis p, int cas) {
    static const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
    std::complex<double> z = to_plane(p);
    switch (cas) {
        case 0: return {z, z - omega, z + 1.0, z + 1.0 + omega};
        case 1: return {z, z - omega, z + 1.0 - omega, z + 1.0};
        default: return {z + 1.0, z, z - 1.0 - omega, z - omega};
    }
}

inline Segment shared_side(Eis p, int cas) {
    static const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
    std::complex<double> z = to_plane(p);
    switch (cas) {
        case 0: return {z, z + 1.0};
        case 1: return {z + 1.0, z - omega};
        default: return {z, z - omega};
    }
}
} // namespace detail

inline RhombusTiling to_rhombus_tiling(const TorusGraph& g, const Matching& m, const EdgeWeighting& w) {
    RhombusTiling t;
    t.n = g.n;
    for (int id : m) {
        const TorusEdge& e = g.edges.at(static_cast<size_t>(id));
        if (w.at(edge_label(e.base)) == 0)
            throw std::invalid_argument("matching uses edge '" + edge_label(e.base) +
                                        "' whose weight is 0 (such a dimer cannot occur)");
        int cas = detail::edge_case(e.base);
        detail::Eis p = detail::white_anchor(g, e.white, g.n);
        t.rhombi.push_back({id, cas, detail::rhombus_quad(p, cas)});
    }
    for (const TorusEdge& e : g.edges) {
        if (w.at(edge_label(e.base)) != 0) continue;
        int cas = detail::edge_case(e.base);
        t.forced.push_back(detail::shared_side(detail::white_anchor(g, e.white, g.n), cas));
    }
    return t;
}

struct RenderOptions {
    double scale = 40.0;
    double margin = 20.0;
};

// Deterministic SVG: rhombi as polygons filled by orientation class, forced
// tessellation edges as thick contrasting paths.
inline std::string render_tiling_svg(const RhombusTiling& t, RenderOptions opt = {}) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    auto take = [&](std::complex<double> z) {
        if (first) {
            min_x = max_x = z.real();
            min_y = max_y = z.imag();
            first = false;
            return;
        }
        min_x = std::min(min_x, z.real());
        max_x = std::max(max_x, z.real());
        min_y = std::min(min_y, z.imag());
        max_y = std::max(max_y, z.imag());
    };
    for (const Rhombus& r : t.rhombi)
        for (auto z : r.quad) take(z);
    for (const Segment& s : t.forced) {
        take(s.a);
        take(s.b);
    }
    double w = opt.scale * (max_x - min_x) + 2 * opt.margin;
    double h = opt.scale * (max_y - min_y) + 2 * opt.margin;
    auto sx = [&](double x) { return opt.scale * (x - min_x) + opt.margin; };
    auto sy = [&](double y) { return opt.scale * (max_y - y) + opt.margin; };
    char buf[256];
    std::string svg;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\" "
                  "viewBox=\"0 0 %.2f %.2f\">\n",
                  w, h, w, h);
    svg += buf;
    static const char* fills[3] = {"#8dd3c7", "#ffffb3", "#bebada"};
    for (const Rhombus& r : t.rhombi) {
        svg += "  <polygon points=\"";
        for (size_t i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", sx(r.quad[i].real()), sy(r.quad[i].imag()));
            svg += buf;
        }
        std::snprintf(buf, sizeof buf, "\" fill=\"%s\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
                      fills[r.orientation % 3]);
        svg += buf;
    }
    for (const Segment& s : t.forced) {
        std::snprintf(buf, sizeof buf,
                      "  <path d=\"M %.2f %.2f L %.2f %.2f\" stroke=\"#d62728\" stroke-width=\"3\" "
                      "fill=\"none\"/>\n",
                      sx(s.a.real()), sy(s.a.imag()), sx(s.b.real()), sy(s.b.imag()));
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace dimers
