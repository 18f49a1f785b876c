#pragma once

// {p,q} tilings in the Poincare disk, built by reflecting a central regular
// p-gon in its edges, breadth first.  Each tile keeps the isometry that carries
// the central tile onto it; a child's frame is the parent's frame composed with
// one of the p fixed edge reflections of the central tile, so errors do not
// compound through vertex coordinates.
//
// Floating point throughout; the combinatorial modules hold the exact answers
// and this module only has to agree with them on counts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "numeric.hpp"

namespace tessella {

struct PatchTooLarge : Error {
    using Error::Error;
};
struct PrecisionLoss : Error {
    using Error::Error;
};

using complex = std::complex<double>;

inline constexpr double dedup_tolerance = 1e-9;
inline constexpr double metric_tolerance = 1e-8;
inline constexpr std::size_t default_tile_cap = 100'000;

struct DiskPoint {
    double x = 0;
    double y = 0;

    DiskPoint() = default;
    DiskPoint(double x_, double y_) : x(x_), y(y_) {
        if (x * x + y * y >= 1 - 1e-12) throw PrecisionLoss("point left the open unit disk");
    }
    explicit DiskPoint(complex z) : DiskPoint(z.real(), z.imag()) {}

    complex z() const { return {x, y}; }
};

inline double hyperbolic_distance(complex a, complex b) {
    return 2 * std::atanh(std::abs(a - b) / std::abs(1.0 - std::conj(a) * b));
}

// z -> (a w + b) / (conj(b) w + conj(a)),  w = z or conj(z),
// normalised so that |a|^2 - |b|^2 = 1.
class Isometry {
public:
    Isometry() = default;
    Isometry(complex a, complex b, bool reflect) : a_(a), b_(b), reflect_(reflect) { normalize(); }

    static Isometry rotation(double theta) { return {std::polar(1.0, theta / 2), 0, false}; }

    // Inversion in the geodesic circle centred at t > 1 on the real axis.
    static Isometry real_axis_inversion(double t) { return {complex(0, t), complex(0, -1), true}; }

    complex operator()(complex z) const {
        complex w = reflect_ ? std::conj(z) : z;
        return (a_ * w + b_) / (std::conj(b_) * w + std::conj(a_));
    }

    // (*this) after `inner`
    Isometry compose(const Isometry& inner) const {
        complex ia = reflect_ ? std::conj(inner.a_) : inner.a_;
        complex ib = reflect_ ? std::conj(inner.b_) : inner.b_;
        return {a_ * ia + b_ * std::conj(ib), a_ * ib + b_ * std::conj(ia), reflect_ != inner.reflect_};
    }

    bool reflects() const noexcept { return reflect_; }

private:
    void normalize() {
        double det = std::norm(a_) - std::norm(b_);
        double s = std::sqrt(det);
        a_ /= s;
        b_ /= s;
    }

    complex a_{1, 0};
    complex b_{0, 0};
    bool reflect_ = false;
};

inline void check_hyperbolic(int p, int q) {
    if (p < 3 || q < 3 || p * q - 2 * (p + q) <= 0)
        throw NotHyperbolic("{" + std::to_string(p) + "," + std::to_string(q) +
                            "} is not a hyperbolic tiling");
}

// Centre-to-vertex distance of the {p,q} cell: cosh R = cot(pi/p) cot(pi/q).
inline double circumradius(int p, int q) {
    check_hyperbolic(p, q);
    return std::acosh(1 / (std::tan(std::numbers::pi / p) * std::tan(std::numbers::pi / q)));
}

// Centre-to-edge-midpoint distance: cosh r = cos(pi/q) / sin(pi/p).
inline double inradius(int p, int q) {
    check_hyperbolic(p, q);
    return std::acosh(std::cos(std::numbers::pi / q) / std::sin(std::numbers::pi / p));
}

struct Tile {
    int id = 0;
    int distance = 0;
    DiskPoint center;
    std::vector<DiskPoint> vertices;
    Isometry frame;
};

struct TilingPatch {
    int p = 0;
    int q = 0;
    int depth = 0;
    std::vector<Tile> tiles;
    std::vector<std::pair<int, int>> adjacency;  // edge-sharing, i < j
};

namespace detail {

// Vertices of the central tile: vertex k at angle (2k - 1) pi / p, so edge k
// (vertex k to vertex k+1) has its midpoint at angle 2 pi k / p.
inline std::vector<complex> central_vertices(int p, int q) {
    const double r = std::tanh(circumradius(p, q) / 2);
    std::vector<complex> v;
    for (int k = 0; k < p; ++k) v.push_back(std::polar(r, (2 * k - 1) * std::numbers::pi / p));
    return v;
}

inline std::vector<Isometry> edge_reflections(int p, int q) {
    const double r = std::tanh(circumradius(p, q) / 2);
    // Centre distance of the geodesic circle through r e^{+-i pi/p}.
    const double t = (r * r + 1) / (2 * r * std::cos(std::numbers::pi / p));
    const auto base = Isometry::real_axis_inversion(t);
    std::vector<Isometry> out;
    for (int k = 0; k < p; ++k) {
        double phi = 2 * std::numbers::pi * k / p;
        out.push_back(Isometry::rotation(phi).compose(base).compose(Isometry::rotation(-phi)));
    }
    return out;
}

struct CellKey {
    std::int64_t x, y;
    bool operator==(const CellKey&) const = default;
};
struct CellHash {
    std::size_t operator()(const CellKey& k) const noexcept {
        return std::hash<std::int64_t>()(k.x * 0x9E3779B97F4A7C15LL ^ k.y);
    }
};

// Centers hashed on a 1e-7 grid, confirmed at the dedup tolerance.
class CenterIndex {
public:
    explicit CenterIndex(const std::vector<Tile>& tiles) : tiles_(tiles) {}

    // Id of a known tile at z, or -1.
    int find(complex z) const {
        auto key = cell(z);
        int hit = -1;
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find({key.x + dx, key.y + dy});
                if (it == cells_.end()) continue;
                for (int id : it->second) {
                    double d = std::abs(tiles_[id].center.z() - z);
                    if (d <= dedup_tolerance) {
                        hit = id;
                    } else if (d <= 10 * dedup_tolerance) {
                        throw PrecisionLoss("two tile centres within 1e-8 but not identical");
                    }
                }
            }
        return hit;
    }

    void insert(complex z, int id) { cells_[cell(z)].push_back(id); }

private:
    static CellKey cell(complex z) {
        return {static_cast<std::int64_t>(std::floor(z.real() / 1e-7)),
                static_cast<std::int64_t>(std::floor(z.imag() / 1e-7))};
    }

    const std::vector<Tile>& tiles_;
    std::unordered_map<CellKey, std::vector<int>, CellHash> cells_;
};

inline Tile make_tile(int id, int distance, const Isometry& frame,
                      const std::vector<complex>& base_vertices) {
    Tile t;
    t.id = id;
    t.distance = distance;
    t.frame = frame;
    t.center = DiskPoint(frame(0.0));
    for (auto v : base_vertices) t.vertices.emplace_back(frame(v));
    return t;
}

}  // namespace detail

// All tiles within edge-distance `depth` of the central tile.
inline TilingPatch expand(int p, int q, int depth, std::size_t tile_cap = default_tile_cap) {
    check_hyperbolic(p, q);
    if (depth < 0) throw Error("depth must be non-negative");
    TilingPatch patch{p, q, depth, {}, {}};
    const auto base = detail::central_vertices(p, q);
    const auto reflections = detail::edge_reflections(p, q);

    detail::CenterIndex index(patch.tiles);
    patch.tiles.push_back(detail::make_tile(0, 0, Isometry{}, base));
    index.insert(0.0, 0);

    std::vector<int> frontier{0};
    for (int d = 1; d <= depth; ++d) {
        std::vector<int> next;
        for (int parent : frontier) {
            for (int k = 0; k < p; ++k) {
                Isometry frame = patch.tiles[parent].frame.compose(reflections[k]);
                complex c = frame(0.0);
                int found = index.find(c);
                if (found < 0) {
                    if (patch.tiles.size() >= tile_cap)
                        throw PatchTooLarge("patch exceeds the tile cap of " + std::to_string(tile_cap));
                    found = static_cast<int>(patch.tiles.size());
                    patch.tiles.push_back(detail::make_tile(found, d, frame, base));
                    index.insert(c, found);
                    next.push_back(found);
                }
                patch.adjacency.emplace_back(std::min(parent, found), std::max(parent, found));
            }
        }
        frontier = std::move(next);
    }
    std::sort(patch.adjacency.begin(), patch.adjacency.end());
    patch.adjacency.erase(std::unique(patch.adjacency.begin(), patch.adjacency.end()),
                          patch.adjacency.end());
    return patch;
}

// Tiles per distance class 0 .. depth-1; the outermost class is left out.
inline std::vector<std::size_t> distance_census(const TilingPatch& patch) {
    std::vector<std::size_t> out(static_cast<std::size_t>(std::max(patch.depth, 0)), 0);
    for (const auto& t : patch.tiles)
        if (t.distance < patch.depth) ++out[static_cast<std::size_t>(t.distance)];
    return out;
}

// Number of tiles incident to each distinct vertex of the patch, with the
// smallest distance among those tiles.
struct VertexIncidence {
    complex point;
    int tiles = 0;
    int min_distance = 0;
};

inline std::vector<VertexIncidence> vertex_incidence(const TilingPatch& patch) {
    std::vector<VertexIncidence> out;
    std::unordered_map<detail::CellKey, std::vector<std::size_t>, detail::CellHash> cells;
    auto cell = [](complex z) {
        return detail::CellKey{static_cast<std::int64_t>(std::floor(z.real() / 1e-7)),
                               static_cast<std::int64_t>(std::floor(z.imag() / 1e-7))};
    };
    for (const auto& t : patch.tiles) {
        for (const auto& v : t.vertices) {
            complex z = v.z();
            auto key = cell(z);
            std::size_t hit = out.size();
            for (std::int64_t dx = -1; dx <= 1 && hit == out.size(); ++dx)
                for (std::int64_t dy = -1; dy <= 1 && hit == out.size(); ++dy) {
                    auto it = cells.find({key.x + dx, key.y + dy});
                    if (it == cells.end()) continue;
                    for (auto i : it->second)
                        if (std::abs(out[i].point - z) <= dedup_tolerance) hit = i;
                }
            if (hit == out.size()) {
                out.push_back({z, 0, t.distance});
                cells[key].push_back(hit);
            }
            ++out[hit].tiles;
            out[hit].min_distance = std::min(out[hit].min_distance, t.distance);
        }
    }
    return out;
}

// Tiles outside the ball of radius r touching it along an edge, and along an
// edge or at a vertex.  Needs depth >= r + q/2 for the vertex count to be
// complete.
struct ContactCensus {
    std::size_t edge_contact = 0;
    std::size_t vertex_contact = 0;
};

inline ContactCensus contact_census(const TilingPatch& patch, int r) {
    ContactCensus out;
    std::vector<bool> edge(patch.tiles.size(), false);
    for (auto [i, j] : patch.adjacency) {
        const auto& a = patch.tiles[i];
        const auto& b = patch.tiles[j];
        if (a.distance <= r && b.distance > r) edge[j] = true;
        if (b.distance <= r && a.distance > r) edge[i] = true;
    }
    std::vector<complex> ball_vertices;
    for (const auto& t : patch.tiles)
        if (t.distance <= r)
            for (const auto& v : t.vertices) ball_vertices.push_back(v.z());
    for (const auto& t : patch.tiles) {
        if (t.distance <= r) continue;
        if (edge[t.id]) ++out.edge_contact;
        bool touches = false;
        for (const auto& v : t.vertices) {
            for (auto bv : ball_vertices)
                if (std::abs(bv - v.z()) <= dedup_tolerance) {
                    touches = true;
                    break;
                }
            if (touches) break;
        }
        if (touches) ++out.vertex_contact;
    }
    return out;
}

// --- SVG -------------------------------------------------------------------------

struct SvgStyle {
    double size = 800;  // pixels
    double stroke_width = 0.003;
    std::vector<std::string> palette{"#d62728", "#1f77b4", "#ffbf00", "#2ca02c",
                                     "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    std::string stroke = "#202020";
    std::string background = "#ffffff";
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

// Path command drawing the geodesic from a to b (already in SVG coordinates,
// y pointing down).
inline std::string geodesic_segment(complex a, complex b) {
    double cross = a.real() * b.imag() - a.imag() * b.real();
    if (std::abs(cross) < 1e-9) return "L " + fmt(b.real()) + " " + fmt(b.imag());
    // Centre c of the circle orthogonal to the unit circle through a and b:
    // Re(z conj c) = (|z|^2 + 1) / 2 for z = a, b.
    double ra = (std::norm(a) + 1) / 2;
    double rb = (std::norm(b) + 1) / 2;
    double det = a.real() * b.imag() - a.imag() * b.real();
    complex c{(ra * b.imag() - rb * a.imag()) / det, (a.real() * rb - b.real() * ra) / det};
    double radius = std::sqrt(std::norm(c) - 1);
    complex u = a - c;
    complex v = b - c;
    int sweep = u.real() * v.imag() - u.imag() * v.real() > 0 ? 1 : 0;
    return "A " + fmt(radius) + " " + fmt(radius) + " 0 0 " + std::to_string(sweep) + " " +
           fmt(b.real()) + " " + fmt(b.imag());
}

}  // namespace detail

// Unit disk in a [-1.02, 1.02]^2 viewBox; tiles filled by distance class.
inline std::string to_svg(const TilingPatch& patch, const SvgStyle& style = {}) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.size
        << "\" height=\"" << style.size << "\" viewBox=\"-1.02 -1.02 2.04 2.04\">\n"
        << "<rect x=\"-1.02\" y=\"-1.02\" width=\"2.04\" height=\"2.04\" fill=\"" << style.background
        << "\"/>\n"
        << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"" << style.stroke
        << "\" stroke-width=\"" << detail::fmt(style.stroke_width) << "\"/>\n";
    for (const auto& t : patch.tiles) {
        const auto& color = style.palette[static_cast<std::size_t>(t.distance) % style.palette.size()];
        std::string d;
        auto flip = [](const DiskPoint& v) { return complex{v.x, -v.y}; };
        complex first = flip(t.vertices.front());
        d += "M " + detail::fmt(first.real()) + " " + detail::fmt(first.imag());
        for (std::size_t k = 0; k < t.vertices.size(); ++k) {
            complex a = flip(t.vertices[k]);
            complex b = flip(t.vertices[(k + 1) % t.vertices.size()]);
            d += " " + detail::geodesic_segment(a, b);
        }
        d += " Z";
        out << "<path class=\"d" << t.distance << "\" d=\"" << d << "\" fill=\"" << color
            << "\" stroke=\"" << style.stroke << "\" stroke-width=\""
            << detail::fmt(style.stroke_width) << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

namespace detail {

inline double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace detail

inline nlohmann::json to_json(const TilingPatch& patch) {
    nlohmann::json tiles = nlohmann::json::array();
    for (const auto& t : patch.tiles) {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : t.vertices) verts.push_back({detail::round12(v.x), detail::round12(v.y)});
        tiles.push_back({{"id", t.id},
                         {"distance", t.distance},
                         {"center", {detail::round12(t.center.x), detail::round12(t.center.y)}},
                         {"vertices", verts}});
    }
    return {{"p", patch.p}, {"q", patch.q}, {"depth", patch.depth}, {"tiles", tiles}};
}

}  // namespace tessella
