#pragma once

// Open disks, closed segments, simple graphs, and the exact predicates
// connecting them: pairwise intersection tests, containment tests against
// disks and halfplanes, intersection graphs, and orientation order types.

#include <gridspan/arrangement.hpp>
#include <gridspan/numeric.hpp>
#include <gridspan/point.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridspan {

// Open disk with the squared radius stored, so tangency decisions stay
// rational.
struct Disk {
    QPoint center;
    Rat radius_sq;
};

inline Disk make_disk(QPoint center, Rat radius_sq) {
    if (sign(radius_sq) <= 0) throw std::invalid_argument("make_disk: radius_sq must be positive");
    return Disk{std::move(center), std::move(radius_sq)};
}

inline void check_disk(const Disk& d) {
    if (sign(d.radius_sq) <= 0) throw std::invalid_argument("Disk: radius_sq must be positive");
}

// Two open disks meet iff dist < r1 + r2.  Squaring twice removes both
// roots: with D the squared center distance and S the sum of the squared
// radii, the condition is D < S or (D - S)/2 < sqrt(r1^2 r2^2).
inline bool disks_intersect(const Disk& d1, const Disk& d2) {
    check_disk(d1);
    check_disk(d2);
    Rat D = dist_squared(d1.center, d2.center);
    Rat S = d1.radius_sq + d2.radius_sq;
    if (D < S) return true;
    return cmp_sqrt((D - S) / 2, d1.radius_sq * d2.radius_sq) < 0;
}

inline bool point_in_disk(const QPoint& p, const Disk& d) {
    check_disk(d);
    return dist_squared(p, d.center) < d.radius_sq;
}

// Open inner inside open outer iff dist <= r_outer - r_inner.
inline bool disk_in_disk(const Disk& inner, const Disk& outer) {
    check_disk(inner);
    check_disk(outer);
    if (inner.radius_sq > outer.radius_sq) return false;
    Rat D = dist_squared(inner.center, outer.center);
    return cmp_sqrt((inner.radius_sq + outer.radius_sq - D) / 2,
                    inner.radius_sq * outer.radius_sq) >= 0;
}

// Open disk inside the open halfplane on side s of the line: the center
// lies on side s and the squared line distance is at least radius_sq.
inline bool disk_in_halfplane(const Disk& d, const OrientedLine& l, int s) {
    check_disk(d);
    if (s != 1 && s != -1) throw std::invalid_argument("disk_in_halfplane: side must be +1 or -1");
    Rat v = l.eval(d.center);
    if (sign(v) != s) return false;
    Rat norm_sq = Rat(l.wx() * l.wx() + l.wy() * l.wy());
    return v * v >= d.radius_sq * norm_sq;
}

// Closed segment with distinct endpoints.
struct Segment {
    QPoint a;
    QPoint b;
};

inline void check_segment(const Segment& s) {
    if (s.a == s.b) throw std::invalid_argument("Segment: endpoints coincide");
}

inline bool point_on_segment(const QPoint& p, const Segment& s) {
    check_segment(s);
    if (orient(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

// Closed-segment intersection, collinear overlap included.
inline bool segments_intersect(const Segment& s, const Segment& t) {
    check_segment(s);
    check_segment(t);
    int d1 = orient(t.a, t.b, s.a);
    int d2 = orient(t.a, t.b, s.b);
    int d3 = orient(s.a, s.b, t.a);
    int d4 = orient(s.a, s.b, t.b);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && point_on_segment(s.a, t)) return true;
    if (d2 == 0 && point_on_segment(s.b, t)) return true;
    if (d3 == 0 && point_on_segment(t.a, s)) return true;
    if (d4 == 0 && point_on_segment(t.b, s)) return true;
    return false;
}

// The line carrying a segment meets the closed segment iff the endpoints
// do not lie strictly on one side.
inline bool line_meets_segment(const OrientedLine& l, const Segment& s) {
    check_segment(s);
    return l.side(s.a) * l.side(s.b) <= 0;
}

// Simple undirected graph with optional per-vertex role tags.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n), labels_(n) {}

    std::size_t size() const { return adj_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= size() || v >= size())
            throw std::invalid_argument("Graph::add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
        if (adj_[u].insert(v).second) {
            adj_[v].insert(u);
            ++edge_count_;
        }
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        if (u >= size() || v >= size())
            throw std::invalid_argument("Graph::has_edge: vertex out of range");
        if (u == v) return false;
        return adj_[u].count(v) != 0;
    }

    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    const std::set<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t edge_count() const { return edge_count_; }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        e.reserve(edge_count_);
        for (std::size_t u = 0; u < size(); ++u)
            for (std::size_t v : adj_[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    const std::string& label(std::size_t v) const { return labels_.at(v); }
    void set_label(std::size_t v, std::string text) { labels_.at(v) = std::move(text); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    std::vector<std::set<std::size_t>> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

inline bool is_triangle_free(const Graph& g) {
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            const auto& small = nu.size() <= nv.size() ? nu : nv;
            const auto& large = nu.size() <= nv.size() ? nv : nu;
            for (std::size_t w : small)
                if (w != u && w != v && large.count(w)) return false;
        }
    return true;
}

inline std::size_t min_degree(const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("min_degree: empty graph");
    std::size_t m = g.degree(0);
    for (std::size_t v = 1; v < g.size(); ++v) m = std::min(m, g.degree(v));
    return m;
}

// Subgraph induced by the listed vertices; vertex i of the result is
// verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& verts) {
    std::set<std::size_t> seen;
    for (std::size_t v : verts) {
        if (v >= g.size()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
    }
    Graph h(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        h.set_label(i, g.label(verts[i]));
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(i, j);
    }
    return h;
}

namespace detail {

// Sweep over x-intervals: calls test(i, j) for every pair whose intervals
// overlap.  The intervals must be conservative supersets of the objects'
// x-extents, so no intersecting pair is skipped.
template <typename Test>
void sweep_pairs(const std::vector<std::pair<Rat, Rat>>& intervals, Test&& test) {
    std::vector<std::size_t> order(intervals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (intervals[a].first != intervals[b].first)
            return intervals[a].first < intervals[b].first;
        return a < b;
    });
    std::vector<std::size_t> active;
    for (std::size_t idx : order) {
        const Rat& lo = intervals[idx].first;
        std::size_t keep = 0;
        for (std::size_t a : active)
            if (intervals[a].second >= lo) active[keep++] = a;
        active.resize(keep);
        for (std::size_t a : active) test(std::min(a, idx), std::max(a, idx));
        active.push_back(idx);
    }
}

}  // namespace detail

inline Graph intersection_graph(const std::vector<Disk>& disks) {
    for (const Disk& d : disks) check_disk(d);
    std::vector<std::pair<Rat, Rat>> iv;
    iv.reserve(disks.size());
    for (const Disk& d : disks) {
        Rat r = sqrt_upper(d.radius_sq, 8);
        iv.emplace_back(d.center.x - r, d.center.x + r);
    }
    Graph g(disks.size());
    detail::sweep_pairs(iv, [&](std::size_t i, std::size_t j) {
        if (disks_intersect(disks[i], disks[j])) g.add_edge(i, j);
    });
    return g;
}

// Equal-radius family: disks B(center_i, r) with common r^2.
inline Graph intersection_graph(const std::vector<QPoint>& centers, const Rat& radius_sq) {
    if (sign(radius_sq) <= 0)
        throw std::invalid_argument("intersection_graph: radius_sq must be positive");
    Rat four_r_sq = 4 * radius_sq;
    std::vector<std::pair<Rat, Rat>> iv;
    iv.reserve(centers.size());
    Rat r = sqrt_upper(radius_sq, 8);
    for (const QPoint& c : centers) iv.emplace_back(c.x - r, c.x + r);
    Graph g(centers.size());
    detail::sweep_pairs(iv, [&](std::size_t i, std::size_t j) {
        if (dist_squared(centers[i], centers[j]) < four_r_sq) g.add_edge(i, j);
    });
    return g;
}

inline Graph intersection_graph(const std::vector<Segment>& segments) {
    for (const Segment& s : segments) check_segment(s);
    std::vector<std::pair<Rat, Rat>> iv;
    iv.reserve(segments.size());
    for (const Segment& s : segments)
        iv.emplace_back(std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x));
    Graph g(segments.size());
    detail::sweep_pairs(iv, [&](std::size_t i, std::size_t j) {
        if (segments_intersect(segments[i], segments[j])) g.add_edge(i, j);
    });
    return g;
}

// Orientation sign for every index triple i < j < k.
inline std::map<std::array<std::size_t, 3>, int> order_type(const std::vector<QPoint>& points) {
    std::map<std::array<std::size_t, 3>, int> t;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            for (std::size_t k = j + 1; k < points.size(); ++k)
                t[{i, j, k}] = orient(points[i], points[j], points[k]);
    return t;
}

}  // namespace gridspan
