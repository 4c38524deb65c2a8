#pragma once

// Constructible point configurations and the Von Staudt incidence machinery:
// configurations carry per-point provenance (which two joins defined each
// point), and the arithmetic gadgets (one / addition / multiplication) extend
// a configuration while encoding rational arithmetic in incidences.  The
// squaring-sequence builder produces configurations whose designated 4-tuple
// has cross ratio 2^(2^s).

#include <gridspan/projective.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace gridspan {

// Indices j1,j2,j3,j4: the point is line(p_{j1},p_{j2}) ∩ line(p_{j3},p_{j4}).
using ConstructionStep = std::array<std::size_t, 4>;

struct PointConfiguration {
    std::vector<HomPoint> points;
    std::vector<std::optional<ConstructionStep>> steps;  // null = initial point

    void append_initial(HomPoint p) {
        points.push_back(std::move(p));
        steps.push_back(std::nullopt);
    }
    void append_constructed(HomPoint p, ConstructionStep s) {
        points.push_back(std::move(p));
        steps.push_back(s);
    }
    std::size_t size() const { return points.size(); }
};

struct ConstructibilityReport {
    bool ok = true;
    std::size_t index = 0;   // first violating point when !ok
    std::string reason;
};

// Validates the two constructibility conditions: the first four points are
// pairwise distinct with no three collinear, and every point that carries a
// step is exactly the meet of the two (distinct) recorded joins of earlier
// points.
inline ConstructibilityReport check_constructible(const PointConfiguration& cfg) {
    auto fail = [](std::size_t i, std::string reason) {
        return ConstructibilityReport{false, i, std::move(reason)};
    };
    if (cfg.points.size() != cfg.steps.size())
        return fail(0, "points/steps size mismatch");
    if (cfg.size() < 4) return fail(cfg.size(), "fewer than four points");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cfg.points[i] == cfg.points[j])
                return fail(j, "coincident initial points");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(cfg.points[i], cfg.points[j], cfg.points[k]))
                    return fail(k, "collinear initial triple");
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (!cfg.steps[i]) continue;
        const auto& s = *cfg.steps[i];
        for (std::size_t j : s)
            if (j >= i) return fail(i, "step references a non-earlier point");
        if (cfg.points[s[0]] == cfg.points[s[1]] || cfg.points[s[2]] == cfg.points[s[3]])
            return fail(i, "step join of coincident points");
        ProjLine l1 = join(cfg.points[s[0]], cfg.points[s[1]]);
        ProjLine l2 = join(cfg.points[s[2]], cfg.points[s[3]]);
        if (l1 == l2) return fail(i, "step lines coincide");
        if (meet(l1, l2) != cfg.points[i]) return fail(i, "point differs from step meet");
    }
    return
        {};
}

// Designated frame positions within a configuration.
struct FrameIndices {
    std::size_t p0 = 0, pinf = 1, q = 2, r = 3;
};

namespace detail {

inline const HomPoint& std_p0() {
    static const HomPoint p(Int(0), Int(0), Int(1));
    return p;
}
inline const HomPoint& std_pinf() {
    static const HomPoint p(Int(1), Int(0), Int(0));
    return p;
}
inline const HomPoint& std_q() {
    static const HomPoint p(Int(0), Int(1), Int(0));
    return p;
}
inline const HomPoint& std_r() {
    static const HomPoint p(Int(1), Int(1), Int(1));
    return p;
}

inline void require_standard_frame(const PointConfiguration& cfg, const FrameIndices& f) {
    auto at = [&](std::size_t i) -> const HomPoint& {
        if (i >= cfg.size()) throw std::invalid_argument("frame index out of range");
        return cfg.points[i];
    };
    if (at(f.p0) != std_p0() || at(f.pinf) != std_pinf() || at(f.q) != std_q() ||
        at(f.r) != std_r())
        throw std::invalid_argument("configuration frame is not the standard (0:0:1),(1:0:0),(0:1:0),(1:1:1)");
}

// Value a of an axis point (a:0:1); rejects anything else.
inline Rat axis_value(const HomPoint& p, const char* role) {
    if (p.y() != 0 || p.z() == 0)
        throw std::invalid_argument(std::string("expected a finite x-axis point for ") + role);
    return make_rat(p.x(), p.z());
}

inline HomPoint axis_point(const Rat& a) {
    return HomPoint(a, Rat(0), Rat(1));
}

// Appends meet(line(a,b), line(c,d)) with its provenance; degeneracy of the
// construction (coincident points or lines) is a domain error.
inline const HomPoint& append_meet(PointConfiguration& cfg, std::size_t a, std::size_t b,
                                   std::size_t c, std::size_t d) {
    try {
        ProjLine l1 = join(cfg.points[a], cfg.points[b]);
        ProjLine l2 = join(cfg.points[c], cfg.points[d]);
        cfg.append_constructed(meet(l1, l2), {a, b, c, d});
    } catch (const std::invalid_argument& e) {
        throw std::domain_error(std::string("degenerate construction step: ") + e.what());
    }
    return cfg.points.back();
}

}  // namespace detail

struct VonStaudtStep {
    enum Kind { one, add, mul } kind;
    std::size_t a = 0, b = 0;  // operand indices for add/mul

    static VonStaudtStep make_one() { return {one}; }
    static VonStaudtStep make_add(std::size_t a, std::size_t b) { return {add, a, b}; }
    static VonStaudtStep make_mul(std::size_t a, std::size_t b) { return {mul, a, b}; }
};

// Extends a configuration over the standard frame by one arithmetic gadget.
// Appends 1 (one), 4 (add), or 3 (mul) points with provenance; the final
// appended point is checked to equal (1:0:1), (a+b:0:1), (a·b:0:1).
inline PointConfiguration von_staudt_extend(PointConfiguration cfg, const VonStaudtStep& step,
                                            FrameIndices f = {}) {
    detail::require_standard_frame(cfg, f);
    using detail::append_meet;
    using detail::axis_point;
    using detail::axis_value;
    switch (step.kind) {
        case VonStaudtStep::one: {
            const HomPoint& o1 = append_meet(cfg, f.r, f.q, f.p0, f.pinf);
            if (o1 != axis_point(Rat(1)))
                throw std::logic_error("von_staudt_extend: one-sequence did not end at (1:0:1)");
            break;
        }
        case VonStaudtStep::add: {
            Rat a = axis_value(cfg.points.at(step.a), "addition operand a");
            Rat b = axis_value(cfg.points.at(step.b), "addition operand b");
            std::size_t n = cfg.size();
            append_meet(cfg, f.r, f.pinf, step.a, f.q);       // A1
            append_meet(cfg, f.p0, n, f.pinf, f.q);           // A2
            append_meet(cfg, step.b, n + 1, f.r, f.pinf);     // A3
            const HomPoint& a4 = append_meet(cfg, n + 2, f.q, f.p0, f.pinf);
            if (a4 != axis_point(a + b))
                throw std::logic_error("von_staudt_extend: addition did not end at P_(a+b)");
            break;
        }
        case VonStaudtStep::mul: {
            Rat a = axis_value(cfg.points.at(step.a), "multiplication operand a");
            Rat b = axis_value(cfg.points.at(step.b), "multiplication operand b");
            std::size_t n = cfg.size();
            append_meet(cfg, f.p0, f.r, step.b, f.q);         // M1
            append_meet(cfg, step.a, f.r, f.pinf, f.q);       // M2
            const HomPoint& m3 = append_meet(cfg, n, n + 1, f.p0, f.pinf);
            if (m3 != axis_point(a * b))
                throw std::logic_error("von_staudt_extend: multiplication did not end at P_(a·b)");
            break;
        }
    }
    return cfg;
}

// Drops every later occurrence of a repeated point, remapping step indices to
// the first occurrence.  Valid because equal points span equal join lines.
inline PointConfiguration dedupe_points(const PointConfiguration& cfg,
                                        std::vector<std::size_t>* index_map = nullptr) {
    PointConfiguration out;
    std::map<HomPoint, std::size_t> seen;
    std::vector<std::size_t> remap(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        auto [it, fresh] = seen.try_emplace(cfg.points[i], out.size());
        remap[i] = it->second;
        if (!fresh) continue;
        if (cfg.steps[i]) {
            const auto& s = *cfg.steps[i];
            out.append_constructed(cfg.points[i],
                                   {remap[s[0]], remap[s[1]], remap[s[2]], remap[s[3]]});
        } else {
            out.append_initial(cfg.points[i]);
        }
    }
    if (index_map) *index_map = std::move(remap);
    return out;
}

// Configuration encoding the value 2^(2^s) on the x-axis: frame, then the
// one-gadget, then 1+1, then s squarings.  Duplicates are dropped, so the
// result has 8+3s distinct points.
struct SquaringConfig {
    PointConfiguration cfg;
    std::size_t i_p1 = 0;    // frame origin (first point of the cross-ratio 4-tuple)
    std::size_t i_p2 = 1;    // horizontal infinity
    std::size_t i_p5 = 4;    // the constructed unit point
    std::size_t i_last = 0;  // the value point
    unsigned squarings = 0;

    // cross_ratio(p5, last, p2, p1), which the builder guarantees is 2^(2^s).
    ExtRat designated_cross_ratio() const {
        return cross_ratio(cfg.points[i_p5], cfg.points[i_last], cfg.points[i_p2],
                           cfg.points[i_p1]);
    }
};

inline Int squaring_target(unsigned s) {
    if (s > 26) throw std::invalid_argument("squaring_target: result would exceed supported size");
    return Int(1) << (1u << s);
}

inline SquaringConfig build_gps_config(unsigned s) {
    squaring_target(s);  // range check up front
    PointConfiguration cfg;
    cfg.append_initial(detail::std_p0());
    cfg.append_initial(detail::std_pinf());
    cfg.append_initial(detail::std_q());
    cfg.append_initial(detail::std_r());
    cfg = von_staudt_extend(std::move(cfg), VonStaudtStep::make_one());
    std::size_t cur = cfg.size() - 1;                          // P_1
    cfg = von_staudt_extend(std::move(cfg), VonStaudtStep::make_add(cur, cur));
    cur = cfg.size() - 1;                                      // P_2
    for (unsigned i = 0; i < s; ++i) {
        cfg = von_staudt_extend(std::move(cfg), VonStaudtStep::make_mul(cur, cur));
        cur = cfg.size() - 1;
    }
    std::vector<std::size_t> remap;
    SquaringConfig out;
    out.cfg = dedupe_points(cfg, &remap);
    out.i_p5 = remap[4];
    out.i_last = remap[cur];
    out.squarings = s;
    if (out.designated_cross_ratio() != Rat(squaring_target(s)))
        throw std::logic_error("build_gps_config: cross ratio mismatch");
    if (auto rep = check_constructible(out.cfg); !rep.ok)
        throw std::logic_error("build_gps_config: output not constructible: " + rep.reason);
    return out;
}

struct ChartResult {
    PointConfiguration cfg;  // all points off the line at infinity
    ProjectiveMap map;
};

namespace detail {
// Deterministic enumeration of integer pairs by growing L∞ norm.
inline std::pair<Int, Int> chart_candidate(std::size_t idx) {
    if (idx == 0) return {Int(0), Int(0)};
    std::size_t seen = 1;
    for (long ring = 1;; ++ring) {
        for (long a = -ring; a <= ring; ++a)
            for (long b = -ring; b <= ring; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != ring) continue;
                if (seen++ == idx) return {Int(a), Int(b)};
            }
    }
}
}  // namespace detail

// Moves every point of the configuration off the line at infinity with a map
// of the form (x:y:z) -> (x:y:ax+by+z), searching integer (a,b) pairs in a
// fixed order.  Each point invalidates only one line of (a,b) values, so the
// search terminates.  Incidences, and hence constructibility and cross
// ratios, are preserved.
inline ChartResult euclidean_chart(const PointConfiguration& cfg) {
    for (std::size_t idx = 0;; ++idx) {
        auto [a, b] = detail::chart_candidate(idx);
        bool good = true;
        for (const auto& p : cfg.points)
            if (a * p.x() + b * p.y() + p.z() == 0) {
                good = false;
                break;
            }
        if (!good) continue;
        Mat3 m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = Rat(i == j ? 1 : 0);
        m[2][0] = Rat(a);
        m[2][1] = Rat(b);
        ProjectiveMap map(std::move(m));
        ChartResult out{cfg, map};
        for (auto& p : out.cfg.points) p = map.apply(p);
        return out;
    }
}

}  // namespace gridspan
