#pragma once

// Hard arrangement instances.  For a parameter k, builds an oriented line
// arrangement L of 4n+1 lines together with 11n+4 witness points Q whose
// sign vectors force every arrangement realizing them to contain a copy of
// a squaring configuration, and hence to have span at least 2^(2^k).  Each
// construction line of the configuration is shadowed by a pencil of two
// slightly tilted lines crossing on it; the witnesses pin down the local
// cell structure around every construction point.  Also provides the
// companion verifier for such instances.

#include <gridspan/arrangement.hpp>
#include <gridspan/projective.hpp>
#include <gridspan/vonstaudt.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridspan {

struct BuildFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A built instance.  Lines come in blocks of four per construction point
// (two pencils of two), followed by one closing line through the first two
// points.  Witnesses come in groups of eleven per point, one per cell of its
// block, followed by four points flanking the closing line inside the first
// two central cells.  quadruples[i] names the two point pairs whose joins
// cross in point i; entries <= 0 refer to aux[-entry].
struct HardPair {
    unsigned k = 0;
    Arrangement L;
    std::vector<QPoint> Q;
    std::set<SignVector> S;
    std::vector<QPoint> points;
    std::vector<QPoint> aux;
    std::vector<std::array<long, 4>> quadruples;
    std::vector<Rat> epsilons;
    PointConfiguration config;
};

struct HardPairReport {
    bool ok = true;
    std::vector<std::string> violations;
};

inline HardPairReport verify_hard_pair(const HardPair& hp);

// The cells of a four-line block that touch the closure of the central
// quadrilateral: the quadrilateral itself, its four edge neighbors, and its
// four corner neighbors.
inline const std::set<SignVector>& block_near_pattern() {
    static const std::set<SignVector> p = {
        {-1, -1, -1, -1},
        {1, -1, -1, -1},
        {-1, 1, -1, -1},
        {-1, -1, 1, -1},
        {-1, -1, -1, 1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
        {-1, 1, 1, -1},
        {-1, 1, -1, 1}};
    return p;
}

// Chamber sets realizable by a block: the nine near cells plus one far wedge
// beyond each pencil anchor.  A far wedge is crossed by neither line of the
// other pencil, so its off-pencil signs are mixed; which mixed pair appears
// depends on the side of the anchor, so both are accepted.
inline bool block_pattern_ok(const std::set<SignVector>& chambers) {
    if (chambers.size() != 11) return false;
    std::vector<SignVector> extra;
    for (const SignVector& v : chambers) {
        if (v.size() != 4) return false;
        if (!block_near_pattern().count(v)) extra.push_back(v);
    }
    if (extra.size() != 2) return false;
    auto far_first = [](const SignVector& v) {
        return v[0] == 1 && v[1] == 1 && v[2] != v[3];
    };
    auto far_second = [](const SignVector& v) {
        return v[2] == 1 && v[3] == 1 && v[0] != v[1];
    };
    return (far_first(extra[0]) && far_second(extra[1])) ||
           (far_first(extra[1]) && far_second(extra[0]));
}

namespace detail {

// Side of the line the whole open ball around center lies strictly on, or
// empty when the ball meets the line.
inline std::optional<int> ball_side(const OrientedLine& l, const QPoint& center,
                                    const Rat& radius2) {
    Rat v = l.eval(center);
    int s = sign(v);
    if (s == 0) return std::nullopt;
    if (v * v > radius2 * Rat(l.wx() * l.wx() + l.wy() * l.wy())) return s;
    return std::nullopt;
}

inline std::optional<QPoint> signed_point(const std::vector<QPoint>& pts,
                                          const std::vector<QPoint>& aux, long s) {
    if (s >= 1) {
        if (std::size_t(s) > pts.size()) return std::nullopt;
        return pts[std::size_t(s) - 1];
    }
    std::size_t m = std::size_t(-s);
    if (m >= aux.size()) return std::nullopt;
    return aux[m];
}

inline unsigned halving_budget() {
    if (const char* s = std::getenv("GRIDSPAN_MAX_HALVINGS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 100000) return unsigned(v);
    }
    return 64;
}

struct HardPairBuilder {
    unsigned k;
    unsigned max_halvings = halving_budget();
    std::size_t n = 0;
    PointConfiguration cfg;
    std::vector<QPoint> pts;
    std::vector<QPoint> aux;
    std::vector<std::array<long, 4>> f;
    std::vector<Rat> eps;
    std::optional<OrientedLine> final_line;
    std::vector<std::optional<std::array<OrientedLine, 4>>> placed;
    std::vector<std::array<std::optional<std::pair<std::array<Int, 3>, QPoint>>, 2>> anchors;
    std::vector<unsigned> halvings;
    std::string last_diag;

    explicit HardPairBuilder(unsigned kk) : k(kk) {}

    QPoint pt(long s) const { return *signed_point(pts, aux, s); }

    HardPair run() {
        init_points();
        init_aux();
        init_eps();
        final_line = OrientedLine::through(pts[0], pts[1]);
        place_all();

        std::vector<OrientedLine> all;
        all.reserve(4 * n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (const OrientedLine& l : *placed[i]) all.push_back(l);
        all.push_back(*final_line);
        Arrangement L(std::move(all));

        std::vector<QPoint> Q = make_witnesses(L);
        check_covering_wedges(Q);

        HardPair hp;
        hp.k = k;
        hp.L = std::move(L);
        hp.Q = std::move(Q);
        hp.points = pts;
        hp.aux = aux;
        hp.quadruples = f;
        hp.epsilons = eps;
        hp.config = cfg;
        hp.S = sign_vector_set(hp.Q, hp.L);

        HardPairReport rep = verify_hard_pair(hp);
        if (!rep.ok)
            throw BuildFailure("self-check failed: " + rep.violations.front());
        return hp;
    }

    void init_points() {
        SquaringConfig gps = build_gps_config(k + 1);
        if (gps.i_p1 != 0 || gps.i_p2 != 1 || gps.i_p5 != 4 ||
            gps.i_last + 1 != gps.cfg.size())
            throw BuildFailure("unexpected squaring configuration layout");
        ChartResult chart = euclidean_chart(gps.cfg);
        cfg = std::move(chart.cfg);
        n = cfg.size();
        pts.reserve(n);
        for (const HomPoint& hp : cfg.points) {
            auto [x, y] = hp.affine();
            pts.push_back(QPoint{x, y});
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (pts[i] == pts[j]) throw BuildFailure("construction points collide");
        f.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < 4) {
                f[i] = {-(long(4 * i) + 3), -(long(4 * i) + 2), -(long(4 * i) + 1),
                        -long(4 * i)};
            } else {
                if (!cfg.steps[i]) throw BuildFailure("constructed point without a step");
                const ConstructionStep& st = *cfg.steps[i];
                f[i] = {long(st[0]) + 1, long(st[1]) + 1, long(st[2]) + 1, long(st[3]) + 1};
            }
        }
        placed.assign(n, std::nullopt);
        anchors.assign(n, {});
        halvings.assign(n, 0);
    }

    // Two pairs of helper points per initial construction point, symmetric
    // around it on two lines of distinct slope, so the point is the crossing
    // of the pair joins and lies between both pairs.
    void init_aux() {
        constexpr long slope1[4] = {1, 3, 7, 13};
        constexpr long slope2[4] = {2, 5, 11, 17};
        for (unsigned attempt = 0; attempt < 64; ++attempt) {
            aux.assign(16, QPoint{});
            for (std::size_t i = 0; i < 4; ++i) {
                const QPoint& p = pts[i];
                QPoint d1{Rat(1), Rat(slope1[i], long(17 + attempt + 2 * i))};
                QPoint d2{Rat(slope2[i], long(19 + attempt + 2 * i)), Rat(1)};
                aux[4 * i + 3] = p + d1;
                aux[4 * i + 2] = p - d1;
                aux[4 * i + 1] = p + d2;
                aux[4 * i + 0] = p - d2;
            }
            if (aux_ok()) return;
        }
        throw BuildFailure("helper point placement failed");
    }

    bool aux_ok() const {
        for (std::size_t a = 0; a < aux.size(); ++a) {
            for (std::size_t b = a + 1; b < aux.size(); ++b)
                if (aux[a] == aux[b]) return false;
            for (const QPoint& p : pts)
                if (aux[a] == p) return false;
        }
        for (std::size_t a = 0; a < aux.size(); ++a)
            for (std::size_t b = a + 1; b < aux.size(); ++b)
                for (std::size_t c = b + 1; c < aux.size(); ++c)
                    if (orient(aux[a], aux[b], aux[c]) == 0) return false;
        return true;
    }

    // Initial scale per point: a quarter of its clearance from every other
    // point, every helper point, and every join line it does not lie on,
    // damped toward earlier points so that each block's pencils can wrap the
    // balls of the points it references.
    void init_eps() {
        std::vector<OrientedLine> bases;
        bases.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            QPoint a1 = pt(f[i][0]), a2 = pt(f[i][1]);
            QPoint b1 = pt(f[i][2]), b2 = pt(f[i][3]);
            if (a1 == a2 || b1 == b2) throw BuildFailure("degenerate join in a quadruple");
            OrientedLine m1 = OrientedLine::through(a1, a2);
            OrientedLine m2 = OrientedLine::through(b1, b2);
            if (m1.same_line(m2)) throw BuildFailure("quadruple joins coincide");
            auto x = meet(m1, m2);
            if (!x || !(*x == pts[i]))
                throw BuildFailure("quadruple joins do not recover their point");
            bases.push_back(m1);
            bases.push_back(m2);
        }
        eps.assign(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<Rat> best;
            auto upd = [&](const Rat& v) {
                if (!best || v < *best) best = v;
            };
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) upd(dist_squared(pts[i], pts[j]));
            for (const QPoint& a : aux) upd(dist_squared(pts[i], a));
            for (const OrientedLine& l : bases) {
                if (l.contains(pts[i])) continue;
                Rat v = l.eval(pts[i]);
                upd(v * v / Rat(l.wx() * l.wx() + l.wy() * l.wy()));
            }
            Rat lo;
            for (unsigned g = 8;; g += 16) {
                lo = sqrt_lower(*best, g);
                if (lo > 0) break;
                if (g > 512) throw BuildFailure("clearance underflow");
            }
            eps[i] = lo / 4;
        }
        for (std::size_t i = 0; i < n; ++i)
            eps[i] /= Rat(boost::multiprecision::pow(Int(16), unsigned(n - 1 - i)));
    }

    struct PairSpec {
        QPoint a1, a2, u;
        bool casea = false;
        std::array<Int, 3> base_key{};
    };

    bool segment_case(std::size_t i, int pr) const {
        QPoint a1 = pt(f[i][2 * pr]), a2 = pt(f[i][2 * pr + 1]);
        QPoint d = a2 - a1;
        Rat lp = dot(pts[i] - a1, d) / dot(d, d);
        return Rat(0) < lp && lp < Rat(1);
    }

    // Anchor for a pencil: a point of the join line distinct from every
    // construction and helper point and from anchors other blocks already
    // use on the same line; outside the pair segment when the construction
    // point lies between the pair, inside it otherwise.
    std::optional<PairSpec> pair_spec(std::size_t i, int pr) {
        QPoint a1 = pt(f[i][2 * pr]), a2 = pt(f[i][2 * pr + 1]);
        const QPoint& p = pts[i];
        QPoint d = a2 - a1;
        if (cross(p - a1, d) != 0) {
            last_diag = "block " + std::to_string(i + 1) + ": point off its join line";
            return std::nullopt;
        }
        bool casea = segment_case(i, pr);
        OrientedLine base = OrientedLine::through(a1, a2);
        std::array<Int, 3> key{base.wx(), base.wy(), base.c()};
        std::vector<Rat> ladder;
        if (casea)
            ladder = {Rat(2),     Rat(-1),      Rat(3),  Rat(-2), Rat(5, 2), Rat(-3, 2),
                      Rat(4),     Rat(-3),      Rat(5),  Rat(-4), Rat(7, 2), Rat(-5, 2)};
        else
            ladder = {Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3, 4), Rat(1, 5),
                      Rat(2, 5), Rat(3, 5), Rat(4, 5), Rat(1, 7), Rat(2, 7), Rat(3, 7)};
        std::size_t start = (i * 5 + std::size_t(pr) * 3) % ladder.size();
        for (std::size_t r = 0; r < ladder.size(); ++r) {
            QPoint u = a1 + ladder[(start + r) % ladder.size()] * d;
            bool clash = false;
            for (const QPoint& q : pts)
                if (q == u) clash = true;
            for (const QPoint& q : aux)
                if (q == u) clash = true;
            for (std::size_t j = 0; j < n && !clash; ++j) {
                if (j == i) continue;
                for (const auto& an : anchors[j])
                    if (an && an->first == key && an->second == u) clash = true;
            }
            if (clash) continue;
            return PairSpec{a1, a2, u, casea, key};
        }
        last_diag = "block " + std::to_string(i + 1) + ": no free pencil anchor";
        return std::nullopt;
    }

    OrientedLine tilt(const PairSpec& ps, const Rat& t, int dsgn, const QPoint& p) const {
        QPoint d = ps.a2 - ps.a1;
        Rat s = Rat(dsgn) * t;
        QPoint dir{d.x - s * d.y, d.y + s * d.x};
        return OrientedLine::through_with_negative(ps.u, ps.u + dir, p);
    }

    // All exact demands on a candidate block, cheap ones first.  Empty on
    // success, else a description of the first failure.
    std::optional<std::string> block_check(std::size_t i,
                                           const std::array<OrientedLine, 4>& ls) const {
        const QPoint& p = pts[i];
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                if (ls[a].same_line(ls[b])) return "pencil lines coincide";
        for (const OrientedLine& l : ls)
            if (l.same_line(*final_line)) return "line collides with the closing line";
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !placed[j]) continue;
            for (const OrientedLine& o : *placed[j])
                for (const OrientedLine& l : ls)
                    if (l.same_line(o))
                        return "line collides with block " + std::to_string(j + 1);
        }
        for (const OrientedLine& l : ls)
            if (l.side(p) != -1) return "designated point not in the central cell";
        Rat lim = eps[i] * eps[i] * Rat(4, 9);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 2; b < 4; ++b) {
                auto c = meet(ls[a], ls[b]);
                if (!c) return "pencils do not cross";
                if (!(dist_squared(*c, p) < lim)) return "central cell too large";
            }
        for (int pr = 0; pr < 2; ++pr) {
            std::array<std::array<int, 2>, 2> sg{};
            for (int e = 0; e < 2; ++e) {
                long sidx = f[i][std::size_t(2 * pr + e)];
                QPoint q = pt(sidx);
                for (int t = 0; t < 2; ++t) {
                    const OrientedLine& l = ls[std::size_t(2 * pr + t)];
                    if (sidx >= 1) {
                        Rat e2 = eps[std::size_t(sidx - 1)] * eps[std::size_t(sidx - 1)];
                        auto s = ball_side(l, q, e2);
                        if (!s) return "reference ball meets its pencil";
                        sg[std::size_t(e)][std::size_t(t)] = *s;
                    } else {
                        int s = l.side(q);
                        if (s == 0) return "reference point on a pencil line";
                        sg[std::size_t(e)][std::size_t(t)] = s;
                    }
                }
                if (sidx >= 1) {
                    Rat e2 = eps[std::size_t(sidx - 1)] * eps[std::size_t(sidx - 1)];
                    for (int t = 0; t < 2; ++t)
                        if (!ball_side(ls[std::size_t(2 * (1 - pr) + t)], q, e2))
                            return "reference ball meets the opposite pencil";
                }
            }
            bool near0 = sg[0][0] == -1 && sg[0][1] == -1;
            bool near1 = sg[1][0] == -1 && sg[1][1] == -1;
            bool far0 = sg[0][0] == 1 && sg[0][1] == 1;
            bool far1 = sg[1][0] == 1 && sg[1][1] == 1;
            if (segment_case(i, pr)) {
                if (!(near0 && near1)) return "pair references left the near wedge";
            } else {
                if (!((near0 && far1) || (near1 && far0)))
                    return "pair references not in opposite wedges";
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rat e2 = eps[j] * eps[j];
            bool okj = false;
            for (const OrientedLine& l : ls) {
                auto s = ball_side(l, pts[j], e2);
                if (s && *s == 1) {
                    okj = true;
                    break;
                }
            }
            if (!okj) return "no cleared separating line for point " + std::to_string(j + 1);
        }
        Arrangement block({ls[0], ls[1], ls[2], ls[3]});
        if (!is_simple(block)) return "block not simple";
        if (!block_pattern_ok(enumerate_chambers(block))) return "chamber pattern mismatch";
        return std::nullopt;
    }

    bool try_place_block(std::size_t i) {
        auto s1 = pair_spec(i, 0);
        if (!s1) return false;
        auto s2 = pair_spec(i, 1);
        if (!s2) return false;
        const QPoint& p = pts[i];
        Rat t(1, 4);
        for (unsigned rung = 0; rung < 200; ++rung, t /= 2) {
            std::array<OrientedLine, 4> ls{tilt(*s1, t, 1, p), tilt(*s1, t, -1, p),
                                           tilt(*s2, t, 1, p), tilt(*s2, t, -1, p)};
            auto v = block_check(i, ls);
            if (!v) {
                placed[i] = ls;
                anchors[i][0] = std::pair{s1->base_key, s1->u};
                anchors[i][1] = std::pair{s2->base_key, s2->u};
                return true;
            }
            last_diag = "block " + std::to_string(i + 1) + ": " + *v;
        }
        return false;
    }

    void unplace(std::size_t i) {
        placed[i].reset();
        anchors[i] = {};
    }

    // Places every block; when one cannot be placed at any tilt, shrinks the
    // scale of the points it references and replaces their blocks, whose
    // central cells must shrink along.  All other demands only loosen under
    // shrinking, so placed blocks stay valid.
    void place_all() {
        std::deque<std::size_t> pending;
        std::vector<char> queued(n, 1);
        for (std::size_t i = 0; i < n; ++i) pending.push_back(i);
        auto enqueue = [&](std::size_t i) {
            if (!queued[i]) {
                queued[i] = 1;
                pending.push_back(i);
            }
        };
        unsigned guard = 0;
        while (!pending.empty()) {
            if (++guard > 16384)
                throw BuildFailure("block placement did not converge: " + last_diag);
            std::size_t i = pending.front();
            pending.pop_front();
            queued[i] = 0;
            unplace(i);
            if (try_place_block(i)) continue;
            std::vector<std::size_t> anc;
            for (long s : f[i])
                if (s >= 1) anc.push_back(std::size_t(s - 1));
            std::sort(anc.begin(), anc.end());
            anc.erase(std::unique(anc.begin(), anc.end()), anc.end());
            if (anc.empty())
                throw BuildFailure("block placement failed: " + last_diag);
            for (std::size_t j : anc) {
                if (halvings[j] >= max_halvings)
                    throw BuildFailure("scale budget exhausted for point " +
                                       std::to_string(j + 1) + ": " + last_diag);
                eps[j] /= 2;
                ++halvings[j];
                if (placed[j]) unplace(j);
                enqueue(j);
            }
            enqueue(i);
        }
    }

    std::array<OrientedLine, 4> square_lines(const QPoint& p, const Rat& h) const {
        return {OrientedLine::from_coeffs(Rat(1), Rat(0), p.x + h),
                OrientedLine::from_coeffs(Rat(1), Rat(0), p.x - h),
                OrientedLine::from_coeffs(Rat(0), Rat(1), p.y + h),
                OrientedLine::from_coeffs(Rat(0), Rat(1), p.y - h)};
    }

    // One witness per cell of every block.  Witnesses of cells touching the
    // central one are confined to an open square inside the point's ball, so
    // they inherit every wedge the ball is committed to; such a cell reaches
    // the square since it accumulates at a corner of the central cell.  The
    // two far-wedge witnesses and the four flanking points only need their
    // cells.  All witnesses stay off every line of the arrangement.
    std::vector<QPoint> make_witnesses(const Arrangement& L) const {
        std::vector<QPoint> Q;
        Q.reserve(11 * n + 4);
        const std::vector<OrientedLine>& all = L.lines();
        for (std::size_t i = 0; i < n; ++i) {
            const std::array<OrientedLine, 4>& ls = *placed[i];
            Arrangement block({ls[0], ls[1], ls[2], ls[3]});
            std::set<SignVector> chambers = enumerate_chambers(block);
            Rat cmax2(0);
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 2; b < 4; ++b) {
                    Rat d2 = dist_squared(*meet(ls[a], ls[b]), pts[i]);
                    if (d2 > cmax2) cmax2 = d2;
                }
            Rat h0 = eps[i] * Rat(2, 3);
            std::optional<std::array<OrientedLine, 4>> sq;
            for (unsigned r = 0; r < 8 * n + 32; ++r) {
                Rat h = r == 0 ? h0 : h0 * (Rat(1) - make_rat(Int(1), pow2(r + 1)));
                if (!(h * h > cmax2)) continue;
                std::array<OrientedLine, 4> cand = square_lines(pts[i], h);
                bool clash = false;
                for (const OrientedLine& s : cand)
                    for (const OrientedLine& l : all)
                        if (s.same_line(l)) clash = true;
                if (!clash) {
                    sq = cand;
                    break;
                }
            }
            if (!sq) throw BuildFailure("no free square around point " + std::to_string(i + 1));
            for (const SignVector& cell : chambers) {
                std::vector<std::pair<OrientedLine, int>> cons;
                for (std::size_t t = 0; t < 4; ++t) cons.emplace_back(ls[t], cell[t]);
                if (block_near_pattern().count(cell)) {
                    cons.emplace_back((*sq)[0], -1);
                    cons.emplace_back((*sq)[1], 1);
                    cons.emplace_back((*sq)[2], -1);
                    cons.emplace_back((*sq)[3], 1);
                }
                auto w = region_witness(cons, all);
                if (!w)
                    throw BuildFailure("no witness for block " + std::to_string(i + 1) +
                                       " cell " + to_string(cell));
                Q.push_back(*w);
            }
        }
        for (int r = 0; r < 4; ++r) {
            const std::array<OrientedLine, 4>& ls = *placed[r < 2 ? 0 : 1];
            std::vector<std::pair<OrientedLine, int>> cons;
            for (std::size_t t = 0; t < 4; ++t) cons.emplace_back(ls[t], -1);
            cons.emplace_back(*final_line, r % 2 == 0 ? -1 : 1);
            auto w = region_witness(cons, all);
            if (!w) throw BuildFailure("no witness flanking the closing line");
            Q.push_back(*w);
        }
        return Q;
    }

    // The near witnesses of every referenced point must share its cell with
    // respect to the referencing pencil; their square sits inside the ball
    // the pencil was checked against, so this can only flag a builder bug.
    void check_covering_wedges(const std::vector<QPoint>& Q) const {
        for (std::size_t m = 0; m < n; ++m)
            for (int pr = 0; pr < 2; ++pr)
                for (int e = 0; e < 2; ++e) {
                    long sidx = f[m][std::size_t(2 * pr + e)];
                    if (sidx < 1) continue;
                    std::size_t j = std::size_t(sidx - 1);
                    const std::array<OrientedLine, 4>& mls = *placed[m];
                    const std::array<OrientedLine, 4>& jls = *placed[j];
                    Arrangement jblock({jls[0], jls[1], jls[2], jls[3]});
                    std::size_t rank = 0;
                    for (const SignVector& cell : enumerate_chambers(jblock)) {
                        if (block_near_pattern().count(cell)) {
                            const QPoint& q = Q[11 * j + rank];
                            for (int t = 0; t < 2; ++t) {
                                const OrientedLine& l = mls[std::size_t(2 * pr + t)];
                                if (l.side(q) != l.side(pts[j]))
                                    throw BuildFailure("witness escaped its wedge");
                            }
                        }
                        ++rank;
                    }
                }
    }
};

}  // namespace detail

inline HardPair build_hard_pair(unsigned k) {
    if (k < 1) throw std::invalid_argument("build_hard_pair: k must be at least 1");
    detail::HardPairBuilder b(k);
    return b.run();
}

// Checks a claimed instance: counts and shapes, the recorded construction
// and its designated cross ratio, the quadruple joins, the per-block cell
// structure with one witness per cell, the ball conditions tying witnesses
// to their points, the clearance of every other point's ball from some
// positively-signed block line, the flanking points, and the sign-vector
// set.  Collects every violation rather than stopping at the first.
inline HardPairReport verify_hard_pair(const HardPair& hp) {
    HardPairReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    const std::size_t n = hp.points.size();
    if (hp.k < 1) fail("k must be at least 1");
    if (n < 5) {
        fail("too few construction points");
        return rep;
    }
    bool shaped = true;
    auto shape = [&](bool ok, const char* msg) {
        if (!ok) {
            fail(msg);
            shaped = false;
        }
    };
    shape(hp.L.size() == 4 * n + 1, "line count is not 4n+1");
    shape(hp.Q.size() == 11 * n + 4, "witness count is not 11n+4");
    shape(hp.quadruples.size() == n, "quadruple count mismatch");
    shape(hp.epsilons.size() == n, "scale count mismatch");
    shape(hp.aux.size() == 16, "helper point count mismatch");
    shape(hp.config.size() == n, "construction size mismatch");
    if (!shaped) return rep;

    for (std::size_t i = 0; i < n; ++i)
        if (!(hp.epsilons[i] > 0)) {
            fail("scale " + std::to_string(i + 1) + " not positive");
            return rep;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (hp.points[i] == hp.points[j]) {
                fail("construction points collide");
                return rep;
            }

    if (auto cr = check_constructible(hp.config); !cr.ok)
        fail("recorded construction invalid: " + cr.reason);
    for (std::size_t i = 0; i < n; ++i) {
        if (hp.config.points[i].at_infinity()) {
            fail("recorded construction has a point at infinity");
            break;
        }
        auto [x, y] = hp.config.points[i].affine();
        if (!(x == hp.points[i].x && y == hp.points[i].y)) {
            fail("recorded construction disagrees with the points");
            break;
        }
    }
    if (hp.k + 1 <= 26) {
        try {
            ExtRat cr = cross_ratio(hp.config.points[4], hp.config.points[n - 1],
                                    hp.config.points[1], hp.config.points[0]);
            if (cr != Rat(squaring_target(hp.k + 1)))
                fail("designated cross ratio mismatch");
        } catch (const std::exception&) {
            fail("designated cross ratio undefined");
        }
    } else {
        fail("k out of supported range");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::array<long, 4>& q = hp.quadruples[i];
        if (i < 4) {
            std::array<long, 4> want{-(long(4 * i) + 3), -(long(4 * i) + 2),
                                     -(long(4 * i) + 1), -long(4 * i)};
            if (q != want) {
                fail("quadruple " + std::to_string(i + 1) + " does not name helper points");
                continue;
            }
        } else {
            if (!hp.config.steps[i]) {
                fail("recorded construction lacks a step for point " + std::to_string(i + 1));
                continue;
            }
            const ConstructionStep& st = *hp.config.steps[i];
            std::array<long, 4> want{long(st[0]) + 1, long(st[1]) + 1, long(st[2]) + 1,
                                     long(st[3]) + 1};
            if (q != want) {
                fail("quadruple " + std::to_string(i + 1) + " disagrees with the construction");
                continue;
            }
        }
        bool bad = false;
        for (long s : q) {
            if (s >= 1 && std::size_t(s) > i) {
                fail("quadruple " + std::to_string(i + 1) + " references a later point");
                bad = true;
            }
            if (!detail::signed_point(hp.points, hp.aux, s)) {
                fail("quadruple " + std::to_string(i + 1) + " out of range");
                bad = true;
            }
        }
        if (bad) continue;
        QPoint a1 = *detail::signed_point(hp.points, hp.aux, q[0]);
        QPoint a2 = *detail::signed_point(hp.points, hp.aux, q[1]);
        QPoint b1 = *detail::signed_point(hp.points, hp.aux, q[2]);
        QPoint b2 = *detail::signed_point(hp.points, hp.aux, q[3]);
        if (a1 == a2 || b1 == b2) {
            fail("quadruple " + std::to_string(i + 1) + " has a degenerate join");
            continue;
        }
        OrientedLine m1 = OrientedLine::through(a1, a2);
        OrientedLine m2 = OrientedLine::through(b1, b2);
        if (m1.same_line(m2)) {
            fail("quadruple " + std::to_string(i + 1) + " joins coincide");
            continue;
        }
        auto x = meet(m1, m2);
        if (!x || !(*x == hp.points[i]))
            fail("quadruple " + std::to_string(i + 1) + " joins miss their point");
    }

    if (!hp.L[4 * n].same_line(OrientedLine::through(hp.points[0], hp.points[1])))
        fail("closing line is not the join of the first two points");

    for (std::size_t i = 0; i < n; ++i) {
        std::string tag = "block " + std::to_string(i + 1) + ": ";
        std::array<OrientedLine, 4> ls{hp.L[4 * i], hp.L[4 * i + 1], hp.L[4 * i + 2],
                                       hp.L[4 * i + 3]};
        Arrangement block({ls[0], ls[1], ls[2], ls[3]});
        if (!is_simple(block)) fail(tag + "not simple");
        std::set<SignVector> chambers = enumerate_chambers(block);
        if (!block_pattern_ok(chambers)) fail(tag + "chamber pattern mismatch");
        bool inside = true;
        for (const OrientedLine& l : ls)
            if (l.side(hp.points[i]) != -1) inside = false;
        if (!inside) fail(tag + "designated point not in the central cell");
        Rat e2 = hp.epsilons[i] * hp.epsilons[i];
        std::set<SignVector> seen;
        bool online = false;
        for (std::size_t r = 0; r < 11; ++r) {
            const QPoint& q = hp.Q[11 * i + r];
            SignVector v(4);
            for (std::size_t t = 0; t < 4; ++t) {
                v[t] = ls[t].side(q);
                if (v[t] == 0) online = true;
            }
            seen.insert(v);
            if (block_near_pattern().count(v) && !(dist_squared(q, hp.points[i]) < e2))
                fail(tag + "witness outside its reference ball");
        }
        if (online) fail(tag + "witness on a block line");
        if (seen != chambers) fail(tag + "witnesses do not cover the cells one per cell");
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Rat e2 = hp.epsilons[j] * hp.epsilons[j];
            bool ok = false;
            for (std::size_t t = 0; t < 4 && !ok; ++t) {
                auto s = detail::ball_side(hp.L[4 * i + t], hp.points[j], e2);
                if (s && *s == 1) ok = true;
            }
            if (!ok)
                fail("block " + std::to_string(i + 1) + ": no cleared line for point " +
                     std::to_string(j + 1));
        }

    for (int r = 0; r < 4; ++r) {
        const QPoint& q = hp.Q[11 * n + std::size_t(r)];
        std::size_t blk = r < 2 ? 0 : 1;
        for (std::size_t t = 0; t < 4; ++t)
            if (hp.L[4 * blk + t].side(q) != -1) {
                fail("flanking point " + std::to_string(r + 1) +
                     " not in its central cell");
                break;
            }
        if (hp.L[4 * n].side(q) != (r % 2 == 0 ? -1 : 1))
            fail("flanking points do not straddle the closing line");
    }

    if (sign_vector_set(hp.Q, hp.L) != hp.S) fail("sign vector set mismatch");
    bool zero = false;
    for (const SignVector& v : hp.S)
        for (int s : v)
            if (s == 0) zero = true;
    if (zero) fail("sign vector with a zero entry");
    return rep;
}

}  // namespace gridspan
