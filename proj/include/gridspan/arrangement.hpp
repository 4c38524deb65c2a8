#pragma once

// Oriented line arrangements over exact rationals: canonical line
// representation, sign vectors, exact feasibility of sign systems via
// two-variable elimination, chamber enumeration, simplicity, and the span
// of the intersection-point set.

#include <gridspan/numeric.hpp>
#include <gridspan/point.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridspan {

// A line {z : w·z = c} with a designated negative side.  The stored triple
// (wx, wy, c) is canonical: coprime integers with the first nonzero w entry
// positive.  The flip flag records whether the negative side {z : W·z < C}
// uses the negated triple, so equal point sets share one triple and the
// orientation stays explicit.
class OrientedLine {
public:
    // Line a·x + b·y = c with negative side {a·x + b·y < c}.
    static OrientedLine from_coeffs(const Rat& a, const Rat& b, const Rat& c) {
        Int da = denominator(a), db = denominator(b), dc = denominator(c);
        Int l = da / gcd(da, db) * db;
        l = l / gcd(l, dc) * dc;
        return OrientedLine(numerator(a) * (l / da), numerator(b) * (l / db),
                            numerator(c) * (l / dc));
    }

    // Line through two distinct points, left normal orientation.
    static OrientedLine through(const QPoint& p, const QPoint& q) {
        if (p == q) throw std::invalid_argument("OrientedLine::through: points coincide");
        QPoint d = q - p;
        return from_coeffs(-d.y, d.x, -d.y * p.x + d.x * p.y);
    }

    // Line through p and q oriented so that neg lies on the negative side.
    static OrientedLine through_with_negative(const QPoint& p, const QPoint& q,
                                              const QPoint& neg) {
        OrientedLine t = through(p, q);
        int s = t.side(neg);
        if (s == 0)
            throw std::invalid_argument("OrientedLine::through_with_negative: witness on the line");
        return s < 0 ? t : t.opposite();
    }

    const Int& wx() const { return wx_; }
    const Int& wy() const { return wy_; }
    const Int& c() const { return c_; }
    bool flipped() const { return flip_; }

    // Oriented coefficients (W, C) with negative side {z : W·z < C}.
    Int wx_oriented() const { return flip_ ? -wx_ : wx_; }
    Int wy_oriented() const { return flip_ ? -wy_ : wy_; }
    Int c_oriented() const { return flip_ ? -c_ : c_; }

    // W·p − C; the sign-vector entry at p is the sign of this value.
    Rat eval(const QPoint& p) const {
        Rat v = Rat(wx_) * p.x + Rat(wy_) * p.y - Rat(c_);
        return flip_ ? -v : v;
    }

    int side(const QPoint& p) const { return sign(eval(p)); }

    bool contains(const QPoint& p) const {
        return Rat(wx_) * p.x + Rat(wy_) * p.y == Rat(c_);
    }

    OrientedLine opposite() const {
        OrientedLine o = *this;
        o.flip_ = !o.flip_;
        return o;
    }

    // Equal point sets, regardless of orientation.
    bool same_line(const OrientedLine& o) const {
        return wx_ == o.wx_ && wy_ == o.wy_ && c_ == o.c_;
    }

    friend bool operator==(const OrientedLine&, const OrientedLine&) = default;
    friend bool operator<(const OrientedLine& a, const OrientedLine& b) {
        if (a.wx_ != b.wx_) return a.wx_ < b.wx_;
        if (a.wy_ != b.wy_) return a.wy_ < b.wy_;
        if (a.c_ != b.c_) return a.c_ < b.c_;
        return a.flip_ < b.flip_;
    }

    std::string str() const {
        std::string s = "{" + wx_oriented().str() + "x + " + wy_oriented().str() +
                        "y < " + c_oriented().str() + "}";
        return s;
    }

private:
    OrientedLine(Int a, Int b, Int c) : wx_(std::move(a)), wy_(std::move(b)), c_(std::move(c)) {
        if (wx_ == 0 && wy_ == 0)
            throw std::invalid_argument("OrientedLine: normal vector is zero");
        Int g = gcd(gcd(abs(wx_), abs(wy_)), abs(c_));
        if (g > 1) {
            wx_ /= g;
            wy_ /= g;
            c_ /= g;
        }
        if ((wx_ != 0 ? wx_.sign() : wy_.sign()) < 0) {
            wx_ = -wx_;
            wy_ = -wy_;
            c_ = -c_;
            flip_ = true;
        }
    }

    Int wx_, wy_, c_;
    bool flip_ = false;
};

// Intersection point of two lines; empty when parallel or equal.
inline std::optional<QPoint> meet(const OrientedLine& a, const OrientedLine& b) {
    Int det = a.wx() * b.wy() - a.wy() * b.wx();
    if (det == 0) return std::nullopt;
    return QPoint{make_rat(a.c() * b.wy() - b.c() * a.wy(), det),
                  make_rat(a.wx() * b.c() - b.wx() * a.c(), det)};
}

// Ordered tuple of pairwise distinct lines (distinct as point sets; two
// orientations of one line do not make two lines).
class Arrangement {
public:
    Arrangement() = default;
    explicit Arrangement(std::vector<OrientedLine> lines) : lines_(std::move(lines)) {
        for (std::size_t i = 0; i < lines_.size(); ++i)
            for (std::size_t j = i + 1; j < lines_.size(); ++j)
                if (lines_[i].same_line(lines_[j]))
                    throw std::invalid_argument("Arrangement: lines " + std::to_string(i) +
                                                " and " + std::to_string(j) +
                                                " coincide as point sets");
    }

    const std::vector<OrientedLine>& lines() const { return lines_; }
    std::size_t size() const { return lines_.size(); }
    const OrientedLine& operator[](std::size_t i) const { return lines_[i]; }

private:
    std::vector<OrientedLine> lines_;
};

// One entry per line: -1, 0, or +1.
using SignVector = std::vector<int>;

inline SignVector sign_vector(const QPoint& p, const Arrangement& L) {
    SignVector s;
    s.reserve(L.size());
    for (const OrientedLine& l : L.lines()) s.push_back(l.side(p));
    return s;
}

inline std::set<SignVector> sign_vector_set(const std::vector<QPoint>& ps, const Arrangement& L) {
    std::set<SignVector> out;
    for (const QPoint& p : ps) out.insert(sign_vector(p, L));
    return out;
}

inline std::string to_string(const SignVector& s) {
    std::string out;
    out.reserve(s.size());
    for (int v : s) out.push_back(v < 0 ? '-' : v > 0 ? '+' : '0');
    return out;
}

namespace detail {

// Strict inequality a·x + b·y < c.
struct StrictLE {
    Rat a, b, c;
};

// Value in the open interval (lo, hi), either bound optional, avoiding the
// finitely many listed values.  The interval must be nonempty.
inline Rat pick_in_interval(const std::optional<Rat>& lo, const std::optional<Rat>& hi,
                            const std::vector<Rat>& bad) {
    auto is_bad = [&](const Rat& v) {
        for (const Rat& b : bad)
            if (v == b) return true;
        return false;
    };
    if (lo && hi) {
        Rat w = *hi - *lo;
        for (unsigned k = 1;; ++k) {
            Rat v = *lo + w / pow2(k);
            if (!is_bad(v)) return v;
        }
    }
    Rat step = 1;
    for (;;) {
        Rat v = lo ? *lo + step : hi ? *hi - step : step - 1;
        if (!is_bad(v)) return v;
        step /= 2;
    }
}

// Exact witness for a system of strict halfplanes: eliminate x against every
// lower/upper pair, solve the one-variable system in y, back-substitute.
inline std::optional<QPoint> strict_system_witness(const std::vector<StrictLE>& cs) {
    std::vector<const StrictLE*> low, upp;
    std::vector<std::pair<Rat, Rat>> ycs;  // g·y < h
    for (const StrictLE& c : cs) {
        int s = sign(c.a);
        if (s > 0)
            upp.push_back(&c);
        else if (s < 0)
            low.push_back(&c);
        else
            ycs.emplace_back(c.b, c.c);
    }
    for (const StrictLE* l : low)
        for (const StrictLE* u : upp)
            ycs.emplace_back(u->a * l->b - l->a * u->b, u->a * l->c - l->a * u->c);

    std::optional<Rat> ylo, yhi;
    for (const auto& [g, h] : ycs) {
        int s = sign(g);
        if (s == 0) {
            if (h <= 0) return std::nullopt;
        } else if (s > 0) {
            Rat b = h / g;
            if (!yhi || b < *yhi) yhi = b;
        } else {
            Rat b = h / g;
            if (!ylo || b > *ylo) ylo = b;
        }
    }
    if (ylo && yhi && !(*ylo < *yhi)) return std::nullopt;
    Rat y = pick_in_interval(ylo, yhi, {});

    std::optional<Rat> xlo, xhi;
    for (const StrictLE* l : low) {
        Rat b = (l->c - l->b * y) / l->a;
        if (!xlo || b > *xlo) xlo = b;
    }
    for (const StrictLE* u : upp) {
        Rat b = (u->c - u->b * y) / u->a;
        if (!xhi || b < *xhi) xhi = b;
    }
    if (xlo && xhi && !(*xlo < *xhi))
        throw std::logic_error("strict_system_witness: elimination inconsistency");
    Rat x = pick_in_interval(xlo, xhi, {});
    return QPoint{x, y};
}

inline void check_sign_entries(const SignVector& s, const Arrangement& L) {
    if (s.size() != L.size())
        throw std::invalid_argument("sign vector length does not match arrangement size");
    for (int v : s)
        if (v < -1 || v > 1)
            throw std::invalid_argument("sign vector entries must be -1, 0, or +1");
}

}  // namespace detail

// Point strictly on the required side (-1 or +1) of every listed line and on
// none of the avoid lines; empty when the open region is empty.  Decided
// exactly by elimination.
inline std::optional<QPoint> region_witness(
    const std::vector<std::pair<OrientedLine, int>>& constraints,
    const std::vector<OrientedLine>& avoid = {}) {
    std::vector<detail::StrictLE> cs;
    cs.reserve(constraints.size());
    for (const auto& [l, sgn] : constraints) {
        if (sgn != -1 && sgn != 1)
            throw std::invalid_argument("region_witness: constraint signs must be -1 or +1");
        Rat a = Rat(l.wx_oriented()), b = Rat(l.wy_oriented()), c = Rat(l.c_oriented());
        if (sgn < 0)
            cs.push_back({a, b, c});
        else
            cs.push_back({-a, -b, -c});
    }
    auto q = detail::strict_system_witness(cs);
    if (!q) return std::nullopt;

    auto off_avoid = [&](const QPoint& p) {
        for (const OrientedLine& a : avoid)
            if (a.contains(p)) return false;
        return true;
    };
    if (!off_avoid(*q)) {
        // Slide along a direction parallel to no avoid line; each avoid line
        // then excludes at most one step length, and every strict constraint
        // holds up to its slack.
        auto parallel_to_some = [&](const Int& t) {
            for (const OrientedLine& a : avoid)
                if (a.wx() + t * a.wy() == 0) return true;
            return false;
        };
        Int ty = 0;
        while (parallel_to_some(ty)) ++ty;
        QPoint d{Rat(1), Rat(ty)};
        std::optional<Rat> smax;
        for (const detail::StrictLE& c : cs) {
            Rat v = c.a * d.x + c.b * d.y;
            if (v <= 0) continue;
            Rat slack = (c.c - c.a * q->x - c.b * q->y) / v;
            if (!smax || slack < *smax) smax = slack;
        }
        Rat step = smax ? *smax / 2 : Rat(1);
        QPoint p = *q + step * d;
        while (!off_avoid(p)) {
            step /= 2;
            p = *q + step * d;
        }
        q = p;
    }
    for (const auto& [l, sgn] : constraints)
        if (l.side(*q) != sgn)
            throw std::logic_error("region_witness: witness fails a constraint");
    return q;
}

// Point with sign_vector(p, L) == s, additionally avoiding the given lines,
// or empty when no such point exists.  Exact: equality entries pin the
// witness to a line or a single point; the strict remainder is decided by
// elimination.
inline std::optional<QPoint> sv_witness(const SignVector& s, const Arrangement& L,
                                        const std::vector<OrientedLine>& avoid = {}) {
    detail::check_sign_entries(s, L);
    const auto& lines = L.lines();
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 0) zeros.push_back(i);

    auto off_avoid = [&](const QPoint& p) {
        for (const OrientedLine& a : avoid)
            if (a.contains(p)) return false;
        return true;
    };

    if (zeros.size() >= 2) {
        // Two distinct lines pin the witness to at most one point.
        std::optional<QPoint> p;
        for (std::size_t k = 1; k < zeros.size() && !p; ++k)
            p = meet(lines[zeros[0]], lines[zeros[k]]);
        if (!p) return std::nullopt;  // distinct parallel lines share no point
        if (sign_vector(*p, L) != s || !off_avoid(*p)) return std::nullopt;
        return p;
    }

    if (zeros.size() == 1) {
        const OrientedLine& z = lines[zeros[0]];
        QPoint p0 = z.wx() != 0 ? QPoint{make_rat(z.c(), z.wx()), Rat(0)}
                                : QPoint{Rat(0), make_rat(z.c(), z.wy())};
        QPoint d{Rat(-z.wy()), Rat(z.wx())};
        std::optional<Rat> tlo, thi;
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (j == zeros[0]) continue;
            Rat alpha = Rat(lines[j].wx_oriented()) * d.x + Rat(lines[j].wy_oriented()) * d.y;
            Rat beta = lines[j].eval(p0);
            if (alpha == 0) {
                if (sign(beta) != s[j]) return std::nullopt;
                continue;
            }
            // sign(alpha·t + beta) = s[j] bounds t on one side of -beta/alpha.
            Rat bound = -beta / alpha;
            bool lower = (s[j] > 0) == (alpha > 0);
            if (lower) {
                if (!tlo || bound > *tlo) tlo = bound;
            } else {
                if (!thi || bound < *thi) thi = bound;
            }
        }
        if (tlo && thi && !(*tlo < *thi)) return std::nullopt;
        std::vector<Rat> bad;
        for (const OrientedLine& a : avoid) {
            if (a.same_line(z)) return std::nullopt;
            Rat gamma = Rat(a.wx()) * d.x + Rat(a.wy()) * d.y;
            if (gamma == 0) continue;  // parallel to the pinned line, never hit
            Rat hit = (Rat(a.c()) - Rat(a.wx()) * p0.x - Rat(a.wy()) * p0.y) / gamma;
            bad.push_back(hit);
        }
        Rat t = detail::pick_in_interval(tlo, thi, bad);
        QPoint p = p0 + t * d;
        if (sign_vector(p, L) != s)
            throw std::logic_error("sv_witness: pinned-line witness fails its sign vector");
        return p;
    }

    std::vector<std::pair<OrientedLine, int>> cons;
    cons.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) cons.emplace_back(lines[i], s[i]);
    auto q = region_witness(cons, avoid);
    if (q && sign_vector(*q, L) != s)
        throw std::logic_error("sv_witness: open-cell witness fails its sign vector");
    return q;
}

// Membership of s in the sign-vector set D(L), decided exactly.
inline bool sv_feasible(const SignVector& s, const Arrangement& L) {
    return sv_witness(s, L).has_value();
}

// All sign vectors of cells: {-,+}^n ∩ D(L).  Each full-support feasible
// vector describes one open convex region avoiding every line, so these
// correspond one-to-one to the connected components off the lines.
inline std::set<SignVector> enumerate_chambers(const Arrangement& L) {
    if (L.size() > 12)
        throw std::invalid_argument("enumerate_chambers: supported up to 12 lines");
    std::set<SignVector> out;
    SignVector s(L.size(), 0);
    for (std::size_t mask = 0; mask < (std::size_t(1) << L.size()); ++mask) {
        for (std::size_t i = 0; i < L.size(); ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
        if (sv_feasible(s, L)) out.insert(s);
    }
    return out;
}

// Every two lines cross and no intersection point lies on a third line.
inline bool is_simple(const Arrangement& L) {
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            auto p = meet(L[i], L[j]);
            if (!p) return false;
            for (std::size_t k = 0; k < L.size(); ++k)
                if (k != i && k != j && L[k].contains(*p)) return false;
        }
    return true;
}

// I(L): all points on at least two lines, deduplicated, sorted.
inline std::vector<QPoint> intersection_points(const Arrangement& L) {
    std::set<QPoint> pts;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j)
            if (auto p = meet(L[i], L[j])) pts.insert(*p);
    return std::vector<QPoint>(pts.begin(), pts.end());
}

// Squared span: (largest / smallest pairwise distance over I(L)) squared,
// exactly.  Needs at least two intersection points.
inline Rat span_squared(const Arrangement& L) {
    std::vector<QPoint> pts = intersection_points(L);
    if (pts.size() < 2)
        throw std::invalid_argument("span_squared: fewer than two intersection points");
    Rat maxd2, mind2;
    bool first = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rat d2 = dist_squared(pts[i], pts[j]);
            if (first) {
                maxd2 = mind2 = d2;
                first = false;
            } else if (d2 > maxd2) {
                maxd2 = d2;
            } else if (d2 < mind2) {
                mind2 = d2;
            }
        }
    return maxd2 / mind2;
}

struct GridSpanReport {
    bool ok = false;
    Rat span2;
    Rat bound;
    Rat margin;  // bound - span2, nonnegative exactly when ok
    explicit operator bool() const { return ok; }
};

// For lines expressible with integer coefficients in {-k..k}, the squared
// span is at most 2^9·k^12.  Verifies the coefficient precondition on the
// canonical triples (any integer form is a multiple of the canonical one).
inline GridSpanReport grid_span_check(const Arrangement& L, unsigned k) {
    if (k == 0) throw std::invalid_argument("grid_span_check: k must be positive");
    Int kk(k);
    for (std::size_t i = 0; i < L.size(); ++i) {
        const OrientedLine& l = L[i];
        if (abs(l.wx()) > kk || abs(l.wy()) > kk || abs(l.c()) > kk)
            throw std::invalid_argument("grid_span_check: line " + std::to_string(i) +
                                        " has a coefficient outside {-" + std::to_string(k) +
                                        ".." + std::to_string(k) + "}");
    }
    GridSpanReport r;
    r.span2 = span_squared(L);
    r.bound = Rat(pow2(9) * boost::multiprecision::pow(kk, 12));
    r.margin = r.bound - r.span2;
    r.ok = r.span2 <= r.bound;
    return r;
}

}  // namespace gridspan
