#pragma once

// Projective-plane kernel over exact rationals: homogeneous points and lines
// with a canonical integer representation, determinant brackets, cross ratios,
// and nonsingular projective maps.

#include <gridspan/numeric.hpp>

#include <array>
#include <optional>
#include <string>

namespace gridspan {

namespace detail {

// Scales an integer triple to coprime entries with the first nonzero entry
// positive.  The all-zero triple is left for the caller to reject.
inline void canonicalize_triple(Int& a, Int& b, Int& c) {
    Int g = gcd(gcd(abs(a), abs(b)), abs(c));
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    int lead = a != 0 ? a.sign() : b != 0 ? b.sign() : c.sign();
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
}

// Clears denominators of a rational triple into an integer triple.
inline std::array<Int, 3> clear_denominators(const Rat& x, const Rat& y, const Rat& z) {
    Int dx = denominator(x), dy = denominator(y), dz = denominator(z);
    Int l = dx / gcd(dx, dy) * dy;
    l = l / gcd(l, dz) * dz;
    return {numerator(x) * (l / dx), numerator(y) * (l / dy), numerator(z) * (l / dz)};
}

}  // namespace detail

class HomPoint {
public:
    HomPoint(Int x, Int y, Int z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
        if (x_ == 0 && y_ == 0 && z_ == 0)
            throw std::invalid_argument("HomPoint: zero triple");
        detail::canonicalize_triple(x_, y_, z_);
    }
    HomPoint(const Rat& x, const Rat& y, const Rat& z) : HomPoint(from_rat(x, y, z)) {}

    static HomPoint from_affine(const Rat& x, const Rat& y) { return HomPoint(x, y, Rat(1)); }

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    const Int& z() const { return z_; }

    bool at_infinity() const { return z_ == 0; }

    // Affine coordinates (x/z, y/z); only for points off the line at infinity.
    std::pair<Rat, Rat> affine() const {
        if (z_ == 0) throw std::domain_error("HomPoint::affine: point at infinity");
        return {make_rat(x_, z_), make_rat(y_, z_)};
    }

    friend bool operator==(const HomPoint&, const HomPoint&) = default;
    friend bool operator<(const HomPoint& p, const HomPoint& q) {
        if (p.x_ != q.x_) return p.x_ < q.x_;
        if (p.y_ != q.y_) return p.y_ < q.y_;
        return p.z_ < q.z_;
    }

    std::string str() const {
        return "(" + x_.str() + ":" + y_.str() + ":" + z_.str() + ")";
    }

private:
    static HomPoint from_rat(const Rat& x, const Rat& y, const Rat& z) {
        auto t = detail::clear_denominators(x, y, z);
        return HomPoint(std::move(t[0]), std::move(t[1]), std::move(t[2]));
    }

    Int x_, y_, z_;
};

// Line {p : a·p_x + b·p_y + c·p_z = 0}, stored like a canonical point triple.
class ProjLine {
public:
    ProjLine(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (a_ == 0 && b_ == 0 && c_ == 0)
            throw std::invalid_argument("ProjLine: zero triple");
        detail::canonicalize_triple(a_, b_, c_);
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    friend bool operator==(const ProjLine&, const ProjLine&) = default;

    std::string str() const {
        return "[" + a_.str() + ":" + b_.str() + ":" + c_.str() + "]";
    }

private:
    Int a_, b_, c_;
};

inline bool incident(const ProjLine& l, const HomPoint& p) {
    return l.a() * p.x() + l.b() * p.y() + l.c() * p.z() == 0;
}

inline ProjLine join(const HomPoint& p, const HomPoint& q) {
    if (p == q) throw std::invalid_argument("join: points coincide");
    return ProjLine(p.y() * q.z() - p.z() * q.y(),
                    p.z() * q.x() - p.x() * q.z(),
                    p.x() * q.y() - p.y() * q.x());
}

inline HomPoint meet(const ProjLine& l, const ProjLine& m) {
    if (l == m) throw std::invalid_argument("meet: lines coincide");
    return HomPoint(l.b() * m.c() - l.c() * m.b(),
                    l.c() * m.a() - l.a() * m.c(),
                    l.a() * m.b() - l.b() * m.a());
}

namespace detail {
inline Int idet3(const HomPoint& u, const HomPoint& v, const HomPoint& w) {
    return u.x() * (v.y() * w.z() - v.z() * w.y())
         - u.y() * (v.x() * w.z() - v.z() * w.x())
         + u.z() * (v.x() * w.y() - v.y() * w.x());
}
}  // namespace detail

// Determinant bracket over the canonical coordinate triples.
inline Rat det3(const HomPoint& u, const HomPoint& v, const HomPoint& w) {
    return Rat(detail::idet3(u, v, w));
}

inline bool collinear(const HomPoint& u, const HomPoint& v, const HomPoint& w) {
    return detail::idet3(u, v, w) == 0;
}

// Rational extended by a single point at infinity (for cross ratios).
class ExtRat {
public:
    ExtRat(Rat v) : value_(std::move(v)), infinite_(false) {}
    static ExtRat infinity() {
        ExtRat e{Rat(0)};
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    const Rat& value() const {
        if (infinite_) throw std::domain_error("ExtRat: infinite value");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator==(const ExtRat& a, const Rat& b) { return !a.infinite_ && a.value_ == b; }

    std::string str() const { return infinite_ ? "inf" : to_string(value_); }

private:
    Rat value_;
    bool infinite_;
};

namespace detail {
// Reference point off a given line: the first of e1, e2, e3, (1:1:1) works
// for every line, since no line contains all of e1, e2, e3 and a line through
// two of them misses (1:1:1) or the remaining one.
inline HomPoint off_line_reference(const ProjLine& l) {
    const std::array<HomPoint, 4> candidates = {HomPoint(Int(1), Int(0), Int(0)),
                                                HomPoint(Int(0), Int(1), Int(0)),
                                                HomPoint(Int(0), Int(0), Int(1)),
                                                HomPoint(Int(1), Int(1), Int(1))};
    for (const auto& p : candidates)
        if (!incident(l, p)) return p;
    throw std::logic_error("off_line_reference: no candidate off the line");
}
}  // namespace detail

// Cross ratio of four collinear points, via determinant brackets with a
// deterministically chosen reference point off their common line.
inline ExtRat cross_ratio(const HomPoint& a, const HomPoint& b, const HomPoint& c,
                          const HomPoint& d) {
    std::optional<ProjLine> line;
    const std::array<const HomPoint*, 4> pts = {&a, &b, &c, &d};
    for (int i = 0; i < 4 && !line; ++i)
        for (int j = i + 1; j < 4 && !line; ++j)
            if (*pts[i] != *pts[j]) line = join(*pts[i], *pts[j]);
    if (!line) throw std::invalid_argument("cross_ratio: all four points equal");
    for (const auto* p : pts)
        if (!incident(*line, *p))
            throw std::invalid_argument("cross_ratio: points not collinear");
    HomPoint p = detail::off_line_reference(*line);
    Int num = detail::idet3(p, a, c) * detail::idet3(p, b, d);
    Int den = detail::idet3(p, a, d) * detail::idet3(p, b, c);
    if (den == 0) {
        if (num == 0) throw std::domain_error("cross_ratio: indeterminate (0/0)");
        return ExtRat::infinity();
    }
    return ExtRat(make_rat(std::move(num), std::move(den)));
}

using Mat3 = std::array<std::array<Rat, 3>, 3>;

namespace detail {
inline Rat mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}
}  // namespace detail

class ProjectiveMap {
public:
    explicit ProjectiveMap(Mat3 m) : m_(std::move(m)), det_(detail::mat3_det(m_)) {
        if (det_ == 0) throw std::invalid_argument("ProjectiveMap: singular matrix");
    }

    static ProjectiveMap identity() {
        Mat3 m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = Rat(i == j ? 1 : 0);
        return ProjectiveMap(std::move(m));
    }

    const Mat3& matrix() const { return m_; }
    const Rat& det() const { return det_; }

    HomPoint apply(const HomPoint& p) const {
        std::array<Rat, 3> v;
        for (int i = 0; i < 3; ++i)
            v[i] = m_[i][0] * Rat(p.x()) + m_[i][1] * Rat(p.y()) + m_[i][2] * Rat(p.z());
        return HomPoint(v[0], v[1], v[2]);
    }

    // Image of a line under the map: coefficients transform by the inverse
    // transpose, so that incidence is preserved exactly.
    ProjLine apply(const ProjLine& l) const {
        Mat3 inv = inverse_matrix();
        std::array<Rat, 3> v;
        for (int j = 0; j < 3; ++j)
            v[j] = inv[0][j] * Rat(l.a()) + inv[1][j] * Rat(l.b()) + inv[2][j] * Rat(l.c());
        auto t = detail::clear_denominators(v[0], v[1], v[2]);
        return ProjLine(std::move(t[0]), std::move(t[1]), std::move(t[2]));
    }

    ProjectiveMap inverse() const { return ProjectiveMap(inverse_matrix()); }

    friend ProjectiveMap operator*(const ProjectiveMap& f, const ProjectiveMap& g) {
        Mat3 m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rat s(0);
                for (int k = 0; k < 3; ++k) s += f.m_[i][k] * g.m_[k][j];
                m[i][j] = s;
            }
        return ProjectiveMap(std::move(m));
    }

private:
    Mat3 inverse_matrix() const {
        Mat3 adj;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
                int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
                adj[j][i] = (m_[i1][j1] * m_[i2][j2] - m_[i1][j2] * m_[i2][j1]) / det_;
            }
        return adj;
    }

    Mat3 m_;
    Rat det_;
};

// The unique (up to scale) projective map sending one general-position
// quadruple to another; verified by re-application.
inline ProjectiveMap map_from_4_points(const std::array<HomPoint, 4>& src,
                                       const std::array<HomPoint, 4>& dst) {
    auto basis = [](const std::array<HomPoint, 4>& q, const char* which) -> Mat3 {
        Int d = detail::idet3(q[0], q[1], q[2]);
        if (d == 0)
            throw std::invalid_argument(std::string("map_from_4_points: collinear triple (0,1,2) in ") + which);
        // Solve q3 = λ0·q0 + λ1·q1 + λ2·q2 by Cramer's rule.
        std::array<Rat, 3> lam = {make_rat(detail::idet3(q[3], q[1], q[2]), d),
                                  make_rat(detail::idet3(q[0], q[3], q[2]), d),
                                  make_rat(detail::idet3(q[0], q[1], q[3]), d)};
        const char* triples[3] = {"(1,2,3)", "(0,2,3)", "(0,1,3)"};
        for (int i = 0; i < 3; ++i)
            if (lam[i] == 0)
                throw std::invalid_argument(std::string("map_from_4_points: collinear triple ") +
                                            triples[i] + " in " + which);
        Mat3 m;
        for (int i = 0; i < 3; ++i) {
            m[0][i] = lam[i] * Rat(q[i].x());
            m[1][i] = lam[i] * Rat(q[i].y());
            m[2][i] = lam[i] * Rat(q[i].z());
        }
        return m;
    };
    ProjectiveMap s(basis(src, "source"));
    ProjectiveMap t(basis(dst, "target"));
    ProjectiveMap result = t * s.inverse();
    for (int i = 0; i < 4; ++i)
        if (result.apply(src[i]) != dst[i])
            throw std::logic_error("map_from_4_points: verification failed");
    return result;
}

}  // namespace gridspan
