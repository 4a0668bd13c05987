#ifndef DIRSPEC_NORMS_HPP
#define DIRSPEC_NORMS_HPP

#include <array>
#include <optional>
#include <vector>

#include "dirspec/certreal.hpp"

namespace dirspec {

struct Pair2 {
    Rat x, y;
    Pair2() : x(0), y(0) {}
    Pair2(Rat a, Rat b) : x(std::move(a)), y(std::move(b)) {}
    Pair2 operator-() const { return Pair2(-x, -y); }
    Pair2 operator+(const Pair2& o) const { return Pair2(x + o.x, y + o.y); }
    Pair2 operator-(const Pair2& o) const { return Pair2(x - o.x, y - o.y); }
    Pair2 scaled(const Rat& t) const { return Pair2(x * t, y * t); }
    bool operator==(const Pair2& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

inline Rat cross(const Pair2& a, const Pair2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pair2& a, const Pair2& b) { return a.x * b.x + a.y * b.y; }

enum class NormKind { euclidean, maximum, p_norm, ellipse, polygon };

struct NormSpec {
    NormKind kind = NormKind::euclidean;
    Rat p;                        // p_norm only, p >= 1
    Rat a, c;                     // ellipse only, a,c > 0
    std::vector<Pair2> vertices;  // polygon only, origin-symmetric, convex position

    static NormSpec euclidean() { return NormSpec{}; }
    static NormSpec maximum();
    static NormSpec pnorm(Rat p);
    static NormSpec ellipse(Rat a, Rat c);
    static NormSpec polygon(std::vector<Pair2> vs);

    void validate() const;  // throws domain_error on a malformed spec
    bool evaluates_exactly() const { return kind != NormKind::p_norm; }
};

// ||u||^2 when exactly representable (euclidean, ellipse, maximum,
// polygon), otherwise nullopt.
std::optional<Rat> norm_sq_exact(const NormSpec& n, const Pair2& u);

// Certified enclosure of ||u||.
Ival norm_eval(const NormSpec& n, const Pair2& u, unsigned bits);

// sqrt(a u1^2 + c u2^2); the squared value is the exact rational
// a u1^2 + c u2^2.
Ival ellipse_eval(const Rat& a, const Rat& c, const Pair2& u, unsigned bits);
Rat ellipse_sq(const Rat& a, const Rat& c, const Pair2& u);

// Gauge of an origin-symmetric convex polygon, exact.
Rat polygon_gauge(const std::vector<Pair2>& vertices, const Pair2& u);

// Best-ellipsoid-norm data: sqrt(a u1^2 + c u2^2) <= ||u|| <= D * same.
// Exact rational values are kept whenever representable (all presets
// except the p-norm rows, and every fitted result); enclosures are
// recomputable at any precision.
struct EllipsoidFit {
    NormSpec source;
    std::optional<Rat> a_q, c_q;  // exact a, c when rational
    std::optional<Rat> D_sq_q;    // exact D^2 when rational
    Ival a, c, D;                 // enclosures (points when exact)

    Ival m(unsigned bits) const;               // (4ac/(4D^2-1))^(1/4)
    Ival unit_ball_area(unsigned bits) const;  // 2*pi/sqrt(4ac)
    bool exact() const { return a_q && c_q && D_sq_q; }
};

// M = (4ac/(4D^2-1))^(1/4); domain error if D < 1/2.
Ival m_value(const Ival& a, const Ival& c, const Ival& D, unsigned bits);
Ival m_value_q(const Rat& a, const Rat& c, const Rat& D_sq, unsigned bits);

// gamma for the ellipse norm sqrt(a x^2 + c y^2): (4ac/3)^(1/4).
Ival gamma_ellipse(const Rat& a, const Rat& c, unsigned bits);

// Closed-form best ellipsoid parameters for the table norms.
// Throws for polygon (use fit_best_ellipse).
EllipsoidFit preset_fit(const NormSpec& n, unsigned bits);

// Grid/coordinate-descent fit for an arbitrary norm. The sandwich is
// validated on `samples` boundary directions and D carries a 1.001
// safety factor, so the returned M is a conservative lower bound.
EllipsoidFit fit_best_ellipse(const NormSpec& n, unsigned samples = 4096,
                              unsigned rounds = 3, unsigned bits = 96);

// lambda = 1/sqrt(a); fit' = (1, c/a, D). Best approximation sequences
// are invariant under the rescale, so downstream code may assume a = 1.
struct NormalizedFit {
    Ival lambda;
    std::optional<Rat> lambda_sq_q;  // 1/a when a rational
    EllipsoidFit fit;
};
NormalizedFit normalize_a1(const EllipsoidFit& f, unsigned bits);

}  // namespace dirspec

#endif
