#ifndef DIRSPEC_CERTREAL_HPP
#define DIRSPEC_CERTREAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dirspec {

using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a sign query stays undecided at the precision cap.
struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Tri { yes, no, undecided };

// Closed interval with exact rational endpoints. Field operations are
// exact; only radicals and transcendentals widen the interval, at a
// caller-chosen working precision in bits.
class Ival {
  public:
    Ival() : lo_(0), hi_(0) {}
    explicit Ival(const Rat& v) : lo_(v), hi_(v) {}
    Ival(Rat lo, Rat hi);
    static Ival point(const Rat& v) { return Ival(v); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool is_point() const { return lo_ == hi_; }
    Rat mid() const { return (lo_ + hi_) / 2; }
    Rat width() const { return hi_ - lo_; }
    bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }

    Ival operator-() const { return Ival(-hi_, -lo_); }
    Ival operator+(const Ival& o) const { return Ival(lo_ + o.lo_, hi_ + o.hi_); }
    Ival operator-(const Ival& o) const { return Ival(lo_ - o.hi_, hi_ - o.lo_); }
    Ival operator*(const Ival& o) const;
    Ival operator/(const Ival& o) const;  // throws if o contains 0
    Ival& operator+=(const Ival& o) { *this = *this + o; return *this; }
    Ival& operator-=(const Ival& o) { *this = *this - o; return *this; }
    Ival& operator*=(const Ival& o) { *this = *this * o; return *this; }

    Ival sq() const;
    Ival abs() const;

  private:
    Rat lo_, hi_;
};

inline Ival operator+(const Rat& a, const Ival& b) { return Ival(a) + b; }
inline Ival operator-(const Rat& a, const Ival& b) { return Ival(a) - b; }
inline Ival operator*(const Rat& a, const Ival& b) { return Ival(a) * b; }

// -1 / 0 / +1 when certain, nullopt when the interval straddles zero.
std::optional<int> certified_sign(const Ival& v);

// a < b certified from the enclosures alone.
Tri certified_less(const Ival& a, const Ival& b);
Tri certified_leq(const Ival& a, const Ival& b);

// Enclosures of radicals and transcendentals. `bits` is the working
// precision; the result interval has width about 2^-bits relative.
Ival sqrt_enclosure(const Rat& x, unsigned bits);   // x >= 0
Ival sqrt_enclosure(const Ival& x, unsigned bits);  // x.lo >= 0
Ival cbrt_enclosure(const Ival& x, unsigned bits);
Ival root4_enclosure(const Ival& x, unsigned bits);
Ival log_enclosure(const Ival& x, unsigned bits);  // x.lo > 0
Ival exp_enclosure(const Ival& x, unsigned bits);
Ival cos_enclosure(const Ival& x, unsigned bits);
Ival sin_enclosure(const Ival& x, unsigned bits);
Ival pi_enclosure(unsigned bits);
// |u|^p for rational p >= 0, exact fast path for integer p.
Ival pow_enclosure(const Rat& base, const Rat& p, unsigned bits);

// Escalating sign query: recomputes `f(bits)` at doubling precision
// until the sign is certain or `cap_bits` is exceeded.
template <typename F>
std::optional<int> sign_with_escalation(F&& f, unsigned start_bits, unsigned cap_bits) {
    for (unsigned bits = start_bits;; bits *= 2) {
        if (auto s = certified_sign(f(bits))) return s;
        if (bits >= cap_bits) return std::nullopt;
    }
}

std::string to_decimal(const Rat& v, unsigned digits = 30);
std::string to_decimal_lower(const Rat& v, unsigned digits);
std::string to_decimal_upper(const Rat& v, unsigned digits);

Rat rat_from_string(const std::string& s);  // "3/5", "0.305", "-7"

// Dyadic rational near the midpoint of [lo, hi], strictly inside.
Rat dyadic_inside(const Rat& lo, const Rat& hi);

double to_double(const Rat& v);

}  // namespace dirspec

#endif
