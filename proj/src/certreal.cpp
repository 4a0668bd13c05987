#include "dirspec/certreal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>

namespace dirspec {

Ival::Ival(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw domain_error("interval endpoints out of order");
}

Ival Ival::operator*(const Ival& o) const {
    if (is_point() && o.is_point()) return Ival(lo_ * o.lo_);
    Rat a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    return Ival(std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d)));
}

Ival Ival::operator/(const Ival& o) const {
    if (o.contains_zero()) throw domain_error("interval division by zero");
    if (is_point() && o.is_point()) return Ival(lo_ / o.lo_);
    Rat a = lo_ / o.lo_, b = lo_ / o.hi_, c = hi_ / o.lo_, d = hi_ / o.hi_;
    return Ival(std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d)));
}

Ival Ival::sq() const {
    if (contains_zero()) {
        Rat m = std::max(Rat(-lo_), hi_);
        return Ival(Rat(0), m * m);
    }
    Rat a = lo_ * lo_, b = hi_ * hi_;
    return Ival(std::min(a, b), std::max(a, b));
}

Ival Ival::abs() const {
    if (sgn(lo_) >= 0) return *this;
    if (sgn(hi_) <= 0) return -*this;
    return Ival(Rat(0), std::max(Rat(-lo_), hi_));
}

std::optional<int> certified_sign(const Ival& v) {
    if (sgn(v.lo()) > 0) return 1;
    if (sgn(v.hi()) < 0) return -1;
    if (sgn(v.lo()) == 0 && sgn(v.hi()) == 0) return 0;
    return std::nullopt;
}

Tri certified_less(const Ival& a, const Ival& b) {
    if (a.hi() < b.lo()) return Tri::yes;
    if (a.lo() >= b.hi()) return Tri::no;
    return Tri::undecided;
}

Tri certified_leq(const Ival& a, const Ival& b) {
    if (a.hi() <= b.lo()) return Tri::yes;
    if (a.lo() > b.hi()) return Tri::no;
    return Tri::undecided;
}

namespace {

Rat rat_of_mpfr(mpfr_srcptr x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rat r(q);
    mpq_clear(q);
    return r;
}

// Applies a correctly rounded unary mpfr function to both endpoints
// with outward rounding.
template <typename F>
Ival mpfr_unary(const Ival& x, unsigned bits, F&& fn) {
    mpfr_t a, b;
    mpfr_init2(a, bits);
    mpfr_init2(b, bits);
    mpfr_set_q(a, x.lo().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b, x.hi().get_mpq_t(), MPFR_RNDU);
    fn(a, a, MPFR_RNDD);
    fn(b, b, MPFR_RNDU);
    Ival out(rat_of_mpfr(a), rat_of_mpfr(b));
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
}

}  // namespace

Ival sqrt_enclosure(const Rat& x, unsigned bits) { return sqrt_enclosure(Ival(x), bits); }

Ival sqrt_enclosure(const Ival& x, unsigned bits) {
    if (sgn(x.lo()) < 0) throw domain_error("sqrt of negative value");
    if (x.is_point() && sgn(x.lo()) == 0) return Ival(Rat(0));
    return mpfr_unary(x, bits, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sqrt(r, v, rnd); });
}

Ival cbrt_enclosure(const Ival& x, unsigned bits) {
    return mpfr_unary(x, bits, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_cbrt(r, v, rnd); });
}

Ival root4_enclosure(const Ival& x, unsigned bits) {
    return sqrt_enclosure(sqrt_enclosure(x, bits + 8), bits);
}

Ival log_enclosure(const Ival& x, unsigned bits) {
    if (sgn(x.lo()) <= 0) throw domain_error("log of non-positive value");
    return mpfr_unary(x, bits, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_log(r, v, rnd); });
}

Ival exp_enclosure(const Ival& x, unsigned bits) {
    return mpfr_unary(x, bits, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_exp(r, v, rnd); });
}

// cos/sin on an interval: endpoint images plus interior extrema. The
// extremum test uses the certified pi enclosure.
Ival cos_enclosure(const Ival& x, unsigned bits) {
    Ival e = mpfr_unary(x, bits, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_cos(r, v, rnd); });
    Ival lo_img = mpfr_unary(Ival(x.lo()), bits,
                             [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_cos(r, v, rnd); });
    Ival hi_img = mpfr_unary(Ival(x.hi()), bits,
                             [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_cos(r, v, rnd); });
    Rat lo = std::min(lo_img.lo(), hi_img.lo());
    Rat hi = std::max(lo_img.hi(), hi_img.hi());
    // does the interval contain a multiple of pi?
    Ival pi = pi_enclosure(bits);
    Rat span = x.width();
    if (span >= pi.lo()) return Ival(Rat(-1), Rat(1));
    // k*pi in [x.lo, x.hi] for k = floor(x.hi/pi_lo) candidates
    for (long k = static_cast<long>(to_double(x.lo() / pi.hi())) - 2;
         k <= static_cast<long>(to_double(x.hi() / pi.lo())) + 2; ++k) {
        Ival kpi = Rat(k) * pi;
        if (kpi.hi() >= x.lo() && kpi.lo() <= x.hi()) {
            if (k % 2 == 0) hi = Rat(1);
            else lo = Rat(-1);
        }
    }
    lo = std::max(lo, Rat(-1));
    hi = std::min(hi, Rat(1));
    (void)e;
    return Ival(lo, hi);
}

Ival sin_enclosure(const Ival& x, unsigned bits) {
    Ival half_pi = pi_enclosure(bits + 2);
    half_pi = Ival(half_pi.lo() / 2, half_pi.hi() / 2);
    return cos_enclosure(x - half_pi, bits);
}

Ival pi_enclosure(unsigned bits) {
    mpfr_t a, b;
    mpfr_init2(a, bits);
    mpfr_init2(b, bits);
    mpfr_const_pi(a, MPFR_RNDD);
    mpfr_const_pi(b, MPFR_RNDU);
    Ival out(rat_of_mpfr(a), rat_of_mpfr(b));
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
}

Ival pow_enclosure(const Rat& base, const Rat& p, unsigned bits) {
    if (sgn(p) < 0) throw domain_error("pow_enclosure: negative exponent");
    Rat b = ::abs(base);
    if (p.get_den() == 1 && p.get_num().fits_ulong_p()) {
        unsigned long e = p.get_num().get_ui();
        Rat r(1);
        Rat acc = b;
        while (e) {
            if (e & 1) r *= acc;
            e >>= 1;
            if (e) acc *= acc;
        }
        return Ival(r);
    }
    if (sgn(b) == 0) return Ival(Rat(0));
    // b^(num/den) = (b^num)^(1/den), both steps correctly rounded
    unsigned long num = p.get_num().get_ui();
    unsigned long den = p.get_den().get_ui();
    mpfr_t lo, hi;
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
    mpfr_set_q(lo, b.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, b.get_mpq_t(), MPFR_RNDU);
    mpfr_pow_ui(lo, lo, num, MPFR_RNDD);
    mpfr_pow_ui(hi, hi, num, MPFR_RNDU);
    mpfr_rootn_ui(lo, lo, den, MPFR_RNDD);
    mpfr_rootn_ui(hi, hi, den, MPFR_RNDU);
    Ival out(rat_of_mpfr(lo), rat_of_mpfr(hi));
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

namespace {

std::string decimal_rounded(const Rat& v, unsigned digits, mpfr_rnd_t rnd) {
    mpfr_t x;
    mpfr_init2(x, 64 + 4 * digits);
    mpfr_set_q(x, v.get_mpq_t(), rnd);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits),
                  x);  // default rounding in formatting is fine for display
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(x);
    return out;
}

}  // namespace

std::string to_decimal(const Rat& v, unsigned digits) {
    return decimal_rounded(v, digits, MPFR_RNDN);
}
std::string to_decimal_lower(const Rat& v, unsigned digits) {
    return decimal_rounded(v, digits, MPFR_RNDD);
}
std::string to_decimal_upper(const Rat& v, unsigned digits) {
    return decimal_rounded(v, digits, MPFR_RNDU);
}

Rat rat_from_string(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw domain_error("empty rational literal");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        size_t frac = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw domain_error("bad decimal literal: " + s);
        Int num(digits, 10);
        Int den(1);
        for (size_t i = 0; i < frac; ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(t, 10) != 0) throw domain_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

Rat dyadic_inside(const Rat& lo, const Rat& hi) {
    if (lo >= hi) throw domain_error("dyadic_inside: empty interval");
    Rat mid = (lo + hi) / 2;
    Rat w = hi - lo;
    // round mid to a dyadic with step below w/8
    Int two(2);
    Rat step(1);
    while (step * 8 >= w) step /= 2;
    Rat k = mid / step;
    Int ki;
    mpz_fdiv_q(ki.get_mpz_t(), k.get_num().get_mpz_t(), k.get_den().get_mpz_t());
    Rat cand = Rat(ki) * step;
    while (cand <= lo) cand += step;
    if (cand >= hi) cand = mid;  // fall back to the exact midpoint
    return cand;
}

double to_double(const Rat& v) { return v.get_d(); }

}  // namespace dirspec
