#pragma once

// Exact rationals, rational phases and high-precision complex scalars.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permorb {

using Rational = boost::rational<std::int64_t>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecision = 60;
inline constexpr unsigned kMinPrecision = 50;

/// Decimal digits used for every Real created from now on.
inline unsigned working_precision() { return Real::default_precision(); }

/// Sets the working precision for the lifetime of the guard and restores the
/// previous value on exit. Precision is process-wide.
class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned digits) : saved_(Real::default_precision()) {
        if (digits < kMinPrecision)
            throw std::invalid_argument("working precision must be at least " +
                                        std::to_string(kMinPrecision) + " digits");
        Real::default_precision(digits);
    }
    ~WorkingPrecision() { Real::default_precision(saved_); }
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    unsigned saved_;
};

// ---------------------------------------------------------------------------
// Rational helpers

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Parses "p/q" or "n". Sets *was_reduced to false when the input was not in
/// lowest terms (the returned value is always reduced).
inline Rational parse_rational(std::string_view text, bool* was_reduced = nullptr) {
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(std::string(s), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        if (used != s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    std::int64_t num = 0, den = 1;
    if (slash == std::string_view::npos) {
        num = parse_int(text);
    } else {
        num = parse_int(text.substr(0, slash));
        den = parse_int(text.substr(slash + 1));
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    if (was_reduced) *was_reduced = (q.numerator() == num && q.denominator() == den);
    return q;
}

/// Floor of a rational as an integer.
inline std::int64_t floor_of(const Rational& q) {
    auto n = q.numerator(), d = q.denominator();
    auto f = n / d;
    if ((n % d != 0) && (n < 0)) --f;
    return f;
}

/// q mod 1 in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

// ---------------------------------------------------------------------------
// Phase: a rational number of full turns, canonicalized to [0, 1).

class Phase {
public:
    Phase() = default;
    explicit Phase(const Rational& turns) : value_(frac(turns)) {}

    const Rational& value() const { return value_; }

    friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value_ + b.value_); }
    friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.value_ - b.value_); }
    Phase operator-() const { return Phase(-value_); }
    friend Phase operator*(std::int64_t n, const Phase& p) { return Phase(p.value_ * n); }
    Phase& operator+=(const Phase& o) { return *this = *this + o; }
    friend bool operator==(const Phase&, const Phase&) = default;

private:
    Rational value_{0};
};

inline Phase make_phase(std::int64_t numer, std::int64_t denom) {
    if (denom == 0) throw std::invalid_argument("make_phase: zero denominator");
    return Phase(Rational(numer, denom));
}

inline std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << to_string(p.value()); }

// ---------------------------------------------------------------------------
// ComplexHP

struct ComplexHP {
    Real re{0};
    Real im{0};

    ComplexHP() = default;
    ComplexHP(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}
    ComplexHP(int r) : re(r), im(0) {}

    unsigned precision() const { return re.precision(); }

    ComplexHP& operator+=(const ComplexHP& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexHP& operator-=(const ComplexHP& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexHP& operator*=(const ComplexHP& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    ComplexHP& operator*=(const Real& s) {
        re *= s;
        im *= s;
        return *this;
    }
    ComplexHP& operator/=(const ComplexHP& o) {
        Real den = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / den;
        im = (im * o.re - re * o.im) / den;
        re = std::move(r);
        return *this;
    }
    ComplexHP operator-() const { return {-re, -im}; }

    friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
    friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
    friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
    friend ComplexHP operator*(ComplexHP a, const Real& s) { return a *= s; }
    friend ComplexHP operator*(const Real& s, ComplexHP a) { return a *= s; }
    friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
    friend bool operator==(const ComplexHP& a, const ComplexHP& b) { return a.re == b.re && a.im == b.im; }
};

inline ComplexHP conj(const ComplexHP& z) { return {z.re, -z.im}; }
inline Real norm2(const ComplexHP& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const ComplexHP& z) { return boost::multiprecision::sqrt(norm2(z)); }

inline bool approx_eq(const ComplexHP& a, const ComplexHP& b, const Real& tol) {
    if (!(tol > 0)) throw std::invalid_argument("approx_eq: tolerance must be positive");
    return abs(a - b) <= tol;
}

inline Real pi() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

/// e^{2 pi i phi}. Quarter turns are produced exactly.
inline ComplexHP phase_to_complex(const Phase& phi) {
    const Rational& v = phi.value();
    if (v == Rational(0)) return {Real(1), Real(0)};
    if (v == Rational(1, 2)) return {Real(-1), Real(0)};
    if (v == Rational(1, 4)) return {Real(0), Real(1)};
    if (v == Rational(3, 4)) return {Real(0), Real(-1)};
    Real angle = 2 * pi() * Real(v.numerator()) / Real(v.denominator());
    return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

inline ComplexHP phase_to_complex(const Phase& phi, unsigned digits) {
    WorkingPrecision guard(digits);
    return phase_to_complex(phi);
}

inline Real real_from_string(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed decimal '" + s + "'");
    }
}

/// Scientific notation with the working precision's significant digits.
inline std::string to_decimal_string(const Real& x) {
    if (x == 0) return "0";
    return x.str(static_cast<std::streamsize>(working_precision()), std::ios_base::scientific);
}

inline std::ostream& operator<<(std::ostream& os, const ComplexHP& z) {
    return os << "(" << z.re.str(20) << ", " << z.im.str(20) << ")";
}

}  // namespace permorb
