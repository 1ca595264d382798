#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace coembed {

using Rational = mpq_class;

// Element of Q or Q(i), stored as a pair of canonical GMP rationals.
// A scalar with zero imaginary part is a rational; the representation of
// each value is unique, so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar fraction(long num, long den) { return Scalar(Rational(num, den)); }

    const Rational& real() const noexcept { return re_; }
    const Rational& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    // Throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // `p/q` for rationals, `a/b+c/d*i` for gaussian rationals.
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Scalars always share one coefficient space (Q sits inside Q(i)).
inline bool series_space_compatible(const Scalar&, const Scalar&) { return true; }

// Embedding Q -> Q(i).
inline Scalar embed(const Rational& q) { return Scalar(q); }

} // namespace coembed
