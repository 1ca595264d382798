#include "coembed/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace coembed {

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero scalar");
    }
    if (is_real()) {
        return Scalar(Rational(1) / re_);
    }
    const Rational norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0) {
        im_ += o.im_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0) {
        im_ -= o.im_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Scalar::to_string() const
{
    if (is_real()) {
        return re_.get_str();
    }
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) {
        return imag;
    }
    if (imag.front() == '-') {
        return re_.get_str() + imag;
    }
    return re_.get_str() + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace coembed
