#pragma once

#include "coembed/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace coembed {

// Element of C[h]/<h^{r+1}> with coefficients in T (Scalar or Polynomial).
//
// T needs +, -, *, == and an `is_zero()` member. Coefficient spaces are
// compatible when `compatible(a, b)` holds for the zero slots; for
// polynomials that means "same algebra".
template <typename T>
class HbarSeries {
public:
    HbarSeries(std::size_t order, T zero) : coeffs_(order + 1, std::move(zero)) {}

    // Constant series c + 0*h + ... .
    static HbarSeries constant(std::size_t order, const T& c, const T& zero)
    {
        HbarSeries s(order, zero);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const T& operator[](std::size_t k) const { return coeffs_.at(k); }
    T& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<T>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const HbarSeries& a, const HbarSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<T> coeffs_;
};

enum class SeriesOp { add, mul };

// Coefficientwise sum, or Cauchy product truncated at the common order.
// Throws ShapeMismatch for different orders or incompatible coefficients.
template <typename T, typename Compatible>
HbarSeries<T> series_combine(const HbarSeries<T>& lhs, const HbarSeries<T>& rhs, SeriesOp op,
                             Compatible&& compatible)
{
    if (lhs.order() != rhs.order()) {
        throw ShapeMismatch("series orders differ: " + std::to_string(lhs.order()) + " vs " +
                            std::to_string(rhs.order()));
    }
    if (!compatible(lhs[0], rhs[0])) {
        throw ShapeMismatch("series coefficient spaces differ");
    }
    const std::size_t r = lhs.order();
    HbarSeries<T> out = lhs;
    if (op == SeriesOp::add) {
        for (std::size_t k = 0; k <= r; ++k) {
            out[k] = lhs[k] + rhs[k];
        }
        return out;
    }
    for (std::size_t k = 0; k <= r; ++k) {
        T acc = lhs[0] * rhs[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc = acc + lhs[j] * rhs[k - j];
        }
        out[k] = std::move(acc);
    }
    return out;
}

template <typename T>
HbarSeries<T> series_combine(const HbarSeries<T>& lhs, const HbarSeries<T>& rhs, SeriesOp op)
{
    // Found by argument-dependent lookup next to the coefficient type.
    return series_combine(lhs, rhs, op, [](const T& a, const T& b) { return series_space_compatible(a, b); });
}

} // namespace coembed
