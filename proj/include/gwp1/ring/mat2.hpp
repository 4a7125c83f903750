#pragma once

#include <utility>

namespace gwp1 {

// 2x2 matrix [[a, b], [c, d]] over any ring with +, -, *.
template <class T>
struct Mat2 {
    T a, b, c, d;

    friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }

    template <class F>
    auto map(F&& f) const -> Mat2<decltype(f(a))> {
        return {f(a), f(b), f(c), f(d)};
    }
};

// Trace of a product of matrices without forming the last product in full.
template <class T>
T trace_of_product(const Mat2<T>& x, const Mat2<T>& y) {
    return x.a * y.a + x.b * y.c + x.c * y.b + x.d * y.d;
}

}  // namespace gwp1
