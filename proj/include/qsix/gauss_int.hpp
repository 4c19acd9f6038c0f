#pragma once

#include <string>

#include "qsix/integer.hpp"

namespace qsix {

// Gaussian integer a + b*i with exact arithmetic, i^2 = -1.
struct GaussInt {
    Int re{0};
    Int im{0};

    GaussInt() = default;
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussInt(const Int& r) : re(r) {}
    GaussInt(int r) : re(r) {}

    static GaussInt i() { return GaussInt(Int(0), Int(1)); }

    GaussInt operator-() const { return GaussInt(-re, -im); }

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    GaussInt& operator*=(const GaussInt& o) {
        Int r = re * o.re - im * o.im;
        Int i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussInt operator+(GaussInt a, const GaussInt& b) { a += b; return a; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { a -= b; return a; }
    friend GaussInt operator*(GaussInt a, const GaussInt& b) { a *= b; return a; }

    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
};

inline std::string to_display(const GaussInt& g) {
    if (g.im == 0) return g.re.get_str();
    std::string s = g.re == 0 ? "" : g.re.get_str();
    if (g.im > 0 && !s.empty()) s += "+";
    if (g.im == -1) s += "-";
    else if (g.im != 1) s += g.im.get_str() + "*";
    s += "i";
    return s;
}

}  // namespace qsix
