#pragma once

#include <stdexcept>
#include <string>

#include "intlin/matrix.hpp"

namespace dz {

/// Element of (1/2)Z stored as twice its value.
struct HalfInt {
    long long twice = 0;

    static HalfInt whole(long long n) { return HalfInt{2 * n}; }
    static HalfInt halves(long long t) { return HalfInt{t}; }

    bool is_integer() const { return twice % 2 == 0; }
    long long integer() const { return twice / 2; }
    long long floor_int() const {
        long long q = twice / 2;
        if (twice % 2 != 0 && twice < 0) --q;
        return q;
    }
    long long ceil_int() const {
        long long q = twice / 2;
        if (twice % 2 != 0 && twice > 0) ++q;
        return q;
    }

    intlin::Rational rat() const { return intlin::Rational(twice, 2); }

    HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    bool operator==(HalfInt o) const { return twice == o.twice; }
    bool operator!=(HalfInt o) const { return twice != o.twice; }
    bool operator<(HalfInt o) const { return twice < o.twice; }
    bool operator<=(HalfInt o) const { return twice <= o.twice; }
    bool operator>(HalfInt o) const { return twice > o.twice; }
    bool operator>=(HalfInt o) const { return twice >= o.twice; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline long long rational_floor(const intlin::Rational& q) {
    intlin::Int num = boost::multiprecision::numerator(q);
    intlin::Int den = boost::multiprecision::denominator(q);  // > 0
    intlin::Int fl;
    if (num >= 0)
        fl = num / den;
    else
        fl = -((-num + den - 1) / den);
    return fl.convert_to<long long>();
}
inline long long rational_ceil(const intlin::Rational& q) { return -rational_floor(-q); }

/// A rational cut c with its canonical half-integer projections. The
/// canonicalization implements the set-family collapse: membership at any
/// real c only depends on these projections.
struct CutParam {
    intlin::Rational c;

    CutParam() = default;
    explicit CutParam(const intlin::Rational& v) : c(v) {}
    explicit CutParam(long long v) : c(v) {}
    static CutParam of_half(HalfInt h) { return CutParam(h.rat()); }
    static CutParam parse(const std::string& s);

    /// max { s in (1/2)Z : s <= c }
    HalfInt canon_le() const { return HalfInt{rational_floor(c * 2)}; }
    /// min { s in (1/2)Z : s >= c }
    HalfInt canon_ge() const { return HalfInt{rational_ceil(c * 2)}; }
    /// max { s in (1/2)Z : s < c }
    HalfInt canon_lt() const {
        HalfInt le = canon_le();
        if (le.rat() == c) return HalfInt{le.twice - 1};
        return le;
    }
    /// min { s in (1/2)Z : s > c }
    HalfInt canon_gt() const {
        HalfInt ge = canon_ge();
        if (ge.rat() == c) return HalfInt{ge.twice + 1};
        return ge;
    }

    CutParam operator+(const intlin::Rational& v) const { return CutParam(c + v); }
    CutParam operator-(const intlin::Rational& v) const { return CutParam(c - v); }
    CutParam operator-() const { return CutParam(-c); }
    bool operator==(const CutParam& o) const { return c == o.c; }

    std::string str() const;
};

inline CutParam CutParam::parse(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return CutParam(intlin::Rational(intlin::Int(s)));
        intlin::Int num(s.substr(0, pos)), den(s.substr(pos + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return CutParam(intlin::Rational(num, den));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse cut '" + s + "' (want p or p/q)");
    }
}

inline std::string CutParam::str() const {
    intlin::Int num = boost::multiprecision::numerator(c);
    intlin::Int den = boost::multiprecision::denominator(c);
    std::string out = num.str();
    if (den != 1) out += "/" + den.str();
    return out;
}

}  // namespace dz
