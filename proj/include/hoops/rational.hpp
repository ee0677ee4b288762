#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hoops/errors.hpp"

namespace hoops {

/// Exact rational on 64-bit words.
///
/// The denominator is kept positive and the fraction reduced. Arithmetic runs
/// through 128-bit intermediates; a result that does not fit back into 64 bits
/// throws std::overflow_error instead of silently wrapping. All sampled group
/// elements in this library are size-bounded, so the guard never fires in
/// normal operation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    [[nodiscard]] long long num() const { return num_; }
    [[nodiscard]] long long den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        i128 d = i128(a.den_) * b.den_;
        return make_reduced(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        i128 d = i128(a.den_) * b.den_;
        return make_reduced(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    [[nodiscard]] std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Parses "p" or "p/q"; throws hoops::error(parse_error) on junk.
    static Rational parse(const std::string& s) {
        std::size_t slash = s.find('/');
        try {
            std::size_t pos = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &pos);
                if (pos != s.size()) fail(errc::parse_error, "bad rational '" + s + "'");
                return Rational(n);
            }
            long long n = std::stoll(s.substr(0, slash), &pos);
            if (pos != slash) fail(errc::parse_error, "bad rational '" + s + "'");
            long long d = std::stoll(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1) fail(errc::parse_error, "bad rational '" + s + "'");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            fail(errc::parse_error, "bad rational '" + s + "'");
        } catch (const std::out_of_range&) {
            fail(errc::parse_error, "rational out of range '" + s + "'");
        }
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static long long narrow(i128 v) {
        if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<long long>(v);
    }

    static Rational make_reduced(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    void normalize() { *this = make_reduced(num_, den_); }

    long long num_;
    long long den_;
};

inline Rational rat_min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

} // namespace hoops

template <>
struct std::hash<hoops::Rational> {
    std::size_t operator()(const hoops::Rational& r) const noexcept {
        std::size_t h = std::hash<long long>{}(r.num());
        return h ^ (std::hash<long long>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
