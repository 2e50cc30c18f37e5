#ifndef REESKIT_FIELD_HPP
#define REESKIT_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "reeskit/errors.hpp"

namespace reeskit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational scalar. cpp_rational keeps values in lowest terms with a
/// positive denominator, which is exactly the representation invariant we need.
class QQ {
  public:
    struct Context {
        bool operator==(const Context&) const = default;
    };

    QQ() : v_(0) {}
    explicit QQ(BigRational v) : v_(std::move(v)) {}
    explicit QQ(long long v) : v_(v) {}

    static QQ zero(const Context&) { return QQ(); }
    static QQ one(const Context&) { return QQ(1); }
    static QQ from_int(long long v, const Context&) { return QQ(v); }
    static QQ from_fraction(const BigInt& num, const BigInt& den, const Context&) {
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
        return QQ(BigRational(num, den));
    }

    Context context() const { return {}; }

    bool is_zero() const { return v_ == 0; }
    QQ inv() const {
        if (is_zero()) throw Error(ErrorCode::InternalError, "inverse of zero");
        return QQ(1 / v_);
    }

    QQ operator-() const { return QQ(-v_); }
    QQ operator+(const QQ& o) const { return QQ(v_ + o.v_); }
    QQ operator-(const QQ& o) const { return QQ(v_ - o.v_); }
    QQ operator*(const QQ& o) const { return QQ(v_ * o.v_); }
    QQ operator/(const QQ& o) const { return *this * o.inv(); }
    QQ& operator+=(const QQ& o) { v_ += o.v_; return *this; }
    QQ& operator-=(const QQ& o) { v_ -= o.v_; return *this; }
    QQ& operator*=(const QQ& o) { v_ *= o.v_; return *this; }
    bool operator==(const QQ& o) const { return v_ == o.v_; }
    bool operator!=(const QQ& o) const { return v_ != o.v_; }

    const BigRational& value() const { return v_; }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    /// Small nonzero-biased random scalar, for pencils and sample points.
    static QQ random(std::mt19937_64& rng, const Context&) {
        std::uniform_int_distribution<int> dist(-20, 20);
        return QQ(dist(rng));
    }

    std::string to_string() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

    bool is_display_negative() const { return v_ < 0; }
    QQ display_abs() const { return v_ < 0 ? QQ(-v_) : *this; }

    static constexpr bool is_prime_field = false;
    static const char* field_name() { return "qq"; }

  private:
    BigRational v_;
};

/// Residue in a prime field with p < 2^31. Each scalar carries its modulus so
/// values stay self-contained; operations on mismatched moduli throw.
class Fp {
  public:
    struct Context {
        std::uint32_t p = 0;
        bool operator==(const Context&) const = default;
    };

    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint32_t p) : v_(v % p), p_(p) {}

    static Fp zero(const Context& c) { return Fp(0, c.p); }
    static Fp one(const Context& c) { return Fp(1, c.p); }
    static Fp from_int(long long v, const Context& c) {
        long long r = v % static_cast<long long>(c.p);
        if (r < 0) r += c.p;
        return Fp(static_cast<std::uint64_t>(r), c.p);
    }
    static Fp from_fraction(const BigInt& num, const BigInt& den, const Context& c) {
        Fp n = reduce(num, c);
        Fp d = reduce(den, c);
        if (d.is_zero())
            throw Error(ErrorCode::DegenerateInput,
                        "denominator divisible by the field characteristic " + std::to_string(c.p));
        return n / d;
    }

    Context context() const { return {p_}; }

    bool is_zero() const { return v_ == 0; }

    Fp inv() const {
        if (v_ == 0) throw Error(ErrorCode::InternalError, "inverse of zero mod " + std::to_string(p_));
        // extended Euclid
        std::int64_t a = static_cast<std::int64_t>(v_), m = p_, x0 = 0, x1 = 1;
        std::int64_t b = m;
        while (a > 1) {
            std::int64_t q = a / b;
            std::int64_t t = b; b = a % b; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        if (x1 < 0) x1 += m;
        return Fp(static_cast<std::uint64_t>(x1), p_);
    }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const { check(o); std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_; if (s >= p_) s -= p_; return Fp(s, p_); }
    Fp operator-(const Fp& o) const { check(o); std::uint64_t s = static_cast<std::uint64_t>(v_) + p_ - o.v_; if (s >= p_) s -= p_; return Fp(s, p_); }
    Fp operator*(const Fp& o) const { check(o); return Fp(static_cast<std::uint64_t>(v_) * o.v_ % p_, p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::uint32_t residue() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    static Fp random(std::mt19937_64& rng, const Context& c) {
        std::uniform_int_distribution<std::uint32_t> dist(0, c.p - 1);
        return Fp(dist(rng), c.p);
    }

    std::string to_string() const { return std::to_string(v_); }

    bool is_display_negative() const { return false; }
    Fp display_abs() const { return *this; }

    static constexpr bool is_prime_field = true;
    static const char* field_name() { return "fp"; }

  private:
    static Fp reduce(const BigInt& n, const Context& c) {
        BigInt r = n % c.p;
        if (r < 0) r += c.p;
        return Fp(static_cast<std::uint64_t>(r), c.p);
    }

    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw Error(ErrorCode::FieldMismatch,
                        "moduli differ: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

}  // namespace reeskit

#endif
