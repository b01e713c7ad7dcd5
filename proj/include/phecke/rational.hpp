#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace phecke {

// Exact rational arithmetic on 64-bit numerator/denominator. All operations
// are overflow-checked and throw std::overflow_error instead of wrapping;
// everything downstream relies on exactness.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const { return Rat(checked_neg(num_), den_, already_normal{}); }

    Rat operator+(const Rat& o) const {
        long long g = std::gcd(den_, o.den_);
        long long dl = den_ / g;
        long long n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, dl));
        long long d = checked_mul(dl, o.den_);
        return Rat(n, d);
    }
    Rat operator-(const Rat& o) const { return *this + (-o); }
    Rat operator*(const Rat& o) const {
        long long g1 = std::gcd(std::abs(num_), o.den_);
        long long g2 = std::gcd(den_, std::abs(o.num_));
        return Rat(checked_mul(num_ / g1, o.num_ / g2),
                   checked_mul(den_ / g2, o.den_ / g1), already_normal{});
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return *this * Rat(o.den_, o.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    bool is_integer() const { return den_ == 1; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct already_normal {};
    Rat(long long n, long long d, already_normal) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = checked_neg(num_); den_ = checked_neg(den_); }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static long long checked_neg(long long a) {
        long long r;
        if (__builtin_sub_overflow(0LL, a, &r)) throw std::overflow_error("rational overflow");
        return r;
    }

    long long num_;
    long long den_;  // > 0
};

}  // namespace phecke
