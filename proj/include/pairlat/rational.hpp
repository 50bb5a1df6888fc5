#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace pairlat {

using Int = boost::multiprecision::cpp_int;

// Exact rational with positive denominator, always normalized.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }
    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rat& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    // floor(num/den)
    Int floor() const {
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }
    Int ceil() const { return -(-*this).floor(); }

    // value reduced mod m into [0, m)
    Rat mod(const Int& m) const {
        Rat r = *this - Rat(Int(m) * (*this / Rat(m)).floor());
        while (r < Rat(0)) r += Rat(m);
        while (r >= Rat(m)) r -= Rat(m);
        return r;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // accepts "p" or "p/q"
    static std::optional<Rat> parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            Int n(s.substr(0, slash)), d(s.substr(slash + 1));
            if (d == 0) return std::nullopt;
            return Rat(n, d);
        } catch (...) {
            return std::nullopt;
        }
    }

private:
    struct raw_tag {};
    Rat(Int n, Int d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }
    Int num_, den_;
};

inline Rat rat(long long n, long long d) { return Rat(Int(n), Int(d)); }

}  // namespace pairlat
