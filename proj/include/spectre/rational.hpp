#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "spectre/integer.hpp"

namespace spectre {

// Exact rational number backed by GMP.  Always in lowest terms with a
// positive denominator, so equal values have equal representations.
class Rat {
public:
    Rat() = default;
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long n) : v_(n) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(Int n, Int d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n", "-n", "p/q".
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p/q", or "n" when the denominator is 1.
    std::string str() const;
    // Rounded decimal expansion for display only.
    std::string decimal(int digits) const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.v_, b.v_);
        if (c < 0)
            return std::strong_ordering::less;
        if (c > 0)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

mpz_class floor(const Rat& x);

// Fractional part {x} = x - floor(x), in [0, 1).
Rat frac(const Rat& x);

Rat pow(const Rat& x, unsigned k);

} // namespace spectre
