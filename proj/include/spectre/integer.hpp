#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spectre {

using Int = std::int64_t;

// Raised for malformed input: bad trees, zero determinants, wrong shapes.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when two computations that must agree do not.
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int checked(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("integer overflow (value exceeds 64 bits)");
    return static_cast<Int>(v);
}

inline Int mul(Int a, Int b) { return checked(static_cast<__int128>(a) * b); }
inline Int add(Int a, Int b) { return checked(static_cast<__int128>(a) + b); }

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

// Representative of a mod m in [0, m).
inline Int mod(__int128 a, Int m)
{
    __int128 r = a % m;
    if (r < 0)
        r += m;
    return static_cast<Int>(r);
}

// Inverse of a modulo m; m == 1 gives 0.  Throws when gcd(a, m) != 1.
inline Int modinv(Int a, Int m)
{
    if (m == 1)
        return 0;
    Int r0 = m, r1 = mod(a, m);
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int t = r0 / r1;
        Int r2 = r0 - t * r1;
        r0 = r1;
        r1 = r2;
        Int s2 = s0 - t * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw ValidationError("weights at a vertex are not pairwise coprime (" + std::to_string(a) +
                              " has no inverse mod " + std::to_string(m) + ")");
    return mod(s0, m);
}

// Integers u, v with a*u + b*v = gcd(a, b).
inline void bezout(Int a, Int b, Int& u, Int& v)
{
    Int r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        Int t = r0 / r1;
        Int r2 = r0 - t * r1;
        r0 = r1;
        r1 = r2;
        Int u2 = u0 - t * u1;
        u0 = u1;
        u1 = u2;
        Int v2 = v0 - t * v1;
        v0 = v1;
        v1 = v2;
    }
    if (r0 < 0) {
        u0 = -u0;
        v0 = -v0;
    }
    u = u0;
    v = v0;
}

} // namespace spectre
