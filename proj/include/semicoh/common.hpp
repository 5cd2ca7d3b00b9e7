#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace semicoh {

using Int = boost::multiprecision::cpp_int;

// Bad user-supplied data (malformed tables, failed validation). CLI exit 1.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Input is structurally fine but too large for the configured limits. CLI exit 2.
struct bound_exceeded : std::runtime_error {
    explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; never expected on any input that validated.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Least absolute residue of x mod m (m > 0), in (-m/2, m/2].
inline Int balanced_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// Nonnegative residue in [0, m).
inline Int pos_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace semicoh
