#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "naxray/errors.hpp"

namespace naxray {

// Exact rational scalar. All geometric predicates (lattice membership,
// cell-boundary assignment, separation of a ray from a cell) are evaluated
// in this type; doubles appear only in final lengths and norms.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RatVec = std::vector<Rat>;

// Exact value of the double (every finite double is rational).
inline Rat rat_of(double x) { return Rat(x); }

inline double rat_double(const Rat& q) { return q.convert_to<double>(); }

inline BigInt rat_floor(const Rat& q) {
    BigInt n = numerator(q), d = denominator(q);  // d > 0
    BigInt quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline BigInt rat_ceil(const Rat& q) { return -rat_floor(-q); }

// Serialized form "p/q"; parsing also accepts a bare integer "p".
inline std::string rat_str(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("malformed rational: " + s);
    }
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat norm2(const RatVec& a) { return dot(a, a); }

}  // namespace naxray
