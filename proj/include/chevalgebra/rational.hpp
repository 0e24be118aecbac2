#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chevalgebra {

// Exact arithmetic scalars. All algebra coefficients in this library are
// rationals; no floating point appears anywhere in the computation pipeline.
// mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalization.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "a" or "a/b"; used by the CLI for exact parameter input.
inline std::optional<Rat> rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) return std::nullopt;
        Rat q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    Int n = q.get_num(), d = q.get_den();
    Int sn, sd, rem;
    mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return rat(sn, sd);
}

}  // namespace chevalgebra
