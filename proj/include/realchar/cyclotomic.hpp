// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Values are kept in a unique canonical form: coefficients over the Zumbroich
// integral basis of Q(zeta_n), with n always reduced to the smallest possible
// conductor (so rationals have conductor 1 and equality is plain structural
// comparison). No floating point anywhere.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realchar/rational.hpp"

namespace realchar {

class Cyclotomic {
public:
    Cyclotomic() = default;                       // zero
    Cyclotomic(int v) { assign_rational(Rational(v)); }
    Cyclotomic(long v) { assign_rational(Rational(v)); }
    Cyclotomic(const Integer& v) { assign_rational(Rational(v)); }
    Cyclotomic(const Rational& v) { assign_rational(v); }

    // zeta_n^k, canonicalized
    static Cyclotomic root_of_unity(int n, long k);
    // build from raw exponent->coefficient data at conductor n
    static Cyclotomic from_terms(int n, const std::map<int, Rational>& terms);

    int conductor() const { return cond_; }
    const std::map<int, Rational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return cond_ == 1; }
    std::optional<Rational> as_rational() const;
    std::optional<Integer> as_integer() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;  // throws on zero divisor
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const { return cond_ == o.cond_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Galois action zeta_n -> zeta_n^k, requires gcd(k, conductor) == 1
    Cyclotomic galois(long k) const;
    Cyclotomic conjugate() const;
    bool is_real() const;
    Cyclotomic inverse() const;

    std::string str() const;

    // deterministic total order used for canonical sorting of characters
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

private:
    int cond_ = 1;
    std::map<int, Rational> c_;

    void assign_rational(const Rational& v);
    void canonicalize(int n, std::map<int, Rational> m);

    friend struct CycTestHook;
};

}  // namespace realchar
