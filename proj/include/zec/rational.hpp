#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zec/errors.hpp"

namespace zec {

using Integer = mpz_class;

// Arbitrary-precision rational in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1 after every operation. Backed by GMP;
// the wrapper guarantees canonicalization on every construction path and
// adds the exact parsing/formatting used by the file formats ("p/q" or "p",
// never floats).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const Integer &n) : v_(n) {}
    Rational(const Integer &num, const Integer &den) : v_(num, den) { canonicalize_(); }
    Rational(long num, long den) : v_(num, den) { canonicalize_(); }
    explicit Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }

    static Rational parse(std::string_view text) {
        std::string s{text};
        if (s.empty()) throw InvalidInput("empty rational literal");
        for (char c : s) {
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
                throw InvalidInput("bad rational literal '" + s + "'");
        }
        try {
            mpq_class q(s);
            q.canonicalize();
            if (q.get_den() <= 0) throw InvalidInput("bad rational literal '" + s + "'");
            return Rational(q);
        } catch (const std::invalid_argument &) {
            throw InvalidInput("bad rational literal '" + s + "'");
        }
    }

    // 2^e for any integer e (negative exponents give exact dyadic fractions).
    static Rational pow2(long e) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
        return e >= 0 ? Rational(p) : Rational(Integer(1), p);
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational &a, const Rational &b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational &a, const Rational &b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational &a, const Rational &b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

    // Exact test r > 2^{-k} without materializing 2^{-k}. Bit-length
    // comparison settles all but the equal-length case, which keeps budgeted
    // sign decisions on dyadic sequences from degenerating into
    // quadratic-size bignum work.
    bool exceeds_pow2_neg(long k) const {
        if (sign() <= 0) return false;
        if (k < 0) {
            // r > 2^{|k|}: compare against an integer power.
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-k));
            return v_ > p;
        }
        const mpz_class &num = v_.get_num();
        const mpz_class &den = v_.get_den();
        const long bn = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
        const long bd = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
        if (num == 1) return k >= bd;  // 2^k > den  iff  k >= bitlen(den)
        if (bn + k > bd) return true;   // num*2^k >= 2^{bn+k-1} >= 2^{bd} > den
        if (bn + k < bd) return false;  // num*2^k < 2^{bn+k} <= 2^{bd-1} <= den
        mpz_class shifted;
        mpz_mul_2exp(shifted.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        return shifted > den;
    }

    const mpq_class &raw() const { return v_; }

private:
    void canonicalize_() {
        if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline std::string to_string(const Rational &r) { return r.str(); }

}  // namespace zec
