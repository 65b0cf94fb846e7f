#pragma once

#include <gmpxx.h>

#include <string>

#include "fftc/error.hpp"

namespace fftc {

enum class FieldKind { Rational, GaussianRational, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    mpz_class p;  // modulus, PrimeField only

    static FieldSpec rational() { return {FieldKind::Rational, 0}; }
    static FieldSpec gaussian() { return {FieldKind::GaussianRational, 0}; }
    static FieldSpec prime(const mpz_class& p);

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind != FieldKind::PrimeField || p == o.p);
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    bool is_char_zero() const { return kind != FieldKind::PrimeField; }
    std::string name() const;
};

// Exact field element: a rational, a Gaussian rational re + im*i, or a
// residue mod p. Values are immutable in spirit; all operators return
// fresh scalars and never mutate shared state.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()) {}
    explicit Scalar(FieldSpec field) : field_(std::move(field)) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(long v, const FieldSpec& f);
    static Scalar from_mpz(const mpz_class& v, const FieldSpec& f);
    static Scalar from_mpq(const mpq_class& v, const FieldSpec& f);
    static Scalar gaussian(const mpq_class& re, const mpq_class& im);
    static Scalar i(const FieldSpec& f);  // imaginary unit, gaussian only

    const FieldSpec& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws Error on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Complex conjugate (identity on rationals / prime fields).
    Scalar conj() const;

    // Rational part accessors (Rational / GaussianRational kinds).
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    const mpz_class& residue() const { return res_; }

    // True if the value lies in the prime subfield Q (im == 0) resp. F_p.
    bool is_rational() const { return field_.kind != FieldKind::GaussianRational || im_ == 0; }

    std::string str() const;

private:
    FieldSpec field_;
    mpq_class re_, im_;  // Rational / GaussianRational
    mpz_class res_;      // PrimeField, in [0, p)

    void check_same_field(const Scalar& o) const;
};

// Parses the canonical scalar grammar:
//   int | int/int | a/b+c/d*i | c*i | i | -i   (mod-p context: a single int)
Scalar parse_scalar(const std::string& text, const FieldSpec& field);

}  // namespace fftc
