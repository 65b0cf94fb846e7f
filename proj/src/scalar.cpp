#include "fftc/scalar.hpp"

#include <cctype>
#include <utility>

namespace fftc {

FieldSpec FieldSpec::prime(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw Error("prime_field modulus " + p.get_str() + " is not prime");
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
    switch (kind) {
        case FieldKind::Rational: return "rational";
        case FieldKind::GaussianRational: return "gaussian_rational";
        case FieldKind::PrimeField: return "prime_field(" + p.get_str() + ")";
    }
    return "?";
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldSpec& f) { return from_mpz(mpz_class(v), f); }

Scalar Scalar::from_mpz(const mpz_class& v, const FieldSpec& f) {
    Scalar s(f);
    if (f.kind == FieldKind::PrimeField) {
        s.res_ = ((v % f.p) + f.p) % f.p;
    } else {
        s.re_ = v;
    }
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& v, const FieldSpec& f) {
    if (f.kind == FieldKind::PrimeField) {
        mpz_class den = v.get_den();
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), f.p.get_mpz_t()))
            throw Error("denominator not invertible mod p");
        return from_mpz(v.get_num() * inv, f);
    }
    Scalar s(f);
    s.re_ = v;
    s.re_.canonicalize();
    return s;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
    Scalar s(FieldSpec::gaussian());
    s.re_ = re;
    s.im_ = im;
    s.re_.canonicalize();
    s.im_.canonicalize();
    return s;
}

Scalar Scalar::i(const FieldSpec& f) {
    if (f.kind != FieldKind::GaussianRational)
        throw FieldMismatchError("imaginary unit requires the gaussian_rational field");
    return gaussian(0, 1);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
    if (field_.kind == FieldKind::PrimeField) return res_ == 0;
    return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
    if (field_.kind == FieldKind::PrimeField) return res_ == 1;
    return re_ == 1 && im_ == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.kind == FieldKind::PrimeField) {
        r.res_ = (res_ + o.res_) % field_.p;
    } else {
        r.re_ = re_ + o.re_;
        r.im_ = im_ + o.im_;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.kind == FieldKind::PrimeField) {
        r.res_ = res_ == 0 ? mpz_class(0) : mpz_class(field_.p - res_);
    } else {
        r.re_ = -re_;
        r.im_ = -im_;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.kind == FieldKind::PrimeField) {
        r.res_ = (res_ * o.res_) % field_.p;
    } else {
        r.re_ = re_ * o.re_ - im_ * o.im_;
        r.im_ = re_ * o.im_ + im_ * o.re_;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar r(field_);
    if (field_.kind == FieldKind::PrimeField) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), res_.get_mpz_t(), field_.p.get_mpz_t());
        r.res_ = inv;
    } else {
        mpq_class n = re_ * re_ + im_ * im_;
        r.re_ = re_ / n;
        r.im_ = -im_ / n;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.kind == FieldKind::PrimeField) return res_ == o.res_;
    return re_ == o.re_ && im_ == o.im_;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.im_ = -r.im_;
    return r;
}

namespace {

std::string mpq_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "int" or "int/int" starting at pos; advances pos.
mpq_class parse_mpq_at(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected integer in scalar at '" + s.substr(start) + "'");
    mpz_class num(s.substr(dstart, pos - dstart));
    if (neg) num = -num;
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t nstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == nstart) throw ParseError("expected denominator in '" + s + "'");
        den = mpz_class(s.substr(nstart, pos - nstart));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::string Scalar::str() const {
    if (field_.kind == FieldKind::PrimeField) return res_.get_str();
    if (field_.kind == FieldKind::Rational || im_ == 0) return mpq_str(re_);
    std::string imp = (im_ < 0 ? "-" : "") + mpq_str(abs(im_)) + "*i";
    if (re_ == 0) return imp;
    return mpq_str(re_) + (im_ < 0 ? "" : "+") + imp;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    if (field.kind == FieldKind::PrimeField) {
        size_t pos = 0;
        mpq_class q = parse_mpq_at(s, pos);
        if (pos != s.size()) throw ParseError("trailing characters in '" + text + "'");
        return Scalar::from_mpq(q, field);
    }

    // Bare imaginary unit shortcuts.
    auto with_sign = [&](const std::string& body, bool neg) -> Scalar {
        if (field.kind != FieldKind::GaussianRational)
            throw ParseError("'i' outside the gaussian_rational field: '" + text + "'");
        (void)body;
        return Scalar::gaussian(0, neg ? -1 : 1);
    };
    if (s == "i" || s == "+i") return with_sign(s, false);
    if (s == "-i") return with_sign(s, true);

    size_t pos = 0;
    mpq_class first = parse_mpq_at(s, pos);
    if (pos == s.size()) {
        if (field.kind == FieldKind::GaussianRational) return Scalar::gaussian(first, 0);
        return Scalar::from_mpq(first, field);
    }
    if (s.compare(pos, 2, "*i") == 0 && pos + 2 == s.size()) {
        if (field.kind != FieldKind::GaussianRational)
            throw ParseError("i-term outside the gaussian_rational field: '" + text + "'");
        return Scalar::gaussian(0, first);
    }
    if (s[pos] != '+' && s[pos] != '-')
        throw ParseError("malformed scalar '" + text + "'");
    mpq_class second = parse_mpq_at(s, pos);
    if (s.compare(pos, 2, "*i") != 0 || pos + 2 != s.size())
        throw ParseError("malformed scalar '" + text + "'");
    if (field.kind != FieldKind::GaussianRational)
        throw ParseError("i-term outside the gaussian_rational field: '" + text + "'");
    return Scalar::gaussian(first, second);
}

}  // namespace fftc
