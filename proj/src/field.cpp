#include "nchom/field.hpp"

namespace nchom {

Field Field::Fp(long p) {
    if (p < 2) throw Error(ErrorKind::IllegalParams, "field characteristic must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(ErrorKind::IllegalParams, "field characteristic must be prime");
    if (p > 1000003) throw Error(ErrorKind::IllegalParams, "prime modulus too large for this build");
    return Field{p};
}

Scalar::Scalar(Field f, long n) : f_(f), v_(n) { reduce_(); }

Scalar::Scalar(Field f, const mpq_class& q) : f_(f), v_(q) { reduce_(); }

Scalar::Scalar(Field f, const mpz_class& num, const mpz_class& den) : f_(f) {
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
    reduce_();
}

void Scalar::reduce_() {
    if (f_.rational()) {
        v_.canonicalize();
        return;
    }
    mpz_class p(f_.p);
    mpz_class den = v_.get_den();
    mpz_class num = v_.get_num() % p;
    if (num < 0) num += p;
    if (den != 1) {
        mpz_class d = den % p;
        if (d < 0) d += p;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error(ErrorKind::IllegalParams, "denominator not invertible mod p");
        num = (num * inv) % p;
    }
    v_ = mpq_class(num);
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r(f_, 0);
    r.v_ = v_ + o.v_;
    r.reduce_();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r(f_, 0);
    r.v_ = v_ - o.v_;
    r.reduce_();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r(f_, 0);
    r.v_ = v_ * o.v_;
    r.reduce_();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(f_, 0);
    r.v_ = -v_;
    r.reduce_();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::Internal, "division by zero");
    Scalar r(f_, 0);
    if (f_.rational()) {
        r.v_ = 1 / v_;
    } else {
        mpz_class p(f_.p), inv;
        mpz_class num = v_.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        r.v_ = mpq_class(inv);
        r.reduce_();
    }
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(f_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<Scalar> Scalar::sqrt() const {
    if (f_.rational()) {
        mpz_class num = v_.get_num(), den = v_.get_den();
        if (num < 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        if (rn * rn == num && rd * rd == den) return Scalar(f_, mpq_class(rn, rd));
        return std::nullopt;
    }
    long a = mpz_get_si(v_.get_num().get_mpz_t());
    for (long x = 0; x <= f_.p / 2; ++x)
        if ((x * x) % f_.p == a) return Scalar(f_, x);
    return std::nullopt;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar operator*(long n, const Scalar& s) { return Scalar(s.field(), n) * s; }

}  // namespace nchom
