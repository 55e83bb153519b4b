#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "nchom/errors.hpp"

namespace nchom {

// Ground field: the rationals (p == 0) or a prime field F_p.
struct Field {
    long p = 0;

    bool rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field Q() { return Field{0}; }
    static Field Fp(long p);
};

// Exact field element. For F_p the value is kept as the canonical
// representative in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(Field f, long n);
    Scalar(Field f, const mpq_class& q);
    Scalar(Field f, const mpz_class& num, const mpz_class& den);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    const Field& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    // Total order used for deterministic canonicalization: numeric order on Q,
    // least nonnegative representative on F_p.
    int cmp(const Scalar& o) const { return ::cmp(v_, o.v_); }

    // Square root within the field, if one exists.
    std::optional<Scalar> sqrt() const;

    const mpq_class& value() const { return v_; }
    std::string str() const;

private:
    void reduce_();
    Field f_{};
    mpq_class v_{0};
};

Scalar operator*(long n, const Scalar& s);

}  // namespace nchom
