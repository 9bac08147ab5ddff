#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace weakmonads {

// Either the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);
    // Accepts "Q", "F7", "Fp7".
    static Field parse(const std::string& text);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field& other) const = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpq_class& value);
    static Scalar from_residue(const Field& field, std::uint64_t residue);
    // "n", "-n", "n/d"; for F_p the fraction is reduced mod p.
    static Scalar parse(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }
    bool is_zero() const;
    std::string str() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;

private:
    Field field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

}  // namespace weakmonads
