#include "weakmonads/field.hpp"

#include <cctype>

#include "weakmonads/errors.hpp"

namespace weakmonads {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime(p))
        throw FieldMismatch("not a supported prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    std::size_t skip = 0;
    if (text.rfind("Fp", 0) == 0) skip = 2;
    else if (text.rfind("F", 0) == 0) skip = 1;
    else throw ParseError("unknown field '" + text + "'");
    std::string digits = text.substr(skip);
    if (digits.empty()) throw ParseError("field '" + text + "' lacks a characteristic");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unknown field '" + text + "'");
    return prime(std::stoull(digits));
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
    if (field.is_rational()) q_ = value;
    else r_ = reduce(mpz_class(value), field.characteristic());
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        q_ = value;
    } else {
        std::uint64_t p = field.characteristic();
        std::uint64_t den = reduce(value.get_den(), p);
        if (den == 0) throw FieldMismatch("denominator vanishes in " + field.name());
        r_ = reduce(value.get_num(), p) * mod_inverse(den, p) % p;
    }
}

Scalar Scalar::from_residue(const Field& field, std::uint64_t residue) {
    Scalar s;
    s.field_ = field;
    s.r_ = residue % field.characteristic();
    return s;
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    bool ok = !t.empty();
    std::size_t slash = t.find('/');
    for (std::size_t i = 0; i < t.size() && ok; ++i) {
        char c = t[i];
        if (std::isdigit(static_cast<unsigned char>(c))) continue;
        if (c == '-' && (i == 0)) continue;
        if (c == '/' && i == slash && i > 0 && i + 1 < t.size()) continue;
        ok = false;
    }
    if (ok && (t == "-" || (slash != std::string::npos && t[slash - 1] == '-'))) ok = false;
    if (!ok) throw ParseError("malformed scalar '" + text + "'");
    if (q.set_str(t, 10) != 0) throw ParseError("malformed scalar '" + text + "'");
    if (slash != std::string::npos && q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

std::string Scalar::str() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

Scalar Scalar::operator+(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("scalar field mismatch");
    Scalar s = *this;
    if (field_.is_rational()) s.q_ += o.q_;
    else s.r_ = (r_ + o.r_) % field_.characteristic();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("scalar field mismatch");
    Scalar s = *this;
    if (field_.is_rational()) s.q_ *= o.q_;
    else s.r_ = r_ * o.r_ % field_.characteristic();
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("scalar field mismatch");
    if (o.is_zero()) throw std::domain_error("division by zero");
    Scalar s = *this;
    if (field_.is_rational()) s.q_ /= o.q_;
    else s.r_ = r_ * mod_inverse(o.r_, field_.characteristic()) % field_.characteristic();
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.is_rational() ? q_ == o.q_ : r_ == o.r_);
}

}  // namespace weakmonads
