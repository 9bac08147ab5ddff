#pragma once

#include <cstdint>
#include <type_traits>

#include <gmpxx.h>

#include "weakmonads/field.hpp"

namespace weakmonads::detail {

struct QArith {
    using T = mpq_class;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return 1 / a; }
    void addmul(T& acc, const T& a, const T& b) const { acc += a * b; }
};

struct PArith {
    using T = std::uint64_t;
    std::uint64_t p;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return (a + p - b) % p; }
    T mul(T a, T b) const { return a * b % p; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const { return mod_inverse(a, p); }
    void addmul(T& acc, T a, T b) const { acc = (acc + a * b) % p; }
};

}  // namespace weakmonads::detail

#include "weakmonads/linmap.hpp"

namespace weakmonads::detail {

template <class A>
auto& entries(LinMap& m) {
    if constexpr (std::is_same_v<A, QArith>) return m.rational_data();
    else return m.residue_data();
}

template <class A>
const auto& entries(const LinMap& m) {
    if constexpr (std::is_same_v<A, QArith>) return m.rational_data();
    else return m.residue_data();
}

template <class F>
decltype(auto) with_arith(const Field& field, F&& f) {
    if (field.is_rational()) return f(QArith{});
    return f(PArith{field.characteristic()});
}

}  // namespace weakmonads::detail
