#pragma once

// The non-unital ring E of order 4, generated by a, b with 2a = 2b = 0,
// a^2 = a, b^2 = b, ab = a, ba = b. Elements 0, a, b and c = a + b; the
// symbol alphabet is {0, k, t, z} for {0, a, b, c}. Every x decomposes
// uniquely as x = u a + v c with u, v in GF(2); that (u, v) pair is the
// stored encoding, so addition is bitwise XOR and multiplication has the
// closed form below. c spans the maximal ideal, and pi(x) = u is the
// reduction onto GF(2) modulo it.

#include <array>
#include <string>

#include "ecode/gf2.hpp"

namespace ecode {

struct EElem {
    bool u = false;  // coefficient of a
    bool v = false;  // coefficient of c = a + b

    friend bool operator==(const EElem&, const EElem&) = default;
};

inline constexpr EElem e_zero{false, false};
inline constexpr EElem e_a{true, false};   // symbol 'k'
inline constexpr EElem e_b{true, true};    // symbol 't'
inline constexpr EElem e_c{false, true};   // symbol 'z'

constexpr EElem e_add(EElem x, EElem y) { return {bool(x.u ^ y.u), bool(x.v ^ y.v)}; }

// xy = (u1 a + v1 c)(u2 a + v2 c): c annihilates on the right and every
// nonzero product of {a, b} collapses to its left factor, leaving
// (u1 u2) a + (v1 u2) c.
constexpr EElem e_mul(EElem x, EElem y) { return {bool(x.u & y.u), bool(x.v & y.u)}; }

constexpr bool pi(EElem x) { return x.u; }

char symbol_of(EElem x);
EElem elem_of_symbol(char s);  // throws std::invalid_argument off-alphabet

// Vector over E of fixed length, stored as parallel GF(2) planes.
struct EVector {
    BitVector u;  // a-plane
    BitVector v;  // c-plane

    EVector() = default;
    explicit EVector(int n) : u(n), v(n) {}
    EVector(BitVector u_, BitVector v_);

    int size() const { return u.size(); }
    EElem get(int i) const { return {u.get(i), v.get(i)}; }
    void set(int i, EElem x) { u.set(i, x.u); v.set(i, x.v); }
    int weight() const;  // nonzero coordinates

    friend bool operator==(const EVector&, const EVector&) = default;
    std::string to_string() const;
};

// <w, z> = sum_i w_i z_i. Multiplication is one-sided, so the order of the
// arguments matters; the closed form is (parity(u_w & u_z), parity(v_w & u_z)).
EElem e_inner(const EVector& w, const EVector& z);

struct EMatrix {
    BitMatrix u;  // a-plane
    BitMatrix v;  // c-plane

    EMatrix() = default;
    EMatrix(int rows, int cols) : u(rows, cols), v(rows, cols) {}
    EMatrix(BitMatrix u_, BitMatrix v_);

    int rows() const { return u.rows(); }
    int cols() const { return u.cols(); }
    EElem get(int r, int c) const { return {u.get(r, c), v.get(r, c)}; }
    void set(int r, int c, EElem x) { u.set(r, c, x.u); v.set(r, c, x.v); }
    EVector row(int r) const { return {u.row_vector(r), v.row_vector(r)}; }
    void append_row(const EVector& w);

    friend bool operator==(const EMatrix&, const EMatrix&) = default;
};

// a * g for a GF(2) matrix g: entries are k where g has 1. The standard lift
// of a binary generator to a free E-generator.
EMatrix scale_a(const BitMatrix& g);

}  // namespace ecode
