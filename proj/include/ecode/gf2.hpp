#pragma once

// Dense GF(2) linear algebra on bit-packed rows. Rows are stored little-endian
// in 64-bit words, pad bits above `cols` are kept zero so whole-word equality
// and popcount are valid. Sized for small code-theory instances: everything in
// the test envelope fits one word per row (cols <= 24), but the layout is
// rows x ceil(cols/64) words and the routines do not assume a single word.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ecode {

using word = std::uint64_t;
inline constexpr int word_bits = 64;

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int len);
    // Parses a '0'/'1' string, most significant position first is NOT used:
    // character i is coordinate i.
    static BitVector from_string(const std::string& bits);

    int size() const { return len_; }
    bool get(int i) const;
    void set(int i, bool v);
    void flip(int i);
    int weight() const;
    bool is_zero() const;

    std::span<const word> words() const { return {w_.data(), w_.size()}; }
    std::span<word> words() { return {w_.data(), w_.size()}; }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    // Parity of the AND of two equal-length vectors (the GF(2) dot product).
    friend bool dot(const BitVector& a, const BitVector& b);

    std::string to_string() const;

private:
    int len_ = 0;
    std::vector<word> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    static BitMatrix identity(int n);
    // Rows packed into the low `cols` bits of a word; convenience for tests
    // and the classifier's packed form. Requires cols <= 64.
    static BitMatrix from_packed_rows(const std::vector<word>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    std::span<const word> row(int r) const { return {w_.data() + size_t(r) * wpr_, size_t(wpr_)}; }
    std::span<word> row(int r) { return {w_.data() + size_t(r) * wpr_, size_t(wpr_)}; }
    word packed_row(int r) const;  // requires cols <= 64

    void xor_row_into(int dst, int src);              // row[dst] ^= row[src]
    void xor_row_into(int dst, std::span<const word> src);
    void swap_rows(int a, int b);
    void append_row(std::span<const word> src);
    void append_row(const BitVector& v);
    void append_zero_row();
    BitVector row_vector(int r) const;
    int row_weight(int r) const;
    bool row_is_zero(int r) const;

    // All rows of `m` appended; column counts must match.
    void append_rows(const BitMatrix& m);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;
    std::vector<word> w_;
};

struct RrefResult {
    BitMatrix reduced;        // zero rows dropped, pivot columns strictly increasing
    std::vector<int> pivots;  // pivot column of each kept row
};

RrefResult rref(const BitMatrix& m);
int rank(const BitMatrix& m);

// True iff v lies in the row space described by an RrefResult.
bool in_row_space(const RrefResult& r, const BitVector& v);

// a * b^T over GF(2); entry (i,j) is the parity of <a_i, b_j>. Requires equal
// column counts.
BitMatrix mul_transpose(const BitMatrix& a, const BitMatrix& b);

// Basis (in RREF) of {x : m x^T = 0}. Result has cols(m) columns and
// cols(m) - rank(m) rows.
BitMatrix nullspace(const BitMatrix& m);

// Basis (in RREF) of rowspace(a) ∩ rowspace(b), via elimination on the
// stacked block [a|a; b|0] (Zassenhaus). The result is checked to lie in both
// row spaces; a violation is a logic error.
BitMatrix intersect_row_spaces(const BitMatrix& a, const BitMatrix& b);

bool row_space_equal(const BitMatrix& a, const BitMatrix& b);

// Minimum Hamming weight over the nonzero vectors of rowspace(g), by a
// Gray-code walk over the 2^rank message space. Requires rank >= 1.
int min_weight_rowspace(const BitMatrix& g);

}  // namespace ecode
