#include "ecode/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace ecode {

namespace {

int words_for(int bits) { return (bits + word_bits - 1) / word_bits; }

void check_index(int i, int n, const char* what) {
    if (i < 0 || i >= n) throw std::out_of_range(std::string(what) + " index out of range");
}

}  // namespace

BitVector::BitVector(int len) : len_(len), w_(words_for(len), 0) {
    if (len < 0) throw std::invalid_argument("negative BitVector length");
}

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(int(bits.size()));
    for (int i = 0; i < int(bits.size()); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("bit string must be 0/1");
        v.set(i, bits[i] == '1');
    }
    return v;
}

bool BitVector::get(int i) const {
    check_index(i, len_, "BitVector");
    return (w_[i / word_bits] >> (i % word_bits)) & 1u;
}

void BitVector::set(int i, bool v) {
    check_index(i, len_, "BitVector");
    word m = word(1) << (i % word_bits);
    if (v)
        w_[i / word_bits] |= m;
    else
        w_[i / word_bits] &= ~m;
}

void BitVector::flip(int i) {
    check_index(i, len_, "BitVector");
    w_[i / word_bits] ^= word(1) << (i % word_bits);
}

int BitVector::weight() const {
    int n = 0;
    for (word x : w_) n += std::popcount(x);
    return n;
}

bool BitVector::is_zero() const {
    for (word x : w_)
        if (x) return false;
    return true;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("BitVector length mismatch");
    word acc = 0;
    for (size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), w_(size_t(rows) * wpr_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative BitMatrix shape");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_packed_rows(const std::vector<word>& rows, int cols) {
    if (cols > word_bits) throw std::invalid_argument("packed rows limited to 64 columns");
    word mask = cols == word_bits ? ~word(0) : (word(1) << cols) - 1;
    BitMatrix m(int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] & ~mask) throw std::invalid_argument("packed row has bits beyond cols");
        m.w_[r] = rows[r];
    }
    return m;
}

bool BitMatrix::get(int r, int c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "col");
    return (row(r)[c / word_bits] >> (c % word_bits)) & 1u;
}

void BitMatrix::set(int r, int c, bool v) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "col");
    word m = word(1) << (c % word_bits);
    if (v)
        row(r)[c / word_bits] |= m;
    else
        row(r)[c / word_bits] &= ~m;
}

word BitMatrix::packed_row(int r) const {
    check_index(r, rows_, "row");
    if (cols_ > word_bits) throw std::logic_error("packed_row on wide matrix");
    return wpr_ == 0 ? 0 : row(r)[0];
}

void BitMatrix::xor_row_into(int dst, int src) { xor_row_into(dst, row(src)); }

void BitMatrix::xor_row_into(int dst, std::span<const word> src) {
    auto d = row(dst);
    for (int i = 0; i < wpr_; ++i) d[i] ^= src[i];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    auto ra = row(a), rb = row(b);
    for (int i = 0; i < wpr_; ++i) std::swap(ra[i], rb[i]);
}

void BitMatrix::append_row(std::span<const word> src) {
    w_.insert(w_.end(), src.begin(), src.end());
    ++rows_;
}

void BitMatrix::append_row(const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row length mismatch");
    append_row(v.words());
}

void BitMatrix::append_zero_row() {
    w_.insert(w_.end(), size_t(wpr_), 0);
    ++rows_;
}

BitVector BitMatrix::row_vector(int r) const {
    BitVector v(cols_);
    auto src = row(r);
    auto dst = v.words();
    for (int i = 0; i < wpr_; ++i) dst[i] = src[i];
    return v;
}

int BitMatrix::row_weight(int r) const {
    int n = 0;
    for (word x : row(r)) n += std::popcount(x);
    return n;
}

bool BitMatrix::row_is_zero(int r) const {
    for (word x : row(r))
        if (x) return false;
    return true;
}

void BitMatrix::append_rows(const BitMatrix& m) {
    if (m.cols_ != cols_) throw std::invalid_argument("append_rows column mismatch");
    for (int r = 0; r < m.rows_; ++r) append_row(m.row(r));
}

RrefResult rref(const BitMatrix& m) {
    BitMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.get(i, c)) { p = i; break; }
        if (p < 0) continue;
        a.swap_rows(r, p);
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row_into(i, r);
        pivots.push_back(c);
        ++r;
    }
    BitMatrix out(0, a.cols());
    for (int i = 0; i < r; ++i) out.append_row(a.row(i));
    return {std::move(out), std::move(pivots)};
}

int rank(const BitMatrix& m) { return rref(m).reduced.rows(); }

bool in_row_space(const RrefResult& r, const BitVector& v) {
    if (v.size() != r.reduced.cols()) throw std::invalid_argument("in_row_space length mismatch");
    BitVector x = v;
    for (size_t i = 0; i < r.pivots.size(); ++i)
        if (x.get(r.pivots[i])) x ^= r.reduced.row_vector(int(i));
    return x.is_zero();
}

BitMatrix mul_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_transpose column mismatch");
    BitMatrix out(a.rows(), b.rows());
    for (int i = 0; i < a.rows(); ++i) {
        auto ra = a.row(i);
        for (int j = 0; j < b.rows(); ++j) {
            auto rb = b.row(j);
            word acc = 0;
            for (int t = 0; t < a.words_per_row(); ++t) acc ^= ra[t] & rb[t];
            if (std::popcount(acc) & 1) out.set(i, j, true);
        }
    }
    return out;
}

BitMatrix nullspace(const BitMatrix& m) {
    RrefResult r = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : r.pivots) is_pivot[p] = true;
    BitMatrix out(0, n);
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        BitVector v(n);
        v.set(c, true);
        for (size_t i = 0; i < r.pivots.size(); ++i)
            if (r.reduced.get(int(i), c)) v.set(r.pivots[i], true);
        out.append_row(v);
    }
    // Free columns ascend, so the unit coordinates already form an RREF.
    return out;
}

BitMatrix intersect_row_spaces(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("intersect column mismatch");
    const int n = a.cols();
    // Stack [a|a] over [b|0], eliminate on the left block; rows whose left
    // half is zero have right half in rowspace(a) ∩ rowspace(b).
    BitMatrix block(0, 2 * n);
    for (int r = 0; r < a.rows(); ++r) {
        BitVector v(2 * n);
        for (int c = 0; c < n; ++c)
            if (a.get(r, c)) { v.set(c, true); v.set(n + c, true); }
        block.append_row(v);
    }
    for (int r = 0; r < b.rows(); ++r) {
        BitVector v(2 * n);
        for (int c = 0; c < n; ++c)
            if (b.get(r, c)) v.set(c, true);
        block.append_row(v);
    }
    RrefResult red = rref(block);
    BitMatrix inter(0, n);
    for (int r = 0; r < red.reduced.rows(); ++r) {
        if (red.pivots[r] < n) continue;  // left half nonzero
        BitVector v(n);
        for (int c = 0; c < n; ++c)
            if (red.reduced.get(r, n + c)) v.set(c, true);
        inter.append_row(v);
    }
    RrefResult out = rref(inter);
    RrefResult ra = rref(a), rb = rref(b);
    for (int r = 0; r < out.reduced.rows(); ++r) {
        BitVector v = out.reduced.row_vector(r);
        if (!in_row_space(ra, v) || !in_row_space(rb, v))
            throw std::logic_error("intersection basis escapes an input row space");
    }
    return out.reduced;
}

bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return rref(a).reduced == rref(b).reduced;
}

int min_weight_rowspace(const BitMatrix& g) {
    RrefResult r = rref(g);
    const int k = r.reduced.rows();
    if (k == 0) throw std::invalid_argument("min weight of the zero space is undefined");
    if (k >= 63) throw std::invalid_argument("rank too large for exhaustive weight scan");
    BitVector cur(g.cols());
    int best = g.cols() + 1;
    // Gray walk: step i flips basis row ctz(i), visiting every nonzero
    // combination exactly once.
    for (word i = 1; i < (word(1) << k); ++i) {
        cur ^= r.reduced.row_vector(std::countr_zero(i));
        int w = cur.weight();
        if (w < best) best = w;
    }
    return best;
}

}  // namespace ecode
