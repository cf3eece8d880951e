#include "ecode/code.hpp"

#include <bit>
#include <stdexcept>

namespace ecode {

namespace {

BitVector doubled(const BitVector& u, const BitVector& v) {
    const int n = u.size();
    BitVector out(2 * n);
    for (int i = 0; i < n; ++i) {
        if (u.get(i)) out.set(i, true);
        if (v.get(i)) out.set(n + i, true);
    }
    return out;
}

BitVector u_half(const BitVector& row, int n) {
    BitVector u(n);
    for (int i = 0; i < n; ++i) u.set(i, row.get(i));
    return u;
}

BitVector v_half(const BitVector& row, int n) {
    BitVector v(n);
    for (int i = 0; i < n; ++i) v.set(i, row.get(n + i));
    return v;
}

}  // namespace

ECode ECode::from_generators(const EMatrix& g) {
    const int n = g.cols();
    BitMatrix rows(0, 2 * n);
    for (int r = 0; r < g.rows(); ++r) {
        BitVector u = g.u.row_vector(r), v = g.v.row_vector(r);
        rows.append_row(doubled(u, v));       // x
        rows.append_row(doubled(u, BitVector(n)));  // a∘x
        rows.append_row(doubled(u, u));       // b∘x
    }
    return adopt(n, rows, false);
}

ECode ECode::from_doubled_basis(int n, const BitMatrix& rows) {
    if (rows.cols() != 2 * n) throw std::invalid_argument("doubled basis must have 2n columns");
    return adopt(n, rows, true);
}

bool ECode::contains(const EVector& w) const {
    if (w.size() != n_) throw std::invalid_argument("codeword length mismatch");
    return in_row_space({basis_, pivots_}, doubled(w.u, w.v));
}

EVector ECode::codeword(word message) const {
    if (dimension() < 63 && message >= (word(1) << dimension()))
        throw std::invalid_argument("message beyond code dimension");
    BitVector row(2 * n_);
    for (int i = 0; i < dimension(); ++i)
        if ((message >> i) & 1) row ^= basis_.row_vector(i);
    return {u_half(row, n_), v_half(row, n_)};
}

ECode ECode::adopt(int n, const BitMatrix& rows, bool check_closure) {
    RrefResult r = rref(rows);
    if (check_closure) {
        for (int i = 0; i < r.reduced.rows(); ++i) {
            BitVector u = u_half(r.reduced.row_vector(i), n);
            if (!in_row_space(r, doubled(u, BitVector(n))) ||
                !in_row_space(r, doubled(BitVector(n), u)))
                throw std::invalid_argument("row span is not closed under the ring actions");
        }
    }
    ECode c;
    c.n_ = n;
    c.basis_ = std::move(r.reduced);
    c.pivots_ = std::move(r.pivots);
    return c;
}

BitMatrix residue(const ECode& c) {
    const int n = c.length();
    BitMatrix rows(0, n);
    for (int r = 0; r < c.dimension(); ++r) rows.append_row(u_half(c.basis().row_vector(r), n));
    return rref(rows).reduced;
}

BitMatrix torsion(const ECode& c) {
    const int n = c.length();
    // Closure puts (0|u) in C for every residue word u, so the basis rows
    // with pivot >= n span exactly the sections over zero.
    BitMatrix rows(0, n);
    for (int r = 0; r < c.dimension(); ++r) {
        BitVector row = c.basis().row_vector(r);
        if (u_half(row, n).is_zero()) rows.append_row(v_half(row, n));
    }
    return rref(rows).reduced;
}

bool is_free(const ECode& c) { return residue(c) == torsion(c); }

ECode left_dual(const ECode& c) {
    // <z, w> = (u_z·u_w, v_z·u_w) vanishes for all w iff both planes of z
    // are orthogonal to the residue.
    const int n = c.length();
    BitMatrix nr = nullspace(residue(c));
    BitMatrix rows(0, 2 * n);
    BitVector zero(n);
    for (int r = 0; r < nr.rows(); ++r) {
        BitVector s = nr.row_vector(r);
        rows.append_row(doubled(s, zero));
        rows.append_row(doubled(zero, s));
    }
    return ECode::from_doubled_basis(n, rows);
}

ECode right_dual(const ECode& c) {
    // <w, z> = (u_w·u_z, v_w·u_z) vanishes for all w iff u_z is orthogonal
    // to every plane of C, i.e. to the torsion; v_z is unconstrained.
    const int n = c.length();
    BitMatrix planes(0, n);
    for (int r = 0; r < c.dimension(); ++r) {
        BitVector row = c.basis().row_vector(r);
        planes.append_row(u_half(row, n));
        planes.append_row(v_half(row, n));
    }
    BitMatrix s = nullspace(planes);
    BitMatrix rows(0, 2 * n);
    BitVector zero(n);
    for (int r = 0; r < s.rows(); ++r) rows.append_row(doubled(s.row_vector(r), zero));
    for (int j = 0; j < n; ++j) {
        BitVector e(n);
        e.set(j, true);
        rows.append_row(doubled(zero, e));
    }
    return ECode::from_doubled_basis(n, rows);
}

ECode dual(const ECode& c) {
    BitMatrix inter = intersect_row_spaces(left_dual(c).basis(), right_dual(c).basis());
    return ECode::from_doubled_basis(c.length(), inter);
}

namespace {

ECode meet(const ECode& c, const ECode& d) {
    return ECode::from_doubled_basis(c.length(), intersect_row_spaces(c.basis(), d.basis()));
}

}  // namespace

ECode left_hull(const ECode& c) { return meet(c, left_dual(c)); }
ECode right_hull(const ECode& c) { return meet(c, right_dual(c)); }
ECode hull(const ECode& c) { return meet(c, dual(c)); }

EMatrix hull_generator_free(const ECode& c) {
    if (!is_free(c)) throw std::invalid_argument("hull generator requires a free code");
    BitMatrix r = residue(c);
    BitMatrix h = intersect_row_spaces(r, nullspace(r));
    return scale_a(h);
}

int hull_rank(const ECode& c) {
    if (!is_free(c)) throw std::invalid_argument("hull rank requires a free code");
    BitMatrix g = residue(c);
    return g.rows() - rank(mul_transpose(g, g));
}

int min_distance(const ECode& c) {
    if (c.dimension() == 0) throw std::invalid_argument("min distance of the zero code is undefined");
    if (is_free(c)) {
        // Codewords are all plane pairs over the residue R; taking both
        // planes equal to a minimum-weight word of R shows d = minweight(R),
        // and any nonzero pair covers at least that support.
        return min_weight_rowspace(residue(c));
    }
    const int n = c.length();
    const int k = c.dimension();
    BitVector cur(2 * n);
    int best = n + 1;
    for (word i = 1; i < (word(1) << k); ++i) {
        cur ^= c.basis().row_vector(std::countr_zero(i));
        int w = 0;
        for (int j = 0; j < n; ++j)
            if (cur.get(j) || cur.get(n + j)) ++w;
        if (w < best) best = w;
    }
    return best;
}

CodeSummary summarize(const ECode& c) {
    CodeSummary s;
    s.n = c.length();
    s.free = is_free(c);
    s.k = s.free ? residue(c).rows() : c.dimension();
    if (c.dimension() > 0) s.d = min_distance(c);
    if (s.free) s.hull_rank = hull_rank(c);
    return s;
}

}  // namespace ecode
