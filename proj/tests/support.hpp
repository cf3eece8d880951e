#pragma once

// Shared test utilities: independent reference implementations (plain
// bool-matrix elimination, product-formula subspace counts, exhaustive
// weight scans), small builders for matrices from symbol strings, random
// object generators, and the theorem battery run over random codes.

#include <random>
#include <string>
#include <vector>

#include "ecode/classify.hpp"
#include "ecode/code.hpp"
#include "ecode/equivalence.hpp"
#include "ecode/gf2.hpp"
#include "ecode/oracle.hpp"
#include "ecode/ring.hpp"

namespace ecode::test {

// Gaussian binomial [n k]_2 by the product formula; every prefix of the
// product is itself a subspace count, so the stepwise division is exact.
inline unsigned long long q_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned long long num = (1ull << (n - k + i)) - 1;
        unsigned long long den = (1ull << i) - 1;
        r = r * num / den;
    }
    return r;
}

// Textbook row elimination on an int matrix, no bit packing: the second
// implementation backing rank checks.
inline int naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    const int rows = int(m.size()), cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = 0; i < rows; ++i)
            if (i != r && (m[i][c] & 1))
                for (int j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[r][j]) & 1;
        ++r;
    }
    return r;
}

inline std::vector<std::vector<int>> to_ints(const BitMatrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

// Exhaustive subset-sum weight scan, independent of the Gray-code walk.
inline int naive_min_weight(const BitMatrix& g) {
    auto rows = to_ints(g);
    const int k = int(rows.size()), cols = g.cols();
    int best = cols + 1;
    for (unsigned long long m = 1; m < (1ull << k); ++m) {
        std::vector<int> acc(cols, 0);
        for (int i = 0; i < k; ++i)
            if ((m >> i) & 1)
                for (int j = 0; j < cols; ++j) acc[j] ^= rows[i][j];
        int w = 0;
        for (int j = 0; j < cols; ++j) w += acc[j];
        if (w >= 1 && w < best) best = w;
    }
    return best;
}

inline BitVector bits(const std::string& s) { return BitVector::from_string(s); }

inline BitMatrix bmat(const std::vector<std::string>& rows) {
    BitMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == '1') m.set(int(r), int(c), true);
    return m;
}

inline EVector evec(const std::string& s) {
    EVector w(int(s.size()));
    for (size_t i = 0; i < s.size(); ++i) w.set(int(i), elem_of_symbol(s[i]));
    return w;
}

inline EMatrix emat(const std::vector<std::string>& rows) {
    EMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.set(int(r), int(c), elem_of_symbol(rows[r][c]));
    return m;
}

inline BitMatrix random_bitmatrix(std::mt19937_64& rng, int rows, int cols) {
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

inline EMatrix random_ematrix(std::mt19937_64& rng, int rows, int cols) {
    EMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, EElem{bool(rng() & 1), bool(rng() & 1)});
    return m;
}

inline ECode random_free_code(std::mt19937_64& rng, int n, int k = -1) {
    if (k < 0) k = int(rng() % (n + 1));
    return ECode::from_generators(scale_a(random_bitmatrix(rng, k, n)));
}

// Mixed population: half explicit a-lifts (free), half arbitrary generator
// matrices (frequently non-free).
inline ECode random_code(std::mt19937_64& rng, int n) {
    if (rng() & 1) return random_free_code(rng, n);
    int m = int(rng() % (n + 1));
    return ECode::from_generators(random_ematrix(rng, m, n));
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
    Permutation p = Permutation::identity(n);
    for (int i = n - 1; i > 0; --i) std::swap(p.map[i], p.map[size_t(rng() % (i + 1))]);
    return p;
}

inline bool rowspace_subset(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix stack = b;
    stack.append_rows(a);
    return rank(stack) == rank(b);
}

// The full identity battery over one code; empty result means every identity
// holds, otherwise the label of the first failing one.
inline std::string theorem_failures(const ECode& c) {
    const int n = c.length();
    const BitMatrix r = residue(c), t = torsion(c);
    const BitMatrix rp = nullspace(r), tp = nullspace(t);
    const ECode ld = left_dual(c), rd = right_dual(c), dd = dual(c);
    const ECode lh = left_hull(c), rh = right_hull(c), hh = hull(c);
    const bool fr = is_free(c);
    const bool zero = c.dimension() == 0;
    const BitMatrix full = BitMatrix::identity(n);

    auto eq = [](const BitMatrix& a, const BitMatrix& b) { return row_space_equal(a, b); };

    if (!eq(residue(ld), rp) || !eq(torsion(ld), rp)) return "left dual residue/torsion";
    if (!eq(residue(rd), tp)) return "right dual residue";
    if (!eq(torsion(rd), full)) return "right dual torsion";
    if (!eq(residue(dd), tp)) return "two-sided dual residue";
    if (!eq(torsion(dd), rp)) return "two-sided dual torsion";

    if (!is_free(ld)) return "left dual freeness";
    if (is_free(rd) != zero) return "right dual free iff zero code";
    if (is_free(dd) != fr) return "two-sided dual freeness";
    if (c.dimension() + dd.dimension() != 2 * n) return "dual size law";

    if (!eq(residue(lh), intersect_row_spaces(r, rp))) return "left hull residue";
    if (!eq(torsion(rh), t)) return "right hull torsion";
    if (!eq(residue(hh), intersect_row_spaces(r, tp))) return "two-sided hull residue";
    if (!eq(torsion(hh), intersect_row_spaces(rp, t))) return "two-sided hull torsion";

    const BitMatrix hull_r = intersect_row_spaces(r, rp), hull_t = intersect_row_spaces(t, tp);
    if (!rowspace_subset(residue(hh), hull_r)) return "hull residue containment";
    if (!rowspace_subset(hull_t, torsion(hh))) return "hull torsion containment";
    if (fr && !eq(residue(hh), hull_r)) return "free hull residue equality";
    if (fr && !eq(torsion(hh), hull_t)) return "free hull torsion equality";

    if (dual(dd) != c) return "double dual";
    if (fr && left_dual(ld) != c) return "double left dual (free)";
    if (fr && left_dual(rd) != c) return "left dual of right dual (free)";
    if (eq(t, full) && right_dual(ld) != c) return "right dual of left dual (full torsion)";
    if (r.rows() == 0 && eq(t, full) && right_dual(rd) != c) return "double right dual";

    if (hull(dd) != hh) return "hull of dual";
    if (fr && left_hull(ld) != lh) return "left hull of left dual (free)";
    if (fr && left_hull(rd) != rh) return "left hull of right dual (free)";
    if (fr && eq(r, rp) && right_hull(ld) != lh) return "right hull of left dual (self-dual residue)";
    if (intersect_row_spaces(r, tp).rows() == 0 && eq(t, full) && right_hull(rd) != rh)
        return "right hull of right dual";

    if (fr) {
        if (lh != hh) return "free left hull equals hull";
        if (!is_free(hh)) return "free hull freeness";
        if (hull_rank(c) != hull_r.rows()) return "hull rank vs binary hull dim";
        if (hull_rank(c) != r.rows() - rank(mul_transpose(r, r))) return "hull rank Gram formula";
        if (ECode::from_generators(hull_generator_free(c)) != hh) return "hull generator";
    }
    return "";
}

// Closed forms against the definition scans; n <= 6 keeps the 4^n loops fast.
inline std::string oracle_failures(const ECode& c) {
    if (dual_by_definition(c, Side::left) != left_dual(c)) return "left dual vs scan";
    if (dual_by_definition(c, Side::right) != right_dual(c)) return "right dual vs scan";
    if (dual_by_definition(c, Side::two_sided) != dual(c)) return "two-sided dual vs scan";
    if (hull_by_definition(c, Side::left) != left_hull(c)) return "left hull vs scan";
    if (hull_by_definition(c, Side::right) != right_hull(c)) return "right hull vs scan";
    if (hull_by_definition(c, Side::two_sided) != hull(c)) return "two-sided hull vs scan";
    if (c.dimension() > 0 && min_distance_by_definition(c) != min_distance(c))
        return "min distance vs pairwise scan";
    return "";
}

}  // namespace ecode::test
