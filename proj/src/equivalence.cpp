#include "ecode/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ecode {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(n);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
}

bool Permutation::valid() const {
    std::vector<bool> seen(map.size(), false);
    for (int x : map) {
        if (x < 0 || x >= int(map.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation q;
    q.map.resize(map.size());
    for (int j = 0; j < int(map.size()); ++j) q.map[map[j]] = j;
    return q;
}

std::string cycle_string(const Permutation& p) {
    // map[j] = source of image j, so the functional digraph j -> map[j]
    // traced here prints each cycle of the underlying rearrangement.
    std::string out;
    std::vector<bool> seen(p.map.size(), false);
    for (int s = 0; s < int(p.map.size()); ++s) {
        if (seen[s] || p.map[s] == s) continue;
        out += "(";
        int j = s;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            out += (first ? "" : " ") + std::to_string(j + 1);
            first = false;
            j = p.map[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

BitVector apply_permutation(const BitVector& v, const Permutation& p) {
    if (v.size() != p.size() || !p.valid()) throw std::invalid_argument("bad permutation");
    BitVector out(v.size());
    for (int j = 0; j < v.size(); ++j) out.set(j, v.get(p.map[j]));
    return out;
}

BitMatrix apply_permutation(const BitMatrix& m, const Permutation& p) {
    if (m.cols() != p.size() || !p.valid()) throw std::invalid_argument("bad permutation");
    BitMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(r, p.map[j])) out.set(r, j, true);
    return out;
}

ECode apply_permutation(const ECode& c, const Permutation& p) {
    if (c.length() != p.size() || !p.valid()) throw std::invalid_argument("bad permutation");
    const int n = c.length();
    BitMatrix rows(0, 2 * n);
    for (int r = 0; r < c.dimension(); ++r) {
        BitVector src = c.basis().row_vector(r);
        BitVector dst(2 * n);
        for (int j = 0; j < n; ++j) {
            if (src.get(p.map[j])) dst.set(j, true);
            if (src.get(n + p.map[j])) dst.set(n + j, true);
        }
        rows.append_row(dst);
    }
    return ECode::from_doubled_basis(n, rows);
}

std::vector<long long> weight_enumerator(const BitMatrix& g) {
    RrefResult r = rref(g);
    const int k = r.reduced.rows();
    if (k >= 63) throw std::invalid_argument("rank too large for weight enumeration");
    std::vector<long long> counts(g.cols() + 1, 0);
    counts[0] = 1;
    BitVector cur(g.cols());
    for (word i = 1; i < (word(1) << k); ++i) {
        cur ^= r.reduced.row_vector(std::countr_zero(i));
        ++counts[cur.weight()];
    }
    return counts;
}

namespace {

constexpr int max_equiv_cols = 24;

struct CodeStats {
    int n = 0;
    int k = 0;
    BitMatrix reduced;
    std::vector<std::uint32_t> words;            // all 2^k codewords, packed
    std::vector<long long> wdist;                // weight enumerator
    std::vector<std::vector<int>> colsig;        // per column: counts by weight
    std::vector<std::vector<std::vector<int>>> pairsig;  // per column pair
};

CodeStats gather(const BitMatrix& g) {
    CodeStats st;
    st.n = g.cols();
    RrefResult r = rref(g);
    st.k = r.reduced.rows();
    st.reduced = std::move(r.reduced);
    st.words.reserve(size_t(1) << st.k);
    std::uint32_t cur = 0;
    st.words.push_back(0);
    for (std::uint32_t i = 1; i < (std::uint32_t(1) << st.k); ++i) {
        cur ^= std::uint32_t(st.reduced.packed_row(std::countr_zero(i)));
        st.words.push_back(cur);
    }
    st.wdist.assign(st.n + 1, 0);
    st.colsig.assign(st.n, std::vector<int>(st.n + 1, 0));
    st.pairsig.assign(st.n, std::vector<std::vector<int>>(st.n, std::vector<int>(st.n + 1, 0)));
    for (std::uint32_t w : st.words) {
        int wt = std::popcount(w);
        ++st.wdist[wt];
        std::uint32_t rest = w;
        while (rest) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            ++st.colsig[c][wt];
            std::uint32_t rest2 = rest;
            while (rest2) {
                int c2 = std::countr_zero(rest2);
                rest2 &= rest2 - 1;
                ++st.pairsig[c][c2][wt];
                ++st.pairsig[c2][c][wt];
            }
        }
    }
    return st;
}

int hull_dim(const BitMatrix& reduced) {
    return reduced.rows() - rank(mul_transpose(reduced, reduced));
}

struct Search {
    const CodeStats& a;
    const CodeStats& b;
    std::vector<int> order;            // source columns, most constrained first
    std::vector<std::vector<int>> cand;  // per source column
    std::vector<int> assign;           // source col -> target col, -1 unset
    std::vector<bool> used;            // target cols taken
    std::optional<Permutation> found;

    bool pair_consistent(int s, int t, int depth) const {
        for (int d = 0; d < depth; ++d) {
            int s2 = order[d];
            if (a.pairsig[s][s2] != b.pairsig[t][assign[s2]]) return false;
        }
        return true;
    }

    bool verify_and_build() {
        Permutation p;
        p.map.assign(a.n, 0);
        for (int s = 0; s < a.n; ++s) p.map[assign[s]] = s;
        if (rref(apply_permutation(a.reduced, p)).reduced == b.reduced) {
            found = p;
            return true;
        }
        return false;
    }

    bool dfs(int depth) {
        if (depth == a.n) return verify_and_build();
        int s = order[depth];
        for (int t : cand[s]) {
            if (used[t] || !pair_consistent(s, t, depth)) continue;
            used[t] = true;
            assign[s] = t;
            if (dfs(depth + 1)) return true;
            used[t] = false;
            assign[s] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Permutation> binary_equivalent(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("equivalence needs equal lengths");
    if (a.cols() > max_equiv_cols) throw std::invalid_argument("equivalence search is capped at 24 columns");
    const int n = a.cols();
    BitMatrix ra = rref(a).reduced, rb = rref(b).reduced;
    if (ra.rows() != rb.rows()) return std::nullopt;
    if (ra == rb) return Permutation::identity(n);
    if (n == 0) return Permutation::identity(0);

    CodeStats sa = gather(ra), sb = gather(rb);
    if (sa.wdist != sb.wdist) return std::nullopt;
    if (hull_dim(sa.reduced) != hull_dim(sb.reduced)) return std::nullopt;

    Search se{sa, sb, {}, {}, std::vector<int>(n, -1), std::vector<bool>(n, false), std::nullopt};
    se.cand.resize(n);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t)
            if (sa.colsig[s] == sb.colsig[t]) se.cand[s].push_back(t);
        if (se.cand[s].empty()) return std::nullopt;
    }
    se.order.resize(n);
    std::iota(se.order.begin(), se.order.end(), 0);
    std::stable_sort(se.order.begin(), se.order.end(),
                     [&](int x, int y) { return se.cand[x].size() < se.cand[y].size(); });
    se.dfs(0);
    return se.found;
}

std::optional<Permutation> e_equivalent(const ECode& c, const ECode& d) {
    if (!is_free(c) || !is_free(d)) throw std::invalid_argument("equivalence test requires free codes");
    if (c.length() != d.length()) throw std::invalid_argument("equivalence needs equal lengths");
    auto p = binary_equivalent(residue(c), residue(d));
    if (!p) return std::nullopt;
    // A free code is the plane square of its residue, so the residue witness
    // must carry the codes onto each other; anything else is a defect here.
    if (apply_permutation(c, *p) != d) throw std::logic_error("residue witness failed on the codes");
    return p;
}

}  // namespace ecode
