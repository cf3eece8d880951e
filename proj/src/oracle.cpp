#include "ecode/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ecode {

namespace {

// Doubled packing: a-plane in bits 0..n-1, c-plane in bits n..2n-1.
using packed = std::uint32_t;

void check_n(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("oracle scans are capped at n <= 8");
}

packed pack(const EVector& w) {
    packed x = 0;
    const int n = w.size();
    for (int i = 0; i < n; ++i) {
        EElem e = w.get(i);
        if (e.u) x |= packed(1) << i;
        if (e.v) x |= packed(1) << (n + i);
    }
    return x;
}

EVector unpack(int n, packed x) {
    EVector w(n);
    for (int i = 0; i < n; ++i)
        w.set(i, {bool((x >> i) & 1), bool((x >> (n + i)) & 1)});
    return w;
}

std::vector<packed> packed_codewords(const ECode& c) {
    const int k = c.dimension();
    std::vector<packed> base(k);
    for (int r = 0; r < k; ++r) {
        packed x = 0;
        for (int j = 0; j < 2 * c.length(); ++j)
            if (c.basis().get(r, j)) x |= packed(1) << j;
        base[r] = x;
    }
    std::vector<packed> out;
    out.reserve(size_t(1) << k);
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << k); ++m) {
        packed x = 0;
        for (int r = 0; r < k; ++r)
            if ((m >> r) & 1) x ^= base[r];
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// <w, z> in packed form: (parity(u_w & u_z), parity(v_w & u_z)).
bool inner_is_zero(packed w, packed z, int n) {
    const packed low = (packed(1) << n) - 1;
    packed uz = z & low;
    return !((std::popcount((w & low) & uz) | std::popcount(((w >> n) & low) & uz)) & 1);
}

std::vector<packed> packed_dual(const ECode& c, Side side) {
    const int n = c.length();
    check_n(n);
    std::vector<packed> code = packed_codewords(c);
    std::vector<packed> members;
    const std::uint32_t total = std::uint32_t(1) << (2 * n);
    for (std::uint32_t lex = 0; lex < total; ++lex) {
        packed z = pack(vector_at(n, lex));
        bool ok = true;
        for (packed w : code) {
            if ((side == Side::left || side == Side::two_sided) && !inner_is_zero(z, w, n)) {
                ok = false;
                break;
            }
            if ((side == Side::right || side == Side::two_sided) && !inner_is_zero(w, z, n)) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(z);
    }
    return members;
}

ECode code_from_packed(int n, const std::vector<packed>& words) {
    EMatrix g(0, n);
    for (packed x : words) g.append_row(unpack(n, x));
    return ECode::from_generators(g);
}

}  // namespace

std::uint32_t vector_count(int n) {
    check_n(n);
    return std::uint32_t(1) << (2 * n);
}

EVector vector_at(int n, std::uint32_t lex_index) {
    if (lex_index >= vector_count(n)) throw std::invalid_argument("lex index out of range");
    // Symbol ranks 0,1,2,3 = 0,k,t,z; coordinate 0 is the top base-4 digit.
    static constexpr EElem by_rank[4] = {e_zero, e_a, e_b, e_c};
    EVector w(n);
    for (int i = 0; i < n; ++i)
        w.set(i, by_rank[(lex_index >> (2 * (n - 1 - i))) & 3]);
    return w;
}

std::vector<EVector> all_codewords(const ECode& c) {
    check_n(c.length());
    std::vector<EVector> out;
    for (packed x : packed_codewords(c)) out.push_back(unpack(c.length(), x));
    return out;
}

std::vector<EVector> dual_members_by_definition(const ECode& c, Side side) {
    std::vector<EVector> out;
    for (packed x : packed_dual(c, side)) out.push_back(unpack(c.length(), x));
    return out;
}

ECode dual_by_definition(const ECode& c, Side side) {
    std::vector<packed> members = packed_dual(c, side);
    ECode d = code_from_packed(c.length(), members);
    if ((std::uint64_t(1) << d.dimension()) != members.size())
        throw std::logic_error("dual scan did not produce a submodule");
    return d;
}

ECode code_from_words(int n, const std::vector<EVector>& words) {
    EMatrix g(0, n);
    for (const EVector& w : words) g.append_row(w);
    return ECode::from_generators(g);
}

ECode hull_by_definition(const ECode& c, Side side) {
    std::vector<packed> code = packed_codewords(c);
    std::vector<packed> d = packed_dual(c, side);
    std::sort(d.begin(), d.end());
    std::vector<packed> both;
    std::set_intersection(code.begin(), code.end(), d.begin(), d.end(), std::back_inserter(both));
    return code_from_packed(c.length(), both);
}

int min_distance_by_definition(const ECode& c) {
    if (c.dimension() == 0) throw std::invalid_argument("min distance of the zero code is undefined");
    const int n = c.length();
    check_n(n);
    std::vector<packed> code = packed_codewords(c);
    const packed low = (packed(1) << n) - 1;
    int best = n + 1;
    for (size_t i = 0; i < code.size(); ++i) {
        for (size_t j = i + 1; j < code.size(); ++j) {
            packed x = code[i] ^ code[j];
            int w = std::popcount((x | (x >> n)) & low);
            if (w < best) best = w;
        }
    }
    return best;
}

}  // namespace ecode
