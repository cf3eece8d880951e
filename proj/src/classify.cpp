#include "ecode/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace ecode {

namespace {

using row16 = std::uint16_t;

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// All RREFs with the given pivot columns, free entries driven by a binary
// counter (bit flips applied incrementally).
template <class Fn>
void emit_fills(int n, const std::vector<int>& piv, Fn&& fn) {
    const int k = int(piv.size());
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    struct Pos {
        int row;
        row16 mask;
    };
    std::vector<Pos> free_pos;
    for (int i = 0; i < k; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
            if (!is_piv[j]) free_pos.push_back({i, row16(1u << j)});
    row16 rows[16] = {};
    for (int i = 0; i < k; ++i) rows[i] = row16(1u << piv[i]);
    const std::uint64_t total = std::uint64_t(1) << free_pos.size();
    fn(rows);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t diff = idx ^ (idx - 1);
        while (diff) {
            int t = std::countr_zero(diff);
            diff &= diff - 1;
            rows[free_pos[t].row] ^= free_pos[t].mask;
        }
        fn(rows);
    }
}

int rank_packed(const row16* rows, int k, int n) {
    row16 r[16];
    for (int i = 0; i < k; ++i) r[i] = rows[i];
    int rr = 0;
    for (int c = 0; c < n && rr < k; ++c) {
        int p = -1;
        for (int i = rr; i < k; ++i)
            if ((r[i] >> c) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(r[rr], r[p]);
        for (int i = 0; i < k; ++i)
            if (i != rr && ((r[i] >> c) & 1)) r[i] ^= r[rr];
        ++rr;
    }
    return rr;
}

// Rows as bytes of a word, row i in byte i; only valid for n <= 8, k <= 8.
std::uint64_t pack_rows(const row16* rows, int k) {
    std::uint64_t x = 0;
    for (int i = 0; i < k; ++i) x |= std::uint64_t(rows[i] & 0xff) << (8 * i);
    return x;
}

void unpack_rows(std::uint64_t x, row16* rows, int k) {
    for (int i = 0; i < k; ++i) rows[i] = row16((x >> (8 * i)) & 0xff);
}

std::uint64_t rref_packed(std::uint64_t x, int k, int n) {
    row16 r[8];
    unpack_rows(x, r, k);
    int rr = 0;
    for (int c = 0; c < n && rr < k; ++c) {
        int p = -1;
        for (int i = rr; i < k; ++i)
            if ((r[i] >> c) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(r[rr], r[p]);
        for (int i = 0; i < k; ++i)
            if (i != rr && ((r[i] >> c) & 1)) r[i] ^= r[rr];
        ++rr;
    }
    return pack_rows(r, k);
}

std::uint64_t permute_cols(std::uint64_t x, int k, int n, const std::uint8_t* perm) {
    row16 r[8], out[8];
    unpack_rows(x, r, k);
    for (int i = 0; i < k; ++i) {
        row16 nb = 0;
        for (int j = 0; j < n; ++j) nb |= row16(((r[i] >> perm[j]) & 1) << j);
        out[i] = nb;
    }
    return pack_rows(out, k);
}

std::vector<std::vector<std::uint8_t>> all_perms(int n) {
    std::vector<std::uint8_t> p(n);
    for (int i = 0; i < n; ++i) p[i] = std::uint8_t(i);
    std::vector<std::vector<std::uint8_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct CellAccum {
    long long examined = 0;
    long long d_counts[13] = {};
    int best_d = 0;
    std::vector<std::uint64_t> cands;
};

struct SweepResult {
    std::vector<CellAccum> cells;  // index = hull rank, size k+1
};

void check_cell_args(int n, int k) {
    if (n < 1 || n > 8 || k < 1 || k > n)
        throw std::invalid_argument("classification sweep requires 1 <= k <= n <= 8");
}

SweepResult sweep(int n, int k, int workers, bool collect) {
    check_cell_args(n, k);
    workers = std::max(1, workers);
    auto combs = combinations(n, k);
    std::atomic<size_t> next{0};
    std::vector<SweepResult> local(workers);
    auto work = [&](int w) {
        auto& cells = local[w].cells;
        cells.resize(k + 1);
        while (true) {
            size_t ci = next.fetch_add(1);
            if (ci >= combs.size()) break;
            emit_fills(n, combs[ci], [&](const row16* rows) {
                // Gram matrix of the rows, packed one row per k-bit word.
                row16 gram[8];
                for (int i = 0; i < k; ++i) {
                    row16 g = 0;
                    for (int j = 0; j < k; ++j)
                        g |= row16((std::popcount(unsigned(rows[i] & rows[j])) & 1) << j);
                    gram[i] = g;
                }
                int l = k - rank_packed(gram, k, k);
                row16 cur = 0;
                int d = n + 1;
                for (std::uint32_t m = 1; m < (std::uint32_t(1) << k); ++m) {
                    cur ^= rows[std::countr_zero(m)];
                    d = std::min(d, std::popcount(unsigned(cur)));
                }
                CellAccum& cell = cells[l];
                ++cell.examined;
                ++cell.d_counts[d];
                if (collect) {
                    if (d > cell.best_d) {
                        cell.best_d = d;
                        cell.cands.clear();
                    }
                    if (d == cell.best_d) cell.cands.push_back(pack_rows(rows, k));
                }
            });
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    SweepResult merged;
    merged.cells.resize(k + 1);
    for (int l = 0; l <= k; ++l) {
        CellAccum& dst = merged.cells[l];
        for (auto& lr : local) {
            if (lr.cells.empty()) continue;
            const CellAccum& src = lr.cells[l];
            dst.examined += src.examined;
            for (int d = 0; d <= 12; ++d) dst.d_counts[d] += src.d_counts[d];
            dst.best_d = std::max(dst.best_d, src.best_d);
        }
        if (collect) {
            for (auto& lr : local) {
                if (lr.cells.empty()) continue;
                const CellAccum& src = lr.cells[l];
                if (src.best_d == dst.best_d)
                    dst.cands.insert(dst.cands.end(), src.cands.begin(), src.cands.end());
            }
            // Lexicographic order on the packed RREF makes the merge (and the
            // chosen representatives) independent of the worker split.
            std::sort(dst.cands.begin(), dst.cands.end());
        }
    }
    return merged;
}

std::vector<std::uint64_t> dedup_classes(const std::vector<std::uint64_t>& cands, int n, int k,
                                         const std::vector<std::vector<std::uint8_t>>& perms) {
    std::vector<std::uint64_t> reps;
    std::unordered_set<std::uint64_t> marked;
    marked.reserve(cands.size() * 2);
    for (std::uint64_t cand : cands) {
        if (marked.count(cand)) continue;
        reps.push_back(cand);
        // The candidate list holds every optimal code of the cell, so marking
        // the full orbit retires exactly the candidates equivalent to it.
        for (const auto& p : perms) marked.insert(rref_packed(permute_cols(cand, k, n, p.data()), k, n));
    }
    return reps;
}

BitMatrix matrix_of_packed(std::uint64_t x, int k, int n) {
    row16 rows[8];
    unpack_rows(x, rows, k);
    BitMatrix m(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if ((rows[i] >> j) & 1) m.set(i, j, true);
    return m;
}

}  // namespace

void enumerate_binary_subspaces(int n, int k, const std::function<void(const BitMatrix&)>& fn) {
    if (n < 0 || n > 12 || k < 0 || k > n)
        throw std::invalid_argument("subspace enumeration requires 0 <= k <= n <= 12");
    if (k == 0) {
        fn(BitMatrix(0, n));
        return;
    }
    for (const auto& piv : combinations(n, k)) {
        emit_fills(n, piv, [&](const row16* rows) {
            BitMatrix m(k, n);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j)
                    if ((rows[i] >> j) & 1) m.set(i, j, true);
            fn(m);
        });
    }
}

std::map<int, CellTally> census(int n, int k, int workers) {
    SweepResult res = sweep(n, k, workers, false);
    std::map<int, CellTally> out;
    for (int l = 0; l <= k; ++l) {
        const CellAccum& cell = res.cells[l];
        if (cell.examined == 0) continue;
        CellTally t;
        t.examined = cell.examined;
        for (int d = 0; d <= 12; ++d)
            if (cell.d_counts[d]) t.d_counts[d] = cell.d_counts[d];
        out[l] = std::move(t);
    }
    return out;
}

std::map<int, ClassRecord> classify_all(int n, int k, int workers) {
    SweepResult res = sweep(n, k, workers, true);
    auto perms = all_perms(n);
    std::map<int, ClassRecord> out;
    for (int l = 0; l <= k; ++l) {
        const CellAccum& cell = res.cells[l];
        if (cell.examined == 0) continue;
        ClassRecord rec;
        rec.n = n;
        rec.k = k;
        rec.hull_rank = l;
        rec.optimal_d = cell.best_d;
        rec.tally.examined = cell.examined;
        for (int d = 0; d <= 12; ++d)
            if (cell.d_counts[d]) rec.tally.d_counts[d] = cell.d_counts[d];
        for (std::uint64_t rep : dedup_classes(cell.cands, n, k, perms))
            rec.representatives.push_back(scale_a(matrix_of_packed(rep, k, n)));
        out[l] = std::move(rec);
    }
    return out;
}

ClassRecord classify(int n, int k, int hull_rank, int workers) {
    check_cell_args(n, k);
    if (hull_rank < 0 || hull_rank > k) throw std::invalid_argument("hull rank must lie in [0, k]");
    auto all = classify_all(n, k, workers);
    auto it = all.find(hull_rank);
    if (it != all.end()) return std::move(it->second);
    ClassRecord empty;
    empty.n = n;
    empty.k = k;
    empty.hull_rank = hull_rank;
    return empty;
}

TableReport verify_tables(const std::vector<FixtureEntry>& entries, int workers, bool check_counts) {
    TableReport rep;
    auto add = [&](const std::string& status, const std::string& what) {
        rep.items.push_back({status, what});
        if (status == "FAIL") ++rep.fails;
        if (status == "WARN") ++rep.warns;
    };

    struct Cell {
        std::vector<size_t> idx;  // entry indices in file order
    };
    std::vector<std::tuple<int, int, int>> cell_order;
    std::map<std::tuple<int, int, int>, Cell> cells;
    std::vector<ECode> codes(entries.size());

    for (size_t i = 0; i < entries.size(); ++i) {
        const FixtureEntry& e = entries[i];
        std::string tag = e.table + " [" + std::to_string(e.n) + "," + std::to_string(e.k) + "," +
                          std::to_string(e.d) + "] l=" + std::to_string(e.l);
        codes[i] = ECode::from_generators(e.generator);
        const ECode& c = codes[i];
        std::string diffs;
        if (c.length() != e.n) diffs += " n=" + std::to_string(c.length());
        if (!is_free(c)) {
            diffs += " not-free";
        } else {
            int k = residue(c).rows();
            if (k != e.k) diffs += " k=" + std::to_string(k);
            if (k > 0) {
                int d = min_distance(c);
                if (d != e.d) diffs += " d=" + std::to_string(d);
            }
            int l = hull_rank(c);
            if (l != e.l) diffs += " l=" + std::to_string(l);
        }
        if (diffs.empty())
            add("PASS", tag + " parameters recomputed");
        else
            add("FAIL", tag + " recomputation differs:" + diffs);

        auto key = std::make_tuple(e.n, e.k, e.l);
        if (!cells.count(key)) cell_order.push_back(key);
        cells[key].idx.push_back(i);
    }

    std::map<std::pair<int, int>, std::map<int, ClassRecord>> sweep_cache;
    for (const auto& key : cell_order) {
        auto [n, k, l] = key;
        const Cell& cell = cells[key];
        std::string cname = "cell [" + std::to_string(n) + "," + std::to_string(k) + "] l=" + std::to_string(l);
        if (n > 8) {
            add("WARN", cname + " outside the n <= 8 sweep envelope, optimum not checked");
            continue;
        }
        auto ck = std::make_pair(n, k);
        if (!sweep_cache.count(ck)) sweep_cache[ck] = classify_all(n, k, workers);
        auto it = sweep_cache[ck].find(l);
        int opt = it == sweep_cache[ck].end() ? 0 : it->second.optimal_d;
        for (size_t i : cell.idx) {
            if (entries[i].d == opt)
                add("PASS", entries[i].table + " d=" + std::to_string(opt) + " is the " + cname + " optimum");
            else
                add("FAIL", entries[i].table + " claims d=" + std::to_string(entries[i].d) + " but the " +
                                cname + " optimum is " + std::to_string(opt));
        }
        bool all_distinct = true;
        for (size_t a = 0; a < cell.idx.size(); ++a) {
            for (size_t b = a + 1; b < cell.idx.size(); ++b) {
                size_t ia = cell.idx[a], ib = cell.idx[b];
                if (!is_free(codes[ia]) || !is_free(codes[ib])) continue;
                if (codes[ia].length() != codes[ib].length()) continue;
                auto w = e_equivalent(codes[ia], codes[ib]);
                if (w) {
                    all_distinct = false;
                    add("FAIL", cname + " entries " + entries[ia].table + " and " + entries[ib].table +
                                    " are equivalent via " + cycle_string(*w));
                }
            }
        }
        if (all_distinct && cell.idx.size() > 1)
            add("PASS", cname + " entries pairwise inequivalent (" + std::to_string(cell.idx.size()) + ")");
        if (check_counts && it != sweep_cache[ck].end()) {
            size_t classes = it->second.representatives.size();
            if (classes != cell.idx.size())
                add("WARN", cname + " lists " + std::to_string(cell.idx.size()) + " codes but has " +
                                std::to_string(classes) + " optimal classes");
        }
    }
    return rep;
}

}  // namespace ecode
