#include "ecode/buildup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecode {

Method method_of_name(const std::string& name) {
    if (name == "I") return Method::I;
    if (name == "II") return Method::II;
    if (name == "III") return Method::III;
    if (name == "IV") return Method::IV;
    throw std::invalid_argument("unknown construction '" + name + "' (expected I, II, III or IV)");
}

std::string name_of_method(Method m) {
    switch (m) {
        case Method::I: return "I";
        case Method::II: return "II";
        case Method::III: return "III";
        case Method::IV: return "IV";
    }
    throw std::logic_error("bad method");
}

namespace {

// Row (x, y | a-scaled body), body taken from `tail` shifted two columns right.
EVector prefixed_row(bool x, bool y, const BitVector& tail) {
    const int n = tail.size();
    EVector row(n + 2);
    if (x) row.set(0, e_a);
    if (y) row.set(1, e_a);
    for (int i = 0; i < n; ++i)
        if (tail.get(i)) row.set(i + 2, e_a);
    return row;
}

}  // namespace

BuildOutput construct(Method m, const ECode& c, const BitVector& u, bool third_literal) {
    if (!is_free(c)) throw std::invalid_argument("construction input must be a free code");
    const int n = c.length();
    if (u.size() != n) throw std::invalid_argument("auxiliary vector must have length n");

    BitMatrix g = residue(c);
    BitMatrix h = nullspace(g);
    const int k = g.rows();
    const bool uu = dot(u, u);

    std::vector<bool> v(k), w(h.rows());
    bool any_v = false;
    for (int i = 0; i < k; ++i) {
        v[i] = dot(u, g.row_vector(i));
        any_v = any_v || v[i];
    }
    for (int j = 0; j < h.rows(); ++j) w[j] = dot(u, h.row_vector(j));

    switch (m) {
        case Method::I:
            if (!uu) throw std::invalid_argument("construction I needs <u,u> = 1 (odd weight u)");
            break;
        case Method::II:
            if (uu) throw std::invalid_argument("construction II needs <u,u> = 0 (even weight u)");
            if (any_v) throw std::invalid_argument("construction II needs u orthogonal to every residue row");
            break;
        case Method::III:
            if (uu) throw std::invalid_argument("construction III needs <u,u> = 0 (even weight u)");
            if (!any_v) throw std::invalid_argument("construction III needs <u, r_i> != 0 for some residue row");
            break;
        case Method::IV:
            if (uu) throw std::invalid_argument("construction IV needs <u,u> = 0 (even weight u)");
            break;
    }

    const int l = hull_rank(c);
    BuildOutput out;

    EMatrix gp(0, n + 2);
    if (m == Method::II) {
        gp.append_row(prefixed_row(true, true, u));
        for (int i = 0; i < k; ++i) gp.append_row(prefixed_row(false, false, g.row_vector(i)));
    } else if (m == Method::III) {
        gp.append_row(prefixed_row(true, true, u));
        for (int i = 0; i < k; ++i) {
            bool coeff = third_literal ? v[0] : v[i];
            gp.append_row(prefixed_row(coeff, false, g.row_vector(i)));
        }
    } else {  // I and IV share the generator shape
        gp.append_row(prefixed_row(true, false, u));
        for (int i = 0; i < k; ++i) gp.append_row(prefixed_row(v[i], v[i], g.row_vector(i)));
    }

    out.generator = std::move(gp);
    out.code = ECode::from_generators(out.generator);

    if (!is_free(out.code) || residue(out.code).rows() != k + 1 || out.code.length() != n + 2)
        throw std::logic_error("construction output is not a free [n+2, k+1] code");

    // The structured parity checks below pair with the per-row coefficients;
    // under the constant-coefficient variant the appended rows are no longer
    // orthogonal to them, so that mode gets its check straight from the dual
    // (free, residue = residue(C')^perp).
    EMatrix hp(0, n + 2);
    if (m == Method::III && third_literal) {
        hp = scale_a(nullspace(residue(out.code)));
    } else if (m == Method::I) {
        hp.append_row(prefixed_row(true, false, u));
        for (int j = 0; j < h.rows(); ++j) hp.append_row(prefixed_row(w[j], w[j], h.row_vector(j)));
    } else if (m == Method::IV) {
        hp.append_row(prefixed_row(false, true, u));
        for (int j = 0; j < h.rows(); ++j) hp.append_row(prefixed_row(w[j], w[j], h.row_vector(j)));
    } else {
        hp.append_row(prefixed_row(true, true, u));
        for (int j = 0; j < h.rows(); ++j) hp.append_row(prefixed_row(false, w[j], h.row_vector(j)));
    }
    out.parity_check = std::move(hp);

    out.hull_rank = hull_rank(out.code);
    if (m == Method::III && third_literal) {
        // No guarantee travels with the printed-form variant.
        out.predicted_hull_ranks = {};
        return out;
    }
    switch (m) {
        case Method::I:
        case Method::II: out.predicted_hull_ranks = {l + 1}; break;
        case Method::III: out.predicted_hull_ranks = {l, l + 1, l + 2}; break;
        case Method::IV: out.predicted_hull_ranks = {l}; break;
    }
    if (std::find(out.predicted_hull_ranks.begin(), out.predicted_hull_ranks.end(),
                  out.hull_rank) == out.predicted_hull_ranks.end())
        throw std::logic_error("construction " + name_of_method(m) + " produced hull rank " +
                               std::to_string(out.hull_rank) + " outside its guarantee");
    return out;
}

bool validate_parity_check(const BuildOutput& out) {
    return ECode::from_generators(out.parity_check) == dual(out.code);
}

}  // namespace ecode
