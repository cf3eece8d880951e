#include "ecode/ring.hpp"

#include <bit>
#include <stdexcept>

namespace ecode {

char symbol_of(EElem x) {
    if (x == e_zero) return '0';
    if (x == e_a) return 'k';
    if (x == e_b) return 't';
    return 'z';
}

EElem elem_of_symbol(char s) {
    switch (s) {
        case '0': return e_zero;
        case 'k': return e_a;
        case 't': return e_b;
        case 'z': return e_c;
        default: throw std::invalid_argument(std::string("unknown ring symbol '") + s + "'");
    }
}

EVector::EVector(BitVector u_, BitVector v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size()) throw std::invalid_argument("EVector plane length mismatch");
}

int EVector::weight() const {
    int n = 0;
    for (int i = 0; i < size(); ++i)
        if (u.get(i) || v.get(i)) ++n;
    return n;
}

std::string EVector::to_string() const {
    std::string s(size_t(size()), '0');
    for (int i = 0; i < size(); ++i) s[i] = symbol_of(get(i));
    return s;
}

EElem e_inner(const EVector& w, const EVector& z) {
    if (w.size() != z.size()) throw std::invalid_argument("e_inner length mismatch");
    return {dot(w.u, z.u), dot(w.v, z.u)};
}

EMatrix::EMatrix(BitMatrix u_, BitMatrix v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("EMatrix plane shape mismatch");
}

void EMatrix::append_row(const EVector& w) {
    u.append_row(w.u);
    v.append_row(w.v);
}

EMatrix scale_a(const BitMatrix& g) { return {g, BitMatrix(g.rows(), g.cols())}; }

}  // namespace ecode
