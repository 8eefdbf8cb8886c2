#include "mfc/algebraic.hpp"

#include <stdexcept>

namespace mfc {

QPoly minimal_polynomial(const CycNum& x) {
    if (x.is_rational()) return QPoly({-x.coeff(0), mpq_class(1)});
    long k = algebraic_degree(x);
    long phi = field(x.conductor()).phi;
    mpq_class ratio = qq(k, phi);
    std::vector<mpq_class> P(k + 1), e(k + 1);
    CycNum xp = x;
    for (long j = 1; j <= k; ++j) {
        P[j] = field_trace(xp) * ratio;
        if (j < k) xp *= x;
    }
    e[0] = 1;
    for (long j = 1; j <= k; ++j) {
        mpq_class s = 0;
        for (long i = 1; i <= j; ++i) {
            mpq_class t = e[j - i] * P[i];
            if (i % 2 == 1) s += t;
            else s -= t;
        }
        e[j] = s / j;
    }
    std::vector<mpq_class> c(k + 1);
    for (long j = 0; j <= k; ++j) c[k - j] = (j % 2 == 0) ? e[j] : mpq_class(-e[j]);
    return QPoly(std::move(c));
}

std::optional<IntPoly> integral_minimal_polynomial(const CycNum& x) {
    return IntPoly::from_qpoly(minimal_polynomial(x));
}

mpq_class norm(const CycNum& x) {
    QPoly f = minimal_polynomial(x);
    mpq_class c = f.at(0);
    return f.degree() % 2 == 0 ? c : mpq_class(-c);
}

mpq_class trace(const CycNum& x) {
    QPoly f = minimal_polynomial(x);
    return -f.at(f.degree() - 1);
}

bool is_algebraic_integer(const CycNum& x) {
    if (x.is_integral_coeffs()) return true;
    return integral_minimal_polynomial(x).has_value();
}

bool is_algebraic_unit(const CycNum& x) {
    auto f = integral_minimal_polynomial(x);
    if (!f) return false;
    return abs(f->coeffs().back()) == 1;
}

bool is_totally_positive(const CycNum& x) {
    if (!x.is_real()) throw std::domain_error("is_totally_positive: element is not real");
    return all_roots_positive(minimal_polynomial(x));
}

CycNum evaluate(const QPoly& f, const CycNum& x) {
    CycNum r(0);
    for (long i = f.degree(); i >= 0; --i) r = r * x + CycNum(f.c[i]);
    return r;
}

}  // namespace mfc
