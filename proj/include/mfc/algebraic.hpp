#pragma once

#include "mfc/cyclotomic.hpp"
#include "mfc/polynomial.hpp"

namespace mfc {

// Monic minimal polynomial over Q, from Galois power sums and Newton identities.
QPoly minimal_polynomial(const CycNum& x);
std::optional<IntPoly> integral_minimal_polynomial(const CycNum& x);

mpq_class norm(const CycNum& x);   // over Q(x)
mpq_class trace(const CycNum& x);  // over Q(x)

bool is_algebraic_integer(const CycNum& x);
bool is_algebraic_unit(const CycNum& x);
// Requires x real; throws std::domain_error otherwise.
bool is_totally_positive(const CycNum& x);

// Substitutes x into a rational polynomial.
CycNum evaluate(const QPoly& f, const CycNum& x);

}  // namespace mfc
