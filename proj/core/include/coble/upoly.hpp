#pragma once

#include <vector>

#include "coble/fields.hpp"

// Dense univariate polynomials over a finite field, coefficients low -> high.
namespace coble::upoly {

using E = FiniteField::elem;
using UPoly = std::vector<E>;

void trim(UPoly& a);
int deg(const UPoly& a);  // -1 for zero
UPoly add(const FiniteField& f, const UPoly& a, const UPoly& b);
UPoly sub(const FiniteField& f, const UPoly& a, const UPoly& b);
UPoly mul(const FiniteField& f, const UPoly& a, const UPoly& b);
UPoly mod(const FiniteField& f, UPoly a, const UPoly& m);
void divrem(const FiniteField& f, UPoly a, const UPoly& m, UPoly& quot, UPoly& rem);
UPoly monic(const FiniteField& f, UPoly a);
UPoly gcd(const FiniteField& f, UPoly a, UPoly b);  // monic, zero if both zero
UPoly powmod(const FiniteField& f, UPoly base, uint64_t e, const UPoly& m);
E eval(const FiniteField& f, const UPoly& a, E x);
UPoly derivative(const FiniteField& f, const UPoly& a);

// distinct roots, sorted by packed value; throws on the zero polynomial
std::vector<E> roots(const FiniteField& f, const UPoly& a);

}  // namespace coble::upoly
