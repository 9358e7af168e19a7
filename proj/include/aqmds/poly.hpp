#pragma once

#include <vector>

#include "aqmds/gf.hpp"

namespace aqmds::gf {

/// Polynomial over GF(q), coefficients lowest degree first. Functions return
/// trimmed polynomials (no trailing zeros); the zero polynomial is empty.
using Poly = std::vector<Element>;

int degree(const Poly& a) noexcept;
void trim(Poly& a);

Poly poly_add(const FiniteField& f, const Poly& a, const Poly& b);
Poly poly_sub(const FiniteField& f, const Poly& a, const Poly& b);
Poly poly_mul(const FiniteField& f, const Poly& a, const Poly& b);
/// Remainder of a modulo b; b must be nonzero.
Poly poly_mod(const FiniteField& f, const Poly& a, const Poly& b);
Poly poly_gcd(const FiniteField& f, Poly a, Poly b);
Element poly_eval(const FiniteField& f, const Poly& a, Element x);

bool has_root(const FiniteField& f, const Poly& a);

/// Irreducibility by trial division against every monic polynomial of degree
/// 1..deg/2. Cost grows like q^(deg/2).
bool is_irreducible_trial_division(const FiniteField& f, const Poly& a);

/// Ben-Or test: gcd(x^(q^i) - x, a) = 1 for i = 1..deg/2.
bool is_irreducible_ben_or(const FiniteField& f, const Poly& a);

/// Root scan first (decisive for degree <= 3), then trial division while it
/// stays cheap, Ben-Or otherwise.
bool is_irreducible(const FiniteField& f, const Poly& a);

/// Lexicographically smallest monic irreducible polynomial of the given degree
/// over GF(q), ordering coefficient vectors as base-q integers (low degree first).
Poly find_irreducible(const FiniteField& f, int degree);

}  // namespace aqmds::gf
