"""Integer polynomial factorization behind the fallback pairing route.

The factorization itself (squarefree split, modular factorization,
Hensel lifting, recombination) is delegated to sympy's univariate
machinery; this module owns the contract: content times irreducible
primitive factors with multiplicity, reproducing the input exactly.
"""

from __future__ import annotations

import sympy

from .laurent import LaurentPoly
from .rings import ZZ

_T = sympy.Symbol("t")


def _poly_to_sympy(p):
    base = p.shift(-p.min_deg)
    return sympy.Poly(dict(enumerate(base.coeffs)), _T, domain="ZZ")


def _poly_from_sympy(poly):
    coeffs = poly.all_coeffs()[::-1]
    return LaurentPoly.from_int_coeffs([int(c) for c in coeffs])


def int_poly_factor(p):
    """(content, [(irreducible primitive LaurentPoly, multiplicity), ...]).

    The t-power unit is stripped first (Laurent input), so the content
    times the product of the factors reproduces p up to its t^min_deg
    shift.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.ring is not ZZ:
        raise TypeError("int_poly_factor needs integer coefficients")
    content, raw = sympy.factor_list(_poly_to_sympy(p))
    factors = [(_poly_from_sympy(q), int(m)) for q, m in raw]
    return int(content), factors
