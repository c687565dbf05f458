"""Exact Laurent polynomials over a pluggable coefficient ring.

A ``LaurentPoly`` is a finitely supported map from integer exponents of
t to coefficients: ``coeffs[i]`` holds the coefficient of
``t**(min_deg + i)``, with the first and last stored coefficients
nonzero (the zero polynomial stores nothing and has min_deg 0).
Negative exponents are first-class.

Everything is exact; there is no floating point anywhere.  Large
integer-coefficient multiplications and exact divisions are routed
through Kronecker substitution (packing the coefficient vector into a
single Python bigint), which is what keeps the census-scale
computations within budget; Z[omega]-coefficient products use a
bivariate packing of the same kind.
"""

from __future__ import annotations

from .rings import ZZ, GFp, NonExactDivision, QuotientRing, RingMismatch

import os

_SCHOOLBOOK_CUTOFF = 24


class DegreeLimitExceeded(RuntimeError):
    """Raised when a polynomial outgrows the TALEX_MAX_DEGREE guard."""


def _degree_cap():
    cap = os.environ.get("TALEX_MAX_DEGREE")
    return int(cap) if cap else None


def _pack(coeffs, width):
    """Pack integer coefficients into one bigint, low degree last shifted least."""
    v = 0
    for c in reversed(coeffs):
        v = (v << width) + c
    return v


def _unpack(value, width, count):
    """Invert _pack for signed digits of |digit| < 2**(width-1)."""
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    out = []
    for _ in range(count):
        d = value & mask
        if d >= half:
            d -= 1 << width
        value = (value - d) >> width
        out.append(d)
    return out


def _kron_mul_int(a, b):
    amax = max(abs(c) for c in a)
    bmax = max(abs(c) for c in b)
    bound = amax * bmax * min(len(a), len(b))
    width = bound.bit_length() + 2
    prod = _pack(a, width) * _pack(b, width)
    return _unpack(prod, width, len(a) + len(b) - 1)


def _kron_div_int(num, den):
    """Exact quotient of integer coefficient vectors, or None.

    Exactness of the polynomial division implies the packed integers
    divide exactly at every width, so a nonzero bigint remainder is a
    definitive "not divisible".  A zero remainder only proves the
    quotient after the decoded candidate passes re-multiplication
    (the decode is ambiguous when the width is too small for the true
    quotient coefficients, hence the doubling loop).
    """
    nq = len(num) - len(den) + 1
    if nq <= 0:
        return None
    width = max(max(abs(c) for c in num), max(abs(c) for c in den)).bit_length() + 8
    cap = width + len(num) + 64
    while True:
        q, r = divmod(_pack(num, width), _pack(den, width))
        if r != 0:
            return None
        qc = _unpack(q, width, nq)
        while qc and qc[-1] == 0:
            qc.pop()
        if qc and _kron_mul_int(qc, den) == list(num):
            return qc
        if not qc and not any(num):
            return [0]
        width *= 2
        if width > max(1 << 22, 16 * cap):
            return None


def _kron_mul_quot(a, b, ring):
    d = ring.degree
    slot = 2 * d - 1
    amax = max(max(abs(x) for x in c) if any(c) else 0 for c in a)
    bmax = max(max(abs(x) for x in c) if any(c) else 0 for c in b)
    bound = max(amax, 1) * max(bmax, 1) * min(len(a), len(b)) * d
    width = bound.bit_length() + 2

    def pack(coeffs):
        digits = []
        pad = (0,) * (slot - d)
        for c in coeffs:
            digits.extend(c)
            digits.extend(pad)
        return _pack(digits, width)

    prod = pack(a) * pack(b)
    count = (len(a) + len(b) - 1) * slot
    digits = _unpack(prod, width, count)
    out = []
    for k in range(len(a) + len(b) - 1):
        block = digits[k * slot : (k + 1) * slot]
        out.append(ring.from_coeffs(block))
    return out


class LaurentPoly:
    """A Laurent polynomial in t over ``ring``."""

    __slots__ = ("ring", "min_deg", "coeffs")

    def __init__(self, ring, min_deg, coeffs, *, _trusted=False):
        if _trusted:
            self.ring = ring
            self.min_deg = min_deg
            self.coeffs = tuple(coeffs)
            return
        coeffs = list(coeffs)
        lo = 0
        hi = len(coeffs)
        while hi > lo and ring.is_zero(coeffs[hi - 1]):
            hi -= 1
        while lo < hi and ring.is_zero(coeffs[lo]):
            lo += 1
        if lo == hi:
            self.ring = ring
            self.min_deg = 0
            self.coeffs = ()
            return
        cap = _degree_cap()
        if cap is not None and hi - lo - 1 > cap:
            raise DegreeLimitExceeded(
                f"polynomial span {hi - lo - 1} exceeds TALEX_MAX_DEGREE={cap}"
            )
        self.ring = ring
        self.min_deg = min_deg + lo
        self.coeffs = tuple(coeffs[lo:hi])

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, ring=ZZ):
        return cls(ring, 0, (), _trusted=True)

    @classmethod
    def const(cls, value, ring=ZZ):
        return cls(ring, 0, [ring.from_int(value) if isinstance(value, int) else value])

    @classmethod
    def one(cls, ring=ZZ):
        return cls.const(1, ring)

    @classmethod
    def t_power(cls, k, ring=ZZ):
        return cls(ring, k, [ring.one], _trusted=True)

    @classmethod
    def from_int_coeffs(cls, coeffs, min_deg=0, ring=ZZ):
        return cls(ring, min_deg, [ring.from_int(c) for c in coeffs])

    @classmethod
    def from_dict(cls, d, ring=ZZ):
        if not d:
            return cls.zero(ring)
        lo = min(d)
        hi = max(d)
        coeffs = [d.get(k, ring.zero) for k in range(lo, hi + 1)]
        return cls(ring, lo, coeffs)

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Largest exponent with a nonzero coefficient (0 for the zero poly)."""
        if not self.coeffs:
            return 0
        return self.min_deg + len(self.coeffs) - 1

    def coeff(self, k):
        i = k - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def support(self):
        return [
            self.min_deg + i
            for i, c in enumerate(self.coeffs)
            if not self.ring.is_zero(c)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.min_deg == other.min_deg
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        self._check_ring(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        ring = self.ring
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.degree, other.degree)
        out = [ring.zero] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg - lo + i] = c
        for i, c in enumerate(other.coeffs):
            j = other.min_deg - lo + i
            out[j] = ring.add(out[j], c)
        return LaurentPoly(ring, lo, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        ring = self.ring
        return LaurentPoly(
            ring, self.min_deg, tuple(ring.neg(c) for c in self.coeffs), _trusted=True
        )

    def __mul__(self, other):
        self._check_ring(other)
        ring = self.ring
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero(ring)
        a, b = self.coeffs, other.coeffs
        lo = self.min_deg + other.min_deg
        if ring is ZZ and len(a) + len(b) > _SCHOOLBOOK_CUTOFF:
            return LaurentPoly(ZZ, lo, _kron_mul_int(a, b))
        if isinstance(ring, QuotientRing) and len(a) + len(b) > _SCHOOLBOOK_CUTOFF:
            return LaurentPoly(ring, lo, _kron_mul_quot(a, b, ring))
        out = [ring.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if ring.is_zero(x):
                continue
            for j, y in enumerate(b):
                if not ring.is_zero(y):
                    out[i + j] = ring.add(out[i + j], ring.mul(x, y))
        return LaurentPoly(ring, lo, out)

    def scale(self, c):
        ring = self.ring
        if ring.is_zero(c):
            return LaurentPoly.zero(ring)
        return LaurentPoly(
            ring, self.min_deg, [ring.mul(c, x) for x in self.coeffs]
        )

    def shift(self, k):
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return LaurentPoly(self.ring, self.min_deg + k, self.coeffs, _trusted=True)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def negate_t(self):
        """The substitution t -> -t (degree-k coefficient times (-1)**k)."""
        ring = self.ring
        out = []
        for i, c in enumerate(self.coeffs):
            if (self.min_deg + i) % 2:
                out.append(ring.neg(c))
            else:
                out.append(c)
        return LaurentPoly(ring, self.min_deg, out, _trusted=True)

    def inflate(self, m):
        """The substitution t -> t**m (m >= 1)."""
        if self.is_zero:
            return self
        ring = self.ring
        out = {}
        for i, c in enumerate(self.coeffs):
            if not ring.is_zero(c):
                out[(self.min_deg + i) * m] = c
        return LaurentPoly.from_dict(out, ring)

    def reverse_t(self):
        """The substitution t -> 1/t."""
        return LaurentPoly(
            self.ring, -self.degree, tuple(reversed(self.coeffs)), _trusted=True
        )

    def eval_int(self, x):
        """Evaluate at an integer (ZZ coefficients, nonnegative min_deg)."""
        if self.ring is not ZZ:
            raise RingMismatch("eval_int needs integer coefficients")
        if self.is_zero:
            return 0
        if self.min_deg < 0:
            raise ValueError("eval_int needs a genuine polynomial")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.min_deg

    # -- division ----------------------------------------------------

    def divmod_poly(self, den):
        """Polynomial division by ``den`` whose leading coefficient is a unit.

        Works over any coefficient ring via ring.divexact on the
        leading coefficient; raises NonExactDivision if a leading
        division fails (caller falls back or reports).
        Returns (quotient, remainder) with deg(remainder) < deg(den).
        """
        self._check_ring(den)
        ring = self.ring
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return LaurentPoly.zero(ring), LaurentPoly.zero(ring)
        shift = self.min_deg - den.min_deg
        rem = list(self.coeffs)
        dc = den.coeffs
        lead = dc[-1]
        nq = len(rem) - len(dc) + 1
        if nq <= 0:
            return LaurentPoly.zero(ring), self
        q = [ring.zero] * nq
        for k in range(nq - 1, -1, -1):
            c = rem[k + len(dc) - 1]
            if ring.is_zero(c):
                continue
            qc = ring.divexact(c, lead)
            q[k] = qc
            for j, y in enumerate(dc):
                if not ring.is_zero(y):
                    rem[k + j] = ring.sub(rem[k + j], ring.mul(qc, y))
        quot = LaurentPoly(ring, shift, q)
        remainder = LaurentPoly(ring, self.min_deg, rem[: len(dc) - 1])
        return quot, remainder

    def exact_div(self, den):
        """The exact quotient self/den; NonExactDivision otherwise."""
        self._check_ring(den)
        ring = self.ring
        if den.is_zero:
            raise ZeroDivisionError("exact_div by zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero(ring)
        shift = self.min_deg - den.min_deg
        if ring is ZZ and len(self.coeffs) + len(den.coeffs) > _SCHOOLBOOK_CUTOFF:
            qc = _kron_div_int(list(self.coeffs), list(den.coeffs))
            if qc is not None:
                return LaurentPoly(ZZ, shift, qc)
            _, rem = self._rational_divmod(den)
            raise NonExactDivision("inexact polynomial division", remainder=rem)
        try:
            quot, rem = self.divmod_poly(den)
        except NonExactDivision:
            # a leading-coefficient division failed: the quotient is not
            # integral, so the division cannot be exact over this ring
            raise NonExactDivision("inexact polynomial division", remainder=self)
        if not rem.is_zero:
            raise NonExactDivision("inexact polynomial division", remainder=rem)
        return quot

    def _rational_divmod(self, den):
        """Division over the fraction field; quotient only if integral.

        Used for error reporting and for divisors whose leading
        coefficient is not a unit.  Supports ZZ and QuotientRing
        coefficients.
        """
        from fractions import Fraction

        ring = self.ring
        if ring is ZZ:
            rem = [Fraction(c) for c in self.coeffs]
            dc = [Fraction(c) for c in den.coeffs]
            nq = len(rem) - len(dc) + 1
            q = [Fraction(0)] * max(nq, 0)
            for k in range(nq - 1, -1, -1):
                c = rem[k + len(dc) - 1]
                if c:
                    qc = c / dc[-1]
                    q[k] = qc
                    for j, y in enumerate(dc):
                        rem[k + j] -= qc * y
            if all(f.denominator == 1 for f in q):
                quot = LaurentPoly(
                    ZZ, self.min_deg - den.min_deg, [int(f) for f in q]
                )
            else:
                quot = None
            rem_poly = LaurentPoly(
                ZZ,
                self.min_deg,
                [int(f) if f.denominator == 1 else 0 for f in rem],
            )
            if any(f.denominator != 1 for f in rem):
                rem_poly = self  # non-integral remainder: report the numerator
            return quot, rem_poly
        raise NonExactDivision(
            "inexact polynomial division", remainder=self
        )

    # -- normalization ----------------------------------------------

    def canonical(self):
        """Normalize modulo units +-t**k.

        Shift min_deg to 0, then flip the global sign so the lowest
        nonzero coefficient is positive (for quotient-ring
        coefficients: its first nonzero integer coordinate).
        """
        if self.is_zero:
            return LaurentPoly.zero(self.ring)
        p = LaurentPoly(self.ring, 0, self.coeffs, _trusted=True)
        if self.ring.is_negative(p.coeffs[0]):
            return -p
        return p

    def unit_equal(self, other):
        """Equality up to +-t**k."""
        return self.canonical() == other.canonical()

    # -- presentation ------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            k = self.min_deg + i
            if self.ring is ZZ:
                body = f"{abs(c)}" if k == 0 else (
                    f"{abs(c)}*t" if k == 1 else f"{abs(c)}*t^{k}"
                )
                sign = "-" if c < 0 else "+"
            else:
                body = f"({c})" if k == 0 else (
                    f"({c})*t" if k == 1 else f"({c})*t^{k}"
                )
                sign = "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    # -- JSON wire format ---------------------------------------------

    def to_json(self):
        """{"min_deg": int, "coeffs": [decimal strings]} (integer coefficients)."""
        if self.ring is not ZZ:
            raise RingMismatch("JSON encoding is defined for integer coefficients")
        return {"min_deg": self.min_deg, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls.from_int_coeffs(
            [int(s) for s in obj["coeffs"]], min_deg=int(obj["min_deg"])
        )

    # -- mod-p views ---------------------------------------------------

    def reduce_mod(self, p):
        """Image in (Z/p)[t^{+-1}] as a LaurentPoly over GFp(p)."""
        if self.ring is not ZZ:
            raise RingMismatch("mod-p reduction starts from integer coefficients")
        gf = GFp(p)
        return LaurentPoly(gf, self.min_deg, [c % p for c in self.coeffs])


def poly_arith(a, b, op):
    """Dispatch table used by the CLI; op in {add, sub, mul, negate_t}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "negate_t":
        return a.negate_t()
    raise ValueError(f"unknown op {op!r}")


def exact_div(num, den):
    return num.exact_div(den)


def modp_unit_equal(a, b, p):
    """Equality in (Z/p)[t^{+-1}] up to units c*t^k, c nonzero mod p."""
    fa = a.reduce_mod(p) if a.ring is ZZ else a
    fb = b.reduce_mod(p) if b.ring is ZZ else b
    if fa.is_zero or fb.is_zero:
        return fa.is_zero and fb.is_zero
    gf = fa.ring
    if len(fa.coeffs) != len(fb.coeffs):
        return False
    scale = gf.divexact(fb.coeffs[0], fa.coeffs[0])
    return all(
        gf.mul(scale, x) == y for x, y in zip(fa.coeffs, fb.coeffs)
    )


def gf_exact_div(num, den):
    """Exact division in (Z/p)[t]; NonExactDivision on failure."""
    q, r = num.divmod_poly(den)
    if not r.is_zero:
        raise NonExactDivision("inexact division mod p", remainder=r)
    return q


def cyclotomic_poly(m):
    """The m-th cyclotomic polynomial over the integers.

    z**m - 1 divided by the cyclotomic polynomials of the proper
    divisors of m; the divisions are exact by construction.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    num = LaurentPoly.from_int_coeffs([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            num = num.exact_div(cyclotomic_poly(d))
    return num
