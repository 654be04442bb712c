"""Exact integer polynomials and rational generating functions.

Polynomials are dense lists of arbitrary-precision integer coefficients
(index = power of x) with trailing zeros stripped.  Rational generating
functions keep an integer numerator/denominator pair; the denominator
must have constant term +-1 so that the Taylor series is integral.
"""

from __future__ import annotations

from dataclasses import dataclass


class Poly:
    """Integer polynomial in one variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "Poly":
        return cls([0] * power + [coeff])

    @classmethod
    def from_terms(cls, terms) -> "Poly":
        """Build from an iterable of (power, coeff) pairs, summing duplicates."""
        out: dict[int, int] = {}
        for power, coeff in terms:
            out[power] = out.get(power, 0) + coeff
        if not out:
            return cls()
        cs = [0] * (max(out) + 1)
        for power, coeff in out.items():
            cs[power] = coeff
        return cls(cs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return Poly(cs)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self or not other:
            return Poly()
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    cs[i + j] += a * b
        return Poly(cs)

    def scale(self, k: int) -> "Poly":
        return Poly([k * c for c in self.coeffs])

    def shift(self, powers: int) -> "Poly":
        """Multiply by x**powers; negative powers require divisibility."""
        if powers >= 0:
            return Poly([0] * powers + list(self.coeffs))
        if any(self.coeffs[:(-powers)]):
            raise ValueError(f"polynomial not divisible by x^{-powers}")
        return Poly(self.coeffs[-powers:])

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return render_poly(self)


ONE = Poly([1])
X = Poly([0, 1])


def render_poly(p: Poly) -> str:
    """Ascending-power text, e.g. '1 - x - 2x^5 + x^6'."""
    if not p:
        return "0"
    parts = []
    for power, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            xs = "x" if power == 1 else f"x^{power}"
            body = xs if mag == 1 else f"{mag}{xs}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class RationalGF:
    """Ratio of integer polynomials with denominator constant term +1.

    Fractions are not reduced to lowest terms; use rational_equal for
    comparisons.
    """

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den[0] == 0:
            raise ValueError("denominator must have nonzero constant term")
        if abs(self.den[0]) != 1:
            raise ValueError("denominator constant term must be a unit")
        if self.den[0] == -1:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)

    def series(self, n_max: int) -> list[int]:
        return series_coefficients(self, n_max)

    def __str__(self) -> str:
        return f"({render_poly(self.num)}) / ({render_poly(self.den)})"

    def to_json_dict(self) -> dict:
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs)}


def series_coefficients(f: RationalGF, n_max: int) -> list[int]:
    """First n_max+1 Taylor coefficients of f, by exact long division."""
    out = []
    den = f.den.coeffs
    for n in range(n_max + 1):
        c = f.num[n]
        for j in range(1, min(n, len(den) - 1) + 1):
            c -= den[j] * out[n - j]
        out.append(c)
    return out


def rational_equal(f: RationalGF, g: RationalGF) -> bool:
    """Exact equality as rational functions (cross-multiplication)."""
    return f.num * g.den == g.num * f.den


def recurrence_to_gf(rec) -> RationalGF:
    """Generating function of a self-starting univariate recurrence.

    Numerator collects the Kronecker-delta source terms, denominator is
    1 minus the shift terms.
    """
    num = Poly.from_terms(rec.sources)
    den = ONE - Poly.from_terms(rec.shifts)
    return RationalGF(num, den)


def s_gf_from_b_gf(gb: RationalGF, q: int) -> RationalGF:
    """Shift a tiling generating function down by q empty-board terms.

    Returns x^-q * (gb - (1 - x^q)/(1 - x)), which requires the first
    q+1 series coefficients of gb to equal 1.
    """
    head = gb.series(q)
    for n, c in enumerate(head):
        if c != 1:
            raise ValueError(
                f"coefficient of x^{n} is {c}, expected 1 for all n <= q={q}"
            )
    one_minus_x = ONE - X
    xq_partial = ONE - Poly.monomial(q)  # 1 - x^q
    num = gb.num * one_minus_x - xq_partial * gb.den
    den = gb.den * one_minus_x
    return RationalGF(num.shift(-q), den)
