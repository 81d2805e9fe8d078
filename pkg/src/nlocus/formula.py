"""Exact interpolation of the degree counts and the closed-form target.

The degree of the locus is a polynomial in d for d >= 5 of degree at most
48 (= 3 times the dimension of the parameter space); interpolating the
computed values at 49 integer nodes therefore pins it down exactly.  The
published closed form is binomial(d-2,3) times a degree-29 integer
polynomial over 2^27 * 3^9 * 5^2 * 7^2 * 11 * 13.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

INTERPOLATION_DEGREE_BOUND = 48  # 3 * dim of the parameter space

# Coefficients of the inner degree-29 polynomial, highest power first.
INNER_COEFFS = (
    106984881,
    -3409514775,
    57226549167,
    -643910429259,
    5267988084411,
    -31628193518727,
    126939490699539,
    -144650681793207,
    -2701978741671631,
    28913126128882647,
    -182919422241175163,
    858473373993063183,
    -3061191057059772423,
    7448109470245631187,
    -3841505361473930575,
    -80644842327962348733,
    568059231910087276234,
    -2560865812030993315212,
    9159430737614259196104,
    -27608527286339077691280,
    71605637662357479581024,
    -160009170853633152594240,
    303685692157317249665152,
    -473993548940769326728704,
    571505502502703378479104,
    -459462480152611231457280,
    111908571251948243582976,
    251116612534424272896000,
    -328452832055501940326400,
    136886449647246114816000,
)

DIVISOR = 2**27 * 3**9 * 5**2 * 7**2 * 11 * 13


@dataclass(frozen=True)
class UnivariateRationalPoly:
    """A polynomial in d with rational coefficients, stored low degree first."""

    coefficients: tuple

    def __init__(self, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return UnivariateRationalPoly(
            [
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(n)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UnivariateRationalPoly([c * other for c in self.coefficients])
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return UnivariateRationalPoly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        """Exact polynomial division with remainder."""
        rem = list(self.coefficients)
        div = other.coefficients
        if not div:
            raise ZeroDivisionError("division by the zero polynomial")
        q = [Fraction(0)] * max(len(rem) - len(div) + 1, 0)
        for k in range(len(rem) - len(div), -1, -1):
            c = rem[k + len(div) - 1] / div[-1]
            q[k] = c
            for i, dc in enumerate(div):
                rem[k + i] -= c * dc
        return UnivariateRationalPoly(q), UnivariateRationalPoly(rem)

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "d" if k == 1 else f"d^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            parts.append(("-" if c < 0 else ("+" if parts else "")) + body)
        return "".join(parts)


def interpolate(nodes):
    """The unique polynomial through the nodes, by Newton divided differences."""
    nodes = list(nodes)
    if len(nodes) < 2:
        raise ValueError("interpolation needs at least 2 nodes")
    xs = [Fraction(d) for d, _ in nodes]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must have distinct d values")
    coeffs = [Fraction(v) for _, v in nodes]
    for k in range(len(nodes) - 1):
        for i in range(len(nodes) - 1, k, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - 1 - k])
    # expand the Newton form into standard coefficients
    poly = UnivariateRationalPoly([coeffs[-1]])
    for k in range(len(nodes) - 2, -1, -1):
        poly = poly * UnivariateRationalPoly([-xs[k], 1]) + UnivariateRationalPoly(
            [coeffs[k]]
        )
    return poly


def closed_form():
    """The published degree polynomial, assembled exactly.

    binomial(d-2,3) times the 30-coefficient inner polynomial, divided by
    2^27 * 3^9 * 5^2 * 7^2 * 11 * 13.
    """
    inner = UnivariateRationalPoly(list(reversed(INNER_COEFFS)))
    binom = (
        UnivariateRationalPoly([-2, 1])
        * UnivariateRationalPoly([-3, 1])
        * UnivariateRationalPoly([-4, 1])
        * Fraction(1, 6)
    )
    return binom * inner * Fraction(1, DIVISOR)


@dataclass(frozen=True)
class ComparisonReport:
    equal: bool
    first_mismatch: int | None
    left: Fraction | None
    right: Fraction | None

    def __str__(self):
        if self.equal:
            return "equal"
        return (
            f"mismatch at degree {self.first_mismatch}:"
            f" {self.left} != {self.right}"
        )


def compare(a, b):
    """Coefficientwise equality report; lists the first mismatch if any."""
    n = max(len(a.coefficients), len(b.coefficients))
    for k in range(n):
        ca = a.coefficients[k] if k < len(a.coefficients) else Fraction(0)
        cb = b.coefficients[k] if k < len(b.coefficients) else Fraction(0)
        if ca != cb:
            return ComparisonReport(False, k, ca, cb)
    return ComparisonReport(True, None, None, None)
