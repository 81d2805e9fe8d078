"""Homogeneous-ideal toolkit: reduced Groebner bases, normal forms,
standard-monomial bases in a fixed degree, saturation with respect to t,
and Hilbert polynomials of monomial leading-term ideals.

Ideals live in the fixed ring of poly.py.  Generators must be homogeneous
in the x-variables (the deformation parameter t carries weight 0 in this
grading; the pipeline's deformed pencils q + t*m' are exactly of this kind).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import gbcore
from .poly import Polynomial, mono_divides, mono_key, sdim

X_VARS = range(4)
_LINEARS = [Polynomial.variable(i) for i in X_VARS]


@dataclass(frozen=True)
class Ideal:
    """A homogeneous ideal given by a non-empty list of nonzero generators."""

    generators: tuple

    def __init__(self, generators):
        gens = tuple(generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        for g in gens:
            if not g:
                raise ValueError("zero generator not allowed")
            if not g.is_x_homogeneous():
                raise ValueError(f"generator not homogeneous in x0..x3: {g}")
        object.__setattr__(self, "generators", gens)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis under the fixed order, plus its leading-term ideal."""

    basis: tuple
    leading_terms: tuple

    def ideal(self):
        return Ideal(self.basis)


def reduce_gb(I):
    """The unique reduced Groebner basis of I."""
    gb = gbcore.groebner([g.terms for g in I.generators], gbcore.key5)
    if not gb:
        raise ValueError("zero ideal")
    basis = tuple(Polynomial(g) for g in gb)
    return GroebnerBasis(basis, tuple(g.lm() for g in basis))


def monomial_gb(monomials):
    """Reduced basis of a monomial ideal: its minimal monomial generators."""
    monos = sorted(set(monomials), key=lambda m: (sum(m), mono_key(m)))
    minimal = []
    for m in monos:
        if not any(mono_divides(g, m) for g in minimal):
            minimal.append(m)
    if not minimal:
        raise ValueError("zero ideal")
    return GroebnerBasis(
        tuple(Polynomial.monomial(m) for m in minimal), tuple(minimal)
    )


def normal_form(p, G):
    """Remainder of p modulo G; no term is divisible by a leading term."""
    return Polynomial(gbcore.normal_form(p.terms, [g.terms for g in G.basis], gbcore.key5))


@lru_cache(maxsize=4096)
def _staircase_table(lead_x):
    """Per-variable caps and the minimal-x3-exponent table of a monomial set.

    The divisibility pattern of (a0,a1,a2) only depends on each coordinate
    capped at the maximal generator exponent, so the table is finite and is
    shared by the queries at all 49 interpolation degrees.
    """
    caps = tuple(max(g[v] for g in lead_x) for v in range(3))
    table = {}
    for i in range(caps[0] + 1):
        for j in range(caps[1] + 1):
            for k in range(caps[2] + 1):
                best = None
                for g in lead_x:
                    if g[0] <= i and g[1] <= j and g[2] <= k:
                        if best is None or g[3] < best:
                            best = g[3]
                table[i, j, k] = best
    return caps, table


def standard_monomials(lead_x, d):
    """Degree-d exponent 4-tuples not divisible by any of the given 4-tuples.

    Staircase enumeration: cells of the capped exponent grid are scanned
    instead of all C(d+3,3) monomials.
    """
    if d < 0:
        raise ValueError(f"degree must be non-negative, got {d}")
    if any(not any(g) for g in lead_x):
        return []
    if not lead_x:
        return [
            (a0, a1, a2, d - a0 - a1 - a2)
            for a0 in range(d + 1)
            for a1 in range(d - a0 + 1)
            for a2 in range(d - a0 - a1 + 1)
        ]
    caps, table = _staircase_table(tuple(lead_x))
    c0, c1, c2 = caps

    out = []
    for i in range(c0 + 1):
        for j in range(c1 + 1):
            for k in range(c2 + 1):
                bound = table[i, j, k]
                if bound == 0:
                    continue
                base = [i, j, k]
                free = [v for v, cap in enumerate(caps) if base[v] == cap]
                lower = i + j + k
                t_hi = d - lower
                if bound is not None:
                    t_hi = min(t_hi, bound - 1)
                if t_hi < 0:
                    continue
                if not free:
                    a3 = d - lower
                    if a3 <= t_hi:
                        out.append((i, j, k, a3))
                elif len(free) == 1:
                    f = free[0]
                    others = lower - base[f]
                    for a3 in range(t_hi + 1):
                        v = base.copy()
                        v[f] = d - a3 - others
                        out.append((v[0], v[1], v[2], a3))
                elif len(free) == 2:
                    f1, f2 = free
                    others = lower - base[f1] - base[f2]
                    for a3 in range(t_hi + 1):
                        s = d - a3 - others
                        for v1 in range(base[f1], s - base[f2] + 1):
                            v = base.copy()
                            v[f1] = v1
                            v[f2] = s - v1
                            out.append((v[0], v[1], v[2], a3))
                else:
                    for a3 in range(t_hi + 1):
                        s = d - a3
                        for v0 in range(base[0], s - base[1] - base[2] + 1):
                            for v1 in range(base[1], s - v0 - base[2] + 1):
                                out.append((v0, v1, s - v0 - v1, a3))
    return out


def kbase(G, d):
    """Degree-d monomials in x0..x3 outside the leading-term ideal, largest first.

    Their count is dim(S/I)_d.  Leading terms involving t cannot divide an
    x-monomial and are ignored.
    """
    lead_x = [m[:4] for m in G.leading_terms if m[4] == 0]
    std = standard_monomials(lead_x, d)
    std.sort(key=lambda m: mono_key(m + (0,)), reverse=True)
    return [m + (0,) for m in std]


def degree_part_dim(G, d):
    """Dimension of the ideal's degree-d slice: C(d+3,3) minus the kbase count."""
    return sdim(d) - len(kbase(G, d))


def ideal_times_linears(I):
    """The ideal generated by all products generator * x_i, deduplicated."""
    seen = []
    found = set()
    for g in I.generators:
        for x in _LINEARS:
            p = g * x
            if p not in found:
                found.add(p)
                seen.append(p)
    return Ideal(seen)


def set_t_zero(I):
    """Evaluate every generator at t = 0, dropping the ones that vanish."""
    gens = [q for q in (g.subs_t_zero() for g in I.generators) if q]
    if not gens:
        raise ValueError("all generators vanish at t=0")
    return Ideal(gens)


def _colon_t(gens):
    """Generators of I : t, via w-elimination on the intersection I & <t>."""
    mixed = [{(1,) + m: c for m, c in g.terms.items()} for g in gens]
    mixed.append({(0, 0, 0, 0, 0, 1): Fraction(1), (1, 0, 0, 0, 0, 1): Fraction(-1)})
    out = []
    for g in gbcore.groebner(mixed, gbcore.key6):
        if all(m[0] == 0 for m in g):
            # an element of I & <t>: every term is divisible by t
            out.append(Polynomial({m[1:5] + (m[5] - 1,): c for m, c in g.items()}))
    return out


def saturate_t(I):
    """I : t^infinity, by iterating the colon I : t until it stabilizes."""
    current = list(I.generators)
    signature = _gb_signature(current)
    while True:
        nxt = _colon_t(current)
        nxt_sig = _gb_signature(nxt)
        if nxt_sig == signature:
            return Ideal(nxt)
        current, signature = nxt, nxt_sig


def _gb_signature(gens):
    return tuple(
        tuple(sorted(g.terms.items()))
        for g in (Polynomial(h) for h in gbcore.groebner([g.terms for g in gens], gbcore.key5))
    )


# ---------------------------------------------------------------------------
# Hilbert polynomials of monomial quotients


@dataclass(frozen=True)
class HilbertPoly:
    """The eventual polynomial t -> dim(S/I)_t, with rational coefficients."""

    coefficients: tuple

    def __call__(self, n):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def degree(self):
        return len(self.coefficients) - 1

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
                var = "t" if k == 1 else f"t^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            parts.append(("-" if c < 0 else ("+" if parts else "")) + body)
        return "".join(parts) or "0"


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    keep = []
    for g in gens:
        if not any(mono_divides(h, g) for h in keep):
            keep.append(g)
    return keep


def _numerator(gens):
    """Hilbert series numerator of S/<gens> over (1-u)^4, as an int list."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if gens[0] == (0, 0, 0, 0):
        return [0]
    if all(sum(1 for e in g if e) == 1 for g in gens):
        num = [1]
        for g in gens:
            shifted = [0] * sum(g) + num
            num = [a - b for a, b in zip(num + [0] * (len(shifted) - len(num)), shifted)]
        return num
    counts = [sum(1 for g in gens if sum(1 for e in g if e) > 1 and g[v]) for v in range(4)]
    v = counts.index(max(counts))
    pivot = tuple(1 if i == v else 0 for i in range(4))
    plus = [g for g in gens if g[v] == 0] + [pivot]
    colon = [tuple(e - 1 if i == v and e else e for i, e in enumerate(g)) for g in gens]
    n_plus = _numerator(plus)
    n_colon = [0] + _numerator(colon)
    width = max(len(n_plus), len(n_colon))
    n_plus += [0] * (width - len(n_plus))
    n_colon += [0] * (width - len(n_colon))
    return [a + b for a, b in zip(n_plus, n_colon)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hilbert_polynomial(G):
    """Hilbert polynomial of S/I from the leading-term monomial ideal."""
    for m in G.leading_terms:
        if m[4] != 0:
            raise ValueError("Hilbert polynomial requires an ideal in x0..x3 only")
    num = _numerator([m[:4] for m in G.leading_terms])
    e = 4
    while e and sum(num) == 0:
        quotient = []
        acc = 0
        for c in num[:-1]:
            acc += c
            quotient.append(acc)
        num = quotient or [0]
        e -= 1
    if e == 0 or not any(num):
        return HilbertPoly(())
    # HF(t) = sum_j num[j] * C(t - j + e - 1, e - 1) for large t
    coeffs = [Fraction(0)] * e
    fact = 1
    for i in range(2, e):
        fact *= i
    for j, q in enumerate(num):
        if not q:
            continue
        term = [Fraction(q, fact)]
        for i in range(e - 1):
            term = _poly_mul(term, [Fraction(e - 1 - j - i), Fraction(1)])
        for k, c in enumerate(term):
            coeffs[k] += c
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return HilbertPoly(tuple(coeffs))
