"""Torus-character calculus.

A character is an integer 4-vector: the weight with which the torus of P^3
scales a one-dimensional eigenspace.  The character of a monomial is its
exponent vector; the character of a ratio of monomials is the difference.
Tangent spaces and bundle fibers are bags of characters with (usually
positive) integer multiplicities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

# Character = 4-tuple of ints
ZERO_CHAR = (0, 0, 0, 0)


def char_of(m):
    """Character of a monomial: its x-exponent vector (t-exponent must be 0)."""
    if m[4] != 0:
        raise ValueError(f"monomial has nonzero t-exponent: {m}")
    return m[:4]


def char_add(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def char_sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


class CharBag:
    """A signed multiset of characters.

    Equal characters merge by summing multiplicities; zero multiplicities
    disappear.  Bags reaching Chern evaluation must be effective (all
    multiplicities positive).
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        merged = {}
        if isinstance(entries, dict):
            entries = entries.items()
        for item in entries:
            if len(item) == 2 and isinstance(item[0], tuple):
                c, k = item
            else:
                c, k = item, 1
            if k:
                merged[c] = merged.get(c, 0) + k
                if not merged[c]:
                    del merged[c]
        self._entries = merged

    @classmethod
    def of_monomials(cls, monomials):
        return cls(char_of(m) for m in monomials)

    def entries(self):
        """Sorted (character, multiplicity) pairs."""
        return sorted(self._entries.items())

    def multiplicity(self, c):
        return self._entries.get(c, 0)

    def size(self):
        """Total multiplicity (signed)."""
        return sum(self._entries.values())

    def is_effective(self):
        return all(k > 0 for k in self._entries.values())

    def expand(self):
        """Characters repeated by multiplicity, sorted; requires effectiveness."""
        if not self.is_effective():
            raise ValueError("bag with negative multiplicities cannot be expanded")
        out = []
        for c, k in self.entries():
            out.extend([c] * k)
        return out

    def __add__(self, other):
        merged = dict(self._entries)
        for c, k in other._entries.items():
            merged[c] = merged.get(c, 0) + k
            if not merged[c]:
                del merged[c]
        bag = CharBag.__new__(CharBag)
        bag._entries = merged
        return bag

    def __sub__(self, other):
        merged = dict(self._entries)
        for c, k in other._entries.items():
            merged[c] = merged.get(c, 0) - k
            if not merged[c]:
                del merged[c]
        bag = CharBag.__new__(CharBag)
        bag._entries = merged
        return bag

    def contains(self, other):
        """Multiset containment other <= self."""
        return all(self._entries.get(c, 0) >= k for c, k in other._entries.items())

    def __contains__(self, c):
        return c in self._entries

    def __eq__(self, other):
        if not isinstance(other, CharBag):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return f"CharBag({self.entries()!r})"


@dataclass(frozen=True)
class WeightSpec:
    """Integer values assigned to x0..x3; must be pairwise distinct.

    A spec is only admissible once check_generic has confirmed that no
    tangent character specializes to zero (those are Bott denominators).
    """

    values: tuple

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        if len(values) != 4:
            raise ValueError("weight spec needs exactly 4 values")
        if len(set(values)) != 4:
            raise ValueError(f"weight spec values must be pairwise distinct: {values}")
        object.__setattr__(self, "values", values)


DEFAULT_WEIGHTS = WeightSpec((0, 1, 5, 18))
FALLBACK_WEIGHTS = WeightSpec((0, 1, 7, 23))


def specialize(c, spec):
    """Dot product of a character with the spec values."""
    v = spec.values
    return c[0] * v[0] + c[1] * v[1] + c[2] * v[2] + c[3] * v[3]


def grass_tangent(sub, ambient):
    """Tangent bag of a Grassmannian at a coordinate subspace.

    Hom(sub, ambient/sub) decomposes into lines of character q - a for q
    ranging over ambient minus sub and a over sub; the bag has size
    |sub| * (|ambient| - |sub|).
    """
    if not (sub.is_effective() and ambient.is_effective()):
        raise ValueError("grass_tangent needs effective bags")
    if not ambient.contains(sub):
        raise ValueError("sub is not contained in ambient")
    quotient = ambient - sub
    out = {}
    for q, kq in quotient._entries.items():
        for a, ka in sub._entries.items():
            c = char_sub(q, a)
            out[c] = out.get(c, 0) + kq * ka
    bag = CharBag.__new__(CharBag)
    bag._entries = {c: k for c, k in out.items() if k}
    return bag


def blowup_tangent(base, nml, e):
    """Tangent bag at a fixed point of the exceptional divisor over a blow-up.

    For the normal direction e, the fiber directions contribute n - e for
    every other normal character n, the base tangent comes along, and e
    itself is the normal direction of the exceptional divisor.  Total size
    is preserved.
    """
    if e not in nml:
        raise ValueError(f"direction {e} not in the normal bag")
    rest = nml - CharBag([e])
    shifted = {}
    for n, k in rest._entries.items():
        c = char_sub(n, e)
        shifted[c] = shifted.get(c, 0) + k
    return base + CharBag(shifted) + CharBag([e])


def elem_sym(k, values):
    """k-th elementary symmetric function, by truncated product accumulation."""
    n = len(values)
    if k < 0 or k > n:
        raise ValueError(f"elementary symmetric index {k} out of range 0..{n}")
    coeffs = [1] + [0] * k
    top = 0
    for v in values:
        top = min(top + 1, k)
        for i in range(top, 0, -1):
            coeffs[i] += v * coeffs[i - 1]
    return coeffs[k]


def check_generic(spec, tangent_bags):
    """True iff no character in any tangent bag specializes to zero."""
    for bag in tangent_bags:
        for c, _ in bag._entries.items():
            if specialize(c, spec) == 0:
                return False
    return True


def find_admissible(tangent_bags, preferred=DEFAULT_WEIGHTS, seed=0):
    """First admissible spec among the preferred one, the documented fallback,
    and seeded random distinct values up to 10^6."""
    for spec in (preferred, FALLBACK_WEIGHTS):
        if check_generic(spec, tangent_bags):
            return spec
    rng = random.Random(seed)
    for _ in range(1000):
        values = tuple(sorted(rng.sample(range(10**6), 4)))
        spec = WeightSpec(values)
        if check_generic(spec, tangent_bags):
            return spec
    raise RuntimeError("no admissible weight spec found")
