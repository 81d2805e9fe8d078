import itertools
import random

import pytest

from nlocus.poly import monomials_of_degree, parse
from nlocus.torus import (
    CharBag,
    DEFAULT_WEIGHTS,
    WeightSpec,
    blowup_tangent,
    char_of,
    char_sub,
    check_generic,
    elem_sym,
    grass_tangent,
    specialize,
)


def mono(text):
    return parse(text).lm()


def bag(*texts):
    return CharBag.of_monomials([mono(t) for t in texts])


QUADRIC_BAG = CharBag.of_monomials(monomials_of_degree(2))
LINEAR_BAG = CharBag.of_monomials(monomials_of_degree(1))


def test_char_of():
    assert char_of(mono("x0*x1")) == (1, 1, 0, 0)
    assert char_of(mono("x0^2")) == (2, 0, 0, 0)
    assert char_of(mono("x3^4")) == (0, 0, 0, 4)
    with pytest.raises(ValueError):
        char_of((1, 0, 0, 0, 1))


def test_grass_tangent_pencil_point():
    tangent = grass_tangent(bag("x0^2", "x1^2"), QUADRIC_BAG)
    assert tangent.size() == 16
    assert tangent.is_effective()
    # the fraction x0*x1/x0^2
    assert char_sub(char_of(mono("x0*x1")), char_of(mono("x0^2"))) in tangent
    # the fraction x3^2/x1^2
    assert (0, -2, 0, 2) in tangent


def test_grass_tangent_trivial_cases():
    assert grass_tangent(QUADRIC_BAG, QUADRIC_BAG).size() == 0
    p3 = grass_tangent(bag("x0"), LINEAR_BAG)
    assert p3.size() == 3
    assert p3.entries() == [((-1, 0, 0, 1), 1), ((-1, 0, 1, 0), 1), ((-1, 1, 0, 0), 1)]


def test_grass_tangent_requires_containment():
    with pytest.raises(ValueError):
        grass_tangent(bag("x0"), QUADRIC_BAG)


def test_grass_tangent_size_and_linearity_random():
    rng = random.Random(5)
    chars = [tuple(rng.randint(-2, 2) for _ in range(4)) for _ in range(8)]
    for _ in range(30):
        ambient_list = rng.sample(chars, rng.randint(2, 6))
        k = rng.randint(1, len(ambient_list) - 1)
        sub_list = rng.sample(ambient_list, k)
        sub, ambient = CharBag(sub_list), CharBag(ambient_list)
        tangent = grass_tangent(sub, ambient)
        ns, na = sub.size(), ambient.size()
        assert tangent.size() == ns * (na - ns)
        total = [0, 0, 0, 0]
        for c, m in tangent.entries():
            for i in range(4):
                total[i] += m * c[i]
        quot = ambient - sub
        expect = [0, 0, 0, 0]
        for c, m in quot.entries():
            for i in range(4):
                expect[i] += ns * m * c[i]
        for c, m in sub.entries():
            for i in range(4):
                expect[i] -= (na - ns) * m * c[i]
        assert total == expect


def test_blowup_tangent_rank_one_normal():
    base = bag("x0", "x1")
    e = (1, -1, 0, 0)
    nml = CharBag([e])
    out = blowup_tangent(base, nml, e)
    assert out == base + CharBag([e])


def test_blowup_tangent_sizes_and_multiset_equation():
    rng = random.Random(6)
    base = CharBag([tuple(rng.randint(-2, 2) for _ in range(4)) for _ in range(7)])
    nml_chars = set()
    while len(nml_chars) < 9:
        nml_chars.add(tuple(rng.randint(-3, 3) for _ in range(4)))
    nml = CharBag(sorted(nml_chars))
    e = sorted(nml_chars)[0]
    out = blowup_tangent(base, nml, e)
    assert out.size() == base.size() + nml.size()
    shifted = CharBag([char_sub(n, e) for n in nml_chars if n != e])
    assert out == shifted + base + CharBag([e])


def test_blowup_tangent_requires_membership():
    with pytest.raises(ValueError):
        blowup_tangent(bag("x0"), bag("x1", "x2"), (5, 5, 5, 5))


# -- dual-route check against the appendix-style fraction arithmetic --------


def frac_reduce(num, den):
    """Reduce a (numerator multiset, denominator monomial) fraction pair."""
    common = den
    for m in num:
        common = tuple(min(a, b) for a, b in zip(common, m))
        if not any(common):
            break
    return [tuple(a - b for a, b in zip(m, common)) for m in num], tuple(
        a - b for a, b in zip(den, common)
    )


def frac_sum(f, g):
    (na, da), (nb, db) = f, g
    num = [tuple(x + y for x, y in zip(m, db)) for m in na]
    num += [tuple(x + y for x, y in zip(m, da)) for m in nb]
    return frac_reduce(num, tuple(x + y for x, y in zip(da, db)))


def frac_sub(f, g):
    """Subtraction on multisets: every numerator term of g must cancel."""
    (na, da), (nb, db) = f, g
    left = [tuple(x + y for x, y in zip(m, db)) for m in na]
    for m in nb:
        shifted = tuple(x + y for x, y in zip(m, da))
        left.remove(shifted)
    return frac_reduce(left, tuple(x + y for x, y in zip(da, db)))


def frac_div(f, g):
    """Division by a single-monomial fraction g = ([m], d): multiply by d/m."""
    (na, da), (nb, db) = f, g
    assert len(nb) == 1
    num = [tuple(x + y for x, y in zip(m, db)) for m in na]
    return frac_reduce(num, tuple(x + y for x, y in zip(da, nb[0])))


def frac_tgrass(sub_monos, ambient_monos):
    out = None
    rest = list(ambient_monos)
    for m in sub_monos:
        rest.remove(m)
    for s in sub_monos:
        piece = frac_reduce(list(rest), s[:4])
        out = piece if out is None else frac_sum(out, piece)
    return out


def frac_to_bag(f):
    num, den = f
    return CharBag([tuple(a - b for a, b in zip(m, den)) for m in num])


def test_blowup_tangent_matches_fraction_arithmetic():
    """Re-derive an E1 tangent bag with the literal fraction operations."""
    q1, q2 = mono("x0^2"), mono("x0*x1")
    quadrics = [m[:4] for m in monomials_of_degree(2)]
    linears = [m[:4] for m in monomials_of_degree(1)]
    big = frac_tgrass([q1[:4], q2[:4]], quadrics)
    tg_z = frac_sum(
        frac_tgrass([mono("x0")[:4], mono("x1")[:4]], linears),
        frac_tgrass([mono("x0")[:4]], linears),
    )
    nml = frac_sub(big, tg_z)
    assert frac_to_bag(nml).size() == 9

    # direction x2^2/(x0*x1): exceptional piece (nml - exc)/exc + tg_z + exc
    e = (-1, -1, 2, 0)
    exc_num = None
    for m in nml[0]:
        if tuple(a - b for a, b in zip(m, nml[1])) == e:
            exc_num = m
    assert exc_num is not None
    exc = frac_reduce([exc_num], nml[1])
    fiber = frac_div(frac_sub(nml, ([exc_num], nml[1])), exc)
    tangent = frac_sum(frac_sum(fiber, tg_z), exc)

    base = grass_tangent(bag("x0", "x1"), LINEAR_BAG) + grass_tangent(
        bag("x0"), LINEAR_BAG
    )
    normal = grass_tangent(bag("x0^2", "x0*x1"), QUADRIC_BAG) - base
    assert frac_to_bag(tangent) == blowup_tangent(base, normal, e)


# ---------------------------------------------------------------------------


def test_specialize():
    spec = DEFAULT_WEIGHTS
    assert spec.values == (0, 1, 5, 18)
    assert specialize((1, 1, 0, 0), spec) == 1
    assert specialize((0, 0, 0, 0), spec) == 0
    assert specialize((-2, 0, 0, 2), spec) == 36


def test_weight_spec_rejects_duplicates():
    with pytest.raises(ValueError):
        WeightSpec((0, 1, 1, 5))
    with pytest.raises(ValueError):
        WeightSpec((0, 1, 2))


def test_elem_sym_small():
    assert elem_sym(0, [7, 8, 9]) == 1
    assert elem_sym(2, [1, 2, 3]) == 11
    with pytest.raises(ValueError):
        elem_sym(4, [1, 2, 3])
    with pytest.raises(ValueError):
        elem_sym(-1, [1])


def test_elem_sym_top_is_product():
    values = [3, -2, 5, 7, -1, 4, 6, -3, 2, 9, -5, 8, 1, -4, 10, 11]
    prod = 1
    for v in values:
        prod *= v
    assert elem_sym(16, values) == prod


def test_elem_sym_matches_brute_force():
    rng = random.Random(9)
    for n in range(1, 13):
        values = [rng.randint(-9, 9) for _ in range(n)]
        for k in range(n + 1):
            brute = 0
            for combo in itertools.combinations(values, k):
                term = 1
                for v in combo:
                    term *= v
                brute += term
            assert elem_sym(k, values) == brute


def test_check_generic():
    bags = [CharBag([(1, -2, 1, 0), (0, -2, 0, 2)])]
    assert check_generic(DEFAULT_WEIGHTS, bags)
    # equal weight gaps kill x0*x2/x1^2
    assert not check_generic(WeightSpec((0, 1, 2, 3)), bags)


def test_check_generic_all_fixed_points(points):
    bags = [fp.tangent for fp in points]
    assert check_generic(DEFAULT_WEIGHTS, bags)
    assert not check_generic(WeightSpec((0, 1, 2, 3)), bags)
