import random
from fractions import Fraction

import pytest

from nlocus.fixpoints import e1_deformation_ideals
from nlocus.ideals import (
    GroebnerBasis,
    HilbertPoly,
    Ideal,
    degree_part_dim,
    hilbert_polynomial,
    ideal_times_linears,
    kbase,
    monomial_gb,
    normal_form,
    reduce_gb,
    saturate_t,
    set_t_zero,
    standard_monomials,
)
from nlocus.poly import Polynomial, mono_divides, monomials_of_degree, parse, render, sdim


def ideal(*texts):
    return Ideal([parse(t) for t in texts])


def gb(*texts):
    return reduce_gb(ideal(*texts))


def test_ideal_rejects_degenerate_input():
    with pytest.raises(ValueError):
        Ideal([])
    with pytest.raises(ValueError):
        Ideal([parse("0")])
    with pytest.raises(ValueError):
        Ideal([parse("x0 + x1^2")])  # not homogeneous in the x-grading


def test_reduce_gb_monomial_ideal_is_itself():
    G = gb("x0^2", "x1^2")
    assert sorted(render(g) for g in G.basis) == ["x0^2", "x1^2"]


def test_reduce_gb_closed_orbit_ideal_is_itself():
    G = gb("x0^2", "x0*x1", "x0*x2^2", "x1^4")
    assert sorted(render(g) for g in G.basis) == ["x0*x1", "x0*x2^2", "x0^2", "x1^4"]


def test_reduce_gb_hand_buchberger_example():
    # S-polynomial chase done by hand for <x0*x1 + t*x2^2, x0*x2>
    G = gb("x0*x1 + t*x2^2", "x0*x2")
    assert sorted(render(g) for g in G.basis) == ["x0*x2", "x0^2*x1", "x2^2*t+x0*x1"]


def test_reduce_gb_membership():
    G = gb("x0*x1 + t*x2^2", "x0*x2")
    assert not normal_form(parse("x0^2*x1"), G)


def test_normal_form_examples():
    G = gb("x0^2", "x1^2")
    assert not normal_form(parse("x0^3"), G)
    assert normal_form(parse("x0*x1*x2 + x0^2"), G) == parse("x0*x1*x2")


def test_normal_form_of_generator_combinations():
    rng = random.Random(11)
    gens = [parse("x0*x1 + t*x2^2"), parse("x0*x2"), parse("x1^3")]
    G = reduce_gb(Ideal(gens))
    monos = monomials_of_degree(2)
    for _ in range(20):
        member = Polynomial.zero()
        for g in gens:
            m = monos[rng.randrange(len(monos))]
            member = member + g.mul_monomial(m, rng.randint(-3, 3))
        assert not normal_form(member, G)


def test_normal_form_quartics_against_orbit_ideal():
    G = gb("x0^2", "x0*x1", "x0*x2^2", "x1^4")
    survivors = [m for m in monomials_of_degree(4) if normal_form(Polynomial.monomial(m), G)]
    assert len(survivors) == 16
    assert len(kbase(G, 4)) == 16


def test_kbase_pencil_counts_and_members():
    G = gb("x0^2", "x1^2")
    kb5 = kbase(G, 5)
    assert len(kb5) == 20
    assert parse("x0*x1*x2^3").lm() in kb5
    assert parse("x0*x3^4").lm() in kb5
    assert len(kbase(G, 4)) == 16


def test_kbase_irrelevant_ideal_empty():
    G = gb("x0", "x1", "x2", "x3")
    assert kbase(G, 1) == []


def test_kbase_errors_on_negative_degree():
    with pytest.raises(ValueError):
        kbase(gb("x0"), -1)


def test_kbase_matches_naive_filter():
    # staircase enumeration vs the obvious divisibility filter
    samples = [
        gb("x0^2", "x1^2"),
        gb("x0^2", "x0*x1", "x0*x2^2", "x1^4"),
        gb("x0*x1", "x2*x3"),
        gb("x0^3", "x1*x2"),
    ]
    for G in samples:
        for d in range(0, 9):
            naive = [
                m
                for m in monomials_of_degree(d)
                if not any(mono_divides(lt, m) for lt in G.leading_terms)
            ]
            assert kbase(G, d) == naive


def test_standard_monomials_free_directions():
    # <x1^4>: complement grows cubically, staircase must handle 3 free axes
    assert len(standard_monomials([(0, 4, 0, 0)], 3)) == sdim(3)
    assert len(standard_monomials([(0, 4, 0, 0)], 6)) == sdim(6) - sdim(2)


def test_degree_part_dim():
    G = gb("x0^2", "x1^2")
    assert degree_part_dim(G, 4) == 19
    assert degree_part_dim(G, 5) == 36
    assert degree_part_dim(gb("x0", "x1", "x2", "x3"), 1) == 4


def test_kbase_plus_degree_part_is_full_space():
    for G in (gb("x0^2", "x1^2"), gb("x0*x1", "x2^2"), gb("x0^3")):
        for d in range(0, 8):
            assert len(kbase(G, d)) + degree_part_dim(G, d) == sdim(d)


def test_ideal_times_linears():
    I = ideal_times_linears(ideal("x0"))
    assert sorted(render(g) for g in I.generators) == ["x0*x1", "x0*x2", "x0*x3", "x0^2"]
    pencil4 = ideal_times_linears(ideal_times_linears(ideal("x0^2", "x1^2")))
    G = reduce_gb(pencil4)
    assert degree_part_dim(gb("x0^2", "x1^2"), 4) == 19
    assert len(G.basis) == 19


def test_set_t_zero():
    assert [render(g) for g in set_t_zero(ideal("x0 + t*x1")).generators] == ["x0"]
    assert [render(g) for g in set_t_zero(ideal("t*x0", "x1^2")).generators] == ["x1^2"]
    with pytest.raises(ValueError):
        set_t_zero(ideal("t*x0"))


def test_saturate_t_trivial_cases():
    S = saturate_t(ideal("t*x0"))
    assert [render(g) for g in S.generators] == ["x0"]
    S = saturate_t(ideal("x0*x1 + t*x2^2"))
    assert _canonical(S) == _canonical(ideal("x0*x1 + t*x2^2"))


def _canonical(I):
    return tuple(sorted(render(g) for g in reduce_gb(I).basis))


def test_saturate_t_deformation_ideal_oracle():
    """saturate_t output is characterized by: contains I, idempotent, and
    t-power multiples of its generators land back in I."""
    deformation = e1_deformation_ideals()
    assert len(deformation) == 216
    rng = random.Random(3)
    sample = rng.sample(deformation, 12)
    for I in sample:
        J = saturate_t(I)
        GI, GJ = reduce_gb(I), reduce_gb(J)
        # contains I
        for g in I.generators:
            assert not normal_form(g, GJ)
        # idempotent
        assert _canonical(saturate_t(J)) == _canonical(J)
        # every generator multiplied by some t-power lies in I
        t = Polynomial.variable(4)
        for g in J.generators:
            h = g
            for _ in range(8):
                if not normal_form(h, GI):
                    break
                h = h * t
            else:
                raise AssertionError(f"{render(g)} never re-enters the ideal")


def test_saturate_t_limit_matches_hand_computation():
    # deform x0*x1 -> x0*x1 + t*x2^2 inside the pencil <x0^2, x0*x1>
    gens = []
    for pg in (parse("x0^2"), parse("x0*x1 + t*x2^2")):
        for v in ("x0", "x1", "x2", "x3"):
            gens.append(pg * parse(v))
    limit = set_t_zero(saturate_t(Ideal(gens)))
    expected = {
        "x0^3", "x0^2*x1", "x0^2*x2", "x0^2*x3",
        "x0*x1^2", "x0*x1*x2", "x0*x1*x3", "x0*x2^2", "x2^4",
    }
    assert {render(g) for g in reduce_gb(limit).basis} == expected


def test_hilbert_polynomial_curves():
    assert hilbert_polynomial(gb("x0^2", "x1^2")).coefficients == (0, 4)
    assert hilbert_polynomial(gb("x1^2", "x2^2")).coefficients == (0, 4)
    assert hilbert_polynomial(gb("x1*x2", "x1^2", "x2^3")).coefficients == (0, 4)
    assert hilbert_polynomial(gb("x0^2", "x0*x1", "x0*x2^2", "x1^4")).coefficients == (0, 4)
    assert str(hilbert_polynomial(gb("x0^2", "x1^2"))) == "4*t"


def test_hilbert_polynomial_other_shapes():
    assert hilbert_polynomial(gb("x0", "x1")).coefficients == (1, 1)  # a line
    plane = hilbert_polynomial(gb("x0"))
    assert plane.coefficients == (Fraction(1), Fraction(3, 2), Fraction(1, 2))
    assert hilbert_polynomial(gb("x0", "x1", "x2", "x3")).coefficients == ()
    assert hilbert_polynomial(gb("x0", "x1", "x2", "x3"))(10) == 0


def test_hilbert_polynomial_matches_kbase_counts():
    for G in (gb("x0^2", "x1^2"), gb("x0*x1", "x2*x3"), gb("x0^2", "x0*x1", "x0*x2^2", "x1^4")):
        hp = hilbert_polynomial(G)
        for d in range(5, 11):
            assert hp(d) == len(kbase(G, d))


def test_hilbert_polynomial_rejects_t():
    G = reduce_gb(ideal("t*x0"))
    with pytest.raises(ValueError):
        hilbert_polynomial(G)


def test_monomial_gb_minimalizes():
    G = monomial_gb([(2, 0, 0, 0, 0), (3, 0, 0, 0, 0), (0, 2, 0, 0, 0)])
    assert sorted(render(g) for g in G.basis) == ["x0^2", "x1^2"]
    assert isinstance(G, GroebnerBasis)


def test_hilbert_poly_repr():
    assert str(HilbertPoly((Fraction(1), Fraction(1)))) == "t+1"
    assert str(HilbertPoly(())) == "0"
