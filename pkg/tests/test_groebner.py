import random

import pytest

from conftest import random_generators, random_vector

from semimod.errors import ResourceLimitExceededError
from semimod.fields import QQ, PrimeField
from semimod.groebner import (
    GroebnerLimits,
    SubmodulePresentation,
    buchberger,
    ideal_member,
    normal_form,
    s_vector,
    submodule_member,
)
from semimod.poly import OrderSpec, PolyRing, VectorPoly, unit_vector

POT = OrderSpec(module="pot")


@pytest.fixture
def R():
    return PolyRing(QQ, ("x", "y"))


@pytest.fixture
def pair_basis(R):
    x, y = R.variables()
    return [VectorPoly(R, [x * x, x * y]), VectorPoly(R, [x * y, y * y])]


def combine(cofactors, gens):
    total = None
    for c, g in zip(cofactors, gens):
        piece = c * g
        total = piece if total is None else total + piece
    return total


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------

def test_normal_form_of_generator(pair_basis):
    nf = normal_form(pair_basis[0], pair_basis)
    assert nf.remainder.is_zero()
    assert [str(c) for c in nf.cofactors] == ["1", "0"]


def test_normal_form_of_low_degree_vector(R, pair_basis):
    # hand division: every basis leading module-monomial has degree 2, so
    # the degree-1 input is already irreducible
    x, y = R.variables()
    f = VectorPoly(R, [x, y])
    nf = normal_form(f, pair_basis)
    assert nf.remainder == f
    assert all(c.is_zero() for c in nf.cofactors)


def test_normal_form_of_zero(R, pair_basis):
    zero = VectorPoly(R, [R.zero(), R.zero()])
    nf = normal_form(zero, pair_basis)
    assert nf.remainder.is_zero()
    assert all(c.is_zero() for c in nf.cofactors)


def test_normal_form_identity_holds(R):
    rng = random.Random(29)
    for _ in range(30):
        basis = random_generators(rng, R, 2)
        f = random_vector(rng, R, 2)
        nf = normal_form(f, basis)
        assert combine(nf.cofactors, basis) + nf.remainder == f


def test_normal_form_is_idempotent(R):
    rng = random.Random(31)
    for _ in range(20):
        basis = random_generators(rng, R, 2)
        f = random_vector(rng, R, 2)
        rem = normal_form(f, basis).remainder
        if not rem.is_zero():
            assert normal_form(rem, basis).remainder == rem


# ---------------------------------------------------------------------------
# buchberger
# ---------------------------------------------------------------------------

def test_unit_submodule_basis(R):
    basis = buchberger([unit_vector(R, 2, 0), unit_vector(R, 2, 1)])
    assert basis.elements == [unit_vector(R, 2, 1), unit_vector(R, 2, 0)]


def test_twisted_pair_basis_membership(R, pair_basis):
    x, y = R.variables()
    gb = buchberger(pair_basis)
    f = VectorPoly(R, [x, y])
    assert not normal_form(f, gb.elements).remainder.is_zero()
    assert normal_form(x * f, gb.elements).remainder.is_zero()
    assert normal_form(y * f, gb.elements).remainder.is_zero()


def assert_is_groebner(gb):
    """Independent oracle: every S-vector of basis pairs reduces to zero."""
    for i in range(len(gb.elements)):
        for j in range(i + 1, len(gb.elements)):
            s = s_vector(gb.elements[i], gb.elements[j], gb.order)
            if s is None or s.is_zero():
                continue
            assert normal_form(s, gb.elements, gb.order).remainder.is_zero()


def assert_provenance(gb):
    """Each basis element is an explicit combination of the kept inputs and
    each input reduces to zero against the basis."""
    for elem, rep in zip(gb.elements, gb.input_reps):
        assert combine(rep, gb.inputs) == elem
    for g in gb.inputs:
        assert normal_form(g, gb.elements, gb.order).remainder.is_zero()


def test_random_bases_satisfy_s_vector_oracle(R):
    rng = random.Random(37)
    for _ in range(40):
        gens = random_generators(rng, R, rng.randint(1, 2))
        gb = buchberger(gens)
        assert_is_groebner(gb)
        assert_provenance(gb)


def test_basis_is_reduced_and_monic(R):
    rng = random.Random(41)
    for _ in range(20):
        gens = random_generators(rng, R, 2)
        gb = buchberger(gens)
        for k, g in enumerate(gb.elements):
            lead = max(
                ((i, m) for i, e in enumerate(g.entries) for m in e.terms),
                key=gb.order.module_key,
            )
            assert g.entries[lead[0]].terms[lead[1]] == QQ.one_raw
            others = gb.elements[:k] + gb.elements[k + 1 :]
            if others:
                assert normal_form(g, others, gb.order).remainder == g


def test_mixed_component_pair_is_not_skipped(R):
    # classic trap: coprime leading monomials in the same component, but the
    # elements straddle components, so the pair still matters
    x, y = R.variables()
    gens = [VectorPoly(R, [x, R.one()]), VectorPoly(R, [y, R.zero()])]
    gb = buchberger(gens)
    probe = VectorPoly(R, [R.zero(), y])
    assert normal_form(probe, gb.elements).remainder.is_zero()
    assert_is_groebner(gb)


def test_zero_generators_dropped(R):
    zero = VectorPoly(R, [R.zero(), R.zero()])
    gb = buchberger([zero, unit_vector(R, 2, 0)])
    assert len(gb.elements) == 1
    gb_zero = buchberger([zero])
    assert gb_zero.elements == []


def test_resource_limits_raise(R):
    x, y = R.variables()
    gens = [VectorPoly(R, [x * x + y, x]), VectorPoly(R, [x * y + x, y])]
    with pytest.raises(ResourceLimitExceededError):
        buchberger(gens, limits=GroebnerLimits(max_pairs=1, max_degree=40))
    with pytest.raises(ResourceLimitExceededError):
        buchberger(
            [VectorPoly(R, [x**5, y]), VectorPoly(R, [y**5, x])],
            limits=GroebnerLimits(max_pairs=1000, max_degree=3),
        )


def test_determinism(R):
    rng = random.Random(43)
    gens = random_generators(rng, R, 2, count=3)
    gb1 = buchberger(gens)
    gb2 = buchberger(gens)
    assert gb1.elements == gb2.elements


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def test_twisted_pair_membership(R, pair_basis):
    x, y = R.variables()
    N = SubmodulePresentation(R, 2, pair_basis)
    assert not submodule_member(VectorPoly(R, [x, y]), N).member
    verdict = submodule_member(pair_basis[0], N)
    assert verdict.member
    assert [str(c) for c in verdict.certificate] == ["1", "0"]


def test_membership_certificates_reproduce(R):
    rng = random.Random(47)
    for _ in range(25):
        gens = random_generators(rng, R, 2)
        N = SubmodulePresentation(R, 2, gens)
        coeffs = [random_vector(rng, R, 1)[0] for _ in gens]
        f = combine(coeffs, gens)
        verdict = submodule_member(f, N)
        assert verdict.member
        assert combine(verdict.certificate, N.generators) == f


def test_membership_invariances(R):
    rng = random.Random(53)
    for _ in range(10):
        gens = random_generators(rng, R, 2, count=2)
        f = random_vector(rng, R, 2)
        base = submodule_member(f, SubmodulePresentation(R, 2, gens)).member
        permuted = submodule_member(
            f, SubmodulePresentation(R, 2, list(reversed(gens)))
        ).member
        scaled = submodule_member(
            f, SubmodulePresentation(R, 2, [g.entries[0].ring.const(3) * g for g in gens])
        ).member
        assert base == permuted == scaled


def test_zero_vector_is_member_everywhere(R):
    zero = VectorPoly(R, [R.zero(), R.zero()])
    assert submodule_member(zero, SubmodulePresentation.zero(R, 2)).member
    assert submodule_member(zero, SubmodulePresentation.unit(R, 2)).member


def test_unit_submodule_contains_everything(R):
    rng = random.Random(59)
    N = SubmodulePresentation.unit(R, 2)
    for _ in range(10):
        assert submodule_member(random_vector(rng, R, 2), N).member


def test_top_and_pot_verdicts_agree(R):
    rng = random.Random(61)
    for _ in range(20):
        gens = random_generators(rng, R, 2)
        f = random_vector(rng, R, 2)
        top = submodule_member(f, SubmodulePresentation(R, 2, gens)).member
        pot = submodule_member(f, SubmodulePresentation(R, 2, gens), POT).member
        assert top == pot


# ---------------------------------------------------------------------------
# ideals (rank 1)
# ---------------------------------------------------------------------------

def test_ideal_membership_examples(R):
    x, y = R.variables()
    # every element of (x^2, xy) vanishes to order >= 2 at the origin
    assert not ideal_member(x, [x * x, x * y]).member
    assert ideal_member(x**3, [x * x]).member
    assert ideal_member(R.one(), [x, R.one() - x]).member


def test_known_lex_basis():
    # frozen from an independent computer algebra system:
    # lex basis of (x^2 + 2xy^2, xy + 2y^3 - 1) is {x, y^3 - 1/2}
    from fractions import Fraction

    lex = OrderSpec(scalar="lex")
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.variables()
    f = x**2 + (x * y * y).scale(2)
    g = x * y + (y**3).scale(2) - R.one()
    gb = buchberger([VectorPoly(R, [p]) for p in (f, g)], lex)
    expected = {x, y**3 - R.const(Fraction(1, 2))}
    assert {e.entries[0] for e in gb.elements} == expected


def test_known_graded_basis():
    # graded basis of (x^3 - 2xy, x^2 y + x - 2y^2) is {x^2, xy, y^2 - x/2}
    from fractions import Fraction

    R = PolyRing(QQ, ("x", "y"))
    x, y = R.variables()
    f = x**3 - (x * y).scale(2)
    g = x * x * y + x - (y * y).scale(2)
    gb = buchberger([VectorPoly(R, [p]) for p in (f, g)])
    expected = {x * x, x * y, y * y - x.scale(Fraction(1, 2))}
    assert {e.entries[0] for e in gb.elements} == expected


def test_ideal_membership_over_f5():
    R5 = PolyRing(PrimeField(5), ("x", "y"))
    x, y = R5.variables()
    assert ideal_member(x * y + x, [x]).member
    assert not ideal_member(y, [x]).member
