"""Operator algebra on class-indexed exterior blocks, plus the prime scans."""

import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torushecke.errors import BudgetShortfall
from torushecke.exterior import MultiVector
from torushecke.classnumber import real_quadratic_field
from torushecke.galois import find_generator, pth_character
from torushecke.hecke import (
    ZERO_TARGET_VERIFICATION_FLOOR,
    CohomologyClass,
    HeckeElement,
    compute_tp,
    hecke_apply,
    hecke_multiply,
    scan_t1,
    spanning_set,
    t1_primes,
    unit_functional,
)
from torushecke.ideals import unit_ideal
from torushecke.primes import residue_field, residue_image
from torushecke.rayclass import ray_class_group
from torushecke.units import e_units


def _group2():
    F = real_quadratic_field(3)
    return ray_class_group(F, unit_ideal(F))


def _scale_element(h, c):
    return HeckeElement(
        h.p, h.rank, h.degree, tuple((z, om.scale(c)) for z, om in h.terms)
    )


# --------------------------------------------------------------- algebra laws


def test_shift_convention_is_inverse_multiply():
    """Applying shift(z) to an indicator supports it at z^-1 * a, literally."""
    G = _group2()
    p, rank = 5, 3
    for z in range(G.order):
        op = HeckeElement.shift(z, p, rank)
        for a in range(G.order):
            image = hecke_apply(op, CohomologyClass.indicator(p, rank, a, G.order), G)
            expect = G.multiply(G.inverse(z), a)
            for b, comp in enumerate(image.components):
                assert comp.is_zero() == (b != expect)


def test_nontrivial_shift_swaps_the_two_components():
    G = _group2()
    op = HeckeElement.shift(1, 5, 1)
    one_0 = CohomologyClass.indicator(5, 1, 0, 2)
    one_1 = CohomologyClass.indicator(5, 1, 1, 2)
    assert hecke_apply(op, one_0, G) == one_1
    assert hecke_apply(op, one_1, G) == one_0


def test_shifts_compose_through_the_group():
    G = _group2()
    p, rank = 7, 2
    for z1 in range(2):
        for z2 in range(2):
            prod = hecke_multiply(
                HeckeElement.shift(z1, p, rank), HeckeElement.shift(z2, p, rank), G
            )
            assert prod == HeckeElement.shift(G.multiply(z1, z2), p, rank)


def _operator(p, rank, degree, entries):
    terms = []
    for z, values in entries:
        if degree == 0:
            om = MultiVector.scalar(p, rank, values[0])
        else:
            om = MultiVector.from_vector(p, rank, values)
        terms.append((z, om))
    return HeckeElement(p, rank, degree, tuple(terms))


@st.composite
def operator_pair(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    rank = 3
    degs = draw(st.tuples(st.integers(0, 1), st.integers(0, 1)))
    ops = []
    for degree in degs:
        entries = []
        for z in range(2):
            if draw(st.booleans()):
                width = 1 if degree == 0 else rank
                values = tuple(draw(st.integers(0, p - 1)) for _ in range(width))
                entries.append((z, values))
        if not entries:
            entries.append((0, (1,) * (1 if degree == 0 else rank)))
        ops.append(_operator(p, rank, degree, entries))
    return p, ops[0], ops[1]


@settings(max_examples=100, derandomize=True, deadline=None)
@given(operator_pair())
def test_products_graded_commute(pair):
    """H H' = (-1)^(deg deg') H' H over an honest rank-2 class group."""
    p, h1, h2 = pair
    G = _group2()
    sign = (-1) ** (h1.degree * h2.degree) % p
    lhs = hecke_multiply(h1, h2, G)
    rhs = _scale_element(hecke_multiply(h2, h1, G), sign)
    assert lhs == rhs


@settings(max_examples=60, derandomize=True, deadline=None)
@given(operator_pair(), st.integers(0, 1), st.integers(0, 1))
def test_multiply_matches_composition_of_actions(pair, a, start_degree):
    p, h1, h2 = pair
    if h1.degree + h2.degree + start_degree > 3:
        return
    G = _group2()
    c = CohomologyClass.indicator(p, 3, a, G.order)
    if start_degree:
        seed = _operator(p, 3, 1, [(0, (1, 2 % p, 0))])
        c = hecke_apply(seed, c, G)
    both = hecke_apply(hecke_multiply(h1, h2, G), c, G)
    nested = hecke_apply(h1, hecke_apply(h2, c, G), G)
    assert both == nested


def test_degree_zero_orbit_of_indicator_has_size_h_plus(F2, seven2):
    G = ray_class_group(F2, seven2)
    assert G.order == 12
    start = CohomologyClass.indicator(3, 1, 1, G.order)
    orbit = {hecke_apply(HeckeElement.shift(z, 3, 1), start, G) for z in range(G.order)}
    assert len(orbit) == G.order


def test_shift_action_is_a_permutation(F2, seven2):
    G = ray_class_group(F2, seven2)
    rng = random.Random(20260819)
    indicators = [CohomologyClass.indicator(5, 1, a, G.order) for a in range(G.order)]
    for _ in range(10):
        z = rng.randrange(G.order)
        op = HeckeElement.shift(z, 5, 1)
        images = [hecke_apply(op, c, G) for c in indicators]
        assert len(set(images)) == G.order
        assert set(images) == set(indicators)


def test_cohomology_block_arithmetic():
    c = CohomologyClass.indicator(5, 2, 0, 3)
    assert c.add(c.scale(4)).is_zero()
    assert c.flatten() == (1, 0, 0)
    z = CohomologyClass.zero(5, 2, 1, 3)
    assert z.is_zero() and len(z.flatten()) == 6
    with pytest.raises(ValueError):
        c.add(z)


def test_mixed_model_operations_rejected():
    G = _group2()
    with pytest.raises(ValueError):
        hecke_multiply(HeckeElement.shift(0, 5, 2), HeckeElement.shift(0, 7, 2), G)
    with pytest.raises(ValueError):
        hecke_apply(HeckeElement.shift(0, 5, 2), CohomologyClass.indicator(5, 3, 0, 2), G)


# ----------------------------------------------------------------- the scans


def test_t1_stream_golden_order(F2, one2):
    pairs = []
    for v, phi in scan_t1(F2, one2, 5, budget=4):
        pairs.append((v.ell, v.f, phi.values))
    assert pairs == [
        (11, 2, (0,)),
        (19, 2, (2,)),
        (29, 2, (2,)),
        (31, 1, (4,)),
    ]


def test_t1_stream_skips_p_disc_and_modulus(F2, seven2):
    for v in [v for v, _ in zip(t1_primes(F2, seven2, 5), range(12))]:
        assert v.ell not in (2, 5, 7)
        assert (v.norm - 1) % 5 == 0


def test_t1_residue_degree_filter(F2, one2):
    vs = [v for v, _ in zip(t1_primes(F2, one2, 5, residue_degree=1), range(4))]
    # split rationals contribute both of their degree-1 primes
    assert [v.ell for v in vs] == [31, 31, 41, 41]
    assert all(v.f == 1 for v in vs)
    assert vs[0].g_poly != vs[1].g_poly


def test_compute_tp_certificate_golden(F2, one2):
    scan = compute_tp(F2, one2, 5)
    assert (scan.t_p, scan.target, scan.shortfall) == (1, 1, False)
    assert len(scan.certificate) == 1
    phi = scan.certificate[0]
    assert phi.prime.ell == 31
    assert phi.prime.g_poly == (23, 1)
    assert phi.values == (4,)
    assert phi.generator_encoding == 3


def test_compute_tp_zero_target_floor(F2, seven2):
    # p = 3: delta_3 = 1 eats the whole rank, target 0, yet vanishing is
    # witnessed on a floor of scanned primes rather than assumed
    scan = compute_tp(F2, seven2, 3)
    assert scan.target == 0
    assert scan.t_p == 0
    assert not scan.shortfall
    assert scan.consumed >= ZERO_TARGET_VERIFICATION_FLOOR
    assert all(phi.values == (0,) for phi in scan.visited)
    assert scan.certificate == ()


def test_compute_tp_budget_shortfall(F2, one2):
    scan = compute_tp(F2, one2, 5, budget=0)
    assert scan.shortfall
    assert scan.t_p == 0 and scan.target == 1


def test_unit_functional_rejects_wrong_residue_order(F2, one2):
    E = e_units(F2, one2, 5)
    v = next(iter(t1_primes(F2, one2, 3)))
    assert (v.norm - 1) % 5 != 0
    with pytest.raises(ValueError):
        unit_functional(v, E, 5)


def test_functional_span_invariant_under_generator_choice(F2, F3, one2):
    """Changing the residue generator g to g^k rescales the row by 1/k mod p."""
    cases = [(F2, one2, 5), (F3, unit_ideal(F3), 5)]
    for F, modulus, p in cases:
        E = e_units(F, modulus, p)
        for v, phi in scan_t1(F, modulus, p, budget=4):
            kappa = residue_field(v)
            q1 = kappa.order - 1
            g = find_generator(kappa)
            picked = 0
            k = 2
            while picked < 3:
                while gcd(k, q1) != 1:
                    k += 1
                alt = g ** k
                row = tuple(
                    pth_character(residue_image(eta, v), p, alt) for eta in E.values
                )
                kinv = pow(k, -1, p)
                assert row == tuple(kinv * x % p for x in phi.values)
                picked += 1
                k += 1


def test_spanning_set_goldens():
    cases = {
        (2, 5): ((19, 2),),
        (3, 5): ((11, 1),),
        (5, 5): ((11, 1),),
        (5, 3): ((2, 2),),
    }
    rows = {
        (2, 5): ((1,),),
        (3, 5): ((2,),),
        (5, 5): ((2,),),
        (5, 3): ((1,),),
    }
    for (d, p), primes in cases.items():
        scan = spanning_set(real_quadratic_field(d), p)
        assert not scan.shortfall
        assert scan.target == 1
        assert tuple((v.ell, v.f) for v in scan.primes) == primes
        assert scan.rows == rows[(d, p)]


def test_spanning_set_rank_two_at_even_prime(F2):
    # p = 2 divides the torsion order, so -1 joins the generator list
    scan = spanning_set(F2, 2)
    assert scan.target == 2
    assert not scan.shortfall
    assert tuple((v.ell, v.f) for v in scan.primes) == ((3, 2), (7, 1))
    assert scan.rows == ((0, 1), (1, 0))
    # the 2x2 matrix over F_2 is invertible: rows are independent
    a, b = scan.rows
    det = (a[0] * b[1] - a[1] * b[0]) % 2
    assert det == 1


def test_psi_budget_shortfall_raises(F2, one2):
    from torushecke.hecke import psi_report

    with pytest.raises(BudgetShortfall):
        psi_report(F2, one2, 5, budget=0)
