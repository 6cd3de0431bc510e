from fractions import Fraction

import pytest

from liepair.graded import GradedElement
from liepair.homotopy import (
    delta,
    delta_derivation,
    homotopy_defect,
    iota_star,
    is_aform,
    kappa,
    pi_star,
    sigma,
)
from liepair.random_elements import (
    random_dsection,
    random_element,
    random_homsection,
    rng,
)
from liepair.sections import DSection, HomSection

A0 = GradedElement.alpha(0)
B0 = GradedElement.beta(0)
F0 = GradedElement.bvar(0)


def test_delta_on_generators():
    assert delta(F0) == B0
    assert delta(B0).is_zero()
    assert delta(A0).is_zero()
    assert delta(GradedElement.one()).is_zero()


def test_kappa_on_generators():
    assert kappa(B0) == F0
    assert kappa(F0).is_zero()
    assert kappa(A0).is_zero()
    # the value feeding the quadratic correction term
    assert kappa(A0 * B0 * F0) == (A0 * F0 * F0).scale(Fraction(-1, 2))


def test_sigma_projection():
    e = A0 + A0 * B0 + F0 + GradedElement.one()
    assert sigma(e) == A0 + GradedElement.one()
    assert iota_star(e) == sigma(e)
    assert is_aform(sigma(e))


def test_pi_star_rejects_non_aforms():
    with pytest.raises(ValueError):
        pi_star(B0)
    with pytest.raises(ValueError):
        pi_star(F0)
    assert pi_star(A0) == A0


def test_delta_derivation_agrees():
    dd = delta_derivation(2)
    r = rng(31)
    for _ in range(50):
        a = random_element(r, 2, 2, 2, max_b=4, terms=3)
        assert dd.apply(a) == delta(a)


def test_delta_kappa_square_zero_and_homotopy():
    r = rng(32)
    for _ in range(120):
        a = random_element(r, 2, 2, 2, max_b=5, terms=3)
        assert delta(delta(a)).is_zero()
        assert kappa(kappa(a)).is_zero()
        assert homotopy_defect(a).is_zero()


def test_homotopy_identity_on_sections():
    r = rng(33)
    for _ in range(40):
        y = random_dsection(r, 1, 2, 1, r.randint(0, 2), max_b=4)
        assert homotopy_defect(y).is_zero()
        assert delta(delta(y)).is_zero()
        assert kappa(kappa(y)).is_zero()


def test_homotopy_identity_on_hom_tensors():
    r = rng(34)
    for _ in range(40):
        phi = random_homsection(r, 1, 2, 1, r.randint(0, 2), max_b=4)
        assert homotopy_defect(phi).is_zero()
        assert delta(delta(phi)).is_zero()
        assert kappa(kappa(phi)).is_zero()


def test_edge_carriers():
    assert homotopy_defect(GradedElement.zero()).is_zero()
    assert homotopy_defect(DSection()).is_zero()
    assert homotopy_defect(HomSection(2)).is_zero()
    one = GradedElement.one()
    # constants are alpha-forms: the homotopy reproduces them untouched
    assert sigma(one) == one
    assert delta(one).is_zero() and kappa(one).is_zero()
