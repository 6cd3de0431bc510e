"""The contracting homotopy of the fiber direction.

delta wedges a beta for each b it differentiates away; kappa is its
homotopy inverse, moving a beta back into a b with the normalizing
factor 1/(q + r).  iota_star restricts to the alpha-only part (no betas,
no b powers) and pi_star is the identity embedding of such elements.
Together they satisfy, on every carrier,

    delta kappa + kappa delta = id - pi_star iota_star
    delta delta = 0,  kappa kappa = 0,  iota_star pi_star = id.

Sign conventions, fixed once and verified by the identity above:
  delta(c alpha^I beta^J b^e) appends beta^i on the right of the beta
  block, with prefactor (-1)^(p+q) and coefficient e_i;
  kappa removes beta^i at 1-based position m inside the beta block with
  sign (-1)^(m-1), prefactor (-1)^p, and factor 1/(q + r).

On sections and Hom-tensors all four operators act coefficientwise; for
delta this agrees with the graded commutator against the delta
derivation (a property checked in the test suite).
"""

from __future__ import annotations

from fractions import Fraction

from .graded import GradedElement, Monomial, Derivation, _acc
from .sections import DSection, HomSection


def _delta_elem(a: GradedElement) -> GradedElement:
    out = {}
    for mon, coeff in a.terms.items():
        sign0 = -1 if (mon.p + mon.q) & 1 else 1
        for slot, (i, e) in enumerate(mon.bexp):
            if i in mon.betas:
                continue
            pos = sum(1 for j in mon.betas if j < i)
            # the new beta enters on the right and walks to its slot
            sgn = sign0 * (-1 if (mon.q - pos) & 1 else 1)
            betas = mon.betas[:pos] + (i,) + mon.betas[pos:]
            bexp = (
                mon.bexp[:slot] + ((i, e - 1),) + mon.bexp[slot + 1:]
                if e > 1
                else mon.bexp[:slot] + mon.bexp[slot + 1:]
            )
            _acc(out, Monomial(mon.alphas, betas, bexp), coeff * Fraction(sgn * e))
    return GradedElement(out)


def _kappa_elem(a: GradedElement) -> GradedElement:
    out = {}
    for mon, coeff in a.terms.items():
        q, r = mon.q, mon.bdeg
        if q == 0:
            continue
        factor = Fraction(1, q + r)
        asig = -1 if mon.p & 1 else 1
        for pos, i in enumerate(mon.betas):
            sgn = asig * (-1 if pos & 1 else 1)
            betas = mon.betas[:pos] + mon.betas[pos + 1:]
            bexp = dict(mon.bexp)
            bexp[i] = bexp.get(i, 0) + 1
            _acc(
                out,
                Monomial(mon.alphas, betas, tuple(sorted(bexp.items()))),
                coeff * (factor * sgn),
            )
    return GradedElement(out)


def _iota_elem(a: GradedElement) -> GradedElement:
    return a.part(q=0, r=0)


def _dispatch(a, fn):
    if isinstance(a, GradedElement):
        return fn(a)
    if isinstance(a, DSection):
        return a.map_coeffs(fn)
    if isinstance(a, HomSection):
        return a.map_coeffs(fn)
    raise TypeError(type(a))


def delta(a):
    return _dispatch(a, _delta_elem)


def kappa(a):
    return _dispatch(a, _kappa_elem)


def iota_star(a):
    """Restrict to the alpha-only subalgebra (kills betas and b powers)."""
    return _dispatch(a, _iota_elem)


def is_aform(a) -> bool:
    """True when the carrier already lives over the alpha-only subalgebra."""
    if isinstance(a, GradedElement):
        return all(m.q == 0 and m.bdeg == 0 for m in a.terms)
    if isinstance(a, DSection):
        return all(is_aform(c) for c in a.comps.values())
    if isinstance(a, HomSection):
        return all(is_aform(c) for c in a.comps.values())
    raise TypeError(type(a))


def pi_star(a):
    """Identity embedding of alpha-only carriers into the full algebra."""
    if not is_aform(a):
        raise ValueError("pi_star input must have no betas and no b powers")
    return a


def sigma(a):
    """pi_star iota_star: projection onto the alpha-only part."""
    return _dispatch(a, _iota_elem)


def delta_derivation(s: int) -> Derivation:
    """delta as a derivation: b^i maps to beta^i, all else to zero."""
    return Derivation(1, b_vals={i: GradedElement.beta(i) for i in range(s)})


def homotopy_defect(a):
    """delta kappa + kappa delta + sigma - id; zero on every carrier."""
    lhs = delta(kappa(a)) + kappa(delta(a)) + sigma(a)
    return lhs - a
