"""The two obstruction cocycles attached to a chart presentation.

The classical cocycle of the pair pairs an A-direction with two
B-directions through the curvature of the extending connection:

    At[a; j, k -> l] = R_{(s+a) j k}^l.

It is a 1-form on A valued in Hom(B (x) B, B); as_hom renders it on the
graded chart with one alpha factor per A-slot.

The fiberwise differential D of a FedosovData acts on vertical fields by
q(Y) = [D, Y].  Relative to the coefficientwise connection nabla0 (the
coordinate frame d/db is nabla0-flat) and an optional degree-zero
Hom-valued shift, the curvature-type expression

    At(X, Y) = q(T(X, Y)) - nabla0_{qX} Y - T(qX, Y)
                          - nabla0_X (qY) - T(X, qY)

on frame fields assembles the second cocycle as a degree-one Hom-tensor.
Changing the shift changes this cocycle by an exact term (the induced
action of D on the shift), and restricting it along iota_star recovers
the classical cocycle plus the exact term of the restricted shift:

    iota_star(At_D^T) = At_pair + d_A(iota_star(T)).

check_atiyah_comparison returns the residual of that relation.
"""

from __future__ import annotations

from .algebroid import ChartAlgebroid, curvature, d_A_on_hom
from .fedosov import FedosovData
from .graded import GradedElement
from .homotopy import iota_star
from .poly import Poly
from .sections import DSection, HomSection, bracket_with, evaluate, hom_bracket


class LiePairCocycle:
    """Components At[a; j, k -> l] with a an A-index and j, k, l B-indices."""

    __slots__ = ("alg", "comps")

    def __init__(self, alg: ChartAlgebroid, comps):
        self.alg = alg
        self.comps = {k: v for k, v in comps.items() if v}

    def at(self, a, j, k, l) -> Poly:
        return self.comps.get((a, j, k, l), Poly.zero())

    def is_symmetric(self) -> bool:
        """Symmetry in the two B-arguments."""
        for (a, j, k, l), v in self.comps.items():
            if self.at(a, k, j, l) != v:
                return False
        return True

    def as_hom(self) -> HomSection:
        """Render on the chart: each A-slot becomes an alpha factor."""
        out = {}
        for (a, j, k, l), v in self.comps.items():
            term = GradedElement.alpha(a).scale(v)
            cur = out.get((j, k, l))
            out[(j, k, l)] = term if cur is None else cur + term
        return HomSection(self.alg.s, out)


def atiyah_lie_pair(alg: ChartAlgebroid) -> LiePairCocycle:
    rt = curvature(alg)
    comps = {}
    for (i, j, k, l), v in rt.comps.items():
        if i >= alg.s and j < alg.s:
            comps[(i - alg.s, j, k, l)] = v
    return LiePairCocycle(alg, comps)


def q_section(fd: FedosovData, y: DSection) -> DSection:
    """[D, Y]; the action of the fiberwise differential on vertical fields."""
    return bracket_with(fd.D, y, "fiberwise differential on a vertical field")


def nabla0(x: DSection, y: DSection) -> DSection:
    """Coefficientwise derivative of y along x (the frame fields are flat)."""
    xd = x.as_derivation()
    return DSection({j: xd.apply(c) for j, c in y.comps.items()})


def _check_shift(twist):
    if twist is None:
        return
    if not isinstance(twist, HomSection):
        raise TypeError("connection shift must be a Hom-tensor")
    if twist.degree() not in (None, 0):
        raise ValueError("connection shift must have degree zero")


def atiyah_dg(fd: FedosovData, twist: HomSection | None = None) -> HomSection:
    """The degree-one cocycle of D relative to nabla0 plus an optional shift."""
    _check_shift(twist)
    s = fd.alg.s
    basis = [DSection.basis(i) for i in range(s)]
    qb = [q_section(fd, basis[i]) for i in range(s)]
    comps = {}
    for i in range(s):
        for j in range(s):
            total = -nabla0(qb[i], basis[j]) - nabla0(basis[i], qb[j])
            if twist is not None:
                total = total + q_section(fd, evaluate(twist, basis[i], basis[j]))
                total = total - evaluate(twist, qb[i], basis[j])
                total = total - evaluate(twist, basis[i], qb[j])
            for k, c in total.comps.items():
                cur = comps.get((i, j, k))
                nv = c if cur is None else cur + c
                if nv:
                    comps[(i, j, k)] = nv
                elif cur is not None:
                    del comps[(i, j, k)]
    return HomSection(s, comps)


def d_hom(fd: FedosovData, phi: HomSection) -> HomSection:
    """The induced action of D on Hom-tensors."""
    return hom_bracket(fd.D, phi, "fiberwise differential on a Hom-tensor")


def transgression_residual(fd: FedosovData, twist: HomSection) -> HomSection:
    """At_D^T - At_D - [D, T]; vanishes identically."""
    return atiyah_dg(fd, twist) - atiyah_dg(fd) - d_hom(fd, twist)


def check_atiyah_comparison(fd: FedosovData, twist: HomSection | None = None) -> HomSection:
    """Residual of the restriction relation between the two cocycles.

    Returns iota_star(At_D^T) - At_pair - d_A(iota_star(T)); the zero
    Hom-tensor certifies the relation for this chart and window.
    """
    alg = fd.alg
    if not alg.matched:
        raise ValueError("the cocycle comparison needs a matched pair")
    _check_shift(twist)
    left = iota_star(atiyah_dg(fd, twist))
    right = atiyah_lie_pair(alg).as_hom()
    if twist is not None:
        shifted = d_A_on_hom(alg, iota_star(twist))
        right = right + shifted
    return left - right
