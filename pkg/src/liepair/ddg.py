"""The bracket differential of the chart and the mixed module curvature.

d_L is the degree-one derivation encoding anchor and bracket alone
(zero on the b generators).  On a Lie pair chart it splits by bidegree
shift into

    d_L = d10 + d01 + dm12

with shifts (1,0), (0,1) and (-1,2); a (2,-1) component would mean the
A-directions do not close under the bracket and is rejected.  For a
matched pair the (-1,2) part vanishes as well.

The connection derivation splits the same way, and on a matched pair
the mixed square

    R_m(Y) = -([nabla_A, [nabla_B, Y]] + [nabla_B, [nabla_A, Y]])

is a function-linear operator on vertical fields whose frame components
reproduce the classical cocycle of the pair.  Both facts are exposed
here so the suites can verify them by two independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebroid import ChartAlgebroid, nabla_derivation
from .errors import InternalInvariantError
from .graded import Derivation, GradedElement
from .sections import DSection, bracket_with, interior


def d_L_derivation(alg: ChartAlgebroid) -> Derivation:
    """x^j -> lam^i rho_i^j, lam^k -> -1/2 lam^i lam^j C_ij^k, b -> 0."""
    half = Fraction(1, 2)
    x_vals = {}
    for j in range(alg.n):
        acc = GradedElement.zero()
        for i in range(alg.rank):
            r = alg.rho_at(i, j)
            if r:
                acc = acc + alg.lam(i).scale(r)
        if acc:
            x_vals[j] = acc
    alpha_vals, beta_vals = {}, {}
    for k in range(alg.rank):
        acc = GradedElement.zero()
        for i in range(alg.rank):
            for j in range(alg.rank):
                c = alg.C_at(i, j, k)
                if c:
                    acc = acc + (alg.lam(i) * alg.lam(j)).scale(c * (-half))
        if acc:
            if k < alg.s:
                beta_vals[k] = acc
            else:
                alpha_vals[k - alg.s] = acc
    return Derivation(1, x_vals, alpha_vals, beta_vals, {})


@dataclass
class CEOperators:
    """Bidegree components of the bracket differential."""

    d10: Derivation
    d01: Derivation
    dm12: Derivation


def split_dL(alg: ChartAlgebroid) -> CEOperators:
    d = d_L_derivation(alg)
    bad = d.bidegree_part(2, -1)
    if not bad.is_zero():
        raise ValueError("not a Lie pair presentation: [A, A] has a B component")
    d10 = d.bidegree_part(1, 0)
    d01 = d.bidegree_part(0, 1)
    dm12 = d.bidegree_part(-1, 2)
    if not (d10 + d01 + dm12) == d:
        raise InternalInvariantError("bracket differential has an unexpected bidegree part")
    return CEOperators(d10, d01, dm12)


class ModuleCurvature:
    """Mixed square of the connection on vertical fields (matched pairs)."""

    __slots__ = ("alg", "na", "nb", "mixed")

    def __init__(self, alg: ChartAlgebroid):
        if not alg.matched:
            raise ValueError("the mixed module curvature needs a matched pair")
        self.alg = alg
        nab = nabla_derivation(alg)
        self.na = nab.bidegree_part(1, 0)
        self.nb = nab.bidegree_part(0, 1)
        self.mixed = self.na.commutator(self.nb)

    def d10(self, y: DSection) -> DSection:
        return bracket_with(self.na, y, "A-part of the connection")

    def d01(self, y: DSection) -> DSection:
        return bracket_with(self.nb, y, "B-part of the connection")

    def apply(self, y: DSection) -> DSection:
        """The defining double-bracket route."""
        t1 = self.d10(self.d01(y))
        t2 = self.d01(self.d10(y))
        return -(t1 + t2)

    def apply_via_mixed(self, y: DSection) -> DSection:
        """Independent route through the single mixed-square derivation."""
        return -bracket_with(self.mixed, y, "mixed square of the connection")


def module_curvature_components(mc: ModuleCurvature) -> dict:
    """Frame components (a, b, k, l): contract R_m(d/db^k) with B then A.

    The inner beta-contraction runs first, then the alpha-contraction;
    values are scalar graded functions (base polynomials).
    """
    s, t = mc.alg.s, mc.alg.t
    out = {}
    for k in range(s):
        rm = mc.apply(DSection.basis(k))
        for l, c in rm.comps.items():
            for b in range(s):
                c1 = interior(b, s).apply(c)
                if not c1:
                    continue
                for a in range(t):
                    c2 = interior(s + a, s).apply(c1)
                    if c2:
                        out[(a, b, k, l)] = c2
    return out
