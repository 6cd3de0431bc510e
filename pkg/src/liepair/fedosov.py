"""The flat fiberwise differential built from a chart connection.

Starting from the connection derivation nabla and the contracting
homotopy, the recursion below produces a vertical correction field
X = X_2 + X_3 + ... (X_k of fiber degree k) such that

    D = nabla - delta + X

squares to zero: exactly on the base and odd generators, and up to the
working fiber window on the b generators (the correction beyond the
window is never computed).  Each step solves the fiber-degree-k slice of
the flatness equation with kappa:

    X_{k+1} = kappa( [nabla, X_k] + 1/2 sum_{a+b=k+1} [X_a, X_b] )

seeded by X_2 = kappa(R) with R the curvature as a vertical field.
By construction kappa(X) = 0 and X has no fiber-degree < 2 part.

For matched pairs D splits by bidegree into D = D_A + D_B with
D_A^2 = 0, D_A D_B + D_B D_A = 0 and D_B^2 = 0 (same windows), and A
forms embed quasi-isomorphically along the D_B-horizontal lift mu.
"""

from __future__ import annotations

from fractions import Fraction

from .algebroid import ChartAlgebroid, curvature, nabla_derivation
from .errors import InternalInvariantError
from .graded import GradedElement, Derivation
from .homotopy import delta, delta_derivation, is_aform, kappa, pi_star
from .sections import DSection, bracket_with, q_act

HALF = Fraction(1, 2)


def r_dual(alg: ChartAlgebroid) -> DSection:
    """Curvature as a vertical field: -1/2 lam^i lam^j R_ijk^l b^k d/db^l."""
    rt = curvature(alg)
    comps = {}
    for (i, j, k, l), v in rt.comps.items():
        term = (alg.lam(i) * alg.lam(j)).scale(v * (-HALF)) * GradedElement.bvar(k)
        if term:
            cur = comps.get(l)
            comps[l] = term if cur is None else cur + term
    return DSection(comps)


def _pure_fiber_degree(sec: DSection, r: int) -> DSection:
    kept = sec.map_coeffs(lambda c: c.part(r=r))
    if kept != sec:
        raise InternalInvariantError(
            f"recursion source has terms outside fiber degree {r}"
        )
    return sec


def fedosov_x(alg: ChartAlgebroid, max_b: int) -> DSection:
    """The correction field through fiber degree max_b (at least 2)."""
    if max_b < 2:
        raise ValueError("the fiber window must be at least 2")
    nabla = nabla_derivation(alg)
    parts = {2: kappa(r_dual(alg))}
    for k in range(2, max_b):
        src = bracket_with(nabla, parts[k], "connection bracket in the recursion")
        for a in range(2, k):
            b = k + 1 - a
            if b < 2:
                continue
            pair = parts[a].bracket(parts[b])
            if pair:
                src = src + pair.scale(HALF)
        parts[k + 1] = kappa(_pure_fiber_degree(src, k))
    total = DSection()
    for k in sorted(parts):
        total = total + parts[k]
    return total


class FedosovData:
    """The assembled differential and its ingredients for one chart."""

    __slots__ = ("alg", "max_b", "nabla", "x_field", "D")

    def __init__(self, alg, max_b, nabla, x_field, D):
        self.alg = alg
        self.max_b = max_b
        self.nabla = nabla
        self.x_field = x_field
        self.D = D

    @property
    def window(self) -> int:
        """Fiber degree through which flatness identities are guaranteed."""
        return self.max_b - 1


def build_fedosov(alg: ChartAlgebroid, max_b: int = 4) -> FedosovData:
    nabla = nabla_derivation(alg)
    x_field = fedosov_x(alg, max_b)
    d = nabla - delta_derivation(alg.s) + x_field.as_derivation()
    return FedosovData(alg, max_b, nabla, x_field, d)


def connection_square_residual(alg: ChartAlgebroid) -> Derivation:
    """[nabla, nabla] - 2 R as derivations; zero for valid chart data."""
    nabla = nabla_derivation(alg)
    return nabla.commutator(nabla) - r_dual(alg).as_derivation().scale(2)


def flatness_defects(fd: FedosovData) -> dict:
    """Generator-indexed nonzero values of D^2, windowed on the fiber.

    Values on x, alpha and beta must vanish exactly; values on b are
    truncated to the window before testing.  Empty dict means flat.
    """
    dd = fd.D.commutator(fd.D).scale(HALF)
    bad = {}
    for i, v in dd.x_vals.items():
        bad[f"x{i+1}"] = v
    for i, v in dd.alpha_vals.items():
        bad[f"alpha{i+1}"] = v
    for i, v in dd.beta_vals.items():
        bad[f"beta{i+1}"] = v
    for i, v in dd.b_vals.items():
        t = v.truncate(fd.window)
        if t:
            bad[f"b{i+1}"] = t
    return bad


def split_fedosov(fd: FedosovData):
    """D = D_A + D_B by bidegree shift; matched pairs only."""
    if not fd.alg.matched:
        raise ValueError("the bidegree split needs a matched pair")
    da = fd.D.bidegree_part(1, 0)
    db = fd.D.bidegree_part(0, 1)
    if not (da + db) == fd.D:
        raise InternalInvariantError("differential has parts outside bidegrees (1,0) and (0,1)")
    return da, db


def mu_lift(fd: FedosovData, a):
    """The D_B-horizontal lift of an alpha-only carrier, exact through max_b.

    Iterates m -> a + kappa(D_B m + delta m) truncated to the window; the
    fixed point restricts back to a and is D_B-closed through the window.
    """
    if not fd.alg.matched:
        raise ValueError("the horizontal lift needs a matched pair")
    if not is_aform(a):
        raise ValueError("lift input must be an alpha-only carrier")
    _, db = split_fedosov(fd)
    m = a
    for _ in range(fd.max_b + 2):
        corr = kappa(q_act(db, m, "lift iteration") + delta(m)).truncate(fd.max_b)
        nxt = a + corr
        if nxt == m:
            return m
        m = nxt
    raise InternalInvariantError("horizontal lift did not stabilize inside the window")


def quasi_inverse(fd: FedosovData, a):
    """Alias of the lift with the embedding contract made explicit."""
    return mu_lift(fd, pi_star(a))
