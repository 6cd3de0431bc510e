"""Built-in chart presentations used by the test suites and the demos.

Every builder returns a ChartAlgebroid whose structure data satisfy the
chart axioms (broken_jacobi deliberately does not; it exercises the
failure path).  Index conventions follow the package: L-indices are
0-based with 0..s-1 the B directions and s..s+t-1 the A directions.
"""

from __future__ import annotations

from fractions import Fraction

from .algebroid import ChartAlgebroid
from .poly import Poly


def point_aff1(gamma=Fraction(1)) -> ChartAlgebroid:
    """Rank-2 matched pair over a point with a one-parameter connection.

    A and B are both one dimensional, [A1, B1] = B1, nabla_{A1} = id and
    nabla_{B1} = gamma on the B line.  The curvature is the single value
    R(A1, B1)B1 = -gamma B1.
    """
    gamma = Fraction(gamma)
    one = Poly.one()
    c = {(1, 0, 0): one, (0, 1, 0): -one}
    g = {(1, 0, 0): one}
    if gamma:
        g[(0, 0, 0)] = Poly.const(gamma)
    return ChartAlgebroid(0, 1, 1, rho={}, C=c, Gamma=g, matched=True)


def line_action() -> ChartAlgebroid:
    """The scaling action of a line on itself: B = d/dx, A = x d/dx."""
    x = Poly.variable(0)
    one = Poly.one()
    rho = {(0, 0): one, (1, 0): x}
    c = {(1, 0, 0): -one, (0, 1, 0): one}
    g = {(1, 0, 0): -one, (0, 0, 0): x}
    return ChartAlgebroid(1, 1, 1, rho=rho, C=c, Gamma=g, matched=True)


def tangent_only() -> ChartAlgebroid:
    """The tangent algebroid of the plane with a curved symmetric connection.

    A = 0, so every A-graded object is trivial; the fixture exercises the
    B-side machinery (curvature, recursion, homotopy) in rank two.
    """
    x1, x2 = Poly.variable(0), Poly.variable(1)
    one = Poly.one()
    rho = {(0, 0): one, (1, 1): one}
    g = {
        (0, 0, 0): x2,
        (0, 1, 0): x1,
        (1, 0, 0): x1,
        (1, 1, 0): x2,
        (1, 1, 1): x1,
    }
    return ChartAlgebroid(2, 2, 0, rho=rho, C={}, Gamma=g, matched=True)


def tangent_flat() -> ChartAlgebroid:
    """The tangent algebroid of the plane with the flat connection."""
    one = Poly.one()
    rho = {(0, 0): one, (1, 1): one}
    return ChartAlgebroid(2, 2, 0, rho=rho, C={}, Gamma={}, matched=True)


def two_action(gamma=Fraction(1)) -> ChartAlgebroid:
    """Rank-3 matched pair over a point with a two-dimensional A.

    [A1, B1] = B1 and [A2, B1] = gamma B1 with [A1, A2] = 0; the
    connection extends the action and adds nabla_{B1} = gamma.  Having
    two A directions makes identities with two alpha factors nontrivial.
    """
    gamma = Fraction(gamma)
    one = Poly.one()
    gp = Poly.const(gamma)
    c = {(1, 0, 0): one, (0, 1, 0): -one}
    g = {(1, 0, 0): one}
    if gamma:
        c[(2, 0, 0)] = gp
        c[(0, 2, 0)] = -gp
        g[(2, 0, 0)] = gp
        g[(0, 0, 0)] = gp
    return ChartAlgebroid(0, 1, 2, rho={}, C=c, Gamma=g, matched=True)


def aff_pair(gamma=Fraction(1)) -> ChartAlgebroid:
    """A line acting on the affine algebra: s = 2 and t = 1 over a point.

    B has [B1, B2] = B1 and A1 acts by the derivation sending both B1
    and B2 to B1.  The connection extends the action and carries the
    symmetric shifts nabla_{B1}B1 = gamma B1 and nabla_{B2}B2 = gamma B1,
    which makes every slot of the curvature two dimensional and puts a
    nonzero value in an off-diagonal Atiyah entry.
    """
    gamma = Fraction(gamma)
    one = Poly.one()
    gp = Poly.const(gamma)
    c = {
        (2, 0, 0): one,
        (0, 2, 0): -one,
        (2, 1, 0): one,
        (1, 2, 0): -one,
        (0, 1, 0): one,
        (1, 0, 0): -one,
    }
    g = {(2, 0, 0): one, (2, 1, 0): one, (0, 1, 0): one}
    if gamma:
        g[(0, 0, 0)] = gp
        g[(1, 1, 0)] = gp
    return ChartAlgebroid(0, 2, 1, rho={}, C=c, Gamma=g, matched=True)


def heisenberg() -> ChartAlgebroid:
    """Heisenberg Lie pair: [B1, B2] = A1, all else zero, flat connection.

    B is not a subalgebroid, so this is a Lie pair that is not a matched
    pair; the bracket differential acquires a (-1, 2) component.
    """
    one = Poly.one()
    c = {(0, 1, 2): one, (1, 0, 2): -one}
    return ChartAlgebroid(0, 2, 1, rho={}, C=c, Gamma={}, matched=False)


def broken_jacobi() -> ChartAlgebroid:
    """Structure constants that fail the Jacobi identity (for error paths).

    [A1, B1] = 2 B1, [A1, B2] = -2 B2, [B1, B2] = B1; the cyclic sum on
    (B1, B2, A1) equals -2 B1.
    """
    one = Poly.one()
    two = Poly.const(2)
    c = {
        (2, 0, 0): two,
        (0, 2, 0): -two,
        (2, 1, 1): -two,
        (1, 2, 1): two,
        (0, 1, 0): one,
        (1, 0, 0): -one,
    }
    g = {(2, 0, 0): two, (2, 1, 1): -two, (0, 1, 0): one}
    return ChartAlgebroid(0, 2, 1, rho={}, C=c, Gamma=g, matched=False)


BUILDERS = {
    "point_aff1": point_aff1,
    "line_action": line_action,
    "tangent_only": tangent_only,
    "tangent_flat": tangent_flat,
    "two_action": two_action,
    "aff_pair": aff_pair,
    "heisenberg": heisenberg,
    "broken_jacobi": broken_jacobi,
}

VALID_NAMES = ("point_aff1", "line_action", "tangent_only", "tangent_flat",
               "two_action", "aff_pair", "heisenberg")
MATCHED_NAMES = ("point_aff1", "line_action", "tangent_only", "tangent_flat",
                 "two_action", "aff_pair")


def build(name: str, **kwargs) -> ChartAlgebroid:
    return BUILDERS[name](**kwargs)
