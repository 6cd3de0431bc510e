"""Seeded random data for the verification suites and property tests.

Everything is driven by an explicit random.Random so failures replay
exactly; no generator touches global random state.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .graded import Derivation, GradedElement, Monomial
from .poly import Poly
from .sections import DSection, HomSection


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_fraction(r: random.Random) -> Fraction:
    return Fraction(r.randint(-4, 4), r.randint(1, 3))


def random_poly(r: random.Random, n: int, max_degree: int = 2, terms: int = 2) -> Poly:
    p = Poly.zero()
    for _ in range(terms):
        c = random_fraction(r)
        if not c:
            continue
        key = {}
        if n:
            for _ in range(r.randint(0, max_degree)):
                i = r.randrange(n)
                key[i] = key.get(i, 0) + 1
        p = p + Poly.monomial(tuple(sorted(key.items())), c)
    return p


def _random_bexp(r: random.Random, s: int, max_b: int):
    bexp = {}
    if s:
        for _ in range(r.randint(0, max_b)):
            i = r.randrange(s)
            bexp[i] = bexp.get(i, 0) + 1
    return tuple(sorted(bexp.items()))


def random_element(r: random.Random, n, s, t, max_b: int = 3, terms: int = 3) -> GradedElement:
    """Mixed-degree element; suited to operator identities on functions."""
    out = GradedElement.zero()
    for _ in range(terms):
        p = r.randint(0, t)
        q = r.randint(0, s)
        mon = Monomial(
            tuple(sorted(r.sample(range(t), p))),
            tuple(sorted(r.sample(range(s), q))),
            _random_bexp(r, s, max_b),
        )
        out = out + GradedElement({mon: random_poly(r, n)})
    return out


def random_homogeneous(r: random.Random, n, s, t, degree: int,
                       max_b: int = 3, terms: int = 3) -> GradedElement:
    """Random element of one total degree (possibly zero if unrealizable)."""
    splits = [(p, degree - p) for p in range(degree + 1) if p <= t and degree - p <= s]
    out = GradedElement.zero()
    if not splits:
        return out
    for _ in range(terms):
        p, q = r.choice(splits)
        mon = Monomial(
            tuple(sorted(r.sample(range(t), p))),
            tuple(sorted(r.sample(range(s), q))),
            _random_bexp(r, s, max_b),
        )
        out = out + GradedElement({mon: random_poly(r, n)})
    return out


def random_aform(r: random.Random, n, t, degree: int, terms: int = 3) -> GradedElement:
    """Alpha-only element: no betas, no b powers."""
    if degree > t:
        return GradedElement.zero()
    out = GradedElement.zero()
    for _ in range(terms):
        mon = Monomial(tuple(sorted(r.sample(range(t), degree))), (), ())
        out = out + GradedElement({mon: random_poly(r, n)})
    return out


def random_dsection(r: random.Random, n, s, t, degree: int, max_b: int = 3) -> DSection:
    comps = {}
    for k in range(s):
        if r.random() < 0.75:
            c = random_homogeneous(r, n, s, t, degree, max_b)
            if c:
                comps[k] = c
    return DSection(comps)


def random_homsection(r: random.Random, n, s, t, degree: int, max_b: int = 3) -> HomSection:
    comps = {}
    for i in range(s):
        for j in range(s):
            for k in range(s):
                if r.random() < 0.5:
                    c = random_homogeneous(r, n, s, t, degree, max_b, terms=2)
                    if c:
                        comps[(i, j, k)] = c
    return HomSection(s, comps)


def random_hom_aform(
    r: random.Random, n, s, t, degree: int, terms: int = 2, density: float = 0.5
) -> HomSection:
    """Hom-tensor whose coefficients are alpha-only forms of one degree."""
    comps = {}
    for i in range(s):
        for j in range(s):
            for k in range(s):
                if r.random() < density:
                    c = random_aform(r, n, t, degree, terms=terms)
                    if c:
                        comps[(i, j, k)] = c
    return HomSection(s, comps)


def random_derivation(r: random.Random, n, s, t, degree: int, max_b: int = 2) -> Derivation:
    def val(gen_degree):
        want = gen_degree + degree
        if want < 0:
            return GradedElement.zero()
        return random_homogeneous(r, n, s, t, want, max_b, terms=2)

    x_vals = {i: val(0) for i in range(n) if r.random() < 0.6}
    alpha_vals = {i: val(1) for i in range(t) if r.random() < 0.6}
    beta_vals = {i: val(1) for i in range(s) if r.random() < 0.6}
    b_vals = {i: val(0) for i in range(s) if r.random() < 0.6}
    return Derivation(degree, x_vals, alpha_vals, beta_vals, b_vals)
