"""Named machine checks over a chart, grouped into four suites.

Each check returns a CheckResult whose residual strings are only filled
on failure.  The homotopy suite needs nothing but the chart dimensions;
the other three run the structure axioms first and skip the dependent
checks when the axioms fail, so invalid data reports cleanly instead of
raising deep inside a construction.
"""

from __future__ import annotations

from .algebroid import (
    CheckResult,
    curvature,
    d_A,
    d_A_on_hom,
    nabla_a_derivation,
    validate_structure,
)
from .atiyah import (
    atiyah_dg,
    atiyah_lie_pair,
    check_atiyah_comparison,
    d_hom,
    transgression_residual,
)
from .ddg import ModuleCurvature, module_curvature_components, split_dL
from .errors import InternalInvariantError
from .expressions import dsection_str, element_str, homsection_str
from .fedosov import (
    build_fedosov,
    connection_square_residual,
    flatness_defects,
    mu_lift,
    split_fedosov,
)
from .graded import Derivation, GradedElement
from .homotopy import delta, delta_derivation, homotopy_defect, iota_star, kappa, sigma
from .random_elements import (
    random_aform,
    random_dsection,
    random_element,
    random_hom_aform,
    random_homsection,
    random_poly,
    rng,
)
from .sections import DSection, HomSection, bracket_with, q_act

SUITE_NAMES = ("homotopy", "fedosov", "atiyah", "ddg")


def _describe(obj) -> str:
    if isinstance(obj, GradedElement):
        s = element_str(obj)
    elif isinstance(obj, DSection):
        s = dsection_str(obj)
    elif isinstance(obj, HomSection):
        s = homsection_str(obj)
    elif isinstance(obj, Derivation):
        s = repr(obj)
    else:
        s = str(obj)
    return s if len(s) <= 200 else s[:197] + "..."


class _Check:
    """Accumulates failures for one named check."""

    def __init__(self, name):
        self.name = name
        self.failures = []

    def expect_zero(self, label, residual):
        bad = residual is not None and bool(residual)
        if isinstance(residual, Derivation):
            bad = not residual.is_zero()
        if bad:
            self.failures.append(f"{label}: {_describe(residual)}")

    def expect(self, label, ok):
        if not ok:
            self.failures.append(label)

    def result(self) -> CheckResult:
        return CheckResult(self.name, not self.failures, self.failures[:8])


def _windowed_derivation_defects(d: Derivation, window: int):
    """Values that survive exact (x, odd) or windowed (b) truncation."""
    bad = {}
    for i, v in d.x_vals.items():
        bad[f"x{i+1}"] = v
    for i, v in d.alpha_vals.items():
        bad[f"alpha{i+1}"] = v
    for i, v in d.beta_vals.items():
        bad[f"beta{i+1}"] = v
    for i, v in d.b_vals.items():
        tv = v.truncate(window)
        if tv:
            bad[f"b{i+1}"] = tv
    return bad


# -- homotopy ------------------------------------------------------------


def homotopy_suite(alg, seed: int = 1, rounds: int = 110) -> list:
    n, s, t = alg.n, alg.s, alg.t
    r = rng(seed)
    n_elem = max(rounds - 2 * (rounds // 4), 1)
    n_sec = rounds // 4
    n_hom = rounds // 4

    c_dd = _Check("delta_squared_zero")
    c_kk = _Check("kappa_squared_zero")
    c_hom = _Check("homotopy_identity")
    c_der = _Check("delta_agrees_with_derivation")
    c_rest = _Check("restriction_embedding_identities")

    dder = delta_derivation(s)
    for idx in range(n_elem):
        a = random_element(r, n, s, t, max_b=5, terms=3)
        c_dd.expect_zero(f"element {idx}", delta(delta(a)))
        c_kk.expect_zero(f"element {idx}", kappa(kappa(a)))
        c_hom.expect_zero(f"element {idx}", homotopy_defect(a))
        c_der.expect_zero(f"element {idx}", delta(a) - dder.apply(a))
        c_rest.expect_zero(f"sigma projection {idx}", sigma(sigma(a)) - sigma(a))
        form = random_aform(r, n, t, r.randint(0, min(t, 2)))
        c_rest.expect_zero(f"aform restriction {idx}", iota_star(form) - form)
    for idx in range(n_sec):
        deg = r.randint(0, 2)
        y = random_dsection(r, n, s, t, deg, max_b=4)
        c_dd.expect_zero(f"section {idx}", delta(delta(y)))
        c_kk.expect_zero(f"section {idx}", kappa(kappa(y)))
        c_hom.expect_zero(f"section {idx}", homotopy_defect(y))
        if y:
            c_der.expect_zero(
                f"section {idx}", delta(y) - bracket_with(dder, y, "delta on a section")
            )
    for idx in range(n_hom):
        deg = r.randint(0, 2)
        phi = random_homsection(r, n, s, t, deg, max_b=4)
        c_dd.expect_zero(f"hom {idx}", delta(delta(phi)))
        c_kk.expect_zero(f"hom {idx}", kappa(kappa(phi)))
        c_hom.expect_zero(f"hom {idx}", homotopy_defect(phi))

    return [c.result() for c in (c_dd, c_kk, c_hom, c_der, c_rest)]


# -- structure axioms (shared) -------------------------------------------


def axiom_checks(alg) -> list:
    rep = validate_structure(alg)
    return [CheckResult("axiom_" + c.name, c.passed, c.residuals[:8]) for c in rep.checks]


# -- connection and the flat differential --------------------------------


def fedosov_suite(alg, max_b: int = 4, seed: int = 2) -> list:
    out = axiom_checks(alg)
    if not all(c.passed for c in out):
        return out
    r = rng(seed)

    c_anti = _Check("curvature_antisymmetric")
    c_anti.expect("R_ijk^l = -R_jik^l", curvature(alg).is_antisymmetric())
    out.append(c_anti.result())

    c_sq = _Check("nabla_squared_equals_curvature_lift")
    c_sq.expect_zero("[nabla, nabla] - 2R", connection_square_residual(alg))
    out.append(c_sq.result())

    fd = build_fedosov(alg, max_b)

    c_norm = _Check("correction_field_normalized")
    x = fd.x_field
    c_norm.expect_zero("kappa(X)", kappa(x))
    c_norm.expect_zero("iota_star(X)", iota_star(x))
    stray = x.map_coeffs(lambda c: c.project(lambda p, q, rr: rr < 2 or rr > max_b))
    c_norm.expect_zero("fiber degrees outside [2, max]", stray)
    out.append(c_norm.result())

    c_flat = _Check("differential_squares_to_zero")
    for gen, v in sorted(flatness_defects(fd).items()):
        c_flat.expect_zero(f"D^2 on {gen}", v)
    out.append(c_flat.result())

    if alg.matched:
        c_split = _Check("bidegree_split_exact")
        try:
            da, db = split_fedosov(fd)
        except InternalInvariantError as exc:
            c_split.expect(str(exc), False)
            out.append(c_split.result())
            return out
        out.append(c_split.result())

        c_anti2 = _Check("split_components_anticommute")
        window = fd.window
        for label, comm in (
            ("[D_A, D_A]", da.commutator(da)),
            ("[D_A, D_B]", da.commutator(db)),
            ("[D_B, D_B]", db.commutator(db)),
        ):
            for gen, v in sorted(_windowed_derivation_defects(comm, window).items()):
                c_anti2.expect_zero(f"{label} on {gen}", v)
        out.append(c_anti2.result())

        c_mu = _Check("horizontal_lift_identities")
        samples = []
        for _ in range(4):
            samples.append(random_aform(r, alg.n, alg.t, r.randint(0, min(alg.t, 2))))
            samples.append(random_dsection(r, alg.n, alg.s, alg.t, 0, max_b=0))
        for _ in range(2):
            samples.append(
                random_hom_aform(
                    r,
                    alg.n,
                    alg.s,
                    alg.t,
                    r.randint(0, min(alg.t, 1)),
                    terms=1,
                    density=0.4,
                )
            )
        for idx, a in enumerate(samples):
            m = mu_lift(fd, a)
            c_mu.expect_zero(f"sigma(mu(a)) - a, sample {idx}", sigma(m) - a)
            c_mu.expect_zero(
                f"D_B mu(a) windowed, sample {idx}",
                q_act(db, m, "lift check").truncate(window),
            )
            lhs = q_act(da, m, "lift check").truncate(window)
            rhs = mu_lift(fd, d_A(alg, a)).truncate(window)
            c_mu.expect_zero(f"D_A mu(a) - mu(d_A a) windowed, sample {idx}", lhs - rhs)
        out.append(c_mu.result())
    return out


# -- the two cocycles ------------------------------------------------------


def atiyah_suite(alg, max_b: int = 4, seed: int = 3) -> list:
    out = axiom_checks(alg)
    if not all(c.passed for c in out):
        return out
    r = rng(seed)
    fd = build_fedosov(alg, max_b)

    pair = atiyah_lie_pair(alg)
    c_sym = _Check("pair_cocycle_symmetric")
    c_sym.expect("At[a; j,k] = At[a; k,j]", pair.is_symmetric())
    out.append(c_sym.result())

    c_dsq = _Check("hom_differential_squares_windowed")
    for idx in range(4):
        phi = random_homsection(r, alg.n, alg.s, alg.t, idx % 2, max_b=1)
        resid = d_hom(fd, d_hom(fd, phi)).truncate(max_b - 2)
        c_dsq.expect_zero(f"d_hom^2 sample {idx}", resid)
    out.append(c_dsq.result())

    c_tr = _Check("transgression_exact")
    for idx in range(3):
        twist = random_homsection(r, alg.n, alg.s, alg.t, 0, max_b=2)
        c_tr.expect_zero(f"shift sample {idx}", transgression_residual(fd, twist))
    out.append(c_tr.result())

    if alg.matched:
        c_closed = _Check("pair_cocycle_closed")
        c_closed.expect_zero("d_A At", d_A_on_hom(alg, pair.as_hom()))
        out.append(c_closed.result())

        c_cmp = _Check("cocycle_comparison")
        c_cmp.expect_zero("no shift", check_atiyah_comparison(fd))
        for idx in range(3):
            twist = random_homsection(r, alg.n, alg.s, alg.t, 0, max_b=2)
            c_cmp.expect_zero(f"shift sample {idx}", check_atiyah_comparison(fd, twist))
        out.append(c_cmp.result())
    return out


# -- the bracket differential and the module curvature ---------------------


def ddg_suite(alg, seed: int = 4) -> list:
    from .ddg import d_L_derivation

    out = axiom_checks(alg)
    if not all(c.passed for c in out):
        return out
    r = rng(seed)

    dl = d_L_derivation(alg)
    c_sq = _Check("bracket_differential_squares_zero")
    c_sq.expect_zero("[d_L, d_L]", dl.commutator(dl))
    out.append(c_sq.result())

    c_split = _Check("bracket_differential_splits")
    try:
        ops = split_dL(alg)
    except ValueError as exc:
        c_split.expect(str(exc), False)
        out.append(c_split.result())
        return out
    c_split.expect_zero(
        "d10 + d01 + dm12 - d_L", (ops.d10 + ops.d01 + ops.dm12) - dl
    )
    out.append(c_split.result())

    c_pieces = _Check("bidegree_piece_identities")
    c_pieces.expect_zero("[d10, d10]", ops.d10.commutator(ops.d10))
    c_pieces.expect_zero("[d10, d01]", ops.d10.commutator(ops.d01))
    c_pieces.expect_zero(
        "[d01, d01] + 2[d10, dm12]",
        ops.d01.commutator(ops.d01) + ops.d10.commutator(ops.dm12).scale(2),
    )
    c_pieces.expect_zero("[d01, dm12]", ops.d01.commutator(ops.dm12))
    c_pieces.expect_zero("[dm12, dm12]", ops.dm12.commutator(ops.dm12))
    out.append(c_pieces.result())

    if alg.matched:
        c_m12 = _Check("matched_minus12_vanishes")
        c_m12.expect_zero("dm12", ops.dm12)
        out.append(c_m12.result())

        c_naflat = _Check("a_connection_flat")
        na = nabla_a_derivation(alg)
        c_naflat.expect_zero("[nabla_A, nabla_A]", na.commutator(na))
        out.append(c_naflat.result())

        mc = ModuleCurvature(alg)
        sample_sections = [DSection.basis(k) for k in range(alg.s)]
        for _ in range(5):
            y = random_dsection(r, alg.n, alg.s, alg.t, 0, max_b=2)
            if y:
                sample_sections.append(y)

        c_routes = _Check("module_curvature_routes_agree")
        for idx, y in enumerate(sample_sections):
            c_routes.expect_zero(
                f"sample {idx}", mc.apply(y) - mc.apply_via_mixed(y)
            )
        out.append(c_routes.result())

        c_match = _Check("module_curvature_matches_cocycle")
        got = module_curvature_components(mc)
        want = {}
        for (a, j, k, l), v in atiyah_lie_pair(alg).comps.items():
            want[(a, j, k, l)] = GradedElement.from_poly(v)
        if got != want:
            keys = sorted(set(got) | set(want))
            for key in keys:
                g, w = got.get(key), want.get(key)
                if g != w:
                    c_match.expect(
                        f"component {key}: frame gives "
                        f"{_describe(g) if g else '0'}, cocycle gives "
                        f"{_describe(w) if w else '0'}",
                        False,
                    )
        out.append(c_match.result())

        c_lin = _Check("module_curvature_function_linear")
        for idx in range(5):
            f = GradedElement.from_poly(random_poly(r, alg.n))
            y = random_dsection(r, alg.n, alg.s, alg.t, 0, max_b=2)
            c_lin.expect_zero(
                f"sample {idx}", mc.apply(y.mul_left(f)) - mc.apply(y).mul_left(f)
            )
        out.append(c_lin.result())

        c_d10 = _Check("module_curvature_d10_commutes")
        for idx, y in enumerate(sample_sections):
            c_d10.expect_zero(
                f"sample {idx}", mc.d10(mc.apply(y)) - mc.apply(mc.d10(y))
            )
        out.append(c_d10.result())
    return out


def run_suites(alg, which: str = "all", max_b: int = 4, seed: int = 7) -> list:
    if which not in SUITE_NAMES + ("all",):
        raise ValueError(f"unknown suite {which!r}")
    checks = []
    if which in ("all", "homotopy"):
        checks.extend(homotopy_suite(alg, seed=seed))
    if which in ("all", "fedosov"):
        checks.extend(fedosov_suite(alg, max_b=max_b, seed=seed + 1))
    if which in ("all", "atiyah"):
        checks.extend(atiyah_suite(alg, max_b=max_b, seed=seed + 2))
    if which in ("all", "ddg"):
        checks.extend(ddg_suite(alg, seed=seed + 3))
    if which == "all":
        seen = set()
        deduped = []
        for c in checks:
            if c.name.startswith("axiom_"):
                if c.name in seen:
                    continue
                seen.add(c.name)
            deduped.append(c)
        checks = deduped
    return checks
