"""Registry of exactly-checkable summation identities, certificates and
antidifferences used by the cancellation proofs.

Each entry is a named, self-contained check over a grid of integer (or
rational) assignments, evaluated in exact arithmetic:

* ``closed-form-sum``: a finite sum equals a closed form.
* ``pointwise``: two expressions agree at every grid point.
* ``certificate-recurrence``: a summand F satisfies
  sum_d b_d(p) F(p+d, k) = G(p, k+1) - G(p, k) with G = R*F; when the
  summation range is fixed under the parameter shift, the telescoped sum
  relation is re-derived and compared against a declared inhomogeneous term.
* ``antidifference``: z(k+1) - z(k) = t(k) pointwise, plus an optional
  closed form for the definite sum.
* ``double-sum-recurrence``: the two-index analogue, with one certificate
  per summation index.
* ``boundary-lemma``: generic summation-by-parts bookkeeping for double
  sums over rectangles and triangles, checked on sample terms.

Grid points that hit a pole are skipped and counted; a check whose grid is
entirely skipped fails as degenerate.  Certificates are expression trees, so
the harness can perturb any single integer coefficient and confirm the check
then fails (a wrong certificate cannot slip through).
"""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable

from .reports import Report
from .symbolic import (
    Const,
    Expr,
    PoleError,
    Sum,
    binom_expr as C,
    eval_term,
    fact_expr,
    perturbations,
    sign_expr as SG,
    syms,
)

s, i, j, jp, ip, t, n, x, z, a, b, c, u = syms("s i j jp ip t n x z a b c u")

GridFn = Callable[[], Iterable[dict]]


@dataclass
class IdentityCheck:
    name: str
    kind: str
    description: str
    grid: GridFn
    # closed-form-sum / pointwise
    lhs: Expr | None = None
    rhs: Expr | None = None
    summand: Expr | None = None
    index: str | None = None
    lower: Expr | None = None
    upper: Expr | None = None
    # certificate-recurrence / double-sum-recurrence
    param: str | None = None
    coeffs: tuple[Expr, ...] | None = None
    certificate: Expr | None = None
    inhom: Expr | None = None
    # double sums: outer index is `index`, inner is `index2`
    index2: str | None = None
    lower2: Expr | None = None
    upper2: Expr | None = None
    certificate2: Expr | None = None
    gterm2: Expr | None = None  # simplified G for the inner index (pole-free form)
    # antidifference
    antidifference: Expr | None = None
    closed_form: Expr | None = None
    # boundary-lemma
    shape: str | None = None
    samples: tuple[tuple[Expr, Expr], ...] | None = None


@dataclass
class CheckOutcome:
    name: str
    tested: int
    skipped: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.tested > 0


def _int(v: Fraction) -> int:
    if v.denominator != 1:
        raise PoleError(f"expected integer bound, got {v}")
    return v.numerator


def _sum_range(summand: Expr, index: str, lo: int, hi: int, env: dict) -> Fraction:
    total = Fraction(0)
    e = dict(env)
    for k in range(lo, hi + 1):
        e[index] = k
        total += eval_term(summand, e)
    return total


def _run_closed_form_sum(chk: IdentityCheck, out: CheckOutcome) -> None:
    for env in chk.grid():
        try:
            lo = _int(eval_term(chk.lower, env))
            hi = _int(eval_term(chk.upper, env))
            lhs = _sum_range(chk.summand, chk.index, lo, hi, env)
            rhs = eval_term(chk.rhs, env)
        except PoleError:
            out.skipped += 1
            continue
        out.tested += 1
        if lhs != rhs:
            out.failures.append(f"{env}: sum={lhs} closed-form={rhs}")


def _run_pointwise(chk: IdentityCheck, out: CheckOutcome) -> None:
    for env in chk.grid():
        try:
            lhs = eval_term(chk.lhs, env)
            rhs = eval_term(chk.rhs, env)
        except PoleError:
            out.skipped += 1
            continue
        out.tested += 1
        if lhs != rhs:
            out.failures.append(f"{env}: lhs={lhs} rhs={rhs}")


def _run_certificate(chk: IdentityCheck, out: CheckOutcome) -> None:
    gterm = chk.certificate * chk.summand
    for env in chk.grid():
        lo = _int(eval_term(chk.lower, env))
        hi = _int(eval_term(chk.upper, env))
        p0 = env[chk.param]
        for k in range(lo, hi + 1):
            e = {**env, chk.index: k}
            try:
                lhs = Fraction(0)
                for d, bd in enumerate(chk.coeffs):
                    lhs += eval_term(bd, e) * eval_term(chk.summand, {**e, chk.param: p0 + d})
                delta = eval_term(gterm, {**e, chk.index: k + 1}) - eval_term(gterm, e)
            except PoleError:
                out.skipped += 1
                continue
            out.tested += 1
            if lhs != delta:
                out.failures.append(f"{e}: recurrence={lhs} telescoped={delta}")
        if chk.inhom is not None:
            try:
                lhs = Fraction(0)
                for d, bd in enumerate(chk.coeffs):
                    lhs += eval_term(bd, env) * _sum_range(
                        chk.summand, chk.index, lo, hi, {**env, chk.param: p0 + d}
                    )
                rhs = eval_term(chk.inhom, env)
            except PoleError:
                out.skipped += 1
                continue
            out.tested += 1
            if lhs != rhs:
                out.failures.append(f"{env}: summed recurrence={lhs} inhomogeneous={rhs}")


def _run_antidifference(chk: IdentityCheck, out: CheckOutcome) -> None:
    for env in chk.grid():
        try:
            lo = _int(eval_term(chk.lower, env))
            hi = _int(eval_term(chk.upper, env))
        except PoleError:
            out.skipped += 1
            continue
        for k in range(lo, hi + 1):
            e = {**env, chk.index: k}
            try:
                dz = eval_term(chk.antidifference, {**e, chk.index: k + 1}) - eval_term(
                    chk.antidifference, e
                )
                tk = eval_term(chk.summand, e)
            except PoleError:
                out.skipped += 1
                continue
            out.tested += 1
            if dz != tk:
                out.failures.append(f"{e}: delta={dz} summand={tk}")
        if chk.closed_form is not None:
            try:
                total = _sum_range(chk.summand, chk.index, lo, hi, env)
                rhs = eval_term(chk.closed_form, env)
            except PoleError:
                out.skipped += 1
                continue
            out.tested += 1
            if total != rhs:
                out.failures.append(f"{env}: definite sum={total} closed-form={rhs}")


def _run_double_sum(chk: IdentityCheck, out: CheckOutcome) -> None:
    g1 = chk.certificate * chk.summand
    g2 = chk.gterm2 if chk.gterm2 is not None else chk.certificate2 * chk.summand
    for env in chk.grid():
        lo1 = _int(eval_term(chk.lower, env))
        hi1 = _int(eval_term(chk.upper, env))
        p0 = env[chk.param]
        for k1 in range(lo1, hi1 + 1):
            e1 = {**env, chk.index: k1}
            lo2 = _int(eval_term(chk.lower2, e1))
            hi2 = _int(eval_term(chk.upper2, e1))
            for k2 in range(lo2, hi2 + 1):
                e = {**e1, chk.index2: k2}
                try:
                    lhs = Fraction(0)
                    for d, bd in enumerate(chk.coeffs):
                        lhs += eval_term(bd, e) * eval_term(
                            chk.summand, {**e, chk.param: p0 + d}
                        )
                    d1 = eval_term(g1, {**e, chk.index: k1 + 1}) - eval_term(g1, e)
                    d2 = eval_term(g2, {**e, chk.index2: k2 + 1}) - eval_term(g2, e)
                except PoleError:
                    out.skipped += 1
                    continue
                out.tested += 1
                if lhs != d1 + d2:
                    out.failures.append(f"{e}: recurrence={lhs} telescoped={d1 + d2}")


def _run_boundary(chk: IdentityCheck, out: CheckOutcome) -> None:
    for env in chk.grid():
        vi = env["vi"]
        vj = env.get("vj", 0)
        for gi, gj in chk.samples:

            def g(expr: Expr, iv: int, jv: int) -> Fraction:
                return eval_term(expr, {"i": iv, "j": jv})

            def cells() -> Iterable[tuple[int, int]]:
                for iv in range(0, vi + 1):
                    if chk.shape == "rectangle":
                        top = vj
                    elif chk.shape == "triangle":
                        top = iv
                    else:  # antitriangle
                        top = vi - iv
                    for jv in range(0, top + 1):
                        yield iv, jv

            region = Fraction(0)
            for iv, jv in cells():
                region += g(gi, iv + 1, jv) - g(gi, iv, jv)
                region += g(gj, iv, jv + 1) - g(gj, iv, jv)
            boundary = Fraction(0)
            if chk.shape == "rectangle":
                for iv in range(0, vi + 1):
                    boundary += g(gj, iv, vj + 1) - g(gj, iv, 0)
                for jv in range(0, vj + 1):
                    boundary += g(gi, vi + 1, jv) - g(gi, 0, jv)
            elif chk.shape == "triangle":
                for iv in range(0, vi + 1):
                    boundary += g(gj, iv, iv + 1) - g(gj, iv, 0)
                for jv in range(0, vi + 1):
                    boundary += g(gi, vi + 1, jv) - g(gi, jv, jv)
            else:
                for iv in range(0, vi + 1):
                    boundary += g(gj, iv, vi - iv + 1) - g(gj, iv, 0)
                for jv in range(0, vi + 1):
                    boundary += g(gi, vi - jv + 1, jv) - g(gi, 0, jv)
            out.tested += 1
            if region != boundary:
                out.failures.append(f"{env} {chk.shape}: region={region} boundary={boundary}")


_RUNNERS = {
    "closed-form-sum": _run_closed_form_sum,
    "pointwise": _run_pointwise,
    "certificate-recurrence": _run_certificate,
    "antidifference": _run_antidifference,
    "double-sum-recurrence": _run_double_sum,
    "boundary-lemma": _run_boundary,
}


def run_check(chk: IdentityCheck) -> CheckOutcome:
    out = CheckOutcome(name=chk.name, tested=0, skipped=0)
    _RUNNERS[chk.kind](chk, out)
    if out.tested == 0:
        out.failures.append("degenerate grid: every point was skipped")
    return out


# -- grid helpers -------------------------------------------------------------

_X_SAMPLES = (Fraction(1, 3), Fraction(-1, 2), Fraction(3))
_Z_SAMPLES = (Fraction(2), Fraction(1, 2), Fraction(-2, 3))


def _grid(fn: Callable[[], Iterable[dict]]) -> GridFn:
    return fn


# -- the registry -------------------------------------------------------------

def build_registry() -> dict[str, IdentityCheck]:
    checks: list[IdentityCheck] = []
    add = checks.append

    # ---- binomial identities ------------------------------------------------
    add(IdentityCheck(
        name="appendix-c/chu-vandermonde",
        kind="closed-form-sum",
        description="sum_j C(a,j) C(b,c-j) = C(a+b,c)",
        summand=C(a, j) * C(b, c - j),
        index="j", lower=Const(Fraction(0)), upper=a,
        rhs=C(a + b, c),
        grid=_grid(lambda: [
            {"a": av, "b": bv, "c": cv}
            for av in range(0, 7) for bv in range(0, 7) for cv in range(0, av + bv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="appendix-c/alternating-shifted",
        kind="closed-form-sum",
        description="sum_k (-1)^k C(n,k) C(a+k,c) = (-1)^n C(a, c-n)",
        summand=SG(j) * C(n, j) * C(a + j, c),
        index="j", lower=Const(Fraction(0)), upper=n,
        rhs=SG(n) * C(a, c - n),
        grid=_grid(lambda: [
            {"n": nv, "a": av, "c": cv}
            for nv in range(0, 7) for av in range(-2, 7) for cv in range(0, 7)
        ]),
    ))
    add(IdentityCheck(
        name="appendix-c/convolution-vanishing",
        kind="closed-form-sum",
        description="sum_{jp} (-1)^jp C(s-t+jp,jp) C(s,j-jp) = (-1)^j C(j-t,j)",
        summand=SG(jp) * C(s - t + jp, jp) * C(s, j - jp),
        index="jp", lower=Const(Fraction(0)), upper=j,
        rhs=SG(j) * C(j - t, j),
        grid=_grid(lambda: [
            {"s": sv, "t": tv, "j": jv}
            for sv in range(1, 7) for tv in range(-1, sv + 2) for jv in range(0, sv + 1)
        ]),
    ))

    # ---- stock antidifferences ----------------------------------------------
    add(IdentityCheck(
        name="appendix-d/rising-binomial-antidifference",
        kind="antidifference",
        description="C(s+b+jp, jp-1) is an antidifference of C(s+b+jp, jp)",
        summand=C(s + b + jp, jp),
        antidifference=C(s + b + jp, jp - 1),
        index="jp", lower=Const(Fraction(0)), upper=u,
        closed_form=C(s + b + u + 1, u),
        grid=_grid(lambda: [
            {"s": sv, "b": bv, "u": uv}
            for sv in range(1, 6) for bv in range(-3, 4) for uv in range(0, sv + 3)
        ]),
    ))
    add(IdentityCheck(
        name="appendix-d/alternating-binomial-antidifference",
        kind="antidifference",
        description="(-1)^(jp+1) C(s-1,jp-1) is an antidifference of (-1)^jp C(s,jp)",
        summand=SG(jp) * C(s, jp),
        antidifference=SG(jp + 1) * C(s - 1, jp - 1),
        index="jp", lower=Const(Fraction(0)), upper=u,
        closed_form=SG(u) * C(s - 1, u),
        grid=_grid(lambda: [
            {"s": sv, "u": uv} for sv in range(1, 9) for uv in range(0, sv + 2)
        ]),
    ))

    # ---- boundary bookkeeping for double sums --------------------------------
    samples = (
        (C(i + j, 2), i * j),
        ((2 * i - j) ** 2, C(2 * j + i, 3)),
    )
    for shape, desc in (
        ("rectangle", "independent lower/upper bounds"),
        ("triangle", "inner upper bound equals the outer index"),
        ("antitriangle", "inner upper bound is the complement of the outer index"),
    ):
        add(IdentityCheck(
            name=f"appendix-b/{shape}-boundary",
            kind="boundary-lemma",
            description=f"telescoped double sum over a {shape} region ({desc}) "
                        "equals its two single boundary sums",
            shape=shape,
            samples=samples,
            grid=_grid(lambda: [
                {"vi": vi, "vj": vj} for vi in range(1, 7) for vj in range(1, 5)
            ]),
        ))

    # ---- generating-function product rule (row recursion, third part) --------
    f_one = (
        SG(i + t) * (2 * s - i) * C(2 * s, i) * C(i, t)
        * (1 / (2 * s - t)) * (1 / (1 - x) ** (s - t))
        * (-(s * x / (i + 1) - 1) - x * (s - t) / (i + 1))
    )
    f_two = (
        SG(i + t + 1) * (2 * s - i - 1) * C(2 * s, i + 1) * C(i + 1, t)
        * (1 / (2 * s - t)) * (1 / (1 - x) ** (s - t))
    )
    add(IdentityCheck(
        name="gf/product-rule-antidifference",
        kind="antidifference",
        description="difference of the two third-part summands in the row "
                    "recursion telescopes via (-1)^(i+t+1) C(2s,i+1) C(i,t-1) (1-x)^(t-s)",
        summand=f_one - f_two,
        antidifference=SG(i + t + 1) * C(2 * s, i + 1) * C(i, t - 1) * (1 / (1 - x) ** (s - t)),
        index="t", lower=Const(Fraction(0)), upper=i,
        closed_form=C(2 * s, i + 1) * (1 - x) ** (i + 1 - s),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "x": xv}
            for sv in range(1, 6) for iv in range(0, sv) for xv in _X_SAMPLES
        ]),
    ))

    # ---- bivariate generating function --------------------------------------
    add(IdentityCheck(
        name="double-gf/inner-coefficient-recurrence",
        kind="certificate-recurrence",
        description="the z-coefficient sum S(t) of the third part satisfies "
                    "-(2s-t-1) z S(t) + (z-1)(t+1) S(t+1) = 0",
        summand=SG(i) * (2 * s - i) * C(2 * s, i) * C(i, t) * z**i,
        param="t", index="i",
        lower=Const(Fraction(0)), upper=2 * s,
        coeffs=(-(2 * s - t - 1) * z, (z - 1) * (t + 1)),
        certificate=i - t,
        inhom=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "t": tv, "z": zv}
            for sv in range(1, 5) for tv in range(0, 2 * sv - 1) for zv in _Z_SAMPLES
        ]),
    ))
    add(IdentityCheck(
        name="double-gf/inner-coefficient-closed-form",
        kind="closed-form-sum",
        description="S(t) = -2s z^t (z-1)^(2s-t-1) C(2s-1,t)",
        summand=SG(i) * (2 * s - i) * C(2 * s, i) * C(i, t) * z**i,
        index="i", lower=Const(Fraction(0)), upper=2 * s,
        rhs=-2 * s * z**t * (z - 1) ** (2 * s - t - 1) * C(2 * s - 1, t),
        grid=_grid(lambda: [
            {"s": sv, "t": tv, "z": zv}
            for sv in range(1, 5) for tv in range(0, 2 * sv) for zv in _Z_SAMPLES
        ]),
    ))
    add(IdentityCheck(
        name="double-gf/outer-sum-recurrence",
        kind="certificate-recurrence",
        description="the alternating t-sum of the third part obeys "
                    "(xz-1)^2 S(s) + (x-1) S(s+1) = 0 via its certificate",
        summand=SG(t) * 2 * s * z**t * (z - 1) ** (2 * s - t - 1) * C(2 * s - 1, t)
                / ((2 * s - t) * (1 - x) ** (s - t)),
        param="s", index="t",
        lower=Const(Fraction(0)), upper=2 * s - 1,
        coeffs=((x * z - 1) ** 2, x - 1),
        certificate=t * (z - 1)
                    * (2 * x * z + 2 * z * s - 3 + 2 * z * s * x + z - 4 * s - z * x * t + t)
                    / ((2 * s + 2 - t) * (2 * s - t + 1)),
        inhom=None,
        grid=_grid(lambda: [
            {"s": sv, "z": zv, "x": xv}
            for sv in range(1, 5) for zv in _Z_SAMPLES for xv in _X_SAMPLES
        ]),
    ))
    add(IdentityCheck(
        name="double-gf/outer-assembly",
        kind="closed-form-sum",
        description="sum_t (-1)^t z^t (z-1)^(2s-t-1) C(2s,t) (1-x)^(t-s) "
                    "= (xz-1)^(2s) / ((1-x)^s (z-1))",
        summand=SG(t) * z**t * (z - 1) ** (2 * s - t - 1) * C(2 * s, t) * (1 - x) ** (t - s),
        index="t", lower=Const(Fraction(0)), upper=2 * s,
        rhs=(x * z - 1) ** (2 * s) / ((1 - x) ** s * (z - 1)),
        grid=_grid(lambda: [
            {"s": sv, "z": zv, "x": xv}
            for sv in range(1, 6) for zv in _Z_SAMPLES for xv in _X_SAMPLES
        ]),
    ))

    # ---- upper square, strict lower triangle ---------------------------------
    add(IdentityCheck(
        name="q1/vertical-convolution",
        kind="closed-form-sum",
        description="sum_{i'=0}^{i} C(s,i') C(s,i-i') = C(2s,i) for i <= s",
        summand=C(s, ip) * C(s, i - ip),
        index="ip", lower=Const(Fraction(0)), upper=i,
        rhs=C(2 * s, i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 8) for iv in range(0, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q1/alpha-reduction",
        kind="pointwise",
        description="the horizontal half of the binomial-family coefficient "
                    "collapses to (-1)^i C(2s,i) above the diagonal",
        lhs=SG(j) * Sum("jp", Const(Fraction(0)), i, C(s, jp) * C(s, j - jp))
            + SG(i) * Sum("ip", Const(Fraction(0)), i, C(s, ip) * C(s, i - ip)),
        rhs=SG(j) * Sum("jp", Const(Fraction(0)), i, C(s, jp) * C(s, j - jp))
            + SG(i) * C(2 * s, i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(0, sv) for jv in range(iv + 1, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q1/first-term-cancellation",
        kind="pointwise",
        description="first-term contribution of the h-family plus the vertical "
                    "binomial-family coefficient vanishes above the diagonal",
        lhs=Sum("jp", Const(Fraction(0)), i,
                SG(j - jp) * SG(jp + 1) * C(s, jp) * C(s, j - jp))
            + SG(j) * Sum("jp", Const(Fraction(0)), i, C(s, jp) * C(s, j - jp)),
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(0, sv) for jv in range(iv + 1, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q1/second-term-value",
        kind="closed-form-sum",
        description="sum_{jp=i+1}^{j} (-1)^(j-jp) C(s+jp-i-1,s) C(s,j-jp) = 1",
        summand=SG(j - jp) * C(s + jp - i - 1, s) * C(s, j - jp),
        index="jp", lower=i + 1, upper=j,
        rhs=Const(Fraction(1)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 8) for iv in range(0, sv) for jv in range(iv + 1, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q1/third-term-vanishes",
        kind="closed-form-sum",
        description="sum_{jp=0}^{j} (-1)^jp C(s-t-1+jp,jp) C(s,j-jp) = 0 for 0 <= t < j",
        summand=SG(jp) * C(s - t - 1 + jp, jp) * C(s, j - jp),
        index="jp", lower=Const(Fraction(0)), upper=j,
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "t": tv, "j": jv}
            for sv in range(1, 7) for jv in range(1, sv + 1) for tv in range(0, jv)
        ]),
    ))

    # ---- lower square, strict upper triangle ---------------------------------
    add(IdentityCheck(
        name="q3/horizontal-chu",
        kind="closed-form-sum",
        description="sum_{i'=j-s}^{s} C(s,i') C(s,i-i') = C(2s,i) when i >= j",
        summand=C(s, ip) * C(s, i - ip),
        index="ip", lower=j - s, upper=s,
        rhs=C(2 * s, i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for jv in range(sv, 2 * sv + 1) for iv in range(jv, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/second-term-sum-interior",
        kind="closed-form-sum",
        description="sum_{jp=0}^{i-1} (-1)^jp C(i-jp-1,s) C(s,j-jp) = (-1)^(s+j) "
                    "for s <= j < i",
        summand=SG(jp) * C(i - jp - 1, s) * C(s, j - jp),
        index="jp", lower=Const(Fraction(0)), upper=i - 1,
        rhs=SG(s + j),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(sv + 1, 2 * sv + 1) for jv in range(sv, iv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/second-term-sum-boundary",
        kind="closed-form-sum",
        description="the same sum vanishes once j >= i (in the band j >= s)",
        summand=SG(jp) * C(i - jp - 1, s) * C(s, j - jp),
        index="jp", lower=Const(Fraction(0)), upper=i - 1,
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jv in range(iv, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/second-term-recurrence",
        kind="certificate-recurrence",
        description="the second-term summand satisfies a first-order recurrence "
                    "in j with equal coefficient polynomials",
        summand=SG(jp) * C(i - jp - 1, s) * C(s, j - jp),
        param="j", index="jp",
        lower=Const(Fraction(0)), upper=i - 1,
        coeffs=(i - j - 1, i - j - 1),
        certificate=(i - jp) * (-s + j - jp) / (j + 1 - jp),
        inhom=None,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 6) for iv in range(sv + 1, 2 * sv + 1)
            for jv in range(sv, 2 * sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/inner-sum-recurrence",
        kind="certificate-recurrence",
        description="the inner t-sum of the third-term double sum obeys a "
                    "second-order recurrence in jp",
        summand=SG(t) / (2 * s - t) * C(2 * s - i, t) * C(2 * s - t - 1 - jp, s - jp),
        param="jp", index="t",
        lower=Const(Fraction(0)), upper=2 * s - i,
        coeffs=(
            -(jp - s) * (i - jp - s - 1),
            2 * i * jp - i * s - 2 * jp * jp + 2 * i - 5 * jp + s - 3,
            -(jp + 2) * (i - jp - 2),
        ),
        certificate=t * (jp - s) * (2 * s - t) / (-2 * s + t + 1 + jp),
        inhom=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(2, 6) for iv in range(sv + 1, 2 * sv + 1)
            for jpv in range(0, sv - 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/inner-sum-closed-form",
        kind="closed-form-sum",
        description="for jp >= i-s the inner t-sum equals "
                    "(-1)^(s+i+jp)/i * C(s,jp)/C(2s,i)",
        summand=SG(t) / (2 * s - t) * C(2 * s - i, t) * C(2 * s - t - 1 - jp, s - jp),
        index="t", lower=Const(Fraction(0)), upper=2 * s - i,
        rhs=SG(s + i + jp) / i * C(s, jp) / C(2 * s, i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(1, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jpv in range(max(0, iv - sv), sv + 1)
        ]),
    ))
    correction = Sum(
        "t", Const(Fraction(1)), s - jp,
        SG(t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1) / C(s - jp, t),
    )
    add(IdentityCheck(
        name="q3/correction-vanishes",
        kind="pointwise",
        description="the correction sum is empty of support once jp >= i-s",
        lhs=correction,
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(1, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jpv in range(max(0, iv - sv), sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/inner-sum-with-correction",
        kind="pointwise",
        description="for every jp in [0,s] the inner t-sum equals the closed "
                    "form plus the correction sum",
        lhs=Sum("t", Const(Fraction(0)), 2 * s - i,
                SG(t) / (2 * s - t) * C(2 * s - i, t) * C(2 * s - t - 1 - jp, s - jp)),
        rhs=SG(s + i + jp) / i * C(s, jp) / C(2 * s, i) + correction,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(1, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jpv in range(0, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/correction-recurrence",
        kind="certificate-recurrence",
        description="the correction summand obeys a first-order recurrence in jp",
        summand=SG(t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1) / C(s - jp, t),
        param="jp", index="t",
        lower=Const(Fraction(1)), upper=s - jp,
        coeffs=(s - jp, jp + 1),
        certificate=(s + t - 1) * (jp - s) / (i - jp - 1),
        inhom=None,  # the summation range depends on jp; see correction-summed-step
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(2, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jpv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/correction-summed-step",
        kind="pointwise",
        description="(s-jp) S(jp) + (jp+1) S(jp+1) = s C(i-jp-1,s)/(i-jp-1) "
                    "for the correction sums",
        lhs=(s - jp) * correction
            + (jp + 1) * Sum("t", Const(Fraction(1)), s - jp - 1,
                             SG(t + 1) / t * C(i - jp - 2, s + t - 1) * C(s, t - 1)
                             / C(s - jp - 1, t)),
        rhs=s * C(i - jp - 1, s) / (i - jp - 1),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(2, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jpv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/breakpoint-value",
        kind="closed-form-sum",
        description="at jp = i-s-1 the inner t-sum equals 1/(2s-i+1) "
                    "- C(s,i-s-1)/(i C(2s,i))",
        summand=SG(t) / (2 * s - t) * C(2 * s - i, t) * C(3 * s - t - i, 2 * s - i + 1),
        index="t", lower=Const(Fraction(0)), upper=2 * s - i,
        rhs=1 / (2 * s - i + 1) - C(s, i - s - 1) / (i * C(2 * s, i)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(2, 8) for iv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/breakpoint-recurrence",
        kind="certificate-recurrence",
        description="the jp = i-s-1 summand obeys a second-order recurrence in i",
        summand=SG(t) / (2 * s - t) * C(2 * s - i, t) * C(3 * s - t - i, 2 * s - i + 1),
        param="i", index="t",
        lower=Const(Fraction(0)), upper=2 * s - i,
        coeffs=(
            (i - 2 * s - 1) * i,
            -(2 * i - s + 1) * (i - 2 * s),
            (i - s + 1) * (i - 2 * s + 1),
        ),
        certificate=-(i - 2 * s - 1) * s * (2 * s - t) * t / ((i - 2 * s) * (-3 * s + t + i)),
        inhom=None,
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(2, 8) for iv in range(sv + 1, 2 * sv - 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/first-term-outer-sum",
        kind="pointwise",
        description="the closed-form part of the inner sum, convolved over jp, "
                    "gives (-1)^j C(2s,j)",
        lhs=SG(s + i + j) * i * C(2 * s, i)
            * Sum("jp", Const(Fraction(0)), s,
                  SG(jp) * (SG(s + i + jp) / i * C(s, jp) / C(2 * s, i)) * C(s, j - jp)),
        rhs=SG(j) * C(2 * s, j),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(sv + 1, 2 * sv + 1)
            for jv in range(sv, 2 * sv + 1)
        ]),
    ))

    # the residual double sum and its recurrence
    residual = SG(s + i + j) * i * C(2 * s, i) * Sum(
        "jp", Const(Fraction(0)), s,
        Sum("t", Const(Fraction(1)), s - jp,
            SG(jp + t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1)
            * C(s, j - jp) / C(s - jp, t)),
    )

    def _residual_shift(delta: int) -> Expr:
        # the same double sum with i replaced by i + delta
        return SG(s + i + delta + j) * (i + delta) * C(2 * s, i + delta) * Sum(
            "jp", Const(Fraction(0)), s,
            Sum("t", Const(Fraction(1)), s - jp,
                SG(jp + t + 1) / t * C(i + delta - jp - 1, s + t - 1) * C(s, t - 1)
                * C(s, j - jp) / C(s - jp, t)),
        )

    add(IdentityCheck(
        name="q3/double-sum-value",
        kind="pointwise",
        description="the residual double sum equals (-1)^(j+1) C(2s,j) strictly "
                    "above the diagonal of the lower square",
        lhs=residual,
        rhs=SG(j + 1) * C(2 * s, j),
        grid=_grid(lambda: [
            {"s": sv, "j": jv, "i": iv}
            for sv in range(1, 6) for jv in range(sv, 2 * sv + 1)
            for iv in range(jv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/double-sum-diagonal-vanishes",
        kind="pointwise",
        description="the residual double sum vanishes on the diagonal",
        lhs=residual,
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "j": iv, "i": iv}
            for sv in range(1, 7) for iv in range(sv, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/double-sum-recurrence",
        kind="double-sum-recurrence",
        description="the residual double-sum summand satisfies -F(i)+F(i+1) = "
                    "Delta_t(R_t F) with R_jp = 0",
        summand=SG(i + t + jp) * (i / t) * C(2 * s, i) * C(i - jp - 1, s + t - 1)
                * C(s, t - 1) * C(s, j - jp) / C(s - jp, t),
        param="i",
        index="jp", lower=Const(Fraction(0)), upper=s,
        index2="t", lower2=Const(Fraction(1)), upper2=s - jp,
        coeffs=(Const(Fraction(-1)), Const(Fraction(1))),
        certificate=Const(Fraction(0)),
        certificate2=(s - jp - t + 1) * (s + t - 1) / (i * (-jp + i + 1 - s - t)),
        gterm2=SG(i + t + jp) * (s + t - 1) / (i + 1 - s - t - jp) * C(2 * s, i)
               * C(i - jp - 1, s + t - 1) * C(s, t - 1) * C(s, j - jp) / C(s - jp, t - 1),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(2, 6) for jv in range(sv, 2 * sv + 1)
            for iv in range(sv, 2 * sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/double-sum-step-offdiagonal",
        kind="pointwise",
        description="one i-step of the residual double sum is homogeneous "
                    "strictly above the diagonal",
        lhs=_residual_shift(1) - residual,
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "j": jv, "i": iv}
            for sv in range(1, 6) for jv in range(sv, 2 * sv)
            for iv in range(jv + 1, 2 * sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/double-sum-step-diagonal",
        kind="pointwise",
        description="on the diagonal the i-step of the residual double sum "
                    "produces (-1)^(j+1) C(2s,i)",
        lhs=_residual_shift(1) - residual,
        rhs=SG(j + 1) * C(2 * s, i),
        grid=_grid(lambda: [
            {"s": sv, "j": iv, "i": iv}
            for sv in range(1, 7) for iv in range(sv, 2 * sv)
        ]),
    ))
    gt_boundary = SG(i + jp + 1) * C(2 * s, i) * C(i - jp - 1, s - 1) * C(s, j - jp)
    add(IdentityCheck(
        name="q3/inhom-boundary-term",
        kind="pointwise",
        description="the inner certificate evaluated at t=1 reduces to "
                    "(-1)^(i+jp+1) C(2s,i) C(i-jp-1,s-1) C(s,j-jp)",
        lhs=SG(i + 1 + jp) * s / (i - s - jp) * C(2 * s, i)
            * C(i - jp - 1, s) * C(s, j - jp),
        rhs=gt_boundary,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv, "jp": jpv}
            for sv in range(2, 6) for iv in range(sv, 2 * sv)
            for jv in range(sv, 2 * sv + 1) for jpv in range(0, sv)
            if iv - sv - jpv != 0
        ]),
    ))
    add(IdentityCheck(
        name="q3/inhom-antidifference",
        kind="antidifference",
        description="above the diagonal the t=1 boundary term telescopes in jp "
                    "via (-1)^(i+jp) C(2s,i) C(i-jp,i-j) C(i-j-1,i-s-jp)",
        summand=gt_boundary,
        antidifference=SG(i + jp) * C(2 * s, i) * C(i - jp, i - j) * C(i - j - 1, i - s - jp),
        index="jp", lower=Const(Fraction(0)), upper=s,
        closed_form=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "j": jv, "i": iv}
            for sv in range(1, 7) for jv in range(sv, 2 * sv + 1)
            for iv in range(jv + 1, 2 * sv + 1)
        ]),
    ))
    gt_diag = SG(i + jp + 1) * C(2 * s, i) * C(i - jp - 1, s - 1) * C(s, i - jp)
    gt_diag_next = SG(i + 1 + jp + 1) * C(2 * s, i + 1) * C(i - jp, s - 1) * C(s, i + 1 - jp)
    add(IdentityCheck(
        name="q3/inhom-diagonal-recurrence",
        kind="pointwise",
        description="on the diagonal the summed boundary term obeys "
                    "(i-2s) g(i) + (i+1) g(i+1) = 0; the printed pointwise "
                    "certificate is vacuous over the integers (its zero factor "
                    "covers the summand's whole support), so the summed "
                    "recurrence is checked instead",
        lhs=(i - 2 * s) * Sum("jp", Const(Fraction(0)), s - 1, gt_diag)
            + (i + 1) * Sum("jp", Const(Fraction(0)), s - 1, gt_diag_next),
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 8) for iv in range(sv, 2 * sv - 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/inhom-diagonal-value",
        kind="closed-form-sum",
        description="on the diagonal the jp-sum of the boundary term equals "
                    "(-1)^(s+1) C(2s,i) for s <= i <= 2s-1",
        summand=gt_diag,
        index="jp", lower=Const(Fraction(0)), upper=s - 1,
        rhs=SG(s + 1) * C(2 * s, i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 8) for iv in range(sv, 2 * sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/top-row-antidifference",
        kind="antidifference",
        description="in the bottom row of the square the inner t-sum telescopes "
                    "directly",
        summand=SG(s + j) * 2 * s * SG(jp + t + 1) / t * C(2 * s - jp - 1, s + t - 1)
                * C(s, t - 1) * C(s, j - jp) / C(s - jp, t),
        antidifference=SG(s + j + jp + t) * (s + t - 1) / t * C(2 * s - 1 - jp, s + t - 1)
                       * C(s, t - 1) * C(s, j - jp) / C(s - jp, t),
        index="t", lower=Const(Fraction(1)), upper=s - jp,
        closed_form=None,
        grid=_grid(lambda: [
            {"s": sv, "j": jv, "jp": jpv}
            for sv in range(1, 7) for jv in range(sv, 2 * sv + 1) for jpv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="q3/top-row-inner-value",
        kind="pointwise",
        description="the telescoped bottom-row inner sum splits into a "
                    "convolution part and a second piece",
        lhs=Sum("t", Const(Fraction(1)), s - jp,
                SG(s + j) * 2 * s * SG(jp + t + 1) / t * C(2 * s - jp - 1, s + t - 1)
                * C(s, t - 1) * C(s, j - jp) / C(s - jp, t)),
        rhs=SG(j + 1) * C(s, jp) * C(s, j - jp)
            + SG(s + jp + j) * C(s, j - jp) * C(2 * s - 1 - jp, s - 1),
        grid=_grid(lambda: [
            {"s": sv, "j": jv, "jp": jpv}
            for sv in range(1, 7) for jv in range(sv, 2 * sv + 1) for jpv in range(0, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q3/top-row-second-piece-antidifference",
        kind="antidifference",
        description="the second piece telescopes in jp via "
                    "(-1)^(s+jp+j) s/(j-2s) C(2s-jp,s) C(s-1,j-jp)",
        summand=SG(s + jp + j) * C(s, j - jp) * C(2 * s - 1 - jp, s - 1),
        antidifference=SG(s + jp + j) * s / (j - 2 * s) * C(2 * s - jp, s) * C(s - 1, j - jp),
        index="jp", lower=Const(Fraction(0)), upper=s,
        closed_form=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "j": jv} for sv in range(1, 8) for jv in range(sv, 2 * sv)
        ]),
    ))

    # ---- mixed quadrant (upper-right) ----------------------------------------
    add(IdentityCheck(
        name="q4/inner-sum-transform",
        kind="pointwise",
        description="the inner t-sum in the mixed quadrant splits into a closed "
                    "form plus a correction over t <= jp",
        lhs=Sum("t", Const(Fraction(0)), i,
                SG(t) / (2 * s - t) * C(i, t) * C(s - t - 1 + jp, jp)),
        rhs=SG(i + jp) / (2 * s - i) * C(s, jp) / C(2 * s, i)
            + Sum("t", Const(Fraction(1)), jp,
                  SG(t + 1) / t * C(s, t - 1) * C(s + jp - i - 1, s + t - 1) / C(jp, t)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "jp": jpv}
            for sv in range(1, 7) for iv in range(0, sv + 1) for jpv in range(0, sv + 1)
        ]),
    ))
    beta3v_raw = SG(i + j + 1) * (2 * s - i) * C(2 * s, i) * Sum(
        "jp", Const(Fraction(0)), s,
        Sum("t", Const(Fraction(0)), i,
            SG(t + jp) / (2 * s - t) * C(i, t) * C(s - t - 1 + jp, jp) * C(s, j - jp)),
    )
    beta3v_ds = Sum(
        "jp", Const(Fraction(0)), s,
        Sum("t", Const(Fraction(1)), jp,
            SG(jp + t) / t * C(s, t - 1) * C(s + jp - i - 1, s + t - 1)
            * C(s, j - jp) / C(jp, t)),
    )

    def _beta3v_ds_shift(delta: int) -> Expr:
        return Sum(
            "jp", Const(Fraction(0)), s,
            Sum("t", Const(Fraction(1)), jp,
                SG(jp + t) / t * C(s, t - 1) * C(s + jp - i - delta - 1, s + t - 1)
                * C(s, j - jp) / C(jp, t)),
        )

    add(IdentityCheck(
        name="q4/transformed-double-sum",
        kind="pointwise",
        description="the raw third-term double sum equals its transformed form "
                    "with the extracted (-1)^(j+1) C(2s,j)",
        lhs=beta3v_raw,
        rhs=SG(j + 1) * C(2 * s, j) + SG(i + j) * (2 * s - i) * C(2 * s, i) * beta3v_ds,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 6) for iv in range(0, sv + 1) for jv in range(sv, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q4/beta2h-recurrence",
        kind="certificate-recurrence",
        description="the horizontal second-term sum satisfies a first-order "
                    "recurrence in i",
        summand=SG(s + i + j + ip) * C(2 * s, j) * C(j - ip - 1, s) * C(s, i - ip),
        param="i", index="ip",
        lower=Const(Fraction(0)), upper=s,
        coeffs=(-i - 1 + j, i - j + 1),
        certificate=(j - ip) * (-s + i - ip) / (i + 1 - ip),
        inhom=None,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(2, 6) for iv in range(0, sv) for jv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    beta2h = Sum("ip", Const(Fraction(0)), s,
                 SG(s + i + j + ip) * C(2 * s, j) * C(j - ip - 1, s) * C(s, i - ip))
    beta2h_next = Sum("ip", Const(Fraction(0)), s,
                      SG(s + i + 1 + j + ip) * C(2 * s, j) * C(j - ip - 1, s) * C(s, i + 1 - ip))
    step_rhs = C(2 * s, i + 1) * C(2 * s - i - 1, j - i - 1) * C(j - i - 2, j - s - 1)
    add(IdentityCheck(
        name="q4/beta2h-step",
        kind="pointwise",
        description="one i-step of the horizontal second-term sum equals "
                    "(-1)^(i+j+s+1) C(2s,i+1) C(2s-i-1,j-i-1) C(j-i-2,j-s-1)",
        lhs=beta2h_next - beta2h,
        rhs=SG(i + j + s + 1) * step_rhs,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(0, sv) for jv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q4/beta3v-step",
        kind="pointwise",
        description="one i-step of the transformed third-term double sum equals "
                    "the same quantity with opposite sign",
        lhs=SG(i + 1 + j) * (2 * s - i - 1) * C(2 * s, i + 1) * _beta3v_ds_shift(1)
            - SG(i + j) * (2 * s - i) * C(2 * s, i) * beta3v_ds,
        rhs=SG(i + j + s) * step_rhs,
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(1, 7) for iv in range(0, sv) for jv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q4/beta3v-recurrence",
        kind="double-sum-recurrence",
        description="the transformed third-term summand satisfies -F(i)+F(i+1) "
                    "= Delta_t(R_t F) with R_jp = 0",
        summand=SG(i + j + jp + t) * ((2 * s - i) / t) * C(2 * s, i) * C(s, t - 1)
                * C(s + jp - i - 1, s + t - 1) * C(s, j - jp) / C(jp, t),
        param="i",
        index="jp", lower=Const(Fraction(0)), upper=s,
        index2="t", lower2=Const(Fraction(1)), upper2=jp,
        coeffs=(Const(Fraction(-1)), Const(Fraction(1))),
        certificate=Const(Fraction(0)),
        certificate2=-(jp - t + 1) * (s + t - 1) / ((-s - jp + i + 1) * (i + 1)),
        gterm2=-SG(i + j + jp + t) * (s + t - 1) * (2 * s - i)
               / ((i + 1 - s - jp) * (i + 1)) * C(2 * s, i) * C(s, t - 1)
               * C(s + jp - i - 1, s + t - 1) * C(s, j - jp) / C(jp, t - 1),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(2, 6) for iv in range(0, sv) for jv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q4/step-inner-antidifference",
        kind="antidifference",
        description="the single sum left by the multisum telescoping is itself "
                    "telescoping in jp",
        summand=SG(i + j + jp) * s * (i - 2 * s) / ((-s - jp + i + 1) * (i + 1))
                * C(2 * s, i) * C(s + jp - i - 1, s) * C(s, j - jp),
        antidifference=SG(i + j + jp + 1) * C(2 * s, i + 1) * C(s + jp - i - 2, j - i - 1)
                       * C(j - i - 2, j - jp),
        index="jp", lower=Const(Fraction(1)), upper=s,
        closed_form=SG(i + j + s) * C(2 * s, i + 1) * C(2 * s - i - 1, j - i - 1)
                    * C(j - i - 2, j - s - 1),
        grid=_grid(lambda: [
            {"s": sv, "i": iv, "j": jv}
            for sv in range(2, 7) for iv in range(0, sv) for jv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q4/initial-value-second-horizontal",
        kind="pointwise",
        description="at i = 0 the horizontal second-term sum is "
                    "(-1)^(s+j) C(2s,j) C(j-1,s)",
        lhs=Sum("ip", Const(Fraction(0)), s,
                SG(s + j + ip) * C(2 * s, j) * C(j - ip - 1, s) * C(s, -ip)),
        rhs=SG(s + j) * C(2 * s, j) * C(j - 1, s),
        grid=_grid(lambda: [
            {"s": sv, "j": jv} for sv in range(1, 8) for jv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="q4/initial-value-third-vertical",
        kind="closed-form-sum",
        description="sum_jp (-1)^jp C(s-1+jp,jp) C(s,j-jp) = (-1)^s C(2s,j) C(j-1,s)",
        summand=SG(jp) * C(s - 1 + jp, jp) * C(s, j - jp),
        index="jp", lower=Const(Fraction(0)), upper=s,
        rhs=SG(s) * C(2 * s, j) * C(j - 1, s),
        grid=_grid(lambda: [
            {"s": sv, "j": jv} for sv in range(1, 8) for jv in range(sv, 2 * sv + 1)
        ]),
    ))

    # ---- right-hand-side bookkeeping -----------------------------------------
    add(IdentityCheck(
        name="rhs/alternating-partial-sum",
        kind="closed-form-sum",
        description="sum_{jp=0}^{i} (-1)^jp C(s,jp) = (-1)^i C(s-1,i)",
        summand=SG(jp) * C(s, jp),
        index="jp", lower=Const(Fraction(0)), upper=i,
        rhs=SG(i) * C(s - 1, i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(0, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/alternating-partial-sum-upper",
        kind="closed-form-sum",
        description="sum_{jp=i-s}^{s} (-1)^jp C(s,jp) = (-1)^(s+i) C(s-1,2s-i)",
        summand=SG(jp) * C(s, jp),
        index="jp", lower=i - s, upper=s,
        rhs=SG(s + i) * C(s - 1, 2 * s - i),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(sv + 1, 2 * sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/stirling-t0",
        kind="closed-form-sum",
        description="sum_i (-1)^(i+s) i^(s+1) C(s,i) = s (s+1)!/2",
        summand=SG(i + s) * i ** (s + 1) * C(s, i),
        index="i", lower=Const(Fraction(0)), upper=s,
        rhs=s * fact_expr(s + 1) / 2,
        grid=_grid(lambda: [{"s": sv} for sv in range(1, 11)]),
    ))
    add(IdentityCheck(
        name="rhs/stirling-t1",
        kind="closed-form-sum",
        description="sum_i (-1)^(i+s) i^s C(s,i) = s!",
        summand=SG(i + s) * i**s * C(s, i),
        index="i", lower=Const(Fraction(0)), upper=s,
        rhs=fact_expr(s),
        grid=_grid(lambda: [{"s": sv} for sv in range(1, 11)]),
    ))
    add(IdentityCheck(
        name="rhs/stirling-higher",
        kind="closed-form-sum",
        description="sum_i (-1)^(i+s) i^(s+1-t) C(s,i) = 0 for t > 1",
        summand=SG(i + s) * i ** (s + 1 - t) * C(s, i),
        index="i", lower=Const(Fraction(0)), upper=s,
        rhs=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "t": tv} for sv in range(2, 11) for tv in range(2, sv + 1)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/second-term-column",
        kind="closed-form-sum",
        description="sum_{jp=i+1}^{s} C(s+jp-i-1,s) = C(2s-i,s+1)",
        summand=C(s + jp - i - 1, s),
        index="jp", lower=i + 1, upper=s,
        rhs=C(2 * s - i, s + 1),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/third-term-column",
        kind="pointwise",
        description="the double sum of third-term column weights has the closed "
                    "form (2s-i)/s C(2s,i) C(2s-i-1,s) (1 - 1/(2 C(2s-1,s)))",
        lhs=SG(i) * (2 * s - i) * C(2 * s, i)
            * Sum("t", Const(Fraction(0)), i,
                  Sum("jp", i + 1, s,
                      SG(t) / (2 * s - t) * C(i, t) * C(s - t - 1 + jp, jp))),
        rhs=SG(i) * (2 * s - i) / s * C(2 * s, i) * C(2 * s - i - 1, s)
            * (1 - 1 / (2 * C(2 * s - 1, s))),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 8) for iv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/h3-first-sum",
        kind="closed-form-sum",
        description="sum_t (-1)^t/(2s-t) C(i,t) C(2s-t,s-t) = C(2s-i-1,s)/s",
        summand=SG(t) / (2 * s - t) * C(i, t) * C(2 * s - t, s - t),
        index="t", lower=Const(Fraction(0)), upper=i,
        rhs=C(2 * s - i - 1, s) / s,
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/h3-second-sum",
        kind="closed-form-sum",
        description="sum_t (-1)^t/(2s-t) C(i,t) C(s-t+i,s-t) "
                    "= C(2s-i-1,s)/(2s C(2s-1,s))",
        summand=SG(t) / (2 * s - t) * C(i, t) * C(s - t + i, s - t),
        index="t", lower=Const(Fraction(0)), upper=i,
        rhs=C(2 * s - i - 1, s) / (2 * s * C(2 * s - 1, s)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(0, sv)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/h3-first-sum-recurrence",
        kind="certificate-recurrence",
        description="the first column-sum summand obeys "
                    "(s-i-1) F(i) + (i-2s+1) F(i+1) = Delta_t(R F)",
        summand=SG(t) / (2 * s - t) * C(i, t) * C(2 * s - t, s - t),
        param="i", index="t",
        lower=Const(Fraction(0)), upper=s,
        coeffs=(s - i - 1, i - 2 * s + 1),
        certificate=t * (2 * s - t) / (i - t + 1),
        inhom=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(0, sv - 1)
        ]),
    ))
    add(IdentityCheck(
        name="rhs/h3-second-sum-recurrence",
        kind="certificate-recurrence",
        description="the second column-sum summand obeys "
                    "-(i+1)(i-s+1) F(i) + (i+1)(i-2s+1) F(i+1) = Delta_t(R F)",
        summand=SG(t) / (2 * s - t) * C(i, t) * C(s - t + i, s - t),
        param="i", index="t",
        lower=Const(Fraction(0)), upper=s,
        coeffs=(-(i + 1) * (i - s + 1), (i + 1) * (i - 2 * s + 1)),
        certificate=t * (2 * s - t) * (s - t + i + 1) / (i - t + 1),
        inhom=Const(Fraction(0)),
        grid=_grid(lambda: [
            {"s": sv, "i": iv} for sv in range(1, 9) for iv in range(0, sv - 1)
        ]),
    ))

    registry = {}
    for chk in checks:
        if chk.name in registry:
            raise ValueError(f"duplicate check name {chk.name}")
        registry[chk.name] = chk
    return registry


_REGISTRY: dict[str, IdentityCheck] | None = None


def registry() -> dict[str, IdentityCheck]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = build_registry()
    return _REGISTRY


def run_registry(pattern: str = "*") -> Report:
    """Run every registered check whose name matches the glob pattern."""
    report = Report(title=f"identity registry [{pattern}]")
    for name, chk in sorted(registry().items()):
        if not fnmatch.fnmatch(name, pattern):
            continue
        out = run_check(chk)
        report.record(
            name,
            {"kind": chk.kind, "tested": out.tested, "skipped": out.skipped},
            "all points agree",
            "ok" if out.passed else "; ".join(out.failures[:3]),
            passed=out.passed,
        )
    return report


def check_certificate(chk: IdentityCheck) -> CheckOutcome:
    if chk.kind not in ("certificate-recurrence", "double-sum-recurrence"):
        raise ValueError(f"{chk.name} is not a certificate check")
    return run_check(chk)


def check_antidifference(chk: IdentityCheck) -> CheckOutcome:
    if chk.kind != "antidifference":
        raise ValueError(f"{chk.name} is not an antidifference check")
    return run_check(chk)


def check_closed_form_sum(chk: IdentityCheck) -> CheckOutcome:
    if chk.kind not in ("closed-form-sum", "pointwise"):
        raise ValueError(f"{chk.name} is not a closed-form check")
    return run_check(chk)


def check_boundary_lemmas(chk: IdentityCheck) -> CheckOutcome:
    if chk.kind != "boundary-lemma":
        raise ValueError(f"{chk.name} is not a boundary lemma")
    return run_check(chk)


def _mutation_fields(chk: IdentityCheck) -> list[str]:
    fields = []
    if chk.certificate is not None:
        fields.append("certificate")
    if chk.certificate2 is not None:
        fields.append("certificate2")
    if chk.antidifference is not None:
        fields.append("antidifference")
    return fields


def mutation_survivors(chk: IdentityCheck) -> list[str]:
    """Names of single-coefficient certificate perturbations that go undetected.

    Each integer constant in each certificate/antidifference expression is
    bumped by one; the check must then fail.  An empty list means the harness
    catches every such corruption.
    """
    survivors = []
    for fname in _mutation_fields(chk):
        original = getattr(chk, fname)
        for idx, mutated in enumerate(perturbations(original)):
            trial = replace(chk, **{fname: mutated})
            if fname == "certificate2" and chk.gterm2 is not None:
                # the simplified inner G must track the certificate it encodes
                trial = replace(trial, gterm2=None)
            out = run_check(trial)
            if out.passed:
                survivors.append(f"{chk.name}:{fname}[{idx}]")
    return survivors


def certificate_mutation_report(pattern: str = "*") -> Report:
    report = Report(title=f"certificate mutation detection [{pattern}]")
    for name, chk in sorted(registry().items()):
        if not fnmatch.fnmatch(name, pattern):
            continue
        if not _mutation_fields(chk):
            continue
        bad = mutation_survivors(chk)
        report.record(
            name,
            {"kind": chk.kind},
            "every perturbed certificate detected",
            "ok" if not bad else f"undetected: {bad}",
            passed=not bad,
        )
    return report
