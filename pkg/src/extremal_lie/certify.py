"""Certification pipeline for graph realizations by extremal elements.

Given a set of matrix generators realizing one of the family graphs,
this module

* verifies the realization (commutation pattern, extremality, closure
  dimension, catalog basis, sampled identities),
* normalises the generators to a canonical gauge with `fixtriangle`
  and exact scalings, reads off the vector of extremal-form values,
* recovers the defining parameters of the standard realization from
  the two gauge-invariant form values, and
* certifies that two realizations of the same family are isomorphic by
  an explicit basis correspondence whose bracket tables are verified
  on every pair of basis elements.

All computation is exact.  Square roots needed by the normalisation
are taken in the working field when possible; otherwise the whole
computation is lifted to a quadratic extension and retried, and only
then does the pipeline fail with a diagnostic.
"""

import json
import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .fields import (NoSquareRoot, QuadraticExtension, lift_element, QQ)
from .graphs import build_family_graph, catalog, expected_catalog_size
from .presentation import evaluate_monomial
from .extremal import (extremal_form_value, is_extremal, fixtriangle,
                       check_premet, HypothesisFailed)
from .realizations import (lie_closure, build_generators, InvalidParameters,
                           generators_D, generators_B)


class CertifyError(Exception):
    """Base class for certification failures."""


class NoRootInField(CertifyError):
    """A parameter equation has no root in the working field (a field
    extension may help)."""


class ConditionViolated(CertifyError):
    """A Zariski-open hypothesis of the matching theorems fails."""


class NormalizationFailed(CertifyError):
    """The canonical gauge could not be reached (a required square root
    is missing even after the allowed quadratic extensions)."""


class FormMismatch(CertifyError):
    """After normalisation the form vectors disagree: the two algebras
    are not matched by this recipe."""


class StructureMismatch(CertifyError):
    """Form vectors agree but bracket tables differ under the basis
    correspondence (this would be a genuine finding)."""


# ---------------------------------------------------------------------------
# form-value vectors
# ---------------------------------------------------------------------------

PSI_LENGTH = {"D": lambda n: n + 4, "B": lambda n: n + 2,
              "A": lambda n: n + 1, "C": lambda n: n - 1}


@dataclass
class PsiVector:
    """The ordered tuple of extremal-form values that pins down a
    realization of the family graph up to isomorphism."""
    family: str
    n: int
    values: tuple

    def __post_init__(self):
        want = PSI_LENGTH[self.family](self.n)
        if len(self.values) != want:
            raise ValueError(
                f"family {self.family} at n={self.n} needs {want} "
                f"form values, got {len(self.values)}")

    def __eq__(self, other):
        return (self.family == other.family and self.n == other.n
                and all(a == b for a, b in zip(self.values, other.values)))


def long_monomial_indices(n):
    """Index word of the long monomial x_{3 up n-2} x_{n down 2}
    (outermost factor first)."""
    return tuple(range(3, n - 1)) + tuple(range(n, 1, -1))


def psi(family, ctx, gens):
    """Evaluate the form-value vector of the (extremal) generators."""
    n = len(gens)
    f = lambda i, j: extremal_form_value(ctx, gens[i - 1], gens[j - 1])
    fm = lambda i, m: extremal_form_value(ctx, gens[i - 1], m)
    chain_stop = n - 1 if family == "B" else n
    values = [f(i, i + 1) for i in range(1, chain_stop)]
    if family in ("D", "B", "A"):
        values.append(f(1, 3))
        values.append(fm(1, ctx.bracket(gens[1], gens[2])))
    if family in ("D", "B"):
        values.append(f(n - 2, n))
    if family == "D":
        values.append(fm(n - 2, ctx.bracket(gens[n - 2], gens[n - 1])))
    if family in ("D", "B"):
        z = evaluate_monomial(ctx.bracket, gens, long_monomial_indices(n))
        values.append(fm(1, z))
    return PsiVector(family, n, tuple(values))


# ---------------------------------------------------------------------------
# graph and genericity checks
# ---------------------------------------------------------------------------

def graph_realization_check(ctx, gens, graph):
    """Adjacency must coincide with non-commutation, and every generator
    must be extremal in the closure.  Returns (flag, witnesses)."""
    n = len(gens)
    witnesses = []
    if graph.n != n:
        return False, [f"graph has {graph.n} vertices, {n} generators"]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            commutes = ctx.is_zero(ctx.bracket(gens[i - 1], gens[j - 1]))
            if commutes == graph.has_edge(i, j):
                kind = "commuting edge" if commutes else "non-commuting non-edge"
                witnesses.append(f"{kind} {{{i},{j}}}")
    for i, g in enumerate(gens, start=1):
        ok, _ = is_extremal(ctx, g)
        if not ok:
            witnesses.append(f"generator {i} not extremal")
    return not witnesses, witnesses


def _triangle_open(ctx, x, y, z):
    fxy = extremal_form_value(ctx, x, y)
    fxz = extremal_form_value(ctx, x, z)
    fyz = extremal_form_value(ctx, y, z)
    fxyz = extremal_form_value(ctx, x, ctx.bracket(y, z))
    return not (fxyz * fxyz - 2 * fxy * fxz * fyz).is_zero()


def check_genericity(family, ctx, gens, params=None):
    """Evaluate the Zariski-open matching hypotheses on the generators
    as given.  Returns an ordered dict of named flags."""
    n = len(gens)
    f = lambda i, j: extremal_form_value(ctx, gens[i - 1], gens[j - 1])
    out = {}
    if family in ("D", "B", "A"):
        out["triangle123"] = _triangle_open(ctx, gens[0], gens[1], gens[2])
    if family == "D":
        out["triangle_end"] = _triangle_open(
            ctx, gens[n - 1], gens[n - 2], gens[n - 3])
    chain_stop = n - 1 if family == "B" else n
    out["chain_nonzero"] = all(
        not f(i, i + 1).is_zero() for i in range(1, chain_stop))
    if family == "B":
        out["cross_nonzero"] = not f(n - 2, n).is_zero()
    if family in ("D", "B"):
        z = evaluate_monomial(ctx.bracket, gens, long_monomial_indices(n))
        flong = extremal_form_value(ctx, gens[0], z)
        sign = ctx.field(1 if n % 2 else -1)
        if family == "B":
            out["long_nonzero"] = not flong.is_zero()
            out["long_generic"] = flong != 8 * sign
        elif n % 2:
            out["long_generic"] = flong != ctx.field(8)
    if family == "D" and params is not None:
        alpha, beta = params
        out["param_open"] = not ((alpha + 2) * beta * (beta + 1)).is_zero()
        kappa = (1 + beta).sqrt()
        if n % 2:
            lam = alpha / (alpha + 2)
        else:
            lam = -alpha * kappa / ((alpha + 2) * (1 + beta + kappa))
        out["lambda_open"] = not (lam * (2 - beta + lam * beta) - 1).is_zero()
    if family == "B" and params is not None:
        (gamma,) = params
        out["param_open"] = not (gamma * (gamma + 1)).is_zero()
    return out


# ---------------------------------------------------------------------------
# normalisation recipes
# ---------------------------------------------------------------------------

def _lift_pair(ctx, gens, radicand):
    ext = QuadraticExtension(ctx.field, radicand)
    return ctx.lift(ext), [linalg.lift_matrix(g, ext) for g in gens]


def normalize_generators(family, ctx, gens, max_lifts=2):
    """Bring the generators into the canonical gauge of the family.

    Returns (ctx, gens) over the original field or a quadratic-extension
    tower of it.  Raises NormalizationFailed if square roots are still
    missing after `max_lifts` extensions, HypothesisFailed if a triangle
    hypothesis fails, ConditionViolated on a zero scaling value."""
    recipe = {"D": _normalize_D, "B": _normalize_B,
              "A": _normalize_A, "C": _normalize_C}[family]
    for _ in range(max_lifts + 1):
        try:
            return recipe(ctx, list(gens))
        except NoSquareRoot as exc:
            if exc.element is None:
                raise NormalizationFailed(str(exc)) from exc
            ctx, gens = _lift_pair(ctx, gens, exc.element)
    raise NormalizationFailed(
        f"square roots missing after {max_lifts} quadratic extensions")


def _chain_scale(ctx, gens, i, target):
    """Scale x_i so that f(x_{i-1}, x_i) = target (1-based index i)."""
    val = extremal_form_value(ctx, gens[i - 2], gens[i - 1])
    if val.is_zero():
        raise ConditionViolated(f"f(x_{i-1}, x_{i}) = 0")
    gens[i - 1] = ctx.scale(gens[i - 1], target / val)


def _normalize_D(ctx, g):
    F = ctx.field
    n = len(g)
    g[0], g[1], g[2], _ = fixtriangle(
        ctx, g[0], g[1], g[2], (F(-8), F(1), F(2)))
    g[n - 3], g[n - 2], g[n - 1], _ = fixtriangle(
        ctx, g[n - 3], g[n - 2], g[n - 1], (F(2), F(2), F(1)))
    for i in range(4, n - 2):
        _chain_scale(ctx, g, i, F(2))
    return ctx, g


def _normalize_B(ctx, g):
    F = ctx.field
    n = len(g)
    g[0], g[1], g[2], _ = fixtriangle(
        ctx, g[0], g[1], g[2], (F(-8), F(1), F(2)))
    for i in range(4, n):
        _chain_scale(ctx, g, i, F(2))
    cross = extremal_form_value(ctx, g[n - 3], g[n - 1])
    if cross.is_zero():
        raise ConditionViolated(f"f(x_{n-2}, x_{n}) = 0")
    g[n - 1] = ctx.scale(g[n - 1], F(2) / cross)
    return ctx, g


def _normalize_A(ctx, g):
    F = ctx.field
    g[0], g[1], g[2], _ = fixtriangle(
        ctx, g[0], g[1], g[2], (F(1), F(1), F(1)))
    for i in range(4, len(g) + 1):
        _chain_scale(ctx, g, i, F(1))
    return ctx, g


def _normalize_C(ctx, g):
    F = ctx.field
    for i in range(2, len(g) + 1):
        _chain_scale(ctx, g, i, F(1))
    return ctx, g


# ---------------------------------------------------------------------------
# parameter solvers
# ---------------------------------------------------------------------------

def _quadratic_roots(a, b, c):
    """Roots of a t^2 + b t + c in the coefficients' field."""
    if a.is_zero():
        if b.is_zero():
            return []
        return [-c / b]
    disc = b * b - 4 * a * c
    try:
        r = disc.sqrt()
    except NoSquareRoot:
        raise NoRootInField(
            "quadratic discriminant is not a square in the field "
            "(a quadratic extension would provide roots)") from None
    roots = [(-b + r) / (2 * a)]
    if not r.is_zero():
        roots.append((-b - r) / (2 * a))
    return roots


def solve_params_D(f_long, f_short, n):
    """All (alpha, beta) whose canonical realization has the given
    gauge-invariant form values, for the parity of n.

    The canonical gauge satisfies, with l = f_long and s = f_short^2,

        n odd:   l = 4 alpha (1+beta) + 8,
                 s = (2 alpha + 4)^2 (-1-beta);
        n even:  l = 8 ((kappa-2) alpha - 2) / (alpha+2)^2,
                 s = -16 (1+beta) / (alpha+2)^2,

    where kappa is the square root of 1+beta selected by the special
    vector of the realization.  Eliminating beta gives a quadratic in
    alpha (odd n; l = 8 forces alpha = 0) and a pair of quadratics over
    the field extended by a root of -s (even n).  Every returned
    candidate is re-validated by forward substitution."""
    field = f_long.field
    l, s = f_long, f_short * f_short
    candidates = []
    if n % 2:
        if l == field(8):
            roots = [field(0)]
        else:
            roots = _quadratic_roots(l - 8, 4 * (l - 8) + s, 4 * (l - 8))
        for alpha in roots:
            if (alpha + 2).is_zero():
                continue
            beta = -1 - s / (2 * alpha + 4) ** 2
            if l != 4 * alpha * (1 + beta) + 8:
                continue
            candidates.append((alpha, beta))
    else:
        try:
            w = (-s).sqrt()
        except NoSquareRoot:
            raise NoRootInField(
                "no root of -f_short^2 in the field "
                "(a quadratic extension would provide one)") from None
        roots = []
        for ww in (w, -w):
            roots.extend(_quadratic_roots(
                l - 2 * ww, 4 * l - 4 * ww + 16, 4 * l + 16))
        for alpha in roots:
            if (alpha + 2).is_zero():
                continue
            if alpha.is_zero():
                if not (4 * l + 16).is_zero():
                    continue
                kappa = w / 2
            else:
                kappa = (l * (alpha + 2) ** 2 + 16 * (alpha + 1)) / (8 * alpha)
            beta = kappa * kappa - 1
            if l * (alpha + 2) ** 2 != 8 * ((kappa - 2) * alpha - 2):
                continue
            if s * (alpha + 2) ** 2 != -16 * (1 + beta):
                continue
            if (alpha, beta) not in candidates:
                candidates.append((alpha, beta))
    if not candidates:
        raise NoRootInField("no valid (alpha, beta) over the field")
    return candidates


def d_branch_root(f_long, alpha, beta):
    """The special-vector line coordinate c that realizes the given
    canonical f_long at even rank: c = (kappa - 1)/beta with the kappa
    branch read off from the f_long relation (None for alpha = 0, where
    both branches give the same form values)."""
    if alpha.is_zero():
        return None
    kappa = (f_long * (alpha + 2) ** 2 + 16 * (alpha + 1)) / (8 * alpha)
    return (kappa - 1) / beta


def solve_param_B(f_long, n):
    """The gamma whose canonical realization has the given f_long.

    The canonical gauge satisfies

        f_long = (-1)^(n+1) c_n gamma/(gamma+1),  c_n = 8 (n odd), 4 (n even),

    so gamma = u/(c_n - u) with u = (-1)^(n+1) f_long.  Excluded are
    f_long = 0 (gamma = 0), the pole u = c_n, and the matching theorem's
    open condition f_long != 8*(-1)^(n+1) (for odd n that is the pole)."""
    field = f_long.field
    if f_long.is_zero():
        raise ConditionViolated("f_long = 0")
    if f_long == field(8 if n % 2 else -8):
        raise ConditionViolated("f_long = 8*(-1)^(n+1)")
    u = f_long if n % 2 else -f_long
    c = field(8 if n % 2 else 4)
    if u == c:
        raise ConditionViolated("f_long at the excluded pole")
    gamma = u / (c - u)
    if (gamma * (gamma + 1)).is_zero():
        raise ConditionViolated("recovered gamma has gamma*(gamma+1) = 0")
    return gamma


# ---------------------------------------------------------------------------
# sampled identity checks
# ---------------------------------------------------------------------------

def check_quartic_identities(ctx, xk, xl, xm, t, u):
    """The two rewriting identities for an extremal xk and arbitrary
    elements (derived from the square-bracket identity and Jacobi):

    Q3:  [xk,[xl,[xm,[xk,t]]]] - [xk,[xm,[xl,[xk,t]]]]
           = 1/2 ( f(xk,[[xl,xm],t]) xk - f(xk,t) [xk,[xl,xm]]
                   - f(xk,[xl,xm]) [xk,t] )
    Q3a: the pairing of Q3 against f(u, .), with the right side fully
         expanded into form values.
    """
    br, sc = ctx.bracket, ctx.scale
    half = ctx.field.one / 2
    m1 = br(xk, br(xl, br(xm, br(xk, t))))
    m2 = br(xk, br(xm, br(xl, br(xk, t))))
    y = br(xl, xm)
    fk_yt = extremal_form_value(ctx, xk, br(y, t))
    fk_t = extremal_form_value(ctx, xk, t)
    fk_y = extremal_form_value(ctx, xk, y)
    rhs = sc(ctx.sub(sc(xk, fk_yt),
                     ctx.add(sc(br(xk, y), fk_t), sc(br(xk, t), fk_y))),
             half)
    q3 = ctx.eq(ctx.sub(m1, m2), rhs)
    lhs_a = ctx.form(u, m1) - ctx.form(u, m2)
    rhs_a = half * (fk_yt * ctx.form(u, xk)
                    - fk_t * ctx.form(u, br(xk, y))
                    - fk_y * ctx.form(u, br(xk, t)))
    return {"Q3": q3, "Q3a": lhs_a == rhs_a}


def _random_element(ctx, rng):
    out = ctx.zero()
    for b in ctx.basis():
        c = ctx.field(rng.randint(-3, 3))
        if not c.is_zero():
            out = ctx.add(out, ctx.scale(b, c))
    return out


# ---------------------------------------------------------------------------
# certification report
# ---------------------------------------------------------------------------

@dataclass
class CertReport:
    family: str
    n: int
    field: str
    params: dict
    extremal: list
    graph_match: bool
    dim: int
    dim_expected: int
    catalog_rank: int
    spanning_samples: dict
    psi: list
    genericity: dict
    identities: dict
    verdict: str

    def to_dict(self):
        return {
            "family": self.family, "n": self.n, "field": self.field,
            "params": self.params, "extremal": self.extremal,
            "graph_match": self.graph_match, "dim": self.dim,
            "dim_expected": self.dim_expected,
            "catalog_rank": self.catalog_rank,
            "spanning_samples": self.spanning_samples, "psi": self.psi,
            "genericity": self.genericity, "identities": self.identities,
            "verdict": self.verdict,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def certify_family(family, n, params=(), field=QQ, seed=0,
                   identity_samples=50, spanning_samples=100):
    """Build the family realization and verify it end to end."""
    rng = random.Random(seed)
    mats, _ = build_generators(family, n, field, params)
    closure = lie_closure(mats, field)
    graph = build_family_graph(family, n)

    extremal_flags = [is_extremal(closure, g)[0] for g in mats]
    graph_ok, _ = graph_realization_check(closure, mats, graph)
    expected = expected_catalog_size(family, n)

    entries = catalog(family, n)
    span = linalg.SpanSolver(field, closure.ambient_dim ** 2)
    for e in entries:
        img = evaluate_monomial(closure.bracket, mats, e.indices)
        span.add(closure.flatten(img))
    catalog_rank = span.rank

    tried = passed = 0
    for _ in range(spanning_samples):
        k = rng.randint(1, 2 * n - 3)
        idx = tuple(rng.randint(1, n) for _ in range(k))
        img = evaluate_monomial(closure.bracket, mats, idx)
        tried += 1
        if span.contains(closure.flatten(img)):
            passed += 1
    spanning = {"tried": tried, "passed": passed}

    psi_vec = psi(family, closure, mats)
    gen_flags = check_genericity(family, closure, mats,
                                 params=[field(p) for p in params] or None)

    id_counts = {"premet": {"tried": 0, "passed": 0},
                 "Q3": {"tried": 0, "passed": 0},
                 "Q3a": {"tried": 0, "passed": 0}}
    for _ in range(identity_samples):
        x = mats[rng.randrange(n)]
        y = _random_element(closure, rng)
        z = _random_element(closure, rng)
        flags = check_premet(closure, x, y, z)
        id_counts["premet"]["tried"] += 1
        id_counts["premet"]["passed"] += all(flags.values())
        k, l, m = (rng.randrange(n) for _ in range(3))
        q = check_quartic_identities(closure, mats[k], mats[l], mats[m],
                                     _random_element(closure, rng),
                                     _random_element(closure, rng))
        for name in ("Q3", "Q3a"):
            id_counts[name]["tried"] += 1
            id_counts[name]["passed"] += q[name]

    # the genericity evaluations are hypotheses of the matching theorems,
    # reported for information; a realization on a non-generic locus is
    # still a valid realization, so they do not enter the verdict
    checks = [all(extremal_flags), graph_ok, closure.dim == expected,
              catalog_rank == expected, passed == tried,
              all(c["passed"] == c["tried"] for c in id_counts.values())]
    param_names = {"D": ("alpha", "beta"), "B": ("gamma",),
                   "A": (), "C": ()}[family]
    return CertReport(
        family=family, n=n, field=str(field),
        params={k: str(field(v)) for k, v in zip(param_names, params)},
        extremal=extremal_flags, graph_match=graph_ok,
        dim=closure.dim, dim_expected=expected, catalog_rank=catalog_rank,
        spanning_samples=spanning,
        psi=[str(v) for v in psi_vec.values],
        genericity=gen_flags, identities=id_counts,
        verdict="pass" if all(checks) else "fail")


# ---------------------------------------------------------------------------
# isomorphism certification
# ---------------------------------------------------------------------------

@dataclass
class MatchCertificate:
    family: str
    n: int
    field: str
    params1: dict
    params2: dict
    psi1: list
    psi2: list
    dim: int
    basis_map: list
    pairs_checked: int
    verdict: str


def _to_field(ctx, gens, fld):
    if ctx.field.same(fld):
        return ctx, gens
    return ctx.lift(fld), [linalg.lift_matrix(g, fld) for g in gens]


def _psi_in(vec, fld):
    return PsiVector(vec.family, vec.n,
                     tuple(lift_element(v, fld) for v in vec.values))


def _rebuild_model(family, n, fld, target_psi):
    """Standard generators over `fld` whose canonical gauge reproduces
    `target_psi`; returns (params, ctx, gens) in a possibly larger
    field.  Raises FormMismatch if no solved parameter candidate does."""
    if family == "B":
        flong = target_psi.values[-1]
        candidates = [(solve_param_B(flong, n),)]
    else:
        flong = target_psi.values[-1]
        fshort = target_psi.values[n - 4]
        candidates = solve_params_D(flong, fshort, n)
    for cand in candidates:
        try:
            if family == "B":
                mats, _ = generators_B(n, fld, cand[0])
            elif n % 2 == 0:
                mats, _ = generators_D(n, fld, cand[0], cand[1],
                                       force_special_c=d_branch_root(
                                           flong, cand[0], cand[1]))
            else:
                mats, _ = generators_D(n, fld, cand[0], cand[1])
        except InvalidParameters:
            continue
        closure = lie_closure(mats, fld)
        if closure.dim != expected_catalog_size(family, n):
            continue
        try:
            mctx, mg = normalize_generators(family, closure, mats)
        except (NormalizationFailed, HypothesisFailed, ConditionViolated):
            continue
        target = _psi_in(target_psi, mctx.field)
        if target == psi(family, mctx, mg):
            return cand, mctx, mg
        if family == "D":
            # the canonical gauge leaves one sign free: negating the
            # last three generators preserves every fixed target and
            # f_long while flipping f_short
            flipped = list(mg)
            for i in (n - 3, n - 2, n - 1):
                flipped[i] = mctx.neg(flipped[i])
            if target == psi(family, mctx, flipped):
                return cand, mctx, flipped
    raise FormMismatch(
        "no solved parameter candidate reproduces the normalized form values")


def _catalog_images(family, n, ctx, gens):
    return [evaluate_monomial(ctx.bracket, gens, e.indices)
            for e in catalog(family, n)]


def _basis_span(ctx, images):
    span = linalg.SpanSolver(ctx.field, ctx.ambient_dim ** 2)
    for img in images:
        if not span.add(ctx.flatten(img)):
            raise StructureMismatch("catalog images are dependent")
    return span


def _verify_table(ctx, basis_a, span_a, basis_b, label):
    """Check that a_i -> b_i intertwines the brackets: for every pair,
    [b_i, b_j] = sum_k c_k b_k with c the coordinates of [a_i, a_j].
    Returns the number of pairs checked."""
    pairs = 0
    for i in range(len(basis_a)):
        for j in range(i + 1, len(basis_a)):
            c = span_a.coords(ctx.flatten(ctx.bracket(basis_a[i],
                                                      basis_a[j])))
            if c is None:
                raise StructureMismatch(f"{label}: bracket leaves the span")
            rhs = ctx.zero()
            for k, ck in enumerate(c):
                if not ck.is_zero():
                    rhs = ctx.add(rhs, ctx.scale(basis_b[k], ck))
            if not ctx.eq(ctx.bracket(basis_b[i], basis_b[j]), rhs):
                raise StructureMismatch(
                    f"{label}: bracket tables differ at pair ({i},{j})")
            pairs += 1
    return pairs


def match_algebras(alg1, gens1, alg2, gens2, family):
    """Certify that two realizations of the same family graph are
    isomorphic: normalise both, recover standard parameters, rebuild the
    standard model for each side, and verify the composed catalog-basis
    correspondence on every pair of basis elements."""
    n = len(gens1)
    if len(gens2) != n or alg1.dim != alg2.dim:
        raise FormMismatch("realizations have different dimensions")

    ctx1, g1 = normalize_generators(family, alg1, gens1)
    ctx2, g2 = _to_field(alg2, gens2, ctx1.field)
    ctx2, g2 = normalize_generators(family, ctx2, g2)
    ctx1, g1 = _to_field(ctx1, g1, ctx2.field)
    psi1 = psi(family, ctx1, g1)
    psi2 = psi(family, ctx2, g2)

    if family in ("A", "C"):
        # no parameters: the canonical gauges must agree outright, and
        # each side serves as its own standard model
        if _psi_in(psi1, ctx2.field) != psi2:
            raise FormMismatch("normalized form vectors differ")
        params1 = params2 = ()
        mctx1, m1 = ctx1, g1
        mctx2, m2 = ctx2, g2
    else:
        # building model 2 over model 1's (possibly extended) field
        # keeps all fields on a single quadratic-extension chain
        params1, mctx1, m1 = _rebuild_model(family, n, ctx2.field, psi1)
        params2, mctx2, m2 = _rebuild_model(
            family, n, mctx1.field, _psi_in(psi2, mctx1.field))

    # raise everything to the largest field reached
    top = mctx2.field
    ctx1, g1 = _to_field(ctx1, g1, top)
    ctx2, g2 = _to_field(ctx2, g2, top)
    mctx1, m1 = _to_field(mctx1, m1, top)
    mctx2, m2 = _to_field(mctx2, m2, top)

    b1 = _catalog_images(family, n, ctx1, g1)
    b2 = _catalog_images(family, n, ctx2, g2)
    c1 = _catalog_images(family, n, mctx1, m1)
    c2 = _catalog_images(family, n, mctx2, m2)
    span_b1 = _basis_span(ctx1, b1)
    span_b2 = _basis_span(ctx2, b2)
    span_c2 = _basis_span(mctx2, c2)

    # side 1 against its standard model, side 2 against its own
    pairs = _verify_table(ctx1, b1, span_b1, c1, "side 1 vs model")
    _verify_table(ctx2, b2, span_b2, c2, "side 2 vs model")

    # glue through the common model algebra: both model closures are
    # the same matrix algebra, so expressing model-1 basis elements in
    # the model-2 catalog basis is the identity map of that algebra
    glue = []
    for img in c1:
        coords = span_c2.coords(mctx2.flatten(img))
        if coords is None:
            raise StructureMismatch("model closures do not coincide")
        glue.append(coords)
    phi = []
    for coords in glue:
        acc = ctx2.zero()
        for k, ck in enumerate(coords):
            if not ck.is_zero():
                acc = ctx2.add(acc, ctx2.scale(b2[k], ck))
        phi.append(acc)

    # the composed correspondence b1_i -> phi_i must intertwine brackets
    _verify_table(ctx1, b1, span_b1, phi, "composed map")

    param_names = {"D": ("alpha", "beta"), "B": ("gamma",),
                   "A": (), "C": ()}[family]
    return MatchCertificate(
        family=family, n=n, field=str(top),
        params1={k: str(v) for k, v in zip(param_names, params1)},
        params2={k: str(v) for k, v in zip(param_names, params2)},
        psi1=[str(v) for v in psi1.values],
        psi2=[str(v) for v in psi2.values],
        dim=alg1.dim,
        basis_map=[[str(v) for v in row] for row in glue],
        pairs_checked=pairs,
        verdict="pass")
