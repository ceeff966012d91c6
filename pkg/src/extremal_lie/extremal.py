"""Extremal elements, the extremal form, pair classification and the
exponential / triangle-normalisation machinery.

All functions work on a *Lie context*: an object with

* ``field``            -- the scalar field,
* ``bracket(a, b)``    -- the Lie bracket of two elements,
* ``add/sub/scale/neg``-- linear operations on elements,
* ``is_zero(a)``, ``eq(a, b)``,
* ``flatten(a)``       -- coordinates of an element as a list,
* ``basis()``          -- a spanning basis (for certificates),
* ``form(a, b)``       -- the associative symmetric form (may be the zero
  form for the degenerate algebras L(Gamma, 0)).

Both :class:`~extremal_lie.presentation.GradedLieAlgebra` (via the
adapter methods added there) and the matrix closures in
:mod:`extremal_lie.realizations` provide this interface.
"""

from dataclasses import dataclass, field as dc_field

from .fields import NoSquareRoot


class NotExtremal(ValueError):
    """[x, [x, y]] left the line through x for some y."""


class NotProportional(ValueError):
    """An element expected to be a multiple of another was not."""


class HypothesisFailed(ValueError):
    """A precondition of a normalisation step does not hold."""


def proportionality(ctx, x, w):
    """The scalar t with w = t*x, for nonzero x.  Raises NotProportional."""
    fx = ctx.flatten(x)
    fw = ctx.flatten(w)
    t = None
    for a, b in zip(fx, fw):
        if not a.is_zero():
            t = b / a
            break
    if t is None:
        raise ValueError("x is zero")
    for a, b in zip(fx, fw):
        if not (b - t * a).is_zero():
            raise NotProportional("element is not a multiple of x")
    return t


def extremal_form_value(ctx, x, y):
    """f_x(y), defined by [x, [x, y]] = f_x(y) x for extremal x."""
    w = ctx.bracket(x, ctx.bracket(x, y))
    try:
        return proportionality(ctx, x, w)
    except NotProportional:
        raise NotExtremal("[x,[x,y]] is not a multiple of x") from None


@dataclass
class ExtremalCertificate:
    """Witness that x is extremal: the values of the extremal functional
    on every basis element of the context."""
    values: list = dc_field(default_factory=list)

    def functional(self, coords):
        s = None
        for c, v in zip(coords, self.values):
            s = c * v if s is None else s + c * v
        return s


def is_extremal(ctx, x):
    """(True, certificate) if [x,[x,b]] stays on the line through x for
    every basis element b; (False, None) otherwise."""
    values = []
    for b in ctx.basis():
        w = ctx.bracket(x, ctx.bracket(x, b))
        try:
            values.append(proportionality(ctx, x, w))
        except NotProportional:
            return False, None
    return True, ExtremalCertificate(values)


def exp_ad(ctx, t, a, y):
    """exp(t ad a) applied to y, for extremal (sandwich-free) a:
    y + t [a,y] + t^2/2 [a,[a,y]].  Verifies (ad a)^3 y = 0."""
    ay = ctx.bracket(a, y)
    aay = ctx.bracket(a, ay)
    aaay = ctx.bracket(a, aay)
    if not ctx.is_zero(aaay):
        raise HypothesisFailed("(ad a)^3 does not vanish on y")
    half = ctx.field.one / 2
    return ctx.add(y, ctx.add(ctx.scale(ay, t),
                              ctx.scale(aay, t * t * half)))


# ---------------------------------------------------------------------------
# pair classification
# ---------------------------------------------------------------------------

PAIR_KINDS = ("Proportional", "Abelian2", "Heisenberg", "Sl2")

#: dimension of the subalgebra generated by the pair, per kind
PAIR_CLOSURE_DIM = {"Proportional": 1, "Abelian2": 2,
                    "Heisenberg": 3, "Sl2": 3}


def subalgebra_closure_dim(ctx, elements, max_rounds=None):
    """Dimension of the Lie subalgebra generated by the elements."""
    from .linalg import SpanSolver
    flat0 = ctx.flatten(elements[0])
    ss = SpanSolver(ctx.field, len(flat0))
    basis = []
    for e in elements:
        if ss.add(ctx.flatten(e)):
            basis.append(e)
    frontier = list(basis)
    rounds = 0
    while frontier:
        rounds += 1
        if max_rounds is not None and rounds > max_rounds:
            break
        new = []
        for u in frontier:
            for v in list(basis):
                w = ctx.bracket(u, v)
                if ss.add(ctx.flatten(w)):
                    basis.append(w)
                    new.append(w)
        frontier = new
    return ss.rank


def classify_pair(ctx, x, y):
    """Algebraic classification of a pair of extremal elements.

    Returns one of PAIR_KINDS.  Cross-validates the answer against the
    dimension of the subalgebra generated by the pair."""
    fx = ctx.flatten(x)
    fy = ctx.flatten(y)
    try:
        proportionality(ctx, x, y)
        kind = "Proportional"
    except NotProportional:
        xy = ctx.bracket(x, y)
        if ctx.is_zero(xy):
            kind = "Abelian2"
        else:
            f = extremal_form_value(ctx, x, y)
            kind = "Heisenberg" if f.is_zero() else "Sl2"
    dim = subalgebra_closure_dim(ctx, [x, y])
    if dim != PAIR_CLOSURE_DIM[kind]:
        raise AssertionError(
            f"pair classified {kind} but closure dimension is {dim}")
    return kind


# ---------------------------------------------------------------------------
# Premet-type identity checks
# ---------------------------------------------------------------------------

def check_premet(ctx, x, y, z):
    """Verify the standard identities for an extremal element x and
    arbitrary y, z.  Returns a dict name -> bool.

    P1: 2 [[x,y],[x,z]] = f(x,[y,z]) x + f(x,z) [x,y] - f(x,y) [x,z]
    P2: 2 [x,[y,[x,z]]] = f(x,[y,z]) x - f(x,z) [x,y] - f(x,y) [x,z]
    P5: f(x, [y,[x,z]]) = -f(x,z) f(x,y)
    AS: f(x, [y,z]) = f([x,y], z)    (associativity of the form)
    SM: f(y, z) = f(z, y)            (symmetry of the form)
    """
    br, sc, add, sub = ctx.bracket, ctx.scale, ctx.add, ctx.sub
    two = ctx.field.one * 2
    fxy = extremal_form_value(ctx, x, y)
    fxz = extremal_form_value(ctx, x, z)
    yz = br(y, z)
    fxyz = extremal_form_value(ctx, x, yz)
    xy = br(x, y)
    xz = br(x, z)

    lhs1 = sc(br(xy, xz), two)
    rhs1 = add(sc(x, fxyz), sub(sc(xy, fxz), sc(xz, fxy)))
    p1 = ctx.eq(lhs1, rhs1)

    yxz = br(y, xz)
    lhs2 = sc(br(x, yxz), two)
    rhs2 = sub(sc(x, fxyz), add(sc(xy, fxz), sc(xz, fxy)))
    p2 = ctx.eq(lhs2, rhs2)

    p5 = (extremal_form_value(ctx, x, yxz) + fxz * fxy).is_zero()

    as_ok = (ctx.form(x, yz) - ctx.form(xy, z)).is_zero()
    sm_ok = (ctx.form(y, z) - ctx.form(z, y)).is_zero()
    return {"P1": p1, "P2": p2, "P5": p5, "AS": as_ok, "SM": sm_ok}


# ---------------------------------------------------------------------------
# triangle normalisation
# ---------------------------------------------------------------------------

@dataclass
class TriangleTranscript:
    s: object = None
    scalings: tuple = ()
    negated: str = ""


def fixtriangle(ctx, x, y, z, targets):
    """Normalise a triple of extremal elements.

    Preconditions: f(x,[y,z])^2 != 2 f(x,y) f(x,z) f(y,z) and
    f(x,y) != 0 != f(y,z).  Produces (x', y', z') with

        f(x',y') = pi,  f(x',z') = rho,  f(y',z') = sigma,
        f(x', [y',z']) = 0,

    where (pi, rho, sigma) are the requested targets with
    pi*rho*sigma = f(x,y) f(x,z') f(y,z) * square; the achievable sign
    pattern is handled by negating one element.  Raises NoSquareRoot if a
    scaling radicand has no root in the field (callers may lift to a
    quadratic extension and retry), HypothesisFailed if a precondition
    fails.  Returns (x', y', z', transcript)."""
    pi, rho, sigma = targets
    fxy = extremal_form_value(ctx, x, y)
    fyz = extremal_form_value(ctx, y, z)
    fxz = extremal_form_value(ctx, x, z)
    yz = ctx.bracket(y, z)
    fxyz = extremal_form_value(ctx, x, yz)
    if fxy.is_zero() or fyz.is_zero():
        raise HypothesisFailed("f(x,y) and f(y,z) must be nonzero")
    if (fxyz * fxyz - 2 * fxy * fxz * fyz).is_zero():
        raise HypothesisFailed(
            "triangle condition f(x,[y,z])^2 != 2 f(x,y) f(x,z) f(y,z)")

    s = fxyz / (fxy * fyz)
    xh = exp_ad(ctx, s, y, x)
    fxzh = extremal_form_value(ctx, xh, z)
    # by construction: f(xh,y) = f(x,y), f(xh,[y,z]) = 0, and
    # f(xh,z) = f(x,z) - f(x,[y,z])^2 / (2 f(x,y) f(y,z)) != 0
    assert extremal_form_value(ctx, xh, ctx.bracket(y, z)).is_zero()
    assert not fxzh.is_zero()

    cx = (pi * rho * fyz) / (sigma * fxy * fxzh)
    cy = (pi * sigma * fxzh) / (rho * fxy * fyz)
    cz = (rho * sigma * fxy) / (pi * fxzh * fyz)
    rx, ry, rz = cx.sqrt(), cy.sqrt(), cz.sqrt()
    xt = ctx.scale(xh, rx)
    yt = ctx.scale(y, ry)
    zt = ctx.scale(z, rz)

    a = extremal_form_value(ctx, xt, yt)
    b = extremal_form_value(ctx, xt, zt)
    c = extremal_form_value(ctx, yt, zt)
    wrong = [a != pi, b != rho, c != sigma]
    negated = ""
    if sum(wrong) == 2:
        if wrong[0] and wrong[1]:
            xt, negated = ctx.neg(xt), "x"
        elif wrong[0] and wrong[2]:
            yt, negated = ctx.neg(yt), "y"
        else:
            zt, negated = ctx.neg(zt), "z"
    elif sum(wrong) != 0:
        raise AssertionError(
            "sign pattern off in exactly one place; targets unreachable "
            f"(product mismatch): got ({a},{b},{c}) want {targets}")

    assert extremal_form_value(ctx, xt, yt) == pi
    assert extremal_form_value(ctx, xt, zt) == rho
    assert extremal_form_value(ctx, yt, zt) == sigma
    assert extremal_form_value(ctx, xt, ctx.bracket(yt, zt)).is_zero()
    return xt, yt, zt, TriangleTranscript(s, (rx, ry, rz), negated)
