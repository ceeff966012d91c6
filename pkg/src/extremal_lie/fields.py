"""Exact field arithmetic: rationals, odd prime fields, quadratic extensions.

All computations in this package are exact.  Three kinds of fields are
supported, and quadratic extensions may be stacked on top of any field
(including another quadratic extension), which is needed when a chain of
normalisation steps requires several independent square roots.

Elements are lightweight wrappers around a payload whose type depends on
the field:

* ``RationalField``    -- payload is a rational number (``gmpy2.mpq`` when
  available, else ``fractions.Fraction``),
* ``PrimeField(p)``    -- payload is an ``int`` in ``[0, p)``, ``p`` an odd
  prime,
* ``QuadraticExtension(base, d)`` -- payload is a pair ``(a, b)`` of base
  payloads representing ``a + b*sqrt(d)``.

Square roots are deterministic: of the two roots ``r`` and ``-r`` the one
with the smaller canonical sort key is returned, so repeated runs (and both
sides of a comparison) always agree.
"""

from fractions import Fraction
import math

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover
    _RAT = Fraction


class FieldError(Exception):
    """Base class for field arithmetic errors."""


class DescriptorMismatch(FieldError):
    """Two elements from different fields were combined."""


class NoSquareRoot(FieldError):
    """The requested square root does not exist in this field.

    The optional `element` attribute carries the FieldElement whose root
    was requested, so callers can extend the field by exactly that
    radicand and retry."""

    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


class NotInvertible(FieldError):
    """Division by zero or a non-invertible element."""


class FieldElement:
    """An element of a :class:`Field`.  Immutable; supports + - * / ** and
    comparison for equality.  Mixed arithmetic with ``int`` coerces the
    integer into the field."""

    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    # -- helpers -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if self.field.same(other.field):
                return FieldElement(self.field, other.v)
            raise DescriptorMismatch(
                f"cannot combine elements of {self.field} and {other.field}")
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def is_zero(self):
        return self.field.is_zero(self.v)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.v, o.v))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.v, o.v))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(o.v, self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.v, o.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.v, o.v))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(o.v, self.v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.v))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self ** (-n)).inv()
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self):
        return FieldElement(self.field, self.field.div(self.field.one.v, self.v))

    def sqrt(self):
        """Deterministic square root; raises NoSquareRoot if absent."""
        try:
            return FieldElement(self.field, self.field.sqrt(self.v))
        except NoSquareRoot as exc:
            if exc.element is None:
                exc.element = self
            raise

    def has_sqrt(self):
        try:
            self.field.sqrt(self.v)
            return True
        except NoSquareRoot:
            return False

    # -- comparison / hashing / display -----------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if not self.field.same(other.field):
            return NotImplemented
        return self.v == other.v

    def __hash__(self):
        return hash((id(self.field), repr(self.v)))

    def __bool__(self):
        return not self.field.is_zero(self.v)

    def sort_key(self):
        return self.field.sort_key(self.v)

    def __str__(self):
        return self.field.format(self.v)

    def __repr__(self):
        return f"<{self.field.format(self.v)} in {self.field}>"


class Field:
    """Abstract field descriptor.  Calling the descriptor coerces ints,
    rationals or elements of the same field into a FieldElement."""

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if self.same(value.field):
                return FieldElement(self, value.v)
            raise DescriptorMismatch(f"{value!r} is not in {self}")
        return FieldElement(self, self.coerce(value))

    def same(self, other):
        raise NotImplementedError

    def is_zero(self, v):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def characteristic(self):
        raise NotImplementedError


class RationalField(Field):
    """The field of rational numbers."""

    def same(self, other):
        return isinstance(other, RationalField)

    def coerce(self, value):
        if isinstance(value, str):
            return _RAT(Fraction(value))
        return _RAT(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise NotInvertible("division by zero")
        return a / b

    def neg(self, a):
        return -a

    def is_zero(self, v):
        return v == 0

    def sqrt(self, v):
        if v < 0:
            raise NoSquareRoot(f"{v} is negative")
        num, den = v.numerator, v.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise NoSquareRoot(f"{v} is not a square in Q")
        return _RAT(rn, rd)

    def sort_key(self, v):
        return (0, v.numerator * v.denominator, v.numerator, v.denominator)

    def format(self, v):
        return str(v)

    def characteristic(self):
        return 0

    def __str__(self):
        return "rationals"

    def __repr__(self):
        return "RationalField()"


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for 64-bit range, probabilistic beyond
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField(Field):
    """GF(p) for an odd prime p."""

    def __init__(self, p):
        if p == 2 or not _is_prime(p):
            raise ValueError(f"PrimeField needs an odd prime, got {p}")
        self.p = p

    def same(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def coerce(self, value):
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            return value % self.p
        num, den = value.numerator, value.denominator
        return num * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b == 0:
            raise NotInvertible("division by zero")
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, v):
        return v == 0

    def sqrt(self, v):
        if v == 0:
            return 0
        p = self.p
        if pow(v, (p - 1) // 2, p) != 1:
            raise NoSquareRoot(f"{v} is not a square mod {p}")
        r = _tonelli_shanks(v, p)
        return min(r, p - r)

    def sort_key(self, v):
        return (0, v)

    def format(self, v):
        return str(v)

    def characteristic(self):
        return self.p

    def __str__(self):
        return f"gf({self.p})"

    def __repr__(self):
        return f"PrimeField({self.p})"


def _tonelli_shanks(a, p):
    """Square root of the quadratic residue a mod odd prime p."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        t2i = t
        i = 0
        for i in range(1, m):
            t2i = t2i * t2i % p
            if t2i == 1:
                break
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


class QuadraticExtension(Field):
    """base(sqrt(d)) where d is a verified non-square of the base field.

    Payloads are pairs (a, b) of base payloads meaning a + b*sqrt(d).
    The base may itself be a quadratic extension, so towers are possible.
    """

    def __init__(self, base, d):
        d = base(d)
        if d.has_sqrt():
            raise ValueError(f"{d} is already a square in {base}")
        self.base = base
        self.d = d.v

    def same(self, other):
        return (isinstance(other, QuadraticExtension)
                and other.d == self.d and self.base.same(other.base))

    def coerce(self, value):
        if isinstance(value, tuple) and len(value) == 2:
            return (self.base.coerce(value[0]), self.base.coerce(value[1]))
        if isinstance(value, FieldElement) and self.base.same(value.field):
            return (value.v, self.base.zero.v)
        return (self.base.coerce(value), self.base.zero.v)

    def embed(self, elem):
        """Lift an element of the base field into this extension."""
        if not self.base.same(elem.field):
            raise DescriptorMismatch(f"{elem!r} is not in base {self.base}")
        return FieldElement(self, (elem.v, self.base.zero.v))

    @property
    def root(self):
        """sqrt(d) as an element of this field."""
        return FieldElement(self, (self.base.zero.v, self.base.one.v))

    def add(self, x, y):
        b = self.base
        return (b.add(x[0], y[0]), b.add(x[1], y[1]))

    def sub(self, x, y):
        b = self.base
        return (b.sub(x[0], y[0]), b.sub(x[1], y[1]))

    def mul(self, x, y):
        b = self.base
        a0, a1 = x
        b0, b1 = y
        # (a0 + a1 r)(b0 + b1 r) = a0 b0 + d a1 b1 + (a0 b1 + a1 b0) r
        return (b.add(b.mul(a0, b0), b.mul(self.d, b.mul(a1, b1))),
                b.add(b.mul(a0, b1), b.mul(a1, b0)))

    def neg(self, x):
        b = self.base
        return (b.neg(x[0]), b.neg(x[1]))

    def div(self, x, y):
        b = self.base
        b0, b1 = y
        # norm = b0^2 - d b1^2, nonzero since d is a non-square
        norm = b.sub(b.mul(b0, b0), b.mul(self.d, b.mul(b1, b1)))
        if b.is_zero(norm):
            raise NotInvertible("division by zero")
        conj = (b0, b.neg(b1))
        num = self.mul(x, conj)
        return (b.div(num[0], norm), b.div(num[1], norm))

    def is_zero(self, v):
        return self.base.is_zero(v[0]) and self.base.is_zero(v[1])

    def sqrt(self, v):
        b = self.base
        x, y = v
        roots = []
        if b.is_zero(y):
            # sqrt(x): either sqrt in base, or sqrt(x/d) * r
            try:
                a = b.sqrt(x)
                roots.append((a, b.zero.v))
            except NoSquareRoot:
                pass
            try:
                c = b.sqrt(b.div(x, self.d))
                roots.append((b.zero.v, c))
            except NoSquareRoot:
                pass
        else:
            # (a + c r)^2 = a^2 + d c^2 + 2ac r.  With t = a^2 the pair
            # (a^2, d c^2) solves t^2 - x t + d y^2 / 4 = 0.
            try:
                disc = b.sqrt(b.sub(b.mul(x, x),
                                    b.mul(self.d, b.mul(y, y))))
            except NoSquareRoot:
                disc = None
            if disc is not None:
                two = b.coerce(2)
                for sign in (1, -1):
                    t = b.div(b.add(x, disc) if sign == 1 else b.sub(x, disc),
                              two)
                    try:
                        a = b.sqrt(t)
                    except NoSquareRoot:
                        continue
                    if b.is_zero(a):
                        continue
                    c = b.div(y, b.mul(two, a))
                    cand = (a, c)
                    if self.mul(cand, cand) == v:
                        roots.append(cand)
        if not roots:
            raise NoSquareRoot(f"{self.format(v)} has no root in {self}")
        canon = []
        for r in roots:
            n = self.neg(r)
            canon.append(min(r, n, key=self.sort_key))
        return min(canon, key=self.sort_key)

    def sort_key(self, v):
        return (1, self.base.sort_key(v[0]), self.base.sort_key(v[1]))

    def format(self, v):
        a, b = v
        if self.base.is_zero(b):
            return self.base.format(a)
        rt = f"rt({self.base.format(self.d)})"
        bs = self.base.format(b)
        bterm = rt if bs == "1" else f"{bs}*{rt}"
        if self.base.is_zero(a):
            return bterm
        return f"{self.base.format(a)}+{bterm}"

    def characteristic(self):
        return self.base.characteristic()

    def __str__(self):
        return f"{self.base}(rt {self.base.format(self.d)})"

    def __repr__(self):
        return f"QuadraticExtension({self.base!r}, {self.base.format(self.d)})"


#: Default large prime for generic finite-field computations.
DEFAULT_PRIME = 2147483629

QQ = RationalField()


def lift_element(elem, field):
    """Re-express elem in `field`, which must be reachable from elem.field
    by a chain of quadratic extensions (or be the same field)."""
    chain = []
    f = field
    while not f.same(elem.field):
        if not isinstance(f, QuadraticExtension):
            raise DescriptorMismatch(f"{elem.field} does not embed in {field}")
        chain.append(f)
        f = f.base
    out = FieldElement(f, elem.v)
    for ext in reversed(chain):
        out = ext.embed(out)
    return out
