"""Exact linear algebra over the fields in :mod:`extremal_lie.fields`.

Vectors are lists of FieldElement, matrices are lists of rows.  All
pivoting is deterministic (leftmost pivot column, first nonzero row), so
reduced forms, kernels and span tests are reproducible bit for bit.
"""

from .fields import FieldElement, lift_element


def zeros(field, rows, cols):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field, n):
    m = zeros(field, n, n)
    one = field.one
    for i in range(n):
        m[i][i] = one
    return m


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0])
    field = a[0][0].field
    zero = field.zero
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if c.is_zero():
                continue
            brow = b[t]
            for j in range(m):
                e = brow[j]
                if not e.is_zero():
                    orow[j] = orow[j] + c * e
    return out


def mat_vec(a, v):
    field = v[0].field
    zero = field.zero
    out = []
    for row in a:
        s = zero
        for c, x in zip(row, v):
            if not c.is_zero() and not x.is_zero():
                s = s + c * x
        out.append(s)
    return out


def mat_bracket(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def transpose(a):
    return [list(col) for col in zip(*a)]


def trace(a):
    s = a[0][0]
    for i in range(1, len(a)):
        s = s + a[i][i]
    return s


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not (x - y).is_zero():
                return False
    return True


def mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(u, c):
    return [c * x for x in u]


def vec_neg(u):
    return [-x for x in u]


def vec_is_zero(u):
    return all(x.is_zero() for x in u)


def vec_eq(u, v):
    return len(u) == len(v) and all((x - y).is_zero() for x, y in zip(u, v))


def dot(u, v):
    s = u[0].field.zero
    for x, y in zip(u, v):
        if not x.is_zero() and not y.is_zero():
            s = s + x * y
    return s


def flatten(a):
    return [x for row in a for x in row]


def unflatten(v, rows, cols):
    return [v[i * cols:(i + 1) * cols] for i in range(rows)]


def lift_matrix(a, field):
    return [[lift_element(x, field) for x in row] for row in a]


def lift_vector(v, field):
    return [lift_element(x, field) for x in v]


def rref(matrix):
    """Reduced row echelon form.

    Returns (reduced, pivot_cols, rank).  The input is not modified.
    Deterministic: pivots are chosen leftmost-column-first, first nonzero
    row within the column.
    """
    m = [list(row) for row in matrix]
    if not m:
        return [], [], 0
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = None
        for i in range(r, n_rows):
            if not m[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        prow = m[r]
        for i in range(n_rows):
            if i == r:
                continue
            f = m[i][c]
            if f.is_zero():
                continue
            row = m[i]
            m[i] = [x - f * y for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots, r


def kernel(matrix, field=None):
    """Deterministic basis of the right kernel {v : matrix @ v = 0}.

    One basis vector per free column, with 1 in the free position and the
    RREF back-substitution values in the pivot positions.
    """
    if not matrix:
        return []
    red, pivots, rank = rref(matrix)
    n_cols = len(matrix[0])
    field = field or matrix[0][0].field
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * n_cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One exact solution of matrix @ x = rhs, or None if inconsistent.

    Free variables are set to zero (deterministic particular solution).
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots, rank = rref(aug)
    field = rhs[0].field
    if n_cols in pivots:
        return None  # pivot in the rhs column: inconsistent
    x = [field.zero] * n_cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n_cols]
    return x


class SpanSolver:
    """Incremental span membership / coordinate solver.

    Maintains an echelon basis of the span of the added vectors together
    with the expression of each echelon row in terms of the originals, so
    `coords` recovers exact coordinates with respect to the added vectors.
    """

    def __init__(self, field, ambient_dim):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = []        # echelon rows (normalised leading 1)
        self.lead = []        # leading column of each row
        self.expr = []        # expression of each row in original vectors
        self.count = 0

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, v, e):
        """Reduce v against current rows, tracking expression e."""
        for row, lc, ex in zip(self.rows, self.lead, self.expr):
            c = v[lc]
            if not c.is_zero():
                v = [a - c * b for a, b in zip(v, row)]
                e = [a - c * b for a, b in zip(e, ex)]
        return v, e

    def add(self, v):
        """Add a vector; returns True if it increased the rank."""
        e = [self.field.zero] * self.count + [self.field.one]
        for ex in self.expr:
            ex.append(self.field.zero)
        self.count += 1
        v, e = self._reduce(list(v), e)
        for lc, x in enumerate(v):
            if not x.is_zero():
                inv = x.inv()
                self.rows.append([inv * a for a in v])
                self.lead.append(lc)
                self.expr.append([inv * a for a in e])
                return True
        return False

    def contains(self, v):
        v, _ = self._reduce(list(v), [self.field.zero] * self.count)
        return all(x.is_zero() for x in v)

    def coords(self, v):
        """Coordinates of v with respect to the added vectors (free
        coordinates of dependent vectors are zero), or None if v is not in
        the span."""
        e = [self.field.zero] * self.count
        v, e = self._reduce(list(v), e)
        if not all(x.is_zero() for x in v):
            return None
        return [-x for x in e]
