"""
Exact rational scalars and sparse Gaussian elimination.

Scalars are ``fractions.Fraction``; every operation stays exact.  The
sparse matrix only stores nonzero entries, rows are kept as dicts
``col -> Fraction`` during elimination.
"""

from fractions import Fraction

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x):
    """Coerce ints, strings like ``"-3/2"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class SparseMatrix:
    """A ``rows x cols`` matrix over Q with only the nonzero entries stored."""

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            self[i, j] = v

    @classmethod
    def from_dense(cls, data, cols=None):
        data = [list(r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        m = cls(len(data), cols)
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(row):
                m[i, j] = v
        return m

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, self.rows, self.cols))
        value = scalar(value)
        if value:
            self.entries[i, j] = value
        else:
            self.entries.pop((i, j), None)

    def __getitem__(self, key):
        return self.entries.get(key, ZERO)

    def to_dense(self):
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def permute_rows(self, perm):
        """Row ``i`` of the result is row ``perm[i]`` of self."""
        inv = {p: i for i, p in enumerate(perm)}
        return SparseMatrix(self.rows, self.cols,
                            {(inv[i], j): v for (i, j), v in self.entries.items()})

    def apply(self, x):
        if len(x) != self.cols:
            raise ValueError("vector length %d does not match %d columns" % (len(x), self.cols))
        out = [ZERO] * self.rows
        for (i, j), v in self.entries.items():
            out[i] += v * x[j]
        return out

    def __repr__(self):
        return "SparseMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, len(self.entries))


def _rref(rows, ncols):
    """Reduced row echelon form of a list of sparse rows.

    Returns ``(pivot_rows, pivots)`` where ``pivot_rows[k]`` has a leading 1
    in column ``pivots[k]`` and zeros in all other pivot columns.
    """
    pivot_rows = []
    pivots = []
    where = {}  # pivot column -> index in pivot_rows
    for row in rows:
        row = dict(row)
        # reduce against existing pivots
        for c in [c for c in row if c in where]:
            coef = row.get(c)
            if not coef:
                continue
            prow = pivot_rows[where[c]]
            for cc, vv in prow.items():
                nv = row.get(cc, ZERO) - coef * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        # clear the new pivot column from the older rows
        for k, prow in enumerate(pivot_rows):
            coef = prow.get(p)
            if coef:
                for cc, vv in row.items():
                    nv = prow.get(cc, ZERO) - coef * vv
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
        where[p] = len(pivot_rows)
        pivot_rows.append(row)
        pivots.append(p)
    return pivot_rows, pivots


def rank(m):
    return len(_rref(m.row_dicts(), m.cols)[1])


def rank_and_kernel(m):
    """Rank of ``m`` and a basis of its right kernel (lists of Fractions)."""
    prows, pivots = _rref(m.row_dicts(), m.cols)
    pivset = set(pivots)
    kernel = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for prow, p in zip(prows, pivots):
            c = prow.get(free)
            if c:
                v[p] = -c
        kernel.append(v)
    return len(pivots), kernel


def solve(m, b):
    """Some ``x`` with ``m x = b``, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has length %d, matrix has %d rows" % (len(b), m.rows))
    aug_col = m.cols
    rows = m.row_dicts()
    for i, bi in enumerate(b):
        bi = scalar(bi)
        if bi:
            rows[i][aug_col] = bi
    prows, pivots = _rref(rows, m.cols + 1)
    if aug_col in pivots:
        return None
    x = [ZERO] * m.cols
    for prow, p in zip(prows, pivots):
        x[p] = prow.get(aug_col, ZERO)
    return x
