"""Exact linear algebra over Q(zeta_N): incremental sparse echelon spans, sparse rank,
and fraction-free (Bareiss) determinants over the polynomial ring Q(zeta_N)[t]."""

from .cyclotomic import Cyclotomic

__all__ = ["EchelonBasis", "sparse_rank", "bareiss_det", "upoly_mul", "upoly_exact_div"]


class EchelonBasis:
    """Span of sparse vectors (dicts key -> Cyclotomic), kept in row echelon form.

    ``order`` maps a key to a sortable value; the largest key of a reduced
    vector becomes its pivot, which keeps pivoting deterministic.
    """

    def __init__(self, order=None):
        self.order = order or (lambda k: k)
        self.rows = []  # (pivot, row) with row[pivot] == 1
        self._pivots = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        v = dict(vec)
        for p, row in self.rows:
            c = v.get(p)
            if c is None:
                continue
            for k, x in row.items():
                s = v.get(k)
                s = -(c * x) if s is None else s - c * x
                if s.is_zero():
                    v.pop(k, None)
                else:
                    v[k] = s
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert ``vec``; returns True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = max(v, key=self.order)
        inv = v[p].inverse()
        row = {k: x * inv for k, x in v.items()}
        self.rows.append((p, row))
        self._pivots[p] = len(self.rows) - 1
        return True

    def vectors(self):
        return [row for _, row in self.rows]


def sparse_rank(rows):
    """Rank of a list of sparse rows by Gaussian elimination with exact pivots.

    Kept separate from :class:`EchelonBasis` on purpose: the dimension oracle
    uses this routine so it shares no span bookkeeping with the generator code.
    """
    pivots = {}
    rank = 0
    for r in rows:
        v = {k: x for k, x in r.items() if not x.is_zero()}
        while v:
            k = min(v)
            if k not in pivots:
                inv = v[k].inverse()
                pivots[k] = {kk: x * inv for kk, x in v.items()}
                rank += 1
                break
            prow = pivots[k]
            c = v[k]
            for kk, x in prow.items():
                s = v.get(kk)
                s = -(c * x) if s is None else s - c * x
                if s.is_zero():
                    v.pop(kk, None)
                else:
                    v[kk] = s
    return rank


# -- univariate polynomials over Cyclotomic (lists, lowest degree first) -----


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1].is_zero():
        p.pop()
    return p


def upoly_mul(a, b):
    out = [Cyclotomic(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for k, y in enumerate(b):
            if not y.is_zero():
                out[i + k] = out[i + k] + x * y
    return _trim(out)


def upoly_sub(a, b):
    n = max(len(a), len(b))
    z = Cyclotomic(0)
    return _trim([(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z) for i in range(n)])


def upoly_exact_div(a, b):
    """Quotient a / b; raises ArithmeticError when the division leaves a remainder."""
    a, b = _trim(a), _trim(b)
    if len(b) == 1 and b[0].is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        if all(x.is_zero() for x in a):
            return [Cyclotomic(0)]
        raise ArithmeticError("inexact polynomial division")
    r = list(a)
    q = [Cyclotomic(0)] * (len(a) - len(b) + 1)
    lead_inv = b[-1].inverse()
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * lead_inv
        q[i] = c
        if not c.is_zero():
            for k, y in enumerate(b):
                r[i + k] = r[i + k] - c * y
    if any(not x.is_zero() for x in r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def bareiss_det(mat):
    """Determinant of a square matrix of univariate polynomials (Bareiss elimination).

    Only used for I - t*A, whose leading principal minors have constant term 1,
    so no pivot search is needed; a zero pivot raises.
    """
    n = len(mat)
    if n == 0:
        return [Cyclotomic(1)]
    a = [[_trim(x) for x in row] for row in mat]
    prev = [Cyclotomic(1)]
    for k in range(n - 1):
        piv = a[k][k]
        if len(piv) == 1 and piv[0].is_zero():
            raise ArithmeticError("zero pivot in Bareiss elimination")
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = upoly_sub(upoly_mul(a[i][j], piv), upoly_mul(a[i][k], a[k][j]))
                a[i][j] = upoly_exact_div(num, prev)
        prev = piv
    return a[n - 1][n - 1]
