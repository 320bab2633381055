"""Small dense matrices over Cyclotomic, stored as tuples of row tuples."""

from .cyclotomic import Cyclotomic, as_cyclotomic


def to_matrix(rows, N=1):
    out = tuple(tuple(Cyclotomic(as_cyclotomic(x), N) for x in row) for row in rows)
    width = {len(r) for r in out}
    if len(width) > 1:
        raise ValueError("ragged matrix")
    return out


def identity(n, N=1):
    one, zero = Cyclotomic(1, N), Cyclotomic(0, N)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a, b):
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                acc = x * y if acc is None else acc + x * y
            new.append(acc if acc is not None else row[0] * 0)
        out.append(tuple(new))
    return tuple(out)


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Cyclotomic(0)) for row in a]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Cyclotomic(0))


def is_diagonal(a):
    return all(a[i][j].is_zero() for i in range(len(a)) for j in range(len(a)) if i != j)


def matrix_key(a):
    """Hashable exact key; valid when all entries share one conductor."""
    return tuple((x.nums, x.den) for row in a for x in row)


def embed_matrix(a, N):
    return tuple(tuple(x.embed(N) if x.N != N else x for x in row) for row in a)


def conductor(a):
    from math import lcm

    return lcm(*(x.N for row in a for x in row)) if a else 1
