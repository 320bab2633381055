"""Hilbert-Poincare series of relative invariants and equivariants.

Three independent routes to the same numbers:

* ``molien_series``: group average of sigma^j(g^-1) [chi(g^-1)] / det(I - t rho(g));
* ``dims_by_characters``: symmetric-power characters from the Newton-type
  recursion, averaged over the whole group and coset by coset;
* ``dim_oracle``: nullity of the defining linear constraints on a monomial basis.
"""

from fractions import Fraction

from .cyclotomic import Cyclotomic, to_integer
from .errors import InternalError, ValidationError
from .linalg import bareiss_det, sparse_rank
from .polynomial import Poly, PolyMap, act_on_map, act_on_poly, monomials
from .series import IntSeries, inverse_series

__all__ = [
    "INVARIANT",
    "EQUIVARIANT",
    "det_series",
    "molien_series",
    "kernel_molien_series",
    "sym_power_characters",
    "CharTable",
    "dims_by_characters",
    "dim_oracle",
    "oracle_series",
]

INVARIANT = "invariant"
EQUIVARIANT = "equivariant"


def _check_kind(kind):
    if kind not in (INVARIANT, EQUIVARIANT):
        raise ValueError(f"kind must be {INVARIANT!r} or {EQUIVARIANT!r}, got {kind!r}")


def _cache(G):
    c = G.__dict__.get("_molien_cache")
    if c is None:
        c = G.__dict__["_molien_cache"] = {}
    return c


def det_series(G, g, dmax):
    """Expansion of 1 / det(I - t rho(g)) through t^dmax."""
    cache = _cache(G)
    key = ("det", g.index)
    hit = cache.get(key)
    if hit is not None and len(hit) > dmax:
        return hit[: dmax + 1]
    n = G.n
    one = Cyclotomic(1)
    mat = [
        [[one if i == k else Cyclotomic(0), -g.rho[i][k]] for k in range(n)] for i in range(n)
    ]
    det = bareiss_det(mat)
    out = inverse_series(det, dmax)
    cache[key] = out
    return out


def _weight(G, g, j, kind):
    """sigma^j(g^-1), times chi(g^-1) for equivariants."""
    ginv = G.inverse(g)
    w = G.sigma_value(ginv, j)
    if kind == EQUIVARIANT:
        w = w * G.character(ginv, "target")
    return w


def _to_dims(total, dmax, scale, what):
    out = []
    for d in range(dmax + 1):
        v = total[d] * scale
        try:
            c = to_integer(v)
        except ValueError:
            raise ValidationError(
                f"inconsistent group/representation input: {what} coefficient t^{d} is {v}"
            ) from None
        if c < 0:
            raise ValidationError(
                f"inconsistent group/representation input: {what} coefficient t^{d} is {c}"
            )
        out.append(c)
    return IntSeries(tuple(out))


def _average_series(G, elements, j, kind, dmax):
    total = [Cyclotomic(0)] * (dmax + 1)
    for g in elements:
        w = _weight(G, g, j, kind)
        if w.is_zero():
            continue
        s = det_series(G, g, dmax)
        total = [a + w * b for a, b in zip(total, s)]
    return total


def molien_series(G, j, kind=INVARIANT, dmax=6):
    """Phi_j (invariant) or Psi_j (equivariant) truncated at t^dmax."""
    _check_kind(kind)
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    j %= G.m
    total = _average_series(G, G.elements, j, kind, dmax)
    return _to_dims(total, dmax, Fraction(1, G.order), f"{kind} series j={j}")


def kernel_molien_series(G, kind=INVARIANT, dmax=6):
    """Molien series of K = ker sigma acting on its own (no grading twist)."""
    _check_kind(kind)
    total = _average_series(G, G.kernel, 0, kind, dmax)
    return _to_dims(total, dmax, Fraction(1, len(G.kernel)), f"K-{kind} series")


class CharTable:
    """Per-element target trace chi(g) and source symmetric-power traces chi_(d)(g)."""

    def __init__(self, target, sym):
        self.target = target
        self.sym = sym

    @property
    def dmax(self):
        return len(next(iter(self.sym.values()))) - 1

    def __getitem__(self, index):
        return self.sym[index]


def sym_power_characters(G, dmax):
    """chi_(d) via d chi_(d)(g) = sum_{i<d} chi(g^(d-i)) chi_(i)(g), chi the source trace."""
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    sym, target = {}, {}
    for g in G.elements:
        # traces of powers g^1..g^dmax
        pw, cur = [], g
        for _ in range(dmax):
            pw.append(G.character(cur, "source"))
            cur = G.mul(cur, g)
        chi = [Cyclotomic(1)]
        for d in range(1, dmax + 1):
            acc = Cyclotomic(0)
            for i in range(d):
                acc = acc + pw[d - i - 1] * chi[i]
            chi.append(acc * Fraction(1, d))
        sym[g.index] = chi
        target[g.index] = G.character(g, "target")
    return CharTable(target, sym)


def dims_by_characters(G, j, kind=INVARIANT, dmax=6, table=None, literal=False):
    """Graded dimensions from symmetric-power characters, whole-group and coset-split.

    The integrand is sigma^j(g^-1) chi_(d)(g) [chi(g^-1)], the form that counts
    polynomials with f(gx) = sigma^j(g) f(x).  ``literal=True`` uses
    sigma^j(g) chi_(d)(g) [chi(g)] instead, which counts the same spaces only
    when the chi_(d) are real (for instance for realified actions).

    Raises InternalError when the two summation orders disagree.
    """
    _check_kind(kind)
    j %= G.m
    table = table if table is not None and table.dmax >= dmax else sym_power_characters(G, dmax)

    def integrand(g, d):
        h = g if literal else G.inverse(g)
        w = G.sigma_value(h, j) * table[g.index][d]
        if kind == EQUIVARIANT:
            w = w * table.target[h.index]
        return w

    def whole(d):
        return sum((integrand(g, d) for g in G.elements), Cyclotomic(0)) * Fraction(1, G.order)

    reps = G.coset_representatives()
    kernel = G.kernel

    def split(d):
        outer = Cyclotomic(0)
        for dk in reps:
            inner = sum((integrand(G.mul(dk, k), d) for k in kernel), Cyclotomic(0))
            outer = outer + inner * Fraction(1, len(kernel))
        return outer * Fraction(1, G.m)

    a = _to_dims([whole(d) for d in range(dmax + 1)], dmax, 1, f"character {kind} j={j}")
    b = _to_dims([split(d) for d in range(dmax + 1)], dmax, 1, f"coset-split {kind} j={j}")
    if a != b:
        raise InternalError(f"whole-group and coset-split dimensions differ: {a} vs {b}")
    return a


def _basis(G, kind, d):
    mons = monomials(G.n, d)
    if kind == INVARIANT:
        return [Poly.monomial(e) for e in mons]
    return [PolyMap.unit(G.n, G.n_target, k, Poly.monomial(e)) for e in mons for k in range(G.n_target)]


def _coords(x):
    if isinstance(x, Poly):
        return x.terms
    return x.term_keys()


def dim_oracle(G, j, kind, d):
    """dim of degree-d sigma^j-relative invariants/equivariants as the nullity of
    { act(g, x) - sigma^j(g) x = 0 : g a group generator } on the monomial basis."""
    _check_kind(kind)
    if d < 0:
        raise ValueError("d must be >= 0")
    basis = _basis(G, kind, d)
    cols = {}
    for col, b in enumerate(basis):
        key = next(iter(_coords(b)))
        cols[key] = col
    rows = {}
    for gi, g in enumerate(G.generators):
        s = G.sigma_value(g, j)
        for col, b in enumerate(basis):
            moved = act_on_poly(G, g, b) if kind == INVARIANT else act_on_map(G, g, b)
            diff = moved - b.scale(s)
            for key, c in _coords(diff).items():
                rows.setdefault((gi, cols[key]), {})[col] = c
    return len(basis) - sparse_rank(rows.values())


def oracle_series(G, j, kind, dmax):
    return IntSeries(tuple(dim_oracle(G, j, kind, d) for d in range(dmax + 1)))
