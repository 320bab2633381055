"""Generating sets for invariant rings and for modules of relative invariants/equivariants.

Pipeline: K-invariant Hilbert basis u -> relative projections R_l(u_i) ->
products over zero-sum-free weight patterns (generators of P_{sigma^j} over
P(Gamma)) -> module basis B of P(K) over P(Gamma) -> K-equivariant generators
H_k -> vector projections R_j(v_i H_k).  Every emitted set is pruned degree by
degree with exact linear algebra and certified against the Molien series.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .errors import InternalError, ValidationError
from .linalg import EchelonBasis
from .molien import EQUIVARIANT, INVARIANT, kernel_molien_series, molien_series
from .polynomial import Poly, PolyMap, grlex_key, monomials
from .reynolds import (
    average_over_group,
    average_over_K,
    is_relative_equivariant,
    is_relative_invariant,
    relative_project,
    relative_project_map,
)
from .series import IntSeries

__all__ = [
    "GeneratorItem",
    "GeneratorSet",
    "ExponentPattern",
    "k_invariant_basis",
    "k_equivariant_generators",
    "invariant_ring_generators",
    "relative_invariant_generators",
    "module_basis_B",
    "relative_equivariant_generators",
    "exponent_patterns",
    "davenport_check",
    "span_dims",
    "general_form",
    "run_pipeline",
]

RING = "ring-invariant"
MODULE_INV = "module-invariant"
MODULE_EQUIV = "module-equivariant"


@dataclass(frozen=True)
class GeneratorItem:
    value: object  # Poly or PolyMap
    degree: int
    provenance: str


@dataclass
class GeneratorSet:
    kind: str
    j: int
    items: list
    dims: IntSeries = None  # certified graded dimensions of the generated object
    check_degree: int = 0

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def values(self):
        return [it.value for it in self.items]

    @property
    def max_degree(self):
        return max((it.degree for it in self.items), default=0)


@dataclass(frozen=True)
class ExponentPattern:
    """A multiset of factors R_l(u_i), stored as sorted (l, i) pairs."""

    factors: tuple
    m: int

    @property
    def weight(self):
        return sum(l for l, _ in self.factors) % self.m

    def is_irreducible(self):
        """No proper nonempty sub-multiset has weight 0 mod m."""
        n = len(self.factors)
        for r in range(1, n):
            for sub in combinations(range(n), r):
                if sum(self.factors[i][0] for i in sub) % self.m == 0:
                    return False
        return True

    def label(self):
        return "*".join(f"R{l}(u{i + 1})" for l, i in self.factors)


# -- vector coordinates ------------------------------------------------------


def _vec(x):
    return x.terms if isinstance(x, Poly) else x.term_keys()


def _order_key(k):
    # poly keys are exponents, map keys are (component, exponent)
    if isinstance(k[0], int) and len(k) == 2 and isinstance(k[1], tuple):
        return (grlex_key(k[1]), -k[0])
    return grlex_key(k)


def _from_vec(vec, like):
    if isinstance(like, Poly):
        return Poly._wrap(like.nvars, dict(vec))
    comps = [dict() for _ in like.components]
    for (k, e), c in vec.items():
        comps[k][e] = c
    return PolyMap(Poly._wrap(like.nvars, t) for t in comps)


def _sort_key(x):
    lead = x.leading()[0]
    if isinstance(x, Poly):
        return (x.degree(), tuple(-v for v in lead))
    k, e = lead
    return (x.degree(), tuple(-v for v in e), k)


# -- degreewise bases of invariant spaces -------------------------------------


def _space_cache(G):
    c = G.__dict__.get("_space_cache")
    if c is None:
        c = G.__dict__["_space_cache"] = {}
    return c


def invariant_space(G, d, over="group"):
    """Basis of the degree-d invariants of Gamma (``over='group'``) or of K (``'kernel'``)."""
    cache = _space_cache(G)
    key = (over, d)
    if key not in cache:
        avg = average_over_group if over == "group" else average_over_K
        span = EchelonBasis(_order_key)
        for e in monomials(G.n, d):
            p = avg(G, Poly.monomial(e))
            if not p.is_zero():
                span.add(p.terms)
        like = Poly(G.n)
        cache[key] = [_from_vec(v, like) for v in span.vectors()]
    return cache[key]


# -- degreewise accept / prune / certify --------------------------------------


def _prune_module(candidates, multipliers, top):
    """Accept candidates that are new modulo multiplier * (accepted), degree by degree.

    ``candidates``: list of (value, provenance) of homogeneous nonzero elements.
    ``multipliers(e)``: basis of the degree-e part of the coefficient ring.
    Returns accepted items and the dimensions of the generated module for d = 0..top.
    """
    by_deg = {}
    for value, prov in candidates:
        by_deg.setdefault(value.degree(), []).append((value, prov))
    top = max([top] + list(by_deg))
    accepted, dims = [], []
    for d in range(top + 1):
        span = EchelonBasis(_order_key)
        for item in accepted:
            for p in multipliers(d - item.degree):
                span.add(_vec(p * item.value))
        for value, prov in by_deg.get(d, []):
            if span.add(_vec(value)):
                accepted.append(GeneratorItem(value.normalized(), d, prov))
        dims.append(len(span))
    return accepted, IntSeries(tuple(dims))


def _prune_algebra(candidates, nvars, top):
    """As ``_prune_module`` but for algebra generation: A_d = sum_g g * A_(d - deg g)."""
    by_deg = {}
    for value, prov in candidates:
        by_deg.setdefault(value.degree(), []).append((value, prov))
    top = max([top] + list(by_deg))
    like = Poly(nvars)
    accepted, spans, dims = [], [], []
    for d in range(top + 1):
        span = EchelonBasis(_order_key)
        if d == 0:
            span.add(Poly.constant(nvars).terms)
        for item in accepted:
            if item.degree <= d:
                for v in spans[d - item.degree].vectors():
                    span.add(_vec(item.value * _from_vec(v, like)))
        for value, prov in by_deg.get(d, []):
            if d > 0 and span.add(_vec(value)):
                accepted.append(GeneratorItem(value.normalized(), d, prov))
        spans.append(span)
        dims.append(len(span))
    return accepted, IntSeries(tuple(dims))


def _check_degree(items, check_degree):
    if check_degree is not None:
        return check_degree
    return max(6, 2 * max((it.degree for it in items), default=0))


def _certify(dims, expected, what, error):
    if not dims.agrees(expected):
        raise error(f"{what}: generated dimensions {dims.coeffs} differ from Molien {expected.coeffs}")


def _sorted(items):
    return sorted(items, key=lambda it: _sort_key(it.value))


def _homogeneous_parts(x):
    degs = sorted({sum(e) for e in (x.terms if isinstance(x, Poly) else
                                     [e for p in x.components for e in p.terms])})
    return [x.homogeneous_component(d) for d in degs]


# -- K level ------------------------------------------------------------------


def k_invariant_basis(G, degree_bound=None, check_degree=None):
    """Hilbert basis of P(K) from K-averaged monomials of degree <= bound (default |K|)."""
    bound = len(G.kernel) if degree_bound is None else degree_bound
    if bound < 1:
        raise ValueError("degree_bound must be >= 1")
    cands = []
    for d in range(1, bound + 1):
        for e in monomials(G.n, d):
            p = average_over_K(G, Poly.monomial(e))
            if not p.is_zero():
                cands.append((p, "avgK(" + _mono_label(e) + ")"))
    items, _ = _prune_algebra(cands, G.n, 0)
    top = _check_degree(items, check_degree)
    items, dims = _prune_algebra(cands, G.n, top)
    dims = dims.truncate(top)
    expected = kernel_molien_series(G, INVARIANT, top)
    _certify(dims, expected, "K-invariant basis (degree bound insufficient; rerun with larger bound)",
             ValidationError)
    return GeneratorSet(RING, 0, _sorted(items), dims, top)


def k_equivariant_generators(G, degree_bound=None, check_degree=None):
    """Generators of the K-equivariants over P(K) from K-averaged monomial maps."""
    bound = len(G.kernel) if degree_bound is None else degree_bound
    if bound < 0:
        raise ValueError("degree_bound must be >= 0")
    cands = []
    for d in range(bound + 1):
        for e in monomials(G.n, d):
            for k in range(G.n_target):
                h = average_over_K(G, PolyMap.unit(G.n, G.n_target, k, Poly.monomial(e)))
                if not h.is_zero():
                    cands.append((h, f"avgK(e{k + 1}*{_mono_label(e)})"))

    def mult(e):
        return invariant_space(G, e, "kernel") if e >= 0 else []

    items, _ = _prune_module(cands, mult, 0)
    top = _check_degree(items, check_degree)
    items, dims = _prune_module(cands, mult, top)
    dims = dims.truncate(top)
    expected = kernel_molien_series(G, EQUIVARIANT, top)
    _certify(dims, expected, "K-equivariant generators (degree bound insufficient; rerun with larger bound)",
             ValidationError)
    return GeneratorSet(MODULE_EQUIV, 0, _sorted(items), dims, top)


def _mono_label(e):
    parts = [f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
    return "*".join(parts) or "1"


# -- relative invariants -------------------------------------------------------


def _projected_factors(G, u):
    """Nonzero R_l(u_i) keyed by (l, i), l = 0..m-1."""
    out = {}
    for i, ui in enumerate(u.values):
        for l in range(G.m):
            r = relative_project(G, l, ui)
            if not r.is_zero():
                out[(l, i)] = r
    return out


def exponent_patterns(m, factor_keys, j, max_len=None, irreducible=True):
    """Weight patterns over the factors R_l(u_i) (l >= 1) with total weight j mod m.

    Irreducible patterns have no proper nonempty zero-sum sub-multiset; for
    j != 0 they have at most m - 1 factors, which is the default length cap.
    """
    keys = sorted(k for k in factor_keys if k[0] != 0)
    if max_len is None:
        max_len = m - 1 if j % m else m
    out = []
    for r in range(1, max_len + 1):
        for combo in combinations_with_replacement(keys, r):
            pat = ExponentPattern(tuple(combo), m)
            if pat.weight != j % m:
                continue
            if irreducible and not pat.is_irreducible():
                continue
            out.append(pat)
    return out


def _pattern_product(G, factors, pat):
    p = Poly.constant(G.n)
    for key in pat.factors:
        p = p * factors[key]
    return p


def _gamma_multipliers(G):
    return lambda e: invariant_space(G, e, "group") if e >= 0 else []


def relative_invariant_generators(G, j, u, check_degree=None, max_len=None, factors=None):
    """Generators of P_{sigma^j}(Gamma) over P(Gamma) from products of projected K-invariants."""
    if not 1 <= j <= G.m - 1:
        raise ValueError("j must satisfy 1 <= j <= m-1")
    factors = factors if factors is not None else _projected_factors(G, u)
    cands = []
    for pat in exponent_patterns(G.m, factors, j, max_len):
        p = _pattern_product(G, factors, pat)
        if not p.is_zero():
            cands.extend((h, pat.label()) for h in _homogeneous_parts(p))
    mult = _gamma_multipliers(G)
    items, _ = _prune_module(cands, mult, 0)
    top = _check_degree(items, check_degree)
    items, dims = _prune_module(cands, mult, top)
    dims = dims.truncate(top)
    _certify(dims, molien_series(G, j, INVARIANT, top), f"relative invariants j={j}", InternalError)
    for it in items:
        if not is_relative_invariant(G, j, it.value):
            raise InternalError(f"emitted generator {it.value} is not sigma^{j}-relative invariant")
    return GeneratorSet(MODULE_INV, j, _sorted(items), dims, top)


def invariant_ring_generators(G, u, check_degree=None, factors=None):
    """Hilbert basis of P(Gamma): the R_0(u_i) plus products over minimal zero-sum patterns."""
    factors = factors if factors is not None else _projected_factors(G, u)
    cands = [(f, f"R0(u{i + 1})") for (l, i), f in sorted(factors.items()) if l == 0]
    for pat in exponent_patterns(G.m, factors, 0, G.m) if G.m > 1 else []:
        p = _pattern_product(G, factors, pat)
        if not p.is_zero():
            cands.extend((h, pat.label()) for h in _homogeneous_parts(p))
    items, _ = _prune_algebra(cands, G.n, 0)
    top = _check_degree(items, check_degree)
    items, dims = _prune_algebra(cands, G.n, top)
    dims = dims.truncate(top)
    _certify(dims, molien_series(G, 0, INVARIANT, top), "invariant ring", InternalError)
    return GeneratorSet(RING, 0, _sorted(items), dims, top)


def module_basis_B(G, u, check_degree=None, relative=None):
    """B = {1} together with the generators of every P_{sigma^j}(Gamma), j >= 1.

    ``relative`` may pass precomputed ``{j: GeneratorSet}``.
    """
    items = [GeneratorItem(Poly.constant(G.n), 0, "1")]
    seen = {items[0].value}
    factors = _projected_factors(G, u) if relative is None else None
    for j in range(1, G.m):
        gs = relative[j] if relative is not None else relative_invariant_generators(
            G, j, u, check_degree, factors=factors)
        for it in gs:
            if it.value not in seen:
                seen.add(it.value)
                items.append(GeneratorItem(it.value, it.degree, f"B{j}:{it.provenance}"))
    items = _sorted(items)
    top = _check_degree(items, check_degree)
    dims = span_dims(G, [it.value for it in items], top)
    _certify(dims, kernel_molien_series(G, INVARIANT, top), "module basis B over P(Gamma)",
             InternalError)
    return GeneratorSet(MODULE_INV, -1, items, dims, top)


# -- relative equivariants ------------------------------------------------------


def relative_equivariant_generators(G, j, B, H, check_degree=None):
    """Generators of the sigma^j-relative equivariants over P(Gamma): vector R_j(v_i H_k)."""
    if not 0 <= j <= G.m - 1:
        raise ValueError("j must satisfy 0 <= j <= m-1")
    cands = []
    for i, v in enumerate(B.items):
        for k, h in enumerate(H.items):
            prod = v.value * h.value
            r = relative_project_map(G, j, prod, check=False)
            if not r.is_zero():
                cands.extend((x, f"R{j}(v{i}*H{k})") for x in _homogeneous_parts(r))
    mult = _gamma_multipliers(G)
    items, _ = _prune_module(cands, mult, 0)
    top = _check_degree(items, check_degree)
    items, dims = _prune_module(cands, mult, top)
    dims = dims.truncate(top)
    _certify(dims, molien_series(G, j, EQUIVARIANT, top), f"relative equivariants j={j}",
             InternalError)
    for it in items:
        if not is_relative_equivariant(G, j, it.value):
            raise InternalError(f"emitted generator {it.value} is not sigma^{j}-relative equivariant")
    return GeneratorSet(MODULE_EQUIV, j, _sorted(items), dims, top)


def span_dims(G, gens, top):
    """Dimensions d = 0..top of the P(Gamma)-module spanned by ``gens``."""
    mult = _gamma_multipliers(G)
    dims = []
    for d in range(top + 1):
        span = EchelonBasis(_order_key)
        for g in gens:
            for p in mult(d - g.degree()):
                span.add(_vec(p * g))
        dims.append(len(span))
    return IntSeries(tuple(dims))


def davenport_check(G, j, u, gens, max_len=None):
    """Products over all weight-j patterns with up to ``max_len`` (default m) factors,
    reducible ones included, that fall outside the module spanned by ``gens``."""
    factors = _projected_factors(G, u)
    mult = _gamma_multipliers(G)
    values = gens.values
    new = []
    spans = {}
    for pat in exponent_patterns(G.m, factors, j, max_len or G.m, irreducible=False):
        p = _pattern_product(G, factors, pat)
        for h in _homogeneous_parts(p) if not p.is_zero() else []:
            d = h.degree()
            if d not in spans:
                span = EchelonBasis(_order_key)
                for g in values:
                    for q in mult(d - g.degree()):
                        span.add(_vec(q * g))
                spans[d] = span
            if not spans[d].contains(_vec(h)):
                new.append((pat, h))
    return new


# -- rendering -------------------------------------------------------------------


def general_form(G, j, gens, names, first_index=1, latex=False, arg="z"):
    """Render g = sum_i f_i * gen_i with fresh coefficient functions f_i in P(Gamma)."""
    ncomp = G.n_target
    comps = [[] for _ in range(ncomp)]
    # number the coefficient functions component by component
    items = sorted(gens.items, key=lambda it: next(
        k for k, p in enumerate(it.value.components) if not p.is_zero()))
    for idx, it in enumerate(items, start=first_index):
        f = f"f_{{{idx}}}({arg})" if latex else f"f{idx}({arg})"
        for k, p in enumerate(it.value.components):
            if p.is_zero():
                continue
            body = p.render(names, latex)
            if body == "1":
                comps[k].append(f)
            else:
                if len(p.terms) > 1:
                    body = rf"\left({body}\right)" if latex else f"({body})"
                comps[k].append(f + (" " if latex else "*") + body)
    inner = ", ".join(" + ".join(c) if c else "0" for c in comps)
    return rf"\left({inner}\right)" if latex else f"({inner})"


@dataclass
class PipelineResult:
    u: GeneratorSet
    H: GeneratorSet
    relative: dict = field(default_factory=dict)
    B: GeneratorSet = None
    equivariant: dict = field(default_factory=dict)
    ring: GeneratorSet = None


def run_pipeline(G, k_degree_bound=None, check_degree=None, js=None, with_ring=False):
    """Compute u, the relative-invariant sets, B, H and the requested equivariant sets."""
    u = k_invariant_basis(G, k_degree_bound, check_degree)
    factors = _projected_factors(G, u)
    relative = {j: relative_invariant_generators(G, j, u, check_degree, factors=factors)
                for j in range(1, G.m)}
    B = module_basis_B(G, u, check_degree, relative=relative)
    H = k_equivariant_generators(G, k_degree_bound, check_degree)
    js = range(G.m) if js is None else js
    equiv = {j: relative_equivariant_generators(G, j, B, H, check_degree) for j in js}
    ring = invariant_ring_generators(G, u, check_degree, factors=factors) if with_ring else None
    return PipelineResult(u, H, relative, B, equiv, ring)
