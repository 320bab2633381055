"""Consistency suite run by ``relequiv check``: dimension agreement, sum rules,
projector laws on random inputs, generator certification and optional
expected series carried by the spec file."""

import random
from dataclasses import dataclass

from .cyclotomic import Cyclotomic, root_of_unity
from .errors import RelequivError
from .generators import davenport_check, run_pipeline
from .molien import (
    EQUIVARIANT,
    INVARIANT,
    dims_by_characters,
    kernel_molien_series,
    molien_series,
    oracle_series,
    sym_power_characters,
)
from .polynomial import Poly, PolyMap, monomials
from .reynolds import (
    average_over_K,
    is_relative_equivariant,
    is_relative_invariant,
    relative_project,
    relative_project_map,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def random_poly(G, rng, max_degree=3, nterms=4):
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_degree)
        e = rng.choice(monomials(G.n, d))
        c = Cyclotomic(rng.randint(-3, 3)) * root_of_unity(rng.randrange(G.N), G.N)
        terms[e] = c
    return Poly(G.n, terms)


def random_k_invariant(G, rng, **kw):
    for _ in range(20):
        f = average_over_K(G, random_poly(G, rng, **kw))
        if not f.is_zero():
            return f
    return f


def random_k_equivariant(G, rng, **kw):
    for _ in range(20):
        h = PolyMap(random_poly(G, rng, **kw) for _ in range(G.n_target))
        h = average_over_K(G, h)
        if not h.is_zero():
            return h
    return h


def projector_laws(G, x, vector=False):
    """Failures of idempotence, completeness, orthogonality and image membership on ``x``."""
    proj = relative_project_map if vector else relative_project
    member = is_relative_equivariant if vector else is_relative_invariant
    parts = [proj(G, j, x) for j in range(G.m)]
    bad = []
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    if total != x:
        bad.append("sum of projections is not the identity")
    for j, p in enumerate(parts):
        if proj(G, j, p) != p:
            bad.append(f"R{j} not idempotent")
        if not member(G, j, p):
            bad.append(f"R{j} image not sigma^{j}-relative")
        for i in range(G.m):
            if i != j and not proj(G, i, p).is_zero():
                bad.append(f"R{i} R{j} != 0")
    return bad


def dimension_checks(G, oracle_dmax=5):
    out = []
    table = sym_power_characters(G, oracle_dmax)
    for kind in (INVARIANT, EQUIVARIANT):
        series = []
        for j in range(G.m):
            a = molien_series(G, j, kind, oracle_dmax)
            b = dims_by_characters(G, j, kind, oracle_dmax, table=table)
            c = oracle_series(G, j, kind, oracle_dmax)
            ok = a == b == c
            out.append(CheckResult(f"three-way {kind} j={j}", ok,
                                   "" if ok else f"molien {a.coeffs} chars {b.coeffs} oracle {c.coeffs}"))
            series.append(a)
        total = series[0]
        for s in series[1:]:
            total = total + s
        k = kernel_molien_series(G, kind, oracle_dmax)
        out.append(CheckResult(f"sum rule {kind}", total == k,
                               "" if total == k else f"{total.coeffs} vs K {k.coeffs}"))
    return out


def projector_checks(G, n_random=20, seed=0):
    rng = random.Random(seed)
    out = []
    for vector in (False, True):
        what = "vector" if vector else "scalar"
        fails = []
        for _ in range(n_random):
            x = random_k_equivariant(G, rng) if vector else random_k_invariant(G, rng)
            fails += projector_laws(G, x, vector)
        out.append(CheckResult(f"projector laws ({what}, {n_random} inputs)", not fails,
                               "; ".join(sorted(set(fails)))))
    return out


def generator_checks(G, k_degree_bound=None, check_degree=None):
    out = []
    try:
        res = run_pipeline(G, k_degree_bound, check_degree)
    except RelequivError as exc:
        return [CheckResult("generator pipeline", False, str(exc))]
    out.append(CheckResult("generator pipeline certified against Molien", True))
    for j, gs in res.relative.items():
        extra = davenport_check(G, j, res.u, gs)
        out.append(CheckResult(f"Davenport bound j={j}", not extra,
                               "" if not extra else f"{len(extra)} products outside the module"))
    bad = [str(it.value) for j, gs in res.equivariant.items() for it in gs
           if not is_relative_equivariant(G, j, it.value)]
    bad += [str(it.value) for j, gs in res.relative.items() for it in gs
            if not is_relative_invariant(G, j, it.value)]
    out.append(CheckResult("generators satisfy their defining identities", not bad, ", ".join(bad)))
    return out


def expected_checks(G, expected):
    out = []
    for kind, rows in (expected or {}).items():
        for j, row in enumerate(rows):
            s = molien_series(G, j, kind, len(row) - 1)
            ok = list(s.coeffs) == list(row)
            out.append(CheckResult(f"expected {kind} series j={j}", ok,
                                   "" if ok else f"got {s.coeffs}, expected {tuple(row)}"))
    return out


def run_checks(G, expected=None, oracle_dmax=5, n_random=20, seed=0, k_degree_bound=None,
               check_degree=None):
    results = []
    for step in (
        lambda: dimension_checks(G, oracle_dmax),
        lambda: projector_checks(G, n_random, seed),
        lambda: generator_checks(G, k_degree_bound, check_degree),
        lambda: expected_checks(G, expected),
    ):
        try:
            results += step()
        except RelequivError as exc:
            results.append(CheckResult(type(exc).__name__, False, str(exc)))
    return results
