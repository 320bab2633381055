"""Sparse multivariate polynomials and polynomial maps over Cyclotomic.

Variables are positional; display names are supplied at render time.  The
monomial order is graded lexicographic with variable 0 largest.
"""

from itertools import combinations_with_replacement

from .cyclotomic import Cyclotomic, as_cyclotomic, format_cyclotomic
from .matrix import is_diagonal

__all__ = [
    "Poly",
    "PolyMap",
    "monomials",
    "act_on_poly",
    "act_on_map",
    "homogeneous_component",
    "grlex_key",
]


def grlex_key(exp):
    return (sum(exp), exp)


def monomials(nvars, d):
    """All exponent vectors of total degree ``d``, in decreasing grlex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_cyclotomic(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; ``None`` stands for the degree of the zero polynomial."""
        return max((sum(e) for e in self.terms), default=None)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def leading(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def normalized(self):
        """Scaled so that the grlex leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.leading()[1].inverse())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return Poly._wrap(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        return self + (-other)

    def scale(self, c):
        c = as_cyclotomic(c)
        if c.is_zero():
            return Poly._wrap(self.nvars, {})
        return Poly._wrap(self.nvars, {e: x * c for e, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PolyMap):
            return other.scale_by(self)
        if not isinstance(other, Poly):
            return self.scale(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                s = terms.get(e)
                terms[e] = v if s is None else s + v
        return Poly._wrap(self.nvars, {e: c for e, c in terms.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = Poly.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Cyclotomic)):
            return self == Poly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def homogeneous_component(self, d):
        return Poly._wrap(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def substitute_linear(self, mat):
        """The polynomial x -> self(mat @ x)."""
        if is_diagonal(mat):
            diag = [mat[i][i] for i in range(self.nvars)]
            terms = {}
            for e, c in self.terms.items():
                f = c
                for i, k in enumerate(e):
                    if k:
                        f = f * diag[i] ** k
                if not f.is_zero():
                    terms[e] = f
            return Poly._wrap(self.nvars, terms)
        forms = [
            Poly(self.nvars, {_unit(self.nvars, j): mat[i][j] for j in range(self.nvars)})
            for i in range(self.nvars)
        ]
        powers = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = forms[i] if k == 1 else power(i, k - 1) * forms[i]
            return powers[key]

        out = Poly._wrap(self.nvars, {})
        for e, c in self.terms.items():
            t = Poly.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: grlex_key(ec[0]), reverse=True)

    def render(self, names=None, latex=False):
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = _render_monomial(e, names, latex)
            cs = format_cyclotomic(c)
            neg = cs.startswith("-") and (c.is_rational() or len(c.coeffs) == 1)
            if neg:
                cs = cs[1:]
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif len(c.coeffs) > 1:
                body = f"({cs})" + ("" if latex else "*") + mono
            else:
                body = cs + (" " if latex else "*") + mono
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r})"


def _unit(n, j):
    e = [0] * n
    e[j] = 1
    return tuple(e)


def default_names(n):
    return [f"x{i + 1}" for i in range(n)]


def _render_monomial(e, names, latex):
    parts = []
    for i, k in enumerate(e):
        if k == 0:
            continue
        if latex:
            parts.append(names[i] if k == 1 else f"{{{names[i]}}}^{{{k}}}")
        else:
            parts.append(names[i] if k == 1 else f"{names[i]}^{k}")
    return (" " if latex else "*").join(parts)


class PolyMap:
    """A vector of polynomials, i.e. a polynomial map V -> W."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)
        if len({p.nvars for p in self.components}) > 1:
            raise ValueError("components must share nvars")

    @classmethod
    def unit(cls, nvars, ncomp, k, poly):
        comps = [Poly(nvars) for _ in range(ncomp)]
        comps[k] = poly
        return cls(comps)

    @property
    def nvars(self):
        return self.components[0].nvars

    def __len__(self):
        return len(self.components)

    def is_zero(self):
        return all(p.is_zero() for p in self.components)

    def degree(self):
        return max((d for d in (p.degree() for p in self.components) if d is not None), default=None)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for p in self.components for e in p.terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def term_keys(self):
        """Dict ``(component, exponent) -> coefficient`` over all nonzero terms."""
        return {(k, e): c for k, p in enumerate(self.components) for e, c in p.terms.items()}

    def leading(self):
        # term over position: higher monomial first, then lower component index
        k, e = max(((k, e) for k, p in enumerate(self.components) for e in p.terms),
                   key=lambda ke: (grlex_key(ke[1]), -ke[0]))
        return (k, e), self.components[k].terms[e]

    def normalized(self):
        if self.is_zero():
            return self
        return self.scale(self.leading()[1].inverse())

    def __add__(self, other):
        return PolyMap(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        return PolyMap(a - b for a, b in zip(self.components, other.components))

    def __neg__(self):
        return PolyMap(-a for a in self.components)

    def scale(self, c):
        return PolyMap(p.scale(c) for p in self.components)

    def scale_by(self, poly):
        """Module multiplication ``poly * self``."""
        return PolyMap(poly * p for p in self.components)

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return self.scale_by(other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def homogeneous_component(self, d):
        return PolyMap(p.homogeneous_component(d) for p in self.components)

    def substitute_linear(self, mat):
        return PolyMap(p.substitute_linear(mat) for p in self.components)

    def left_multiply(self, mat):
        """The map x -> mat @ self(x)."""
        nv = self.nvars
        out = []
        for row in mat:
            acc = Poly(nv)
            for a, p in zip(row, self.components):
                if not a.is_zero() and not p.is_zero():
                    acc = acc + p.scale(a)
            out.append(acc)
        return PolyMap(out)

    def render(self, names=None, latex=False):
        inner = ", ".join(p.render(names, latex) for p in self.components)
        return rf"\left({inner}\right)" if latex else f"({inner})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PolyMap({self.render()!r})"


def homogeneous_component(p, d):
    return p.homogeneous_component(d)


def act_on_poly(G, g, f):
    """x -> f(rho(g) x)."""
    return f.substitute_linear(g.rho)


def act_on_map(G, g, h):
    """x -> eta(g)^-1 h(rho(g) x); its fixed points under the group are the equivariants."""
    return h.substitute_linear(g.rho).left_multiply(G.inverse(g).eta)


def zero_like(x):
    if isinstance(x, PolyMap):
        return PolyMap(Poly(x.nvars) for _ in x.components)
    return Poly(x.nvars)


def act(G, g, x):
    if isinstance(x, PolyMap):
        return act_on_map(G, g, x)
    return act_on_poly(G, g, x)
