"""Averaging operators and the relative Reynolds projectors R_j (scalar) and vector R_j."""

from fractions import Fraction

from .errors import RelequivError
from .polynomial import PolyMap, act, act_on_map, act_on_poly, zero_like

__all__ = [
    "PreconditionError",
    "average_over_K",
    "average_over_group",
    "relative_project",
    "relative_project_map",
    "is_relative_invariant",
    "is_relative_equivariant",
    "is_K_invariant",
    "is_K_equivariant",
]


class PreconditionError(RelequivError, ValueError):
    exit_code = 5


def _average(G, elements, x):
    total = zero_like(x)
    for g in elements:
        total = total + act(G, g, x)
    return total.scale(Fraction(1, len(elements)))


def average_over_K(G, x):
    """Reynolds operator of the kernel K; works on polynomials and maps."""
    return _average(G, G.kernel, x)


def average_over_group(G, x):
    return _average(G, G.elements, x)


def is_K_invariant(G, f):
    return all(act_on_poly(G, k, f) == f for k in G.kernel)


def is_K_equivariant(G, g):
    return all(act_on_map(G, k, g) == g for k in G.kernel)


def _project(G, j, x):
    m = G.m
    j %= m
    total = zero_like(x)
    for k, dk in enumerate(G.coset_representatives()):
        # conj(sigma(delta)^(jk)) = zeta_m^(-jk)
        w = G.zeta ** ((-j * k) % m)
        total = total + act(G, dk, x).scale(w)
    return total.scale(Fraction(1, m))


def relative_project(G, j, f, check=True):
    """R_j(f) = (1/m) sum_k conj(sigma(delta)^(jk)) f(delta^k x), for K-invariant f."""
    if check and not is_K_invariant(G, f):
        raise PreconditionError("relative_project needs a K-invariant polynomial")
    return _project(G, j, f)


def relative_project_map(G, j, g, check=True):
    """Vector R_j(g) = (1/m) sum_k conj(sigma(delta)^(jk)) eta(delta^k)^-1 g(rho(delta^k) x).

    The inverse on the target side makes R_j fix every sigma^j-relative
    equivariant; with eta(delta^k) itself the operator is not idempotent.
    """
    if check and not is_K_equivariant(G, g):
        raise PreconditionError("relative_project_map needs a K-equivariant map")
    return _project(G, j, g)


def is_relative_invariant(G, j, f):
    """f(gamma x) = sigma^j(gamma) f(x) on every group generator."""
    return all(act_on_poly(G, g, f) == f.scale(G.sigma_value(g, j)) for g in G.generators)


def is_relative_equivariant(G, j, h):
    """h(rho(gamma) x) = sigma^j(gamma) eta(gamma) h(x) on every group generator."""
    if not isinstance(h, PolyMap):
        raise TypeError("expected a PolyMap")
    for g in G.generators:
        lhs = h.substitute_linear(g.rho)
        rhs = h.left_multiply(g.eta).scale(G.sigma_value(g, j))
        if lhs != rhs:
            return False
    return True
