"""Finite matrix groups graded by an epimorphism onto Z_m.

Each element carries its source matrix (rho), its target matrix (eta) and its
grade sigma in Z_m.  Elements are identified by the exact pair (rho, eta).
"""

from collections import deque
from dataclasses import dataclass
from math import lcm

from .cyclotomic import Cyclotomic, root_of_unity
from .errors import GroupError
from .matrix import conductor, embed_matrix, identity, mat_mul, matrix_key, to_matrix, trace

__all__ = ["GroupElement", "GradedGroup", "close_group"]


@dataclass(frozen=True, eq=False)
class GroupElement:
    rho: tuple
    eta: tuple
    sigma: int
    index: int

    def __repr__(self):
        return f"GroupElement(index={self.index}, sigma={self.sigma})"


class GradedGroup:
    """A closed finite group with its grading, kernel K and coset representative delta.

    Build instances with :func:`close_group`.
    """

    def __init__(self, m, elements, generator_indices, N):
        self.m = m
        self.elements = elements
        self.generator_indices = tuple(generator_indices)
        self.N = N
        self.n = len(elements[0].rho)
        self.n_target = len(elements[0].eta)
        self._lookup = {self._key(g.rho, g.eta): g.index for g in elements}
        self._mul = {}
        self._inv = {}
        self.kernel_indices = tuple(g.index for g in elements if g.sigma == 0)
        target = 1 % m
        self.delta_index = next(g.index for g in elements if g.sigma == target)
        self.zeta = root_of_unity(1, m)

    @staticmethod
    def _key(rho, eta):
        return (matrix_key(rho), matrix_key(eta))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    @property
    def delta(self):
        return self.elements[self.delta_index]

    @property
    def generators(self):
        return [self.elements[i] for i in self.generator_indices]

    @property
    def kernel(self):
        return [self.elements[i] for i in self.kernel_indices]

    def find(self, rho, eta):
        i = self._lookup.get(self._key(embed_matrix(rho, self.N), embed_matrix(eta, self.N)))
        return None if i is None else self.elements[i]

    def mul(self, a, b):
        key = (a.index, b.index)
        i = self._mul.get(key)
        if i is None:
            i = self._lookup[self._key(mat_mul(a.rho, b.rho), mat_mul(a.eta, b.eta))]
            self._mul[key] = i
        return self.elements[i]

    def power(self, a, k):
        if k < 0:
            return self.power(self.inverse(a), -k)
        out = self.identity
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def inverse(self, a):
        i = self._inv.get(a.index)
        if i is None:
            # walk the cyclic subgroup: the element before the identity is a^-1
            prev, cur = self.identity, a
            while cur.index != 0:
                prev, cur = cur, self.mul(cur, a)
            i = prev.index
            self._inv[a.index] = i
        return self.elements[i]

    def sigma_value(self, a, j=1):
        """sigma^j(a) as a root of unity."""
        return self.zeta ** ((j * a.sigma) % self.m) if self.m > 1 else Cyclotomic(1)

    def character(self, a, which="target"):
        if which == "target":
            return trace(a.eta)
        if which == "source":
            return trace(a.rho)
        raise ValueError(f"unknown representation {which!r}")

    def coset_representatives(self):
        reps = [self.identity]
        for _ in range(1, self.m):
            reps.append(self.mul(reps[-1], self.delta))
        return reps

    def with_delta(self, index):
        """A copy using another element of grade 1 as delta."""
        if self.elements[index].sigma != 1 % self.m:
            raise GroupError("delta must have sigma = 1")
        other = GradedGroup(self.m, self.elements, self.generator_indices, self.N)
        other.delta_index = index
        return other

    def __repr__(self):
        return f"GradedGroup(order={self.order}, m={self.m}, |K|={len(self.kernel_indices)})"


def close_group(generators, m, max_order=10000):
    """Close ``generators`` (triples ``(rho, eta, sigma)``; ``eta=None`` means rho) under multiplication."""
    if m < 1:
        raise GroupError("grading modulus m must be >= 1")
    if not generators:
        raise GroupError("at least one generator required")
    gens = []
    for rho, eta, s in generators:
        rho = to_matrix(rho)
        eta = rho if eta is None else to_matrix(eta)
        if any(len(r) != len(rho) for r in rho) or any(len(r) != len(eta) for r in eta):
            raise GroupError("generator matrices must be square")
        if not 0 <= s < m:
            raise GroupError(f"sigma value {s} outside 0..{m - 1}")
        gens.append((rho, eta, s))
    n, nt = len(gens[0][0]), len(gens[0][1])
    if any(len(r) != n or len(e) != nt for r, e, _ in gens):
        raise GroupError("generator matrices must share dimensions")

    N = lcm(m, *(conductor(r) for r, _, _ in gens), *(conductor(e) for _, e, _ in gens))
    gens = [(embed_matrix(r, N), embed_matrix(e, N), s) for r, e, s in gens]

    elements = [GroupElement(identity(n, N), identity(nt, N), 0, 0)]
    lookup = {GradedGroup._key(elements[0].rho, elements[0].eta): 0}
    gen_idx = []
    for r, e, s in gens:
        # generators may coincide with each other or the identity
        key = GradedGroup._key(r, e)
        if key in lookup:
            if elements[lookup[key]].sigma != s:
                raise GroupError("sigma ill-defined: one element reached with two sigma values")
            gen_idx.append(lookup[key])
            continue
        lookup[key] = len(elements)
        gen_idx.append(len(elements))
        elements.append(GroupElement(r, e, s, len(elements)))
        if len(elements) > max_order:
            raise GroupError(f"group not finite within bound {max_order}")

    queue = deque(range(len(elements)))
    while queue:
        a = elements[queue.popleft()]
        for r, e, s in gens:
            rho, eta = mat_mul(a.rho, r), mat_mul(a.eta, e)
            sig = (a.sigma + s) % m
            key = GradedGroup._key(rho, eta)
            i = lookup.get(key)
            if i is not None:
                if elements[i].sigma != sig:
                    raise GroupError("sigma ill-defined: one element reached with two sigma values")
                continue
            if len(elements) >= max_order:
                raise GroupError(f"group not finite within bound {max_order}")
            lookup[key] = len(elements)
            elements.append(GroupElement(rho, eta, sig, len(elements)))
            queue.append(len(elements) - 1)

    if {g.sigma for g in elements} != set(range(m)):
        raise GroupError("sigma not an epimorphism onto Z_m")
    return GradedGroup(m, elements, gen_idx, N)
