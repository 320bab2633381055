"""Truncated power series: integer Hilbert series and Cyclotomic-coefficient expansions."""

from dataclasses import dataclass

from .cyclotomic import Cyclotomic, as_cyclotomic


@dataclass(frozen=True)
class IntSeries:
    """Truncated series sum_d coeffs[d] t^d, d = 0..dmax."""

    coeffs: tuple

    @property
    def dmax(self):
        return len(self.coeffs) - 1

    def __getitem__(self, d):
        return self.coeffs[d]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, dmax):
        return IntSeries(self.coeffs[: dmax + 1])

    def agrees(self, other):
        """Equality up to the common truncation degree."""
        n = min(len(self), len(other))
        return tuple(self.coeffs[:n]) == tuple(other.coeffs[:n])

    def __add__(self, other):
        n = min(len(self), len(other))
        return IntSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def scale(self, k):
        return IntSeries(tuple(k * a for a in self.coeffs))

    def render(self, var="t"):
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            parts.append(body)
        return " + ".join(parts) if parts else "0"

    def csv(self):
        lines = ["degree,dim"]
        lines += [f"{d},{c}" for d, c in enumerate(self.coeffs)]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.render()


def inverse_series(p, dmax):
    """Coefficients of 1/p(t) up to t^dmax, for p with nonzero constant term."""
    p = [as_cyclotomic(c) for c in p]
    inv0 = p[0].inverse()
    out = [inv0]
    for d in range(1, dmax + 1):
        acc = Cyclotomic(0)
        for i in range(1, min(d, len(p) - 1) + 1):
            if not p[i].is_zero():
                acc = acc + p[i] * out[d - i]
        out.append(-(acc * inv0))
    return out
