"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as integer numerators over a common positive
denominator, in the power basis 1, z, ..., z^(phi(N)-1) of Q(z) modulo the
N-th cyclotomic polynomial.  Mixed conductors are unified to their lcm.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ParseError

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "cyclotomic_polynomial",
    "parse_cyclotomic",
    "to_integer",
    "as_cyclotomic",
]


def _lcm(a, b):
    return a * b // gcd(a, b)


def _factorize(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n):
    r = n
    for p in _factorize(n):
        r = r // p * (p - 1)
    return r


@lru_cache(maxsize=None)
def mobius(n):
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _polydiv_monic(num, den):
    """Quotient and remainder of integer polynomials (low degree first), ``den`` monic."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for k in range(dd + 1):
                num[i - dd + k] -= c * den[k]
    return q, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first, by dividing x^n - 1 by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError("n must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _polydiv_monic(p, cyclotomic_polynomial(d))
            assert not any(r)
    return tuple(p)


@lru_cache(maxsize=None)
def _power_table(n, top):
    """Rows z^e reduced mod Phi_n, for e = 0..top."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(top + 1):
        rows.append(tuple(cur))
        # multiply by z, then eliminate z^deg
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for k in range(deg):
                cur[k] -= lead * phi_poly[k]
    return tuple(rows)


def _table(n, top):
    # the cache key is rounded up so growing requests do not rebuild many tables
    size = max(2 * euler_phi(n), n, 8)
    while size < top + 1:
        size *= 2
    return _power_table(n, size)


def _normalize(nums, den):
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = den
    for x in nums:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g > 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


@lru_cache(maxsize=None)
def _trace_weights(n):
    # trace of z^e divided by phi(n) is mu(n')/phi(n') with n' = n/gcd(n, e)
    out = []
    for e in range(euler_phi(n)):
        m = n // gcd(n, e)
        out.append(Fraction(mobius(m), euler_phi(m)))
    return tuple(out)


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("N", "nums", "den", "_hash")

    def __init__(self, value=0, N=1):
        if isinstance(value, Cyclotomic):
            self.N, self.nums, self.den = value.N, value.nums, value.den
            self._hash = value._hash
            if N != 1 and N != value.N:
                other = value.embed(_lcm(N, value.N))
                self.N, self.nums, self.den = other.N, other.nums, other.den
            return
        if not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot build a Cyclotomic from {type(value).__name__}")
        value = Fraction(value)
        phi = euler_phi(N)
        nums = [0] * phi
        nums[0] = value.numerator
        self.N = N
        self.nums = tuple(nums)
        self.den = value.denominator
        self._hash = None

    @classmethod
    def _raw(cls, N, nums, den):
        obj = object.__new__(cls)
        obj.N = N
        obj.nums, obj.den = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def from_coeffs(cls, coeffs, N):
        """Build from ``{exponent: rational}``; exponents may be any integers."""
        table = _table(N, N)
        phi = euler_phi(N)
        fr = {e % N: Fraction(c) for e, c in coeffs.items() if c}
        den = 1
        for c in fr.values():
            den = _lcm(den, c.denominator)
        nums = [0] * phi
        for e, c in fr.items():
            k = c.numerator * (den // c.denominator)
            row = table[e]
            for i in range(phi):
                if row[i]:
                    nums[i] += k * row[i]
        return cls._raw(N, nums, den)

    # -- structure ---------------------------------------------------------

    @property
    def coeffs(self):
        """Nonzero canonical coefficients as ``{exponent: Fraction}``; empty for zero."""
        return {e: Fraction(x, self.den) for e, x in enumerate(self.nums) if x}

    def is_zero(self):
        return not any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def embed(self, L):
        """The same value written with conductor ``L`` (a multiple of N)."""
        if L == self.N:
            return self
        if L % self.N:
            raise ValueError(f"conductor {L} is not a multiple of {self.N}")
        step = L // self.N
        phi = euler_phi(L)
        table = _table(L, L)
        nums = [0] * phi
        for e, x in enumerate(self.nums):
            if x:
                row = table[e * step]
                for i in range(phi):
                    if row[i]:
                        nums[i] += x * row[i]
        return Cyclotomic._raw(L, nums, self.den)

    def _unify(self, other):
        if not isinstance(other, Cyclotomic):
            if isinstance(other, (int, Fraction)):
                other = Cyclotomic(other, self.N)
            else:
                return None, None
        if other.N == self.N:
            return self, other
        L = _lcm(self.N, other.N)
        return self.embed(L), other.embed(L)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        if a.den == b.den:
            return Cyclotomic._raw(a.N, [x + y for x, y in zip(a.nums, b.nums)], a.den)
        return Cyclotomic._raw(
            a.N, [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)], a.den * b.den
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.N, [-x for x in self.nums], self.den)

    def __sub__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic._raw(
                self.N, [x * other.numerator for x in self.nums], self.den * other.denominator
            )
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        phi = len(a.nums)
        if phi == 1:
            return Cyclotomic._raw(a.N, [a.nums[0] * b.nums[0]], a.den * b.den)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.nums):
            if x:
                for k, y in enumerate(b.nums):
                    if y:
                        conv[i + k] += x * y
        nums = conv[:phi]
        table = _table(a.N, 2 * phi - 2)
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                row = table[e]
                for i in range(phi):
                    if row[i]:
                        nums[i] += c * row[i]
        return Cyclotomic._raw(a.N, nums, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            r = Fraction(self.den, self.nums[0])
            return Cyclotomic(r, self.N)
        # extended Euclid in Q[x] against Phi_N
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.N)]
        a = [Fraction(x, self.den) for x in self.nums]
        s = _qinv(a, mod)
        den = 1
        for c in s:
            den = _lcm(den, c.denominator)
        return Cyclotomic._raw(self.N, [int(c * den) for c in s], den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(1, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self):
        """Complex conjugate: z -> z^(N-1)."""
        if self.is_rational():
            return self
        N = self.N
        phi = len(self.nums)
        table = _table(N, N)
        nums = [0] * phi
        for e, x in enumerate(self.nums):
            if x:
                row = table[(-e) % N]
                for i in range(phi):
                    if row[i]:
                        nums[i] += x * row[i]
        return Cyclotomic._raw(N, nums, self.den)

    def galois(self, k):
        """Image under z -> z^k, gcd(k, N) = 1."""
        if gcd(k, self.N) != 1:
            raise ValueError("k must be a unit mod N")
        return Cyclotomic.from_coeffs(
            {e * k: Fraction(x, self.den) for e, x in enumerate(self.nums) if x}, self.N
        )

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a.den == b.den and a.nums == b.nums

    def __hash__(self):
        # normalized trace is invariant under change of conductor
        if self._hash is None:
            if self.is_rational():
                h = hash(Fraction(self.nums[0], self.den))
            else:
                w = _trace_weights(self.N)
                h = hash(sum((x * t for x, t in zip(self.nums, w) if x), Fraction(0)) / self.den)
            self._hash = h
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(x * z**e for e, x in enumerate(self.nums)) / self.den

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        return format_cyclotomic(self)

    def __repr__(self):
        return f"Cyclotomic({format_cyclotomic(self)!r})"


def _qinv(a, mod):
    """Inverse of polynomial ``a`` modulo ``mod`` over Q (lists low degree first)."""

    def trim(p):
        while len(p) > 1 and p[-1] == 0:
            p = p[:-1]
        return p

    def sub_mul(p, q, c, shift):
        p = list(p) + [Fraction(0)] * max(0, len(q) + shift - len(p))
        for i, x in enumerate(q):
            p[i + shift] -= c * x
        return trim(p)

    r0, r1 = trim(list(mod)), trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while not (len(r1) == 1 and r1[0] == 0):
        q = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
        r = list(r0)
        while len(r) >= len(r1) and not (len(r) == 1 and r[0] == 0):
            c = r[-1] / r1[-1]
            shift = len(r) - len(r1)
            q[shift] = c
            r = sub_mul(r, r1, c, shift)
            if len(r) < len(r1):
                break
        s = list(s0)
        for shift, c in enumerate(q):
            if c:
                s = sub_mul(s, s1, c, shift)
        r0, r1 = r1, r
        s0, s1 = s1, s
    # r0 is a nonzero constant since Phi_N is irreducible
    c = r0[0]
    out = [x / c for x in s0]
    n = len(mod) - 1
    return (out + [Fraction(0)] * n)[:n]


def as_cyclotomic(x):
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic(x)


def root_of_unity(k, N):
    """zeta_N^k in canonical reduced form."""
    if N < 1:
        raise ValueError("N must be positive")
    return Cyclotomic.from_coeffs({k % N: 1}, N)


def to_integer(a):
    """The integer value of ``a``; ValueError when ``a`` is not an integer."""
    a = as_cyclotomic(a)
    if not a.is_rational() or a.den != 1:
        raise ValueError(f"{a} is not an integer")
    return a.nums[0]


# -- literal grammar --------------------------------------------------------
#   expr     := ["-"] term (("+" | "-") term)*
#   term     := rational | rational "*" root | root
#   root     := "E(" int ")" ("^" int)?
#   rational := int ("/" posint)?


def _fmt_rational(r):
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def format_cyclotomic(a):
    parts = []
    for e, c in sorted(a.coeffs.items()):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _fmt_rational(mag)
        else:
            root = f"E({a.N})" if e == 1 else f"E({a.N})^{e}"
            body = root if mag == 1 else f"{_fmt_rational(mag)}*{root}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch, what=None):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {what or repr(ch)}, got {got!r}", self.i)
        self.i += 1

    def integer(self, signed=False):
        self.skip()
        start = self.i
        if signed and self.i < len(self.text) and self.text[self.i] in "+-":
            self.i += 1
        digits = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits:
            got = self.text[self.i] if self.i < len(self.text) else "end of input"
            raise ParseError(f"expected integer, got {got!r}", self.i)
        return int(self.text[start : self.i])


def _parse_root(sc):
    sc.expect("E")
    open_at = sc.i
    sc.expect("(")
    n = sc.integer()
    if n < 1:
        raise ParseError("root-of-unity order must be positive", open_at)
    if sc.peek() != ")":
        raise ParseError("unclosed parenthesis in E(...)", open_at)
    sc.i += 1
    k = 1
    if sc.peek() == "^":
        sc.i += 1
        k = sc.integer(signed=True)
    return root_of_unity(k, n)


def _parse_term(sc):
    if sc.peek() == "E":
        return _parse_root(sc)
    num = sc.integer()
    den = 1
    if sc.peek() == "/":
        sc.i += 1
        at = sc.i
        den = sc.integer()
        if den == 0:
            raise ParseError("zero denominator", at)
    r = Cyclotomic(Fraction(num, den))
    if sc.peek() == "*":
        sc.i += 1
        return r * _parse_root(sc)
    return r


def parse_cyclotomic(text):
    """Parse a cyclotomic literal such as ``"1/2 - 3*E(4) + E(3)^2"``."""
    sc = _Scanner(text)
    sign = 1
    if sc.peek() == "-":
        sc.i += 1
        sign = -1
    elif sc.peek() == "+":
        sc.i += 1
    total = _parse_term(sc) * sign
    while True:
        ch = sc.peek()
        if ch == "":
            return total
        if ch not in "+-":
            raise ParseError(f"expected '+' or '-', got {ch!r}", sc.i)
        sc.i += 1
        t = _parse_term(sc)
        total = total + t if ch == "+" else total - t
