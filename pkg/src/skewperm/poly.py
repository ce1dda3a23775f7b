"""Exact univariate polynomials in ``a_k`` indexing, plus graph polynomials.

A :class:`Poly` of degree ``n`` stores ``a_0 .. a_n`` where ``a_k`` is the
coefficient of ``x**(n-k)``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, _as_rational, matching_counts


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(_as_rational(x) for x in self.coeffs)
        if not c:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_ints(cls, coeffs: Iterable[int]) -> Poly:
        return cls(tuple(Fraction(int(c)) for c in coeffs))

    @classmethod
    def monomial(cls, n: int) -> Poly:
        return cls((Fraction(1),) + (Fraction(0),) * n)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __mul__(self, other: Poly) -> Poly:
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __str__(self):
        n = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = n - k
            mag = abs(c)
            coef = "" if (mag == 1 and p > 0) else _fmt(mag)
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, coef + mono))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s

    def derivative(self) -> Poly:
        n = self.degree
        if n == 0:
            return Poly((Fraction(0),))
        return Poly(tuple(c * (n - k) for k, c in enumerate(self.coeffs[:-1])))

    def to_json(self) -> list[str]:
        return [_fmt(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls(tuple(Fraction(s) for s in data))

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def matching_polynomial(g: Graph) -> Poly:
    coeffs = [Fraction(0)] * (g.n + 1)
    for r, p in enumerate(matching_counts(g)):
        coeffs[2 * r] = Fraction((-1) ** r * p)
    return Poly(tuple(coeffs))


def char_poly(a: Sequence[Sequence]) -> Poly:
    """``det(xI - A)`` by the division-free Berkowitz recurrence."""
    n = len(a)
    m = [[_as_rational(x) for x in row] for row in a]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if all(x.denominator == 1 for row in m for x in row):
        m = [[int(x) for x in row] for row in m]
    if n == 0:
        return Poly((Fraction(1),))
    vect = [1, -m[0][0]]
    for r in range(1, n):
        # first column of the Toeplitz factor: 1, -a_rr, -R C, -R M C, ...
        t = [1, -m[r][r]]
        col = [m[i][r] for i in range(r)]
        row = m[r][:r]
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, col)))
            col = [sum(m[i][j] * col[j] for j in range(r)) for i in range(r)]
        vect = [
            sum(t[i - j] * vect[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return Poly(tuple(Fraction(c) for c in vect))


def bipartite_by_odd_coeffs(p: Poly) -> bool:
    return all(p[k] == 0 for k in range(1, p.degree + 1, 2))


def check_i_relation(pg: Poly, pgs: Poly) -> bool:
    """Coefficient test for ``S_p(G^sigma) = i * S_p(G)``.

    Odd-index coefficients must vanish in both, ``a_k`` must agree when
    ``k % 4 == 0`` and be negatives when ``k % 4 == 2``.
    """
    if pg.degree != pgs.degree:
        raise ValueError(f"degree mismatch: {pg.degree} vs {pgs.degree}")
    for k, (a, b) in enumerate(zip(pg.coeffs, pgs.coeffs)):
        if k % 2 == 1:
            if a != 0 or b != 0:
                return False
        elif k % 4 == 0:
            if a != b:
                return False
        elif a != -b:
            return False
    return True


# exact division helpers, descending coefficient lists ------------------------


def _strip(p: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num, den = _strip(list(num)), _strip(list(den))
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    r = list(num)
    lead = den[0]
    for i in range(len(q)):
        c = r[i] / lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                r[i + j] -= c * d
    rem = _strip(r[len(q):]) if len(r) > len(q) else [Fraction(0)]
    return q, rem


def _monic(p: list[Fraction]) -> list[Fraction]:
    p = _strip(p)
    return [c / p[0] for c in p]


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _strip(list(a)), _strip(list(b))
    while b != [0]:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lead * prod(f_i ** i)`` with each ``f_i`` monic and squarefree.

    Trivial (constant) factors are dropped.
    """
    f = _monic(list(p.coeffs))
    if len(f) == 1:
        return []
    df = _deriv(f)
    a = _gcd(f, df)
    b, _ = _divmod(f, a)
    c, _ = _divmod(df, a)
    d = _sub(c, _deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        d = _sub(c, _deriv(b))
        if len(a) > 1:
            out.append((Poly(tuple(a)), i))
        i += 1
    return out


def _deriv(p: list[Fraction]) -> list[Fraction]:
    n = len(p) - 1
    if n == 0:
        return [Fraction(0)]
    return _strip([c * (n - k) for k, c in enumerate(p[:-1])])


def _sub(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    size = max(len(p), len(q))
    p = [Fraction(0)] * (size - len(p)) + list(p)
    q = [Fraction(0)] * (size - len(q)) + list(q)
    return _strip([x - y for x, y in zip(p, q)])
