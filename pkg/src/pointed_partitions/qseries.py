"""Truncated power series in ``q`` with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable


class DegreeMismatch(ValueError):
    pass


class QSeries:
    """A power series known up to and including ``q**max_degree``."""

    __slots__ = ("max_degree", "coeffs")

    def __init__(self, coeffs: Iterable[int], max_degree: int):
        if max_degree < 0:
            raise ValueError(f"max_degree must be nonnegative, got {max_degree}")
        cs = [int(c) for c in coeffs][: max_degree + 1]
        cs.extend([0] * (max_degree + 1 - len(cs)))
        self.max_degree = max_degree
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, N: int) -> QSeries:
        return cls((), N)

    @classmethod
    def one(cls, N: int) -> QSeries:
        return cls((1,), N)

    @classmethod
    def monomial(cls, d: int, N: int, c: int = 1) -> QSeries:
        if d > N:
            return cls.zero(N)
        return cls([0] * d + [c], N)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.max_degree == other.max_degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.max_degree, self.coeffs))

    def _check(self, other: QSeries) -> None:
        if self.max_degree != other.max_degree:
            raise DegreeMismatch(
                f"series truncated at different degrees: {self.max_degree} vs {other.max_degree}"
            )

    def __add__(self, other: QSeries) -> QSeries:
        self._check(other)
        return QSeries((x + y for x, y in zip(self.coeffs, other.coeffs)), self.max_degree)

    def __neg__(self) -> QSeries:
        return QSeries((-c for c in self.coeffs), self.max_degree)

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def __mul__(self, other: QSeries) -> QSeries:
        self._check(other)
        N = self.max_degree
        out = [0] * (N + 1)
        b = other.coeffs
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return QSeries(out, N)

    def shift(self, d: int) -> QSeries:
        """Multiply by ``q**d``."""
        if d >= len(self.coeffs):
            return QSeries.zero(self.max_degree)
        return QSeries((0,) * d + self.coeffs[: len(self.coeffs) - d], self.max_degree)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"QSeries({list(self.coeffs)!r}, max_degree={self.max_degree})"

    def __str__(self) -> str:
        return format_series(self)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def series_add(s: QSeries, t: QSeries) -> QSeries:
    return s + t


def series_mul(s: QSeries, t: QSeries) -> QSeries:
    return s * t


def series_one(N: int) -> QSeries:
    return QSeries.one(N)


def format_series(s: QSeries) -> str:
    terms = []
    for d, c in enumerate(s.coeffs):
        if d == 0:
            terms.append(str(c))
        elif d == 1:
            terms.append(f"{c}*q")
        else:
            terms.append(f"{c}*q^{d}")
    return " + ".join(terms)


def q_binomial(n: int, k: int, N: int) -> QSeries:
    """Gaussian binomial ``[n choose k]_q`` truncated at degree ``N``.

    Built row by row from ``[n, k] = [n-1, k-1] + q^k [n-1, k]``.
    """
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    size = min(k * (n - k), N) + 1
    # row[j] holds [i choose j] as a coefficient list of length `size`
    row = [[1] + [0] * (size - 1)]
    for i in range(1, n + 1):
        new = []
        for j in range(min(i, k) + 1):
            cur = [0] * size
            if j <= i - 1 and j < len(row):
                prev = row[j]
                for d in range(size - j):
                    cur[d + j] += prev[d]
            if j >= 1:
                prev = row[j - 1]
                for d in range(size):
                    cur[d] += prev[d]
            new.append(cur)
        row = new
    return QSeries(row[k], N)


def q_pochhammer_inv(s: int, N: int) -> QSeries:
    """``1 / (q^s; q)_inf`` truncated at ``N``: partitions with every part >= ``s``."""
    if s < 1:
        raise ValueError(f"q_pochhammer_inv needs s >= 1, got {s}")
    cs = [1] + [0] * N
    for part in range(s, N + 1):
        # multiply by 1/(1 - q^part) in place
        for d in range(part, N + 1):
            cs[d] += cs[d - part]
    return QSeries(cs, N)


def gf_f(a: int, l: int, m: int, N: int) -> QSeries:
    """Generating function of pointed partitions with arm ``a``, leg ``l``, coarm ``m``."""
    if min(a, l, m) < 0:
        raise ValueError(f"(a,l,m) must be nonnegative, got ({a},{l},{m})")
    series = q_pochhammer_inv(a + 1, N) * q_binomial(m + a, a, N) * q_binomial(l + a, a, N)
    return series.shift((m + 1) * (l + 1) + a)


def _inv_q_factorial(m: int, N: int) -> QSeries:
    """``1 / (q; q)_m``: partitions with parts at most ``m``."""
    cs = [1] + [0] * N
    for part in range(1, m + 1):
        for d in range(part, N + 1):
            cs[d] += cs[d - part]
    return QSeries(cs, N)


def remark_identity_gap(a: int, m: int, N: int) -> QSeries:
    """LHS minus RHS of ``1/(q;q)_m = [m+a, a] * sum_t q^{t(a+1)} [m-1+t, t]``.

    The identity counts partitions with parts at most ``m`` through pealing,
    so the gap is the zero series.
    """
    if a < 0 or m < 1:
        raise ValueError(f"need a >= 0 and m >= 1, got a={a}, m={m}")
    lhs = _inv_q_factorial(m, N)
    total = QSeries.zero(N)
    t = 0
    while t * (a + 1) <= N:
        total = total + q_binomial(m - 1 + t, t, N).shift(t * (a + 1))
        t += 1
    return lhs - q_binomial(m + a, a, N) * total
