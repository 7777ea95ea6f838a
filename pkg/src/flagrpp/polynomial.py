"""Sparse polynomials in x_1..x_n with arbitrary-precision integer coefficients."""
from __future__ import annotations

from collections.abc import Iterable, Mapping


def term_order_key(exp) -> tuple[int, ...]:
    """Key for the key-expansion term order: reversed exponent, compared lexicographically."""
    return tuple(reversed(exp))


class Polynomial:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        self.n = n
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {n} variables")
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp, coeff: int = 1) -> Polynomial:
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls(n, {(0,) * n: 1})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def coeff(self, exp) -> int:
        return self._terms.get(tuple(exp), 0)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.one(self.n) * other
        self._check(other)
        return Polynomial(self.n, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.n, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Polynomial.one(self.n) * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_component(self, d: int) -> Polynomial:
        return Polynomial(self.n, {e: c for e, c in self._terms.items() if sum(e) == d})

    def top_component(self) -> Polynomial:
        return self.homogeneous_component(self.degree()) if self else self

    def swap(self, i: int) -> Polynomial:
        """s_i f: exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(self.n, out)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms, largest first in the key-expansion term order."""
        return sorted(self._terms.items(), key=lambda t: term_order_key(t[0]), reverse=True)

    def leading_exponent(self) -> tuple[int, ...]:
        return max(self._terms, key=term_order_key)

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, n: int | None = None) -> Polynomial:
        if n is None:
            if not data:
                raise ValueError("cannot infer variable count of an empty polynomial")
            n = len(data[0]["exp"])
        return cls(n, [(t["exp"], int(t["coeff"])) for t in data])

    def __str__(self):
        if not self._terms:
            return "0"
        # graded, then lexicographic, largest first
        ordered = sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        out = []
        for k, (e, c) in enumerate(ordered):
            mono = "*".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self.n}, {self._terms!r})"
