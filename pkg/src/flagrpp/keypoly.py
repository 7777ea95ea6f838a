"""Demazure operators, key polynomials, key expansion and flagged g_{lambda/mu}."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import Permutation
from .polynomial import Polynomial, term_order_key
from .shapes import SkewShape, check_composition, check_flag, enumerate_rpps, sort_decreasing, weight


def _demazure_monomial(i: int, exp: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    # (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}) on x_i^a x_{i+1}^b, as a geometric sum
    a, b = exp[i - 1], exp[i]
    out = {}

    def put(p, q, c):
        e = list(exp)
        e[i - 1], e[i] = p, q
        out[tuple(e)] = out.get(tuple(e), 0) + c

    if a >= b:
        for k in range(a - b + 1):
            put(b + k, a - k, 1)
    elif a + 1 < b:
        for k in range(b - a - 1):
            put(a + 1 + k, b - 1 - k, -1)
    return out


def demazure_op(i: int, f: Polynomial) -> Polynomial:
    if not 1 <= i < f.n:
        raise ValueError(f"T_{i} is not defined on {f.n} variables")
    acc: dict[tuple[int, ...], int] = {}
    for exp, c in f.items():
        for e, d in _demazure_monomial(i, exp).items():
            acc[e] = acc.get(e, 0) + c * d
    return Polynomial(f.n, acc)


def demazure_word(w: Permutation, f: Polynomial) -> Polynomial:
    """T_w f = T_{i_1} ... T_{i_k} f along the reduced word of w."""
    for i in reversed(w.reduced_word):
        f = demazure_op(i, f)
    return f


@lru_cache(maxsize=None)
def key_polynomial(alpha) -> Polynomial:
    alpha = check_composition(alpha)
    dagger, w = sort_decreasing(alpha)
    return demazure_word(w, Polynomial.monomial(dagger))


def grothendieck_poly(shape: SkewShape, flag) -> Polynomial:
    """g_{shape}(X_flag): column-weight generating function of flagged RPPs."""
    flag = check_flag(flag)
    terms: dict[tuple[int, ...], int] = {}
    for T in enumerate_rpps(shape, flag):
        wt = weight(T)
        terms[wt] = terms.get(wt, 0) + 1
    return Polynomial(len(flag), terms)


def _rearrangements(alpha):
    out = {()}
    for _ in alpha:
        out = {p + (a,) for p in out for a in alpha}
    return sorted(p for p in out if sorted(p) == sorted(alpha))


@lru_cache(maxsize=None)
def _key_with_leading(exp: tuple[int, ...]) -> tuple[int, ...]:
    """The composition beta whose key polynomial leads with x^exp."""
    if key_polynomial(exp).leading_exponent() == exp:
        return exp
    # the chosen term order failed for this exponent; search its rearrangements
    for beta in _rearrangements(exp):
        if key_polynomial(beta).leading_exponent() == exp:
            return beta
    raise ArithmeticError(f"no key polynomial leads with x^{exp}")


@dataclass
class KeyExpansion:
    positive: bool
    terms: list[tuple[tuple[int, ...], int]]
    remainder: Polynomial | None = None

    def multiset(self) -> list[tuple[int, ...]]:
        return sorted(a for a, c in self.terms for _ in range(c))

    def to_json(self) -> dict:
        out = {"key_positive": self.positive,
               "terms": [{"alpha": list(a), "mult": c} for a, c in self.terms]}
        if self.remainder is not None:
            out["remainder"] = self.remainder.to_json()
        return out


def key_expand(f: Polynomial) -> KeyExpansion:
    """Greedy key expansion: peel off the term-order-largest monomial each step."""
    if any(c < 0 for _, c in f.items()):
        return KeyExpansion(False, [], f)
    found: dict[tuple[int, ...], int] = {}
    rest = f
    while rest:
        lead = rest.leading_exponent()
        c = rest.coeff(lead)
        beta = _key_with_leading(lead)
        rest = rest - key_polynomial(beta) * c
        found[beta] = found.get(beta, 0) + c
        if any(d < 0 for _, d in rest.items()):
            terms = sorted(found.items(), key=lambda t: term_order_key(t[0]), reverse=True)
            return KeyExpansion(False, terms, rest)
    terms = sorted(found.items(), key=lambda t: term_order_key(t[0]), reverse=True)
    return KeyExpansion(True, terms)
