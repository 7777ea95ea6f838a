"""Type A crystals on words, tableaux and reverse plane partitions.

The tensor rule acts on the left factor when eps_i(x) >= phi_i(y). On a
word w_1 w_2 ... w_k this amounts to pairing each ``i+1`` with a later
``i``; f_i raises the rightmost unpaired ``i`` and e_i lowers the leftmost
unpaired ``i+1``. Operators return ``None`` where the operator is undefined.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product

from .perms import Permutation, permutations_by_length
from .polynomial import Polynomial
from .shapes import (
    Rpp, ShapeError, SkewShape, Ssyt, Word, check_composition, check_flag,
    check_partition, enumerate_rpps_m, height, highest_weight_tableau,
    reading_word, weight,
)


class CrystalError(RuntimeError):
    """An operator produced an object outside its carrier set (a bug, never user error)."""


class MalformedCrystal(ValueError):
    """A set handed to a recognizer without a unique highest element."""


class NotRealizable(ValueError):
    """No RPP has the requested height and reading word."""


def standard_f(i: int, j: int, m: int) -> int:
    if not 1 <= i < m:
        raise ValueError(f"f_{i} is not defined on W_{m}")
    return i + 1 if j == i else 0


def standard_e(i: int, j: int, m: int) -> int:
    if not 1 <= i < m:
        raise ValueError(f"e_{i} is not defined on W_{m}")
    return i if j == i + 1 else 0


def _unpaired(i: int, w) -> tuple[list[int], list[int]]:
    """Positions of unpaired ``i`` and unpaired ``i+1`` letters of w."""
    free_up: list[int] = []
    free_low: list[int] = []
    for pos, x in enumerate(w):
        if x == i + 1:
            free_up.append(pos)
        elif x == i:
            if free_up:
                free_up.pop()
            else:
                free_low.append(pos)
    return free_low, free_up


def epsilon(i: int, w) -> int:
    return len(_unpaired(i, w)[1])


def phi(i: int, w) -> int:
    return len(_unpaired(i, w)[0])


def tensor_f(i: int, w) -> Word | None:
    low, _ = _unpaired(i, w)
    if not low:
        return None
    p = low[-1]
    return tuple(w[:p]) + (i + 1,) + tuple(w[p + 1:])


def tensor_e(i: int, w) -> Word | None:
    _, up = _unpaired(i, w)
    if not up:
        return None
    p = up[0]
    return tuple(w[:p]) + (i,) + tuple(w[p + 1:])


def _changed_position(a, b) -> int:
    return next(p for p, (x, y) in enumerate(zip(a, b)) if x != y)


def _shift_cell(T: Rpp, i: int, new_word: Word) -> Rpp:
    cell_pos = _changed_position(reading_word(T), new_word)
    r, c = T.read_cells[cell_pos]
    old, new = T[r, c], new_word[cell_pos]
    entry = T.cell_map()
    entry[r, c] = new
    # unread copies sit directly above the read cell
    rr = r - 1
    while (rr, c) in T.shape and T[rr, c] == old:
        entry[rr, c] = new
        rr -= 1
    try:
        out = Rpp.from_cells(T.shape, entry, T.max_entry)
        if reading_word(out) == new_word and height(out) == height(T):
            return out
    except ShapeError:
        pass
    # the read cell of a neighbouring column moves; rebuild from (height, word)
    try:
        return rpp_from_height_word(T.shape, height(T), new_word, T.max_entry)
    except NotRealizable as exc:
        raise CrystalError(f"operator {i} on {T} leaves the height slice") from exc


def rpp_f(i: int, T: Rpp) -> Rpp | None:
    w = tensor_f(i, reading_word(T))
    return None if w is None else _shift_cell(T, i, w)


def rpp_e(i: int, T: Rpp) -> Rpp | None:
    w = tensor_e(i, reading_word(T))
    return None if w is None else _shift_cell(T, i, w)


def tableau_f(i: int, T: Ssyt) -> Ssyt | None:
    w = tensor_f(i, T.reading_word())
    return None if w is None else T.with_word(w)


def tableau_e(i: int, T: Ssyt) -> Ssyt | None:
    w = tensor_e(i, T.reading_word())
    return None if w is None else T.with_word(w)


class WordCrystal:
    """W_m tensored with itself; elements are tuples of letters in [m]."""

    kind = "word"

    def __init__(self, m: int):
        self.rank = m

    def e(self, i, x):
        return tensor_e(i, x)

    def f(self, i, x):
        return tensor_f(i, x)

    def weight(self, x):
        wt = [0] * self.rank
        for a in x:
            wt[a - 1] += 1
        return tuple(wt)

    def word(self, x):
        return tuple(x)

    def sort_key(self, x):
        return tuple(x)

    def label(self, x):
        return "".join(map(str, x)) or "()"

    def to_json(self, x):
        return list(x)

    def __eq__(self, other):
        return type(self) is type(other) and self.rank == other.rank

    def __hash__(self):
        return hash((self.kind, self.rank))


class TableauCrystal(WordCrystal):
    """Semistandard tableaux with entries in [n], acting through the reading word."""

    kind = "tableau"

    def e(self, i, x):
        return tableau_e(i, x)

    def f(self, i, x):
        return tableau_f(i, x)

    def weight(self, x):
        return x.content(self.rank)

    def word(self, x):
        return x.reading_word()

    def sort_key(self, x):
        return (x.shape, x.rows)

    def label(self, x):
        return str(x)

    def to_json(self, x):
        return x.to_json()


class RppCrystal(WordCrystal):
    """Reverse plane partitions with entries in [m], acting through the reading word."""

    kind = "rpp"

    def e(self, i, x):
        return rpp_e(i, x)

    def f(self, i, x):
        return rpp_f(i, x)

    def weight(self, x):
        return weight(x)

    def word(self, x):
        return reading_word(x)

    def sort_key(self, x):
        return x.sort_key()

    def label(self, x):
        return str(x)

    def to_json(self, x):
        return x.to_json()


@dataclass(frozen=True)
class CrystalSet:
    """A finite set of carriers with the operators of an ambient crystal.

    ``policy`` records the closure guarantee of the constructor: ``"full"``
    (union of ambient components), ``"e-closed"`` (Demazure-type) or
    ``"e-closed, f-partial"`` / ``"partial"`` for intersections.
    """

    elements: tuple
    ambient: WordCrystal
    policy: str = "full"

    def __post_init__(self):
        elems = sorted(set(self.elements), key=self.ambient.sort_key)
        object.__setattr__(self, "elements", tuple(elems))

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, x):
        return x in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.ambient.rank

    @property
    def indices(self) -> range:
        return range(1, self.rank)

    def e(self, i, x):
        """Restricted raising operator: None when the result leaves the set."""
        y = self.ambient.e(i, x)
        return y if y in self else None

    def f(self, i, x):
        y = self.ambient.f(i, x)
        return y if y in self else None

    def eps(self, i, x) -> int:
        k = 0
        while (x := self.e(i, x)) is not None:
            k += 1
        return k

    def phi(self, i, x) -> int:
        k = 0
        while (x := self.f(i, x)) is not None:
            k += 1
        return k

    def weight(self, x):
        return self.ambient.weight(x)

    def edges(self) -> list[tuple[object, int, object]]:
        out = []
        for x in self.elements:
            for i in self.indices:
                y = self.f(i, x)
                if y is not None:
                    out.append((x, i, y))
        return out

    def highest_elements(self) -> list:
        return [x for x in self.elements if all(self.e(i, x) is None for i in self.indices)]

    def boundary(self) -> list[tuple[object, int]]:
        """(x, i) with f_i(x) defined in the ambient crystal but outside the set."""
        return [(x, i) for x in self.elements for i in self.indices
                if self.ambient.f(i, x) is not None and self.f(i, x) is None]

    def subset(self, elements, policy: str | None = None) -> CrystalSet:
        return CrystalSet(tuple(elements), self.ambient, policy or self.policy)


def character(S: CrystalSet) -> Polynomial:
    if not S.elements:
        raise ValueError("an empty set is not a crystal")
    terms: dict[tuple[int, ...], int] = {}
    for x in S:
        wt = S.weight(x)
        terms[wt] = terms.get(wt, 0) + 1
    return Polynomial(S.rank, terms)


def axiom_violations(S: CrystalSet) -> list[str]:
    """Both crystal axioms, with string lengths measured inside S."""
    bad = []
    for x in S:
        wt = S.weight(x)
        for i in S.indices:
            y = S.e(i, x)
            if y is not None:
                if S.f(i, y) != x:
                    bad.append(f"e_{i}({S.ambient.label(x)}) = y but f_{i}(y) != x")
                wy = S.weight(y)
                diff = tuple(a - b for a, b in zip(wy, wt))
                expect = tuple(1 if k == i - 1 else -1 if k == i else 0 for k in range(S.rank))
                if diff != expect:
                    bad.append(f"weight jump of e_{i} at {S.ambient.label(x)} is {diff}")
            z = S.f(i, x)
            if z is not None and S.e(i, z) != x:
                bad.append(f"f_{i}({S.ambient.label(x)}) = z but e_{i}(z) != x")
            if S.phi(i, x) - S.eps(i, x) != wt[i - 1] - wt[i]:
                bad.append(f"phi_{i} - eps_{i} != <wt, alpha_{i}> at {S.ambient.label(x)}")
    return bad


def rpp_from_height_word(shape: SkewShape, h, w, m: int) -> Rpp:
    """The unique RPP with the given height and reading word."""
    h, w = tuple(h), tuple(w)
    if len(h) != len(w):
        raise ValueError("height and word lengths differ")
    if any(a < b for a, b in zip(h, h[1:])):
        raise ValueError(f"height {h} is not weakly decreasing")
    per_row: dict[int, list[int]] = {}
    for r, x in zip(h, w):
        per_row.setdefault(r, []).append(x)
    if any(r < 1 or r > shape.rows for r in per_row):
        raise NotRealizable(f"height {h} uses rows outside the shape")
    entry: dict[tuple[int, int], int] = {}
    found = []
    cells = [(r, c) for r in range(shape.rows, 0, -1) for c in shape.row_range(r)]

    def rec(k, used):
        if len(found) > 1:
            return
        if k == len(cells):
            if all(used.get(r, 0) == len(v) for r, v in per_row.items()):
                found.append(Rpp.from_cells(shape, entry, m))
            return
        r, c = cells[k]
        if c == shape.row_range(r).start and r + 1 <= shape.rows:
            # finishing row r+1: all its letters must be placed
            if used.get(r + 1, 0) != len(per_row.get(r + 1, ())):
                return
        below = entry.get((r + 1, c))
        left = entry.get((r, c - 1))
        options = []
        if below is not None:
            options.append((below, False))
        letters = per_row.get(r, ())
        if used.get(r, 0) < len(letters):
            x = letters[used.get(r, 0)]
            if x != below:
                options.append((x, True))
        for v, is_read in options:
            if not 1 <= v <= m or (left is not None and v < left) or (below is not None and v > below):
                continue
            entry[r, c] = v
            used[r] = used.get(r, 0) + is_read
            rec(k + 1, used)
            used[r] -= is_read
            del entry[r, c]

    rec(0, {})
    if not found:
        raise NotRealizable(f"no RPP of shape {shape} has height {h} and reading word {w}")
    if len(found) > 1:
        raise CrystalError(f"height {h} and word {w} do not determine an RPP of shape {shape}")
    return found[0]


def height_slice(shape: SkewShape, m: int, h) -> CrystalSet:
    h = tuple(h)
    return CrystalSet(tuple(T for T in enumerate_rpps_m(shape, m) if height(T) == h), RppCrystal(m))


def height_slices(shape: SkewShape, m: int, rpps=None) -> dict[Word, CrystalSet]:
    """Every non-empty slice of Re(shape, m) (or of the given RPPs) keyed by height."""
    groups: dict[Word, list[Rpp]] = {}
    for T in enumerate_rpps_m(shape, m) if rpps is None else rpps:
        groups.setdefault(height(T), []).append(T)
    return {h: CrystalSet(tuple(v), RppCrystal(m), "full" if rpps is None else "partial")
            for h, v in sorted(groups.items())}


def _f_string(ambient, i, seeds):
    out = set()
    for x in seeds:
        while x is not None:
            out.add(x)
            x = ambient.f(i, x)
    return out


@lru_cache(maxsize=4096)
def _demazure_elements(sigma: Permutation, lam: tuple[int, ...], word: tuple[int, ...]) -> frozenset:
    ambient = TableauCrystal(sigma.n)
    current = {highest_weight_tableau(lam)}
    for i in reversed(word):
        current = _f_string(ambient, i, current)
    return frozenset(current)


def demazure_generate(sigma: Permutation, lam, word=None) -> CrystalSet:
    """B_sigma(lam): apply f-strings along a reduced word of sigma to T_lam,
    innermost (rightmost) letter first."""
    lam = check_partition(lam)
    n = sigma.n
    if len(lam) > n and any(lam[n:]):
        raise ShapeError(f"{lam} has more than {n} parts")
    lam = (lam + (0,) * n)[:n]
    word = sigma.reduced_word if word is None else tuple(word)
    if Permutation.from_reduced_word(word, n) != sigma or len(word) != sigma.length:
        raise ValueError(f"{word} is not a reduced word of {sigma}")
    return CrystalSet(tuple(_demazure_elements(sigma, lam, word)), TableauCrystal(n), "e-closed")


@dataclass
class DemazureMatch:
    sigma: Permutation
    nu: tuple[int, ...]
    mapping: dict = field(repr=False)

    @property
    def lowest_weight(self) -> tuple[int, ...]:
        """sigma . nu, the composition indexing the matched key polynomial."""
        return self.sigma.act(self.nu)


def anchored_isomorphism(S: CrystalSet, u, D: CrystalSet, v) -> dict | None:
    """Walk S from u and D from v in lockstep; return the induced bijection
    if it is a weight-preserving isomorphism of the restricted crystals."""
    if len(S) != len(D) or S.rank != D.rank:
        return None
    mapping = {u: v}
    used = {v}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        y = mapping[x]
        if S.weight(x) != D.weight(y):
            return None
        for i in S.indices:
            for x2, y2 in ((S.f(i, x), D.f(i, y)), (S.e(i, x), D.e(i, y))):
                if (x2 is None) != (y2 is None):
                    return None
                if x2 is None:
                    continue
                if x2 in mapping:
                    if mapping[x2] != y2:
                        return None
                elif y2 in used:
                    return None
                else:
                    mapping[x2] = y2
                    used.add(y2)
                    queue.append(x2)
    return mapping if len(mapping) == len(S) else None


def demazure_match(S: CrystalSet) -> DemazureMatch | None:
    """Minimal-length sigma with B_sigma(nu) isomorphic to S, nu the top weight."""
    tops = S.highest_elements()
    if len(tops) != 1:
        raise MalformedCrystal(f"expected one highest element, found {len(tops)}")
    u = tops[0]
    nu = S.weight(u)
    if any(a < b for a, b in zip(nu, nu[1:])):
        return None
    for sigma in permutations_by_length(S.rank):
        D = demazure_generate(sigma, nu)
        if len(D) != len(S):
            continue
        mapping = anchored_isomorphism(S, u, D, highest_weight_tableau(nu))
        if mapping is not None:
            return DemazureMatch(sigma, nu, mapping)
    return None


def tensor_flag_crystal(flag, rho) -> CrystalSet:
    """B_{flag_n}^{rho_n} (x) ... (x) B_{flag_1}^{rho_1} inside W_n tensored sum(rho) times."""
    flag = check_flag(flag)
    n = len(flag)
    rho = check_composition(rho, n)
    bounds = [flag[k] for k in range(n - 1, -1, -1) for _ in range(rho[k])]
    words = product(*(range(1, b + 1) for b in bounds))
    return CrystalSet(tuple(words), WordCrystal(n), "e-closed, f-partial")


def ambient_highest(ambient, x):
    """Follow raising operators to the highest element of x's ambient component."""
    while True:
        for i in range(1, ambient.rank):
            y = ambient.e(i, x)
            if y is not None:
                x = y
                break
        else:
            return x


def ambient_components(S: CrystalSet) -> list[CrystalSet]:
    groups: dict = {}
    for x in S:
        groups.setdefault(ambient_highest(S.ambient, x), []).append(x)
    pieces = [S.subset(v) for v in groups.values()]
    return sorted(pieces, key=lambda P: S.ambient.sort_key(P.elements[0]))


@dataclass
class PieceResult:
    size: int
    sigma: Permutation | None
    nu: tuple[int, ...] | None
    ok: bool
    witness: str | None = None

    def to_json(self):
        return {"size": self.size, "sigma": list(self.sigma.oneline) if self.sigma else None,
                "nu": list(self.nu) if self.nu is not None else None, "ok": self.ok,
                "witness": self.witness}


@dataclass
class UnionReport:
    pieces: list[PieceResult]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pieces)

    @property
    def matches(self) -> list[tuple[Permutation, tuple[int, ...]]]:
        return [(p.sigma, p.nu) for p in self.pieces if p.ok]

    def to_json(self):
        return {"ok": self.ok, "pieces": [p.to_json() for p in self.pieces]}


def verify_demazure_union(S: CrystalSet) -> UnionReport:
    """Check that each ambient-component piece of S is a Demazure crystal."""
    results = []
    for piece in ambient_components(S):
        label = S.ambient.label(piece.elements[0])
        try:
            m = demazure_match(piece)
        except MalformedCrystal as exc:
            results.append(PieceResult(len(piece), None, None, False, f"{label}: {exc}"))
            continue
        if m is None:
            results.append(PieceResult(len(piece), None, None, False, f"{label}: no Demazure match"))
        else:
            results.append(PieceResult(len(piece), m.sigma, m.nu, True))
    return UnionReport(results)
