"""Two-rowed arrays, the Burge correspondence, and Knuth equivalence.

A biword is stored in display order: ``top[0]`` is the leftmost column
(i_t in the right-to-left indexing), ``top[-1]`` the rightmost (i_1).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .shapes import Ssyt, Word, check_flag


class BiwordError(ValueError):
    """A two-rowed array violating the ordering rules, or letters out of range."""


def check_word(letters) -> Word:
    letters = tuple(int(x) for x in letters)
    if any(x < 1 for x in letters):
        raise ValueError(f"letters must be positive: {letters}")
    return letters


@dataclass(frozen=True)
class Biword:
    top: Word
    bottom: Word

    def __post_init__(self):
        top, bottom = check_word(self.top), check_word(self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if len(top) != len(bottom):
            raise BiwordError("rows of a biword must have equal length")
        for k in range(len(top) - 1):
            if top[k] < top[k + 1]:
                raise BiwordError(f"top row must weakly decrease: {top}")
            if top[k] == top[k + 1] and bottom[k] > bottom[k + 1]:
                raise BiwordError(f"under equal top letters the bottom row must weakly increase: column {k + 1}")

    def __len__(self):
        return len(self.top)

    def columns(self):
        """Columns (i_k, j_k) in processing order k = 1..t, i.e. right to left."""
        return list(zip(reversed(self.top), reversed(self.bottom)))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, data) -> Biword:
        return cls(tuple(data["top"]), tuple(data["bottom"]))

    def __str__(self):
        return f"[{''.join(map(str, self.top))}; {''.join(map(str, self.bottom))}]"


def check_matrix(A) -> tuple[tuple[int, ...], ...]:
    A = tuple(tuple(int(a) for a in row) for row in A)
    if not A or not A[0] or any(len(row) != len(A[0]) for row in A):
        raise ValueError("matrix must be a non-empty rectangular array")
    if any(a < 0 for row in A for a in row):
        raise ValueError("matrix entries must be non-negative")
    return A


def matrix_to_biword(A) -> Biword:
    A = check_matrix(A)
    top, bottom = [], []
    for i in range(len(A), 0, -1):
        for j, a in enumerate(A[i - 1], 1):
            top += [i] * a
            bottom += [j] * a
    return Biword(tuple(top), tuple(bottom))


def biword_to_matrix(w: Biword, m: int, n: int) -> tuple[tuple[int, ...], ...]:
    A = [[0] * n for _ in range(m)]
    for i, j in zip(w.top, w.bottom):
        if not (1 <= i <= m and 1 <= j <= n):
            raise BiwordError(f"column ({i}, {j}) lies outside [{m}] x [{n}]")
        A[i - 1][j - 1] += 1
    return tuple(map(tuple, A))


def transpose(A):
    A = check_matrix(A)
    return tuple(zip(*A))


def is_flag_compatible(top, bottom, flag) -> bool:
    """True iff ``top[k] <= flag[bottom[k]]`` for every position k."""
    flag = check_flag(flag)
    if len(top) != len(bottom):
        raise ValueError("words must have equal length")
    return all(j <= len(flag) and i <= flag[j - 1] for i, j in zip(top, bottom))


def _columns(P: Ssyt) -> list[list[int]]:
    return [list(c) for c in P.columns()]


def _column_insert(cols: list[list[int]], x: int) -> tuple[int, int]:
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return 1, c + 1
        col = cols[c]
        for r, y in enumerate(col):
            if y >= x:
                col[r], x = x, y
                break
        else:
            col.append(x)
            return len(col), c + 1
        c += 1


def column_insert(P: Ssyt, x: int) -> tuple[Ssyt, tuple[int, int]]:
    """Column-insert x into P; returns the new tableau and the new cell."""
    cols = _columns(P)
    cell = _column_insert(cols, x)
    return Ssyt.from_columns(cols), cell


def burge(w: Biword) -> tuple[Ssyt, Ssyt]:
    cols: list[list[int]] = []
    recording: dict[tuple[int, int], int] = {}
    for i, j in w.columns():
        recording[_column_insert(cols, j)] = i
    P = Ssyt.from_columns(cols)
    Q = Ssyt(tuple(tuple(recording[r, c] for c in range(1, len(row) + 1))
                   for r, row in enumerate(P.rows, 1)))
    return P, Q


def _reverse_bump(cols: list[list[int]], r: int, c: int) -> int:
    col = cols[c - 1]
    y = col.pop(r - 1)
    if not col:
        cols.pop(c - 1)
    for k in range(c - 2, -1, -1):
        col = cols[k]
        # the largest entry <= y is the one y displaced
        pos = max(idx for idx, v in enumerate(col) if v <= y)
        col[pos], y = y, col[pos]
    return y


def burge_inverse(P: Ssyt, Q: Ssyt) -> Biword:
    if P.shape != Q.shape:
        raise BiwordError(f"shapes differ: {P.shape} vs {Q.shape}")
    cols = _columns(P)
    rec = {cell: Q[cell] for cell in Q.cells}
    top, bottom = [], []
    while rec:
        i = max(rec.values())
        # equal recorded values were created left to right
        r, c = max((cell for cell, v in rec.items() if v == i), key=lambda rc: rc[1])
        del rec[r, c]
        top.append(i)
        bottom.append(_reverse_bump(cols, r, c))
    return Biword(tuple(top), tuple(bottom))


def insertion_tableau(word) -> Ssyt:
    cols: list[list[int]] = []
    for x in reversed(check_word(word)):
        _column_insert(cols, x)
    return Ssyt.from_columns(cols)


def knuth_moves(w: Word):
    """Words one elementary Knuth move away from w."""
    for p in range(len(w) - 2):
        a, b, c = w[p:p + 3]
        swaps = []
        # xzy <-> zxy for x <= y < z
        if a <= c < b:
            swaps.append((b, a, c))
        if b <= c < a:
            swaps.append((b, a, c))
        # yxz <-> yzx for x < y <= z
        if b < a <= c:
            swaps.append((a, c, b))
        if c < a <= b:
            swaps.append((a, c, b))
        for s in swaps:
            yield w[:p] + s + w[p + 3:]


BFS_LIMIT = 10


def knuth_class(w) -> frozenset[Word]:
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        for v in knuth_moves(queue.popleft()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def knuth_equivalent(u, v) -> bool:
    """Orbit search under elementary Knuth moves.

    Words longer than ``BFS_LIMIT`` fall back to comparing insertion tableaux,
    which is no longer independent of this module's insertion code.
    """
    u, v = tuple(u), tuple(v)
    if sorted(u) != sorted(v):
        return False
    if len(u) > BFS_LIMIT:
        return insertion_tableau(u) == insertion_tableau(v)
    return v in knuth_class(u)
