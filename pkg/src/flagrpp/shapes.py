"""Partitions, skew shapes, flags, reverse plane partitions and tableaux.

Cells are 1-indexed ``(row, column)`` pairs. Two weight notions coexist:
``Rpp.weight`` counts *columns* containing each value, ``Ssyt.content``
counts *cells*. They agree on fillings with strictly increasing columns.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .perms import Permutation
from .polynomial import Polynomial

Word = tuple[int, ...]


class ShapeError(ValueError):
    """Malformed partition, skew shape, flag or filling."""


def check_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"{parts} is not weakly decreasing")
    return parts


def check_flag(bounds) -> tuple[int, ...]:
    bounds = tuple(int(b) for b in bounds)
    if not bounds:
        raise ShapeError("empty flag")
    if any(b < 1 for b in bounds):
        raise ShapeError(f"flag entries must be positive: {bounds}")
    if any(a > b for a, b in zip(bounds, bounds[1:])):
        raise ShapeError(f"flag {bounds} is not weakly increasing")
    if bounds[-1] != len(bounds):
        raise ShapeError(f"flag {bounds} must end in its length {len(bounds)}")
    return bounds


def check_composition(alpha, n: int | None = None) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ShapeError(f"negative entry in composition {alpha}")
    if n is not None and len(alpha) != n:
        raise ShapeError(f"composition {alpha} must have length {n}")
    return alpha


def sort_decreasing(alpha) -> tuple[tuple[int, ...], Permutation]:
    """Return ``(alpha_dagger, w)`` with ``w.alpha_dagger == alpha`` and w of minimal length."""
    alpha = check_composition(alpha)
    order = sorted(range(len(alpha)), key=lambda j: (-alpha[j], j))
    return tuple(alpha[j] for j in order), Permutation(tuple(j + 1 for j in order))


def partitions_in_box(max_size: int, max_parts: int) -> list[tuple[int, ...]]:
    """All partitions with at most ``max_parts`` parts and size at most ``max_size``,
    padded with zeros to length ``max_parts``."""
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) == max_parts:
            out.append(tuple(prefix))
            return
        for p in range(min(cap, remaining), -1, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], max_size, max_size)
    return sorted(out, key=lambda p: (sum(p), tuple(-x for x in p)))


def subpartitions(lam) -> list[tuple[int, ...]]:
    lam = tuple(lam)
    out = []

    def rec(prefix, i):
        if i == len(lam):
            out.append(tuple(prefix))
            return
        cap = lam[i] if i == 0 else min(lam[i], prefix[-1])
        for p in range(cap + 1):
            rec(prefix + [p], i + 1)

    rec([], 0)
    return out


def flags(n: int) -> list[tuple[int, ...]]:
    """Every flag of length n, in lexicographic order."""
    out = []

    def rec(prefix):
        if len(prefix) == n - 1:
            out.append(tuple(prefix) + (n,))
            return
        lo = prefix[-1] if prefix else 1
        for b in range(lo, n + 1):
            rec(prefix + [b])

    rec([])
    return out


@dataclass(frozen=True)
class SkewShape:
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = list(check_partition(self.outer))
        inner = list(check_partition(self.inner))
        while outer and outer[-1] == 0:
            outer.pop()
        if len(inner) > len(outer):
            if any(inner[len(outer):]):
                raise ShapeError(f"inner {tuple(inner)} is not contained in outer {tuple(outer)}")
            inner = inner[: len(outer)]
        inner += [0] * (len(outer) - len(inner))
        if any(m > l for m, l in zip(inner, outer)):
            raise ShapeError(f"inner {tuple(inner)} is not contained in outer {tuple(outer)}")
        object.__setattr__(self, "outer", tuple(outer))
        object.__setattr__(self, "inner", tuple(inner))

    @property
    def rows(self) -> int:
        return len(self.outer)

    def row_range(self, r: int) -> range:
        """Columns occupied in row r (1-indexed); empty outside the shape."""
        if not 1 <= r <= self.rows:
            return range(0)
        return range(self.inner[r - 1] + 1, self.outer[r - 1] + 1)

    def __contains__(self, cell) -> bool:
        r, c = cell
        return c in self.row_range(r)

    @cached_property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple((r, c) for r in range(1, self.rows + 1) for c in self.row_range(r))

    @property
    def size(self) -> int:
        return len(self.cells)

    def difference(self) -> tuple[int, ...]:
        """delta = outer - inner, row by row."""
        return tuple(l - m for l, m in zip(self.outer, self.inner))

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data) -> SkewShape:
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())))

    def __str__(self):
        inner = tuple(m for m in self.inner if m)
        return f"{self.outer}/{inner}" if inner else str(self.outer)


@dataclass(frozen=True)
class Rpp:
    """A reverse plane partition with entries in [max_entry].

    ``rows[r-1]`` lists the entries of row r left to right (only cells of the shape).
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]
    max_entry: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        rows += ((),) * (self.shape.rows - len(rows))
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.shape.rows:
            raise ShapeError("row count does not match the shape")
        for r, row in enumerate(rows, 1):
            if len(row) != len(self.shape.row_range(r)):
                raise ShapeError(f"row {r} has {len(row)} entries, shape needs {len(self.shape.row_range(r))}")
            if any(not 1 <= v <= self.max_entry for v in row):
                raise ShapeError(f"row {r} entries must lie in [1, {self.max_entry}]")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeError(f"row {r} is not weakly increasing")
        for (r, c) in self.shape.cells:
            if (r + 1, c) in self.shape and self[r, c] > self[r + 1, c]:
                raise ShapeError(f"column {c} decreases at row {r}")

    @classmethod
    def from_cells(cls, shape: SkewShape, entry: dict, max_entry: int) -> Rpp:
        rows = tuple(tuple(entry[r, c] for c in shape.row_range(r)) for r in range(1, shape.rows + 1))
        return cls(shape, rows, max_entry)

    def __getitem__(self, cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1 - self.shape.inner[r - 1]]

    def cell_map(self) -> dict[tuple[int, int], int]:
        return {cell: self[cell] for cell in self.shape.cells}

    def sort_key(self):
        return tuple(v for row in self.rows for v in row)

    @cached_property
    def read_cells(self) -> tuple[tuple[int, int], ...]:
        """Cells contributing to the reading word, in reading order."""
        out = []
        for r in range(self.shape.rows, 0, -1):
            for c in self.shape.row_range(r):
                if (r + 1, c) not in self.shape or self[r + 1, c] != self[r, c]:
                    out.append((r, c))
        return tuple(out)

    def is_strict(self) -> bool:
        return all(self[r, c] < self[r + 1, c] for (r, c) in self.shape.cells if (r + 1, c) in self.shape)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [list(row) for row in self.rows],
                "max_entry": self.max_entry}

    @classmethod
    def from_json(cls, data) -> Rpp:
        return cls(SkewShape.from_json(data["shape"]), tuple(tuple(r) for r in data["rows"]),
                   int(data["max_entry"]))

    def __str__(self):
        return "/".join("".join(map(str, row)) or "-" for row in self.rows)


def weight(T: Rpp) -> tuple[int, ...]:
    """Entry i counts the columns of T that contain i."""
    wt = [0] * T.max_entry
    # each column holds value v in one contiguous run, and the bottom of the run is read
    for cell in T.read_cells:
        wt[T[cell] - 1] += 1
    return tuple(wt)


def reading_word(T: Rpp) -> Word:
    return tuple(T[cell] for cell in T.read_cells)


def height(T: Rpp) -> Word:
    return tuple(r for r, _ in T.read_cells)


def enumerate_rpps(shape: SkewShape, flag) -> tuple[Rpp, ...]:
    """Every RPP of ``shape`` whose row-i entries are at most ``flag[i-1]``,
    in row-major lexicographic order."""
    flag = check_flag(flag)
    if shape.rows > len(flag):
        raise ShapeError(f"shape {shape} has more rows than the flag {flag}")
    return _enumerate(shape, flag, len(flag))


def enumerate_rpps_m(shape: SkewShape, m: int) -> tuple[Rpp, ...]:
    return _enumerate(shape, (m,) * max(shape.rows, 1), m)


def _enumerate(shape, bounds, m):
    cells = shape.cells
    entry: dict[tuple[int, int], int] = {}
    out = []

    def rec(k):
        if k == len(cells):
            out.append(Rpp.from_cells(shape, entry, m))
            return
        r, c = cells[k]
        lo = max(entry.get((r, c - 1), 1), entry.get((r - 1, c), 1))
        for v in range(lo, bounds[r - 1] + 1):
            entry[r, c] = v
            rec(k + 1)
        entry.pop((r, c), None)

    rec(0)
    return tuple(out)


@dataclass(frozen=True)
class Ssyt:
    """A semistandard tableau of straight shape, stored by rows."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        rows = tuple(row for row in rows if row)
        object.__setattr__(self, "rows", rows)
        check_partition(len(row) for row in rows)
        for row in rows:
            if any(v < 1 for v in row):
                raise ShapeError("tableau entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeError(f"row {row} is not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ShapeError("columns must strictly increase")

    @classmethod
    def from_columns(cls, columns) -> Ssyt:
        height_ = max((len(col) for col in columns), default=0)
        return cls(tuple(tuple(col[r] for col in columns if len(col) > r) for r in range(height_)))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __getitem__(self, cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    @property
    def cells(self):
        return [(r, c) for r, row in enumerate(self.rows, 1) for c in range(1, len(row) + 1)]

    def columns(self) -> list[tuple[int, ...]]:
        ncols = len(self.rows[0]) if self.rows else 0
        return [tuple(row[c] for row in self.rows if len(row) > c) for c in range(ncols)]

    def content(self, n: int) -> tuple[int, ...]:
        """Cell-multiplicity weight in Z^n."""
        wt = [0] * n
        for row in self.rows:
            for v in row:
                if v > n:
                    raise ShapeError(f"entry {v} exceeds {n}")
                wt[v - 1] += 1
        return tuple(wt)

    def reading_word(self) -> Word:
        """Rows bottom to top, each left to right."""
        return tuple(v for row in reversed(self.rows) for v in row)

    def with_word(self, word) -> Ssyt:
        """Refill this shape from a bottom-to-top row reading word."""
        rows, pos = [], 0
        for length in reversed(self.shape):
            rows.append(tuple(word[pos:pos + length]))
            pos += length
        return Ssyt(tuple(reversed(rows)))

    def is_key(self) -> bool:
        cols = [set(c) for c in self.columns()]
        return all(b <= a for a, b in zip(cols, cols[1:]))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data) -> Ssyt:
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if "shape" in data and list(t.shape) != [s for s in data["shape"] if s]:
            raise ShapeError("rows do not match the declared shape")
        return t

    def __str__(self):
        return "/".join("".join(map(str, row)) for row in self.rows) or "()"


def key_tableau(alpha) -> Ssyt:
    """The unique tableau with nested columns, shape sort(alpha) and content alpha."""
    alpha = check_composition(alpha)
    ncols = max(alpha, default=0)
    return Ssyt.from_columns([tuple(i for i, a in enumerate(alpha, 1) if a > j) for j in range(ncols)])


def highest_weight_tableau(lam) -> Ssyt:
    lam = check_partition(lam)
    return Ssyt(tuple((i,) * p for i, p in enumerate(lam, 1)))


def flagged_schur(shape: SkewShape, flag) -> Polynomial:
    """Sum of x^content over flagged skew SSYT (strict-column flagged RPPs)."""
    flag = check_flag(flag)
    poly = Polynomial.zero(len(flag))
    terms = {}
    for T in enumerate_rpps(shape, flag):
        if T.is_strict():
            wt = weight(T)
            terms[wt] = terms.get(wt, 0) + 1
    return poly + Polynomial(len(flag), terms)
