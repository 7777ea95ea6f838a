"""Permutations in one-line notation, acting on n-tuples on the left."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _permutations


@dataclass(frozen=True, order=True)
class Permutation:
    oneline: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "oneline", tuple(self.oneline))
        if sorted(self.oneline) != list(range(1, len(self.oneline) + 1)):
            raise ValueError(f"not a permutation: {self.oneline}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_reduced_word(cls, word, n: int) -> Permutation:
        """The product s_{i_1} s_{i_2} ... s_{i_p} for ``word = (i_1, ..., i_p)``."""
        line = list(range(1, n + 1))
        for i in word:
            if not 1 <= i < n:
                raise ValueError(f"s_{i} is not in S_{n}")
            line[i - 1], line[i] = line[i], line[i - 1]
        return cls(tuple(line))

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, k: int) -> int:
        return self.oneline[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.oneline, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        line = self.oneline
        return sum(1 for a in range(len(line)) for b in range(a + 1, len(line)) if line[a] > line[b])

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically-first-descent reduced word (i_1, ..., i_p)."""
        line = list(self.oneline)
        rev = []
        while True:
            for i in range(len(line) - 1):
                if line[i] > line[i + 1]:
                    line[i], line[i + 1] = line[i + 1], line[i]
                    rev.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(rev))

    def act(self, alpha) -> tuple[int, ...]:
        """Left action on positions: ``(sigma . alpha)[sigma(k)] = alpha[k]``."""
        if len(alpha) != self.n:
            raise ValueError("length mismatch")
        out = [0] * self.n
        for k, a in enumerate(alpha):
            out[self.oneline[k] - 1] = a
        return tuple(out)

    def __str__(self):
        return "".join(map(str, self.oneline)) if self.n < 10 else str(self.oneline)


@lru_cache(maxsize=None)
def permutations_by_length(n: int) -> tuple[Permutation, ...]:
    """All of S_n, sorted by length and then by one-line notation."""
    perms = [Permutation(p) for p in _permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda p: (p.length, p.oneline)))


def reduced_words(perm: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word of ``perm``."""
    if perm.length == 0:
        return [()]
    words = []
    line = perm.oneline
    for i in range(1, perm.n):
        if line[i - 1] > line[i]:
            shorter = list(line)
            shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
            words.extend(w + (i,) for w in reduced_words(Permutation(tuple(shorter))))
    return sorted(words)
