"""(n, t)-universal families of binary vectors and coloring streams built on them.

A family is universal when, restricted to any ``t`` positions, its vectors
show all ``2**t`` bit patterns. Families are built greedily: while some
(position set, pattern) pair is missing, draw a few random vectors with that
pattern planted and keep the one covering the most missing pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterator, Union

from .errors import BudgetExceededError, InputError, ParseError

CHECK_GUARD = 2_000_000
CANDIDATES = 16


@dataclass(frozen=True)
class UniversalFamily:
    n: int
    t: int
    vectors: tuple  # int bitmasks, bit i is position i

    def __len__(self):
        return len(self.vectors)

    def bitstrings(self) -> list[str]:
        return ["".join("1" if v >> i & 1 else "0" for i in range(self.n)) for v in self.vectors]

    @classmethod
    def from_bitstrings(cls, n: int, t: int, rows) -> "UniversalFamily":
        vecs = []
        for row in rows:
            if len(row) != n or set(row) - {"0", "1"}:
                raise InputError(f"bad vector {row!r} for length {n}")
            vecs.append(sum(1 << i for i, ch in enumerate(row) if ch == "1"))
        return cls(n, t, tuple(vecs))


def _check_nt(n: int, t: int):
    if n < 0 or t < 0:
        raise InputError("n and t must be non-negative")
    if t > n:
        raise InputError(f"t={t} exceeds n={n}")


def _pattern(vec: int, positions: tuple) -> int:
    out = 0
    for j, i in enumerate(positions):
        out |= (vec >> i & 1) << j
    return out


def is_universal(f: UniversalFamily, guard: int = CHECK_GUARD) -> bool:
    """Exact check over every ``t``-subset of positions."""
    _check_nt(f.n, f.t)
    work = comb(f.n, f.t) * (1 << f.t)
    if work > guard:
        raise BudgetExceededError(f"unverifiable at this size: C({f.n},{f.t})*2^{f.t} = {work} > {guard}")
    full = 1 << f.t
    if len(f.vectors) < full:
        return False
    for pos in combinations(range(f.n), f.t):
        if len({_pattern(v, pos) for v in f.vectors}) != full:
            return False
    return True


def build_universal_set(n: int, t: int, seed: int = 0, guard: int = CHECK_GUARD) -> UniversalFamily:
    """Greedy (n, t)-universal family; raises BudgetExceededError when too large."""
    _check_nt(n, t)
    return _build(n, t, seed, guard)


@lru_cache(maxsize=64)
def _build(n: int, t: int, seed: int, guard: int) -> UniversalFamily:
    if t == n:
        return UniversalFamily(n, t, tuple(range(1 << n)))
    work = comb(n, t) * (1 << t)
    if work > guard:
        raise BudgetExceededError(f"universal family for n={n}, t={t} exceeds the size guard ({work} > {guard})")
    rng = random.Random(seed)
    subsets = list(combinations(range(n), t))
    missing = [set(range(1 << t)) for _ in subsets]
    remaining = len(subsets) << t
    vectors = []

    def gain(vec):
        return sum(1 for si, pos in enumerate(subsets) if _pattern(vec, pos) in missing[si])

    cursor = 0
    while remaining:
        while not missing[cursor]:
            cursor += 1
        pos = subsets[cursor]
        pat = min(missing[cursor])
        base_mask = sum(1 << i for i in pos)
        planted = sum(((pat >> j) & 1) << i for j, i in enumerate(pos))
        best, best_gain = None, -1
        for _ in range(CANDIDATES):
            vec = (rng.getrandbits(n) & ~base_mask) | planted if n else 0
            gvec = gain(vec)
            if gvec > best_gain:
                best, best_gain = vec, gvec
        vectors.append(best)
        for si, p in enumerate(subsets):
            pt = _pattern(best, p)
            if pt in missing[si]:
                missing[si].discard(pt)
                remaining -= 1
    return UniversalFamily(n, t, tuple(vectors))


def derandomized_colorings(n: int, t: int, colors: int = 2, seed: int = 0) -> Iterator[list[int]]:
    """Colorings such that every assignment on any ``t`` vertices occurs.

    Two colors read one universal family directly. Three colors take the
    product of the family with itself and read a bit pair ``(x, y)`` as
    red for 00, green for 01 and yellow when ``x`` is 1.
    """
    if colors not in (2, 3):
        raise InputError("colors must be 2 or 3")
    t = min(t, n)
    fam = build_universal_set(n, t, seed)
    if colors == 2:
        for vec in fam.vectors:
            yield [vec >> i & 1 for i in range(n)]
        return
    for x in fam.vectors:
        for y in fam.vectors:
            yield [2 if x >> i & 1 else (y >> i & 1) for i in range(n)]


def write_family(f: UniversalFamily, path: Union[str, Path]) -> None:
    lines = [f"u {f.n} {f.t} {len(f)}"] + f.bitstrings()
    Path(path).write_text("\n".join(lines) + "\n")


def read_family(path: Union[str, Path]) -> UniversalFamily:
    rows = Path(path).read_text().splitlines()
    if not rows:
        raise ParseError("empty family file", 1)
    head = rows[0].split()
    if len(head) != 4 or head[0] != "u":
        raise ParseError("expected header 'u <n> <t> <count>'", 1)
    try:
        n, t, count = (int(x) for x in head[1:])
    except ValueError:
        raise ParseError("header fields must be integers", 1, 3) from None
    body = [r.strip() for r in rows[1:] if r.strip()]
    if len(body) != count:
        raise ParseError(f"header announces {count} vectors, found {len(body)}", 1)
    for lineno, row in enumerate(body, start=2):
        if len(row) != n or set(row) - {"0", "1"}:
            raise ParseError(f"bad vector {row!r}", lineno)
    return UniversalFamily.from_bitstrings(n, t, body)
