"""Seeded random coverings for fuzzing."""

from __future__ import annotations

import random
import string

from .covering import Covering, Universe, build_covering


def element_names(n: int) -> list[str]:
    if n <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:n])
    return [f"x{i}" for i in range(1, n + 1)]


def random_blocks(n: int, m: int, rng: random.Random) -> list[list[int]]:
    """``m`` nonempty index blocks whose union is ``range(n)``.

    Each block is a uniformly sized random sample; every element left
    uncovered afterwards is appended to a uniformly chosen block, so exactly
    ``m`` blocks come back (duplicates possible).
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    blocks = [set(rng.sample(range(n), rng.randint(1, n))) for _ in range(m)]
    covered = set().union(*blocks)
    for i in range(n):
        if i not in covered:
            blocks[rng.randrange(m)].add(i)
    return [sorted(b) for b in blocks]


def random_covering_text(n: int, m: int, seed: int = 0) -> str:
    names = element_names(n)
    blocks = random_blocks(n, m, random.Random(seed))
    lines = [" ".join(names)] + [" ".join(names[i] for i in b) for b in blocks]
    return "\n".join(lines) + "\n"


def random_covering(n: int, m: int, rng: random.Random) -> Covering:
    names = element_names(n)
    universe = Universe(names)
    return build_covering(universe, [[names[i] for i in b] for b in random_blocks(n, m, rng)])
