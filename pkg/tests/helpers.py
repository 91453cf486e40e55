"""Independent reference code shared by the tests."""

import random


def naive_bool_product(a, b):
    n, p, q = len(a), len(b), len(b[0]) if b else 0
    return [[int(any(a[i][k] and b[k][j] for k in range(p))) for j in range(q)] for i in range(n)]


def naive_impl_product(a, b):
    n, p, q = len(a), len(b), len(b[0]) if b else 0
    return [[int(all(a[i][k] <= b[k][j] for k in range(p))) for j in range(q)] for i in range(n)]


def random_bits(rng, rows, cols, density=0.5):
    return [[int(rng.random() < density) for _ in range(cols)] for _ in range(rows)]


def random_raw_covering(rng: random.Random, n: int, m: int):
    """Element names and m blocks (index lists) covering range(n).

    Membership is an independent coin flip per (element, block); empty
    blocks get one random element and uncovered elements join a random block.
    """
    names = [f"e{i}" for i in range(n)]
    blocks = [[i for i in range(n) if rng.random() < 0.5] for _ in range(m)]
    for b in blocks:
        if not b:
            b.append(rng.randrange(n))
    covered = {i for b in blocks for i in b}
    for i in range(n):
        if i not in covered:
            blocks[rng.randrange(m)].append(i)
    return names, [[names[i] for i in sorted(set(b))] for b in blocks]


def brute_neighborhoods(names, blocks):
    """x -> intersection of the blocks containing x, as Python sets."""
    out = {}
    for x in names:
        acc = set(names)
        for b in blocks:
            if x in b:
                acc &= set(b)
        out[x] = acc
    return out
