"""Independent brute-force reference implementations for the tests.

Nothing here imports from recdig's counting code: these are the very dumb,
very trusted routes used to freeze expected values.
"""

from itertools import permutations, product


def set_partitions(n):
    """All set partitions of [n] as lists of sorted blocks (tuples)."""
    if n == 0:
        yield []
        return
    for rest in set_partitions(n - 1):
        yield rest + [(n,)]
        for b in range(len(rest)):
            yield rest[:b] + [rest[b] + (n,)] + rest[b + 1 :]


def separated_prefix(blocks):
    """Largest r such that 1, ..., r all lie in pairwise distinct blocks."""
    owner = {}
    for b, block in enumerate(blocks):
        for v in block:
            owner[v] = b
    n = len(owner)
    used = set()
    for v in range(1, n + 1):
        if owner[v] in used:
            return v - 1
        used.add(owner[v])
    return n


def sdiff_histogram(n):
    """dict[(m, r)] -> number of partitions of [n] with m blocks and
    maximal separated prefix r."""
    hist = {}
    for blocks in set_partitions(n):
        key = (len(blocks), separated_prefix(blocks))
        hist[key] = hist.get(key, 0) + 1
    return hist


def r_stirling_brute(n, m, r):
    total = 0
    for blocks in set_partitions(n):
        if len(blocks) != m:
            continue
        owners = set()
        ok = True
        for v in range(1, r + 1):
            b = next(i for i, blk in enumerate(blocks) if v in blk)
            if b in owners:
                ok = False
                break
            owners.add(b)
        total += ok
    return total


def ordered_set_partition_count(n):
    from math import factorial

    return sum(
        factorial(len(blocks)) for blocks in set_partitions(n)
    )


def derangement_count(n):
    return sum(
        1
        for p in permutations(range(1, n + 1))
        if all(p[i - 1] != i for i in range(1, n + 1))
    )


def cayley_by_rejection(n):
    """All Cayley permutations of [n], the slow way; returns a set."""
    out = set()
    for f in product(range(1, n + 1), repeat=n):
        image = set(f)
        if image == set(range(1, len(image) + 1)):
            out.add(f)
    if n == 0:
        out.add(())
    return out
