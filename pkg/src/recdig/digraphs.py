"""Counting formulas for R-recurrent functional digraphs of two sorts.

A two-sort functional digraph with i internal nodes (sort X) and j leaves
(sort Y) decomposes into rooted trees whose roots carry a structure of some
class R (the recurrent part).  Merging the sorts one way counts
endofunctions, the other way Cayley permutations; choosing R tunes the
shape of the recurrent part (permutations, single root, sets, cycles,
fixed-point-free permutations, ...).

Three independent routes to the same numbers live here:

* a closed formula over Stirling difference numbers (digraph_count),
* the two-sort coefficient recursion (digraph_table),
* composition of R with the rooted-tree table (via recdig.tables).

Every division in the closed formulas is exact; each one is asserted.
"""

from __future__ import annotations

from math import comb, factorial, perm

from recdig.series import CoeffSeq, ShapeError, atom
from recdig.stirling import sdiff
from recdig.tables import CoeffTable, solve_tree_equation


class InexactDivisionError(ArithmeticError):
    """A formula division left a remainder; indicates a bug, never expected."""


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InexactDivisionError(f"{num} not divisible by {den}")
    return q


def _need_truncation(r: CoeffSeq, n: int, what: str) -> None:
    if r.truncation < n:
        raise ShapeError(
            f"{what}: sequence {r.label!r} truncated at {r.truncation}, need {n}"
        )


def digraph_count_by_recurrent(i: int, j: int, r: int, rec: CoeffSeq) -> int:
    """Digraphs on [i, j] whose recurrent part is an R-structure of size r.

    Closed formula i! * |R[r]| / r! * sdiff(i+j, i, r); the division by r!
    is performed last and checked exact.
    """
    if i < 0 or j < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    _need_truncation(rec, r, "digraph_count_by_recurrent")
    return exact_div(
        factorial(i) * rec.counts[r] * sdiff(i + j, i, r), factorial(r)
    )


def digraph_count(i: int, j: int, rec: CoeffSeq) -> int:
    """Total R-recurrent digraphs on [i, j], summed over the recurrent size."""
    _need_truncation(rec, i, "digraph_count")
    return sum(digraph_count_by_recurrent(i, j, r, rec) for r in range(i + 1))


def digraph_table(rec: CoeffSeq, nmax: int) -> CoeffTable:
    """The full table on i + j <= nmax via the three-case recursion.

    Appending the branch that carries a new leaf gives
    c[i][j] = i * (c[i][j-1] + c[i-1][j]) for i, j >= 1, with the j = 0
    column fixed by R and an empty i = 0 column.
    """
    _need_truncation(rec, nmax, "digraph_table")
    rows = [[0] * (nmax + 1 - i) for i in range(nmax + 1)]
    for i in range(nmax + 1):
        rows[i][0] = rec.counts[i]
    for i in range(1, nmax + 1):
        for j in range(1, nmax + 1 - i):
            rows[i][j] = i * (rows[i][j - 1] + rows[i - 1][j])
    return CoeffTable(
        tuple(tuple(row) for row in rows),
        label=f"recdig[{rec.label}]",
        virtual=rec.virtual,
    )


def endofunction_count(n: int, rec: CoeffSeq) -> int:
    """R-recurrent endofunctions of [n]: both sorts over the same labels."""
    _need_truncation(rec, n, "endofunction_count")
    total = 0
    for r in range(n + 1):
        inner = sum(perm(n, i) * sdiff(n, i, r) for i in range(n + 1))
        total += exact_div(rec.counts[r] * inner, factorial(r))
    return total


def cayley_count(n: int, rec: CoeffSeq) -> int:
    """R-recurrent Cayley permutations of [n]: internal nodes take 1..i."""
    _need_truncation(rec, n, "cayley_count")
    total = 0
    for r in range(n + 1):
        inner = sum(factorial(i) * sdiff(n, i, r) for i in range(n + 1))
        total += exact_div(rec.counts[r] * inner, factorial(r))
    return total


# -- named structure classes -------------------------------------------------

CLASS_RECURRENT_ATOMS = {
    "all": "S",
    "tree": "X",
    "forest": "E",
    "connected": "C",
    "derangement": "Der",
}


def recurrent_structure_for_class(name: str, nmax: int) -> CoeffSeq:
    """The recurrent-part counts matching a named digraph class."""
    try:
        return atom(CLASS_RECURRENT_ATOMS[name], nmax)
    except KeyError:
        raise ValueError(f"unknown digraph class {name!r}") from None


def cayley_derangement_count(n: int) -> int:
    """Fixed-point-free Cayley permutations of [n]."""
    return cayley_count(n, atom("Der", n))


def cayley_connected_count(n: int) -> int:
    """Cayley permutations of [n] with a connected functional digraph."""
    return cayley_count(n, atom("C", n))


def cayley_forest_count(n: int) -> int:
    """Cayley permutations of [n] whose functional digraph is a forest."""
    return cayley_count(n, atom("E", n))


def cayley_tree_count(n: int) -> int:
    """Cayley permutations of [n] whose functional digraph is a tree."""
    return cayley_count(n, atom("X", n))


# -- generalized branches ------------------------------------------------------


def digraph_table_with_branches(
    rec: CoeffSeq, branch: CoeffSeq, nmax: int
) -> CoeffTable:
    """Digraph table when branches are shaped by an arbitrary class T.

    Structures grow by appending a branch (a T-shape of internal nodes
    ending in a new leaf) to a distinguished internal node.  At coefficient
    level, adding one leaf convolves T against the pointed table:

        c[i][j+1] = sum_k binom(i, k) * T[k] * (i - k) * c[i-k][j]

    with c[i][0] = R[i].  For T = linear orders this reproduces
    digraph_table exactly.
    """
    _need_truncation(rec, nmax, "digraph_table_with_branches")
    _need_truncation(branch, nmax, "digraph_table_with_branches")
    t = branch.counts
    rows = [[0] * (nmax + 1 - i) for i in range(nmax + 1)]
    for i in range(nmax + 1):
        rows[i][0] = rec.counts[i]
    for j in range(nmax):
        for i in range(1, nmax + 1 - (j + 1)):
            rows[i][j + 1] = sum(
                comb(i, k) * t[k] * (i - k) * rows[i - k][j] for k in range(i)
            )
    return CoeffTable(
        tuple(tuple(row) for row in rows),
        label=f"recdig[{rec.label};{branch.label}]",
        virtual=rec.virtual or branch.virtual,
    )


def bounded_arity_tree_table(k: int, nmax: int) -> CoeffTable:
    """Two-sort rooted trees where every node has at most k children.

    Solves T = X * ((E_0 + E_1 + ... + E_k) o (T - X + Y)).  Composing the
    result with permutations yields digraphs where recurrent points have
    indegree at most k + 1 and nonrecurrent points at most k.
    """
    if k < 1:
        raise ValueError("arity bound must be at least 1")
    branching = atom("E_r", nmax, 0)
    for r in range(1, k + 1):
        branching = branching + atom("E_r", nmax, r)
    return solve_tree_equation(branching, nmax)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def perms_with_cycle_lengths_dividing(d: int, nmax: int) -> CoeffSeq:
    """Permutations all of whose cycle lengths divide d: E o (sum C_i, i | d).

    With single-leaf branches these are the recurrent parts of the maps f
    whose (d+1)-fold iterate equals f; the oracle settles the off-by-one
    question between divisors of d and of d + 1 empirically.
    """
    if d < 1:
        raise ValueError("divisor parameter must be positive")
    inner = atom("C_i", nmax, divisors(d)[0])
    for i in divisors(d)[1:]:
        inner = inner + atom("C_i", nmax, i)
    return atom("E", nmax).compose(inner)
