"""Two-sort coefficient tables: counts |F[i, j]| on the triangle i + j <= N.

Sort X holds internal nodes, sort Y holds leaves.  A CoeffTable is the
two-variable analogue of a CoeffSeq; the extra operations are partial
derivatives per sort, composition of a unisort class with a two-sort one,
the fixed-point solver for rooted-tree equations, and the two ways of
merging the sorts back into one label set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from recdig.series import (
    CoeffSeq,
    CompositionDomainError,
    ShapeError,
)


@dataclass(frozen=True)
class CoeffTable:
    """Triangular table rows[i][j] = |F[i, j]| for i + j <= N."""

    rows: tuple[tuple[int, ...], ...]
    label: str = field(default="", compare=False)
    virtual: bool = field(default=False, compare=False)

    def __post_init__(self):
        n = len(self.rows) - 1
        if n < 0:
            raise ShapeError("a table needs at least the (0, 0) cell")
        for i, row in enumerate(self.rows):
            if len(row) != n + 1 - i:
                raise ShapeError(
                    f"row {i} has {len(row)} entries, expected {n + 1 - i}"
                )
        if not self.virtual and any(c < 0 for row in self.rows for c in row):
            raise ValueError(f"negative count in concrete table {self.label!r}")

    @property
    def truncation(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.rows[i][j]

    def cells(self):
        """Iterate (i, j, count) over the triangle, row by row."""
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                yield i, j, c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nmax: int, label: str = "0") -> "CoeffTable":
        rows = tuple(tuple(0 for _ in range(nmax + 1 - i)) for i in range(nmax + 1))
        return cls(rows, label=label)

    @classmethod
    def from_seq_x(cls, seq: CoeffSeq) -> "CoeffTable":
        """Embed a unisort class: all labels of sort X, none of sort Y."""
        n = seq.truncation
        rows = tuple(
            tuple(seq.counts[i] if j == 0 else 0 for j in range(n + 1 - i))
            for i in range(n + 1)
        )
        return cls(rows, label=seq.label, virtual=seq.virtual)

    @classmethod
    def from_seq_y(cls, seq: CoeffSeq) -> "CoeffTable":
        """Embed a unisort class on sort Y."""
        n = seq.truncation
        rows = tuple(
            tuple(seq.counts[j] if i == 0 else 0 for j in range(n + 1 - i))
            for i in range(n + 1)
        )
        return cls(rows, label=f"{seq.label}(Y)", virtual=seq.virtual)

    @classmethod
    def x_singleton(cls, nmax: int) -> "CoeffTable":
        t = [[0] * (nmax + 1 - i) for i in range(nmax + 1)]
        if nmax >= 1:
            t[1][0] = 1
        return cls(tuple(tuple(r) for r in t), label="X")

    @classmethod
    def y_singleton(cls, nmax: int) -> "CoeffTable":
        t = [[0] * (nmax + 1 - i) for i in range(nmax + 1)]
        if nmax >= 1:
            t[0][1] = 1
        return cls(tuple(tuple(r) for r in t), label="Y")

    # -- arithmetic ---------------------------------------------------------

    def _same_shape(self, other: "CoeffTable", op: str) -> None:
        if self.truncation != other.truncation:
            raise ShapeError(
                f"{op}: truncations differ "
                f"({self.truncation} vs {other.truncation})"
            )

    def __add__(self, other: "CoeffTable") -> "CoeffTable":
        self._same_shape(other, "sum")
        rows = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )
        return CoeffTable(
            rows,
            label=f"({self.label}+{other.label})",
            virtual=self.virtual or other.virtual,
        )

    def __sub__(self, other: "CoeffTable") -> "CoeffTable":
        self._same_shape(other, "difference")
        rows = tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )
        return CoeffTable(
            rows, label=f"({self.label}-{other.label})", virtual=True
        )

    def __mul__(self, other: "CoeffTable") -> "CoeffTable":
        """Labeled product, a binomial convolution in both sorts."""
        self._same_shape(other, "product")
        n = self.truncation
        a, b = self.rows, other.rows
        rows = []
        for i in range(n + 1):
            row = []
            for j in range(n + 1 - i):
                s = 0
                for p in range(i + 1):
                    bi = comb(i, p)
                    for q in range(j + 1):
                        av = a[p][q]
                        if av:
                            s += bi * comb(j, q) * av * b[i - p][j - q]
                row.append(s)
            rows.append(tuple(row))
        return CoeffTable(
            tuple(rows),
            label=f"{self.label}*{other.label}",
            virtual=self.virtual or other.virtual,
        )

    # -- per-sort operators --------------------------------------------------

    def partial_x(self) -> "CoeffTable":
        """One extra X label: c[i][j] = a[i+1][j]; truncation drops by one."""
        n = self.truncation
        if n == 0:
            raise ShapeError("partial derivative of a truncation-0 table is empty")
        rows = tuple(
            tuple(self.rows[i + 1][j] for j in range(n - i))
            for i in range(n)
        )
        return CoeffTable(rows, label=f"dX({self.label})", virtual=self.virtual)

    def partial_y(self) -> "CoeffTable":
        """One extra Y label: c[i][j] = a[i][j+1]; truncation drops by one."""
        n = self.truncation
        if n == 0:
            raise ShapeError("partial derivative of a truncation-0 table is empty")
        rows = tuple(
            tuple(self.rows[i][j + 1] for j in range(n - i))
            for i in range(n)
        )
        return CoeffTable(rows, label=f"dY({self.label})", virtual=self.virtual)

    def pointing_x(self) -> "CoeffTable":
        """Distinguish an X label: c[i][j] = i * a[i][j]."""
        rows = tuple(
            tuple(i * c for c in row) for i, row in enumerate(self.rows)
        )
        return CoeffTable(rows, label=f"{self.label}^.X", virtual=self.virtual)

    def pointing_y(self) -> "CoeffTable":
        """Distinguish a Y label: c[i][j] = j * a[i][j]."""
        rows = tuple(
            tuple(j * c for j, c in enumerate(row)) for row in self.rows
        )
        return CoeffTable(rows, label=f"{self.label}^.Y", virtual=self.virtual)

    def truncate(self, n: int) -> "CoeffTable":
        if n < 0 or n > self.truncation:
            raise ShapeError(f"cannot truncate table at {n}")
        rows = tuple(
            tuple(self.rows[i][j] for j in range(n + 1 - i)) for i in range(n + 1)
        )
        return CoeffTable(rows, label=self.label, virtual=self.virtual)

    # -- merging the two sorts back into one -----------------------------------

    def identify_sorts(self) -> CoeffSeq:
        """Counts after treating both sorts as one label set.

        The binomial factor chooses which of the n labels play sort X:
        c[n] = sum_i binom(n, i) * a[i][n-i].
        """
        n = self.truncation
        counts = tuple(
            sum(comb(m, i) * self.rows[i][m - i] for i in range(m + 1))
            for m in range(n + 1)
        )
        return CoeffSeq(
            counts, label=f"{self.label}(X,X)", virtual=self.virtual
        )

    def concat_sorts(self) -> CoeffSeq:
        """Counts when sort X is forced onto the smallest labels.

        Plain antidiagonal sums: c[n] = sum_i a[i][n-i].  This is the
        Cayley-permutation style merge (internal nodes take 1..i).
        """
        n = self.truncation
        counts = tuple(
            sum(self.rows[i][m - i] for i in range(m + 1)) for m in range(n + 1)
        )
        return CoeffSeq(counts, label=f"{self.label}^", virtual=self.virtual)

    def json_dict(self) -> dict:
        return {
            "label": self.label,
            "truncation": self.truncation,
            "virtual": self.virtual,
            "rows": [[str(c) for c in row] for row in self.rows],
        }


def compose_table(outer: CoeffSeq, inner: CoeffTable) -> CoeffTable:
    """Substitute a two-sort class into a unisort one, division-free.

    Works like CoeffSeq.compose but in two variables: with u_m the table of
    F^(m) composed with G, the partial derivative identities
    dX(F o G) = dX(G) * (F' o G) and dY(F o G) = dY(G) * (F' o G) fill each
    u_m degree by degree (entries with i >= 1 from the X identity, the
    remaining i = 0 column from the Y identity).
    """
    if outer.truncation != inner.truncation:
        raise ShapeError(
            f"composition: truncations differ "
            f"({outer.truncation} vs {inner.truncation})"
        )
    g = inner.rows
    if g[0][0] != 0:
        raise CompositionDomainError("inner class has structures on the empty set")
    f = outer.counts
    big = outer.truncation

    prev: list[list[int]] = []
    for m in range(big, -1, -1):
        size = big - m
        cur = [[0] * (size + 1 - i) for i in range(size + 1)]
        cur[0][0] = f[m]
        for d in range(1, size + 1):
            for i in range(1, d + 1):
                j = d - i
                s = 0
                for p in range(i):
                    bi = comb(i - 1, p)
                    for q in range(j + 1):
                        gv = g[p + 1][q]
                        if gv:
                            s += bi * comb(j, q) * gv * prev[i - 1 - p][j - q]
                cur[i][j] = s
            s = 0
            for q in range(d):
                gv = g[0][q + 1]
                if gv:
                    s += comb(d - 1, q) * gv * prev[0][d - 1 - q]
            cur[0][d] = s
        prev = cur

    rows = tuple(tuple(row) for row in prev)
    return CoeffTable(
        rows,
        label=f"{outer.label}({inner.label})",
        virtual=outer.virtual or inner.virtual,
    )


def solve_tree_equation(branching: CoeffSeq, nmax: int) -> CoeffTable:
    """Unique fixed point T = X * (branching o (T - X + Y)) with T(X, 0) = X.

    T counts rooted trees whose internal nodes are sort X and whose leaves
    are sort Y; ``branching`` dictates how the set of subtrees under a node
    may look (sets of any size for ordinary rooted trees, bounded sets for
    arity-limited trees).  The "- X + Y" swap accounts for a childless
    appended node turning into a leaf.

    Each coefficient of total degree d depends only on degrees below d, so
    iterating nmax + 1 times from the zero table reaches the fixed point;
    one extra round asserts stabilization.
    """
    if branching.truncation < nmax:
        raise ShapeError("branching sequence shorter than requested truncation")
    b = branching.truncate(nmax)
    x1 = CoeffTable.x_singleton(nmax)
    y1 = CoeffTable.y_singleton(nmax)

    t = CoeffTable.zero(nmax)
    for _ in range(nmax + 1):
        t = x1 * compose_table(b, t - x1 + y1)
    again = x1 * compose_table(b, t - x1 + y1)
    if again.rows != t.rows:
        raise AssertionError("tree equation failed to stabilize; this is a bug")
    return CoeffTable(t.rows, label=f"tree[{branching.label}]")


def rooted_tree_table(nmax: int) -> CoeffTable:
    """Two-sort rooted trees: internal nodes of sort X, leaves of sort Y."""
    from recdig.series import atom

    return solve_tree_equation(atom("E", nmax), nmax)
