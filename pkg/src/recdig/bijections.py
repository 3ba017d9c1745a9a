"""Executable spine bijections between trees and functional digraphs.

The unisort pair maps doubly-rooted labeled trees to endofunctions and
back: the path between the two distinguished nodes (the spine, read from
tail to head) is reinterpreted as a permutation of its own sorted label
set by the rank rule g(u_t) = w_t, where u_1 < ... < u_s are the spine
labels and w_1 ... w_s is the spine word; everything hanging off the spine
is left untouched.

The two-sort pair does the same between rooted trees carrying one extra
distinguished leaf and permutations of rooted trees: the spine runs from
the extra leaf (excluded) up to the root, and cutting it turns each spine
node into the root of its own tree.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from recdig.oracle import Endofunction, check_endofunction


class StructureError(ValueError):
    """The input is not a well-formed tree structure."""


# -- unisort: doubly-rooted trees <-> endofunctions -------------------------


@dataclass(frozen=True)
class DoublyRootedTree:
    """A labeled tree on [n] with an ordered pair of distinguished nodes."""

    n: int
    edges: tuple[tuple[int, int], ...]  # canonical: (min, max) pairs, sorted
    tail: int
    head: int

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise StructureError("a doubly-rooted tree needs at least one node")
        if not (1 <= self.tail <= n and 1 <= self.head <= n):
            raise StructureError("tail and head must be nodes of the tree")
        if len(self.edges) != n - 1:
            raise StructureError(f"a tree on {n} nodes has {n - 1} edges")
        adj = _adjacency(n, self.edges)
        expected = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        if expected != self.edges:
            raise StructureError("edges must be sorted (min, max) pairs")
        # n - 1 edges and connectivity together force acyclicity.
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != n:
            raise StructureError("tree is not connected")


def _adjacency(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for a, b in edges:
        if not (1 <= a <= n and 1 <= b <= n):
            raise StructureError(f"edge ({a}, {b}) outside [1..{n}]")
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _tree_path(n: int, edges, start: int, goal: int) -> list[int]:
    adj = _adjacency(n, edges)
    parent = {start: 0}
    stack = [start]
    while stack:
        u = stack.pop()
        if u == goal:
            break
        for v in adj[u]:
            if v not in parent:
                parent[v] = u
                stack.append(v)
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def endofunction_to_tree(f: Endofunction) -> DoublyRootedTree:
    """Cut the cycles of f open into a spine; trees hang where they were.

    The recurrent points u_1 < ... < u_s give the spine word
    w_t = f(u_t); the tail is w_1 and the head w_s.
    """
    f = check_endofunction(f)
    n = len(f)
    if n == 0:
        raise StructureError("the empty endofunction has no tree counterpart")
    recurrent = _recurrent_set(f)
    spine = [f[u - 1] for u in sorted(recurrent)]
    edges = {(min(v, f[v - 1]), max(v, f[v - 1]))
             for v in range(1, n + 1) if v not in recurrent}
    edges.update(
        (min(a, b), max(a, b)) for a, b in zip(spine, spine[1:])
    )
    return DoublyRootedTree(
        n=n, edges=tuple(sorted(edges)), tail=spine[0], head=spine[-1]
    )


def tree_to_endofunction(t: DoublyRootedTree) -> Endofunction:
    """Read the spine as a permutation of its sorted labels; hang the rest."""
    spine = _tree_path(t.n, t.edges, t.tail, t.head)
    spine_set = set(spine)
    f = [0] * t.n
    for u, w in zip(sorted(spine_set), spine):
        f[u - 1] = w
    # Off-spine nodes point at their neighbor toward the spine.
    adj = _adjacency(t.n, t.edges)
    stack = list(spine)
    visited = set(spine_set)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in visited:
                visited.add(v)
                f[v - 1] = u
                stack.append(v)
    return tuple(f)


def _recurrent_set(f: Endofunction) -> set[int]:
    current = set(range(1, len(f) + 1))
    while True:
        nxt = {f[u - 1] for u in current}
        if nxt == current:
            return current
        current = nxt


# -- two-sort structures -----------------------------------------------------


def _check_forest(
    x_parent: tuple[int | None, ...],
    y_parent: tuple[int, ...],
    extra_children: set[int],
    single_root: bool,
) -> None:
    i = len(x_parent)
    roots = [x + 1 for x, p in enumerate(x_parent) if p is None]
    if not roots:
        raise StructureError("no root")
    if single_root and len(roots) != 1:
        raise StructureError("expected exactly one root")
    has_child = set(extra_children)
    for x, p in enumerate(x_parent):
        if p is None:
            continue
        if not 1 <= p <= i:
            raise StructureError(f"parent {p} outside [1..{i}]")
        has_child.add(p)
    for y, p in enumerate(y_parent):
        if not 1 <= p <= i:
            raise StructureError(f"leaf {y + 1} parent {p} outside [1..{i}]")
        has_child.add(p)
    # Climb from every node; a cycle would never reach a root.
    for x in range(1, i + 1):
        seen = set()
        v: int | None = x
        while v is not None:
            if v in seen:
                raise StructureError("parent map has a cycle")
            seen.add(v)
            v = x_parent[v - 1]
    root_set = set(roots)
    for x in range(1, i + 1):
        if x not in has_child and x not in root_set:
            raise StructureError(f"non-root internal node {x} has no children")


@dataclass(frozen=True)
class TwoSortTree:
    """A rooted tree with internal nodes of sort X and leaves of sort Y.

    x_parent[t - 1] is the parent of internal node t (None at the root);
    y_parent[t - 1] is the parent of leaf t.  Every internal node other
    than a bare singleton root must have at least one child; leaves never
    have children by construction.
    """

    x_parent: tuple[int | None, ...]
    y_parent: tuple[int, ...]

    def __post_init__(self):
        if not self.x_parent:
            raise StructureError("a two-sort tree needs an internal root")
        _check_forest(
            self.x_parent, self.y_parent, extra_children=set(), single_root=True
        )
        if len(self.x_parent) == 1 and not self.y_parent:
            return  # bare root
        has_child = set(p for p in self.x_parent if p is not None)
        has_child.update(self.y_parent)
        for x in range(1, len(self.x_parent) + 1):
            if x not in has_child:
                raise StructureError(f"internal node {x} has no children")


@dataclass(frozen=True)
class PointedLeafTree:
    """A two-sort tree carrying one extra, distinguished leaf.

    The extra leaf is anonymous (it is the added element of a derivative in
    sort Y); only its attachment point matters.  It counts as a child, so a
    bare root with just the extra leaf is valid.
    """

    x_parent: tuple[int | None, ...]
    y_parent: tuple[int, ...]
    star_parent: int

    def __post_init__(self):
        i = len(self.x_parent)
        if not 1 <= self.star_parent <= i:
            raise StructureError("the extra leaf must hang from an internal node")
        _check_forest(
            self.x_parent,
            self.y_parent,
            extra_children={self.star_parent},
            single_root=True,
        )


@dataclass(frozen=True)
class PermutedForest:
    """A nonempty forest of two-sort trees plus a permutation of the roots.

    This is exactly a two-sort functional digraph whose recurrent part is a
    nonempty permutation: root_image lists (root, image) pairs sorted by
    root.  Roots may be bare (singleton trees); any other childless
    internal node is malformed.
    """

    x_parent: tuple[int | None, ...]
    y_parent: tuple[int, ...]
    root_image: tuple[tuple[int, int], ...]

    def __post_init__(self):
        roots = [x + 1 for x, p in enumerate(self.x_parent) if p is None]
        _check_forest(
            self.x_parent, self.y_parent, extra_children=set(), single_root=False
        )
        dom = tuple(sorted(r for r, _ in self.root_image))
        img = tuple(sorted(v for _, v in self.root_image))
        if dom != tuple(roots) or img != tuple(roots):
            raise StructureError("root_image must permute the forest roots")
        if self.root_image != tuple(sorted(self.root_image)):
            raise StructureError("root_image pairs must be sorted by root")

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(x + 1 for x, p in enumerate(self.x_parent) if p is None)


def pointed_tree_to_permuted_forest(t: PointedLeafTree) -> PermutedForest:
    """Cut the spine (extra leaf to root) and read it as a permutation."""
    spine = [t.star_parent]
    while t.x_parent[spine[-1] - 1] is not None:
        spine.append(t.x_parent[spine[-1] - 1])
    spine_set = set(spine)
    x_parent = tuple(
        None if x + 1 in spine_set else p for x, p in enumerate(t.x_parent)
    )
    root_image = tuple(
        sorted((u, w) for u, w in zip(sorted(spine_set), spine))
    )
    return PermutedForest(
        x_parent=x_parent, y_parent=t.y_parent, root_image=root_image
    )


def permuted_forest_to_pointed_tree(p: PermutedForest) -> PointedLeafTree:
    """Inverse of the cut: rebuild the spine from the root permutation."""
    roots = p.roots
    if not roots:
        raise StructureError("the permutation must be nonempty")
    image = dict(p.root_image)
    spine = [image[u] for u in roots]
    x_parent = list(p.x_parent)
    for w, nxt in zip(spine, spine[1:]):
        x_parent[w - 1] = nxt
    # spine[-1] keeps parent None: it becomes the root of the whole tree.
    return PointedLeafTree(
        x_parent=tuple(x_parent), y_parent=p.y_parent, star_parent=spine[0]
    )


# -- exhaustive enumeration helpers ------------------------------------------


def _pruefer_edges(seq: tuple[int, ...], n: int) -> tuple[tuple[int, int], ...]:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, v))
    return tuple(sorted(edges))


def labeled_trees(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All n^(n-2) labeled trees on [n] as sorted edge tuples."""
    if n < 1:
        return
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((1, 2),)
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield _pruefer_edges(seq, n)


def doubly_rooted_trees(n: int) -> Iterator[DoublyRootedTree]:
    """All doubly-rooted trees on [n]; there are n^n of them."""
    for edges in labeled_trees(n):
        for tail in range(1, n + 1):
            for head in range(1, n + 1):
                yield DoublyRootedTree(n=n, edges=edges, tail=tail, head=head)


def rooted_parent_maps(i: int) -> Iterator[tuple[int | None, ...]]:
    """All i^(i-1) rooted labeled trees on [i], as parent tuples."""
    for edges in labeled_trees(i):
        adj = _adjacency(i, edges)
        for root in range(1, i + 1):
            parent: list[int | None] = [None] * i
            stack = [root]
            seen = {root}
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        parent[v - 1] = u
                        stack.append(v)
            yield tuple(parent)


def two_sort_trees(i: int, j: int) -> Iterator[TwoSortTree]:
    """All two-sort trees with internal nodes [i] and leaves [j]."""
    if i == 0:
        return
    for skeleton in rooted_parent_maps(i):
        bare = _childless(skeleton)
        if len(bare) > j and not (i == 1 and j == 0):
            continue
        for attach in product(range(1, i + 1), repeat=j):
            if bare <= set(attach) or (i == 1 and j == 0):
                yield TwoSortTree(x_parent=skeleton, y_parent=attach)


def pointed_leaf_trees(i: int, j: int) -> Iterator[PointedLeafTree]:
    """All derivative-in-Y structures: trees on [i], [j] plus the extra leaf."""
    if i == 0:
        return
    for skeleton in rooted_parent_maps(i):
        bare = _childless(skeleton)
        if len(bare) > j + 1:
            continue
        for attach in product(range(1, i + 1), repeat=j):
            uncovered = bare - set(attach)
            if len(uncovered) > 1:
                continue
            for star in range(1, i + 1):
                if uncovered <= {star}:
                    yield PointedLeafTree(
                        x_parent=skeleton, y_parent=attach, star_parent=star
                    )


def _childless(skeleton: tuple[int | None, ...]) -> set[int]:
    parents = set(p for p in skeleton if p is not None)
    return {x for x in range(1, len(skeleton) + 1) if x not in parents}


# -- DOT export ----------------------------------------------------------------


def endofunction_dot(f: Endofunction, name: str = "endofunction") -> str:
    """The functional digraph in DOT: internal nodes filled, leaves white."""
    f = check_endofunction(f)
    n = len(f)
    image = set(f)
    lines = [f"digraph {name} {{"]
    for v in range(1, n + 1):
        fill = "black" if v in image else "white"
        font = ", fontcolor=white" if v in image else ""
        lines.append(
            f'  {v} [shape=circle, style=filled, fillcolor={fill}{font}];'
        )
    for v in range(1, n + 1):
        lines.append(f"  {v} -> {f[v - 1]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def doubly_rooted_tree_dot(
    t: DoublyRootedTree, filled: set[int] | None = None, name: str = "spine_tree"
) -> str:
    """The doubly-rooted tree in DOT; tail and head get extra circles."""
    filled = filled or set()
    lines = [f"graph {name} {{"]
    for v in range(1, t.n + 1):
        fill = "black" if v in filled else "white"
        font = ", fontcolor=white" if v in filled else ""
        peripheries = 1 + (v == t.tail) + 2 * (v == t.head)
        lines.append(
            f'  {v} [shape=circle, style=filled, fillcolor={fill}'
            f", peripheries={peripheries}{font}];"
        )
    for a, b in t.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
