"""Finite graded posets: construction, order queries, duality, combination,
isomorphism testing, and JSON/DOT serialization.

Elements are dense integer indices 0..n-1 with explicitly stored ranks; the
partial order is the reflexive-transitive closure of the Hasse covers, and
every cover must raise rank by exactly one.  Labels are display-only and never
affect semantics.
"""

from __future__ import annotations

from collections import defaultdict
from functools import cached_property

from .errors import (
    DuplicateCover,
    IndexOutOfRange,
    InvalidMorphism,
    InvalidParams,
    NotGraded,
    TooLarge,
)

BOOLEAN_CAP = 16    # boolean_algebra ceiling: 2^16 elements
REACH_CAP = 4096    # precompute reachability bitsets up to this many elements


class GradedPoset:
    """Immutable finite graded poset.

    Instances are safe to share between threads; all derived structures are
    computed lazily and cached.  Disconnected posets, and posets whose minimum
    occupied rank is nonzero, are allowed.
    """

    def __init__(self, ranks, covers, labels=None):
        ranks = tuple(int(r) for r in ranks)
        n = len(ranks)
        for r in ranks:
            if r < 0:
                raise NotGraded(f"negative rank {r}")
        seen = set()
        for pair in covers:
            x, y = pair
            if not (0 <= x < n and 0 <= y < n):
                raise IndexOutOfRange(f"cover ({x}, {y}) outside 0..{n - 1}")
            if (x, y) in seen:
                raise DuplicateCover(f"cover ({x}, {y}) repeated")
            if ranks[y] != ranks[x] + 1:
                raise NotGraded(
                    f"cover ({x}, {y}) jumps rank {ranks[x]} -> {ranks[y]}"
                )
            seen.add((x, y))
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise IndexOutOfRange("labels length differs from element count")
        self.n = n
        self.ranks = ranks
        self.covers = tuple(sorted(seen))
        self.labels = labels

    def __repr__(self):
        return f"GradedPoset(n={self.n}, covers={len(self.covers)}, rank_vector={self.rank_vector})"

    def label(self, i):
        return self.labels[i] if self.labels is not None else str(i)

    @cached_property
    def max_rank(self):
        return max(self.ranks) if self.ranks else -1

    @cached_property
    def rank_vector(self):
        """Tuple whose i-th entry counts the elements of rank i."""
        vec = [0] * (self.max_rank + 1)
        for r in self.ranks:
            vec[r] += 1
        return tuple(vec)

    @cached_property
    def elements_by_rank(self):
        by = [[] for _ in range(self.max_rank + 1)]
        for i, r in enumerate(self.ranks):
            by[r].append(i)
        return tuple(tuple(xs) for xs in by)

    @cached_property
    def up(self):
        """up[x]: ascending tuple of upper covers of x."""
        adj = [[] for _ in range(self.n)]
        for x, y in self.covers:
            adj[x].append(y)
        return tuple(tuple(sorted(xs)) for xs in adj)

    @cached_property
    def down(self):
        """down[y]: ascending tuple of lower covers of y."""
        adj = [[] for _ in range(self.n)]
        for x, y in self.covers:
            adj[y].append(x)
        return tuple(tuple(sorted(xs)) for xs in adj)

    @cached_property
    def cover_set(self):
        return frozenset(self.covers)

    @cached_property
    def _reach(self):
        # reach[x] = bitmask of all y with x <= y; built top rank downward.
        reach = [1 << i for i in range(self.n)]
        order = sorted(range(self.n), key=lambda i: -self.ranks[i])
        up = self.up
        for x in order:
            acc = reach[x]
            for y in up[x]:
                acc |= reach[y]
            reach[x] = acc
        return reach

    def leq(self, x, y):
        """True iff x <= y, i.e. y is reachable from x along covers (or x == y)."""
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise IndexOutOfRange(f"element out of range: {x}, {y}")
        if x == y:
            return True
        if self.ranks[x] >= self.ranks[y]:
            return False
        if self.n <= REACH_CAP:
            return (self._reach[x] >> y) & 1 == 1
        # per-query upward search for very large posets
        target_rank = self.ranks[y]
        frontier = [x]
        seen = {x}
        while frontier:
            nxt = []
            for u in frontier:
                for v in self.up[u]:
                    if v == y:
                        return True
                    if v not in seen and self.ranks[v] < target_rank:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return False

    def dual(self):
        """Same elements, covers reversed, ranks flipped about max_rank."""
        m = self.max_rank
        return GradedPoset(
            tuple(m - r for r in self.ranks),
            tuple((y, x) for x, y in self.covers),
            self.labels,
        )


def build_poset(ranks, covers, labels=None):
    """Construct a validated GradedPoset from explicit ranks and covers."""
    return GradedPoset(ranks, covers, labels)


def chain(length):
    """Chain with `length` elements at ranks 0..length-1."""
    return GradedPoset(range(length), [(i, i + 1) for i in range(length - 1)])


def antichain(size, rank=0):
    return GradedPoset([rank] * size, [])


def boolean_algebra(n):
    """Subsets of an n-set as bit-masks, ordered by inclusion.

    Element x is the bit-mask of a subset of {0..n-1}; rank is the popcount
    and covers are single-bit insertions.  Labels show 1-indexed subsets.
    """
    if n < 0:
        raise InvalidParams("boolean_algebra needs n >= 0")
    if n > BOOLEAN_CAP:
        raise TooLarge(f"boolean_algebra cap is n <= {BOOLEAN_CAP}")
    size = 1 << n
    ranks = [x.bit_count() for x in range(size)]
    covers = [
        (x, x | (1 << i)) for x in range(size) for i in range(n) if not (x >> i) & 1
    ]
    labels = [subset_label(x) for x in range(size)]
    return GradedPoset(ranks, covers, labels)


def subset_label(mask):
    """Display form of a bit-mask subset, 1-indexed: 0b101 -> '{1,3}'."""
    pts = [str(i + 1) for i in range(mask.bit_length()) if (mask >> i) & 1]
    return "{" + ",".join(pts) + "}"


def mask_to_points(mask):
    """Bit-mask subset as a sorted list of 0-indexed points."""
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def combine(P, Q, mode):
    """Disjoint union (ranks kept as given) or cartesian product of two posets.

    Product elements are pairs (p, q) indexed p * Q.n + q with rank the sum of
    coordinate ranks; product covers change exactly one coordinate by a cover.
    """
    if mode == "disjoint-union":
        ranks = P.ranks + Q.ranks
        covers = list(P.covers) + [(x + P.n, y + P.n) for x, y in Q.covers]
        labels = None
        if P.labels is not None and Q.labels is not None:
            labels = P.labels + Q.labels
        return GradedPoset(ranks, covers, labels)
    if mode == "cartesian-product":
        ranks = [P.ranks[i] + Q.ranks[j] for i in range(P.n) for j in range(Q.n)]
        covers = []
        for x, y in P.covers:
            covers.extend((x * Q.n + j, y * Q.n + j) for j in range(Q.n))
        for x, y in Q.covers:
            covers.extend((i * Q.n + x, i * Q.n + y) for i in range(P.n))
        labels = None
        if P.labels is not None and Q.labels is not None:
            labels = tuple(
                f"({P.labels[i]},{Q.labels[j]})"
                for i in range(P.n)
                for j in range(Q.n)
            )
        return GradedPoset(ranks, covers, labels)
    raise InvalidParams(f"unknown combine mode {mode!r}")


def disjoint_union(posets):
    """Disjoint union of a sequence of posets, indexed in block order."""
    ranks = []
    covers = []
    offset = 0
    for P in posets:
        ranks.extend(P.ranks)
        covers.extend((x + offset, y + offset) for x, y in P.covers)
        offset += P.n
    return GradedPoset(ranks, covers)


# -- isomorphism ------------------------------------------------------------


def _stable_colors(P):
    """Iterated neighborhood refinement; isomorphism-invariant element colors."""
    colors = [(P.ranks[i], len(P.up[i]), len(P.down[i])) for i in range(P.n)]
    while True:
        key = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in P.up[i])),
                tuple(sorted(colors[j] for j in P.down[i])),
            )
            for i in range(P.n)
        ]
        relabel = {k: c for c, k in enumerate(sorted(set(key)))}
        new = [relabel[k] for k in key]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def is_isomorphic(P, Q):
    """Search for a rank- and cover-preserving bijection with cover-preserving
    inverse.  Returns (found, mapping) with mapping[i] the image of element i.

    Backtracking with rank-vector, degree, and refined-color pruning; intended
    for desk-scale operands (keep below ~2000 elements).
    """
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return False, None
    if sorted(P.ranks) != sorted(Q.ranks):
        return False, None
    cp = _stable_colors(P)
    cq = _stable_colors(Q)
    if sorted(cp) != sorted(cq):
        return False, None
    # group rank alongside color: refinement starts from rank so colors already
    # separate ranks, but keep the pairing explicit for candidate lists
    cand = defaultdict(list)
    for j in range(Q.n):
        cand[(Q.ranks[j], cq[j])].append(j)
    order = sorted(
        range(P.n), key=lambda i: (len(cand[(P.ranks[i], cp[i])]), P.ranks[i], i)
    )
    mapping = [-1] * P.n
    used = [False] * Q.n
    qcovers = Q.cover_set

    def place(pos):
        if pos == P.n:
            return True
        p = order[pos]
        for q in cand[(P.ranks[p], cp[p])]:
            if used[q]:
                continue
            ok = True
            for u in P.up[p]:
                if mapping[u] != -1 and (q, mapping[u]) not in qcovers:
                    ok = False
                    break
            if ok:
                for d in P.down[p]:
                    if mapping[d] != -1 and (mapping[d], q) not in qcovers:
                        ok = False
                        break
            if not ok:
                continue
            mapping[p] = q
            used[q] = True
            if place(pos + 1):
                return True
            mapping[p] = -1
            used[q] = False
        return False

    if not place(0):
        return False, None
    witness = tuple(mapping)
    # final verification: all covers map to covers (inverse follows by counting)
    assert all((witness[x], witness[y]) in qcovers for x, y in P.covers)
    return True, witness


def is_self_dual(P):
    found, _ = is_isomorphic(P, P.dual())
    return found


# -- morphisms ---------------------------------------------------------------


class PosetMorphism:
    """Rank-preserving, cover-preserving map between graded posets.

    Cover preservation is equivalent to order preservation here: every
    relation in a finite graded poset factors through covers, and a
    rank-preserving image of a cover has nothing strictly between.
    Bijective morphisms need not be isomorphisms (no inverse is required).
    """

    __slots__ = ("source", "target", "image")

    def __init__(self, source, target, image):
        image = tuple(image)
        if len(image) != source.n:
            raise InvalidMorphism("image length differs from source size")
        for i, j in enumerate(image):
            if not 0 <= j < target.n:
                raise InvalidMorphism(f"image of {i} out of range: {j}")
            if source.ranks[i] != target.ranks[j]:
                raise InvalidMorphism(
                    f"rank not preserved at {i}: {source.ranks[i]} vs {target.ranks[j]}"
                )
        tcovers = target.cover_set
        for x, y in source.covers:
            if (image[x], image[y]) not in tcovers:
                raise InvalidMorphism(
                    f"cover ({x}, {y}) maps to non-cover ({image[x]}, {image[y]})"
                )
        self.source = source
        self.target = target
        self.image = image

    def __call__(self, i):
        return self.image[i]

    def __repr__(self):
        return f"PosetMorphism({self.source.n} -> {self.target.n})"

    @classmethod
    def identity(cls, P):
        return cls(P, P, range(P.n))

    def then(self, other):
        """Composite morphism: apply self first, then other."""
        return PosetMorphism(
            self.source, other.target, tuple(other.image[j] for j in self.image)
        )

    def is_bijective(self):
        return self.source.n == self.target.n and len(set(self.image)) == self.source.n

    def is_isomorphism(self):
        """Bijective with cover-preserving inverse.

        A bijective morphism maps the source covers injectively into the
        target covers, so equality of cover counts forces the inverse to be
        cover-preserving as well.
        """
        return self.is_bijective() and len(self.source.covers) == len(self.target.covers)

    def inverse(self):
        if not self.is_isomorphism():
            raise InvalidMorphism("not an isomorphism; no inverse")
        inv = [0] * self.target.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return PosetMorphism(self.target, self.source, inv)


# -- serialization -----------------------------------------------------------


def poset_to_json(P):
    """JSON-ready dict: {"ranks": [...], "covers": [[low, high], ...], "labels": [...]}."""
    obj = {"ranks": list(P.ranks), "covers": [list(c) for c in P.covers]}
    if P.labels is not None:
        obj["labels"] = list(P.labels)
    return obj


def poset_from_json(obj):
    try:
        ranks = obj["ranks"]
        covers = [tuple(c) for c in obj["covers"]]
    except (KeyError, TypeError) as exc:
        raise InvalidParams(f"poset JSON needs 'ranks' and 'covers': {exc}") from exc
    return GradedPoset(ranks, covers, obj.get("labels"))


def poset_to_dot(P, name="poset"):
    """DOT source drawing covers upward, one row of nodes per rank."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(P.n):
        lbl = P.label(i).replace('"', r"\"")
        lines.append(f'  n{i} [label="{lbl}"];')
    for r, elems in enumerate(P.elements_by_rank):
        if elems:
            row = " ".join(f"n{i};" for i in elems)
            lines.append(f"  {{ rank=same; {row} }}")
    for x, y in P.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
