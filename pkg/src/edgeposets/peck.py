"""Exact verification of rank symmetry/unimodality, strong Spernerity, Peck
and unitary Peck properties, plus symmetric chain decompositions.

All linear algebra runs over arbitrary-precision integers (fraction-free
Bareiss elimination); the k-antichain numbers d_k come from Greene-Kleitman
duality via minimum-cost flow on the split-element comparability network, and
are cross-checked against an exhaustive search on small posets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce

from .edges import h_bn_decomposition
from .errors import (
    ImageChainNotSaturated,
    InternalInconsistency,
    InvalidChainDecomposition,
    InvalidParams,
)
from .poset import GradedPoset, boolean_algebra

DEFAULT_ORACLE_THRESHOLD = 12  # cross-check d_k exhaustively up to this size


class ExactMatrix:
    """Dense integer matrix; all arithmetic exact, no floating point anywhere."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [list(row) for row in entries]
        rows = len(entries)
        if rows:
            cols = len(entries[0])
            for row in entries:
                if len(row) != cols:
                    raise InvalidParams("ragged matrix")
        else:
            cols = cols or 0
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InvalidParams(f"dim mismatch {self.cols} vs {other.rows}")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            acc = out[i]
            for k, a in enumerate(row):
                if a:
                    brow = other.entries[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] += a * b
        return ExactMatrix(out, cols=other.cols)

    def rank(self):
        """Exact rank by fraction-free (Bareiss) elimination."""
        m = [row[:] for row in self.entries]
        rows, cols = self.rows, self.cols
        r = 0
        prev = 1
        for c in range(cols):
            piv = next((i for i in range(r, rows) if m[i][c]), None)
            if piv is None:
                continue
            if piv != r:
                m[r], m[piv] = m[piv], m[r]
            for i in range(r + 1, rows):
                mic = m[i][c]
                mrc = m[r][c]
                rowr = m[r]
                rowi = m[i]
                for j in range(c + 1, cols):
                    rowi[j] = (mrc * rowi[j] - mic * rowr[j]) // prev
                rowi[c] = 0
            prev = m[r][c]
            r += 1
            if r == rows:
                break
        return r


def cover_matrix(P, i):
    """0/1 matrix of the Lefschetz step from rank i to rank i+1 (rows indexed
    by rank-(i+1) elements, columns by rank-i elements)."""
    lows = P.elements_by_rank[i] if i <= P.max_rank else ()
    highs = P.elements_by_rank[i + 1] if i + 1 <= P.max_rank else ()
    col = {x: j for j, x in enumerate(lows)}
    entries = [[0] * len(lows) for _ in highs]
    row = {y: j for j, y in enumerate(highs)}
    for x, y in P.covers:
        if P.ranks[x] == i:
            entries[row[y]][col[x]] = 1
    return ExactMatrix(entries, cols=len(lows))


def lefschetz_power_rank(P, i):
    """Exact rank of U^{n-2i} restricted to rank i -> rank n-i, U the all-ones
    order-raising map."""
    n = P.max_rank
    if not 0 <= 2 * i < n:
        raise InvalidParams(f"need 0 <= i < {n}/2")
    mats = [cover_matrix(P, j) for j in range(i, n - i)]
    return reduce(lambda acc, U: U @ acc, mats[1:], mats[0]).rank()


def rank_profile(P):
    """(rank-symmetric, rank-unimodal) flags of the rank vector."""
    vec = P.rank_vector
    return vec == vec[::-1], is_unimodal_sequence(vec)


def is_unimodal_sequence(seq):
    falling = False
    for a, b in zip(seq, seq[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            return False
    return True


def is_unitary_peck(P):
    """Whether every restricted power of the Lefschetz map from rank i to rank
    n-i (for i below the middle) is an isomorphism."""
    n = P.max_rank
    vec = P.rank_vector
    for i in range(0, (n + 1) // 2):
        if 2 * i >= n:
            break
        if vec[i] != vec[n - i]:
            return False
        if lefschetz_power_rank(P, i) != vec[i]:
            return False
    return True


# -- Greene-Kleitman d_k -------------------------------------------------------


class _MinCostFlow:
    def __init__(self, n):
        self.n = n
        self.adj = [[] for _ in range(n)]

    def add(self, u, v, cap, cost):
        self.adj[u].append([v, cap, cost, len(self.adj[v])])
        self.adj[v].append([u, 0, -cost, len(self.adj[u]) - 1])

    def augment_unit(self, s, t):
        """Send one unit along a cheapest s-t path; returns its cost or None."""
        dist = [None] * self.n
        dist[s] = 0
        prev = [None] * self.n
        inq = [False] * self.n
        queue = deque([s])
        inq[s] = True
        while queue:
            u = queue.popleft()
            inq[u] = False
            du = dist[u]
            for ei, (v, cap, cost, _) in enumerate(self.adj[u]):
                if cap > 0 and (dist[v] is None or du + cost < dist[v]):
                    dist[v] = du + cost
                    prev[v] = (u, ei)
                    if not inq[v]:
                        queue.append(v)
                        inq[v] = True
        if dist[t] is None:
            return None
        v = t
        while v != s:
            u, ei = prev[v]
            edge = self.adj[u][ei]
            edge[1] -= 1
            self.adj[v][edge[3]][1] += 1
            v = u
        return dist[t]


def max_k_antichain_union(P, k, oracle_threshold=DEFAULT_ORACLE_THRESHOLD):
    """Largest union of k antichains, exactly.

    By Greene-Kleitman duality this is |P| minus the best total chain overflow
    sum((|C| - k)+) over chain partitions; disjoint chains are grown one at a
    time as cheapest source-sink paths through split elements, and marginal
    chain sizes are non-increasing, so augmentation stops once a new chain
    would cover at most k elements.  Results are cross-checked against the
    exhaustive layer-peeling search whenever |P| <= oracle_threshold.
    """
    if k < 1:
        raise InvalidParams("need k >= 1")
    n = P.n
    net = _MinCostFlow(2 * n + 2)
    s, t = 2 * n, 2 * n + 1
    for v in range(n):
        net.add(s, 2 * v, 1, 0)
        net.add(2 * v, 2 * v + 1, 1, -1)
        net.add(2 * v + 1, t, 1, 0)
    for u in range(n):
        for v in range(n):
            if u != v and P.leq(u, v):
                net.add(2 * u + 1, 2 * v, 1, 0)
    overflow = 0
    while True:
        cost = net.augment_unit(s, t)
        if cost is None:
            break
        gain = -cost
        if gain <= k:
            break
        overflow += gain - k
    d = n - overflow
    if n <= oracle_threshold:
        table = _antichain_union_table(P)
        expected = table[min(k, n)]
        if d != expected:
            raise InternalInconsistency(
                f"flow d_{k} = {d} but exhaustive search says {expected}"
            )
    return d


def _antichain_union_table(P):
    """table[k] = max size of a union of k antichains, by exhaustive search.

    Every subset is peeled into explicit antichain layers (repeatedly stripping
    its minimal elements); a subset is a union of k antichains iff it peels in
    at most k layers.  Cached on the poset.  Exponential: callers keep |P|
    small.
    """
    cached = getattr(P, "_antichain_union_table", None)
    if cached is not None:
        return cached
    n = P.n
    below = [0] * n
    for u in range(n):
        rest = P._reach[u] & ~(1 << u)
        v = 0
        while rest >> v:
            if (rest >> v) & 1:
                below[v] |= 1 << u
            v += 1
    best = [0] * (n + 1)
    for sub in range(1 << n):
        t = sub
        layers = 0
        while t:
            minimal = 0
            bits = t
            v = 0
            while bits:
                if bits & 1 and (below[v] & t) == 0:
                    minimal |= 1 << v
                bits >>= 1
                v += 1
            t &= ~minimal
            layers += 1
        size = sub.bit_count()
        if size > best[layers]:
            best[layers] = size
    for h in range(1, n + 1):
        best[h] = max(best[h], best[h - 1])
    P._antichain_union_table = best
    return best


def brute_force_k_antichain_union(P, k):
    """Independent exhaustive oracle for max_k_antichain_union (small posets)."""
    table = _antichain_union_table(P)
    return table[min(k, P.n)]


def is_strongly_sperner(P, oracle_threshold=DEFAULT_ORACLE_THRESHOLD):
    """True iff for every k the best k-antichain union is just the k largest ranks."""
    sizes = sorted(P.rank_vector, reverse=True)
    total = 0
    for k in range(1, len(sizes) + 1):
        total += sizes[k - 1]
        if max_k_antichain_union(P, k, oracle_threshold) != total:
            return False
    return True


def is_peck(P, oracle_threshold=DEFAULT_ORACLE_THRESHOLD):
    """Rank-symmetric, rank-unimodal, and strongly Sperner.

    Order of checks: rank profile (cheap reject), then the unitary fast path
    (sufficient, not necessary: Peck needs only SOME order-raising operator to
    have isomorphic powers, and the all-ones one may fail), then the
    authoritative d_k computation.
    """
    symmetric, unimodal = rank_profile(P)
    if not (symmetric and unimodal):
        return False
    if is_unitary_peck(P):
        return True
    return is_strongly_sperner(P, oracle_threshold)


# -- symmetric chain decompositions ---------------------------------------------


@dataclass(frozen=True)
class ChainDecomposition:
    """Partition of a poset into saturated chains symmetric about the middle:
    a chain starting at rank i ends at rank max_rank - i."""

    host: GradedPoset
    chains: tuple

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(tuple(c) for c in self.chains))
        flat = sorted(x for c in self.chains for x in c)
        if flat != list(range(self.host.n)):
            raise InvalidChainDecomposition("chains do not partition the elements")
        covers = self.host.cover_set
        top = self.host.max_rank
        for c in self.chains:
            if not c:
                raise InvalidChainDecomposition("empty chain")
            for a, b in zip(c, c[1:]):
                if (a, b) not in covers:
                    raise InvalidChainDecomposition(f"({a}, {b}) is not a cover")
            if self.host.ranks[c[0]] + self.host.ranks[c[-1]] != top:
                raise InvalidChainDecomposition(
                    f"chain at ranks {self.host.ranks[c[0]]}..{self.host.ranks[c[-1]]}"
                    f" is not symmetric in rank {top}"
                )


def scd_boolean(n):
    """Bracketing symmetric chain decomposition of B_n.

    Read a subset as brackets (absent point = open, present = close) and match
    them; the matched pattern is constant along a chain, and the chain walks
    the unmatched opens left to right.
    """
    P = boolean_algebra(n)
    groups = {}
    for x in range(1 << n):
        bottom = x
        opens = 0
        for i in range(n):
            if not (x >> i) & 1:
                opens += 1
            elif opens > 0:
                opens -= 1
            else:
                bottom &= ~(1 << i)
        groups.setdefault(bottom, []).append(x)
    chains = [
        tuple(sorted(groups[b], key=lambda v: v.bit_count())) for b in sorted(groups)
    ]
    return ChainDecomposition(P, tuple(chains))


def scd_transport(D, f):
    """Push a symmetric chain decomposition through a bijective morphism."""
    if not f.is_bijective():
        raise InvalidParams("transport needs a bijective morphism")
    if D.host.ranks != f.source.ranks or D.host.covers != f.source.covers:
        raise InvalidParams("decomposition host differs from morphism source")
    covers = f.target.cover_set
    chains = []
    for c in D.chains:
        img = tuple(f(x) for x in c)
        for a, b in zip(img, img[1:]):
            if (a, b) not in covers:
                raise ImageChainNotSaturated(f"transported pair ({a}, {b}) not a cover")
        chains.append(img)
    return ChainDecomposition(f.target, tuple(chains))


def scd_h_boolean(n):
    """SCD of H(B_n), assembled from per-component copies of the B_{n-1} SCD
    pulled back through the explicit component decomposition."""
    witness = h_bn_decomposition(n)
    inverse = [0] * witness.target.n
    for i, j in enumerate(witness.image):
        inverse[j] = i
    base = scd_boolean(n - 1)
    half = 1 << (n - 1)
    chains = []
    for copy in range(n):
        for c in base.chains:
            chains.append(tuple(inverse[copy * half + x] for x in c))
    return ChainDecomposition(witness.source, tuple(chains))
