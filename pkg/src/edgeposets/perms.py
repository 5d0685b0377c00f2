"""Permutations of {0..n-1}, fully enumerated permutation groups, orbit and
stabilizer queries, and constructors for the group families used throughout:
symmetric, cyclic, dihedral (acting on n-gon vertices), elementary abelian
2-groups, hyperoctahedral, wreath and direct products, left-regular actions,
and automorphism groups of rooted trees acting on their leaves.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import (
    GroupTooLarge,
    InternalInconsistency,
    InvalidGenerators,
    InvalidParams,
    NotAGroup,
    NotCommuting,
    NotInvolutions,
)
from .poset import GradedPoset

DEFAULT_GROUP_CAP = 2_000_000


@total_ordering
class Permutation:
    """A bijection of {0..n-1} in one-line notation.

    Composition is function composition: (a * b)(x) = a(b(x)).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InvalidParams(f"not a bijection of 0..{len(images) - 1}: {images}")
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r})"

    def cycle_string(self):
        """Cycle notation, 1-indexed, fixed points omitted; identity is '()'."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
        return "".join(out) if out else "()"

    @classmethod
    def from_cycles(cls, text, degree=None):
        """Parse 1-indexed cycle notation like '(1 2 3)(4 5)'; '()' is identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise InvalidGenerators(f"cannot parse cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if any(p < 1 for p in pts):
                raise InvalidGenerators(f"points are 1-indexed: {text!r}")
            if len(set(pts)) != len(pts):
                raise InvalidGenerators(f"repeated point inside a cycle: {text!r}")
            cycles.append([p - 1 for p in pts])
        top = max((p for cyc in cycles for p in cyc), default=-1) + 1
        n = max(top, degree or 0)
        images = list(range(n))
        moved = set()
        for cyc in cycles:
            for p in cyc:
                if p in moved:
                    raise InvalidGenerators(f"point repeated across cycles: {text!r}")
                moved.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)


class PermGroup:
    """Subgroup of S_n with its full element list enumerated at construction.

    Elements are closed under composition and inverse and stored in sorted
    one-line order, so iteration is deterministic.  Enumeration is capped
    (default 2,000,000) to keep everything desk-scale.
    """

    def __init__(self, degree, generators, cap=DEFAULT_GROUP_CAP):
        generators = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in generators)
        for g in generators:
            if g.degree != degree:
                raise InvalidParams(f"generator degree {g.degree} != {degree}")
        ident = Permutation.identity(degree)
        elements = {ident}
        frontier = [ident]
        gens = [g for g in generators if not g.is_identity()]
        while frontier:
            new = []
            for cur in frontier:
                for g in gens:
                    nxt = g * cur
                    if nxt not in elements:
                        if len(elements) >= cap:
                            raise GroupTooLarge(f"group order exceeds cap {cap}")
                        elements.add(nxt)
                        new.append(nxt)
            frontier = new
        self.degree = degree
        self.generators = generators
        self.elements = tuple(sorted(elements))
        self.element_set = frozenset(elements)
        self.order = len(elements)

    def __contains__(self, g):
        return g in self.element_set

    def __repr__(self):
        gens = ";".join(g.cycle_string() for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens={gens})"

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    def generator_string(self):
        """Canonical id: cycle strings of a greedy minimal generating set."""
        gens = minimal_generators(self)
        return ";".join(g.cycle_string() for g in gens) if gens else "()"


def generate(generators, cap=DEFAULT_GROUP_CAP, degree=None):
    """Close a generator list; idempotent on full element lists."""
    generators = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    if degree is None:
        if not generators:
            raise InvalidParams("need at least one generator or an explicit degree")
        degree = generators[0].degree
    return PermGroup(degree, generators, cap)


def minimal_generators(G):
    """Greedy small generating set, deterministic over the sorted element list."""
    gens = []
    closed = {G.identity}
    for g in G.elements:
        if g in closed:
            continue
        gens.append(g)
        closed = set(PermGroup(G.degree, gens).elements)
        if len(closed) == G.order:
            break
    return gens


# -- named families -----------------------------------------------------------


def trivial(n):
    return PermGroup(n, [])


def symmetric(n):
    if n < 0:
        raise InvalidParams("symmetric needs n >= 0")
    if n <= 1:
        return trivial(max(n, 1))
    gens = [Permutation([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(Permutation(list(range(1, n)) + [0]))
    return PermGroup(n, gens)


def cyclic(n):
    if n < 1:
        raise InvalidParams("cyclic needs n >= 1")
    if n == 1:
        return trivial(1)
    return PermGroup(n, [Permutation(list(range(1, n)) + [0])])


def dihedral(n):
    """Rotations and reflections of the n-gon on its vertex set {0..n-1}.

    For n >= 3 this has order 2n; for n <= 2 the vertex action collapses
    (the reflection fixes both vertices of a 2-gon).
    """
    if n < 1:
        raise InvalidParams("dihedral needs n >= 1")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, ref])


def elementary_abelian_2(involutions, degree=None):
    """Group generated by pairwise commuting involutions; validated as such."""
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in involutions]
    if degree is None:
        if not gens:
            raise InvalidParams("need at least one involution or explicit degree")
        degree = gens[0].degree
    for g in gens:
        if not (g * g).is_identity():
            raise NotInvolutions(f"{g.cycle_string()} has order > 2")
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if g * h != h * g:
                raise NotCommuting(f"{g.cycle_string()} and {h.cycle_string()} do not commute")
    return PermGroup(degree, gens)


def hyperoctahedral(n):
    """Signed permutations of n coordinates, degree 2n, pairing points (2i, 2i+1)."""
    if n < 1:
        raise InvalidParams("hyperoctahedral needs n >= 1")
    return wreath(symmetric(2), symmetric(n))


def named_group(family, params):
    """Dispatcher for the named families (CLI-facing)."""
    if family == "symmetric":
        return symmetric(int(params))
    if family == "cyclic":
        return cyclic(int(params))
    if family == "dihedral":
        return dihedral(int(params))
    if family == "hyperoctahedral":
        return hyperoctahedral(int(params))
    if family == "trivial":
        return trivial(int(params))
    if family == "elementary-abelian-2":
        return elementary_abelian_2(params)
    raise InvalidParams(f"unknown group family {family!r}")


# -- products ------------------------------------------------------------------


def _shift(g, offset, degree):
    images = list(range(degree))
    for i, j in enumerate(g.images):
        images[i + offset] = j + offset
    return Permutation(images)


def direct_product(G, H, cap=DEFAULT_GROUP_CAP):
    """G x H acting coordinatewise: G on the first deg(G) points, H on the rest."""
    degree = G.degree + H.degree
    gens = [_shift(g, 0, degree) for g in G.generators]
    gens += [_shift(h, G.degree, degree) for h in H.generators]
    out = PermGroup(degree, gens, cap)
    if out.order != G.order * H.order:
        raise InternalInconsistency("direct product order mismatch")
    return out


def wreath(G, H, cap=DEFAULT_GROUP_CAP):
    """Wreath product of G (degree m) by H (degree l) on m*l points.

    Point b*m + j lies in block b; generators are the l block-copies of G's
    generators plus H's generators permuting the blocks.  The order is checked
    against |G|^l * |H|.
    """
    m, l = G.degree, H.degree
    degree = m * l
    gens = []
    for b in range(l):
        gens.extend(_shift(g, b * m, degree) for g in G.generators)
    for h in H.generators:
        images = [h(b) * m + j for b in range(l) for j in range(m)]
        gens.append(Permutation(images))
    out = PermGroup(degree, gens, cap)
    if out.order != G.order**l * H.order:
        raise InternalInconsistency("wreath product order mismatch")
    return out


# -- left-regular actions ------------------------------------------------------


def left_regular(table, cap=DEFAULT_GROUP_CAP):
    """Permutation group of left multiplications g -> (x -> g*x) of a finite
    group given by its multiplication table.

    The table is verified as a group: rows/columns are permutations, a
    two-sided identity and inverses exist, and associativity is checked
    exhaustively for orders <= 64.  The result is faithful, transitive, and
    of order n.
    """
    n = len(table)
    rng = list(range(n))
    for row in table:
        if len(row) != n or sorted(row) != rng:
            raise NotAGroup("rows must be permutations of 0..n-1")
    for c in range(n):
        if sorted(table[r][c] for r in range(n)) != rng:
            raise NotAGroup("columns must be permutations of 0..n-1")
    ident = None
    for e in range(n):
        if all(table[e][x] == x for x in range(n)) and all(
            table[x][e] == x for x in range(n)
        ):
            ident = e
            break
    if ident is None:
        raise NotAGroup("no two-sided identity")
    for g in range(n):
        if not any(table[g][h] == ident and table[h][g] == ident for h in range(n)):
            raise NotAGroup(f"element {g} has no inverse")
    if n <= 64:
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
    gens = [Permutation(row) for row in table]
    out = PermGroup(n, gens, cap)
    if out.order != n:
        raise InternalInconsistency("left-regular image has wrong order")
    return out


# -- stabilizers ----------------------------------------------------------------


def stabilizer_of_set(G, points):
    """All g in G with g . S = S setwise."""
    target = frozenset(points)
    return [g for g in G.elements if frozenset(g(p) for p in target) == target]


# -- rooted trees ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RootedTree:
    """A graded poset with a unique maximal element in which every non-root
    element has exactly one upper cover.  Leaves are the minimal elements."""

    poset: GradedPoset
    root: int
    leaves: tuple
    children: tuple


def rooted_tree(P):
    maximal = [i for i in range(P.n) if not P.up[i]]
    if len(maximal) != 1:
        raise InvalidParams(f"rooted tree needs exactly one root, found {len(maximal)}")
    root = maximal[0]
    for i in range(P.n):
        if i != root and len(P.up[i]) != 1:
            raise InvalidParams(f"element {i} has {len(P.up[i])} upper covers")
    leaves = tuple(i for i in range(P.n) if not P.down[i])
    return RootedTree(P, root, leaves, tuple(P.down[i] for i in range(P.n)))


def tree_from_children(spec):
    """Build a RootedTree from nested {"children": [...]} dicts; leaves are
    childless nodes.  Leaves get the low indices (left to right), internal
    nodes follow ordered by rank then traversal."""
    nodes = []  # (depth, children spec) in DFS preorder

    def walk(node, depth):
        idx = len(nodes)
        kids = node.get("children", []) if isinstance(node, dict) else []
        nodes.append([depth, []])
        for kid in kids:
            nodes[idx][1].append(walk(kid, depth + 1))
        return idx

    walk(spec, 0)
    height = max(d for d, _ in nodes)
    ranks = [height - d for d, _ in nodes]
    is_leaf = [not kids for _, kids in nodes]
    order = sorted(
        range(len(nodes)),
        key=lambda i: (0, i) if is_leaf[i] else (1, ranks[i], i),
    )
    newid = {old: new for new, old in enumerate(order)}
    covers = []
    for old, (_, kids) in enumerate(nodes):
        covers.extend((newid[kid], newid[old]) for kid in kids)
    final_ranks = [0] * len(nodes)
    for old, new in newid.items():
        final_ranks[new] = ranks[old]
    return rooted_tree(GradedPoset(final_ranks, covers))


def _tree_encoding(T):
    enc = {}

    def walk(v):
        enc[v] = tuple(sorted(walk(c) for c in T.children[v]))
        return enc[v]

    walk(T.root)
    return enc


def tree_automorphisms(T, cap=DEFAULT_GROUP_CAP):
    """Automorphism group of a rooted tree, acting on its leaves.

    Built recursively: per isomorphism class of child subtrees, the subtree
    automorphism generators on every member plus adjacent transpositions of
    isomorphic siblings (matched leaf-by-leaf in canonical order).  The group
    order is checked against the product of wreath orders class by class.
    """
    enc = _tree_encoding(T)

    def sorted_children(v):
        return sorted(T.children[v], key=lambda c: (enc[c], c))

    leaf_order = {}

    def canon_leaves(v):
        if v in leaf_order:
            return leaf_order[v]
        if not T.children[v]:
            out = (v,)
        else:
            out = tuple(x for c in sorted_children(v) for x in canon_leaves(c))
        leaf_order[v] = out
        return out

    def gen_maps(v):
        """Partial leaf->leaf dicts generating Aut of the subtree at v."""
        out = []
        kids = sorted_children(v)
        i = 0
        while i < len(kids):
            j = i
            while j < len(kids) and enc[kids[j]] == enc[kids[i]]:
                j += 1
            members = kids[i:j]
            for m in members:
                out.extend(gen_maps(m))
            for a, b in zip(members, members[1:]):
                la, lb = canon_leaves(a), canon_leaves(b)
                swap = dict(zip(la, lb))
                swap.update(zip(lb, la))
                out.append(swap)
            i = j
        return out

    def order_formula(v):
        total = 1
        kids = sorted_children(v)
        i = 0
        while i < len(kids):
            j = i
            while j < len(kids) and enc[kids[j]] == enc[kids[i]]:
                j += 1
            mult = j - i
            sub = order_formula(kids[i])
            fact = 1
            for t in range(2, mult + 1):
                fact *= t
            total *= sub**mult * fact
            i = j
        return total

    pos = {leaf: k for k, leaf in enumerate(T.leaves)}
    gens = []
    for mapping in gen_maps(T.root):
        images = list(range(len(T.leaves)))
        for a, b in mapping.items():
            images[pos[a]] = pos[b]
        gens.append(Permutation(images))
    G = PermGroup(len(T.leaves), gens, cap)
    if G.order != order_formula(T.root):
        raise InternalInconsistency("tree automorphism order mismatch")
    return G


# -- subgroup sweep ----------------------------------------------------------------


def _tuple_close(gens, n):
    ident = tuple(range(n))
    els = {ident}
    frontier = [ident]
    gens = [g for g in gens if g != ident]
    while frontier:
        new = []
        for cur in frontier:
            for g in gens:
                nxt = tuple(g[cur[i]] for i in range(n))
                if nxt not in els:
                    els.add(nxt)
                    new.append(nxt)
        frontier = new
    return frozenset(els)


def subgroup_sweep(n):
    """One PermGroup per subgroup conjugacy class of S_n, for n <= 5.

    Exhaustive: grow subgroups by closing each known subgroup with each outside
    element, dedupe by element set, then keep the lexicographically least
    subgroup of each conjugacy class.  Quotients by conjugate subgroups are
    isomorphic, so one representative per class suffices.
    """
    if not 1 <= n <= 5:
        raise InvalidParams("subgroup_sweep supports 1 <= n <= 5")
    from itertools import permutations as iperms

    full = sorted(iperms(range(n)))
    ident = tuple(range(n))
    subs = {frozenset([ident])}
    frontier = [frozenset([ident])]
    while frontier:
        new = []
        for H in frontier:
            base = list(H)
            for g in full:
                if g in H:
                    continue
                K = _tuple_close(base + [g], n)
                if K not in subs:
                    subs.add(K)
                    new.append(K)
        frontier = new
    inv = {g: tuple(sorted(range(n), key=lambda i: g[i])) for g in full}
    reps = []
    seen = set()
    for H in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if H in seen:
            continue
        cls = set()
        for g in full:
            gi = inv[g]
            cls.add(frozenset(tuple(g[h[gi[i]]] for i in range(n)) for h in H))
        seen |= cls
        reps.append(H)
    out = []
    for H in reps:
        G = PermGroup(n, [Permutation(h) for h in sorted(H)])
        gens = minimal_generators(G)
        out.append(PermGroup(n, gens))
    out.sort(key=lambda G: (G.order, G.elements))
    return out


# -- generator files ----------------------------------------------------------------


def parse_generator_lines(lines, degree=None):
    """One permutation per line in 1-indexed cycle notation; '#' comments and
    blank lines are skipped.  All permutations are padded to a common degree."""
    texts = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            texts.append(line)
    if not texts and degree is None:
        raise InvalidGenerators("no generators and no explicit degree")
    perms = [Permutation.from_cycles(t, degree=degree) for t in texts]
    top = max([p.degree for p in perms] + [degree or 0])
    return [Permutation(list(p.images) + list(range(p.degree, top))) for p in perms], top
