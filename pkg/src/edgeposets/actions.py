"""Group actions on graded posets by rank-preserving automorphisms: induced
actions on boolean algebras and on edge posets, quotient posets, the
comparison map q from E(P)/G to E(P/G), the four equivalent common cover
transitivity tests, and product/wreath constructions of actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .edges import EdgePoset, edge_poset, h_poset
from .errors import InternalInconsistency, InvalidParams
from .perms import direct_product, symmetric, wreath
from .poset import GradedPoset, PosetMorphism, boolean_algebra, combine


class PosetAction:
    """A PermGroup acting on a GradedPoset.

    The action is stored as one element-permutation per group generator;
    the map for an arbitrary group element is composed on demand and cached.
    Each generator map is verified to be a rank-preserving automorphism, and
    the extension to the whole group is verified to respect every product
    g = s * h encountered while composing, which pins the action to the
    group's relations.
    """

    def __init__(self, group, poset, gen_maps):
        gen_maps = tuple(tuple(m) for m in gen_maps)
        if len(gen_maps) != len(group.generators):
            raise InvalidParams("one element map per group generator required")
        cover_set = poset.cover_set
        rng = list(range(poset.n))
        for g, m in zip(group.generators, gen_maps):
            if sorted(m) != rng:
                raise InvalidParams(f"map for {g.cycle_string()} is not a bijection")
            for i in range(poset.n):
                if poset.ranks[m[i]] != poset.ranks[i]:
                    raise InvalidParams(
                        f"map for {g.cycle_string()} does not preserve rank at {i}"
                    )
            for x, y in poset.covers:
                if (m[x], m[y]) not in cover_set:
                    raise InvalidParams(
                        f"map for {g.cycle_string()} does not preserve cover ({x}, {y})"
                    )
        self.group = group
        self.poset = poset
        self.gen_maps = gen_maps

    def __repr__(self):
        return f"PosetAction(order={self.group.order}, poset={self.poset!r})"

    @cached_property
    def element_maps(self):
        """dict: group element -> element permutation (tuple), whole group."""
        n = self.poset.n
        ident = self.group.identity
        maps = {ident: tuple(range(n))}
        frontier = [ident]
        while frontier:
            new = []
            for cur in frontier:
                cm = maps[cur]
                for s, sm in zip(self.group.generators, self.gen_maps):
                    nxt = s * cur
                    nm = tuple(sm[cm[i]] for i in range(n))
                    prev = maps.get(nxt)
                    if prev is None:
                        maps[nxt] = nm
                        new.append(nxt)
                    elif prev != nm:
                        raise InternalInconsistency(
                            "generator maps violate a group relation"
                        )
            frontier = new
        if len(maps) != self.group.order:
            raise InternalInconsistency("action table does not cover the group")
        return maps

    def act(self, g, x):
        return self.element_maps[g][x]

    @cached_property
    def orbit_of(self):
        """orbit_of[x]: orbit index; orbits numbered by ascending least element."""
        n = self.poset.n
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for m in self.gen_maps:
            for x in range(n):
                ra, rb = find(x), find(m[x])
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
        reps = sorted({find(x) for x in range(n)})
        index = {r: i for i, r in enumerate(reps)}
        return tuple(index[find(x)] for x in range(n))

    @cached_property
    def orbit_reps(self):
        """Ascending least element of each orbit."""
        seen = {}
        for x in range(self.poset.n):
            seen.setdefault(self.orbit_of[x], x)
        return tuple(seen[i] for i in range(len(seen)))

    def stabilizer_maps(self, z):
        return [m for m in self.element_maps.values() if m[z] == z]


@dataclass(frozen=True)
class QuotientPoset:
    """Orbits of an action, ordered by comparability of representatives.

    Orbit covers are exactly the images of base covers: every base relation
    factors through rank steps, so the quotient order is generated by them.
    """

    action: PosetAction
    orbit_of: tuple
    reps: tuple
    poset: GradedPoset


def quotient(A):
    orbit_of = A.orbit_of
    reps = A.orbit_reps
    P = A.poset
    ranks = tuple(P.ranks[r] for r in reps)
    covers = sorted({(orbit_of[x], orbit_of[y]) for x, y in P.covers})
    labels = tuple(f"[{P.label(r)}]" for r in reps)
    return QuotientPoset(A, orbit_of, reps, GradedPoset(ranks, covers, labels))


def induced_bn_action(G):
    """Induced action of a degree-n permutation group on B_n: g.x = {g.i : i in x}."""
    n = G.degree
    P = boolean_algebra(n)
    maps = []
    for g in G.generators:
        m = []
        for x in range(P.n):
            y = 0
            bits = x
            while bits:
                low = bits & -bits
                y |= 1 << g(low.bit_length() - 1)
                bits ^= low
            m.append(y)
        maps.append(m)
    return PosetAction(G, P, maps)


def is_boolean_poset(P):
    """Structural check that P is boolean_algebra(n) for some n (bit-mask encoded)."""
    n = P.n.bit_length() - 1
    if P.n != 1 << n:
        return False
    if any(P.ranks[x] != x.bit_count() for x in range(P.n)):
        return False
    return len(P.covers) == n * (1 << (n - 1)) if n > 0 else len(P.covers) == 0


def action_on_edges(A, which="E"):
    """Same group acting pairwise on E(P) or H(P): g.(x, y) = (gx, gy)."""
    if which == "E":
        ep = edge_poset(A.poset)
    elif which == "H":
        ep = h_poset(A.poset)
    else:
        raise InvalidParams("which must be 'E' or 'H'")
    maps = []
    for m in A.gen_maps:
        maps.append(tuple(ep.index[(m[x], m[y])] for x, y in ep.pairs))
    return PosetAction(A.group, ep.poset, maps), ep


@dataclass(frozen=True)
class QMap:
    """The comparison morphism q: E(P)/G -> E(P/G), with its flags.

    q is always surjective; it is bijective precisely when the action is CCT,
    and even then need not be an isomorphism.
    """

    morphism: PosetMorphism
    bijective: bool
    isomorphism: bool
    edge_quotient: QuotientPoset  # E(P)/G
    quotient_edges: EdgePoset     # E(P/G)
    base_quotient: QuotientPoset  # P/G


def q_map(A):
    quot = quotient(A)
    eact, ep = action_on_edges(A, "E")
    eq = quotient(eact)
    qe = edge_poset(quot.poset)
    image = []
    for rep in eq.reps:
        x, y = ep.pairs[rep]
        image.append(qe.index[(quot.orbit_of[x], quot.orbit_of[y])])
    f = PosetMorphism(eq.poset, qe.poset, image)
    if len(set(image)) != qe.poset.n:
        raise InternalInconsistency("q failed to be surjective")
    bij = eq.poset.n == qe.poset.n
    return QMap(f, bij, bij and f.is_isomorphism(), eq, qe, quot)


class CCTResult(NamedTuple):
    ok: bool
    witness: tuple | None
    method: str


CCT_METHODS = ("direct", "dual", "q-bijective", "rank-counts")


def is_cct(A, method="direct"):
    """Common cover transitivity of an action, by any of four equivalent tests.

    direct:      whenever x, y are lower covers of z in one orbit, some
                 stabilizer element of z carries x to y; witness (x, y, z) on
                 failure, found in canonical scan order (z ascending, then the
                 ascending pair of lower covers).
    dual:        the upper-cover mirror; witness (y, z, x) with y, z upper
                 covers of x.
    q-bijective: q: E(P)/G -> E(P/G) is a bijection.
    rank-counts: E(P)/G and E(P/G) have equal rank vectors.
    """
    if method == "direct":
        return _cct_scan(A, upward=False)
    if method == "dual":
        return _cct_scan(A, upward=True)
    if method == "q-bijective":
        return CCTResult(q_map(A).bijective, None, method)
    if method == "rank-counts":
        eact, _ = action_on_edges(A, "E")
        left = quotient(eact).poset.rank_vector
        right = edge_poset(quotient(A).poset).poset.rank_vector
        return CCTResult(left == right, None, method)
    raise InvalidParams(f"unknown method {method!r}; pick from {CCT_METHODS}")


def _cct_scan(A, upward):
    P = A.poset
    orbit_of = A.orbit_of
    neighbors = P.up if upward else P.down
    maps = A.element_maps
    name = "dual" if upward else "direct"
    for z in range(P.n):
        adjacent = neighbors[z]
        if len(adjacent) < 2:
            continue
        stab = None
        for i, x in enumerate(adjacent):
            for y in adjacent[i + 1 :]:
                if orbit_of[x] != orbit_of[y]:
                    continue
                if stab is None:
                    stab = [m for m in maps.values() if m[z] == z]
                if not any(m[x] == y for m in stab):
                    witness = (x, y, z)
                    return CCTResult(False, witness, name)
    return CCTResult(True, None, name)


def check_cct_triple(A, x, y, z):
    """True iff the specific triple satisfies the common-cover condition:
    some stabilizer element of z carries x to y."""
    if x not in A.poset.down[z] or y not in A.poset.down[z]:
        raise InvalidParams("x and y must be lower covers of z")
    if A.orbit_of[x] != A.orbit_of[y]:
        raise InvalidParams("x and y must lie in one orbit")
    return any(m[x] == y for m in A.stabilizer_maps(z))


# -- constructions of actions ---------------------------------------------------


def product_action(A, B):
    """(G x H) acting coordinatewise on the cartesian product poset."""
    G = direct_product(A.group, B.group)
    P = combine(A.poset, B.poset, "cartesian-product")
    qn = B.poset.n
    maps = []
    for m in A.gen_maps:
        maps.append(tuple(m[i] * qn + j for i in range(A.poset.n) for j in range(qn)))
    for m in B.gen_maps:
        maps.append(tuple(i * qn + m[j] for i in range(A.poset.n) for j in range(qn)))
    return PosetAction(G, P, maps)


def wreath_action(A, l):
    """G wr S_l acting on the l-fold product poset: the l block copies of G act
    coordinatewise and S_l permutes the coordinates."""
    if l < 1:
        raise InvalidParams("need l >= 1")
    G = wreath(A.group, symmetric(l))
    P = A.poset
    power = P
    for _ in range(l - 1):
        power = combine(power, P, "cartesian-product")
    n = P.n
    size = n**l

    def decode(t):
        coords = []
        for b in range(l):
            coords.append(t // n ** (l - 1 - b) % n)
        return coords

    def encode(coords):
        t = 0
        for c in coords:
            t = t * n + c
        return t

    maps = []
    for b in range(l):
        for m in A.gen_maps:
            out = []
            for t in range(size):
                coords = decode(t)
                coords[b] = m[coords[b]]
                out.append(encode(coords))
            maps.append(out)
    for h in symmetric(l).generators:
        out = []
        for t in range(size):
            coords = decode(t)
            moved = [0] * l
            for b in range(l):
                moved[h(b)] = coords[b]
            out.append(encode(moved))
        maps.append(out)
    return PosetAction(G, power, maps)


# -- complement self-duality ------------------------------------------------------


@dataclass(frozen=True)
class SelfDualityWitnesses:
    """Complement-induced isomorphisms E(B_n/G) -> E(B_n/G)^op and
    E(B_n)/G -> (E(B_n)/G)^op."""

    quotient_edge: PosetMorphism  # E(B_n/G) onto its dual
    edge_quotient: PosetMorphism  # E(B_n)/G onto its dual


def complement_self_duality(A):
    """Build and verify both complement-induced self-duality witnesses for an
    induced action on a boolean algebra.  Holds for every action, CCT or not."""
    if not is_boolean_poset(A.poset):
        raise InvalidParams("requires an induced action on a boolean algebra")
    n = A.poset.n.bit_length() - 1
    full = (1 << n) - 1
    quot = quotient(A)
    qe = edge_poset(quot.poset)
    comp_orbit = [quot.orbit_of[full ^ quot.reps[o]] for o in range(quot.poset.n)]
    image = [qe.index[(comp_orbit[oy], comp_orbit[ox])] for ox, oy in qe.pairs]
    f_qe = PosetMorphism(qe.poset, qe.poset.dual(), image)
    if not f_qe.is_isomorphism():
        raise InternalInconsistency("E(B_n/G) complement witness is not an isomorphism")

    eact, ep = action_on_edges(A, "E")
    eq = quotient(eact)
    image2 = []
    for rep in eq.reps:
        x, y = ep.pairs[rep]
        image2.append(eq.orbit_of[ep.index[(full ^ y, full ^ x)]])
    f_eq = PosetMorphism(eq.poset, eq.poset.dual(), image2)
    if not f_eq.is_isomorphism():
        raise InternalInconsistency("E(B_n)/G complement witness is not an isomorphism")
    return SelfDualityWitnesses(f_qe, f_eq)
