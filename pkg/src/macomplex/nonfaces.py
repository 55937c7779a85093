"""Minimal non-faces: enumeration, reconstruction, and their intersection graph.

A minimal non-face is a vertex set that is not a face although all of its
proper subsets are.  Both directions of the correspondence between a
complex and its minimal non-faces reduce to minimal-transversal (hitting
set) computations: a set is a non-face exactly when it meets the
complement of every facet, so the minimal non-faces are the minimal
transversals of the facet complements; dually, the facets of the complex
cut out by a family of non-faces are the complements of the family's
minimal transversals.
"""

from __future__ import annotations

from typing import Iterable

from .complexes import SimplicialComplex, VertexSet, _compress_mask
from .errors import GhostVertexError, InputError


class NonfaceFamily:
    """An antichain of vertex sets of size >= 2 inside 1..n."""

    __slots__ = ("n", "members")

    def __init__(self, n: int, members: Iterable):
        sets = []
        for m in members:
            vs = m if isinstance(m, VertexSet) else VertexSet(m)
            if vs.mask >> n:
                raise InputError(f"non-face {list(vs.vertices())} uses a vertex above n={n}")
            if len(vs) < 2:
                raise InputError(
                    f"non-face {list(vs.vertices())} has fewer than 2 vertices"
                )
            sets.append(vs.mask)
        uniq = sorted(set(sets))
        for i, a in enumerate(uniq):
            for b in uniq[i + 1 :]:
                if a & ~b == 0 or b & ~a == 0:
                    raise InputError("non-face family is not an antichain")
        self.n = n
        self.members = tuple(VertexSet.from_mask(m) for m in uniq)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "members": [list(m.vertices()) for m in self.members]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "NonfaceFamily":
        try:
            return cls(int(data["n"]), [VertexSet(m) for m in data["members"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"non-face JSON must be {{'n': int, 'members': [[int,...],...]}}: {exc}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, NonfaceFamily):
            return self.n == other.n and self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        return f"NonfaceFamily(n={self.n}, members={[list(m.vertices()) for m in self.members]})"


class NonfaceGraph:
    """Intersection graph of a non-face family with its connected components."""

    __slots__ = ("members", "edges", "components")

    def __init__(self, members: tuple, edges: tuple, components: tuple):
        self.members = members
        self.edges = edges
        self.components = components

    @property
    def has_edges(self) -> bool:
        return bool(self.edges)

    def __repr__(self) -> str:
        return (
            f"NonfaceGraph(nodes={len(self.members)}, edges={list(self.edges)}, "
            f"components={list(self.components)})"
        )


def _minimal_transversals(sets: list[int], universe: int) -> list[int]:
    """Minimal hitting sets of a family of bitmask sets, ascending by mask."""
    transversals = [0]
    for s in sets:
        s &= universe
        if s == 0:
            return []
        hit = []
        miss = []
        for t in transversals:
            (hit if t & s else miss).append(t)
        candidates = list(hit)
        for t in miss:
            rest = s
            while rest:
                low = rest & -rest
                candidates.append(t | low)
                rest ^= low
        kept: list[int] = []
        for c in sorted(set(candidates), key=lambda m: (m.bit_count(), m)):
            if not any(k & c == k for k in kept):
                kept.append(c)
        transversals = kept
    return sorted(transversals)


def minimal_nonfaces(K: SimplicialComplex) -> NonfaceFamily:
    """All inclusion-minimal non-faces of ``K``.

    Every singleton must be a face; a vertex in no facet would be a
    one-element non-face, which the family type excludes.
    """
    covered = K.covered_vertices().mask
    full = (1 << K.n) - 1
    missing = full & ~covered
    if missing:
        raise GhostVertexError((missing & -missing).bit_length())
    complements = [full & ~f.mask for f in K.facets]
    members = _minimal_transversals(complements, full)
    return NonfaceFamily(K.n, [VertexSet.from_mask(m) for m in members])


def reconstruct(M: NonfaceFamily, n: int | None = None) -> SimplicialComplex:
    """The complex on 1..n whose faces are the sets containing no member of ``M``."""
    n = M.n if n is None else n
    full = (1 << n) - 1
    member_masks = [m.mask for m in M.members]
    if any(m & ~full for m in member_masks):
        raise InputError(f"family members do not fit in 1..{n}")
    facets = [
        VertexSet.from_mask(full ^ t) for t in _minimal_transversals(member_masks, full)
    ]
    return SimplicialComplex(n, facets)


def support(M: NonfaceFamily) -> VertexSet:
    """Union of all members of the family."""
    mask = 0
    for m in M.members:
        mask |= m.mask
    return VertexSet.from_mask(mask)


def restrict_family(M: NonfaceFamily, I: VertexSet) -> NonfaceFamily:
    """Members of ``M`` contained in ``I`` (labels unchanged)."""
    if I.mask >> M.n:
        raise InputError(f"subset {list(I.vertices())} not contained in 1..{M.n}")
    return NonfaceFamily(M.n, [m for m in M.members if m.mask & ~I.mask == 0])


def relabel_family(M: NonfaceFamily, I: VertexSet) -> NonfaceFamily:
    """Rank-relabel a family whose members all lie in ``I`` onto 1..|I|."""
    for m in M.members:
        if m.mask & ~I.mask:
            raise InputError(f"member {list(m.vertices())} is not contained in I")
    return NonfaceFamily(
        len(I), [VertexSet.from_mask(_compress_mask(m.mask, I.mask)) for m in M.members]
    )


def ghost_split(M: NonfaceFamily, n: int | None = None) -> tuple[SimplicialComplex, int]:
    """Split off the vertices in no member as a cone (simplex) factor.

    Returns the reduced complex on the support (relabelled onto 1..n') and
    the number of cone vertices n - n'; the original complex is the join of
    the two up to relabelling.
    """
    n = M.n if n is None else n
    nu = support(M)
    if nu.mask >> n:
        raise InputError(f"family members do not fit in 1..{n}")
    reduced = reconstruct(relabel_family(M, nu), len(nu))
    return reduced, n - len(nu)


def intersection_graph(M: NonfaceFamily) -> NonfaceGraph:
    """Graph on the members with an edge for each intersecting pair."""
    members = M.members
    k = len(members)
    edges = tuple(
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if members[i].mask & members[j].mask
    )
    adjacency = {i: set() for i in range(k)}
    for i, j in edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    seen: set[int] = set()
    components = []
    for i in range(k):
        if i in seen:
            continue
        stack = [i]
        comp = []
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            comp.append(v)
            stack.extend(adjacency[v] - seen)
        components.append(tuple(sorted(comp)))
    return NonfaceGraph(members, edges, tuple(components))


def component_decomposition(M: NonfaceFamily) -> list[tuple[NonfaceFamily, VertexSet]]:
    """Connected components of the intersection graph with their supports.

    The supports are pairwise disjoint and the complex of ``M`` on its
    support is the join of the component complexes.
    """
    graph = intersection_graph(M)
    out = []
    for comp in graph.components:
        part = NonfaceFamily(M.n, [graph.members[i] for i in comp])
        out.append((part, support(part)))
    return out
