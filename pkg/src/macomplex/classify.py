"""The elliptic/hyperbolic dichotomy for moment-angle complexes.

Z(K; (D^2, S^1)) is rationally elliptic exactly when the minimal
non-faces of K are pairwise disjoint; the complex is then a product of
one odd sphere S^{2|m|-1} per non-face m and an even disk collecting the
cone vertices.  Any intersecting pair of non-faces produces a full
subcomplex on which all non-faces pairwise intersect, and that subcomplex
witnesses hyperbolicity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, VertexSet
from .errors import NotApplicableError
from .nonfaces import (
    NonfaceFamily,
    intersection_graph,
    minimal_nonfaces,
    restrict_family,
    support,
)


@dataclass(frozen=True)
class RationalTypeVerdict:
    """Outcome of the classification.

    Elliptic verdicts carry the sphere dimensions (ascending, all odd) and
    the even disk dimension; hyperbolic ones carry the witness vertex set
    and the non-faces living inside it.
    """

    kind: str  # "elliptic" | "hyperbolic"
    sphere_dims: tuple[int, ...] | None = None
    disk_dim: int | None = None
    witness_vertices: VertexSet | None = None
    witness_family: NonfaceFamily | None = None

    @property
    def is_elliptic(self) -> bool:
        return self.kind == "elliptic"

    def to_json_dict(self) -> dict:
        if self.is_elliptic:
            return {
                "kind": "elliptic",
                "spheres": list(self.sphere_dims),
                "disk": self.disk_dim,
            }
        return {
            "kind": "hyperbolic",
            "witness_I": list(self.witness_vertices.vertices()),
            "witness_nonfaces": [list(m.vertices()) for m in self.witness_family],
        }


def elliptic_model(M: NonfaceFamily, n: int | None = None) -> tuple[tuple[int, ...], int]:
    """Sphere dimensions {2|m|-1} and disk dimension 2(n - |support|).

    Only valid when the members are pairwise disjoint, i.e. when the
    complex of ``M`` is a join of simplex boundaries and a simplex.
    """
    n = M.n if n is None else n
    members = M.members
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a.mask & b.mask:
                raise NotApplicableError(
                    "non-faces intersect; there is no product-of-spheres model"
                )
    dims = tuple(sorted(2 * len(m) - 1 for m in members))
    return dims, 2 * (n - len(support(M)))


def find_witness(M: NonfaceFamily) -> tuple[VertexSet, NonfaceFamily]:
    """A vertex subset on which all restricted non-faces pairwise intersect.

    Taken as the union of an intersecting pair with minimal union size;
    minimality forces every further non-face inside the union to meet all
    the others.  Ties are broken by the lexicographically first pair in
    the family's canonical (ascending bitmask) order, which keeps the
    output deterministic.
    """
    members = M.members
    best = None
    best_union = 0
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a.mask & b.mask:
                union = a.mask | b.mask
                key = (union.bit_count(), (a.mask, b.mask))
                if best is None or key < best:
                    best = key
                    best_union = union
    if best is None:
        raise NotApplicableError("no intersecting pair of non-faces")
    witness = VertexSet.from_mask(best_union)
    return witness, restrict_family(M, witness)


def classify(K: SimplicialComplex) -> RationalTypeVerdict:
    """Decide rational ellipticity of Z(K; (D^2, S^1)).

    Purely combinatorial: elliptic iff the intersection graph of the
    minimal non-faces has no edge.
    """
    M = minimal_nonfaces(K)
    if not intersection_graph(M).has_edges:
        dims, disk = elliptic_model(M, K.n)
        return RationalTypeVerdict(kind="elliptic", sphere_dims=dims, disk_dim=disk)
    witness, family = find_witness(M)
    return RationalTypeVerdict(
        kind="hyperbolic", witness_vertices=witness, witness_family=family
    )
