"""Brute-force cellular chain model of the moment-angle complex.

Each disk coordinate carries the CW structure with one cell in dimensions
0, 1 and 2 (point on the circle, rest of the circle, interior).  A product
cell of the n-fold disk power lies in the moment-angle complex exactly
when the set of coordinates using the 2-cell is a face of K; the circle
coordinates are free.  Cells are therefore pairs (sigma, omega) of
disjoint vertex sets with sigma a face, in dimension 2|sigma| + |omega|,
and the boundary moves one coordinate at a time from sigma to omega:

    d(sigma, omega) = sum over i in sigma of
        (-1)^{number of omega coordinates below i} (sigma - i, omega + i)

since only the 2-cell has a nonzero differential (its boundary is the
1-cell) and passing the boundary operator across an odd-degree factor
flips the sign.  This engine never looks at full subcomplexes, so it is an
independent check of the subset-decomposition route.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, VertexSet, _submasks
from .errors import ResourceError
from .linalg import rank_sparse

DEFAULT_CELL_LIMIT = 2_000_000


class MomentAngleCellComplex:
    """Cellular chain complex of Z(K; (D^2, S^1)) over the rationals."""

    __slots__ = ("complex", "cells", "boundaries")

    def __init__(self, complex: SimplicialComplex, cells, boundaries):
        self.complex = complex
        self.cells = cells  # per dimension: list of (sigma_mask, omega_mask)
        self.boundaries = boundaries  # per dimension: list of {row: sign} per cell

    @property
    def cell_count(self) -> int:
        return sum(len(c) for c in self.cells)

    @property
    def top_dimension(self) -> int:
        return len(self.cells) - 1

    def betti_numbers(self) -> list[int]:
        """Rational Betti numbers by degree, trailing zeros trimmed."""
        top = self.top_dimension
        ranks = [0] * (top + 2)
        for d in range(top + 1):
            rows = [row for row in self.boundaries[d] if row]
            ranks[d] = rank_sparse(rows)
        betti = [len(self.cells[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1)]
        while len(betti) > 1 and betti[-1] == 0:
            betti.pop()
        return betti

    def validate(self) -> None:
        """Assert the boundary squares to zero."""
        for d in range(2, self.top_dimension + 1):
            lower = self.boundaries[d - 1]
            for row in self.boundaries[d]:
                acc: dict[int, int] = {}
                for mid, v in row.items():
                    for c, w in lower[mid].items():
                        acc[c] = acc.get(c, 0) + v * w
                assert all(x == 0 for x in acc.values()), f"d o d != 0 in dimension {d}"

    def to_json_dict(self, include_boundary: bool = False) -> dict:
        cells = [
            {
                "sigma": list(VertexSet.from_mask(s).vertices()),
                "omega": list(VertexSet.from_mask(w).vertices()),
            }
            for dim_cells in self.cells
            for s, w in dim_cells
        ]
        out: dict = {"cells": cells}
        if include_boundary:
            boundary = []
            for d in range(1, self.top_dimension + 1):
                entries = [
                    [row_idx, col_idx, sign]
                    for col_idx, row in enumerate(self.boundaries[d])
                    for row_idx, sign in sorted(row.items())
                ]
                boundary.append({"dim": d, "entries": entries})
            out["boundary"] = boundary
        return out


def build(K: SimplicialComplex, cell_limit: int = DEFAULT_CELL_LIMIT) -> MomentAngleCellComplex:
    """Enumerate the cells of Z(K) and assemble the boundary matrices.

    The cell count sum over faces sigma of 2^(n - |sigma|) is checked
    against ``cell_limit`` before any enumeration starts.
    """
    n = K.n
    if (1 << n) > cell_limit:  # the empty face alone contributes 2^n cells
        raise ResourceError(
            f"at least 2^{n} cells exceed the configured limit of {cell_limit}"
        )
    faces = sorted(K.face_masks(), key=lambda m: (m.bit_count(), m))
    total = sum(1 << (n - f.bit_count()) for f in faces)
    if total > cell_limit:
        raise ResourceError(
            f"{total} cells exceed the configured limit of {cell_limit}"
        )
    full = (1 << n) - 1
    by_dim: dict[int, list[tuple[int, int]]] = {}
    for sigma in faces:
        base = 2 * sigma.bit_count()
        rest = full & ~sigma
        for omega in _submasks(rest):
            by_dim.setdefault(base + omega.bit_count(), []).append((sigma, omega))
    top = max(by_dim)
    cells = [sorted(by_dim.get(d, [])) for d in range(top + 1)]
    index = [{cell: i for i, cell in enumerate(dim_cells)} for dim_cells in cells]
    boundaries: list[list[dict[int, int]]] = [[] for _ in range(top + 1)]
    for d in range(top + 1):
        lower = index[d - 1] if d else {}
        for sigma, omega in cells[d]:
            row: dict[int, int] = {}
            rest = sigma
            while rest:
                low = rest & -rest
                rest ^= low
                sign = -1 if (omega & (low - 1)).bit_count() % 2 else 1
                row[lower[(sigma ^ low, omega | low)]] = sign
            boundaries[d].append(row)
    return MomentAngleCellComplex(K, cells, boundaries)


def oracle_betti(C: MomentAngleCellComplex) -> list[int]:
    """Betti numbers of the cell complex; degree 0 is always 1."""
    betti = C.betti_numbers()
    assert betti[0] == 1, "moment-angle complexes are connected"
    return betti
