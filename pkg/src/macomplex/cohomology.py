"""Rational cohomology of full subcomplexes and the Betti table of Z(K).

The cohomology of the moment-angle complex Z(K; (D^2, S^1)) splits
additively over vertex subsets I: the reduced degree-j cohomology of the
full subcomplex K_I contributes in total degree j + |I| + 1.  (This
placement is forced by Z(boundary of a k-simplex) being the sphere
S^{2k+1}: the single class has I of size k+1 and j = k-1.)  The product
pairs classes with disjoint supports through a cross cochain on the union
subcomplex and vanishes whenever the supports meet.

All linear algebra is exact: integer matrices for ranks, Fractions where
representative cocycles are required.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .complexes import SimplicialComplex, VertexSet, _bits
from .errors import InputError, ResourceError

HOCHSTER_MAX_N = 20
COCHAIN_MAX_N = 24


class CochainComplexQ:
    """Reduced simplicial cochain complex over Q of a downward-closed family.

    Faces are global-label bitmasks; the empty face sits in degree -1 and a
    face of cardinality c in degree c - 1.  Bases are sorted by bitmask, so
    every matrix, kernel vector and representative is deterministic.
    """

    def __init__(self, face_masks):
        faces = set(face_masks)
        faces.add(0)
        self.basis: dict[int, list[int]] = {}
        for m in sorted(faces, key=lambda m: (m.bit_count(), m)):
            self.basis.setdefault(m.bit_count() - 1, []).append(m)
        self.top = max(self.basis)
        self._index = {
            j: {m: i for i, m in enumerate(masks)} for j, masks in self.basis.items()
        }
        self._rank_cache: dict[int, int] = {}
        self._reps_cache: dict[int, list[dict[int, Fraction]]] = {}

    def degrees(self) -> range:
        return range(-1, self.top + 1)

    def coboundary_rows(self, j: int) -> list[dict[int, int]]:
        """Matrix of d_j : C^j -> C^{j+1} as sparse rows over the C^j basis."""
        rows = []
        index_j = self._index.get(j, {})
        for tau in self.basis.get(j + 1, []):
            row = {}
            pos = 0
            for v in _bits(tau):
                sigma = tau ^ (1 << (v - 1))
                col = index_j[sigma]
                row[col] = 1 if pos % 2 == 0 else -1
                pos += 1
            rows.append(row)
        return rows

    def _rank(self, j: int) -> int:
        if j not in self._rank_cache:
            self._rank_cache[j] = linalg.rank_sparse(self.coboundary_rows(j))
        return self._rank_cache[j]

    def betti(self, j: int) -> int:
        dim_j = len(self.basis.get(j, []))
        if dim_j == 0:
            return 0
        return dim_j - self._rank(j) - self._rank(j - 1)

    def betti_all(self) -> list[tuple[int, int]]:
        return [(j, self.betti(j)) for j in self.degrees()]

    def representatives(self, j: int) -> list[dict[int, Fraction]]:
        """Cocycle representatives spanning degree-j cohomology.

        Kernel vectors of d_j are taken in their deterministic order and
        kept whenever they enlarge the span of the coboundaries.
        """
        if j in self._reps_cache:
            return self._reps_cache[j]
        masks = self.basis.get(j, [])
        reps: list[dict[int, Fraction]] = []
        if masks:
            ncols = len(masks)
            ker = linalg.kernel_basis(
                linalg.dense_from_sparse(self.coboundary_rows(j), ncols), ncols
            )
            span = self._image_span(j)
            for vec in ker:
                if span.add(vec):
                    reps.append({m: x for m, x in zip(masks, vec) if x != 0})
        self._reps_cache[j] = reps
        return reps

    def _image_span(self, j: int) -> "linalg.RowSpan":
        """Span of the coboundaries inside C^j, as j-face-indexed vectors."""
        masks = self.basis.get(j, [])
        ncols = len(masks)
        rows = self.coboundary_rows(j - 1)  # rows indexed by j-faces
        nprev = len(self.basis.get(j - 1, []))
        span = linalg.RowSpan()
        for col in range(nprev):
            vec = [Fraction(0)] * ncols
            for r, row in enumerate(rows):
                v = row.get(col)
                if v:
                    vec[r] = Fraction(v)
            span.add(vec)
        return span

    def reduce_cocycle(self, j: int, cochain: dict[int, Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of a degree-j cocycle in the representative basis."""
        masks = self.basis.get(j, [])
        index = self._index.get(j, {})
        vec = [Fraction(0)] * len(masks)
        for m, v in cochain.items():
            if m not in index:
                raise InputError("cochain supported outside the subcomplex")
            vec[index[m]] = Fraction(v)
        # must be a cocycle
        for row in self.coboundary_rows(j):
            if sum(v * vec[c] for c, v in row.items()) != 0:
                raise InputError("cochain is not a cocycle")
        reps = self.representatives(j)
        rows_prev = self.coboundary_rows(j - 1)
        nprev = len(self.basis.get(j - 1, []))
        columns = []
        for col in range(nprev):
            column = [Fraction(0)] * len(masks)
            for r, row in enumerate(rows_prev):
                v = row.get(col)
                if v:
                    column[r] = Fraction(v)
            columns.append(column)
        for rep in reps:
            column = [Fraction(0)] * len(masks)
            for m, v in rep.items():
                column[index[m]] = v
            columns.append(column)
        solution = linalg.solve_columns(columns, vec)
        if solution is None:
            raise InputError("cocycle does not lie in the computed cohomology")
        return tuple(solution[nprev:])

    def validate(self) -> None:
        """Assert d_{j+1} o d_j = 0 for every degree."""
        for j in self.degrees():
            lower = self.coboundary_rows(j - 1)  # one row per j-face
            upper = self.coboundary_rows(j)  # columns indexed by j-faces
            for row in upper:
                acc: dict[int, int] = {}
                for mid, v in row.items():
                    for c, w in lower[mid].items():
                        acc[c] = acc.get(c, 0) + v * w
                assert all(x == 0 for x in acc.values()), f"d o d != 0 in degree {j - 1}"


class CohomologyClass:
    """A cohomology class of some K_I, carried by a representative cocycle."""

    __slots__ = ("subset", "degree", "cochain", "coords", "table")

    def __init__(self, subset, degree, cochain, coords, table):
        self.subset = subset
        self.degree = degree
        self.cochain = cochain
        self.coords = coords
        self.table = table

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    @property
    def total_degree(self) -> int:
        return self.degree + len(self.subset) + 1

    def __repr__(self) -> str:
        return (
            f"CohomologyClass(I={list(self.subset.vertices())}, j={self.degree}, "
            f"coords={[str(c) for c in self.coords]})"
        )


class HochsterTable:
    """Additive decomposition of H^*(Z(K); Q) indexed by (I, degree)."""

    def __init__(self, complex: SimplicialComplex, entries: dict, betti: list[int]):
        self.complex = complex
        self.entries = entries
        self.betti = betti
        self._faces = sorted(complex.face_masks(), key=lambda m: (m.bit_count(), m))
        self._cochains: dict[int, CochainComplexQ] = {}

    def cochain_complex(self, I: VertexSet) -> CochainComplexQ:
        mask = I.mask
        if mask not in self._cochains:
            self._cochains[mask] = CochainComplexQ(
                [f for f in self._faces if f & ~mask == 0]
            )
        return self._cochains[mask]

    def dimension(self, I: VertexSet, j: int) -> int:
        return self.entries.get((I.mask, j), 0)

    def classes(self, I: VertexSet, j: int) -> list[CohomologyClass]:
        cx = self.cochain_complex(I)
        reps = cx.representatives(j)
        k = len(reps)
        out = []
        for i, rep in enumerate(reps):
            coords = tuple(Fraction(1 if t == i else 0) for t in range(k))
            out.append(CohomologyClass(I, j, rep, coords, self))
        return out

    def unit(self) -> CohomologyClass:
        """The ring unit: the empty-subset summand in total degree 0."""
        return CohomologyClass(
            VertexSet(), -1, {0: Fraction(1)}, (Fraction(1),), self
        )

    def positive_entries(self) -> list[tuple[VertexSet, int, int]]:
        """Entries of positive total degree, i.e. all with nonempty I."""
        out = []
        for (mask, j), dim in sorted(self.entries.items()):
            if mask:
                out.append((VertexSet.from_mask(mask), j, dim))
        return out

    def to_json_dict(self) -> dict:
        entries = [
            {"I": list(VertexSet.from_mask(mask).vertices()), "j": j, "dim": dim}
            for (mask, j), dim in sorted(self.entries.items())
        ]
        return {"entries": entries, "betti": list(self.betti)}


def reduced_cohomology(K: SimplicialComplex):
    """Reduced rational cohomology of ``K`` with representative cocycles.

    Returns a list of (degree, dimension, representatives); degree -1 is
    one-dimensional exactly for the empty complex {{}}.
    """
    if K.n > COCHAIN_MAX_N:
        raise ResourceError(f"cochain complex enumeration capped at n <= {COCHAIN_MAX_N}")
    cx = CochainComplexQ(K.face_masks())
    out = []
    for j in cx.degrees():
        dim = cx.betti(j)
        reps = [
            {VertexSet.from_mask(m): v for m, v in rep.items()}
            for rep in cx.representatives(j)
        ]
        out.append((j, dim, reps))
    return out


def hochster_table(K: SimplicialComplex, max_n: int = HOCHSTER_MAX_N) -> HochsterTable:
    """Aggregate reduced Betti numbers of all full subcomplexes of ``K``."""
    if K.n > max_n:
        raise ResourceError(
            f"table needs 2^{K.n} subcomplexes; limit is n <= {max_n}"
        )
    faces = sorted(K.face_masks(), key=lambda m: (m.bit_count(), m))
    entries: dict[tuple[int, int], int] = {}
    betti_acc: dict[int, int] = {}
    for I in range(1 << K.n):
        sub = [f for f in faces if f & ~I == 0]
        cx = CochainComplexQ(sub)
        size = I.bit_count()
        for j in cx.degrees():
            dim = cx.betti(j)
            if dim:
                entries[(I, j)] = dim
                deg = j + size + 1
                betti_acc[deg] = betti_acc.get(deg, 0) + dim
    top = max(betti_acc)
    betti = [betti_acc.get(d, 0) for d in range(top + 1)]
    return HochsterTable(K, entries, betti)


def hochster_betti(K: SimplicialComplex, max_n: int = HOCHSTER_MAX_N) -> list[int]:
    """Betti numbers of Z(K; (D^2, S^1)) by total degree (trailing zeros trimmed)."""
    return list(hochster_table(K, max_n=max_n).betti)


def _shuffle_sign(tau: int, part_j: int) -> int:
    """Parity of interleaving the J-part into the L-part along ascending tau."""
    inversions = 0
    seen_l = 0
    rest = tau
    while rest:
        low = rest & -rest
        if part_j & low:
            inversions += seen_l
        else:
            seen_l += 1
        rest ^= low
    return -1 if inversions % 2 else 1


def star_product(
    alpha: CohomologyClass, beta: CohomologyClass, table: HochsterTable
) -> CohomologyClass:
    """Product of two classes in the decomposition of H^*(Z(K)).

    Zero whenever the supports intersect.  Otherwise the representative of
    the result is the cross cochain (alpha x beta)(sigma) =
    +-alpha(sigma cap J) * beta(sigma cap L) on the union subcomplex, with
    the shuffle sign of the interleaving and a fixed (-1)^((p+1)q) degree
    shift; the class is then expressed in the chosen representative basis.
    """
    if alpha.table is not table or beta.table is not table:
        raise InputError("classes do not belong to the supplied table")
    J = alpha.subset.mask
    L = beta.subset.mask
    p = alpha.degree
    q = beta.degree
    union = VertexSet.from_mask(J | L)
    r = p + q + 1
    cx = table.cochain_complex(union)
    if J & L:
        dim = table.dimension(union, r)
        return CohomologyClass(union, r, {}, (Fraction(0),) * dim, table)
    global_sign = -1 if ((p + 1) * q) % 2 else 1
    cochain: dict[int, Fraction] = {}
    for tau in cx.basis.get(r, []):
        sj = tau & J
        if sj.bit_count() != p + 1:
            continue
        sl = tau & L
        a = alpha.cochain.get(sj, Fraction(0))
        if a == 0:
            continue
        b = beta.cochain.get(sl, Fraction(0))
        if b == 0:
            continue
        value = global_sign * _shuffle_sign(tau, sj) * a * b
        if value != 0:
            cochain[tau] = value
    coords = cx.reduce_cocycle(r, cochain)
    return CohomologyClass(union, r, cochain, coords, table)


def star_product_scan(table: HochsterTable):
    """Evaluate every product of two positive-degree classes.

    Returns (certificate_of_first_nonzero_or_None, number_of_products).
    Products whose supports intersect are zero by the pairing rule and are
    counted without building a cochain.
    """
    positive = table.positive_entries()
    count = 0
    for ai, (I1, j1, dim1) in enumerate(positive):
        for I2, j2, dim2 in positive[ai:]:
            if I1.mask & I2.mask:
                count += dim1 * dim2
                continue
            for alpha in table.classes(I1, j1):
                for beta in table.classes(I2, j2):
                    count += 1
                    product = star_product(alpha, beta, table)
                    if not product.is_zero:
                        certificate = {
                            "kind": "nonzero_product",
                            "J": list(I1.vertices()),
                            "p": j1,
                            "L": list(I2.vertices()),
                            "q": j2,
                            "degree": product.total_degree,
                        }
                        return certificate, count
    return None, count


def is_trivial_ring(K: SimplicialComplex) -> tuple[bool, dict]:
    """Whether all products of positive-degree classes of H^*(Z(K)) vanish.

    Fast path: if no two subsets with nonzero reduced cohomology are
    disjoint, every product is zero by the pairing rule alone.  Otherwise
    all products are evaluated and the first nonzero one is certified.
    """
    table = hochster_table(K)
    positive = table.positive_entries()
    has_disjoint = any(
        a[0].mask & b[0].mask == 0
        for i, a in enumerate(positive)
        for b in positive[i:]
    )
    if not has_disjoint:
        return True, {
            "kind": "disjoint_supports_absent",
            "positive_entries": len(positive),
        }
    certificate, count = star_product_scan(table)
    if certificate is not None:
        return False, certificate
    return True, {"kind": "all_products_vanish", "products_checked": count}
