"""Integer matrix presentations of standard graded toric rings.

A presentation is a matrix whose columns are the exponent vectors of the
degree-1 monomial generators, together with a rational certificate vector
giving every column degree exactly 1.  Tensor and degreewise products are
matrix constructions; the defining relations live in the integer kernel
of the matrix, and the Hilbert function is counted by enumerating the
semigroup degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import NotStandardGraded, ResourceCap

DEFAULT_POINT_CAP = 1_000_000


@dataclass(frozen=True)
class ToricPresentation:
    """Exponent matrix (rows of ints) plus a grading certificate.

    The certificate is a rational row vector lam with lam . column == 1
    for every column; its existence is exactly the standard graded
    condition and is re-checked on every construction.
    """

    matrix: tuple[tuple[int, ...], ...]
    grading: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.matrix or not self.matrix[0]:
            raise NotStandardGraded("presentation matrix must be nonempty")
        width = len(self.matrix[0])
        if any(len(row) != width for row in self.matrix):
            raise NotStandardGraded("presentation matrix rows have unequal length")
        if len(self.grading) != len(self.matrix):
            raise NotStandardGraded("grading length does not match row count")
        for j, col in enumerate(self.columns()):
            deg = sum(l * x for l, x in zip(self.grading, col))
            if deg != 1:
                raise NotStandardGraded(
                    f"column {j} = {col} has certificate degree {deg}, not 1")

    @property
    def nrows(self):
        return len(self.matrix)

    @property
    def ncols(self):
        return len(self.matrix[0])

    def columns(self):
        return [tuple(row[j] for row in self.matrix) for j in range(self.ncols)]


@dataclass(frozen=True)
class LatticeBasis:
    """Basis rows of the relation lattice {c : A c = 0}, in canonical form."""

    vectors: tuple[tuple[int, ...], ...]

    @property
    def rank(self):
        return len(self.vectors)


@dataclass(frozen=True)
class SemigroupCensus:
    """Counts of distinct semigroup elements per degree, 0..N."""

    counts: tuple[int, ...]
    points: tuple[tuple[tuple[int, ...], ...], ...] | None = None


def validate(matrix):
    """Certify a matrix as a standard graded toric presentation.

    Solves lam . A = (1, ..., 1) over the rationals; raises
    NotStandardGraded when the all-ones vector is outside the row space.
    """
    rows = [tuple(int(x) for x in row) for row in matrix]
    if not rows or not rows[0]:
        raise NotStandardGraded("presentation matrix must be nonempty")
    at = linalg.transpose(rows)
    lam = linalg.solve_right(at, [1] * len(rows[0]))
    if lam is None:
        raise NotStandardGraded(
            f"no rational grading gives every column of {rows} degree 1")
    return ToricPresentation(tuple(rows), tuple(lam))


def tensor(p, q):
    """Block diagonal presentation of the tensor product."""
    n, m = p.ncols, q.ncols
    top = [tuple(row) + (0,) * m for row in p.matrix]
    bottom = [(0,) * n + tuple(row) for row in q.matrix]
    return ToricPresentation(tuple(top + bottom), p.grading + q.grading)


def segre(p, q):
    """Presentation of the degreewise product.

    Columns are all stacked pairs (a_i over b_j) in row-major (i, j)
    order; the first factor's certificate extended by zeros grades every
    generator in degree 1.
    """
    cols = [ai + bj for ai in p.columns() for bj in q.columns()]
    matrix = tuple(tuple(col[i] for col in cols) for i in range(p.nrows + q.nrows))
    grading = p.grading + tuple(Fraction(0) for _ in range(q.nrows))
    return ToricPresentation(matrix, grading)


def kernel_lattice(p):
    """Saturated integer basis of {c : A c = 0} in canonical row form."""
    vectors = linalg.integer_kernel([list(row) for row in p.matrix])
    for v in vectors:
        assert all(sum(a * c for a, c in zip(row, v)) == 0 for row in p.matrix)
    return LatticeBasis(tuple(tuple(v) for v in vectors))


def census(p, n_max, cap=DEFAULT_POINT_CAP, keep_points=False):
    """Count distinct semigroup elements of each degree 0..n_max.

    Breadth-first closure: the degree k+1 layer is the deduplicated set
    of sums (degree k point) + (column).  Raises ResourceCap when the
    total number of points exceeds cap.
    """
    if n_max < 0:
        raise ValueError(f"census bound must be >= 0, got {n_max}")
    cols = p.columns()
    layer = {(0,) * p.nrows}
    counts = [1]
    layers = [tuple(sorted(layer))]
    total = 1
    for _ in range(n_max):
        layer = {tuple(x + c for x, c in zip(pt, col)) for pt in layer for col in cols}
        total += len(layer)
        if cap is not None and total > cap:
            raise ResourceCap(
                f"census exceeded the configured cap of {cap} points")
        counts.append(len(layer))
        layers.append(tuple(sorted(layer)))
    return SemigroupCensus(tuple(counts), tuple(layers) if keep_points else None)


# ---------------------------------------------------------------------------
# matrix file format: first line "r n", then r rows of n integers


def parse_matrix(text):
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"matrix header must be 'r n', got {lines[0]!r}")
    try:
        r, n = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"matrix header must be 'r n', got {lines[0]!r}") from None
    if len(lines) != r + 1:
        raise ValueError(f"expected {r} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n:
            raise ValueError(f"expected {n} entries in row {ln!r}")
        try:
            rows.append(tuple(int(t) for t in toks))
        except ValueError:
            raise ValueError(f"bad integer in matrix row {ln!r}") from None
    return tuple(rows)


def format_matrix(rows):
    out = [f"{len(rows)} {len(rows[0])}"]
    out.extend(" ".join(str(x) for x in row) for row in rows)
    return "\n".join(out) + "\n"


def load_matrix(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix(fh.read())
