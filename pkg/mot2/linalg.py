"""
Algebra lineal exacta sobre F_p y Q.

Todo pasa por ``DomainMatrix`` de sympy (eliminacion gaussiana exacta; la
variante dispersa se usa para los sistemas de equivariancia). Los vectores
son listas de escalares del dominio del cuerpo.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from mot2.scalars import Field, Scalar

Vector = List[Scalar]


def matrix(rows: Sequence[Sequence], fld: Field, shape: Optional[Tuple[int, int]] = None) -> DomainMatrix:
    dom = fld.domain
    m = len(rows)
    n = len(rows[0]) if m else (shape[1] if shape else 0)
    if shape is not None and (m, n) != tuple(shape):
        raise ValueError(f"rows do not match shape {shape}")
    if m == 0 or n == 0:
        return DomainMatrix.zeros((m, n), dom)
    return DomainMatrix([[dom.convert(e) for e in row] for row in rows], (m, n), dom)


def sparse_matrix(entries: Dict[int, Dict[int, Scalar]], shape: Tuple[int, int], fld: Field) -> DomainMatrix:
    dom = fld.domain
    clean = {}
    for i, row in entries.items():
        r = {j: dom.convert(v) for j, v in row.items() if v != dom.zero}
        if r:
            clean[i] = r
    return DomainMatrix(clean, shape, dom)


def zeros(m: int, n: int, fld: Field) -> DomainMatrix:
    return DomainMatrix.zeros((m, n), fld.domain)


def identity(n: int, fld: Field) -> DomainMatrix:
    return DomainMatrix.eye(n, fld.domain)


def to_rows(M: DomainMatrix) -> List[List[Scalar]]:
    m, n = M.shape
    if m == 0:
        return []
    if n == 0:
        return [[] for _ in range(m)]
    return [list(r) for r in M.to_dense().to_list()]


def columns(M: DomainMatrix) -> List[Vector]:
    rows = to_rows(M)
    m, n = M.shape
    return [[rows[i][j] for i in range(m)] for j in range(n)]


def from_columns(cols: Sequence[Vector], nrows: int, fld: Field) -> DomainMatrix:
    if not cols:
        return zeros(nrows, 0, fld)
    return matrix([[cols[j][i] for j in range(len(cols))] for i in range(nrows)], fld, shape=(nrows, len(cols)))


def transpose(M: DomainMatrix) -> DomainMatrix:
    return M.transpose()


def matmul(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    if 0 in A.shape or 0 in B.shape:
        return DomainMatrix.zeros((A.shape[0], B.shape[1]), A.domain)
    return A.to_dense() * B.to_dense()


def equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    return A.shape == B.shape and to_rows(A) == to_rows(B)


def is_zero(M: DomainMatrix) -> bool:
    zero = M.domain.zero
    return all(e == zero for row in to_rows(M) for e in row)


def apply(M: DomainMatrix, v: Vector) -> Vector:
    rows = to_rows(M)
    zero = M.domain.zero
    out = []
    for row in rows:
        acc = zero
        for a, b in zip(row, v):
            if a != zero and b != zero:
                acc = acc + a * b
        out.append(acc)
    return out


# ---------------------------------
# Eliminacion
# ---------------------------------
def rref(M: DomainMatrix) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    """Reduced row echelon form; pivots are the first nonzero column of each row."""
    m, n = M.shape
    if m == 0 or n == 0:
        return M.to_dense(), ()
    R, pivots = M.rref()
    return R.to_dense(), tuple(pivots)


def rank(M: DomainMatrix) -> int:
    return len(rref(M)[1])


def nullspace(M: DomainMatrix) -> List[Vector]:
    m, n = M.shape
    dom = M.domain
    if n == 0:
        return []
    R, pivots = rref(M)
    rows = to_rows(R)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [dom.zero] * n
        v[free] = dom.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(v)
    return basis


def sparse_nullspace(M: DomainMatrix) -> List[Vector]:
    """Nullspace of a sparse system, reading the echelon form as a dict of rows."""
    m, n = M.shape
    dom = M.domain
    if n == 0:
        return []
    if m == 0:
        return [[dom.one if j == i else dom.zero for j in range(n)] for i in range(n)]
    R, pivots = M.to_sparse().rref()
    rows = R.to_sparse().to_dod()
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [dom.zero] * n
        v[free] = dom.one
        for i, pc in enumerate(pivots):
            e = rows.get(i, {}).get(free)
            if e is not None:
                v[pc] = -e
        basis.append(v)
    return basis


@dataclass
class LinearSolution:
    consistent: bool
    particular: Vector = dc_field(default_factory=list)
    nullspace: List[Vector] = dc_field(default_factory=list)


def solve_linear_system(A: DomainMatrix, b: Vector) -> LinearSolution:
    m, n = A.shape
    dom = A.domain
    if len(b) != m:
        raise ValueError(f"rhs has length {len(b)}, expected {m}")
    rows = to_rows(A) if n else [[] for _ in range(m)]
    aug = [list(rows[i]) + [dom.convert(b[i])] for i in range(m)]
    if m == 0:
        return LinearSolution(True, [dom.zero] * n, nullspace(A))
    R, pivots = rref(DomainMatrix(aug, (m, n + 1), dom))
    if n in pivots:
        return LinearSolution(False)
    rrows = to_rows(R)
    x = [dom.zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = rrows[i][n]
    return LinearSolution(True, x, nullspace(A))


# ---------------------------------
# Subespacios generados por vectores
# ---------------------------------
def span_rank(vectors: Sequence[Vector], length: int, fld: Field) -> int:
    if not vectors:
        return 0
    return rank(matrix([list(v) for v in vectors], fld, shape=(len(vectors), length)))


def row_basis(vectors: Sequence[Vector], length: int, fld: Field) -> List[Vector]:
    """Echelonized basis of the span of ``vectors``."""
    if not vectors or length == 0:
        return []
    R, pivots = rref(matrix([list(v) for v in vectors], fld, shape=(len(vectors), length)))
    return [list(r) for r in to_rows(R)[: len(pivots)]]


def in_span(vectors: Sequence[Vector], v: Vector, fld: Field) -> bool:
    n = len(v)
    return span_rank(list(vectors) + [v], n, fld) == span_rank(vectors, n, fld)


def coordinates(basis: Sequence[Vector], v: Vector, fld: Field) -> Optional[Vector]:
    """Coordinates of ``v`` in ``basis`` (a linearly independent list) or None."""
    n = len(v)
    if not basis:
        return [] if all(fld.is_zero(e) for e in v) else None
    A = from_columns(list(basis), n, fld)
    sol = solve_linear_system(A, v)
    return sol.particular if sol.consistent else None
