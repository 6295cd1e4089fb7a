"""Exact sparse/dense linear algebra over Q(w_m).

Vectors are dicts {column index: Cyclo} with no zero entries.  Pivoting is
always on the smallest column index, so reduced bases are deterministic.
"""

from __future__ import annotations

from .scalars import Cyclo


def vec_add_scaled(target: dict, src: dict, c: Cyclo) -> None:
    """target += c * src, dropping cancelled entries."""
    for col, val in src.items():
        cur = target.get(col)
        new = val * c if cur is None else cur + val * c
        if new.is_zero():
            target.pop(col, None)
        else:
            target[col] = new


class SpanBuilder:
    """Incremental row space in reduced echelon form (pivot coefficient 1)."""

    def __init__(self, full_reduce: bool = True):
        self.rows: dict[int, dict] = {}  # pivot column -> row
        self.full_reduce = full_reduce

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec against the current span (vec is not modified)."""
        v = dict(vec)
        while v:
            piv = min(v)
            row = self.rows.get(piv)
            if row is None:
                return v
            vec_add_scaled(v, row, -v[piv])
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec; True iff the rank increased."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v)
        inv = v[piv].inverse()
        v = {c: val * inv for c, val in v.items()}
        if self.full_reduce:
            for row in self.rows.values():
                if piv in row:
                    vec_add_scaled(row, v, -row[piv])
        self.rows[piv] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]


def rref(rows: list[list[Cyclo]]) -> tuple[list[list[Cyclo]], list[int]]:
    """Dense reduced row echelon form; returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if not mat[i][c].is_zero():
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r], pivots


def nullspace(rows: list[list[Cyclo]], ncols: int) -> list[list[Cyclo]]:
    """Basis of {x : M x = 0} for the dense matrix M, one vector per free column."""
    zero = Cyclo.zero()
    one = Cyclo.one()
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, p in enumerate(pivots):
            val = red[r][free]
            if not val.is_zero():
                vec[p] = -val
        basis.append(vec)
    return basis
