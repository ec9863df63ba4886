"""Exact linear algebra over the integers and rationals.

Everything in this package reduces to the routines here: Smith normal
form with recorded unimodular transforms, integer kernels and solves,
and canonical presentations of finitely generated abelian groups.  All
arithmetic uses Python's arbitrary-precision integers and
``fractions.Fraction``; no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class IntegerMatrix:
    """Immutable dense matrix with integer entries, stored row-major.

    >>> a = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    >>> a[0, 0], a.rows, a.cols
    (2, 2, 2)
    """

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        data = [int(x) for x in entries]
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._rows = tuple(
            tuple(data[i * cols : (i + 1) * cols]) for i in range(rows)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            ncols = 0 if cols is None else cols
        flat = [x for r in rows for x in r]
        return cls(len(rows), ncols, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, entries: Sequence[int]) -> "IntegerMatrix":
        return cls(len(entries), 1, list(entries))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def to_rows(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self._rows == other._rows and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.cols, self._rows))

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, {self.to_rows()})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows, [self._rows[i][j] for j in range(self.cols) for i in range(self.rows)]
        )

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [-x for r in self._rows for x in r])

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_same_shape(other)
        return IntegerMatrix(
            self.rows, self.cols,
            [a + b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)],
        )

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_same_shape(other)
        return IntegerMatrix(
            self.rows, self.cols,
            [a - b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)],
        )

    def scale(self, c: int) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [c * x for r in self._rows for x in r])

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = [other.col(j) for j in range(other.cols)]
        flat = [
            sum(a * b for a, b in zip(r, c))
            for r in self._rows
            for c in ocols
        ]
        return IntegerMatrix(self.rows, other.cols, flat)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product over the integers."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self._rows)

    def apply_rational(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((Fraction(a) * b for a, b in zip(r, vec)), Fraction(0)) for r in self._rows)

    def hstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        flat = [x for ra, rb in zip(self._rows, other._rows) for x in (*ra, *rb)]
        return IntegerMatrix(self.rows, self.cols + other.cols, flat)

    def vstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        flat = [x for r in (*self._rows, *other._rows) for x in r]
        return IntegerMatrix(self.rows + other.rows, self.cols, flat)

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "IntegerMatrix":
        flat = [self._rows[i][j] for i in row_indices for j in col_indices]
        return IntegerMatrix(len(row_indices), len(col_indices), flat)

    def columns(self, col_indices: Sequence[int]) -> "IntegerMatrix":
        return self.submatrix(range(self.rows), col_indices)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    @staticmethod
    def block(blocks: Sequence[Sequence[Optional["IntegerMatrix"]]],
              row_dims: Sequence[int], col_dims: Sequence[int]) -> "IntegerMatrix":
        """Assemble a block matrix; ``None`` blocks are zero."""
        rows = sum(row_dims)
        cols = sum(col_dims)
        grid = [[0] * cols for _ in range(rows)]
        r0 = 0
        for bi, rd in enumerate(row_dims):
            c0 = 0
            for bj, cd in enumerate(col_dims):
                blk = blocks[bi][bj]
                if blk is not None:
                    if blk.rows != rd or blk.cols != cd:
                        raise ValueError(f"block ({bi},{bj}) has shape "
                                         f"{blk.rows}x{blk.cols}, expected {rd}x{cd}")
                    for i in range(rd):
                        row = blk.row(i)
                        for j in range(cd):
                            grid[r0 + i][c0 + j] = row[j]
                c0 += cd
            r0 += rd
        return IntegerMatrix(rows, cols, [x for row in grid for x in row])

    def _check_same_shape(self, other: "IntegerMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular factorization u @ a @ v == d with d diagonal.

    Diagonal entries are nonnegative and satisfy d1 | d2 | ... ; trailing
    entries are zero.
    """

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    @property
    def rank(self) -> int:
        return sum(1 for i in range(min(self.d.rows, self.d.cols)) if self.d[i, i] != 0)

    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(
            self.d[i, i] for i in range(min(self.d.rows, self.d.cols)) if self.d[i, i] != 0
        )

    def verify(self, a: IntegerMatrix) -> bool:
        """Exact check of all decomposition invariants against ``a``."""
        if self.u @ a @ self.v != self.d:
            return False
        if abs(self.u.det()) != 1 or abs(self.v.det()) != 1:
            return False
        diag = [self.d[i, i] for i in range(min(self.d.rows, self.d.cols))]
        for i in range(self.d.rows):
            for j in range(self.d.cols):
                if i != j and self.d[i, j] != 0:
                    return False
        for i, x in enumerate(diag):
            if x < 0:
                return False
            if i + 1 < len(diag):
                nxt = diag[i + 1]
                if x == 0 and nxt != 0:
                    return False
                if x != 0 and nxt % x != 0:
                    return False
        return True


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with minimal-absolute-value pivoting.

    Total on all inputs, including empty and zero matrices.

    >>> s = smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
    >>> [s.d[i, i] for i in range(2)]
    [1, 6]
    """
    m, n = a.rows, a.cols
    d = a.to_rows()
    u = IntegerMatrix.identity(m).to_rows()
    v = IntegerMatrix.identity(n).to_rows()

    def row_op(i: int, k: int, q: int) -> None:
        # row i += q * row k
        d[i] = [x + q * y for x, y in zip(d[i], d[k])]
        u[i] = [x + q * y for x, y in zip(u[i], u[k])]

    def col_op(j: int, k: int, q: int) -> None:
        # col j += q * col k
        for r in d:
            r[j] += q * r[k]
        for r in v:
            r[j] += q * r[k]

    def swap_rows(i: int, k: int) -> None:
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for r in d:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    def negate_row(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # Minimal-absolute-value pivot in the trailing submatrix.
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        if d[t][t] < 0:
            negate_row(t)

        while True:
            # Clear the pivot column with floor-division row operations.
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    row_op(i, t, -(d[i][t] // d[t][t]))
            dirty = [i for i in range(t + 1, m) if d[i][t] != 0]
            if dirty:
                i = min(dirty, key=lambda k: abs(d[k][t]))
                swap_rows(t, i)
                if d[t][t] < 0:
                    negate_row(t)
                continue
            # Clear the pivot row.
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    col_op(j, t, -(d[t][j] // d[t][t]))
            dirty = [j for j in range(t + 1, n) if d[t][j] != 0]
            if dirty:
                j = min(dirty, key=lambda k: abs(d[t][k]))
                swap_cols(t, j)
                if d[t][t] < 0:
                    negate_row(t)
                continue
            # Pivot must divide the rest of the submatrix.
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, 1)
        t += 1

    flat_d = [x for r in d for x in r]
    flat_u = [x for r in u for x in r]
    flat_v_t = [x for r in v for x in r]
    return SmithDecomposition(
        u=IntegerMatrix(m, m, flat_u),
        d=IntegerMatrix(m, n, flat_d),
        v=IntegerMatrix(n, n, flat_v_t),
    )


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Canonical form ``Z^free_rank + Z/t1 + Z/t2 + ...`` with t1 | t2 | ...

    Unique for a given finitely generated abelian group, so equality of
    presentations is isomorphism.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for i, t in enumerate(self.torsion):
            if t < 2:
                raise ValueError("torsion coefficients must be >= 2")
            if i + 1 < len(self.torsion) and self.torsion[i + 1] % t != 0:
                raise ValueError("torsion list must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("ℤ")
        elif self.free_rank > 1:
            parts.append(f"ℤ^{self.free_rank}")
        parts.extend(f"ℤ/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def cokernel_presentation(a: IntegerMatrix) -> AbelianGroupPresentation:
    """Canonical presentation of Z^rows / image(a).

    >>> str(cokernel_presentation(IntegerMatrix.from_rows([[2]])))
    'ℤ/2'
    """
    snf = smith_normal_form(a)
    torsion = tuple(t for t in snf.invariant_factors() if t > 1)
    return AbelianGroupPresentation(free_rank=a.rows - snf.rank, torsion=torsion)


def integer_solve(a: IntegerMatrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some integer solution of a @ x == b, or None if there is none.

    >>> integer_solve(IntegerMatrix.from_rows([[2]]), [3]) is None
    True
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    sol = integer_solve_matrix(a, IntegerMatrix.column(b))
    if sol is None:
        return None
    return sol.col(0)


def integer_solve_matrix(a: IntegerMatrix, b: IntegerMatrix) -> Optional[IntegerMatrix]:
    """Solve a @ X == b over the integers column by column (one SNF)."""
    if b.rows != a.rows:
        raise ValueError("right-hand side row count mismatch")
    snf = smith_normal_form(a)
    r = snf.rank
    c = snf.u @ b
    ys: list[list[int]] = []
    for j in range(b.cols):
        y = [0] * a.cols
        ok = True
        for i in range(a.rows):
            ci = c[i, j]
            di = snf.d[i, i] if i < min(a.rows, a.cols) else 0
            if i < r:
                if ci % di != 0:
                    ok = False
                    break
                y[i] = ci // di
            elif ci != 0:
                ok = False
                break
        if not ok:
            return None
        ys.append(y)
    ymat = IntegerMatrix(a.cols, b.cols, [ys[j][i] for i in range(a.cols) for j in range(b.cols)])
    return snf.v @ ymat


def kernel_basis(a: IntegerMatrix) -> IntegerMatrix:
    """Columns form a basis of ker(a) as a (saturated) sublattice of Z^cols."""
    snf = smith_normal_form(a)
    r = snf.rank
    return snf.v.columns(range(r, a.cols))


def column_span_basis(a: IntegerMatrix) -> IntegerMatrix:
    """Columns form a basis of the lattice spanned by the columns of ``a``."""
    snf = smith_normal_form(a)
    uinv = inverse_unimodular(snf.u)
    cols = []
    for i in range(snf.rank):
        di = snf.d[i, i]
        cols.append([di * uinv[k, i] for k in range(a.rows)])
    flat = [cols[j][i] for i in range(a.rows) for j in range(len(cols))]
    return IntegerMatrix(a.rows, len(cols), flat)


def inverse_unimodular(u: IntegerMatrix) -> IntegerMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    if u.rows != u.cols:
        raise ValueError("not square")
    inv = integer_solve_matrix(u, IntegerMatrix.identity(u.rows))
    if inv is None:
        raise ValueError("matrix is not unimodular")
    return inv


def rational_solve(a: IntegerMatrix, b: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
    """Some rational solution of a @ x == b, or None (exact elimination)."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    m, n = a.rows, a.cols
    rows = [[Fraction(a[i, j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][n]
    return tuple(x)


def lattice_contains(basis_or_gens: IntegerMatrix, vectors: IntegerMatrix) -> bool:
    """Whether every column of ``vectors`` lies in the column lattice."""
    if vectors.cols == 0:
        return True
    basis = column_span_basis(basis_or_gens)
    return integer_solve_matrix(basis, vectors) is not None


def lattices_equal(gens1: IntegerMatrix, gens2: IntegerMatrix) -> bool:
    """Whether two generating sets span the same sublattice of Z^n."""
    return lattice_contains(gens1, gens2) and lattice_contains(gens2, gens1)


class QuotientLattice:
    """The group span(gens) / span(rels) with canonical coordinates.

    ``gens`` and ``rels`` are integer matrices whose columns live in a
    common ambient Z^N, with span(rels) contained in span(gens).  A basis
    of span(gens) is fixed once, the relations are rewritten in that
    basis, and a Smith decomposition turns the quotient into
    ``+_i Z/order_i`` where order 0 means a free factor.  Classes of
    ambient vectors get canonical reduced coordinates, so equality and
    vanishing of classes are decidable exactly.
    """

    def __init__(self, gens: IntegerMatrix, rels: IntegerMatrix):
        if gens.rows != rels.rows:
            raise ValueError("ambient dimension mismatch")
        self.ambient_dim = gens.rows
        self.basis = column_span_basis(gens)
        k = self.basis.cols
        rel_coords = integer_solve_matrix(self.basis, rels) if k else IntegerMatrix.zeros(0, rels.cols)
        if rel_coords is None:
            raise ValueError("relations do not lie in the generator span")
        self.rel_coords = rel_coords
        snf = smith_normal_form(rel_coords)
        self._u = snf.u
        self._uinv = inverse_unimodular(snf.u)
        orders = []
        for i in range(k):
            di = snf.d[i, i] if i < min(snf.d.rows, snf.d.cols) else 0
            orders.append(di)
        self.orders = tuple(orders)

    def presentation(self) -> AbelianGroupPresentation:
        free = sum(1 for o in self.orders if o == 0)
        torsion = tuple(o for o in self.orders if o > 1)
        return AbelianGroupPresentation(free_rank=free, torsion=torsion)

    def coords(self, vec: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Canonical reduced coordinates of [vec], or None if vec is
        outside the generator span."""
        y = integer_solve(self.basis, list(vec))
        if y is None:
            return None
        u = self._u.apply(y)
        out = []
        for ui, oi in zip(u, self.orders):
            out.append(ui % oi if oi > 0 else ui)
        return tuple(out)

    def is_zero_class(self, vec: Sequence[int]) -> bool:
        c = self.coords(vec)
        if c is None:
            raise ValueError("vector not in the generator span")
        return all(x == 0 for x in c)

    def generator_vector(self, i: int) -> tuple[int, ...]:
        """Ambient representative of the i-th canonical cyclic factor."""
        e = [0] * self.basis.cols
        e[i] = 1
        y = self._uinv.apply(e)
        return self.basis.apply(y)

    def free_generator_vectors(self) -> list[tuple[int, ...]]:
        return [self.generator_vector(i) for i, o in enumerate(self.orders) if o == 0]

    def torsion_generator_vectors(self) -> list[tuple[int, ...]]:
        return [self.generator_vector(i) for i, o in enumerate(self.orders) if o > 1]

    def lift(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Ambient vector with the given canonical coordinates."""
        if len(coords) != self.basis.cols:
            raise ValueError("coordinate length mismatch")
        y = self._uinv.apply(list(coords))
        return self.basis.apply(y)


def homology_quotient(map_out: IntegerMatrix, map_in: IntegerMatrix) -> QuotientLattice:
    """ker(map_out) / im(map_in) with canonical class coordinates."""
    if map_out.cols != map_in.rows:
        raise ValueError("degree dimension mismatch")
    return QuotientLattice(kernel_basis(map_out), map_in)


def dot_rational(x: Sequence[Fraction], y: Sequence[int]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))
