"""Dense exact matrices over Q or Q(i), with the elimination kernel.

Everything here is exact and deterministic: elimination always picks the
first nonzero entry in column order as pivot, so kernels, ranks and
echelon forms are byte-reproducible across runs.  Matrices are treated as
immutable after construction; operations return new values.
"""

from __future__ import annotations

from .scalars import QI, QQ, Field, GaussianRational, coerce, conj_scalar


class FieldMismatchError(ValueError):
    """Two operands live over different coefficient fields."""


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class ExactMatrix:
    """A rows x cols dense matrix with entries in one exact field."""

    __slots__ = ("rows", "cols", "field", "ent")

    def __init__(self, rows: int, cols: int, field: Field, ent):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.ent = ent  # list of row lists, owned by this matrix

    @classmethod
    def from_rows(cls, rows, field: Field | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if field is None:
            gaussian = any(
                isinstance(x, GaussianRational) and x.im != 0
                for r in rows for x in r
            )
            field = QI if gaussian else QQ
        ent = [[coerce(field, x) for x in r] for r in rows]
        ncols = len(ent[0]) if ent else 0
        if any(len(r) != ncols for r in ent):
            raise DimensionError("ragged rows")
        return cls(len(ent), ncols, field, ent)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "ExactMatrix":
        z = field.zero
        return cls(rows, cols, field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "ExactMatrix":
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.ent[i][i] = field.one
        return m

    @classmethod
    def column(cls, vec, field: Field | None = None) -> "ExactMatrix":
        return cls.from_rows([[x] for x in vec], field)

    def entry(self, i: int, j: int):
        return self.ent[i][j]

    def row_list(self, i: int) -> list:
        return list(self.ent[i])

    def col_list(self, j: int) -> list:
        return [r[j] for r in self.ent]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for ra, rb in zip(self.ent, other.ent) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.field.name))

    def __add__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, self.field, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.ent, other.ent)
        ])

    def __sub__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, self.field, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.ent, other.ent)
        ])

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, self.field,
                           [[-a for a in r] for r in self.ent])

    def scaled(self, c) -> "ExactMatrix":
        c = coerce(self.field, c)
        return ExactMatrix(self.rows, self.cols, self.field,
                           [[c * a for a in r] for r in self.ent])

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scaled(other)
        if self.field is not other.field:
            raise FieldMismatchError("matrix product across different fields")
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        bt = list(zip(*other.ent)) if other.ent else []
        zero = self.field.zero
        out = []
        for ra in self.ent:
            out.append([
                sum((x * y for x, y in zip(ra, col)), zero) for col in bt
            ])
        return ExactMatrix(self.rows, other.cols, self.field, out)

    def __rmul__(self, other):
        return self.scaled(other)

    def apply(self, vec: list) -> list:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match column count")
        zero = self.field.zero
        return [sum((a * x for a, x in zip(r, vec)), zero) for r in self.ent]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, self.field,
                           [list(c) for c in zip(*self.ent)] if self.ent else [])

    def conjugate(self) -> "ExactMatrix":
        if self.field is QQ:
            return self
        return ExactMatrix(self.rows, self.cols, self.field,
                           [[a.conjugate() for a in r] for r in self.ent])

    def to_gaussian(self) -> "ExactMatrix":
        """Promote a rational matrix into Q(i) (no-op if already there)."""
        if self.field is QI:
            return self
        return ExactMatrix(self.rows, self.cols, QI,
                           [[GaussianRational(a) for a in r] for r in self.ent])

    def real_part(self) -> "ExactMatrix":
        """The rational matrix of real parts; raises if any entry has im != 0."""
        if self.field is QQ:
            return self
        for r in self.ent:
            for a in r:
                if a.im != 0:
                    raise ValueError("matrix has a non-real entry")
        return ExactMatrix(self.rows, self.cols, QQ,
                           [[a.re for a in r] for r in self.ent])

    def is_zero(self) -> bool:
        return all(not a for r in self.ent for a in r)

    def _check_same_shape(self, other):
        if self.field is not other.field:
            raise FieldMismatchError("operands over different fields")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field.name})"


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; tensor words ordered with the left factor most
    significant (lexicographic on index words)."""
    if a.field is not b.field:
        raise FieldMismatchError("kron across different fields")
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [[None] * cols for _ in range(rows)]
    for i, ra in enumerate(a.ent):
        for k, rb in enumerate(b.ent):
            dest = out[i * b.rows + k]
            base = 0
            for x in ra:
                for y in rb:
                    dest[base] = x * y
                    base += 1
    return ExactMatrix(rows, cols, a.field, out)


def kron_vec(u: list, v: list) -> list:
    return [x * y for x in u for y in v]


def _rref_in_place(ent: list, ncols: int) -> list:
    """Reduce to reduced row echelon form.  Returns pivot columns in order.

    Pivot rule: scan columns left to right, take the first remaining row
    with a nonzero entry.
    """
    pivots = []
    r = 0
    nrows = len(ent)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if ent[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            ent[pr], ent[r] = ent[r], ent[pr]
        piv = ent[r][c]
        if piv != 1:
            inv = 1 / piv
            ent[r] = [inv * x for x in ent[r]]
        row_r = ent[r]
        for i in range(nrows):
            if i == r:
                continue
            f = ent[i][c]
            if f:
                ent[i] = [x - f * y for x, y in zip(ent[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(a: ExactMatrix) -> tuple[ExactMatrix, list]:
    ent = [list(r) for r in a.ent]
    pivots = _rref_in_place(ent, a.cols)
    return ExactMatrix(a.rows, a.cols, a.field, ent), pivots


def rank(a: ExactMatrix) -> int:
    ent = [list(r) for r in a.ent]
    return len(_rref_in_place(ent, a.cols))


def kernel_basis(a: ExactMatrix) -> list[list]:
    """Exact basis of the right kernel, one vector per free column.

    Deterministic: vectors are indexed by free columns in ascending order,
    with a 1 in the free coordinate.
    """
    ent = [list(r) for r in a.ent]
    pivots = _rref_in_place(ent, a.cols)
    pivot_set = set(pivots)
    zero, one = a.field.zero, a.field.one
    basis = []
    for j in range(a.cols):
        if j in pivot_set:
            continue
        v = [zero] * a.cols
        v[j] = one
        for r, c in enumerate(pivots):
            v[c] = -ent[r][j]
        basis.append(v)
    return basis


def column_space_basis(a: ExactMatrix) -> ExactMatrix:
    """The pivot columns of a, as a rows x rank matrix (deterministic)."""
    ent = [list(r) for r in a.ent]
    pivots = _rref_in_place(ent, a.cols)
    cols = [[r[c] for c in pivots] for r in a.ent]
    return ExactMatrix(a.rows, len(pivots), a.field, cols)


def eigenspace(a: ExactMatrix, lam) -> list[list]:
    """Exact basis of ker(a - lam*I); empty when lam is not an eigenvalue."""
    if not a.is_square():
        raise DimensionError("eigenspace needs a square matrix")
    field = a.field
    if isinstance(lam, GaussianRational) and lam.im != 0 and field is QQ:
        a = a.to_gaussian()
        field = QI
    lam = coerce(field, lam)
    shifted = [list(r) for r in a.ent]
    for i in range(a.rows):
        shifted[i][i] = shifted[i][i] - lam
    return kernel_basis(ExactMatrix(a.rows, a.cols, field, shifted))


def is_idempotent(p: ExactMatrix) -> bool:
    """True iff p*p == p exactly."""
    if not p.is_square():
        raise DimensionError("idempotency needs a square matrix")
    return p * p == p


def solve_exact(b: ExactMatrix, y: ExactMatrix) -> ExactMatrix | None:
    """Solve b @ X = y for a full-column-rank b; None if inconsistent.

    Used to restrict an operator to an invariant subspace given a basis of
    the subspace in the columns of b.
    """
    if b.field is not y.field:
        raise FieldMismatchError("solve across different fields")
    if b.rows != y.rows:
        raise DimensionError("row mismatch in solve")
    aug = [list(rb) + list(ry) for rb, ry in zip(b.ent, y.ent)]
    pivots = _rref_in_place(aug, b.cols + y.cols)
    if any(c >= b.cols for c in pivots):
        return None  # inconsistent system
    if len(pivots) != b.cols:
        raise ValueError("basis matrix does not have full column rank")
    zero = b.field.zero
    sol = [[zero] * y.cols for _ in range(b.cols)]
    for r, c in enumerate(pivots):
        sol[c] = aug[r][b.cols:]
    return ExactMatrix(b.cols, y.cols, b.field, sol)


def commutant_dimension(mats: list[ExactMatrix]) -> int:
    """Dimension over the base field of {X : XA == AX for all A}.

    Brute force: sets up the commutation equations in the n^2 unknown
    entries of X and counts the kernel.
    """
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].rows
    field = mats[0].field
    for a in mats:
        if not a.is_square() or a.rows != n:
            raise DimensionError("commutant needs square matrices of equal size")
        if a.field is not field:
            raise FieldMismatchError("commutant across different fields")
    zero = field.zero
    rows = []
    # unknown X flattened row-major: X[a][b] -> index a*n + b
    for m in mats:
        e = m.ent
        for i in range(n):
            for j in range(n):
                row = [zero] * (n * n)
                # (XA - AX)[i][j] = sum_k X[i][k] A[k][j] - A[i][k] X[k][j]
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + e[k][j]
                    row[k * n + j] = row[k * n + j] - e[i][k]
                rows.append(row)
    system = ExactMatrix(len(rows), n * n, field, rows)
    return n * n - rank(system)


def herm_dot(u: list, v: list):
    """Standard sesquilinear form sum conj(u_i) v_i (conjugate-linear in u)."""
    it = iter(zip(u, v))
    x, y = next(it)
    acc = _conj(x) * y
    for x, y in it:
        acc = acc + _conj(x) * y
    return acc


def vec_dot(u: list, v: list):
    it = iter(zip(u, v))
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def _conj(x):
    return x.conjugate() if isinstance(x, GaussianRational) else x


def conj_vec(field: Field, u: list) -> list:
    return [conj_scalar(field, x) for x in u]
