"""Dense exact matrices and the two operations everything else leans on."""

from __future__ import annotations

from typing import Any, Iterable, Iterator, Sequence

from .errors import FieldMismatchError, ShapeError, SingularMatrixError
from .scalar import Field, Scalar, one, zero


class Matrix:
    """Row-major matrix of :class:`Scalar` sharing one field tag."""

    __slots__ = ("rows", "cols", "entries", "field")

    rows: int
    cols: int
    entries: tuple[Scalar, ...]
    field: Field

    def __init__(self, rows: int, cols: int, entries: Iterable[Any],
                 field: Field | None = None):
        raw = [Scalar.coerce(e) for e in entries]
        if rows < 0 or cols < 0 or len(raw) != rows * cols:
            raise ShapeError(f"{len(raw)} entries cannot fill a {rows}x{cols} matrix")
        if field is None:
            field = Field.RATIONAL
            for e in raw:
                field = Field.join(field, e.field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(e.in_field(field) for e in raw))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows, self.cols, self.entries, self.field))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: Field | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ShapeError(f"row {i} has {len(r)} entries, expected {width}")
        return cls(len(rows), width, [e for r in rows for e in r], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], field: Field | None = None) -> "Matrix":
        return cls.from_rows(columns, field).transpose()

    @classmethod
    def identity(cls, n: int, field: Field = Field.RATIONAL) -> "Matrix":
        o, z = one(field), zero(field)
        return cls(n, n, [o if i == j else z for i in range(n) for j in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = Field.RATIONAL) -> "Matrix":
        return cls(rows, cols, [zero(field)] * (rows * cols), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"({r}, {c}) outside {self.rows}x{self.cols} matrix")
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Scalar, ...]:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def column(self, c: int) -> tuple[Scalar, ...]:
        return self.entries[c::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def __iter__(self) -> Iterator[tuple[Scalar, ...]]:
        return (self.row(r) for r in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[r, c] for c in range(self.cols) for r in range(self.rows)],
                      self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def in_field(self, field: Field) -> "Matrix":
        if field is self.field:
            return self
        return Matrix(self.rows, self.cols, self.entries, field)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shapes {self.shape} and {other.shape} differ")
        if self.field is not other.field:
            raise FieldMismatchError(f"fields {self.field.value} and {other.field.value} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)], self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)], self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries], self.field)

    def scale(self, s: Any) -> "Matrix":
        s = Scalar.coerce(s)
        return Matrix(self.rows, self.cols, [s * a for a in self.entries],
                      Field.join(self.field, s.field))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def apply(self, x: Sequence[Any]) -> tuple[Scalar, ...]:
        """Matrix-vector product with ``x`` read as a column."""
        if len(x) != self.cols:
            raise ShapeError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        xs = [Scalar.coerce(v, self.field) for v in x]
        z = zero(self.field)
        return tuple(sum((a * b for a, b in zip(self.row(r), xs) if a and b), z)
                     for r in range(self.rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [self[r, c] for r in rows for c in cols], self.field)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def nonzero(self) -> Iterator[tuple[int, int]]:
        """Positions of nonzero entries in row-major order."""
        for k, e in enumerate(self.entries):
            if e:
                yield divmod(k, self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and self.field is other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in self.row(r)) for r in range(self.rows))
        return f"Matrix[{body}]"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.field is not b.field:
        raise FieldMismatchError(f"fields {a.field.value} and {b.field.value} differ")
    z = zero(a.field)
    bcols = [b.column(c) for c in range(b.cols)]
    out = []
    for r in range(a.rows):
        arow = a.row(r)
        for bc in bcols:
            out.append(sum((x * y for x, y in zip(arow, bc) if x and y), z))
    return Matrix(a.rows, b.cols, out, a.field)


def rank(a: Matrix) -> int:
    work = a.to_rows()
    r = 0
    for c in range(a.cols):
        pivot = next((i for i in range(r, a.rows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, a.rows):
            if work[i][c]:
                factor = work[i][c] / work[r][c]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        r += 1
    return r


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.

    Raises :class:`SingularMatrixError` carrying the rank when ``a`` is not
    invertible.
    """
    if not a.is_square:
        raise ShapeError(f"cannot invert non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    o, z = one(a.field), zero(a.field)
    work = [list(a.row(i)) + [o if i == j else z for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            raise SingularMatrixError(rank(a), n)
        work[c], work[pivot] = work[pivot], work[c]
        inv = work[c][c].inverse()
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                factor = work[i][c]
                work[i] = [x - factor * y for x, y in zip(work[i], work[c])]
    return Matrix(n, n, [e for row in work for e in row[n:]], a.field)


def unit_vector(n: int, i: int, field: Field = Field.RATIONAL) -> tuple[Scalar, ...]:
    return tuple(one(field) if k == i else zero(field) for k in range(n))
