"""A finite-dimensional space with a bilinear form, an operator and a basis.

Conventions used throughout the package:

* ``gram[i, j] = <e_i, e_j>`` (row index is the left argument), so that
  ``<x, y> = x^T G y`` for column coordinate vectors.
* ``op[r, c]`` is the coefficient of ``e_r`` in ``f(e_c)``; columns are images.
* A transition matrix ``T`` has the coordinates of the new basis vector
  ``w_c`` (in the old basis) as column ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .errors import FieldMismatchError, ShapeError, StructureError
from .matrix import Matrix, mat_inverse, mat_mul
from .scalar import Field, Scalar, zero


@dataclass(frozen=True)
class StructureSpec:
    labels: tuple[str, ...]
    gram: Matrix
    op: Matrix

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.labels)
        if n == 0:
            raise StructureError("basis must contain at least one vector")
        for lab in self.labels:
            if not isinstance(lab, str) or not lab:
                raise StructureError(f"basis label {lab!r} is not a non-empty string")
        if len(set(self.labels)) != n:
            dups = sorted({lab for lab in self.labels if self.labels.count(lab) > 1})
            raise StructureError(f"duplicate basis labels: {', '.join(dups)}")
        for name, m in (("gram", self.gram), ("operator", self.op)):
            if m.shape != (n, n):
                raise ShapeError(f"{name} is {m.rows}x{m.cols} but the basis has {n} vectors")
        if self.gram.field is not self.op.field:
            raise FieldMismatchError(
                f"gram is {self.gram.field.value} but operator is {self.op.field.value}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def field(self) -> Field:
        return self.gram.field

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def vector(self, coeffs: Mapping[str, Any]) -> tuple[Scalar, ...]:
        """Coordinates of ``sum(coeffs[label] * e_label)``."""
        x = [zero(self.field)] * self.n
        for label, c in coeffs.items():
            x[self.index(label)] = Scalar.coerce(c, self.field)
        return tuple(x)


def _as_matrix(value: Any, name: str, field: Field | None) -> Matrix:
    if isinstance(value, Matrix):
        m = value
    else:
        try:
            m = Matrix.from_rows(value)
        except ShapeError as exc:
            raise ShapeError(f"{name}: {exc}") from None
    if field is not None and m.field is not field:
        if field is Field.RATIONAL:
            raise FieldMismatchError(f"{name} holds non-rational entries in a rational space")
        m = m.in_field(field)
    return m


def load_space(raw: Mapping[str, Any]) -> StructureSpec:
    """Build a validated :class:`StructureSpec` from a parsed problem record.

    ``raw`` needs ``basis`` (labels), ``gram`` and ``operator`` (row lists of
    scalars, or :class:`Matrix`); ``field`` is optional and otherwise
    inferred from the entries.
    """
    field = raw.get("field")
    if isinstance(field, str):
        field = Field(field)
    labels = tuple(raw["basis"])
    gram = _as_matrix(raw["gram"], "gram", field)
    op = _as_matrix(raw["operator"], "operator", field)
    if field is None and gram.field is not op.field:
        joined = Field.join(gram.field, op.field)
        gram, op = gram.in_field(joined), op.in_field(joined)
    return StructureSpec(labels, gram, op)


def _coords(spec: StructureSpec, x: Sequence[Any], name: str) -> list[Scalar]:
    if len(x) != spec.n:
        raise ShapeError(f"{name} has length {len(x)}, expected {spec.n}")
    return [Scalar.coerce(v, spec.field) for v in x]


def bilinear_eval(spec: StructureSpec, x: Sequence[Any], y: Sequence[Any]) -> Scalar:
    xs = _coords(spec, x, "x")
    ys = _coords(spec, y, "y")
    total = zero(spec.field)
    for i, xi in enumerate(xs):
        if not xi:
            continue
        for j, yj in enumerate(ys):
            if yj:
                total = total + xi * spec.gram[i, j] * yj
    return total


def apply_operator(spec: StructureSpec, x: Sequence[Any]) -> tuple[Scalar, ...]:
    return spec.op.apply(_coords(spec, x, "x"))


def change_basis(spec: StructureSpec, transition: Matrix,
                 labels: Sequence[str] | None = None) -> StructureSpec:
    """Re-express the form and the operator in the basis given by ``transition``.

    The new Gram matrix is ``T^T G T`` and the new operator matrix is
    ``T^-1 F T``.  ``labels`` names the new basis vectors; by default the old
    labels are reused.
    """
    if transition.shape != (spec.n, spec.n):
        raise ShapeError(f"transition is {transition.rows}x{transition.cols}, expected {spec.n}x{spec.n}")
    if transition.field is not spec.field:
        if transition.field is Field.GAUSSIAN_RATIONAL:
            raise FieldMismatchError("gaussian transition matrix for a rational space")
        transition = transition.in_field(spec.field)
    inv = mat_inverse(transition)
    gram = mat_mul(mat_mul(transition.T, spec.gram), transition)
    op = mat_mul(mat_mul(inv, spec.op), transition)
    return StructureSpec(tuple(labels) if labels is not None else spec.labels, gram, op)
