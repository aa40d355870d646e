"""Structure-constant representations of Hom-algebras.

Conventions, fixed once and used everywhere:

* vectors are tuples of Scalars in basis coordinates;
* a :class:`LinearMap` acts by columns: the image of basis vector ``e_j`` is
  ``sum_i entries[i][j] * e_i``;
* a :class:`BilinearOp` stores a rank-3 tensor ``c`` with
  ``e_i o e_j = sum_k c[i][j][k] * e_k``.

Exact inversion and nullspace computations are restricted to parameter-free
entries; parametric algebras must be specialized at a rational point first.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalar import Scalar, as_rational

__all__ = [
    "LinearMap",
    "BilinearOp",
    "Signature",
    "RotaBaxter",
    "HomAlgebra",
    "nullspace",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "zero_vector",
    "basis_vector",
]


def _coerce_scalar(value, params: tuple[str, ...]) -> Scalar:
    if isinstance(value, Scalar):
        if value.params != params:
            raise ValueError(
                f"parameter list mismatch: expected {params!r}, got {value.params!r}"
            )
        return value
    return Scalar.constant(as_rational(value), params)


# -- vectors ------------------------------------------------------------------


def zero_vector(dim: int, params: tuple[str, ...] = ()) -> tuple[Scalar, ...]:
    z = Scalar.zero(params)
    return (z,) * dim


def basis_vector(i: int, dim: int, params: tuple[str, ...] = ()) -> tuple[Scalar, ...]:
    one = Scalar.one(params)
    zero = Scalar.zero(params)
    return tuple(one if j == i else zero for j in range(dim))


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(s, u: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(s * a for a in u)


def vec_is_zero(u: Sequence[Scalar]) -> bool:
    return all(a.is_zero() for a in u)


# -- linear maps --------------------------------------------------------------


class LinearMap:
    """A square matrix of Scalars acting on column coordinate vectors."""

    __slots__ = ("dim", "params", "entries")

    def __init__(self, entries: Sequence[Sequence[object]], params: Iterable[str] = ()):
        params = tuple(params)
        rows = tuple(tuple(_coerce_scalar(x, params) for x in row) for row in entries)
        dim = len(rows)
        if dim == 0 or any(len(row) != dim for row in rows):
            raise ValueError("linear map must be a nonempty square matrix")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LinearMap is immutable")

    @classmethod
    def identity(cls, dim: int, params: Iterable[str] = ()) -> "LinearMap":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)], params)

    @classmethod
    def zero(cls, dim: int, params: Iterable[str] = ()) -> "LinearMap":
        return cls([[0] * dim for _ in range(dim)], params)

    @classmethod
    def diagonal(cls, values: Sequence[object], params: Iterable[str] = ()) -> "LinearMap":
        dim = len(values)
        return cls(
            [[values[i] if i == j else 0 for j in range(dim)] for i in range(dim)],
            params,
        )

    @classmethod
    def from_fractions(cls, rows: Sequence[Sequence[object]], params: Iterable[str] = ()) -> "LinearMap":
        return cls(rows, params)

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i][j] for i in range(self.dim))

    def apply(self, vector: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(vector) != self.dim:
            raise ValueError(f"dimension mismatch: map dim {self.dim}, vector {len(vector)}")
        return tuple(
            sum((self.entries[i][j] * vector[j] for j in range(self.dim)),
                Scalar.zero(self.params))
            for i in range(self.dim)
        )

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other: (self.compose(other))(v) == self(other(v))."""
        if not isinstance(other, LinearMap) or other.dim != self.dim:
            raise ValueError("dimension mismatch in composition")
        zero = Scalar.zero(self.params)
        rows = [
            [
                sum((self.entries[i][k] * other.entries[k][j] for k in range(self.dim)), zero)
                for j in range(self.dim)
            ]
            for i in range(self.dim)
        ]
        return LinearMap(rows, self.params)

    def power(self, n: int) -> "LinearMap":
        if n < 0:
            raise ValueError("negative power")
        result = LinearMap.identity(self.dim, self.params)
        base = self
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base)
            n >>= 1
        return result

    def scale(self, s) -> "LinearMap":
        s = _coerce_scalar(s, self.params)
        return LinearMap([[s * x for x in row] for row in self.entries], self.params)

    def __add__(self, other):
        if not isinstance(other, LinearMap) or other.dim != self.dim:
            return NotImplemented
        return LinearMap(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.params,
        )

    def __sub__(self, other):
        if not isinstance(other, LinearMap) or other.dim != self.dim:
            return NotImplemented
        return LinearMap(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.params,
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.dim == other.dim
            and self.params == other.params
            and self.entries == other.entries
        )

    __hash__ = None

    def is_identity(self) -> bool:
        return self == LinearMap.identity(self.dim, self.params)

    def is_constant(self) -> bool:
        return all(x.is_constant() for row in self.entries for x in row)

    def to_fraction_rows(self) -> list[list[Fraction]]:
        if not self.is_constant():
            raise ValueError("parametric entries; specialize at a rational point first")
        return [[x.constant_value() for x in row] for row in self.entries]

    def inverse(self) -> "LinearMap":
        """Exact inverse via Gauss-Jordan elimination over the rationals.

        Restricted to parameter-free maps; raises on singular input.
        """
        a = self.to_fraction_rows()
        n = self.dim
        inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col]), None)
            if pivot is None:
                raise ValueError("singular matrix")
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
            for r in range(n):
                if r == col or not a[r][col]:
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return LinearMap(inv, self.params)

    def commutes_with(self, other: "LinearMap") -> bool:
        return self.compose(other) == other.compose(self)

    def substitute(self, assignment: Mapping[str, object]) -> "LinearMap":
        rows = [[x.substitute(assignment) for x in row] for row in self.entries]
        kept = rows[0][0].params if rows else ()
        return LinearMap(rows, kept)

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"LinearMap[{rows}]"


# -- bilinear operations -------------------------------------------------------


class BilinearOp:
    """A bilinear operation as a dim x dim x dim tensor of Scalars."""

    __slots__ = ("dim", "params", "c")

    def __init__(self, c: Sequence[Sequence[Sequence[object]]], params: Iterable[str] = ()):
        params = tuple(params)
        tensor = tuple(
            tuple(tuple(_coerce_scalar(x, params) for x in vec) for vec in row)
            for row in c
        )
        dim = len(tensor)
        if dim == 0 or any(
            len(row) != dim or any(len(vec) != dim for vec in row) for row in tensor
        ):
            raise ValueError("structure constants must form a cubic tensor")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "c", tensor)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearOp is immutable")

    @classmethod
    def zero(cls, dim: int, params: Iterable[str] = ()) -> "BilinearOp":
        return cls([[[0] * dim for _ in range(dim)] for _ in range(dim)], params)

    def pair(self, i: int, j: int) -> tuple[Scalar, ...]:
        """Coordinates of e_i o e_j."""
        return self.c[i][j]

    def apply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("dimension mismatch in bilinear application")
        out = [Scalar.zero(self.params) for _ in range(self.dim)]
        for p, up in enumerate(u):
            if up.is_zero():
                continue
            for q, vq in enumerate(v):
                if vq.is_zero():
                    continue
                coeff = up * vq
                for k, ck in enumerate(self.c[p][q]):
                    if not ck.is_zero():
                        out[k] = out[k] + coeff * ck
        return tuple(out)

    def compose_output(self, m: LinearMap) -> "BilinearOp":
        """The operation followed by m: (x, y) -> m(x o y)."""
        if m.dim != self.dim:
            raise ValueError("dimension mismatch")
        zero = Scalar.zero(self.params)
        c = [
            [
                [
                    sum((self.c[i][j][t] * m.entries[k][t] for t in range(self.dim)), zero)
                    for k in range(self.dim)
                ]
                for j in range(self.dim)
            ]
            for i in range(self.dim)
        ]
        return BilinearOp(c, self.params)

    def precompose(self, left: LinearMap | None = None, right: LinearMap | None = None) -> "BilinearOp":
        """(x, y) -> left(x) o right(y), identity where a side is None."""
        for m in (left, right):
            if m is not None and m.dim != self.dim:
                raise ValueError("dimension mismatch")
        d = self.dim
        lcols = [
            left.col(i) if left is not None else basis_vector(i, d, self.params)
            for i in range(d)
        ]
        rcols = [
            right.col(j) if right is not None else basis_vector(j, d, self.params)
            for j in range(d)
        ]
        c = [[self.apply(lcols[i], rcols[j]) for j in range(d)] for i in range(d)]
        return BilinearOp(c, self.params)

    def opposite(self) -> "BilinearOp":
        """Swap the arguments: c[i][j][k] -> c[j][i][k]."""
        d = self.dim
        return BilinearOp(
            [[self.c[j][i] for j in range(d)] for i in range(d)], self.params
        )

    def scale(self, s) -> "BilinearOp":
        s = _coerce_scalar(s, self.params)
        return BilinearOp(
            [[[s * x for x in vec] for vec in row] for row in self.c], self.params
        )

    def __add__(self, other):
        if not isinstance(other, BilinearOp) or other.dim != self.dim:
            return NotImplemented
        return BilinearOp(
            [
                [
                    [a + b for a, b in zip(v1, v2)]
                    for v1, v2 in zip(r1, r2)
                ]
                for r1, r2 in zip(self.c, other.c)
            ],
            self.params,
        )

    def __sub__(self, other):
        if not isinstance(other, BilinearOp) or other.dim != self.dim:
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (
            isinstance(other, BilinearOp)
            and self.dim == other.dim
            and self.params == other.params
            and self.c == other.c
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.c for vec in row for x in vec)

    def is_constant(self) -> bool:
        return all(x.is_constant() for row in self.c for vec in row for x in vec)

    def substitute(self, assignment: Mapping[str, object]) -> "BilinearOp":
        c = [
            [[x.substitute(assignment) for x in vec] for vec in row]
            for row in self.c
        ]
        kept = c[0][0][0].params if c else ()
        return BilinearOp(c, kept)

    def __repr__(self):
        return f"BilinearOp(dim={self.dim})"


# -- signatures and algebras ---------------------------------------------------

ONE_OP_CLASSES = ("associative", "lie", "prelie-left", "prelie-right", "zinbiel")
CLASSES = ONE_OP_CLASSES + ("dendriform", "tridendriform", "plain")


@dataclass(frozen=True)
class Signature:
    """Names the algebra class and its operation set."""

    cls: str
    op_names: tuple[str, ...]

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise ValueError(f"unknown signature class {self.cls!r}")
        names = tuple(self.op_names)
        object.__setattr__(self, "op_names", names)
        if len(set(names)) != len(names) or not names:
            raise ValueError("operation names must be nonempty and unique")
        if self.cls in ONE_OP_CLASSES and len(names) != 1:
            raise ValueError(f"class {self.cls!r} requires exactly one operation")
        if self.cls == "dendriform" and set(names) != {"left", "right"}:
            raise ValueError("dendriform signature requires operations 'left' and 'right'")
        if self.cls == "tridendriform" and set(names) != {"left", "right", "dot"}:
            raise ValueError(
                "tridendriform signature requires operations 'left', 'right' and 'dot'"
            )

    @property
    def one_op(self) -> bool:
        return len(self.op_names) == 1

    @classmethod
    def associative(cls, op: str = "mul") -> "Signature":
        return cls("associative", (op,))

    @classmethod
    def lie(cls, op: str = "bracket") -> "Signature":
        return cls("lie", (op,))

    @classmethod
    def prelie(cls, side: str = "left", op: str = "mul") -> "Signature":
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        return cls(f"prelie-{side}", (op,))

    @classmethod
    def zinbiel(cls, op: str = "circ") -> "Signature":
        return cls("zinbiel", (op,))

    @classmethod
    def dendriform(cls) -> "Signature":
        return cls("dendriform", ("left", "right"))

    @classmethod
    def tridendriform(cls) -> "Signature":
        return cls("tridendriform", ("left", "right", "dot"))

    @classmethod
    def plain(cls, op_names: Iterable[str] = ("mul",)) -> "Signature":
        return cls("plain", tuple(op_names))


@dataclass(frozen=True)
class RotaBaxter:
    """Weight and operator of a Rota-Baxter structure."""

    theta: Scalar
    R: LinearMap


@dataclass(frozen=True)
class HomAlgebra:
    """A finite-dimensional algebra with named operations and a twist map."""

    dim: int
    params: tuple[str, ...]
    signature: Signature
    ops: dict[str, BilinearOp]
    alpha: LinearMap
    rb: RotaBaxter | None = None
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "ops", dict(self.ops))
        if set(self.ops) != set(self.signature.op_names):
            raise ValueError(
                f"operation names {sorted(self.ops)!r} do not match signature "
                f"{self.signature.op_names!r}"
            )
        for name, op in self.ops.items():
            if op.dim != self.dim or op.params != self.params:
                raise ValueError(f"operation {name!r} has mismatched dim or parameters")
        if self.alpha.dim != self.dim or self.alpha.params != self.params:
            raise ValueError("twist map has mismatched dim or parameters")
        if self.rb is not None:
            if self.rb.R.dim != self.dim or self.rb.R.params != self.params:
                raise ValueError("Rota-Baxter operator has mismatched dim or parameters")
            if self.rb.theta.params != self.params:
                raise ValueError("Rota-Baxter weight has mismatched parameters")
        labels = tuple(self.basis_labels) or tuple(f"x{i + 1}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise ValueError("wrong number of basis labels")
        object.__setattr__(self, "basis_labels", labels)

    # -- accessors ----------------------------------------------------------

    @property
    def op(self) -> BilinearOp:
        """The unique operation of a one-operation algebra."""
        if len(self.ops) != 1:
            raise ValueError("algebra has more than one operation; name it explicitly")
        return next(iter(self.ops.values()))

    @property
    def op_name(self) -> str:
        if len(self.ops) != 1:
            raise ValueError("algebra has more than one operation; name it explicitly")
        return next(iter(self.ops))

    def resolve_op(self, name: str | None) -> tuple[str, BilinearOp]:
        if name is None:
            return self.op_name, self.op
        if name not in self.ops:
            raise ValueError(f"no operation named {name!r}; has {sorted(self.ops)!r}")
        return name, self.ops[name]

    def is_parameter_free(self) -> bool:
        if not all(op.is_constant() for op in self.ops.values()):
            return False
        if not self.alpha.is_constant():
            return False
        if self.rb is not None:
            if not (self.rb.R.is_constant() and self.rb.theta.is_constant()):
                return False
        return True

    # -- derived copies -----------------------------------------------------

    def with_alpha(self, alpha: LinearMap) -> "HomAlgebra":
        return replace(self, alpha=alpha)

    def with_ops(self, ops: dict[str, BilinearOp], signature: Signature | None = None) -> "HomAlgebra":
        return replace(self, ops=ops, signature=signature or self.signature)

    def with_rb(self, rb: RotaBaxter | None) -> "HomAlgebra":
        return replace(self, rb=rb)

    def with_identity_twist(self) -> "HomAlgebra":
        return self.with_alpha(LinearMap.identity(self.dim, self.params))

    def specialize(self, assignment: Mapping[str, object]) -> "HomAlgebra":
        """Substitute rationals for a subset of the parameters."""
        for name in assignment:
            if name not in self.params:
                raise ValueError(f"unknown parameter {name!r} in assignment")
        kept = tuple(p for p in self.params if p not in assignment)
        ops = {name: op.substitute(assignment) for name, op in self.ops.items()}
        rb = None
        if self.rb is not None:
            rb = RotaBaxter(
                self.rb.theta.substitute(assignment), self.rb.R.substitute(assignment)
            )
        return replace(
            self,
            params=kept,
            ops=ops,
            alpha=self.alpha.substitute(assignment),
            rb=rb,
        )


# -- exact nullspace -----------------------------------------------------------


def _to_fraction_row(row: Sequence[object]) -> list[Fraction]:
    out = []
    for x in row:
        if isinstance(x, Scalar):
            out.append(x.constant_value())
        else:
            out.append(as_rational(x))
    return out


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[object]]) -> list[tuple[Fraction, ...]]:
    """Deterministic basis of the solution space of a homogeneous system.

    Rows may contain constant Scalars or rationals; parametric entries are
    refused.  Free coordinates are parameterized in ascending index order,
    each basis vector carrying a 1 in its free position.
    """
    frac_rows = [_to_fraction_row(r) for r in rows]
    if not frac_rows:
        raise ValueError("no rows; the ambient dimension is unknown")
    ncols = len(frac_rows[0])
    if any(len(r) != ncols for r in frac_rows):
        raise ValueError("ragged rows")
    reduced, pivots = rref(frac_rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pcol in zip(reduced, pivots):
            vec[pcol] = -row[free]
        basis.append(tuple(vec))
    return basis
