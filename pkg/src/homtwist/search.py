"""Desk-scale discovery: Rota-Baxter operator grids and exact centroids.

``search_rb`` enumerates every matrix over a finite rational entry grid that
satisfies the Rota-Baxter identity, pruning candidates pair by pair; it runs
on a compiled kernel when available (the data is pre-scaled to integers) and
otherwise on a pure-Python twin of the same algorithm.  ``search_rb_oracle``
is an independent naive implementation used to cross-validate the search; it
shares nothing with it beyond rational arithmetic.  ``centroid_basis`` solves
the linear centroid conditions exactly.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from math import lcm

from . import _rbkernel_py
from .core import HomAlgebra, LinearMap, nullspace
from .scalar import Scalar, as_rational

try:
    from . import _rbkernel
except ImportError:  # extension not built; the pure twin handles everything
    _rbkernel = None

HAVE_COMPILED_KERNEL = _rbkernel is not None

__all__ = [
    "SearchConfig",
    "search_rb",
    "search_rb_oracle",
    "centroid_basis",
    "search_budget",
    "DEFAULT_SEARCH_BUDGET",
    "BUDGET_ENV_VAR",
    "HAVE_COMPILED_KERNEL",
]

DEFAULT_SEARCH_BUDGET = 10**8
BUDGET_ENV_VAR = "HOMTWIST_SEARCH_BUDGET"

# Headroom below 2^63 for the compiled kernel's intermediate sums.
_INT64_GUARD = 2**62


class SearchConfig:
    """Normalized search parameters.

    The entry grid is deduplicated and sorted ascending; the weight must be
    parameter-free.  ``op_name`` defaults to the algebra's single operation
    and ``limit`` truncates the result list.
    """

    __slots__ = ("entry_set", "weight", "op_name", "limit")

    def __init__(self, entry_set, weight=0, op_name: str | None = None,
                 limit: int | None = None):
        entries = sorted({as_rational(e) for e in entry_set})
        if not entries:
            raise ValueError("entry set must be nonempty")
        self.entry_set: tuple[Fraction, ...] = tuple(entries)
        if isinstance(weight, Scalar):
            weight = weight.constant_value()
        self.weight: Fraction = as_rational(weight)
        self.op_name = op_name
        if limit is not None and (not isinstance(limit, int) or limit < 0):
            raise ValueError("limit must be a nonnegative integer")
        self.limit = limit

    def __repr__(self):
        entries = ",".join(str(e) for e in self.entry_set)
        return f"SearchConfig(entries=[{entries}], weight={self.weight}, op={self.op_name}, limit={self.limit})"


def search_budget() -> int:
    """Candidate budget; the environment variable overrides the default."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_SEARCH_BUDGET
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


def _require_parameter_free(A: HomAlgebra):
    if not A.is_parameter_free():
        raise ValueError("parametric algebra; evaluate its parameters at rationals first")


def _check_budget(A: HomAlgebra, cfg: SearchConfig) -> int:
    count = len(cfg.entry_set) ** (A.dim * A.dim)
    budget = search_budget()
    if count > budget:
        raise ValueError(
            f"search budget exceeded: {count} candidates over a budget of {budget} "
            f"(override with {BUDGET_ENV_VAR})"
        )
    return count


def _fraction_tensor(A: HomAlgebra, op_name: str | None):
    _, op = A.resolve_op(op_name)
    return [[[x.constant_value() for x in vec] for vec in row] for row in op.c]


def _scaled_problem(A: HomAlgebra, cfg: SearchConfig):
    """Clear denominators: integer entry grid, tensor and weight plus their scales."""
    c = _fraction_tensor(A, cfg.op_name)
    de = lcm(*(f.denominator for f in cfg.entry_set))
    dc = lcm(*(x.denominator for row in c for vec in row for x in vec))
    dt = cfg.weight.denominator
    entries_scaled = [int(f * de) for f in cfg.entry_set]
    c_flat = [int(x * dc) for row in c for vec in row for x in vec]
    t_scaled = int(cfg.weight * dt)
    return entries_scaled, c_flat, t_scaled, de, dt


def _fits_int64(dim: int, entries_scaled, c_flat, t_scaled, de, dt) -> bool:
    max_r = max((abs(e) for e in entries_scaled), default=0)
    max_c = max((abs(x) for x in c_flat), default=0)
    main = dt * 3 * dim * dim * max_r * max_r * max_c
    theta_side = de * abs(t_scaled) * dim * max_r * max_c
    return max(main, theta_side) < _INT64_GUARD


def _select_kernel(kernel: str | None, fits: bool):
    if kernel is None:
        if HAVE_COMPILED_KERNEL and fits:
            return _rbkernel
        return _rbkernel_py
    if kernel == "python":
        return _rbkernel_py
    if kernel == "c":
        if not HAVE_COMPILED_KERNEL:
            raise ValueError("compiled kernel is not available")
        if not fits:
            raise ValueError("problem exceeds 64-bit bounds; use the python kernel")
        return _rbkernel
    raise ValueError("kernel must be None, 'c' or 'python'")


def _digits_to_map(A: HomAlgebra, cfg: SearchConfig, digits) -> LinearMap:
    d = A.dim
    rows = [
        [cfg.entry_set[digits[p * d + i]] for i in range(d)]
        for p in range(d)
    ]
    return LinearMap(rows, A.params)


def _lex_key(m: LinearMap):
    return tuple(x.constant_value() for row in m.entries for x in row)


def search_rb(A: HomAlgebra, cfg: SearchConfig, *, kernel: str | None = None) -> list[LinearMap]:
    """All matrices over the entry grid satisfying the Rota-Baxter identity.

    Deterministic: results come in lexicographic order of flattened entries.
    Raises when the candidate count exceeds the budget or the algebra is
    parametric.
    """
    _require_parameter_free(A)
    _check_budget(A, cfg)
    entries_scaled, c_flat, t_scaled, de, dt = _scaled_problem(A, cfg)
    fits = _fits_int64(A.dim, entries_scaled, c_flat, t_scaled, de, dt)
    impl = _select_kernel(kernel, fits)
    limit = -1 if cfg.limit is None else cfg.limit
    found = impl.enumerate_rb(A.dim, entries_scaled, c_flat, t_scaled, de, dt, limit)
    maps = [_digits_to_map(A, cfg, digits) for digits in found]
    maps.sort(key=_lex_key)
    return maps


def search_rb_oracle(A: HomAlgebra, cfg: SearchConfig) -> list[LinearMap]:
    """Naive reference search: per-pair identity evaluation, no pruning.

    Kept deliberately independent of search_rb (plain Fraction arithmetic on
    nested lists) so that agreement between the two is meaningful evidence.
    """
    _require_parameter_free(A)
    _check_budget(A, cfg)
    c = _fraction_tensor(A, cfg.op_name)
    theta = cfg.weight
    d = A.dim
    zero = Fraction(0)

    def bilinear(u, v):
        out = [zero] * d
        for p in range(d):
            if u[p]:
                for q in range(d):
                    if v[q]:
                        coeff = u[p] * v[q]
                        for k in range(d):
                            out[k] += coeff * c[p][q][k]
        return out

    results = []
    for combo in itertools.product(cfg.entry_set, repeat=d * d):
        rows = [list(combo[p * d:(p + 1) * d]) for p in range(d)]
        cols = [[rows[p][i] for p in range(d)] for i in range(d)]
        residuals = []
        for i in range(d):
            e_i = [Fraction(1) if p == i else zero for p in range(d)]
            for j in range(d):
                e_j = [Fraction(1) if q == j else zero for q in range(d)]
                lhs = bilinear(cols[i], cols[j])
                inner = bilinear(cols[i], e_j)
                for k, x in enumerate(bilinear(e_i, cols[j])):
                    inner[k] += x
                for k in range(d):
                    inner[k] += theta * c[i][j][k]
                for k in range(d):
                    rhs_k = sum(rows[k][m] * inner[m] for m in range(d))
                    residuals.append(lhs[k] - rhs_k)
        if all(x == 0 for x in residuals):
            results.append(LinearMap(rows, A.params))
            if cfg.limit is not None and len(results) >= cfg.limit:
                break
    results.sort(key=_lex_key)
    return results


def centroid_basis(A: HomAlgebra) -> list[LinearMap]:
    """Exact basis of the centroid of a parameter-free one-operation algebra.

    Solves the homogeneous linear system expressing a(x o y) = a(x) o y and
    a(x o y) = x o a(y) on all basis pairs; the basis ordering follows the
    pivot structure of the reduced system (unknowns a[r][c] flattened
    row-major).
    """
    _require_parameter_free(A)
    c = _fraction_tensor(A, None)
    d = A.dim
    n2 = d * d
    zero = Fraction(0)
    rows = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                row1 = [zero] * n2
                row2 = [zero] * n2
                for m in range(d):
                    row1[k * d + m] += c[i][j][m]
                    row2[k * d + m] += c[i][j][m]
                for p in range(d):
                    row1[p * d + i] -= c[p][j][k]
                for q in range(d):
                    row2[q * d + j] -= c[i][q][k]
                rows.append(row1)
                rows.append(row2)
    basis = nullspace(rows)
    return [
        LinearMap([[vec[r * d + s] for s in range(d)] for r in range(d)], A.params)
        for vec in basis
    ]
