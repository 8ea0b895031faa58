"""
Label-preserving matrices over arbitrary rings

Row and column labels survive submatrix extraction, so a quasi-determinant
index always names an entry of the original matrix.
"""

from itertools import combinations, product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ncyb.matrix.ops import MatrixOps, RingOps
from ncyb.utils.exceptions import LabelError, ShapeError

Label = Any


class LabeledMat:
    """Immutable matrix with original row/column labels"""

    __slots__ = ("rows", "cols", "entries", "ops", "_ri", "_ci")

    def __init__(
        self,
        rows: Sequence[Label],
        cols: Sequence[Label],
        entries: Sequence[Sequence[Any]],
        ops: RingOps,
    ):
        rows, cols = tuple(rows), tuple(cols)
        grid = tuple(tuple(r) for r in entries)
        if len(grid) != len(rows) or any(len(r) != len(cols) for r in grid):
            raise ShapeError(
                f"entry grid does not match labels ({len(rows)}x{len(cols)})"
            )
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise LabelError("labels within a list must be distinct")
        self.rows = rows
        self.cols = cols
        self.entries = grid
        self.ops = ops
        self._ri = {r: k for k, r in enumerate(rows)}
        self._ci = {c: k for k, c in enumerate(cols)}

    # construction

    @classmethod
    def from_rows(
        cls,
        grid: Sequence[Sequence[Any]],
        ops: RingOps,
        rows: Optional[Sequence[Label]] = None,
        cols: Optional[Sequence[Label]] = None,
    ) -> "LabeledMat":
        m = len(grid)
        n = len(grid[0]) if m else 0
        rows = rows if rows is not None else range(1, m + 1)
        cols = cols if cols is not None else range(1, n + 1)
        return cls(rows, cols, [[ops.convert(e) for e in r] for r in grid], ops)

    @classmethod
    def zeros(cls, m: int, n: int, ops: RingOps) -> "LabeledMat":
        z = ops.zero()
        return cls(range(1, m + 1), range(1, n + 1), [[z] * n for _ in range(m)], ops)

    @classmethod
    def identity(cls, n: int, ops: RingOps) -> "LabeledMat":
        return cls.diag([ops.one()] * n, ops)

    @classmethod
    def diag(cls, values: Sequence[Any], ops: RingOps) -> "LabeledMat":
        n = len(values)
        z = ops.zero()
        grid = [[values[i] if i == j else z for j in range(n)] for i in range(n)]
        return cls(range(1, n + 1), range(1, n + 1), grid, ops)

    @classmethod
    def unit(cls, n: int, i: int, j: int, ops: RingOps, value: Any = None) -> "LabeledMat":
        """Matrix unit E_ij (1-based)."""
        z = ops.zero()
        v = ops.one() if value is None else value
        grid = [[v if (r, c) == (i - 1, j - 1) else z for c in range(n)] for r in range(n)]
        return cls(range(1, n + 1), range(1, n + 1), grid, ops)

    @classmethod
    def from_dict(
        cls, m: int, n: int, values: Dict[Tuple[int, int], Any], ops: RingOps
    ) -> "LabeledMat":
        """Sparse construction with 1-based positions."""
        z = ops.zero()
        grid = [[z] * n for _ in range(m)]
        for (i, j), v in values.items():
            grid[i - 1][j - 1] = v
        return cls(range(1, m + 1), range(1, n + 1), grid, ops)

    # access

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, r: Label, c: Label) -> Any:
        try:
            return self.entries[self._ri[r]][self._ci[c]]
        except KeyError as e:
            raise LabelError(f"label {e.args[0]!r} not present") from e

    def __getitem__(self, rc: Tuple[Label, Label]) -> Any:
        return self.entry(*rc)

    def nonzeros(self) -> Iterable[Tuple[int, int, Any]]:
        """(row position, col position, value) for structurally nonzero entries"""
        is_zero = self.ops.is_zero
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if not is_zero(v):
                    yield i, j, v

    def relabel(
        self, rows: Optional[Sequence[Label]] = None, cols: Optional[Sequence[Label]] = None
    ) -> "LabeledMat":
        return LabeledMat(
            rows if rows is not None else self.rows,
            cols if cols is not None else self.cols,
            self.entries,
            self.ops,
        )

    # arithmetic

    def _check_same(self, other: "LabeledMat") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "LabeledMat") -> "LabeledMat":
        self._check_same(other)
        add = self.ops.add
        grid = [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return LabeledMat(self.rows, self.cols, grid, self.ops)

    def __sub__(self, other: "LabeledMat") -> "LabeledMat":
        self._check_same(other)
        sub = self.ops.sub
        grid = [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        return LabeledMat(self.rows, self.cols, grid, self.ops)

    def __neg__(self) -> "LabeledMat":
        return self.map_entries(self.ops.neg)

    def __matmul__(self, other: "LabeledMat") -> "LabeledMat":
        return mat_mul(self, other)

    def scale(self, c: Any) -> "LabeledMat":
        """Entrywise c * a (c on the left)."""
        mul = self.ops.mul
        return self.map_entries(lambda a: mul(c, a))

    def rscale(self, c: Any) -> "LabeledMat":
        """Entrywise a * c."""
        mul = self.ops.mul
        return self.map_entries(lambda a: mul(a, c))

    def map_entries(self, f: Callable[[Any], Any], ops: Optional[RingOps] = None) -> "LabeledMat":
        grid = [[f(a) for a in row] for row in self.entries]
        return LabeledMat(self.rows, self.cols, grid, ops or self.ops)

    def transpose(self) -> "LabeledMat":
        """Swap the grid; entries are not transposed."""
        grid = [list(col) for col in zip(*self.entries)] if self.entries else []
        return LabeledMat(self.cols, self.rows, grid, self.ops)

    def is_zero(self) -> bool:
        is_zero = self.ops.is_zero
        return all(is_zero(a) for row in self.entries for a in row)

    def equals(self, other: "LabeledMat") -> bool:
        if self.shape != other.shape:
            return False
        eq = self.ops.equals
        return all(
            eq(a, b) for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def first_difference(self, other: "LabeledMat") -> Optional[Dict[str, Any]]:
        """Location and both values of the first unequal entry, or None."""
        if self.shape != other.shape:
            return {"shape": [list(self.shape), list(other.shape)]}
        eq = self.ops.equals
        for r, (ra, rb) in enumerate(zip(self.entries, other.entries)):
            for c, (a, b) in enumerate(zip(ra, rb)):
                if not eq(a, b):
                    return {
                        "row": str(self.rows[r]),
                        "col": str(self.cols[c]),
                        "lhs": self.ops.describe(a),
                        "rhs": self.ops.describe(b),
                    }
        return None

    def describe(self) -> str:
        return "[" + "; ".join(
            ", ".join(self.ops.describe(a) for a in row) for row in self.entries
        ) + "]"

    def __repr__(self) -> str:
        return f"LabeledMat(rows={self.rows}, cols={self.cols}, {self.describe()})"


def mat_mul(A: LabeledMat, B: LabeledMat) -> LabeledMat:
    """A*B with entry order a_ik * b_kj; zero entries are skipped."""
    if len(A.cols) != len(B.rows):
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    ops = A.ops
    add, mul = ops.add, ops.mul
    b_rows: List[List[Tuple[int, Any]]] = [[] for _ in B.rows]
    for k, j, v in B.nonzeros():
        b_rows[k].append((j, v))
    n = len(B.cols)
    z = ops.zero()
    grid = []
    for row in A.entries:
        acc: Dict[int, Any] = {}
        for k, a in enumerate(row):
            if ops.is_zero(a) or not b_rows[k]:
                continue
            for j, b in b_rows[k]:
                term = mul(a, b)
                acc[j] = add(acc[j], term) if j in acc else term
        grid.append([acc.get(j, z) for j in range(n)])
    return LabeledMat(A.rows, B.cols, grid, ops)


def mat_product(factors: Sequence[LabeledMat], identity: Optional[LabeledMat] = None) -> LabeledMat:
    """Left-to-right product."""
    if not factors:
        if identity is None:
            raise ShapeError("empty product needs an identity")
        return identity
    out = factors[0]
    for f in factors[1:]:
        out = mat_mul(out, f)
    return out


def commutator(A: LabeledMat, B: LabeledMat) -> LabeledMat:
    return mat_mul(A, B) - mat_mul(B, A)


def kron(A: LabeledMat, B: LabeledMat) -> LabeledMat:
    """Kronecker product, left factor major, fresh 1-based labels."""
    if A.ops != B.ops:
        raise ShapeError("kron needs a common scalar ring")
    if not A.ops.commutative:
        raise ShapeError("kron needs commutative scalars")
    ma, na = A.shape
    mb, nb = B.shape
    values: Dict[Tuple[int, int], Any] = {}
    mul = A.ops.mul
    b_nz = list(B.nonzeros())
    for i, j, a in A.nonzeros():
        for k, l, b in b_nz:
            values[(i * mb + k + 1, j * nb + l + 1)] = mul(a, b)
    return LabeledMat.from_dict(ma * mb, na * nb, values, A.ops)


def kron_all(factors: Sequence[LabeledMat]) -> LabeledMat:
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def permutation_matrix(n: int, ops: RingOps) -> LabeledMat:
    """P = sum E_ij (x) E_ji, i.e. P(u (x) v) = v (x) u."""
    one = ops.one()
    values = {((i * n) + j + 1, (j * n) + i + 1): one for i in range(n) for j in range(n)}
    return LabeledMat.from_dict(n * n, n * n, values, ops)


def labeled_submatrix(A: LabeledMat, rows: Sequence[Label], cols: Sequence[Label]) -> LabeledMat:
    for r in rows:
        if r not in A._ri:
            raise LabelError(f"row label {r!r} not present")
    for c in cols:
        if c not in A._ci:
            raise LabelError(f"column label {c!r} not present")
    grid = [[A.entries[A._ri[r]][A._ci[c]] for c in cols] for r in rows]
    return LabeledMat(rows, cols, grid, A.ops)


def drop(A: LabeledMat, i: Label, j: Label) -> LabeledMat:
    """A^{ij}: row i and column j removed."""
    if i not in A._ri:
        raise LabelError(f"row label {i!r} not present")
    if j not in A._ci:
        raise LabelError(f"column label {j!r} not present")
    return labeled_submatrix(A, [r for r in A.rows if r != i], [c for c in A.cols if c != j])


def flatten(A: LabeledMat) -> LabeledMat:
    """Operator-entried matrix as one scalar block matrix."""
    if not isinstance(A.ops, MatrixOps):
        raise ShapeError("flatten needs operator entries")
    d = A.ops.dim
    m, n = A.shape
    values: Dict[Tuple[int, int], Any] = {}
    for bi, bj, block in A.nonzeros():
        for i, j, v in block.nonzeros():
            values[(bi * d + i + 1, bj * d + j + 1)] = v
    return LabeledMat.from_dict(m * d, n * d, values, A.ops.entry_ops)


def unflatten(
    M: LabeledMat, rows: Sequence[Label], cols: Sequence[Label], dim: int
) -> LabeledMat:
    ops = MatrixOps(M.ops, dim)
    grid = []
    for bi in range(len(rows)):
        row = []
        for bj in range(len(cols)):
            block = [
                [M.entries[bi * dim + i][bj * dim + j] for j in range(dim)] for i in range(dim)
            ]
            row.append(LabeledMat(range(1, dim + 1), range(1, dim + 1), block, M.ops))
        grid.append(row)
    return LabeledMat(rows, cols, grid, ops)


def embed_operator(
    X: LabeledMat, positions: Sequence[int], factor_dims: Sequence[int]
) -> LabeledMat:
    """Place X, acting on the tensor factors `positions` (in X's own factor order),
    into the carrier with factor dimensions `factor_dims` (identity elsewhere).

    positions=(1, 0) on two factors gives P X P.
    """
    sub_dims = [factor_dims[p] for p in positions]
    size = 1
    for d in sub_dims:
        size *= d
    if X.shape != (size, size):
        raise ShapeError(f"operator of shape {X.shape} does not act on factors {positions}")
    others = [p for p in range(len(factor_dims)) if p not in positions]
    strides = []
    acc = 1
    for d in reversed(factor_dims):
        strides.append(acc)
        acc *= d
    strides.reverse()
    total = acc

    def digits(k: int, dims: Sequence[int]) -> List[int]:
        out = []
        for d in reversed(dims):
            out.append(k % d)
            k //= d
        return list(reversed(out))

    values: Dict[Tuple[int, int], Any] = {}
    for i, j, v in X.nonzeros():
        di, dj = digits(i, sub_dims), digits(j, sub_dims)
        base_i = sum(strides[p] * x for p, x in zip(positions, di))
        base_j = sum(strides[p] * x for p, x in zip(positions, dj))
        for rest in product(*[range(factor_dims[p]) for p in others]):
            off = sum(strides[p] * x for p, x in zip(others, rest))
            values[(base_i + off + 1, base_j + off + 1)] = v
    return LabeledMat.from_dict(total, total, values, X.ops)


def subsets(labels: Sequence[Label], r: int) -> List[Tuple[Label, ...]]:
    return list(combinations(labels, r))


def partial_transpose(M: LabeledMat, factor_dims: Sequence[int], factor: int) -> LabeledMat:
    """Transpose on one tensor factor only."""
    dims = list(factor_dims)
    stride = 1
    for d in dims[factor + 1 :]:
        stride *= d
    d = dims[factor]
    values: Dict[Tuple[int, int], Any] = {}
    for i, j, v in M.nonzeros():
        ai, aj = (i // stride) % d, (j // stride) % d
        i2 = i + (aj - ai) * stride
        j2 = j + (ai - aj) * stride
        values[(i2 + 1, j2 + 1)] = v
    m, n = M.shape
    return LabeledMat.from_dict(m, n, values, M.ops)
