"""Dense integer matrices with exact determinants."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense matrix of Python integers with optional row/column labels."""

    rows: tuple[tuple[int, ...], ...]
    row_labels: tuple[Hashable, ...] = field(default=())
    col_labels: tuple[Hashable, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)
        if self.row_labels and len(self.row_labels) != len(rows):
            raise ValueError("row label count does not match")
        if self.col_labels and len(self.col_labels) != self.ncols:
            raise ValueError("column label count does not match")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], row_labels=(), col_labels=()):
        return cls(tuple(tuple(r) for r in rows), tuple(row_labels), tuple(col_labels))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        cols = tuple(zip(*self.rows)) if self.rows else ()
        return IntMatrix(cols, self.col_labels, self.row_labels)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        out = [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows]
        return IntMatrix.from_rows(out, self.row_labels, other.col_labels)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix.from_rows([[-v for v in r] for r in self.rows], self.row_labels, self.col_labels)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_skew(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == -self.rows[j][i] for i in range(self.nrows) for j in range(i + 1)
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        rl = tuple(self.row_labels[i] for i in row_idx) if self.row_labels else ()
        cl = tuple(self.col_labels[j] for j in col_idx) if self.col_labels else ()
        return IntMatrix.from_rows([[self.rows[i][j] for j in col_idx] for i in row_idx], rl, cl)

    def permuted(self, perm: Sequence[int]) -> "IntMatrix":
        """Simultaneous row and column permutation: entry (i, j) <- (perm[i], perm[j])."""
        return self.submatrix(perm, perm)

    def det(self) -> int:
        return bareiss_det(self.rows)

    def to_json(self) -> dict:
        return {
            "rows": [[str(v) for v in r] for r in self.rows],
            "row_labels": [_label_json(l) for l in self.row_labels],
            "col_labels": [_label_json(l) for l in self.col_labels],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IntMatrix":
        return cls.from_rows(
            [[int(v) for v in r] for r in data["rows"]],
            [_label_from_json(l) for l in data.get("row_labels", [])],
            [_label_from_json(l) for l in data.get("col_labels", [])],
        )

    def to_text(self) -> str:
        if not self.rows:
            return "[]"
        width = max(len(str(v)) for r in self.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _label_json(label):
    return list(label) if isinstance(label, tuple) else label


def _label_from_json(label):
    return tuple(label) if isinstance(label, list) else label


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination (Bareiss).

    Every intermediate division is exact, so the computation stays in the
    integers.  The empty matrix has determinant 1.
    """
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        akk = m[k][k]
        for i in range(k + 1, n):
            aik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * m[n - 1][n - 1] if n else 1


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    n = sum(b.nrows for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    labels = []
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                out[off + i][off + j] = b.rows[i][j]
        off += b.nrows
        labels.extend(b.row_labels or [None] * b.nrows)
    if any(l is None for l in labels):
        labels = []
    return IntMatrix.from_rows(out, labels, labels)
