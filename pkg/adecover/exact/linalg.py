from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..core.errors import DimensionMismatch, SingularMatrix

__all__ = [
    "IntMatrix",
    "bareiss_determinant",
    "leading_minors",
    "solve_linear_exact",
    "is_negative_definite",
]


@dataclass(frozen=True)
class IntMatrix:
    """整数行列（行優先、不変）

    交点行列として使う場合は対称性を is_symmetric で確認すること。
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionMismatch(
                f"matrix dimensions must be positive: {self.rows}x{self.cols}"
            )
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows:
            raise DimensionMismatch("matrix has no rows")

        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged matrix rows")

        return cls(
            rows=len(rows),
            cols=width,
            entries=tuple(int(v) for r in rows for v in r),
        )

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def mul_vector(self, vec: Sequence[int | Fraction]) -> list[int | Fraction]:
        if len(vec) != self.cols:
            raise DimensionMismatch(
                f"vector of length {len(vec)} for {self.rows}x{self.cols} matrix"
            )

        return [
            sum((self[i, j] * vec[j] for j in range(self.cols)), start=0)
            for i in range(self.rows)
        ]

    def bilinear(
        self, a: Sequence[int | Fraction], b: Sequence[int | Fraction]
    ) -> int | Fraction:
        """a^T M b"""
        mb = self.mul_vector(b)
        return sum((x * y for x, y in zip(a, mb)), start=0)

    def principal(self, n: int) -> IntMatrix:
        return IntMatrix.from_rows([list(self.row(i))[:n] for i in range(n)])


def _require_square(m: IntMatrix) -> None:
    if not m.is_square:
        raise DimensionMismatch(f"matrix is not square: {m.rows}x{m.cols}")


def bareiss_determinant(m: IntMatrix) -> int:
    """Bareiss の分数なし消去で行列式を求める。

    Args:
        m (IntMatrix): 正方行列

    Raises:
        DimensionMismatch: 正方でない

    Returns:
        int: 行列式
    """
    _require_square(m)
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # ピボット探索（列 k に非零がなければ行列式は 0）
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[i], a[k] = a[k], a[i]
                    sign = -sign
                    break
            else:
                return 0

        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                # Sylvester の恒等式により常に割り切れる
                a[i][j] = num // prev
            a[i][k] = 0
        prev = a[k][k]

    return sign * a[n - 1][n - 1]


def leading_minors(m: IntMatrix) -> list[int]:
    """先頭主小行列式 D_1, ..., D_n を返す。

    行交換なしの Bareiss 消去では k 段目のピボットがそのまま D_k になる。
    途中でピボットが 0 になった場合は残りを個別に計算する。
    """
    _require_square(m)
    n = m.rows
    a = m.to_rows()
    minors: list[int] = []
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            minors.append(0)
            minors.extend(
                bareiss_determinant(m.principal(j)) for j in range(k + 2, n + 1)
            )
            return minors

        minors.append(a[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]

    return minors


def is_negative_definite(m: IntMatrix) -> bool:
    """対称行列の負定値判定（-M の先頭主小行列式がすべて正）"""
    if not m.is_symmetric():
        return False

    neg = IntMatrix(rows=m.rows, cols=m.cols, entries=tuple(-v for v in m.entries))
    return all(v > 0 for v in leading_minors(neg))


def solve_linear_exact(m: IntMatrix, rhs: Iterable[int]) -> list[Fraction]:
    """整数係数の連立一次方程式 m·x = rhs を厳密に解く。

    拡大係数行列に分数なし（Bareiss）消去を施して上三角化し、
    後退代入の段階でのみ有理数を導入する。

    Args:
        m (IntMatrix): 正則な正方行列
        rhs (Iterable[int]): 右辺

    Raises:
        DimensionMismatch: 次元の不一致
        SingularMatrix: det = 0

    Returns:
        list[Fraction]: 解ベクトル（既約分数）
    """
    _require_square(m)
    b = [int(v) for v in rhs]
    n = m.rows
    if len(b) != n:
        raise DimensionMismatch(f"rhs of length {len(b)} for {n}x{n} system")

    a = [row + [b[i]] for i, row in enumerate(m.to_rows())]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[i], a[k] = a[k], a[i]
                    break
            else:
                raise SingularMatrix(f"singular {n}x{n} matrix (zero pivot at {k})")

        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]

    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]

    # 代入して検算
    if m.mul_vector(x) != b:
        raise SingularMatrix("back substitution does not reproduce rhs")

    return x
