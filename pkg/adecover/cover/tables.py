from __future__ import annotations

from ..core.ade import AdeType, Family

__all__ = ["expected_grouped_cycle"]

_E_TABLE: dict[int, tuple[int, ...]] = {
    6: (3, 2, 4, 6),
    7: (3, 5, 9, 6, 5, 7, 3),
    8: (3, 5, 9, 15, 10, 8, 12, 6),
}


def expected_grouped_cycle(t: AdeType) -> list[int]:
    """標準サイクルの係数表（分裂ペアはまとめて 1 つ）を昇順で返す。

    A_{2k−1}, A_{2k}: 1, ..., k
    D_{2k+2}: 3, 5, ..., 2k+1 / 2, 4, ..., 2k / k+1, k+1
    D_{2k+3}: 3, 5, ..., 2k+1 / 2, 4, ..., 2k / 2k+2 / k+1（ペア）
    """
    n = t.index
    match t.family:
        case Family.A:
            k = (n + 1) // 2
            values = list(range(1, k + 1))
        case Family.D if n % 2 == 0:
            k = (n - 2) // 2
            values = [2 * i + 1 for i in range(1, k + 1)]
            values += [2 * i for i in range(1, k + 1)]
            values += [k + 1, k + 1]
        case Family.D:
            k = (n - 3) // 2
            values = [2 * i + 1 for i in range(1, k + 1)]
            values += [2 * i for i in range(1, k + 1)]
            values += [2 * k + 2, k + 1]
        case _:
            values = list(_E_TABLE[n])

    return sorted(values)
