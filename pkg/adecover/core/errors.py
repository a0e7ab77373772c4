from __future__ import annotations

__all__ = [
    "InputError",
    "ConfigError",
    "ComputationError",
    "BoundViolated",
    "InvalidAdeType",
    "NonReduced",
    "InvalidProfile",
    "NonIntegralChi",
    "NegativeGenus",
    "InvalidDual",
    "InvalidContext",
    "InvalidInvariants",
    "DegreeTooLarge",
    "InvalidClassification",
    "DimensionMismatch",
    "SingularMatrix",
    "InexactDivision",
    "IrrationalCenter",
    "NotSingular",
    "BranchNotDisjoint",
    "OddSelfIntersection",
    "NonIntegralSolution",
    "NotDynkin",
    "NonIntegralDefect",
    "NegativeDelta",
    "IdentityFailed",
    "ResolutionDiverged",
]


class InputError(ValueError):
    """利用者の入力データが不正（CLI 終了コード 2）"""


class ComputationError(RuntimeError):
    """計算途中の不整合（CLI 終了コード 3）"""


class ConfigError(InputError):
    """環境変数・.env の設定値が不正"""


class BoundViolated(ValueError):
    """一般被覆からは生じ得ないプロファイル（数学的な否定判定、終了コード 1）"""


# 以下、入力エラー
class InvalidAdeType(InputError):
    pass


class NonReduced(InputError):
    pass


class InvalidProfile(InputError):
    pass


class NonIntegralChi(InvalidProfile):
    pass


class NegativeGenus(InvalidProfile):
    pass


class InvalidDual(InputError):
    pass


class InvalidContext(InputError):
    pass


class InvalidInvariants(InputError):
    pass


class DegreeTooLarge(InputError):
    pass


class InvalidClassification(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NegativeDelta(InputError):
    pass


# 以下、計算エラー
class SingularMatrix(ComputationError):
    pass


class InexactDivision(ComputationError):
    pass


class IrrationalCenter(ComputationError):
    pass


class NotSingular(ComputationError):
    pass


class BranchNotDisjoint(ComputationError):
    pass


class OddSelfIntersection(ComputationError):
    pass


class NonIntegralSolution(ComputationError):
    pass


class NotDynkin(ComputationError):
    pass


class NonIntegralDefect(ComputationError):
    pass


class IdentityFailed(ComputationError):
    pass


class ResolutionDiverged(ComputationError):
    pass
