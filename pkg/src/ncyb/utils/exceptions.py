"""
Custom exceptions for ncyb
"""

from typing import Optional, Sequence


class NcybError(Exception):
    """Base exception for ncyb"""
    pass


class TowerMismatch(NcybError):
    """Operands live in different scalar towers"""
    pass


class NotInvertible(NcybError):
    """Scalar has no inverse (zero, nilpotent, or zero constant term)"""
    pass


class ShapeError(NcybError):
    """Matrix shapes do not conform"""
    pass


class Singular(NcybError):
    """Matrix over a field is singular"""
    pass


class LabelError(NcybError):
    """Requested row/column label not present"""
    pass


class SingularQuasiDet(NcybError):
    """A quasi-determinant needed an inverse that does not exist"""

    def __init__(
        self,
        message: str,
        rows: Sequence[object] = (),
        cols: Sequence[object] = (),
        i: Optional[object] = None,
        j: Optional[object] = None,
    ):
        super().__init__(message)
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.i = i
        self.j = j

    def minor(self) -> dict:
        return {
            "rows": [str(r) for r in self.rows],
            "cols": [str(c) for c in self.cols],
            "i": None if self.i is None else str(self.i),
            "j": None if self.j is None else str(self.j),
        }


class ZeroMinor(NcybError):
    """A minor determinant of a commutative matrix vanished"""

    def __init__(self, message: str, rows: Sequence[object] = (), cols: Sequence[object] = ()):
        super().__init__(message)
        self.rows = tuple(rows)
        self.cols = tuple(cols)

    def minor(self) -> dict:
        return {"rows": [str(r) for r in self.rows], "cols": [str(c) for c in self.cols]}


class NotNilpotent(NcybError):
    """q-exponential series did not terminate"""
    pass


class WeightError(NcybError):
    """Cartan images are not diagonal with integer weights"""
    pass


class NotQuasiCommutative(NcybError):
    """Commutator has a nonvanishing classical part"""
    pass


class ConfigurationError(NcybError):
    """Configuration errors"""
    pass


class SuiteError(NcybError):
    """Unknown suite or malformed suite registration"""
    pass


class UntabulatedBracket(NcybError):
    """Poisson bracket of a generator pair outside the defining table"""
    pass
