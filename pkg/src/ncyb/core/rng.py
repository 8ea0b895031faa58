"""
Seeded sampling of exact rational instances

Every draw comes from a named child stream of the run seed, so adding a check
never shifts the samples of another. Singular draws are resampled through
tenacity with a fresh child seed per attempt.
"""

import hashlib
import random
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional, Sequence, TypeVar

from sympy import QQ
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from ncyb.config import get_settings
from ncyb.matrix.labeled import LabeledMat
from ncyb.matrix.ops import RingOps
from ncyb.utils.exceptions import NotInvertible, Singular, SingularQuasiDet, ZeroMinor
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

T = TypeVar("T")

SINGULAR_ERRORS = (SingularQuasiDet, ZeroMinor, NotInvertible, Singular)

DIGITS = [d for d in range(-9, 10) if d != 0]


def child_seed(seed: int, name: str) -> int:
    digest = hashlib.blake2b(f"{seed}/{name}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


@dataclass
class SeedStream:
    """Named, splittable random stream"""

    seed: int
    name: str = "root"
    _rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._rng = random.Random(child_seed(self.seed, self.name))

    def split(self, name: str) -> "SeedStream":
        return SeedStream(child_seed(self.seed, self.name), name)

    def rational(self) -> Any:
        """p/q with p, q in [-9, 9] minus zero."""
        return QQ(self._rng.choice(DIGITS), self._rng.choice(DIGITS))

    def rationals(self, k: int) -> List[Any]:
        return [self.rational() for _ in range(k)]

    def integer(self, lo: int, hi: int) -> int:
        return self._rng.randint(lo, hi)

    def choice(self, items: Sequence[T]) -> T:
        return self._rng.choice(items)

    def matrix(self, m: int, n: int, ops: RingOps, density: float = 1.0) -> LabeledMat:
        """m x n matrix of small rationals, with zeros at rate 1 - density."""
        zero = ops.zero()
        grid = [
            [
                ops.convert(self.rational()) if self._rng.random() < density else zero
                for _ in range(n)
            ]
            for _ in range(m)
        ]
        return LabeledMat(range(1, m + 1), range(1, n + 1), grid, ops)


@dataclass
class ResampleLog:
    """Singular draws seen while sampling"""

    attempts: int = 0
    singular: int = 0
    minors: List[dict] = field(default_factory=list)

    @property
    def rate(self) -> float:
        return self.singular / self.attempts if self.attempts else 0.0

    def to_dict(self) -> dict:
        return {"attempts": self.attempts, "singular": self.singular, "rate": round(self.rate, 4)}


def with_resampling(
    stream: SeedStream,
    draw: Callable[[SeedStream], T],
    log: Optional[ResampleLog] = None,
    max_attempts: Optional[int] = None,
) -> T:
    """Call draw on fresh child streams until it does not hit a singular minor."""
    log = log if log is not None else ResampleLog()
    attempts = max_attempts or get_settings().max_resamples

    for attempt in Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_exception_type(SINGULAR_ERRORS),
        reraise=True,
    ):
        with attempt:
            log.attempts += 1
            n = attempt.retry_state.attempt_number
            try:
                return draw(stream.split(f"attempt-{n}"))
            except SINGULAR_ERRORS as e:
                log.singular += 1
                if isinstance(e, (SingularQuasiDet, ZeroMinor)):
                    log.minors.append(e.minor())
                logger.info("singular draw", stream=stream.name, attempt=n, reason=str(e))
                raise
    raise AssertionError("unreachable")
