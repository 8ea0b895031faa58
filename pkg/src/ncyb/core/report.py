"""
Verification report model
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from ncyb.utils.exceptions import NotInvertible, SingularQuasiDet, ZeroMinor


class CheckStatus(Enum):
    """Outcome of one check"""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED_SINGULAR = "skipped-singular"


@dataclass
class Check:
    """One verified identity instance"""
    name: str
    anchor: str
    status: CheckStatus
    detail: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status.value,
            "detail": self.detail,
        }


@dataclass
class Report:
    """Checks of one suite run"""
    suite: str
    config: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def status(self) -> str:
        return "fail" if any(c.status is CheckStatus.FAIL for c in self.checks) else "pass"

    def extend(self, checks: List[Check]) -> None:
        self.checks.extend(checks)

    def counts(self) -> Dict[str, int]:
        out = {s.value: 0 for s in CheckStatus}
        for c in self.checks:
            out[c.status.value] += 1
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "config": self.config,
            "checks": [c.to_dict() for c in self.checks],
            "elapsed_ms": int(self.elapsed_ms),
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        counts = self.counts()
        lines = [
            f"suite {self.suite}: {self.status.upper()} "
            f"({counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['skipped-singular']} skipped-singular, {self.elapsed_ms} ms)"
        ]
        for c in self.checks:
            if c.status is not CheckStatus.PASS:
                lines.append(f"  [{c.status.value}] {c.name} ({c.anchor}): {c.detail}")
        return "\n".join(lines) + "\n"


def passed(name: str, anchor: str, detail: Optional[Dict[str, Any]] = None) -> Check:
    return Check(name, anchor, CheckStatus.PASS, detail)


def failed(name: str, anchor: str, detail: Optional[Dict[str, Any]] = None) -> Check:
    return Check(name, anchor, CheckStatus.FAIL, detail)


def skipped(name: str, anchor: str, error: Exception) -> Check:
    detail: Dict[str, Any] = {"reason": str(error)}
    if isinstance(error, (SingularQuasiDet, ZeroMinor)):
        detail["minor"] = error.minor()
    return Check(name, anchor, CheckStatus.SKIPPED_SINGULAR, detail)


def compare(name: str, anchor: str, lhs: Any, rhs: Any, equals: Optional[Callable] = None) -> Check:
    """pass/fail from an exact comparison; matrices report their first differing entry."""
    if hasattr(lhs, "first_difference"):
        diff = lhs.first_difference(rhs)
        return passed(name, anchor) if diff is None else failed(name, anchor, diff)
    ok = equals(lhs, rhs) if equals is not None else not (lhs - rhs)
    if ok:
        return passed(name, anchor)
    return failed(name, anchor, {"lhs": str(lhs), "rhs": str(rhs)})


def guarded(name: str, anchor: str, fn: Callable[[], Check]) -> Check:
    """Run a check; singular minors become skipped-singular records."""
    try:
        return fn()
    except (SingularQuasiDet, ZeroMinor, NotInvertible) as e:
        return skipped(name, anchor, e)


class CheckList(list):
    """Check records with a shorthand for exact comparisons"""

    def eq(self, name: str, anchor: str, lhs: Any, rhs: Any) -> None:
        self.append(compare(name, anchor, lhs, rhs))
