"""Verification report assembled from the final graph state."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

from magnons import registry
from magnons.workflow.state import CheckOutcome


@dataclass
class VerificationReport:
    n_max: int
    cap: int
    outcomes: List[CheckOutcome] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors and all(o["passed"] for o in self.outcomes)

    def failures(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if not o["passed"]]

    def _by_check(self) -> Dict[str, List[CheckOutcome]]:
        grouped: Dict[str, List[CheckOutcome]] = {}
        for outcome in self.outcomes:
            grouped.setdefault(outcome["check"], []).append(outcome)
        return grouped

    def format(self) -> str:
        """One line per check, failing sizes itemized underneath."""
        lines = [f"Verification N=2..{self.n_max} (cap {self.cap})"]
        for name, outcomes in self._by_check().items():
            check = registry.CHECK_REGISTRY[name]
            ok = all(o["passed"] for o in outcomes)
            lines.append(f"{'✅' if ok else '❌'} {check.display_name} ({len(outcomes)} runs)")
            for outcome in outcomes:
                where = f"N={outcome['n']}" if outcome["n"] is not None else "sampled"
                lines.extend(f"    {where}: {message}" for message in outcome["failures"])
        lines.extend(f"❌ {error}" for error in self.errors)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_max": self.n_max,
            "cap": self.cap,
            "passed": self.passed,
            "outcomes": list(self.outcomes),
            "errors": list(self.errors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)
