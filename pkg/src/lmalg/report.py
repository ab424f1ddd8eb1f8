"""Machine-readable verdicts for exhaustive law checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from .errors import VerificationError


@dataclass(frozen=True)
class LawResult:
    """Outcome of checking one law over its whole quantifier range.

    ``witness`` holds the values of ``variables`` at the first violation
    found; operation indices are 1-based, carrier elements are indices.
    Informational results are reported but never affect the verdict.
    """

    law: str
    passed: bool
    witness: tuple[int, ...] | None = None
    variables: tuple[str, ...] = ()
    checked: int = 0
    informational: bool = False
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"law": self.law, "passed": self.passed, "checked": self.checked}
        if self.witness is not None:
            d["witness"] = dict(zip(self.variables, self.witness)) if self.variables else list(self.witness)
        if self.informational:
            d["informational"] = True
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class AxiomReport:
    system: str
    results: list[LawResult] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if not r.informational)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed and not r.informational]

    @property
    def first_failure(self) -> LawResult | None:
        fails = self.failures
        return fails[0] if fails else None

    @property
    def laws_checked(self) -> int:
        return sum(r.checked for r in self.results)

    def law(self, name: str) -> LawResult:
        for r in self.results:
            if r.law == name:
                return r
        raise KeyError(name)

    def add(self, result: LawResult) -> LawResult:
        self.results.append(result)
        return result

    def ok(self, law: str, checked: int = 1, note: str = "", informational: bool = False) -> None:
        self.add(LawResult(law, True, None, (), checked, informational, note))

    def fail(
        self,
        law: str,
        witness: Iterable[int] = (),
        variables: Iterable[str] = (),
        checked: int = 1,
        note: str = "",
        informational: bool = False,
    ) -> None:
        self.add(LawResult(law, False, tuple(int(w) for w in witness), tuple(variables), checked, informational, note))

    def check(self, law: str, holds: bool, witness: Iterable[int] = (), variables: Iterable[str] = (),
              checked: int = 1, note: str = "", informational: bool = False) -> bool:
        if holds:
            self.ok(law, checked, note, informational)
        else:
            self.fail(law, witness, variables, checked, note, informational)
        return holds

    def grid(self, law: str, holds: np.ndarray, variables: tuple[str, ...],
             one_based: tuple[bool, ...] | None = None, note: str = "", informational: bool = False,
             offsets: tuple[int, ...] | None = None) -> bool:
        """Record a law evaluated on a full index grid.

        ``holds`` is a boolean array whose axes correspond to ``variables``.
        Axes flagged in ``one_based`` are shifted by one in the witness;
        ``offsets`` adds an arbitrary per-axis shift instead.
        """
        holds = np.asarray(holds, dtype=bool)
        if holds.all():
            self.ok(law, int(holds.size), note, informational)
            return True
        idx = [int(v) for v in np.argwhere(~holds)[0]]
        if offsets is None:
            offsets = tuple(1 if b else 0 for b in (one_based or (False,) * len(idx)))
        idx = [v + o for v, o in zip(idx, offsets)]
        self.fail(law, idx, variables, int(holds.size), note, informational)
        return False

    def merge(self, other: AxiomReport, prefix: str = "") -> None:
        for r in other.results:
            self.add(LawResult(prefix + r.law, r.passed, r.witness, r.variables, r.checked, r.informational, r.note))

    def require(self, what: str = "") -> AxiomReport:
        """Raise :class:`VerificationError` unless the report passes."""
        if not self.passed:
            f = self.first_failure
            raise VerificationError(f"{what or self.system}: law {f.law} failed, witness {f.witness} {f.note}".rstrip())
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "system": self.system,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
            "laws_checked": self.laws_checked,
        }

    def summary(self) -> str:
        f = self.first_failure
        if f is None:
            return f"{self.system}: pass ({len(self.results)} laws, {self.laws_checked} instances)"
        return f"{self.system}: FAIL at {f.law} witness {f.witness}"
