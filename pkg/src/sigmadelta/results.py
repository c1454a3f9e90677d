"""A small verdict type shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of an exact check; a failure carries the offending residual."""

    passed: bool
    residual: Any = None
    index: int | None = None
    which: str | None = None
    detail: str = ""
    witness: Any = field(default=None, compare=False)

    def __bool__(self):
        return self.passed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def passed(detail: str = "", witness=None) -> Check:
    return Check(True, detail=detail, witness=witness)


def failed(residual=None, index=None, which=None, detail="", witness=None) -> Check:
    return Check(False, residual=residual, index=index, which=which, detail=detail, witness=witness)
