"""JSON description of a cyclic code: ``{n, q: {p, m}, zeros, label}``.

``zeros`` lists cyclotomic coset representatives; the full defining set is
their closure.  Files are written with sorted keys and two-space indent so a
load/save cycle reproduces the input byte for byte.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .cyclic_code import CodeError, CyclicCode, complete_defining_set, coset_representatives
from .finite_field import FieldError, build_field, is_prime


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class CodeSpecFile:
    n: int
    p: int
    m: int
    zeros: tuple[int, ...]
    label: str = ""

    @property
    def q(self) -> int:
        return self.p**self.m

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "q": {"p": self.p, "m": self.m}, "zeros": list(self.zeros), "label": self.label}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: Any) -> "CodeSpecFile":
        if not isinstance(d, dict):
            raise SpecError("spec must be a JSON object")
        missing = {"n", "q", "zeros"} - set(d)
        if missing:
            raise SpecError(f"spec is missing {sorted(missing)}")
        q = d["q"]
        if isinstance(q, int):
            raise SpecError('q must be an object {"p": ..., "m": ...}')
        try:
            n, p, m = int(d["n"]), int(q["p"]), int(q["m"])
            zeros = tuple(int(z) for z in d["zeros"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed spec: {exc}") from None
        if n < 1 or m < 1 or not is_prime(p):
            raise SpecError(f"invalid parameters n={n}, p={p}, m={m}")
        label = d.get("label", "")
        if not isinstance(label, str):
            raise SpecError("label must be a string")
        return cls(n, p, m, zeros, label)

    @classmethod
    def loads(cls, text: str) -> "CodeSpecFile":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SpecError(f"not valid JSON: {exc}") from None

    @classmethod
    def load(cls, path: str | Path) -> "CodeSpecFile":
        return cls.loads(Path(path).read_text())

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    def code(self) -> CyclicCode:
        try:
            F = build_field(self.p, self.m)
            Z = complete_defining_set(self.n, F.q, [z % self.n for z in self.zeros])
            return CyclicCode(self.n, F, Z, self.label)
        except (CodeError, FieldError) as exc:
            raise SpecError(str(exc)) from None

    @classmethod
    def from_code(cls, code: CyclicCode, label: str | None = None) -> "CodeSpecFile":
        F = code.field
        reps = coset_representatives(code.n, F.q, code.zeros)
        return cls(code.n, F.p, F.m, tuple(reps), code.label if label is None else label)


__all__ = ["CodeSpecFile", "SpecError"]
