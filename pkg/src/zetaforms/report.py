"""Machine-readable check reports: JSON, CSV and plain text.

Exact values travel as "p/q" strings. Floating values travel as decimal
strings next to the number of digits they were computed to.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

STATUSES = ("pass", "fail", "info", "not applicable")
SCHEMA_VERSION = 1


def exact(x) -> str:
    """Rational as "p/q" (or "p" when integral); never a decimal."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class Numeric:
    value: str
    digits: int

    def to_dict(self) -> dict:
        return {"value": self.value, "digits": self.digits}


@dataclass
class Outcome:
    name: str
    status: str
    witness: dict[str, str] = field(default_factory=dict)
    numeric: dict[str, Numeric] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        for k, v in self.witness.items():
            if not isinstance(v, str):
                raise TypeError(f"witness {k!r} must be a string, got {type(v).__name__}")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "witness": dict(sorted(self.witness.items())),
            "numeric": {k: v.to_dict() for k, v in sorted(self.numeric.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Outcome":
        num = {k: Numeric(v["value"], int(v["digits"])) for k, v in d.get("numeric", {}).items()}
        return cls(d["name"], d["status"], dict(d.get("witness", {})), num)


def check(name: str, ok: bool, **witness: str) -> Outcome:
    return Outcome(name, "pass" if ok else "fail", dict(witness))


@dataclass
class ReportDocument:
    command: str
    parameters: dict
    outcomes: list[Outcome] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(o.status != "fail" for o in self.outcomes)

    def add(self, outcome: Outcome) -> Outcome:
        self.outcomes.append(outcome)
        return outcome

    def failures(self) -> list[Outcome]:
        return [o for o in self.outcomes if o.status == "fail"]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": dict(sorted(self.parameters.items())),
            "outcomes": [o.to_dict() for o in self.outcomes],
            "timing": dict(sorted(self.timing.items())),
            "ok": self.ok,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        return cls(
            d["command"],
            dict(d["parameters"]),
            [Outcome.from_dict(o) for o in d["outcomes"]],
            {k: float(v) for k, v in d.get("timing", {}).items()},
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        wkeys = sorted({k for o in self.outcomes for k in o.witness})
        nkeys = sorted({k for o in self.outcomes for k in o.numeric})
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "status"] + wkeys + nkeys)
        for o in self.outcomes:
            row = [o.name, o.status]
            row += [o.witness.get(k, "") for k in wkeys]
            row += [o.numeric[k].value if k in o.numeric else "" for k in nkeys]
            w.writerow(row)
        return buf.getvalue()

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"{self.command} {params}".rstrip()]
        for o in self.outcomes:
            bits = [f"{k}={v}" for k, v in sorted(o.witness.items())]
            bits += [f"{k}={v.value}" for k, v in sorted(o.numeric.items())]
            lines.append(f"  [{o.status}] {o.name}" + (": " + ", ".join(bits) if bits else ""))
        n_fail = len(self.failures())
        lines.append(f"{len(self.outcomes)} outcomes, {n_fail} failed, {self.timing.get('seconds', 0.0):.2f} s")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")
