"""Invariant reports for a parsed model file."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import InvariantViolation
from .laurent import LaurentPoly, bar, format_poly
from .linkmap import omega_minus, sigma, validate
from .modelfile import ModelFile
from .theorem import TheoremVerdict, predicted_omega, replay

__all__ = ["Report", "compute", "EXIT_OK", "EXIT_DISAGREE", "EXIT_INPUT"]

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_INPUT = 2


@dataclass
class Report:
    sigma_plus: str
    sigma_minus: str
    plus_good: bool
    minus_good: bool
    pairable: bool
    pairs: list[tuple[int, int, int]] = field(default_factory=list)
    omega_direct: int | None = None
    omega_predicted: int | None = None
    verdict: dict[str, Any] | None = None
    trace: list[tuple[str, Any]] | None = None
    notes: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_dict(self) -> dict[str, Any]:
        out = {
            "sigma_plus": self.sigma_plus,
            "sigma_minus": self.sigma_minus,
            "plus_good": self.plus_good,
            "minus_good": self.minus_good,
            "pairable": self.pairable,
            "pairs": [list(p) for p in self.pairs],
            "omega_direct": self.omega_direct,
            "omega_predicted": self.omega_predicted,
            "verdict": self.verdict,
            "notes": list(self.notes),
            "exit_code": self.exit_code,
        }
        if self.trace is not None:
            out["trace"] = [[name, _jsonable(value)] for name, value in self.trace]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def render(self) -> str:
        def show(v):
            return "undefined" if v is None else str(v)

        lines = [
            f"sigma_+        : {self.sigma_plus}",
            f"sigma_-        : {self.sigma_minus}",
            f"+good / -good  : {self.plus_good} / {self.minus_good}",
            f"(-)-pairable   : {self.pairable}"
            + (f"  pairs {[(i, j, n) for i, j, n in self.pairs]}" if self.pairs else ""),
            f"omega_- direct : {show(self.omega_direct)}",
            f"omega_- pred.  : {show(self.omega_predicted)}",
        ]
        if self.verdict is not None:
            lines.append(f"verdict        : {'agrees' if self.verdict['agrees'] else 'DISAGREES'}")
        if self.trace is not None:
            lines.append("trace:")
            lines.extend(f"  {name} = {_jsonable(value)}" for name, value in self.trace)
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _jsonable(value):
    if isinstance(value, LaurentPoly):
        return format_poly(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def compute(mf: ModelFile, verbose: bool = False) -> Report:
    """Evaluate sigma, omega_- and (when witnesses are present) the replay verdict.

    Exit codes on the returned report: 0 when everything computed agrees
    or there is nothing to compare, 1 when a direct and a predicted omega
    differ, 2 for inconsistent or hypothesis-violating input.
    """
    sp = sigma(mf.model, "+")
    sm = sigma(mf.model, "-")
    check = validate(mf.model)
    report = Report(
        sigma_plus=format_poly(sp),
        sigma_minus=format_poly(sm),
        plus_good=check.plus_good,
        minus_good=check.minus_good,
        pairable=check.pairable,
        pairs=check.pairs,
    )
    report.notes.extend(check.problems)

    def fail(msg: str) -> Report:
        report.notes.append(msg)
        report.exit_code = EXIT_INPUT
        return report

    if mf.witnesses is not None and not sm.is_zero():
        return fail("theorem hypothesis sigma_-=0 violated")
    if not sm.is_zero():
        report.notes.append("omega_- is only defined when sigma_- = 0")
        return report
    if not check.pairable:
        return fail("sigma_- = 0 but the minus double points cannot be paired (self(f_-) != 0)")

    report.omega_predicted = predicted_omega(sp)
    pair_ns = check.pair_ns()

    if mf.disks:
        if sorted(d.n for d in mf.disks) != pair_ns:
            return fail(f"disk n values {sorted(d.n for d in mf.disks)} do not match "
                        f"paired double points {pair_ns}")
        try:
            report.omega_direct = omega_minus(mf.disks)
        except InvariantViolation as exc:
            return fail(str(exc))
    elif not pair_ns:
        report.omega_direct = 0
    elif mf.witnesses is None:
        report.notes.append("no Whitney disk data; omega_- not evaluated")

    if mf.witnesses is not None:
        if sorted(w.n for w in mf.witnesses) != pair_ns:
            return fail(f"witness n values {sorted(w.n for w in mf.witnesses)} do not match "
                        f"paired double points {pair_ns}")
        try:
            verdict: TheoremVerdict = replay(mf.witnesses)
        except InvariantViolation as exc:
            where = f" (replay step {exc.step})" if exc.step is not None else ""
            return fail(f"{exc}{where}")
        lam = dict(verdict.trace)["lambda_ff"]
        if (sp + bar(sp)).reduce_mod2() != lam:
            return fail("witness data inconsistent with sigma_+: "
                        f"sigma_+ + bar(sigma_+) = {format_poly((sp + bar(sp)).reduce_mod2())} mod 2 "
                        f"but the witnesses give lambda(f, f) = {format_poly(lam)}")
        if report.omega_direct is None:
            report.omega_direct = verdict.omega_direct
        agrees = (verdict.agrees
                  and verdict.omega_predicted == report.omega_predicted
                  and verdict.omega_direct == report.omega_direct)
        report.verdict = {
            "agrees": agrees,
            "omega_direct": verdict.omega_direct,
            "omega_predicted": verdict.omega_predicted,
        }
        if verbose:
            report.trace = verdict.trace

    if report.omega_direct is not None and report.omega_direct != report.omega_predicted:
        report.exit_code = EXIT_DISAGREE
    elif report.verdict is not None and not report.verdict["agrees"]:
        report.exit_code = EXIT_DISAGREE
    return report
