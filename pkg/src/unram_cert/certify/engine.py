"""Replay a certificate step by step."""

import json
import time
from dataclasses import dataclass, field

from ..config import NUMERIC_TOLERANCE
from ..errors import UnramCertError, ValidationError
from .kinds import HANDLERS, Actual, compare, jsonable
from .schema import MAIN_BRANCH, coerce_inputs, resolve

PASS, FAIL, TRUSTED = "Pass", "Fail", "Trusted"
FAIL_FAST, COLLECT_ALL = "fail-fast", "collect-all"


@dataclass
class ClaimResult:
    index: int
    id: str
    kind: str
    verdict: str
    actual: object = None
    expected: object = None
    citation: str = None
    branch: str = MAIN_BRANCH
    elapsed: float = 0.0
    log: list = field(default_factory=list)

    def record(self):
        out = {"index": self.index, "id": self.id, "kind": self.kind, "branch": self.branch,
               "verdict": self.verdict, "actual": jsonable(self.actual),
               "expected": jsonable(self.expected)}
        if self.citation is not None:
            out["citation"] = self.citation
        if self.log:
            out["log"] = list(self.log)
        return out


@dataclass
class Report:
    certificate: str
    metadata: dict
    mode: str
    results: list
    skipped: int
    branches: list

    @property
    def verdict(self):
        if self.skipped or any(r.verdict == FAIL for r in self.results):
            return FAIL
        return PASS

    @property
    def trusted(self):
        return [r for r in self.results if r.verdict == TRUSTED]

    @property
    def failures(self):
        return [r for r in self.results if r.verdict == FAIL]

    def assumptions(self):
        return list(self.metadata.get("assumptions", []))

    def to_dict(self):
        return {
            "certificate": self.certificate,
            "assumptions": self.assumptions(),
            "mode": self.mode,
            "verdict": self.verdict,
            "steps": [r.record() for r in self.results],
            "skipped": self.skipped,
            "trusted": [{"index": r.index, "id": r.id, "citation": r.citation} for r in self.trusted],
            "branches": self.branches,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self, timings=False):
        lines = [f"certificate {self.certificate} ({self.mode})"]
        for r in self.results:
            line = f"[{r.index:3d}] {r.verdict:7s} {r.kind:25s} {r.id}"
            if timings:
                line += f"  {r.elapsed:.3f}s"
            lines.append(line)
            if r.verdict == FAIL:
                lines.append(f"        actual:   {json.dumps(jsonable(r.actual), sort_keys=True)}")
                lines.append(f"        expected: {json.dumps(jsonable(r.expected), sort_keys=True)}")
            for msg in r.log:
                lines.append(f"        {msg}")
        if self.skipped:
            lines.append(f"{self.skipped} steps not run after the first failure")
        for b in self.branches:
            lines.append(f"branch {b['id']}: {b['status']} (terminal {b['terminal']})")
        lines.append(f"trusted steps: {len(self.trusted)}")
        for r in self.trusted:
            lines.append(f"  {r.id}: {r.citation}")
        cond = ", ".join(self.assumptions() + [f"{len(self.trusted)} trusted claims"])
        lines.append(f"verdict: {self.verdict} (conditional on {cond})")
        return "\n".join(lines) + "\n"


def _cache_key(kind, args):
    return kind + "|" + repr(sorted((k, repr(v)) for k, v in args.items()))


def _run_step(step, constants, outputs, cache):
    """Returns (actual, error_name, error_message, log)."""
    try:
        resolved = {k: resolve(v, constants, outputs) for k, v in step.inputs.items()}
    except KeyError as exc:
        return None, "MissingDependency", f"no output for {exc.args[0]!r}", []
    args = coerce_inputs(step, resolved)
    key = _cache_key(step.kind, args)
    if cache is not None and key in cache:
        return cache[key]
    try:
        actual = HANDLERS[step.kind](args)
        out = (actual, None, None, _log(step.kind, actual))
    except (UnramCertError, ValueError, ArithmeticError, KeyError) as exc:
        out = (None, type(exc).__name__, str(exc), [])
    if cache is not None:
        cache[key] = out
    return out


def _log(kind, actual):
    if kind == "FSeriesBound":
        return [f"{actual['count']} primes of norm {actual['norm']}"]
    if kind == "CentralizerCheck":
        return [f"unit count by {actual['method']}"]
    return []


def _expects_error(expected):
    return isinstance(expected, dict) and set(expected) == {"error"}


def check_certificate(cert, mode=FAIL_FAST, cache=None):
    """Replay every step.  In fail-fast mode checking stops at the first
    failing step; ``cache`` (a dict) memoizes computations across runs."""
    if mode not in (FAIL_FAST, COLLECT_ALL):
        raise ValueError(f"unknown mode {mode!r}")
    outputs = {}
    results = []
    stopped = False
    for step in cert.steps:
        if stopped:
            break
        t0 = time.perf_counter()
        if step.kind == "TrustedClaim":
            res = ClaimResult(step.index, step.id, step.kind, TRUSTED, None, step.inputs.get("statement"),
                              step.citation, step.branch)
        else:
            try:
                actual, err, msg, log = _run_step(step, cert.constants, outputs, cache)
            except ValidationError as exc:
                actual, err, msg, log = None, "ValidationError", str(exc), []
            tol = step.tol if step.tol is not None else NUMERIC_TOLERANCE
            if _expects_error(step.expected):
                ok = err == step.expected["error"]
                shown = {"error": err} if err else actual
            elif err:
                ok = False
                shown = {"error": err, "message": msg}
            else:
                ok = compare(step.kind, actual, step.expected, tol)
                shown = actual
            if err is None:
                # later steps see the primary field of structured results
                outputs[step.id] = actual[actual.primary] if isinstance(actual, Actual) else actual
            res = ClaimResult(step.index, step.id, step.kind, PASS if ok else FAIL, shown, step.expected,
                              None, step.branch, log=list(log))
            if not ok and mode == FAIL_FAST:
                stopped = True
        res.elapsed = time.perf_counter() - t0
        results.append(res)
    skipped = len(cert.steps) - len(results)
    return Report(cert.id, dict(cert.metadata), mode, results, skipped, _branch_status(cert, results))


def _branch_status(cert, results):
    by_id = {r.id: r for r in results}
    out = []
    for b in cert.branches:
        members = [s.id for s in cert.steps if s.branch == b.id]
        verdicts = [by_id[m].verdict if m in by_id else None for m in members]
        if any(v == FAIL for v in verdicts):
            status = "open"
        elif any(v is None for v in verdicts):
            status = "unchecked"
        elif by_id[b.terminal].verdict == TRUSTED:
            status = "closed by trusted claim"
        else:
            status = "closed"
        out.append({"id": b.id, "claim": b.claim, "terminal": b.terminal, "status": status})
    return out
