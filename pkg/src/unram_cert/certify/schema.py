"""Certificate files: parsing, value coercion and referential validation.

A certificate is a TOML document with a ``[metadata]`` table, an optional
``[constants]`` table, a list of ``[[branches]]`` and an ordered list of
``[[steps]]``.  Step inputs are literal values, ``"$name"`` for a declared
constant or ``"@id"`` for the output of an earlier step.
"""

import ast
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from mpmath import mpf

from .. import tomlcompat
from ..errors import ParseError, ValidationError
from ..finitefield import IntPolynomial

# Citation prefixes accepted for trusted steps.
CITATION_WHITELIST = (
    "Magma",                  # class groups and subgroup classes, GRH where stated
    "Sage",                   # class groups under GRH
    "Kluners-Malle database",
    "Schwarz 1994",
    "Basmaji 1994",
    "Odlyzko",
    "Martinet 1980",
)

TERMINAL_KINDS = {"RdContradiction", "TrustedClaim", "QuadClassGroup", "PolyDiscriminant",
                  "TausskyRule"}

MAIN_BRANCH = "main"

# input name -> (type, required).  Alternatives are expressed through
# ``ONE_OF`` below.
_MATRIX_SOURCE = {"q": ("int", False), "modulus": ("ints", False), "generators": ("matrices", False),
                  "blowup": ("bool", False), "singer": ("ints", False), "companion": ("poly", False)}

KINDS = {
    "FactorModP": {"poly": ("poly", True), "p": ("int", True)},
    "DedekindMaximal": {"poly": ("poly", True), "p": ("int", True)},
    "SplittingType": {"poly": ("poly", True), "p": ("int", True), "simple_factors_only": ("bool", False)},
    "PolyDiscriminant": {"poly": ("poly", True)},
    "AbhyankarUnramified": {"e_upper": ("int", True), "e_lower": ("int", True), "p": ("int", True)},
    "QuadClassGroup": {"D": ("int", True)},
    "PrimeSplitting": {"D": ("int", True), "p": ("int", True)},
    "GroupClosureOrder": dict(_MATRIX_SOURCE, cap=("int", False)),
    "IsomorphismCheck": dict(_MATRIX_SOURCE, model=("str", True), cap=("int", False)),
    "CentralizerCheck": dict(_MATRIX_SOURCE),
    "FixedSpaceCheck": dict(_MATRIX_SOURCE),
    "ModuleDecompositionCheck": dict(_MATRIX_SOURCE),
    "OrderSpectrumCheck": {"family": ("str", False), "n": ("int", False), "model": ("str", False)},
    "ClassSplitCheck": {"cycle_type": ("ints", True), "n": ("int", True)},
    "SchurMultiplierFact": {"group": ("str", True)},
    "StemExtensionRule": {"group": ("str", True), "class_number_one": ("bool", True)},
    "PRankConstraint": {"n": ("int", True), "p": ("int", True)},
    "TausskyRule": {"p": ("int", True), "group": ("ints", True)},
    "MinGLDim": {"m": ("int", True), "q": ("int", True)},
    "GLOrderDivisibility": {"n": ("int", True), "q": ("int", True), "divisor": ("int", True)},
    "RootDiscriminant": {"abs_disc": ("int", True), "degree": ("int", True)},
    "TowerRdEquality": {"rd": ("real", True), "unramified": ("bool", True)},
    "FSeriesBound": {"degree": ("int", True), "p": ("int", True), "e": ("int", True),
                     "residue_degree": ("int", True), "b": ("real", True), "m_max": ("int", False)},
    "GrhLowerBound": {"n": ("int", True), "r1": ("int", True), "r2": ("int", True),
                      "b": ("real", True), "f": ("real", True)},
    "RdContradiction": {"rd": ("real", True), "lower_bound": ("real", False), "degree": ("int", False),
                        "r1": ("int", False), "r2": ("int", False), "margin": ("real", False)},
    "DegreeBound": {"rd": ("real", True), "base_degree": ("int", True), "family": ("str", True)},
    "YamamuraCheck": {"rd": ("real", True), "m": ("int", True), "n_K": ("int", True),
                      "r1": ("int", True), "r2": ("int", True)},
    "ElementaryRankCaseSplit": {"p": ("ints", True), "size_bound": ("bound", True), "group": ("str", True)},
    "TrustedClaim": {"statement": ("str", True)},
}

# groups of inputs of which exactly one must be present
ONE_OF = {
    "GroupClosureOrder": [("generators",)],
    "IsomorphismCheck": [("generators",)],
    "CentralizerCheck": [("generators", "singer", "companion")],
    "FixedSpaceCheck": [("generators", "singer", "companion")],
    "ModuleDecompositionCheck": [("generators", "singer", "companion")],
    "OrderSpectrumCheck": [("family", "model")],
    "RdContradiction": [("lower_bound", "degree")],
}


@dataclass
class Step:
    index: int
    id: str
    kind: str
    inputs: dict
    expected: object = None
    branch: str = MAIN_BRANCH
    citation: str = None
    note: str = None
    tol: float = None


@dataclass
class Branch:
    id: str
    claim: str
    terminal: str


@dataclass
class Certificate:
    metadata: dict
    constants: dict
    steps: list
    branches: list = field(default_factory=list)
    source: str = None

    @property
    def id(self):
        return self.metadata.get("id", "")

    def step(self, sid):
        for s in self.steps:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def trusted_steps(self):
        return [s for s in self.steps if s.kind == "TrustedClaim"]


# -- integer expressions ---------------------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Pow: operator.pow}


def parse_int_expr(text):
    """Integer from a decimal literal or a +, -, *, ^ expression such as
    ``"19^30 * 293^30"``."""
    if isinstance(text, bool):
        raise ValueError("boolean is not an integer")
    if isinstance(text, int):
        return text
    if not isinstance(text, str):
        raise ValueError(f"expected an integer, got {text!r}")
    try:
        tree = ast.parse(text.replace("^", "**").replace("_", ""), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad integer expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow) and (b < 0 or b > 10 ** 4):
                raise ValueError("exponent out of range")
            return _BINOPS[type(node.op)](a, b)
        raise ValueError(f"bad integer expression {text!r}")

    return ev(tree.body)


def parse_real(v):
    if isinstance(v, bool):
        raise ValueError("boolean is not a number")
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    if isinstance(v, (int, float, str)):
        return mpf(v)
    if isinstance(v, type(mpf(0))):
        return v
    raise ValueError(f"expected a number, got {v!r}")


def parse_poly(v):
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, str):
        return IntPolynomial.parse(v)
    if isinstance(v, list):
        return IntPolynomial(tuple(parse_int_expr(c) for c in v))
    raise ValueError(f"expected a polynomial, got {v!r}")


def _parse_bound(v):
    # the largest integer strictly below a rational bound, or an integer as is
    if isinstance(v, Fraction):
        return -((-v.numerator) // v.denominator) - 1
    return parse_int_expr(v)


def _parse_bool(v):
    if not isinstance(v, bool):
        raise ValueError(f"expected true/false, got {v!r}")
    return v


def _parse_str(v):
    if not isinstance(v, str):
        raise ValueError(f"expected a string, got {v!r}")
    return v


def _parse_ints(v):
    if isinstance(v, (int, str)) and not isinstance(v, bool):
        return [parse_int_expr(v)]
    if not isinstance(v, (list, tuple)):
        raise ValueError(f"expected a list of integers, got {v!r}")
    return [parse_int_expr(x) for x in v]


def _parse_matrices(v):
    if not isinstance(v, list) or not all(isinstance(m, list) for m in v):
        raise ValueError("expected a list of matrices")
    out = []
    for m in v:
        rows = [[parse_int_expr(a) for a in r] for r in m]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrices must be square")
        out.append(rows)
    return out


COERCE = {
    "int": parse_int_expr, "real": parse_real, "bool": _parse_bool, "str": _parse_str,
    "poly": parse_poly, "ints": _parse_ints, "matrices": _parse_matrices, "bound": _parse_bound,
}


# -- references ------------------------------------------------------------------------------

def is_const_ref(v):
    return isinstance(v, str) and v.startswith("$")


def is_step_ref(v):
    return isinstance(v, str) and v.startswith("@")


def iter_refs(v):
    if is_const_ref(v) or is_step_ref(v):
        yield v
    elif isinstance(v, list):
        for x in v:
            yield from iter_refs(x)


def resolve(v, constants, outputs):
    if is_const_ref(v):
        return resolve(constants[v[1:]], constants, outputs)
    if is_step_ref(v):
        return outputs[v[1:]]
    if isinstance(v, list):
        return [resolve(x, constants, outputs) for x in v]
    return v


# -- loading ---------------------------------------------------------------------------------

def load_certificate(source):
    """Parse and validate a certificate from a path or from TOML text."""
    path = None
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source
                                    and source.endswith(".toml")):
        path = str(source)
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    else:
        text = source
    try:
        doc = tomlcompat.loads(text)
    except tomlcompat.TOMLDecodeError as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc
    cert = from_dict(doc)
    cert.source = path
    validate(cert)
    return cert


def from_dict(doc):
    if not isinstance(doc.get("metadata"), dict):
        raise ParseError("missing [metadata] table")
    steps_raw = doc.get("steps")
    if not isinstance(steps_raw, list) or not steps_raw:
        raise ParseError("certificate has no [[steps]]")
    constants = doc.get("constants", {})
    if not isinstance(constants, dict):
        raise ParseError("[constants] must be a table")
    known = {"id", "kind", "inputs", "expected", "branch", "citation", "note", "tol"}
    steps = []
    for i, raw in enumerate(steps_raw):
        if not isinstance(raw, dict):
            raise ParseError(f"step {i} is not a table")
        extra = set(raw) - known
        if extra:
            raise ValidationError(f"unknown step fields {sorted(extra)}", i)
        for key in ("id", "kind"):
            if not isinstance(raw.get(key), str):
                raise ValidationError(f"missing or non-string '{key}'", i)
        inputs = raw.get("inputs", {})
        if not isinstance(inputs, dict):
            raise ValidationError("'inputs' must be a table", i)
        steps.append(Step(i, raw["id"], raw["kind"], inputs, raw.get("expected"),
                          raw.get("branch", MAIN_BRANCH), raw.get("citation"), raw.get("note"),
                          raw.get("tol")))
    branches = []
    for j, b in enumerate(doc.get("branches", [])):
        if not isinstance(b, dict) or not isinstance(b.get("id"), str) or not isinstance(b.get("terminal"), str):
            raise ParseError(f"branch {j} needs string 'id' and 'terminal'")
        branches.append(Branch(b["id"], b.get("claim", ""), b["terminal"]))
    return Certificate(doc["metadata"], constants, steps, branches)


def citation_allowed(citation):
    return isinstance(citation, str) and any(citation.startswith(w) for w in CITATION_WHITELIST)


def validate(cert):
    """Referential and per-kind checks; raises ValidationError with the
    offending step index."""
    seen = {}
    branch_ids = {b.id for b in cert.branches} | {MAIN_BRANCH}
    if len(branch_ids) != len(cert.branches) + 1:
        raise ValidationError("duplicate branch id")
    dedekind = set()
    for s in cert.steps:
        i = s.index
        if s.id in seen:
            raise ValidationError(f"duplicate step id {s.id!r}", i)
        if s.kind not in KINDS:
            raise ValidationError(f"unknown kind {s.kind!r}", i)
        spec = KINDS[s.kind]
        extra = set(s.inputs) - set(spec)
        if extra:
            raise ValidationError(f"{s.kind} takes no inputs {sorted(extra)}", i)
        missing = [k for k, (_, req) in spec.items() if req and k not in s.inputs]
        if missing:
            raise ValidationError(f"{s.kind} needs inputs {missing}", i)
        for group in ONE_OF.get(s.kind, []):
            present = [k for k in group if k in s.inputs]
            if len(present) != 1:
                raise ValidationError(f"{s.kind} needs exactly one of {list(group)}", i)
        for v in s.inputs.values():
            for ref in iter_refs(v):
                if is_const_ref(ref) and ref[1:] not in cert.constants:
                    raise ValidationError(f"undeclared constant {ref}", i)
                if is_step_ref(ref):
                    target = ref[1:]
                    if target not in seen:
                        raise ValidationError(f"reference {ref} is not an earlier step", i)
                    if seen[target] == "TrustedClaim":
                        raise ValidationError(f"reference {ref} points at a trusted step", i)
        if s.branch not in branch_ids:
            raise ValidationError(f"undeclared branch {s.branch!r}", i)
        if s.kind == "TrustedClaim":
            if not s.citation:
                raise ValidationError("TrustedClaim needs a citation", i)
            if not citation_allowed(s.citation):
                raise ValidationError(f"citation {s.citation!r} is not on the whitelist", i)
        elif s.expected is None:
            raise ValidationError("missing 'expected'", i)
        if s.tol is not None and (isinstance(s.tol, bool) or not isinstance(s.tol, (int, float))):
            raise ValidationError("'tol' must be a number", i)
        key = (repr(s.inputs.get("poly")), repr(s.inputs.get("p")))
        if s.kind == "DedekindMaximal":
            dedekind.add(key)
        if s.kind == "SplittingType" and not s.inputs.get("simple_factors_only", False):
            if key not in dedekind:
                raise ValidationError("SplittingType needs an earlier DedekindMaximal step on the same "
                                      "polynomial and prime", i)
        seen[s.id] = s.kind
    for b in cert.branches:
        if b.terminal not in seen:
            raise ValidationError(f"branch {b.id!r} ends at unknown step {b.terminal!r}")
        t = cert.step(b.terminal)
        if t.branch != b.id:
            raise ValidationError(f"terminal step of branch {b.id!r} belongs to {t.branch!r}", t.index)
        if t.kind not in TERMINAL_KINDS:
            raise ValidationError(f"{t.kind} cannot close a branch", t.index)
    return cert


def coerce_inputs(step, resolved):
    spec = KINDS[step.kind]
    out = {}
    for k, v in resolved.items():
        typ = spec[k][0]
        try:
            out[k] = COERCE[typ](v)
        except (ValueError, TypeError, ArithmeticError) as exc:
            raise ValidationError(f"input {k!r}: {exc}", step.index) from exc
    return out
