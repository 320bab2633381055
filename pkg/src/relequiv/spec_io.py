"""Group-specification files: a JSON document whose matrix entries are cyclotomic literals.

Diagnostics carry the line and column of the offending token.
"""

import json
import json.decoder
import json.scanner
from dataclasses import dataclass, field

from .cyclotomic import parse_cyclotomic
from .errors import ParseError, SpecValidationError
from .group import close_group

__all__ = ["GroupSpec", "parse_spec", "load_spec", "build_group"]

KNOWN_KEYS = {
    "name", "m", "variables", "latex_variables", "rho_generators", "eta_generators",
    "sigma_values", "options", "expected",
}
KNOWN_OPTIONS = {"dmax", "k_degree_bound", "check_degree", "max_order"}


@dataclass
class GroupSpec:
    m: int
    variables: list
    rho_generators: list
    sigma_values: list
    eta_generators: list = None
    latex_variables: list = None
    name: str = ""
    options: dict = field(default_factory=dict)
    expected: dict = None  # optional {"invariant": [[...] per j], "equivariant": [...]}

    @property
    def n(self):
        return len(self.variables)


class _Located(str):
    """A decoded JSON string that remembers the offset of its opening quote."""

    pos = 0


def _line_col(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _decode(text):
    decoder = json.JSONDecoder(object_pairs_hook=_no_duplicates)

    def parse_string(s, end, strict=True):
        val, new_end = json.decoder.scanstring(s, end, strict)
        out = _Located(val)
        out.pos = end - 1
        return out, new_end

    decoder.parse_string = parse_string
    decoder.scan_once = json.scanner.py_make_scanner(decoder)
    try:
        return decoder.decode(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos, exc.lineno, exc.colno) from None


class _DuplicateKey(Exception):
    pass


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise _DuplicateKey(k)
        out[k] = v
    return out


def parse_spec(text):
    """Parse and validate a group specification (``str`` or UTF-8 ``bytes``)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not valid UTF-8", exc.start) from None
    try:
        doc = _decode(text)
    except _DuplicateKey as exc:
        raise SpecValidationError(f"duplicate key {exc.args[0]!r}") from None
    if not isinstance(doc, dict):
        raise SpecValidationError("top level must be a JSON object", 0, 1, 1)

    def fail(msg, node=None):
        if isinstance(node, _Located):
            line, col = _line_col(text, node.pos)
            raise SpecValidationError(msg, node.pos, line, col)
        raise SpecValidationError(msg)

    unknown = set(doc) - KNOWN_KEYS
    if unknown:
        fail(f"unknown field(s): {', '.join(sorted(unknown))}")
    for key in ("m", "variables", "rho_generators", "sigma_values"):
        if key not in doc:
            fail(f"missing required field {key!r}")

    m = doc["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        fail("m must be an integer >= 1")
    variables = doc["variables"]
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        fail("variables must be a nonempty list of names")
    if len(set(variables)) != len(variables):
        fail("variable names must be distinct")
    n = len(variables)

    def matrices(key, size=None):
        raw = doc[key]
        if not isinstance(raw, list):
            fail(f"{key} must be a list of matrices")
        if not raw:
            fail("at least one generator required")
        out = []
        for gi, mat in enumerate(raw):
            if not isinstance(mat, list) or not mat:
                fail(f"{key}[{gi}] must be a nonempty list of rows")
            rows = []
            for ri, row in enumerate(mat):
                if not isinstance(row, list):
                    fail(f"{key}[{gi}][{ri}] must be a list")
                if len(row) != len(mat):
                    first = next((x for x in row if isinstance(x, _Located)), None)
                    fail(f"{key}[{gi}] is ragged or not square: row {ri} has {len(row)} entries, "
                         f"expected {len(mat)}", first)
                entries = []
                for ci, x in enumerate(row):
                    if isinstance(x, int) and not isinstance(x, bool):
                        x = _Located(str(x))
                    if not isinstance(x, str):
                        fail(f"{key}[{gi}][{ri}][{ci}] must be a cyclotomic literal string")
                    try:
                        entries.append(parse_cyclotomic(x))
                    except ParseError as exc:
                        pos = getattr(x, "pos", None)
                        if pos is None:
                            fail(f"{key}[{gi}][{ri}][{ci}]: {exc}")
                        # +1 skips the opening quote
                        at = pos + 1 + (exc.pos or 0)
                        line, col = _line_col(text, at)
                        raise ParseError(f"{key}[{gi}][{ri}][{ci}]: {exc.args[0]}", at, line, col) from None
                rows.append(entries)
            if size is not None and len(rows) != size:
                fail(f"{key}[{gi}] must be {size}x{size} (one row per variable)")
            out.append(rows)
        return out

    rho = matrices("rho_generators", n)
    eta = None
    if doc.get("eta_generators") is not None:
        eta = matrices("eta_generators")
        if len(eta) != len(rho):
            fail("eta_generators and rho_generators must have the same length")
        if len({len(e) for e in eta}) > 1:
            fail("eta_generators must share one dimension")

    sig = doc["sigma_values"]
    if not isinstance(sig, list) or len(sig) != len(rho):
        fail("sigma_values must list one value per generator")
    for s in sig:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < m:
            fail(f"sigma value {s!r} outside 0..{m - 1}")

    latex = doc.get("latex_variables")
    if latex is not None and (not isinstance(latex, list) or len(latex) != n):
        fail("latex_variables must match variables in length")

    options = doc.get("options") or {}
    if not isinstance(options, dict):
        fail("options must be an object")
    bad = set(options) - KNOWN_OPTIONS
    if bad:
        fail(f"unknown option(s): {', '.join(sorted(bad))}")
    for k, v in options.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            fail(f"option {k} must be a nonnegative integer")

    expected = doc.get("expected")
    if expected is not None:
        if not isinstance(expected, dict) or set(expected) - {"invariant", "equivariant"}:
            fail("expected must map 'invariant'/'equivariant' to per-j coefficient lists")
        for kind, rows in expected.items():
            if not isinstance(rows, list) or len(rows) != m or not all(
                isinstance(r, list) and all(isinstance(c, int) for c in r) for r in rows
            ):
                fail(f"expected.{kind} must hold one integer list per j = 0..{m - 1}")

    return GroupSpec(
        m=m,
        variables=[str(v) for v in variables],
        rho_generators=rho,
        sigma_values=list(sig),
        eta_generators=eta,
        latex_variables=[str(v) for v in latex] if latex else None,
        name=str(doc.get("name", "")),
        options=dict(options),
        expected=expected,
    )


def load_spec(path):
    with open(path, "rb") as fh:
        return parse_spec(fh.read())


def build_group(spec, max_order=None):
    """Close the group described by ``spec`` (eta defaults to rho)."""
    bound = max_order or spec.options.get("max_order", 10000)
    etas = spec.eta_generators or [None] * len(spec.rho_generators)
    gens = list(zip(spec.rho_generators, etas, spec.sigma_values))
    return close_group(gens, spec.m, bound)
