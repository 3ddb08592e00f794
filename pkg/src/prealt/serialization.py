"""JSON file format for algebras, tensors and reports.

One file describes one algebra (alternative: a ``mult`` table;
pre-alternative: ``prec`` and ``succ`` tables) plus optional sections
(``form``, ``r``, ``alpha``/``beta``/``delta`` comultiplication cubes,
``actions``, ``grading``, ``map``).  All indices are 0-based.  Scalars
are encoded as strings like ``"-3/2"`` over the rationals and as bare
integers in ``[0, p)`` over a prime field.  Unknown keys are rejected,
as is any ``format_version`` other than ``"1"``.

Serialization is deterministic: keys sorted, entries emitted in
lexicographic index order, two-space indentation, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .alternative import AlternativeAlgebra, AltBimoduleAction
from .bialgebras import Comultiplication
from .errors import ParseError
from .fields import QQ, FieldSpec, PrimeField
from .linalg import LinearMap
from .prealternative import PreAlternativeAlgebra, PreAltBimoduleAction
from .reports import CheckReport
from .tensors import BilinearForm, Tensor2

FORMAT_VERSION = "1"

_KNOWN_KEYS = {
    "format_version", "field", "dim", "basis", "products",
    "alpha", "beta", "delta", "form", "r", "grading", "map", "actions",
}


def _encode_field(field: FieldSpec):
    if field == QQ:
        return "Q"
    return {"Fp": field.p}


def _parse_field(obj) -> FieldSpec:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        p = obj["Fp"]
        if isinstance(p, bool) or not isinstance(p, int):
            raise ParseError(f"bad prime field description {obj!r}")
        return PrimeField(p)
    raise ParseError(f"bad field description {obj!r}")


def _check_index(i, dim: int, what: str) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < dim:
        raise ParseError(f"{what} index {i!r} out of range [0, {dim})")
    return i


def _encode_cube(field: FieldSpec, tensor, dim: int):
    out = []
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                c = tensor[i][j][k]
                if c:
                    out.append([i, j, k, field.encode(c)])
    return out


def _encode_tensor2(field: FieldSpec, a, dim: int):
    return [[i, j, field.encode(a[i][j])]
            for i in range(dim) for j in range(dim) if a[i][j]]


def _encode_comult(field: FieldSpec, comult: Comultiplication):
    out = []
    for i in range(comult.dim):
        for j, k, c in comult.maps[i].nonzero_items():
            out.append([i, j, k, field.encode(c)])
    return out


def _encode_action_family(field: FieldSpec, fam):
    out = []
    for x, mat in enumerate(fam):
        for a, row in enumerate(mat):
            for b, c in enumerate(row):
                if c:
                    out.append([x, a, b, field.encode(c)])
    return out


def encode_algebra_file(
    algebra,
    form: BilinearForm | None = None,
    r: Tensor2 | None = None,
    alpha: Comultiplication | None = None,
    beta: Comultiplication | None = None,
    delta: Comultiplication | None = None,
    actions=None,
    grading: list[int] | None = None,
    linmap: LinearMap | None = None,
) -> dict:
    """Build the JSON-level dict for an algebra plus optional sections."""
    field = algebra.field
    dim = algebra.dim
    doc = {
        "format_version": FORMAT_VERSION,
        "field": _encode_field(field),
        "dim": dim,
        "basis": list(algebra.labels),
    }
    if isinstance(algebra, AlternativeAlgebra):
        doc["products"] = {"mult": _encode_cube(field, algebra.mult, dim)}
    elif isinstance(algebra, PreAlternativeAlgebra):
        doc["products"] = {
            "prec": _encode_cube(field, algebra.prec, dim),
            "succ": _encode_cube(field, algebra.succ, dim),
        }
    else:
        raise TypeError(f"cannot encode {type(algebra).__name__}")
    if form is not None:
        doc["form"] = _encode_tensor2(field, form.b, dim)
    if r is not None:
        doc["r"] = _encode_tensor2(field, r.a, dim)
    if alpha is not None:
        doc["alpha"] = _encode_comult(field, alpha)
    if beta is not None:
        doc["beta"] = _encode_comult(field, beta)
    if delta is not None:
        doc["delta"] = _encode_comult(field, delta)
    if grading is not None:
        doc["grading"] = list(grading)
    if linmap is not None:
        doc["map"] = [[i, j, field.encode(linmap.entries[i][j])]
                      for i in range(linmap.codomain_dim)
                      for j in range(linmap.domain_dim)
                      if linmap.entries[i][j]]
    if actions is not None:
        if isinstance(actions, AltBimoduleAction):
            doc["actions"] = {
                "module_dim": actions.module_dim,
                "L": _encode_action_family(field, actions.L),
                "R": _encode_action_family(field, actions.R),
            }
        elif isinstance(actions, PreAltBimoduleAction):
            doc["actions"] = {
                "module_dim": actions.module_dim,
                "Lp": _encode_action_family(field, actions.Lp),
                "Rp": _encode_action_family(field, actions.Rp),
                "Ls": _encode_action_family(field, actions.Ls),
                "Rs": _encode_action_family(field, actions.Rs),
            }
        else:
            raise TypeError(f"cannot encode actions of type {type(actions).__name__}")
    return doc


@dataclass
class ParsedFile:
    """Decoded contents of one algebra file."""

    field: FieldSpec
    dim: int
    labels: list[str]
    algebra: object  # AlternativeAlgebra or PreAlternativeAlgebra
    form: BilinearForm | None = None
    r: Tensor2 | None = None
    alpha: Comultiplication | None = None
    beta: Comultiplication | None = None
    delta: Comultiplication | None = None
    actions: object | None = None
    grading: list[int] | None = None
    linmap: LinearMap | None = None

    @property
    def is_prealternative(self) -> bool:
        return isinstance(self.algebra, PreAlternativeAlgebra)


def _parse_cube(field: FieldSpec, entries, dim: int, what: str):
    cube = [[[field.zero for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    if not isinstance(entries, list):
        raise ParseError(f"{what} must be a list of [i, j, k, scalar] entries")
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"bad {what} entry {entry!r}")
        i, j, k, c = entry
        _check_index(i, dim, what)
        _check_index(j, dim, what)
        _check_index(k, dim, what)
        cube[i][j][k] = cube[i][j][k] + field.parse(c)
    return cube


def _parse_tensor2(field: FieldSpec, entries, dim: int, what: str):
    a = [[field.zero for _ in range(dim)] for _ in range(dim)]
    if not isinstance(entries, list):
        raise ParseError(f"{what} must be a list of [i, j, scalar] entries")
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError(f"bad {what} entry {entry!r}")
        i, j, c = entry
        _check_index(i, dim, what)
        _check_index(j, dim, what)
        a[i][j] = a[i][j] + field.parse(c)
    return a


def _parse_action_family(field: FieldSpec, entries, algebra_dim: int,
                         module_dim: int, what: str):
    fam = [[[field.zero for _ in range(module_dim)] for _ in range(module_dim)]
           for _ in range(algebra_dim)]
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError(f"bad {what} entry {entry!r}")
        x, a, b, c = entry
        _check_index(x, algebra_dim, what)
        _check_index(a, module_dim, what)
        _check_index(b, module_dim, what)
        fam[x][a][b] = fam[x][a][b] + field.parse(c)
    return fam


def parse_algebra_file(doc) -> ParsedFile:
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(doc) - _KNOWN_KEYS
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ParseError(
            f"unsupported format_version {doc.get('format_version')!r}"
        )
    for key in ("field", "dim", "basis", "products"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    field = _parse_field(doc["field"])
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError(f"bad dimension {dim!r}")
    labels = doc["basis"]
    if not isinstance(labels, list) or len(labels) != dim or \
            not all(isinstance(s, str) for s in labels):
        raise ParseError("basis must list one string label per dimension")
    products = doc["products"]
    if not isinstance(products, dict):
        raise ParseError("products must be an object")
    if set(products) == {"mult"}:
        algebra = AlternativeAlgebra(field, dim, list(labels),
                                     _parse_cube(field, products["mult"], dim, "mult"))
    elif set(products) == {"prec", "succ"}:
        algebra = PreAlternativeAlgebra(
            field, dim, list(labels),
            _parse_cube(field, products["prec"], dim, "prec"),
            _parse_cube(field, products["succ"], dim, "succ"),
        )
    else:
        raise ParseError(
            "products must contain exactly 'mult' or exactly 'prec' and 'succ'"
        )
    out = ParsedFile(field, dim, list(labels), algebra)
    if "form" in doc:
        out.form = BilinearForm(field, dim, _parse_tensor2(field, doc["form"], dim, "form"))
    if "r" in doc:
        out.r = Tensor2(field, dim, _parse_tensor2(field, doc["r"], dim, "r"))
    for key in ("alpha", "beta", "delta"):
        if key in doc:
            cube = _parse_cube(field, doc[key], dim, key)
            setattr(out, key, Comultiplication.from_cube(field, dim, cube))
    if "grading" in doc:
        g = doc["grading"]
        if not isinstance(g, list) or len(g) != dim or not all(
            isinstance(x, int) and not isinstance(x, bool) and x >= 1 for x in g
        ):
            raise ParseError("grading must list one positive integer per basis vector")
        out.grading = list(g)
    if "map" in doc:
        entries = [[field.zero for _ in range(dim)] for _ in range(dim)]
        for entry in doc["map"]:
            if not isinstance(entry, list) or len(entry) != 3:
                raise ParseError(f"bad map entry {entry!r}")
            i, j, c = entry
            _check_index(i, dim, "map")
            _check_index(j, dim, "map")
            entries[i][j] = entries[i][j] + field.parse(c)
        out.linmap = LinearMap(field, dim, dim, entries)
    if "actions" in doc:
        act = doc["actions"]
        if not isinstance(act, dict) or "module_dim" not in act:
            raise ParseError("actions must be an object with a module_dim")
        m = act["module_dim"]
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise ParseError(f"bad module_dim {m!r}")
        keys = set(act) - {"module_dim"}
        if keys == {"L", "R"}:
            out.actions = AltBimoduleAction(
                field, dim, m,
                _parse_action_family(field, act["L"], dim, m, "L"),
                _parse_action_family(field, act["R"], dim, m, "R"),
            )
        elif keys == {"Lp", "Rp", "Ls", "Rs"}:
            out.actions = PreAltBimoduleAction(
                field, dim, m,
                _parse_action_family(field, act["Lp"], dim, m, "Lp"),
                _parse_action_family(field, act["Rp"], dim, m, "Rp"),
                _parse_action_family(field, act["Ls"], dim, m, "Ls"),
                _parse_action_family(field, act["Rs"], dim, m, "Rs"),
            )
        else:
            raise ParseError("actions must contain L/R or Lp/Rp/Ls/Rs families")
    return out


def dumps(doc: dict) -> str:
    """Canonical serialization: sorted keys, two-space indent, newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> ParsedFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return parse_algebra_file(doc)


def encode_report(field: FieldSpec, command: str, report: CheckReport) -> dict:
    """JSON-level report document; deterministic for a fixed input."""
    info = {}
    for key, value in sorted(report.info.items()):
        info[key] = value
    return {
        "format_version": FORMAT_VERSION,
        "command": command,
        "verdict": "pass" if report.passed else "fail",
        "violations": [
            {
                "identity": v.identity,
                "witness": list(v.witness),
                "residual": [field.encode(c) for c in v.residual],
            }
            for v in report.violations
        ],
        "truncated": report.truncated,
        "total_violations": report.total_violations,
        "evaluations": report.evaluations,
        "info": info,
    }
