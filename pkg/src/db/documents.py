"""
JSON documents for algebras, group actions and reports

Algebra documents use 1-based indices and scalar strings in the grammar of
parse_scalar:

    {"name": "mu_1", "dim": 2, "field": "Q",
     "brackets": [{"left": 1, "right": 1, "result": {"2": "1"}}]}

Omitted products are zero.
"""
import hashlib
import json

from src.config import APP_NAME, VERSION
from src.core.errors import (
    DocumentSyntaxError,
    IndexOutOfRange,
    InvalidAction,
    ParseError,
    ScalarParseError,
)
from src.core.leibniz import LeibnizAlgebra, StructureTable
from src.core.linalg import Matrix
from src.core.scalars import FIELDS, Scalar, parse_scalar
from src.services.morphisms import FiniteGroupAction


def _load_json(raw):
    if isinstance(raw, (bytes, bytearray)):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise DocumentSyntaxError(f"document is not UTF-8: {e}")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"malformed JSON: {e}")


def _require(data, key, kinds, where="document"):
    if not isinstance(data, dict) or key not in data:
        raise DocumentSyntaxError(f"{where} is missing '{key}'")
    value = data[key]
    if not isinstance(value, kinds) or isinstance(value, bool):
        raise DocumentSyntaxError(f"'{key}' in {where} has the wrong type")
    return value


def _field_and_dim(data):
    dim = _require(data, "dim", int)
    if dim < 0:
        raise DocumentSyntaxError("'dim' must be non-negative")
    field = _require(data, "field", str)
    if field not in FIELDS:
        raise DocumentSyntaxError(f"unknown field {field!r}; expected one of {', '.join(FIELDS)}")
    return dim, field


def _index(value, dim, where):
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentSyntaxError(f"{where} must be an integer index")
    if not 1 <= value <= dim:
        raise IndexOutOfRange(f"{where} {value} is outside 1..{dim}")
    return value - 1


def _scalar(value, field, where):
    if isinstance(value, int) and not isinstance(value, bool):
        return Scalar.of(value, field)
    if not isinstance(value, str):
        raise DocumentSyntaxError(f"{where} must be a scalar string")
    try:
        return parse_scalar(value, field)
    except ParseError as e:
        raise ScalarParseError(f"{where}: {e}")


def algebra_from_document(data, validate=True):
    """
    Build an algebra from a decoded algebra document

    Args:
        data: Decoded JSON object
        validate: Run validate_leibniz and refuse tables that fail it

    Returns:
        LeibnizAlgebra: The loaded algebra

    Raises:
        DocumentSyntaxError: Missing keys, wrong types or repeated pairs
        IndexOutOfRange: A basis index outside 1..dim
        ScalarParseError: A scalar string that does not parse
        LeibnizIdentityViolation: When validate is set and the identity fails
    """
    if not isinstance(data, dict):
        raise DocumentSyntaxError("an algebra document must be a JSON object")
    dim, field = _field_and_dim(data)
    name = data.get("name")
    brackets = _require(data, "brackets", list)
    products = {}
    for position, entry in enumerate(brackets, start=1):
        where = f"bracket #{position}"
        i = _index(_require(entry, "left", (int, str), where), dim, f"{where} left index")
        j = _index(_require(entry, "right", (int, str), where), dim, f"{where} right index")
        if (i, j) in products:
            raise DocumentSyntaxError(f"{where} repeats the pair ({i + 1}, {j + 1})")
        result = _require(entry, "result", dict, where)
        products[(i, j)] = {
            _index(k, dim, f"{where} result index"): _scalar(v, field, f"{where} coefficient of e{k}")
            for k, v in result.items()
        }
    table = StructureTable.from_brackets(dim, field, products)
    if validate:
        return LeibnizAlgebra.validated(table, name=name)
    return LeibnizAlgebra(table, name=name)


def parse_algebra_file(raw, validate=True):
    """
    Parse the bytes of an algebra document

    Args:
        raw: bytes or str holding JSON
        validate: Check the Leibniz identity on load

    Returns:
        LeibnizAlgebra: The loaded algebra
    """
    return algebra_from_document(_load_json(raw), validate=validate)


def load_algebra_file(path, validate=True):
    with open(path, "rb") as f:
        return parse_algebra_file(f.read(), validate=validate)


def export_algebra(L, name=None):
    """
    Serialize an algebra to its document form

    Brackets are listed in (left, right) order with zero coefficients
    dropped, so export followed by parse reproduces the same table.
    """
    brackets = []
    for (i, j), product in L.table.products().items():
        brackets.append({
            "left": i + 1,
            "right": j + 1,
            "result": {str(k + 1): s.render() for k, s in enumerate(product) if not s.is_zero()},
        })
    return {
        "name": name or L.name or "unnamed",
        "dim": L.dim,
        "field": L.field,
        "brackets": brackets,
    }


def _matrix(rows, dim, field, where):
    if not isinstance(rows, list) or len(rows) != dim:
        raise DocumentSyntaxError(f"{where} must have {dim} rows")
    out = []
    for r, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentSyntaxError(f"{where} row {r} must have {dim} entries")
        out.append([_scalar(v, field, f"{where} entry ({r}, {c})") for c, v in enumerate(row, start=1)])
    return Matrix(out, cols=dim, field=field)


def action_from_document(data):
    """
    Build a finite group action from a decoded action document

    The document lists the matrices psi_g as rows of scalar strings. When
    "table" is omitted the identity and multiplication table are derived
    from matrix products.

    Raises:
        DocumentSyntaxError: Malformed document
        InvalidAction: The table cannot be derived (set not closed or no
            identity)
    """
    if not isinstance(data, dict):
        raise DocumentSyntaxError("an action document must be a JSON object")
    dim, field = _field_and_dim(data)
    elements = _require(data, "elements", list)
    if not elements:
        raise DocumentSyntaxError("an action needs at least one element")
    matrices = [_matrix(m, dim, field, f"element #{g}") for g, m in enumerate(elements, start=1)]
    if "table" not in data:
        return FiniteGroupAction.from_matrices(matrices)
    table = _require(data, "table", list)
    if any(not isinstance(row, list) or any(not isinstance(k, int) for k in row) for row in table):
        raise DocumentSyntaxError("'table' must be a list of integer rows")
    if "identity_index" in data:
        identity_index = _require(data, "identity_index", int)
    else:
        identity = Matrix.identity(dim, field)
        if identity not in matrices:
            raise InvalidAction("the identity matrix is missing")
        identity_index = matrices.index(identity)
    return FiniteGroupAction(matrices, identity_index, table)


def parse_action_file(raw):
    return action_from_document(_load_json(raw))


def export_action(action):
    return {
        "dim": action.dim,
        "field": action.elements[0].field,
        "elements": [m.to_strings() for m in action.elements],
        "identity_index": action.identity_index,
        "table": action.table,
    }


def input_digest(raw):
    """sha256 hex digest of the raw input bytes"""
    if isinstance(raw, str):
        raw = raw.encode("utf-8")
    return hashlib.sha256(raw).hexdigest()


def report_document(command, payload, digest=None):
    """
    Wrap check results in the common report envelope

    Args:
        command: CLI command that produced the results
        payload: dict of results
        digest: sha256 of the input, when the input came from bytes

    Returns:
        dict: The report document
    """
    document = {
        "tool": APP_NAME,
        "version": VERSION,
        "command": command,
        "input_digest": digest,
    }
    document.update(payload)
    return document


def dump_document(document):
    """Stable JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
