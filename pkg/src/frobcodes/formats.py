"""Text and JSON formats for matrices, code listings and operator dumps.

Matrix text: one row per line, entries separated by single spaces.

Code listing: for each code a header ``# <index>`` (1-based), then its
generator rows, then a blank line.

JSON listing: ``{"p", "k", "n", "f", "xi", "codes"}`` plus an optional
``"details"`` array with one object per code holding any of
``standard_form``, ``check_matrix`` and ``min_distance``.
"""

import json
from importlib import resources

from .errors import ParseError
from .linalg import Matrix

LISTING_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["p", "k", "n", "codes"],
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "k": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 2},
        "f": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "xi": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "codes": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            },
        },
        "details": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "index": {"type": "integer", "minimum": 1},
                    "standard_form": {
                        "type": "object",
                        "required": ["perm", "matrix"],
                        "properties": {
                            "perm": {"type": "array", "items": {"type": "integer"}},
                            "matrix": {"type": "array"},
                        },
                    },
                    "check_matrix": {"type": "array"},
                    "min_distance": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


def format_matrix(m):
    return str(m)


def parse_matrix(text, p, first_line=1):
    rows = []
    for offset, line in enumerate(text.strip("\n").splitlines()):
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", first_line + offset) from None
    width = len(rows[0]) if rows else 0
    for offset, r in enumerate(rows):
        if len(r) != width:
            raise ParseError(f"row has {len(r)} entries, expected {width}", first_line + offset)
    return Matrix(rows, p)


def format_listing(codes, start=1):
    blocks = [f"# {i}\n{format_matrix(c.generator)}\n" for i, c in enumerate(codes, start)]
    return "\n".join(blocks)


def parse_listing(text, p):
    """Return ``[(index, Matrix, header_line), ...]`` from listing text.

    Row lengths must agree within each block; violations raise
    :class:`ParseError` carrying the offending line number.
    """
    blocks = []
    current = None
    width = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tag = line[1:].strip()
            try:
                index = int(tag)
            except ValueError:
                raise ParseError(f"bad block header {raw!r}", lineno) from None
            current = (index, [], lineno)
            blocks.append(current)
            width = None
            continue
        if current is None:
            raise ParseError("matrix row before any '# <index>' header", lineno)
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {raw!r}", lineno) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno)
        if any(not 0 <= x < p for x in row):
            raise ParseError(f"entry outside [0, {p})", lineno)
        current[1].append(row)
    out = []
    for index, rows, lineno in blocks:
        if not rows:
            raise ParseError(f"code #{index} has no rows", lineno)
        out.append((index, Matrix(rows, p), lineno))
    return out


def listing_document(ctx, codes, details=None):
    doc = {
        "p": ctx.p,
        "k": ctx.k,
        "n": ctx.n,
        "f": list(ctx.field.f),
        "xi": list(ctx.xi.coords),
        "codes": [[list(r) for r in c.generator.rows] for c in codes],
    }
    if details is not None:
        doc["details"] = details
    return doc


def code_details(index, code, sf=None, H=None, distance=None):
    d = {"index": index}
    if sf is not None:
        d["standard_form"] = {
            "perm": [j + 1 for j in sf.perm],
            "matrix": [list(r) for r in sf.matrix.rows],
        }
    if H is not None:
        d["check_matrix"] = [list(r) for r in H.rows]
    if distance is not None:
        d["min_distance"] = distance
    return d


def format_operators(ctx):
    """Labelled blocks: matrices as digit rows, elements in polynomial form."""
    d = ctx.to_dict()
    parts = []
    for key in ("sigma", "tau", "pi_plus", "pi_minus", "v_plus", "v_minus"):
        rows = "\n".join(" ".join(str(x) for x in r) for r in d[key])
        parts.append(f"{key}:\n{rows}\n")
    parts.append(f"xi: {ctx.xi}\nxi_inv: {ctx.xi_inv}\n")
    return "\n".join(parts)


def parse_operators(text, p):
    """Inverse of :func:`format_operators` for the matrix blocks and element lines."""
    out = {}
    key = None
    buf = []
    start = 1

    def flush():
        if key is not None and buf:
            out[key] = parse_matrix("\n".join(buf), p, start)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.endswith(":") and " " not in line:
            flush()
            key, buf, start = line[:-1], [], lineno + 1
        elif line.startswith(("xi:", "xi_inv:")):
            flush()
            key, buf = None, []
            name, value = line.split(":", 1)
            out[name] = value.strip()
        elif line:
            buf.append(line)
    flush()
    return out


def load_worked_example():
    """The worked example over F_{7^6}: f, g, xi and every printed matrix."""
    with resources.files("frobcodes").joinpath("data/worked_example_f7.json").open() as fh:
        return json.load(fh)
