"""Text file formats for fields, matrices, codes and MP descriptions.

Every file starts with a field header line::

    field p=<p> e=<e> mod=<c_0>,<c_1>,...,<c_e>

where ``mod=`` may be omitted to select the default modulus table entry.
Lines starting with ``#`` and blank lines are ignored everywhere.

A matrix body is ``matrix <rows> <cols>`` followed by one row per line
of whitespace-separated element tokens.  A code body is ``code <n> <k>``
followed by generator rows (any generating set; it is canonicalized on
load and its rank must equal the declared k).  An MP description is a
field header, a ``defmatrix`` section containing a matrix body, and one
``constituent <i>`` section per defining-matrix row, each containing a
code body.

Check reports serialize as a ``verdict:`` line, a ``product:`` or
``zeta:`` matrix block, one ``witness i j <condition> ok|FAIL`` line per
condition and optional trailing ``note:`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import DEFAULT_MODULI, FieldSpec, format_element, parse_element
from .lincode import LinearCode
from .matgf import MatGF
from .mpcode import CheckReport, MPCode

__all__ = [
    "MPFileClaims",
    "ParseError",
    "dump_code",
    "dump_matrix",
    "dump_mp",
    "field_header",
    "load_code",
    "load_matrix",
    "load_mp",
    "parse_field_header",
    "report_lines",
]


class ParseError(ValueError):
    """A file format violation; the message names the offending line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class MPFileClaims:
    """Dimensions declared in an MP file, next to what was parsed.

    ``constituent_claims`` holds one (declared_n, declared_k, actual_k)
    triple per constituent; loaders in strict mode reject mismatches,
    the verification command reports them as disagreements instead.
    """

    constituent_claims: tuple[tuple[int, int, int], ...]

    def mismatches(self) -> list[tuple[int, int, int]]:
        """(index, declared_k, actual_k) for every wrong dimension claim."""
        return [
            (i, dk, ak)
            for i, (_, dk, ak) in enumerate(self.constituent_claims, start=1)
            if dk != ak
        ]


class _Lines:
    """Line cursor that skips comments and blanks, tracking numbers."""

    def __init__(self, text: str):
        self.raw = text.splitlines()
        self.pos = 0

    def peek(self) -> tuple[int, str] | None:
        pos = self.pos
        while pos < len(self.raw):
            stripped = self.raw[pos].strip()
            if stripped and not stripped.startswith("#"):
                return pos + 1, stripped
            pos += 1
        return None

    def next(self) -> tuple[int, str] | None:
        item = self.peek()
        if item is None:
            return None
        self.pos = item[0]
        return item


# ----------------------------------------------------------------------
# field header
# ----------------------------------------------------------------------

def field_header(spec: FieldSpec) -> str:
    base = f"field p={spec.p} e={spec.e}"
    if DEFAULT_MODULI.get(spec.q) == spec.modulus:
        return base
    return base + " mod=" + ",".join(str(c) for c in spec.modulus)


def parse_field_header(line: str, lineno: int = 1) -> FieldSpec:
    parts = line.split()
    if not parts or parts[0] != "field":
        raise ParseError(lineno, f"expected field header, got {line!r}")
    p = e = None
    modulus = None
    for tok in parts[1:]:
        if tok.startswith("p="):
            p = int(tok[2:])
        elif tok.startswith("e="):
            e = int(tok[2:])
        elif tok.startswith("mod="):
            modulus = tuple(int(c) for c in tok[4:].split(","))
        else:
            raise ParseError(lineno, f"unknown field attribute {tok!r}")
    if p is None or e is None:
        raise ParseError(lineno, "field header needs p= and e=")
    try:
        return FieldSpec(p, e, modulus)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


# ----------------------------------------------------------------------
# matrices
# ----------------------------------------------------------------------

def _parse_row(spec: FieldSpec, lineno: int, line: str, cols: int) -> list[int]:
    toks = line.split()
    if len(toks) != cols:
        raise ParseError(lineno, f"expected {cols} entries, got {len(toks)}")
    out = []
    for t in toks:
        try:
            out.append(parse_element(t, spec).enc)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return out


def _parse_matrix_body(lines: _Lines, spec: FieldSpec) -> MatGF:
    item = lines.next()
    if item is None:
        raise ParseError(len(lines.raw) + 1, "missing matrix header")
    lineno, line = item
    parts = line.split()
    if len(parts) != 3 or parts[0] != "matrix":
        raise ParseError(lineno, f"expected 'matrix <rows> <cols>', got {line!r}")
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(lineno, f"bad matrix dimensions in {line!r}") from None
    if rows < 0 or cols < 0:
        raise ParseError(lineno, "matrix dimensions must be non-negative")
    data = []
    for _ in range(rows):
        item = lines.next()
        if item is None:
            raise ParseError(len(lines.raw) + 1, f"matrix body ended early ({len(data)}/{rows} rows)")
        rl, rline = item
        data.append(_parse_row(spec, rl, rline, cols))
    if rows == 0:
        return MatGF.zeros(spec, 0, cols)
    return MatGF(spec, data)


def _matrix_body_lines(m: MatGF) -> list[str]:
    out = [f"matrix {m.rows} {m.cols}"]
    for row in m.data:
        out.append(" ".join(format_element(m.spec.element(int(x))) for x in row))
    return out


def dump_matrix(m: MatGF) -> str:
    return "\n".join([field_header(m.spec)] + _matrix_body_lines(m)) + "\n"


def load_matrix(text: str) -> MatGF:
    lines = _Lines(text)
    item = lines.next()
    if item is None:
        raise ParseError(1, "empty file")
    spec = parse_field_header(item[1], item[0])
    m = _parse_matrix_body(lines, spec)
    trailing = lines.next()
    if trailing is not None:
        raise ParseError(trailing[0], f"unexpected trailing content {trailing[1]!r}")
    return m


# ----------------------------------------------------------------------
# codes
# ----------------------------------------------------------------------

_SECTION_KEYWORDS = ("constituent", "defmatrix")


def _parse_code_body(
    lines: _Lines, spec: FieldSpec
) -> tuple[LinearCode, int, int, int]:
    """Returns (code, declared_n, declared_k, header_lineno)."""
    item = lines.next()
    if item is None:
        raise ParseError(len(lines.raw) + 1, "missing code header")
    lineno, line = item
    parts = line.split()
    if len(parts) != 3 or parts[0] != "code":
        raise ParseError(lineno, f"expected 'code <n> <k>', got {line!r}")
    try:
        n, k = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(lineno, f"bad code dimensions in {line!r}") from None
    if n < 1 or k < 0 or k > n:
        raise ParseError(lineno, f"invalid code parameters [{n},{k}]")
    rows = []
    while True:
        nxt = lines.peek()
        if nxt is None or nxt[1].split()[0] in _SECTION_KEYWORDS:
            break
        rl, rline = lines.next()
        rows.append(_parse_row(spec, rl, rline, n))
    gen = MatGF(spec, rows) if rows else MatGF.zeros(spec, 0, n)
    return LinearCode.from_generator(gen), n, k, lineno


def dump_code(c: LinearCode) -> str:
    out = [field_header(c.spec), f"code {c.n} {c.k}"]
    for row in c.gen.data:
        out.append(" ".join(format_element(c.spec.element(int(x))) for x in row))
    return "\n".join(out) + "\n"


def load_code(text: str, *, strict: bool = True) -> LinearCode:
    lines = _Lines(text)
    item = lines.next()
    if item is None:
        raise ParseError(1, "empty file")
    spec = parse_field_header(item[1], item[0])
    code, n, k, lineno = _parse_code_body(lines, spec)
    if strict and code.k != k:
        raise ParseError(
            lineno, f"declared dimension {k} but generator has rank {code.k}"
        )
    trailing = lines.next()
    if trailing is not None:
        raise ParseError(trailing[0], f"unexpected trailing content {trailing[1]!r}")
    return code


# ----------------------------------------------------------------------
# MP descriptions
# ----------------------------------------------------------------------

def dump_mp(mp: MPCode) -> str:
    out = [field_header(mp.spec), "defmatrix"]
    out.extend(_matrix_body_lines(mp.defmatrix))
    for i, c in enumerate(mp.constituents, start=1):
        out.append(f"constituent {i}")
        out.append(f"code {c.n} {c.k}")
        for row in c.gen.data:
            out.append(
                " ".join(format_element(c.spec.element(int(x))) for x in row)
            )
    return "\n".join(out) + "\n"


def load_mp(text: str, *, strict: bool = True) -> tuple[MPCode, MPFileClaims]:
    lines = _Lines(text)
    item = lines.next()
    if item is None:
        raise ParseError(1, "empty file")
    spec = parse_field_header(item[1], item[0])
    item = lines.next()
    if item is None or item[1] != "defmatrix":
        lineno = item[0] if item else len(lines.raw) + 1
        raise ParseError(lineno, "expected 'defmatrix' section")
    defmatrix = _parse_matrix_body(lines, spec)
    if defmatrix.rows < 1:
        raise ParseError(item[0], "defining matrix needs at least one row")
    constituents = []
    claims = []
    for want in range(1, defmatrix.rows + 1):
        item = lines.next()
        if item is None:
            raise ParseError(
                len(lines.raw) + 1,
                f"missing 'constituent {want}' section",
            )
        lineno, line = item
        parts = line.split()
        if len(parts) != 2 or parts[0] != "constituent":
            raise ParseError(lineno, f"expected 'constituent {want}', got {line!r}")
        if int(parts[1]) != want:
            raise ParseError(
                lineno, f"constituent sections out of order: expected {want}"
            )
        code, n, k, body_lineno = _parse_code_body(lines, spec)
        if strict and code.k != k:
            raise ParseError(
                body_lineno,
                f"constituent {want}: declared dimension {k} but generator has rank {code.k}",
            )
        constituents.append(code)
        claims.append((n, k, code.k))
    trailing = lines.next()
    if trailing is not None:
        raise ParseError(trailing[0], f"unexpected trailing content {trailing[1]!r}")
    lengths = {c.n for c in constituents}
    if len(lengths) != 1:
        raise ParseError(1, f"constituent lengths differ: {sorted(lengths)}")
    return MPCode(constituents, defmatrix), MPFileClaims(tuple(claims))


# ----------------------------------------------------------------------
# check reports
# ----------------------------------------------------------------------

def report_lines(report: CheckReport) -> list[str]:
    out = [f"verdict: {report.verdict.value}"]
    out.append(f"{report.matrix_kind}:")
    out.extend(_matrix_body_lines(report.condition_matrix))
    for w in report.witnesses:
        out.append(
            f"witness {w.i} {w.j} {w.condition} {'ok' if w.ok else 'FAIL'}"
        )
    for note in report.notes:
        out.append(f"note: {note}")
    return out
