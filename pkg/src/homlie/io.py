"""Line-oriented algebra definition files.

Format (``#`` starts a comment)::

    name sl2
    even e f h
    odd
    alpha identity          # or "alpha rows" followed by n rows of n rationals
    bracket h e = 2 e
    bracket e f = h
    bracket x y = 1/2 h + -1 e

Omitted brackets are zero. Each unordered pair may be given once; the loader
fills in the reversed pair by skew-supersymmetry, and a redundant entry for
the reversed pair must agree with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlphaDegreeViolation,
    HomLieSuperAlgebra,
    InvalidAlgebra,
    ParityViolation,
    SkewViolation,
    skew_sign,
)
from .linalg import ZERO, Matrix, format_scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class AlgebraSyntaxError(ParseError):
    pass


class AlgebraParityError(ParseError):
    pass


class AlgebraSkewError(ParseError):
    pass


class AlphaDegreeError(ParseError):
    pass


@dataclass(frozen=True)
class AlgebraFile:
    algebra: HomLieSuperAlgebra
    source: str | None
    bracket_lines: dict  # (i, j) -> line number of the entry that defined it


def _rational(tok: str, lineno: int, source) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise AlgebraSyntaxError(f"not a rational number: {tok!r}", lineno, source) from None


def _parse_terms(tokens: list[str], index: dict, lineno: int, source) -> dict[int, Fraction]:
    """Parse ``c1 b1 + c2 b2 ...``; a bare basis name means coefficient 1, a lone ``0`` means zero."""
    if tokens == ["0"]:
        return {}
    terms: dict[int, Fraction] = {}
    sign = 1
    expect_term = True
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in ("+", "-"):
            if expect_term and tok == "+":
                raise AlgebraSyntaxError("dangling '+'", lineno, source)
            sign = -1 if tok == "-" else 1
            expect_term = True
            i += 1
            continue
        if not expect_term:
            raise AlgebraSyntaxError(f"expected '+' before {tok!r}", lineno, source)
        if tok in index:
            coeff, name = Fraction(1), tok
            i += 1
        else:
            coeff = _rational(tok, lineno, source)
            if i + 1 >= len(tokens):
                raise AlgebraSyntaxError(f"coefficient {tok!r} without a basis vector", lineno, source)
            name = tokens[i + 1]
            if name not in index:
                raise AlgebraSyntaxError(f"unknown basis vector {name!r}", lineno, source)
            i += 2
        k = index[name]
        terms[k] = terms.get(k, ZERO) + sign * coeff
        sign = 1
        expect_term = False
    if expect_term:
        raise AlgebraSyntaxError("bracket value ends without a term", lineno, source)
    return {k: c for k, c in terms.items() if c}


def parse_file(text: str, source: str | None = None) -> AlgebraFile:
    name = None
    even: list[str] | None = None
    odd: list[str] | None = None
    alpha_mode = None
    alpha_rows: list[list[Fraction]] = []
    alpha_lines: list[int] = []
    brackets: list[tuple[int, str, str, list[str]]] = []
    pending_alpha = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if pending_alpha:
            try:
                alpha_rows.append([Fraction(t) for t in toks])
            except (ValueError, ZeroDivisionError):
                raise AlgebraSyntaxError(f"bad alpha row {line!r}", lineno, source) from None
            alpha_lines.append(lineno)
            pending_alpha -= 1
            continue
        key = toks[0]
        if key == "name":
            if len(toks) != 2:
                raise AlgebraSyntaxError("'name' takes one identifier", lineno, source)
            name = toks[1]
        elif key == "even":
            even = toks[1:]
        elif key == "odd":
            odd = toks[1:]
        elif key == "alpha":
            if even is None or odd is None:
                raise AlgebraSyntaxError("'alpha' must follow the 'even' and 'odd' lines", lineno, source)
            if toks[1:] == ["identity"]:
                alpha_mode = "identity"
            elif toks[1:] == ["rows"]:
                alpha_mode = "rows"
                pending_alpha = len(even) + len(odd)
            else:
                raise AlgebraSyntaxError("expected 'alpha identity' or 'alpha rows'", lineno, source)
        elif key == "bracket":
            if "=" not in toks:
                raise AlgebraSyntaxError("bracket line needs '='", lineno, source)
            eq = toks.index("=")
            if eq != 3:
                raise AlgebraSyntaxError("expected 'bracket <a> <b> = ...'", lineno, source)
            brackets.append((lineno, toks[1], toks[2], toks[4:]))
        else:
            raise AlgebraSyntaxError(f"unknown keyword {key!r}", lineno, source)

    if pending_alpha:
        raise AlgebraSyntaxError("file ends inside the alpha rows", None, source)
    if name is None:
        raise AlgebraSyntaxError("missing 'name' line", None, source)
    if even is None:
        even = []
    if odd is None:
        odd = []
    names = even + odd
    n = len(names)
    if len(set(names)) != n:
        raise AlgebraSyntaxError("duplicate basis names", None, source)
    index = {b: i for i, b in enumerate(names)}
    par = [0] * len(even) + [1] * len(odd)

    if alpha_mode in (None, "identity"):
        alpha = Matrix.identity(n)
    else:
        for r, ln in zip(alpha_rows, alpha_lines):
            if len(r) != n:
                raise AlgebraSyntaxError(f"alpha row has {len(r)} entries, expected {n}", ln, source)
        for i, (r, ln) in enumerate(zip(alpha_rows, alpha_lines)):
            for j, c in enumerate(r):
                if c and par[i] != par[j]:
                    raise AlphaDegreeError(
                        f"alpha entry ({names[i]}, {names[j]}) mixes parities", ln, source
                    )
        alpha = Matrix.from_rows(alpha_rows, n) if n else Matrix.zeros(0)

    table: dict[tuple[int, int], tuple[dict[int, Fraction], int]] = {}
    for lineno, a, b, rhs in brackets:
        for bn in (a, b):
            if bn not in index:
                raise AlgebraSyntaxError(f"unknown basis vector {bn!r}", lineno, source)
        i, j = index[a], index[b]
        terms = _parse_terms(rhs, index, lineno, source)
        target = (par[i] + par[j]) % 2
        for k in terms:
            if par[k] != target:
                raise AlgebraParityError(
                    f"[{a},{b}] must lie in the {'odd' if target else 'even'} part but has a {names[k]} term",
                    lineno,
                    source,
                )
        s = skew_sign(par[i], par[j])
        mirrored = {k: s * c for k, c in terms.items()}
        for key_, val in (((i, j), terms), ((j, i), mirrored)):
            if key_ in table and table[key_][0] != val:
                raise AlgebraSkewError(
                    f"[{names[key_[0]]},{names[key_[1]]}] conflicts with line {table[key_][1]}",
                    lineno,
                    source,
                )
        if i == j and terms != mirrored:
            raise AlgebraSkewError(f"[{a},{a}] must vanish for an even element", lineno, source)
        table[(i, j)] = (terms, lineno)
        table.setdefault((j, i), (mirrored, lineno))

    structure = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [ZERO] * n
            if (i, j) in table:
                for k, c in table[(i, j)][0].items():
                    v[k] = c
            row.append(tuple(v))
        structure.append(tuple(row))
    try:
        algebra = HomLieSuperAlgebra(name, len(even), len(odd), tuple(names), tuple(structure), alpha)
    except ParityViolation as exc:
        raise AlgebraParityError(str(exc), None, source) from exc
    except SkewViolation as exc:
        raise AlgebraSkewError(str(exc), None, source) from exc
    except AlphaDegreeViolation as exc:
        raise AlphaDegreeError(str(exc), None, source) from exc
    except InvalidAlgebra as exc:
        raise AlgebraSyntaxError(str(exc), None, source) from exc
    return AlgebraFile(algebra, source, {k: v[1] for k, v in table.items()})


def parse(text: str, source: str | None = None) -> HomLieSuperAlgebra:
    return parse_file(text, source).algebra


def load(path) -> HomLieSuperAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), str(path))


def _format_terms(v, names) -> str:
    parts = [f"{format_scalar(c)} {names[k]}" for k, c in enumerate(v) if c]
    return " + ".join(parts) if parts else "0"


def serialize(A: HomLieSuperAlgebra) -> str:
    names = A.basis_names
    lines = [
        f"name {A.name}",
        ("even " + " ".join(names[: A.even_dim])).rstrip(),
        ("odd " + " ".join(names[A.even_dim:])).rstrip(),
    ]
    if A.is_alpha_identity():
        lines.append("alpha identity")
    else:
        lines.append("alpha rows")
        for i in range(A.dim):
            lines.append("  " + " ".join(format_scalar(x) for x in A.alpha.row(i)))
    for i in range(A.dim):
        for j in range(i, A.dim):
            v = A.structure[i][j]
            if any(v):
                lines.append(f"bracket {names[i]} {names[j]} = {_format_terms(v, names)}")
    return "\n".join(lines) + "\n"


def dump(A: HomLieSuperAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(A))
