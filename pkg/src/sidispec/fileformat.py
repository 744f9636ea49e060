"""Text wire formats: sidigraph files and polynomial coefficient lists.

Sidigraph format (UTF-8, LF or CRLF):

    sidigraph <n>
    <tail> <head> <+|->      # one arc per line, vertices 1-based
    # full-line or trailing comments start with '#', blank lines ignored

Polynomials travel as leading-first integer coefficient lists, e.g.
``1 0 -3 2 0`` for z^4 - 3z^2 + 2z.  Floats are printed with 12
significant digits; polynomial coefficients never pass through floats.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .graphs import Sidigraph
from .polynomials import IntPolynomial


def parse_sidigraph(text: str) -> Sidigraph:
    n: int | None = None
    arcs: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "sidigraph":
                raise ParseError("expected header 'sidigraph <n>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno)
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(tokens) != 3:
            raise ParseError("expected '<tail> <head> <+|->'", lineno)
        try:
            tail, head = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"bad vertex index in {line!r}", lineno)
        if tokens[2] == "+":
            sign = 1
        elif tokens[2] == "-":
            sign = -1
        else:
            raise ParseError(f"bad sign token {tokens[2]!r} (use + or -)", lineno)
        if not (1 <= tail <= n and 1 <= head <= n):
            raise ParseError(f"vertex index out of range 1..{n}", lineno)
        if tail == head:
            raise ParseError(f"self-loop on vertex {tail}", lineno)
        if (tail, head) in seen:
            raise ParseError(f"duplicate arc ({tail}, {head})", lineno)
        seen.add((tail, head))
        arcs.append((tail - 1, head - 1, sign))
    if n is None:
        raise ParseError("empty input: missing 'sidigraph <n>' header")
    return Sidigraph(n, arcs)


def render_sidigraph(s: Sidigraph, comment: str | None = None) -> str:
    """Canonical text form; parse(render(s)) == s."""
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append(f"sidigraph {s.n}")
    for t, h, sign in s.arcs:
        lines.append(f"{t + 1} {h + 1} {'+' if sign == 1 else '-'}")
    return "\n".join(lines) + "\n"


def parse_coefficients(text: str | Iterable[str]) -> IntPolynomial:
    """Leading-first integer list, whitespace or comma separated."""
    if isinstance(text, str):
        tokens = text.replace(",", " ").split()
    else:
        tokens = list(text)
    if not tokens:
        raise ParseError("empty coefficient list")
    try:
        coeffs = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"bad coefficient: {exc}")
    return IntPolynomial.from_leading(coeffs)


def format_coefficients(p: IntPolynomial) -> str:
    return " ".join(str(c) for c in p.leading_first())


def format_float(x: float) -> str:
    """12 significant digits, the JSON/table float contract."""
    return f"{x:.12g}"


def json_float(x: float) -> float:
    """The float actually emitted in JSON: rounded to 12 significant digits."""
    return float(format_float(x))
