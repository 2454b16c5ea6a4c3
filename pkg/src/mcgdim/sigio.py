"""Text form of orbifold signatures and ingestion of action-database TSV files.

Grammar (whitespace between tokens is ignored)::

    signature  := '(' genus ';' orient ';' elliptic ';' boundaries ')'
    orient     := '+' | '-'
    genus      := decimal integer >= 0
    elliptic   := '[-]' | '[' int (',' int)* ']'
    boundaries := '{-}' | '{' bcomp (',' bcomp)* '}'
    bcomp      := '(' ')' | '(' int (',' int)* ')'

``()`` is a boundary circle made entirely of mirror points.

Action files are UTF-8 lines ``g <TAB> order <TAB> signature [<TAB> lambda_max]``;
lines starting with ``#`` and blank lines are skipped.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Union

from .groups import omega
from .orbifolds import BoundaryComponent, OrbifoldSignature, rh_order


class SignatureError(ValueError):
    """Base class for signature parse failures."""


class SignatureSyntaxError(SignatureError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class SignatureValueError(SignatureError):
    def __init__(self, message: str, field: str, offset: Optional[int] = None) -> None:
        super().__init__(f"{field}: {message}")
        self.message = message
        self.field = field
        self.offset = offset


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def offset(self, pos: Optional[int] = None) -> int:
        p = self.pos if pos is None else pos
        return len(self.text[:p].encode("utf-8"))

    def error(self, message: str, pos: Optional[int] = None) -> SignatureSyntaxError:
        return SignatureSyntaxError(message, self.offset(pos))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        got = self.peek()
        if got != ch:
            found = repr(got) if got else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self, what: str) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            got = self.text[start] if start < len(self.text) else ""
            found = repr(got) if got else "end of input"
            raise self.error(f"expected {what}, found {found}")
        return int(self.text[start : self.pos]), start

    def order_list(self, close: str, field: str, allow_empty: bool) -> list[int]:
        values: list[int] = []
        if allow_empty and self.peek() == close:
            self.pos += 1
            return values
        while True:
            value, at = self.integer(f"{field} (integer)")
            if value < 2:
                raise SignatureValueError(
                    f"order must be at least 2, got {value}", field, self.offset(at)
                )
            values.append(value)
            nxt = self.peek()
            if nxt == ",":
                self.pos += 1
            elif nxt == close:
                self.pos += 1
                return values
            else:
                found = repr(nxt) if nxt else "end of input"
                raise self.error(f"expected ',' or {close!r}, found {found}")

    def dash_or(self, close: str) -> bool:
        if self.peek() == "-":
            self.pos += 1
            self.expect(close)
            return True
        return False

    def signature(self) -> OrbifoldSignature:
        self.expect("(")
        genus, genus_at = self.integer("genus")
        self.expect(";")
        sign = self.peek()
        if sign not in ("+", "-"):
            found = repr(sign) if sign else "end of input"
            raise self.error(f"expected '+' or '-', found {found}")
        self.pos += 1
        orientable = sign == "+"
        self.expect(";")

        self.expect("[")
        elliptic = [] if self.dash_or("]") else self.order_list("]", "elliptic", False)
        self.expect(";")

        self.expect("{")
        boundaries: list[tuple[int, ...]] = []
        if not self.dash_or("}"):
            while True:
                self.expect("(")
                boundaries.append(tuple(self.order_list(")", "corner", True)))
                nxt = self.peek()
                if nxt == ",":
                    self.pos += 1
                elif nxt == "}":
                    self.pos += 1
                    break
                else:
                    found = repr(nxt) if nxt else "end of input"
                    raise self.error(f"expected ',' or '}}', found {found}")
        self.expect(")")
        if self.peek():
            raise self.error("trailing characters after signature")

        if not orientable and genus < 1:
            raise SignatureValueError(
                "non-orientable genus must be at least 1", "genus", self.offset(genus_at)
            )
        return OrbifoldSignature(
            orientable, genus, tuple(elliptic), tuple(BoundaryComponent(b) for b in boundaries)
        )


def parse_signature(text: str) -> OrbifoldSignature:
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    return _Parser(text).signature()


def render_signature(sig: OrbifoldSignature) -> str:
    sign = "+" if sig.orientable else "-"
    ell = "[" + ",".join(map(str, sig.elliptic)) + "]" if sig.elliptic else "[-]"
    if sig.boundaries:
        parts = ["(" + ",".join(map(str, b.corners)) + ")" for b in sig.boundaries]
        bnd = "{" + ", ".join(parts) + "}"
    else:
        bnd = "{-}"
    return f"({sig.genus}; {sign}; {ell}; {bnd})"


@dataclass(frozen=True)
class ActionRow:
    """One realized action on N_g: group order, quotient signature, optional exact length."""

    genus: int
    order: int
    signature: OrbifoldSignature
    lambda_max: Optional[int] = None

    def sort_key(self) -> tuple:
        return (self.genus, -self.order, render_signature(self.signature), self.lambda_max or 0)

    def to_tsv(self) -> str:
        cols = [str(self.genus), str(self.order), render_signature(self.signature)]
        if self.lambda_max is not None:
            cols.append(str(self.lambda_max))
        return "\t".join(cols)


class ActionFileError(ValueError):
    def __init__(self, diagnostics: list[tuple[int, str]]) -> None:
        self.diagnostics = diagnostics
        lines = "; ".join(f"line {n}: {why}" for n, why in diagnostics)
        super().__init__(lines)


def _parse_row(line: str) -> ActionRow:
    cols = line.split("\t")
    if len(cols) not in (3, 4):
        raise ValueError(f"expected 3 or 4 tab-separated columns, got {len(cols)}")
    try:
        g = int(cols[0])
        order = int(cols[1])
    except ValueError:
        raise ValueError("genus and order must be integers") from None
    if g < 3:
        raise ValueError(f"genus must be at least 3, got {g}")
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    try:
        sig = parse_signature(cols[2])
    except SignatureError as exc:
        raise ValueError(f"bad signature: {exc}") from None
    lam = None
    if len(cols) == 4 and cols[3].strip():
        try:
            lam = int(cols[3])
        except ValueError:
            raise ValueError("lambda_max must be an integer") from None
        if lam < 0:
            raise ValueError(f"lambda_max must be non-negative, got {lam}")
        if lam > omega(order):
            raise ValueError(f"lambda_max {lam} exceeds the prime-factor bound {omega(order)}")
    expected = rh_order(sig, g)
    if expected != order:
        raise ValueError(
            f"Riemann-Hurwitz mismatch: signature forces order {expected}, row says {order}"
        )
    return ActionRow(g, order, sig, lam)


def ingest_actions(source: Union[str, os.PathLike, IO[str], Iterable[str]]) -> list[ActionRow]:
    """Read, validate and canonically sort an action TSV file.

    ``source`` may be a path, an open text stream or any iterable of lines.
    Raises :class:`ActionFileError` carrying every bad line's number and reason.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = [ln.rstrip("\r\n") for ln in source]

    rows: dict[tuple, ActionRow] = {}
    errors: list[tuple[int, str]] = []
    for num, raw in enumerate(lines, start=1):
        line = raw.strip(" \r\n")
        if not line or line.startswith("#"):
            continue
        try:
            row = _parse_row(line)
        except ValueError as exc:
            errors.append((num, str(exc)))
            continue
        key = (row.genus, row.order, row.signature)
        prev = rows.get(key)
        if prev is not None and prev.lambda_max != row.lambda_max:
            errors.append((num, "conflicting lambda_max for a duplicate row"))
            continue
        rows[key] = row
    if errors:
        raise ActionFileError(errors)
    return sorted(rows.values(), key=ActionRow.sort_key)


def write_actions(rows: Iterable[ActionRow], stream: Optional[IO[str]] = None, header: str = "") -> str:
    buf = io.StringIO()
    for line in header.splitlines():
        buf.write(f"# {line}\n".replace("# \n", "#\n"))
    for row in sorted(rows, key=ActionRow.sort_key):
        buf.write(row.to_tsv() + "\n")
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text
