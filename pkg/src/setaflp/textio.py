"""Text formats: the .lp program grammar, the .setaf grammar, canonical
printers, and DOT/JSON exports.

Program grammar (one statement per `.`; `%` comments run to end of line):

    head :- lit, lit, ... .      rule (lit is `atom` or `not atom`)
    head.                        fact
    #universe a, b, c.           adds atoms to the universe

SETAF grammar (one statement per line; `%` comments):

    arg a
    att a,d -> c

Printers emit canonical text: everything lexicographically sorted, so
parse(print(x)) == x and print(parse(canonical_text)) == canonical_text.
The reduct's undefined constant has no surface syntax at all; its reserved
spelling `_u` is rejected wherever an atom is expected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .correspond import EquivalenceReport
from .errors import InputError
from .programs import ATOM_RE, Interpretation, Program, Rule
from .setafs import Labelling, Setaf, minimize_attacks, validate_setaf

RESERVED_UNDEF = "_u"


@dataclass(frozen=True)
class SourceSpan:
    """Where in the input a token sits: 1-based line/column plus the byte
    offsets [start, end) of the token itself."""

    line: int
    column: int
    start: int
    end: int


class ParseError(InputError):
    """Bad surface syntax, pointing at the offending token."""

    def __init__(self, message: str, span: SourceSpan):
        self.span = span
        super().__init__(f"line {span.line}, column {span.column}: {message}")


class ReservedAtom(ParseError):
    """The undefined constant's spelling showed up in source text."""


@dataclass(frozen=True)
class _Token:
    kind: str  # "word", "punct", "directive", "eof"
    text: str
    span: SourceSpan


def _tokenize_program(text: str) -> list[_Token]:
    tokens = []
    i, line, col, byte = 0, 1, 1, 0
    n = len(text)

    def char_bytes(c: str) -> int:
        return len(c.encode("utf-8"))

    def advance(count: int):
        nonlocal i, line, col, byte
        for _ in range(count):
            c = text[i]
            byte += char_bytes(c)
            if c == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c == "%":
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if c.isspace():
            advance(1)
            continue
        if c in ",.":
            tokens.append(_Token("punct", c, SourceSpan(line, col, byte, byte + 1)))
            advance(1)
            continue
        if c == ":":
            if text[i : i + 2] == ":-":
                tokens.append(_Token("punct", ":-", SourceSpan(line, col, byte, byte + 2)))
                advance(2)
                continue
            raise ParseError("expected ':-'", SourceSpan(line, col, byte, byte + 1))
        if c == "#":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            span = SourceSpan(line, col, byte, byte + len(word.encode("utf-8")))
            tokens.append(_Token("directive", word, span))
            advance(j - i)
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            span = SourceSpan(line, col, byte, byte + len(word.encode("utf-8")))
            tokens.append(_Token("word", word, span))
            advance(j - i)
            continue
        raise ParseError(f"unexpected character {c!r}", SourceSpan(line, col, byte, byte + char_bytes(c)))
    tokens.append(_Token("eof", "", SourceSpan(line, col, byte, byte)))
    return tokens


class _Cursor:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect_punct(self, text: str) -> _Token:
        tok = self.take()
        if tok.kind != "punct" or tok.text != text:
            shown = tok.text or "end of input"
            raise ParseError(f"expected '{text}', found {shown!r}", tok.span)
        return tok


def _expect_atom(cur: _Cursor) -> str:
    tok = cur.take()
    if tok.kind != "word":
        shown = tok.text or "end of input"
        raise ParseError(f"expected an atom, found {shown!r}", tok.span)
    return _check_atom(tok)


def _check_atom(tok: _Token) -> str:
    if tok.text == RESERVED_UNDEF:
        raise ReservedAtom(
            f"'{RESERVED_UNDEF}' is the reserved undefined constant and cannot appear in source",
            tok.span,
        )
    if tok.text == "not" or not ATOM_RE.match(tok.text):
        raise ParseError(f"not a legal atom name: {tok.text!r}", tok.span)
    return tok.text


def parse_program(text: str) -> Program:
    """Parse .lp text. Duplicate rules and duplicate body literals collapse;
    `#universe` directives extend the universe beyond the occurring atoms."""
    cur = _Cursor(_tokenize_program(text))
    rules = set()
    extra_universe = set()
    while cur.peek().kind != "eof":
        tok = cur.peek()
        if tok.kind == "directive":
            cur.take()
            if tok.text != "#universe":
                raise ParseError(f"unknown directive {tok.text!r}", tok.span)
            extra_universe.add(_expect_atom(cur))
            while cur.peek().kind == "punct" and cur.peek().text == ",":
                cur.take()
                extra_universe.add(_expect_atom(cur))
            cur.expect_punct(".")
            continue
        head = _expect_atom(cur)
        nxt = cur.take()
        if nxt.kind == "punct" and nxt.text == ".":
            rules.add(Rule(head))
            continue
        if not (nxt.kind == "punct" and nxt.text == ":-"):
            shown = nxt.text or "end of input"
            raise ParseError(f"expected '.' or ':-', found {shown!r}", nxt.span)
        pos, neg = set(), set()
        while True:
            tok = cur.peek()
            if tok.kind == "word" and tok.text == "not":
                cur.take()
                neg.add(_expect_atom(cur))
            else:
                pos.add(_expect_atom(cur))
            sep = cur.take()
            if sep.kind == "punct" and sep.text == ",":
                continue
            if sep.kind == "punct" and sep.text == ".":
                break
            shown = sep.text or "end of input"
            raise ParseError(f"expected ',' or '.', found {shown!r}", sep.span)
        rules.add(Rule(head, frozenset(pos), frozenset(neg)))
    occurring = {a for r in rules for a in r.atoms()}
    return Program(frozenset(rules), frozenset(occurring) | frozenset(extra_universe))


def parse_setaf(text: str, minimize: bool = False) -> Setaf:
    """Parse .setaf text. Non-minimal attack lists are rejected unless
    *minimize* is set, in which case they are repaired via minimize_attacks."""
    args: set[str] = set()
    attacks: list[tuple[frozenset[str], str]] = []
    byte = 0
    for lineno, raw in enumerate(text.split("\n"), 1):
        line_start = byte
        byte += len(raw.encode("utf-8")) + 1
        content = raw.split("%", 1)[0]
        if not content.strip():
            continue
        toks = _tokenize_setaf_line(content, lineno, line_start)
        cur = _Cursor(toks)
        kw = cur.take()
        if kw.kind == "word" and kw.text == "arg":
            args.add(_expect_atom(cur))
        elif kw.kind == "word" and kw.text == "att":
            sources = {_expect_atom(cur)}
            while cur.peek().kind == "punct" and cur.peek().text == ",":
                cur.take()
                sources.add(_expect_atom(cur))
            arrow = cur.take()
            if not (arrow.kind == "punct" and arrow.text == "->"):
                shown = arrow.text or "end of line"
                raise ParseError(f"expected '->', found {shown!r}", arrow.span)
            attacks.append((frozenset(sources), _expect_atom(cur)))
        else:
            shown = kw.text or "end of line"
            raise ParseError(f"expected 'arg' or 'att', found {shown!r}", kw.span)
        trailing = cur.take()
        if trailing.kind != "eof":
            raise ParseError(f"unexpected trailing input {trailing.text!r}", trailing.span)
    if minimize:
        return minimize_attacks(attacks, args)
    return validate_setaf(args, attacks)


def _tokenize_setaf_line(content: str, lineno: int, line_start: int) -> list[_Token]:
    tokens = []
    i, col, byte = 0, 1, line_start
    n = len(content)
    while i < n:
        c = content[i]
        if c.isspace():
            byte += len(c.encode("utf-8"))
            i += 1
            col += 1
            continue
        if c == ",":
            tokens.append(_Token("punct", ",", SourceSpan(lineno, col, byte, byte + 1)))
            i += 1
            col += 1
            byte += 1
            continue
        if content[i : i + 2] == "->":
            tokens.append(_Token("punct", "->", SourceSpan(lineno, col, byte, byte + 2)))
            i += 2
            col += 2
            byte += 2
            continue
        if c.isalnum() or c == "_":
            j = i
            while j < n and (content[j].isalnum() or content[j] == "_"):
                j += 1
            word = content[i:j]
            nbytes = len(word.encode("utf-8"))
            tokens.append(_Token("word", word, SourceSpan(lineno, col, byte, byte + nbytes)))
            col += j - i
            byte += nbytes
            i = j
            continue
        raise ParseError(
            f"unexpected character {c!r}",
            SourceSpan(lineno, col, byte, byte + len(c.encode("utf-8"))),
        )
    tokens.append(_Token("eof", "", SourceSpan(lineno, col, byte, byte)))
    return tokens


# --- printers ----------------------------------------------------------------


def _braces(atoms) -> str:
    return "{" + ",".join(sorted(atoms)) + "}"


def print_program(p: Program) -> str:
    """Canonical .lp text: an optional #universe directive for atoms no rule
    mentions, then the rules in sorted order."""
    lines = []
    extra = p.universe - p.occurring_atoms()
    if extra:
        lines.append("#universe " + ", ".join(sorted(extra)) + ".")
    lines.extend(str(r) for r in p.sorted_rules())
    return "\n".join(lines) + ("\n" if lines else "")


def print_setaf(s: Setaf) -> str:
    """Canonical .setaf text: sorted arg lines, then sorted att lines."""
    lines = [f"arg {a}" for a in sorted(s.arguments)]
    lines.extend(
        f"att {','.join(sorted(atk.source))} -> {atk.target}" for atk in s.sorted_attacks()
    )
    return "\n".join(lines) + ("\n" if lines else "")


def print_interpretation(i: Interpretation, universe) -> str:
    return f"T={_braces(i.true)} F={_braces(i.false)} U={_braces(i.undefined(universe))}"


def print_labelling(l: Labelling) -> str:
    return f"in={_braces(l.in_)} out={_braces(l.out)} undec={_braces(l.undec)}"


def export_dot(s: Setaf) -> str:
    """Graphviz rendering. Single-source attacks are plain edges; a
    collective attack gets one point-shaped junction node that its sources
    feed into and that points at the target."""
    lines = ["digraph setaf {", "  rankdir=LR;"]
    for a in sorted(s.arguments):
        lines.append(f'  "{a}" [shape=circle];')
    junction = 0
    for atk in s.sorted_attacks():
        if len(atk.source) == 1:
            (src,) = atk.source
            lines.append(f'  "{src}" -> "{atk.target}";')
        else:
            name = f"att{junction}"
            junction += 1
            lines.append(f'  "{name}" [shape=point];')
            for src in sorted(atk.source):
                lines.append(f'  "{src}" -> "{name}" [arrowhead=none];')
            lines.append(f'  "{name}" -> "{atk.target}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _interp_obj(i: Interpretation) -> dict:
    return {"true": sorted(i.true), "false": sorted(i.false)}


def _labelling_obj(l: Labelling) -> dict:
    return {"in": sorted(l.in_), "out": sorted(l.out), "undec": sorted(l.undec)}


def export_json(obj) -> str:
    """JSON for programs, SETAFs, and equivalence reports. Key order is fixed
    by construction so output is byte-stable."""
    if isinstance(obj, Program):
        data = {
            "type": "program",
            "universe": sorted(obj.universe),
            "rules": [
                {
                    "head": r.head,
                    "body_pos": sorted(r.body_pos),
                    "body_neg": sorted(r.body_neg),
                }
                for r in obj.sorted_rules()
            ],
        }
    elif isinstance(obj, Setaf):
        data = {
            "type": "setaf",
            "arguments": sorted(obj.arguments),
            "attacks": [
                {"source": sorted(atk.source), "target": atk.target}
                for atk in obj.sorted_attacks()
            ],
        }
    elif isinstance(obj, EquivalenceReport):
        data = {
            "type": "equivalence-report",
            "ok": obj.ok,
            "rows": [
                {
                    "program_semantics": row.lp_name,
                    "setaf_semantics": row.af_name,
                    "models": [_interp_obj(m) for m in row.models],
                    "labellings": [_labelling_obj(l) for l in row.labellings],
                    "equal": row.equal,
                    "counterexample": row.counterexample,
                }
                for row in obj.rows
            ],
        }
    else:
        raise InputError(f"no JSON export for {type(obj).__name__}")
    return json.dumps(data, indent=2) + "\n"


# --- report rendering ---------------------------------------------------------

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_RESET = "\x1b[0m"


def render_report(report: EquivalenceReport, color: bool = False) -> str:
    """Human-readable five-row table for an equivalence report."""
    headers = ("program", "setaf", "models", "labellings", "equal")
    rows = []
    for row in report.rows:
        verdict = "yes" if row.equal else "no"
        rows.append(
            (row.lp_name, row.af_name, str(len(row.models)), str(len(row.labellings)), verdict)
        )
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    for row, src in zip(rows, report.rows):
        cells = []
        for i, cell in enumerate(row):
            pad = cell.ljust(widths[i])
            if i == 4 and color:
                pad = (_GREEN if src.equal else _RED) + pad + _RESET
            cells.append(pad)
        out.append("  ".join(cells).rstrip())
        if src.counterexample:
            out.append(f"      counterexample: {src.counterexample}")
    return "\n".join(out) + "\n"


def report_lines(report: EquivalenceReport) -> list[str]:
    """Greppable one-line-per-row form of the same report."""
    return [
        f"equivalence {row.lp_name}={row.af_name} "
        f"models={len(row.models)} labellings={len(row.labellings)} "
        f"equal={'yes' if row.equal else 'no'}"
        for row in report.rows
    ]


def format_trace(trace) -> list[str]:
    """One line per normalization step: index, kind, rule, extras, digest."""
    lines = []
    for idx, entry in enumerate(trace, 1):
        step = entry.step
        bits = [f"{idx}", step.kind.value, f"{step.rule}"]
        if step.atom is not None:
            bits.append(f"on {step.atom}")
        if step.keep is not None:
            bits.append(f"kept {step.keep}")
        bits.append(f"-> {entry.digest}")
        lines.append(" ".join(bits))
    return lines
