"""Line-oriented text format for spaces.

::

    space Example1
    points a b c
    open {}
    open {a}
    open {b}
    open {a b}
    open {a b c}
    gamma rule intclosure
    end

Explicit operations use one ``gamma {a b} = {a b c}`` line per open set.
``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GammaSpaceError, OperationError, TopologyError
from .operations import (
    ClIntCl,
    Closure,
    Identity,
    IfContains,
    IntClosure,
    Rule,
    Space,
    build_operation,
    validate_operation,
)
from .finset import validate_topology

_TOKEN = re.compile(r"[{}=]|[^\s{}=#]+")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_LEAVES = {
    "identity": Identity(),
    "closure": Closure(),
    "intclosure": IntClosure(),
    "clintcl": ClIntCl(),
}


class SpaceFileError(GammaSpaceError):
    pass


class SpaceSyntaxError(SpaceFileError):
    def __init__(self, message: str, line: int, col: int = 1):
        self.line, self.col = line, col
        super().__init__(f"line {line}, column {col}: {message}")


class UnknownPoint(SpaceFileError):
    def __init__(self, name: str, line: int, col: int):
        self.name, self.line, self.col = name, line, col
        super().__init__(f"line {line}, column {col}: unknown point {name!r}")


class TopologyInvalid(SpaceFileError):
    def __init__(self, reason: TopologyError):
        self.reason = reason
        super().__init__(f"invalid topology: {reason}")


class OperationInvalid(SpaceFileError):
    def __init__(self, reason: OperationError):
        self.reason = reason
        super().__init__(f"invalid operation ({type(reason).__name__}): {reason}")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokens(text: str, lineno: int) -> list[_Tok]:
    code = text.split("#", 1)[0]
    return [_Tok(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(code)]


class _Cursor:
    def __init__(self, toks: list[_Tok], lineno: int, end_col: int):
        self.toks = toks
        self.pos = 0
        self.lineno = lineno
        self.end_col = end_col

    def peek(self) -> _Tok | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, what: str) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise SpaceSyntaxError(f"expected {what}, found end of line", self.lineno, self.end_col)
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.take(repr(text))
        if tok.text != text:
            raise SpaceSyntaxError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise SpaceSyntaxError(f"unexpected {tok.text!r}", tok.line, tok.col)


def _read_set(cur: _Cursor, index: dict[str, int]) -> int:
    cur.expect("{")
    mask = 0
    while True:
        tok = cur.take("point name or '}'")
        if tok.text == "}":
            return mask
        if tok.text in "{=":
            raise SpaceSyntaxError(f"unexpected {tok.text!r} inside set", tok.line, tok.col)
        if tok.text not in index:
            raise UnknownPoint(tok.text, tok.line, tok.col)
        mask |= 1 << index[tok.text]


def _read_rule(cur: _Cursor, index: dict[str, int]) -> Rule:
    tok = cur.take("rule")
    if tok.text in _LEAVES:
        return _LEAVES[tok.text]
    if tok.text == "if-contains":
        p = cur.take("point name")
        if p.text not in index:
            raise UnknownPoint(p.text, p.line, p.col)
        cur.expect("then")
        then = _read_rule(cur, index)
        cur.expect("else")
        other = _read_rule(cur, index)
        return IfContains(index[p.text], then, other)
    raise SpaceSyntaxError(f"unknown rule {tok.text!r}", tok.line, tok.col)


def parse_rule(text: str, names) -> Rule:
    index = {name: i for i, name in enumerate(names)}
    cur = _Cursor(_tokens(text, 1), 1, len(text) + 1)
    rule = _read_rule(cur, index)
    cur.done()
    return rule


def parse_space_file(text: str) -> Space:
    name = None
    names: list[str] | None = None
    index: dict[str, int] = {}
    opens: list[int] = []
    rule: Rule | None = None
    table: dict[int, int] = {}
    ended = False
    last_line = 0

    for lineno, line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        toks = _tokens(line, lineno)
        if not toks:
            continue
        head = toks[0]
        if ended:
            raise SpaceSyntaxError("content after 'end'", head.line, head.col)
        cur = _Cursor(toks[1:], lineno, len(line.rstrip()) + 1)
        kw = head.text
        if name is None and kw != "space":
            raise SpaceSyntaxError("file must start with 'space <name>'", head.line, head.col)
        if kw == "space":
            if name is not None:
                raise SpaceSyntaxError("duplicate 'space' line", head.line, head.col)
            tok = cur.take("space name")
            name = tok.text
            cur.done()
        elif kw == "points":
            if names is not None:
                raise SpaceSyntaxError("duplicate 'points' line", head.line, head.col)
            names = []
            for tok in cur.toks:
                if not _IDENT.match(tok.text):
                    raise SpaceSyntaxError(f"bad point name {tok.text!r}", tok.line, tok.col)
                if tok.text in index:
                    raise SpaceSyntaxError(f"duplicate point {tok.text!r}", tok.line, tok.col)
                index[tok.text] = len(names)
                names.append(tok.text)
            if not names:
                raise SpaceSyntaxError("no points declared", head.line, head.col)
        elif kw in ("open", "gamma"):
            if names is None:
                raise SpaceSyntaxError("'points' must come first", head.line, head.col)
            if kw == "open":
                opens.append(_read_set(cur, index))
                cur.done()
            elif cur.peek() is not None and cur.peek().text == "rule":
                cur.take("rule")
                if rule is not None or table:
                    raise SpaceSyntaxError("operation given twice", head.line, head.col)
                rule = _read_rule(cur, index)
                cur.done()
            else:
                if rule is not None:
                    raise SpaceSyntaxError("operation given twice", head.line, head.col)
                col = cur.peek().col if cur.peek() else head.col
                key = _read_set(cur, index)
                cur.expect("=")
                value = _read_set(cur, index)
                cur.done()
                if key in table:
                    raise SpaceSyntaxError("duplicate gamma entry", lineno, col)
                table[key] = value
        elif kw == "end":
            cur.done()
            ended = True
        else:
            raise SpaceSyntaxError(f"unknown directive {kw!r}", head.line, head.col)

    if name is None:
        raise SpaceSyntaxError("empty space file", max(last_line, 1))
    if names is None:
        raise SpaceSyntaxError("missing 'points' line", last_line + 1)
    if not ended:
        raise SpaceSyntaxError("missing 'end'", last_line + 1)
    try:
        topology = validate_topology(opens, len(names), names)
    except TopologyError as exc:
        raise TopologyInvalid(exc) from exc
    try:
        if rule is not None:
            gamma = build_operation(topology, rule)
        else:
            gamma = validate_operation(topology, table)
    except OperationError as exc:
        raise OperationInvalid(exc) from exc
    return Space(topology, gamma, name)


def render_space(s: Space) -> str:
    t = s.topology
    lines = [f"space {s.name}", "points " + " ".join(t.names)]
    lines += [f"open {t.fmt(u)}" for u in t.opens]
    if s.gamma.rule is not None:
        lines.append(f"gamma rule {s.gamma.rule.text(t.names)}")
    else:
        lines += [f"gamma {t.fmt(u)} = {t.fmt(v)}" for u, v in zip(t.opens, s.values)]
    lines.append("end")
    return "\n".join(lines) + "\n"
