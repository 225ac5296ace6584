"""Text format for ideals.

    ring n=2 char=32003 vars=x,y
    gens:
    x^2+y^2
    x*y

Generators may also be comma-separated on one line.  '#' starts a comment.
"""

from __future__ import annotations

import re

from .field import DomainError, PolyRing, is_prime
from .groebner import IdealPresentation
from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, msg, line=None, col=None):
        where = ""
        if line is not None:
            where = "line %d" % line + (", column %d" % col if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line, self.col = line, col


_HEADER = re.compile(r"^ring\s+(.*)$")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokens(text, line, col0):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = col0 + m.start(m.lastindex)
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num), col))
        elif name is not None:
            out.append(("name", name, col))
        elif sym.strip():
            out.append(("sym", "-" if sym == "−" else sym, col))
        pos = m.end()
    out.append(("end", None, col0 + len(text)))
    return out


class _Parser:
    """expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
    factor := ('-'|'+') factor | atom ('^' int)? ; atom := int | var | '(' expr ')'"""

    def __init__(self, ring, tokens, line):
        self.ring, self.toks, self.i, self.line = ring, tokens, 0, line
        self.index = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def const(self, c):
        return Polynomial(self.ring, {(0,) * self.ring.n: c})

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected %r" % (self.peek()[1],))
        return f

    def expr(self):
        f = self.term()
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek()[:2] == ("sym", "*"):
            self.take()
            f = f * self.factor()
        return f

    def factor(self):
        if self.peek()[:2] == ("sym", "-"):
            self.take()
            return -self.factor()
        if self.peek()[:2] == ("sym", "+"):
            self.take()
            return self.factor()
        f = self.atom()
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a non-negative integer", tok)
            f = f ** tok[1]
        return f

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.const(val)
        if kind == "name":
            if val not in self.index:
                self.fail("unknown variable %r" % val, tok)
            return Polynomial.variable(self.ring, self.index[val])
        if (kind, val) == ("sym", "("):
            f = self.expr()
            if self.peek()[:2] != ("sym", ")"):
                self.fail("expected ')'")
            self.take()
            return f
        self.fail("unexpected %r" % ("end of input" if kind == "end" else val), tok)


def _parse_header(body: str, line: int) -> PolyRing:
    fields = {}
    for part in body.split():
        if "=" not in part:
            raise ParseError("header field %r is not key=value" % part, line)
        k, v = part.split("=", 1)
        fields[k] = v
    try:
        n = int(fields["n"])
        p = int(fields.get("char", 32003))
    except KeyError as exc:
        raise ParseError("header is missing %s=" % exc.args[0], line) from None
    except ValueError:
        raise ParseError("n and char must be integers", line) from None
    if not is_prime(p) or p == 2:
        raise ParseError("char=%d is not an odd prime" % p, line)
    names = tuple(v.strip() for v in fields["vars"].split(",")) if "vars" in fields else None
    if names is not None and len(names) != n:
        raise ParseError("vars lists %d names but n=%d" % (len(names), n), line)
    try:
        return PolyRing(n, p, names)
    except DomainError as exc:
        raise ParseError(str(exc), line) from None


def _split_commas(text: str, col0: int):
    """Split on commas outside parentheses, keeping column offsets."""
    depth, start = 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:k], col0 + start
            start = k + 1
    yield text[start:], col0 + start


def parse_ideal(text: str) -> IdealPresentation:
    ring = None
    gens = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ring is None:
            m = _HEADER.match(line.strip())
            if not m:
                raise ParseError("expected header 'ring n=... char=... vars=...'", lineno, 1)
            ring = _parse_header(m.group(1), lineno)
            continue
        col0 = 1
        if not in_gens:
            stripped = line.lstrip()
            if not stripped.startswith("gens:"):
                raise ParseError("expected 'gens:'", lineno, len(line) - len(stripped) + 1)
            in_gens = True
            col0 = len(line) - len(stripped) + 6
            line = stripped[5:]
            if not line.strip():
                continue
        for piece, col in _split_commas(line, col0):
            if not piece.strip():
                if "," in line:
                    raise ParseError("empty generator", lineno, col)
                continue
            f = _Parser(ring, _tokens(piece, lineno, col), lineno).parse()
            if not f.is_homogeneous():
                lead = col + len(piece) - len(piece.lstrip())
                raise ParseError("generator %s is not homogeneous" % f.to_string(), lineno, lead)
            gens.append(f)
    if ring is None:
        raise ParseError("missing header")
    return IdealPresentation(ring, tuple(gens))


def format_ideal(ideal: IdealPresentation) -> str:
    ring = ideal.ring
    lines = ["ring n=%d char=%d vars=%s" % (ring.n, ring.p, ",".join(ring.names)), "gens:"]
    lines.extend(g.to_string() for g in ideal.gens)
    return "\n".join(lines) + "\n"
