"""ASCII surface syntax for algebra and space expressions.

Grammar::

    algebra := term { "(+)" term }
    term    := "(" algebra ")" | "C" | "F(" nat {"," nat} ")"
             | "M(" nat "," algebra ")" | "Cx(" space ")" ["*" term]
             | "pullback(" algebra "," algebra ";" algebra ")"
             | "ext(" algebra "," algebra ")" | "limit(" algebra {"," algebra} ")"
             | "nccw(" "F(" nats ")" { ";" nat ":" "F(" nats ")" } ")"
             | "AF" | "rot" | "cuntz(" nat ")" | "Oinf" | "kirchberg_ibn"
             | "pis_corner" | "zstable(" algebra ")" | "rr0(" algebra ")"
    space   := "pt" | "S(" nat ")" | "T(" nat ")" | "D(" nat ")" | "I(" nat ")"
             | "prod(" space "," space ")" | "wedge(" space "," space ")"
             | "susp(" space ")" | "cw(" nat ")"

Whitespace between tokens is ignored.  ``(+)`` is left-associative and
binds loosest; ``Cx(X)`` on its own means ``Cx(X) * C``.
"""

from __future__ import annotations

from . import algebras as al
from . import spaces as sp

GRAMMAR_VERSION = "1"

MAX_NAT = 10**6
MAX_DEPTH = 200

_ALGEBRA_WORDS = ("C", "F", "M", "Cx", "pullback", "ext", "limit", "nccw", "AF", "rot",
                  "cuntz", "Oinf", "kirchberg_ibn", "pis_corner", "zstable", "rr0")
_SPACE_WORDS = ("pt", "S", "T", "D", "I", "prod", "wedge", "susp", "cw")


class ParseError(ValueError):
    def __init__(self, offset: int, expected, message: str):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.message = message
        super().__init__(f"{message} at offset {offset} (column {offset + 1})")

    @property
    def column(self) -> int:
        return self.offset + 1


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0

    # lexical helpers

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def fail(self, expected, message=None, offset=None):
        offset = self.pos if offset is None else offset
        if message is None:
            found = repr(self.text[offset]) if offset < len(self.text) else "end of input"
            message = f"expected {' or '.join(sorted(set(expected)))}, found {found}"
        raise ParseError(offset, expected, message)

    def peek(self, lit: str) -> bool:
        self.skip_ws()
        return self.text.startswith(lit, self.pos)

    def expect(self, lit: str):
        self.skip_ws()
        if not self.text.startswith(lit, self.pos):
            self.fail([repr(lit)])
        self.pos += len(lit)

    def word(self, choices) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        i = self.pos
        while i < len(self.text) and (self.text[i].isalnum() or self.text[i] == "_"):
            if i == start and self.text[i].isdigit():
                break
            i += 1
        w = self.text[start:i]
        if w not in choices:
            self.fail(choices, offset=start)
        self.pos = i
        return w, start

    def nat(self, minimum: int = 0) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(["natural number"])
        value = int(self.text[start:self.pos])
        if value < minimum:
            self.fail(["natural number"], f"expected a number >= {minimum}", offset=start)
        if value > MAX_NAT:
            self.fail(["natural number"], f"number exceeds {MAX_NAT}", offset=start)
        return value

    def nats(self, minimum: int) -> tuple[int, ...]:
        out = [self.nat(minimum)]
        while self.peek(","):
            self.expect(",")
            out.append(self.nat(minimum))
        return tuple(out)

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail(["shallower nesting"], f"nesting deeper than {MAX_DEPTH}")

    # grammar

    def algebra(self) -> al.AlgebraExpr:
        self.enter()
        left = self.term()
        while self.peek("(+)"):
            self.expect("(+)")
            left = al.DirectSum(left, self.term())
        self.depth -= 1
        return left

    def term(self) -> al.AlgebraExpr:
        self.skip_ws()
        if self.peek("("):
            if self.text.startswith("(+)", self.pos):
                self.fail(["algebra"])
            self.expect("(")
            inner = self.algebra()
            self.expect(")")
            return inner
        w, start = self.word(_ALGEBRA_WORDS)
        if w == "C":
            return al.Scalars()
        if w == "AF":
            return al.SimpleInfDimAF()
        if w == "rot":
            return al.IrrationalRotation()
        if w == "Oinf":
            return al.CuntzInfinity()
        if w == "kirchberg_ibn":
            return al.KirchbergIBN()
        if w == "pis_corner":
            return al.PurelyInfiniteSimpleCorner()
        self.expect("(")
        if w == "F":
            out = al.FiniteDim(self.nats(1))
        elif w == "M":
            n = self.nat(1)
            self.expect(",")
            out = al.Matrix(n, self.algebra())
        elif w == "Cx":
            space = self.space()
            self.expect(")")
            if self.peek("*"):
                self.expect("*")
                self.enter()
                operand = self.term()
                self.depth -= 1
                return al.TensorCommutative(space, operand)
            return al.TensorCommutative(space, al.Scalars())
        elif w == "pullback":
            b = self.algebra()
            self.expect(",")
            c = self.algebra()
            self.expect(";")
            d = self.algebra()
            out = al.Pullback(b, c, d)
        elif w == "ext":
            j = self.algebra()
            self.expect(",")
            out = al.Extension(j, self.algebra())
        elif w == "limit":
            items = [self.algebra()]
            while self.peek(","):
                self.expect(",")
                items.append(self.algebra())
            out = al.InductiveLimitCofinal(tuple(items))
        elif w == "nccw":
            out = al.Nccw(self.nccw_body())
        elif w == "cuntz":
            out = al.Cuntz(self.nat(2))
        elif w == "zstable":
            out = al.JiangSuStable(self.algebra())
        else:  # rr0
            out = al.RealRankZero(self.algebra())
        self.expect(")")
        return out

    def nccw_body(self) -> al.NccwComplex:
        self.word(("F",))
        self.expect("(")
        base = self.nats(1)
        self.expect(")")
        stages = []
        while self.peek(";"):
            self.expect(";")
            k = self.nat(1)
            self.expect(":")
            self.word(("F",))
            self.expect("(")
            stages.append((k, self.nats(1)))
            self.expect(")")
        return al.NccwComplex(base, tuple(stages))

    def space(self) -> sp.SpaceExpr:
        self.enter()
        w, _ = self.word(_SPACE_WORDS)
        if w == "pt":
            self.depth -= 1
            return sp.Pt()
        self.expect("(")
        if w in ("prod", "wedge"):
            left = self.space()
            self.expect(",")
            right = self.space()
            out = sp.Prod(left, right) if w == "prod" else sp.Wedge(left, right)
        elif w == "susp":
            out = sp.Susp(self.space())
        else:
            minimum = 0 if w in ("S", "cw") else 1
            n = self.nat(minimum)
            out = {"S": sp.Sphere, "T": sp.Torus, "D": sp.Disk, "I": sp.Cube,
                   "cw": sp.CwSkeleton}[w](n)
        self.expect(")")
        self.depth -= 1
        return out

    def finish(self):
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(["'(+)'", "end of input"])


def parse(src: str) -> al.AlgebraExpr:
    """Parse algebra text; raises ParseError with the offset of the first failure."""
    if not isinstance(src, str):
        raise TypeError("parse expects a string")
    p = _Parser(src)
    out = p.algebra()
    p.finish()
    return out


def parse_space(src: str) -> sp.SpaceExpr:
    p = _Parser(src)
    out = p.space()
    p.finish()
    return out


def format_space(x: sp.SpaceExpr) -> str:
    if isinstance(x, sp.Pt):
        return "pt"
    if isinstance(x, sp.Sphere):
        return f"S({x.d})"
    if isinstance(x, sp.Torus):
        return f"T({x.d})"
    if isinstance(x, sp.Disk):
        return f"D({x.d})"
    if isinstance(x, sp.Cube):
        return f"I({x.k})"
    if isinstance(x, sp.CwSkeleton):
        return f"cw({x.n})"
    if isinstance(x, sp.Susp):
        return f"susp({format_space(x.base)})"
    name = "prod" if isinstance(x, sp.Prod) else "wedge"
    return f"{name}({format_space(x.left)}, {format_space(x.right)})"


def _blocks(blocks) -> str:
    return ", ".join(str(b) for b in blocks)


def _term(e: al.AlgebraExpr) -> str:
    text = format_expr(e)
    return f"({text})" if isinstance(e, al.DirectSum) else text


def format_expr(e: al.AlgebraExpr) -> str:
    """Canonical text; parse(format_expr(e)) == e."""
    if isinstance(e, al.Scalars):
        return "C"
    if isinstance(e, al.FiniteDim):
        return f"F({_blocks(e.blocks)})"
    if isinstance(e, al.Matrix):
        return f"M({e.n}, {format_expr(e.a)})"
    if isinstance(e, al.DirectSum):
        return f"{format_expr(e.a)} (+) {_term(e.b)}"
    if isinstance(e, al.TensorCommutative):
        head = f"Cx({format_space(e.space)})"
        if isinstance(e.a, al.Scalars):
            return head
        return f"{head} * {_term(e.a)}"
    if isinstance(e, al.Pullback):
        return f"pullback({format_expr(e.b)}, {format_expr(e.c)}; {format_expr(e.d)})"
    if isinstance(e, al.Extension):
        return f"ext({format_expr(e.j)}, {format_expr(e.b)})"
    if isinstance(e, al.InductiveLimitCofinal):
        return "limit(" + ", ".join(format_expr(i) for i in e.items) + ")"
    if isinstance(e, al.Nccw):
        parts = [f"F({_blocks(e.complex.base)})"]
        parts += [f"{k}:F({_blocks(b)})" for k, b in e.complex.stages]
        return "nccw(" + "; ".join(parts) + ")"
    if isinstance(e, al.SimpleInfDimAF):
        return "AF"
    if isinstance(e, al.IrrationalRotation):
        return "rot"
    if isinstance(e, al.CuntzInfinity):
        return "Oinf"
    if isinstance(e, al.KirchbergIBN):
        return "kirchberg_ibn"
    if isinstance(e, al.PurelyInfiniteSimpleCorner):
        return "pis_corner"
    if isinstance(e, al.Cuntz):
        return f"cuntz({e.n})"
    if isinstance(e, al.JiangSuStable):
        return f"zstable({format_expr(e.a)})"
    if isinstance(e, al.RealRankZero):
        return f"rr0({format_expr(e.a)})"
    raise TypeError(f"not an algebra expression: {e!r}")
