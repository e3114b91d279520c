# McCoy/utils/expr.py

import re
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from McCoy.utils.exceptions import ParseError, UnknownName
from McCoy.utils.messages import (
    MSG_ARGUMENT_KIND,
    MSG_ARITY,
    MSG_PARSE_ERROR,
    MSG_SIZE_ARG,
    MSG_UNKNOWN_BIMODULE,
    MSG_UNKNOWN_CONSTRUCTOR,
    MSG_UNKNOWN_SIGMA,
)

# =====================================================================================
# ====== AST ======
# =====================================================================================


class RingExpr:
    def __str__(self) -> str:
        return print_ring_expr(self)


@dataclass(frozen=True)
class Zmod(RingExpr):
    n: int


@dataclass(frozen=True)
class TruncSeries(RingExpr):
    base: RingExpr
    m: int


@dataclass(frozen=True)
class Prod(RingExpr):
    factors: Tuple[RingExpr, ...]


@dataclass(frozen=True)
class Mat(RingExpr):
    base: RingExpr
    n: int


@dataclass(frozen=True)
class Tri(RingExpr):
    base: RingExpr
    n: int


@dataclass(frozen=True)
class SkewTri(RingExpr):
    base: RingExpr
    n: int
    sigma: str


@dataclass(frozen=True)
class FamilyExpr(RingExpr):
    family: str
    base: RingExpr
    n: int
    sigma: Optional[str] = None


@dataclass(frozen=True)
class Triangular(RingExpr):
    left: RingExpr
    right: RingExpr
    bimodule: str


@dataclass(frozen=True)
class Corner(RingExpr):
    base: RingExpr
    idempotent: str


@dataclass(frozen=True)
class Quot(RingExpr):
    base: RingExpr
    gens: Tuple[str, ...]


@dataclass(frozen=True)
class Opp(RingExpr):
    base: RingExpr


@dataclass(frozen=True)
class Sub(RingExpr):
    base: RingExpr
    gens: Tuple[str, ...]


# =====================================================================================
# ====== PRINTER ======
# =====================================================================================


def _set(items: Sequence[str]) -> str:
    return "{" + ",".join(items) + "}"


def print_ring_expr(node: RingExpr) -> str:
    if isinstance(node, Zmod):
        return f"Z{node.n}"
    if isinstance(node, TruncSeries):
        return f"TruncSeries({node.base},{node.m})"
    if isinstance(node, Prod):
        return "Prod(" + ",".join(str(f) for f in node.factors) + ")"
    if isinstance(node, Mat):
        return f"Mat({node.base},{node.n})"
    if isinstance(node, Tri):
        return f"Tri({node.base},{node.n})"
    if isinstance(node, SkewTri):
        return f"SkewTri({node.base},{node.n},{node.sigma})"
    if isinstance(node, FamilyExpr):
        tail = f",{node.sigma}" if node.sigma else ""
        return f"{node.family}({node.base},{node.n}{tail})"
    if isinstance(node, Triangular):
        return f"Triangular({node.left},{node.right},{node.bimodule})"
    if isinstance(node, Corner):
        return f"Corner({node.base},e={node.idempotent})"
    if isinstance(node, Quot):
        return f"Quot({node.base},{_set(node.gens)})"
    if isinstance(node, Opp):
        return f"Opp({node.base})"
    if isinstance(node, Sub):
        return f"Sub({node.base},{_set(node.gens)})"
    raise TypeError(f"not a ring expression: {node!r}")


# =====================================================================================
# ====== PARSER ======
# =====================================================================================

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?[0-9]+")
_TOKEN = re.compile(r"[A-Za-z0-9_+\-.]+")
_ATOM = re.compile(r"Z([0-9]+)$")
_CLOSERS = {"(": ")", "[": "]", "{": "}"}

# argument kinds per constructor; a trailing '?' marks an optional argument
SIGNATURES = {
    "Zmod": ("int",),
    "TruncSeries": ("ring", "int"),
    "Prod": ("ring+",),
    "Mat": ("ring", "int"),
    "Tri": ("ring", "int"),
    "SkewTri": ("ring", "int", "sigma"),
    "S": ("ring", "int", "sigma?"),
    "T": ("ring", "int", "sigma?"),
    "A": ("ring", "int", "sigma?"),
    "B": ("ring", "int", "sigma?"),
    "Triangular": ("ring", "ring", "bimodule"),
    "Corner": ("ring", "element"),
    "Quot": ("ring", "set"),
    "Opp": ("ring",),
    "Sub": ("ring", "set"),
}

_KIND_TEXT = {
    "int": "an integer",
    "ring": "a ring expression",
    "sigma": "a σ name",
    "bimodule": "a bimodule name",
    "element": "an element label",
    "set": "a {…} set of element labels",
}

NameCheck = Callable[[str], bool]


class _Parser:
    def __init__(self, text: str, has_sigma: Optional[NameCheck], has_bimodule: Optional[NameCheck]):
        self.text = text
        self.pos = 0
        self.has_sigma = has_sigma
        self.has_bimodule = has_bimodule

    # -- low level --

    def offset(self, pos: Optional[int] = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, detail: str, expected: Sequence[str], pos: Optional[int] = None) -> ParseError:
        where = self.offset(pos)
        return ParseError(
            MSG_PARSE_ERROR.format(position=where, detail=detail, expected=", ".join(sorted(set(expected))) or "end of input"),
            position=where,
            expected=expected,
        )

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.fail(f"found {found}", [repr(char)])
        self.pos += 1

    def match(self, pattern: re.Pattern, expected: str) -> str:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.fail(f"found {found}", [expected])
        self.pos = m.end()
        return m.group(0)

    def balanced(self) -> str:
        """Raw bracketed text with whitespace dropped."""
        self.skip()
        start = self.pos
        stack: List[str] = []
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char in _CLOSERS:
                stack.append(_CLOSERS[char])
            elif char in ")]}":
                if not stack or stack.pop() != char:
                    raise self.fail(f"unbalanced {char!r}", [repr(stack[-1])] if stack else ["element label"])
            self.pos += 1
            if not stack:
                return "".join(self.text[start:self.pos].split())
        raise self.fail("unterminated element label", [repr(stack[-1])])

    # -- grammar --

    def parse(self) -> RingExpr:
        node = self.expr()
        if self.peek():
            raise self.fail(f"trailing input {self.peek()!r}", ["end of input"])
        return node

    def expr(self) -> RingExpr:
        start = self.pos
        self.skip()
        if not _NAME.match(self.text, self.pos):
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.fail(f"found {found}", ["ring expression"])
        name = self.match(_NAME, "ring expression")
        if self.peek() != "(":
            atom = _ATOM.match(name)
            if atom:
                return self.build_zmod(int(atom.group(1)), start)
            if name in SIGNATURES:
                raise self.fail("constructor without arguments", ["'('"])
            raise UnknownName(MSG_UNKNOWN_CONSTRUCTOR.format(name=name), position=self.offset(start), expected=sorted(SIGNATURES))
        if name not in SIGNATURES:
            raise UnknownName(MSG_UNKNOWN_CONSTRUCTOR.format(name=name), position=self.offset(start), expected=sorted(SIGNATURES))
        self.expect("(")
        args = self.arguments(name)
        self.expect(")")
        return self.build(name, args, start)

    def arguments(self, name: str) -> List[Any]:
        kinds = SIGNATURES[name]
        args: List[Any] = []
        index = 0
        while True:
            if kinds[-1].endswith("+"):
                kind = kinds[-1][:-1]
            elif index < len(kinds):
                kind = kinds[index].rstrip("?")
            else:
                required = sum(1 for k in kinds if not k.endswith("?"))
                raise self.fail(MSG_ARITY.format(name=name, expected=f"{required}-{len(kinds)}", got=index + 1), ["')'"])
            args.append(self.argument(name, index, kind))
            index += 1
            if self.peek() != ",":
                break
            self.pos += 1
        required = sum(1 for k in kinds if not k.endswith("?") and not k.endswith("+")) + (1 if kinds[-1].endswith("+") else 0)
        if len(args) < required:
            raise self.fail(MSG_ARITY.format(name=name, expected=required, got=len(args)), ["','"])
        return args

    def argument(self, name: str, index: int, kind: str) -> Any:
        start = self.pos
        self.skip()
        if kind == "ring":
            return self.expr()
        if kind == "int":
            value = int(self.match(_INT, "integer"))
            if value < 1:
                raise self.fail(MSG_SIZE_ARG.format(construction=name, name="size", minimum=1, value=value), ["positive integer"], start)
            return value
        if kind in ("sigma", "bimodule"):
            pos = self.pos
            label = self.match(_NAME, _KIND_TEXT[kind])
            check = self.has_sigma if kind == "sigma" else self.has_bimodule
            if check is not None and not check(label):
                message = MSG_UNKNOWN_SIGMA if kind == "sigma" else MSG_UNKNOWN_BIMODULE
                raise UnknownName(message.format(name=label), position=self.offset(pos), expected=[kind])
            return label
        if kind == "element":
            m = _NAME.match(self.text, self.pos)
            if m and self.text[m.end():].lstrip().startswith("="):
                self.pos = m.end()
                self.expect("=")
            return self.element()
        if kind == "set":
            return self.element_set()
        raise self.fail(MSG_ARGUMENT_KIND.format(index=index + 1, name=name, kind=_KIND_TEXT.get(kind, kind)), [kind])

    def element(self) -> str:
        if self.peek() in ("(", "["):
            return self.balanced()
        return self.match(_TOKEN, "element label")

    def element_set(self) -> Tuple[str, ...]:
        self.expect("{")
        items: List[str] = []
        if self.peek() == "}":
            self.pos += 1
            return ()
        while True:
            items.append(self.element())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("}")
            return tuple(items)

    def build_zmod(self, n: int, start: int) -> RingExpr:
        if n < 1:
            raise self.fail(MSG_SIZE_ARG.format(construction="Z", name="n", minimum=1, value=n), ["positive modulus"], start)
        return Zmod(n)

    def build(self, name: str, args: List[Any], start: int) -> RingExpr:
        if name == "Zmod":
            return self.build_zmod(args[0], start)
        if name == "TruncSeries":
            return TruncSeries(args[0], args[1])
        if name == "Prod":
            return Prod(tuple(args))
        if name == "Mat":
            return Mat(args[0], args[1])
        if name == "Tri":
            return Tri(args[0], args[1])
        if name == "SkewTri":
            return SkewTri(args[0], args[1], args[2])
        if name in ("S", "T", "A", "B"):
            sigma = args[2] if len(args) > 2 else None
            if sigma in ("id", "identity"):
                sigma = None
            return FamilyExpr(name, args[0], args[1], sigma)
        if name == "Triangular":
            return Triangular(args[0], args[1], args[2])
        if name == "Corner":
            return Corner(args[0], args[1])
        if name == "Quot":
            return Quot(args[0], args[1])
        if name == "Opp":
            return Opp(args[0])
        return Sub(args[0], args[1])


def parse_ring_expr(
    text: str,
    has_sigma: Optional[NameCheck] = None,
    has_bimodule: Optional[NameCheck] = None,
) -> RingExpr:
    """Parse a ring description such as ``Corner(Prod(Z2,Z4), e=(1,0))``.

    ``has_sigma`` / ``has_bimodule`` validate registry names at parse time
    when given; otherwise unknown names surface on evaluation.
    """
    return _Parser(text, has_sigma, has_bimodule).parse()


def parse_element_list(text: str) -> List[str]:
    """Comma-separated element labels, brackets balanced: ``(1,0),(0,1)``."""
    parser = _Parser(text, None, None)
    items: List[str] = []
    if not parser.peek():
        return items
    while True:
        items.append(parser.element())
        if parser.peek() == ",":
            parser.pos += 1
            continue
        if parser.peek():
            raise parser.fail(f"trailing input {parser.peek()!r}", ["','"])
        return items


ExprLike = Union[str, RingExpr]
