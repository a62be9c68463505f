"""Text formats for groupoid specs and algebra elements.

Spec grammar (whitespace-insensitive; lines whose first non-blank character is
`#` are comments):

    spec     := pair(N) | group(G) | action(G, N, [perm, ...])
              | union(spec, spec) | product(spec, spec)
              | explicit{ field; ... }
    G        := cyclic N | sym N | table [[row], ...]
    field    := units: [ids] | arrows: N | src: [ids] | rng: [ids]
              | inv: [ids] | comp: [[a, b, ab], ...]

Element grammar:

    elem     := ind([ids]) | phase(unit:angle, ...)*ind([ids])
              | sum(elem, elem) | scale(RE, IM, elem)
    unit     := arrow id of a unit | uK (K-th unit in increasing id order)
    angle    := integer or p/q, a fraction of a full turn

RE and IM are integers or fractions (exact) or decimals (floating).
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from ..bisections.bisection import Bisection
from ..common.errors import SpecParseError, UnknownIdError
from ..convolution.algebra import AlgebraElement, indicator
from ..convolution.circle import CircleFunction, CircleScalar
from ..convolution.lamperti import LampertiElement
from ..convolution.scalars import CyclotomicNumber
from ..core.groupoid import FiniteGroupoid
from .spec import (
    ActionSpec,
    CyclicRef,
    ExplicitSpec,
    GroupRef,
    GroupSpec,
    GroupoidSpec,
    PairSpec,
    ProductSpec,
    SymRef,
    TableRef,
    UnionSpec,
)

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"(?P<space>[ \t\r]+)"
    r"|(?P<newline>\n)"
    r"|(?P<number>-?\d+(?:/\d+|\.\d+(?:[eE][-+]?\d+)?)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<punct>[()\[\]{},;:*])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _strip_comments(text: str) -> str:
    return "\n".join("" if line.lstrip().startswith("#") else line for line in text.split("\n"))


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    source = _strip_comments(text)
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        match = _TOKEN.match(source, pos)
        if match is None:
            raise SpecParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup or ""
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind != "space":
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, message: str, token: Optional[Token] = None) -> SpecParseError:
        token = token or self.current
        found = token.text or "end of input"
        return SpecParseError(f"{message}, found {found!r}", token.line, token.column)

    def advance(self) -> Token:
        token = self.current
        if token.kind != "end":
            self.pos += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            raise self.fail(f"expected {text!r}")
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.current.text == text:
            self.advance()
            return True
        return False

    def name(self) -> Token:
        if self.current.kind != "name":
            raise self.fail("expected a keyword")
        return self.advance()

    def integer(self, minimum: Optional[int] = None) -> int:
        token = self.current
        if token.kind != "number" or not re.fullmatch(r"-?\d+", token.text):
            raise self.fail("expected an integer")
        value = int(self.advance().text)
        if minimum is not None and value < minimum:
            raise SpecParseError(f"expected an integer >= {minimum}, found {value}", token.line, token.column)
        return value

    def number(self) -> Union[Fraction, float]:
        token = self.current
        if token.kind != "number":
            raise self.fail("expected a number")
        self.advance()
        if "." in token.text:
            return float(token.text)
        return Fraction(token.text)

    def int_list(self) -> Tuple[int, ...]:
        self.expect("[")
        values: List[int] = []
        if not self.accept("]"):
            values.append(self.integer())
            while self.accept(","):
                values.append(self.integer())
            self.expect("]")
        return tuple(values)

    def nested_int_list(self) -> Tuple[Tuple[int, ...], ...]:
        self.expect("[")
        rows: List[Tuple[int, ...]] = []
        if not self.accept("]"):
            rows.append(self.int_list())
            while self.accept(","):
                rows.append(self.int_list())
            self.expect("]")
        return tuple(rows)

    def finish(self) -> None:
        if self.current.kind != "end":
            raise self.fail("unexpected trailing input")

    # groupoid specs

    def spec(self) -> GroupoidSpec:
        keyword = self.name()
        if keyword.text == "pair":
            self.expect("(")
            points = self.integer(minimum=1)
            self.expect(")")
            return PairSpec(points)
        if keyword.text == "group":
            self.expect("(")
            group = self.group_ref()
            self.expect(")")
            return GroupSpec(group)
        if keyword.text == "action":
            self.expect("(")
            group = self.group_ref()
            self.expect(",")
            points = self.integer(minimum=1)
            self.expect(",")
            perms = self.nested_int_list()
            self.expect(")")
            return ActionSpec(group, points, perms)
        if keyword.text in ("union", "product"):
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return UnionSpec(left, right) if keyword.text == "union" else ProductSpec(left, right)
        if keyword.text == "explicit":
            return self.explicit(keyword)
        raise self.fail("unknown construction", keyword)

    def group_ref(self) -> GroupRef:
        keyword = self.name()
        if keyword.text == "cyclic":
            return CyclicRef(self.integer(minimum=1))
        if keyword.text == "sym":
            return SymRef(self.integer(minimum=1))
        if keyword.text == "table":
            return TableRef(self.nested_int_list())
        raise self.fail("unknown group", keyword)

    def explicit(self, keyword: Token) -> ExplicitSpec:
        self.expect("{")
        fields: Dict[str, object] = {}
        while self.current.text != "}":
            key = self.name()
            if key.text in fields:
                raise self.fail("duplicate field", key)
            self.expect(":")
            if key.text in ("units", "src", "rng", "inv"):
                fields[key.text] = self.int_list()
            elif key.text == "arrows":
                fields[key.text] = self.integer(minimum=1)
            elif key.text == "comp":
                triples = self.nested_int_list()
                for triple in triples:
                    if len(triple) != 3:
                        raise SpecParseError(
                            f"composition entries are [a, b, ab], found {list(triple)}", key.line, key.column
                        )
                fields[key.text] = triples
            else:
                raise self.fail("unknown explicit field", key)
            if not self.accept(";"):
                break
        self.expect("}")
        missing = [k for k in ("units", "src", "rng", "inv", "comp") if k not in fields]
        if missing:
            raise SpecParseError(f"explicit groupoid is missing {', '.join(missing)}", keyword.line, keyword.column)
        src = fields["src"]
        declared = fields.get("arrows")
        if declared is not None and declared != len(src):  # type: ignore[arg-type]
            raise SpecParseError(
                f"explicit groupoid declares {declared} arrows but lists {len(src)} sources",  # type: ignore[arg-type]
                keyword.line,
                keyword.column,
            )
        return ExplicitSpec(
            units=fields["units"],  # type: ignore[arg-type]
            src=src,  # type: ignore[arg-type]
            rng=fields["rng"],  # type: ignore[arg-type]
            inv=fields["inv"],  # type: ignore[arg-type]
            comp=fields["comp"],  # type: ignore[arg-type]
        )

    # algebra elements

    def element(self, g: FiniteGroupoid) -> AlgebraElement:
        keyword = self.name()
        if keyword.text == "ind":
            return indicator(self.bisection(g))
        if keyword.text == "phase":
            f = self.phases(g)
            self.expect("*")
            ind = self.name()
            if ind.text != "ind":
                raise self.fail("expected 'ind' after phase(...)*", ind)
            b = self.bisection(g)
            values = {u: f.get(u, CircleScalar(0)) for u in b.rng_set}
            return LampertiElement.of(CircleFunction(values), b).as_element()
        if keyword.text == "sum":
            self.expect("(")
            left = self.element(g)
            self.expect(",")
            right = self.element(g)
            self.expect(")")
            return left + right
        if keyword.text == "scale":
            self.expect("(")
            re_part = self.number()
            self.expect(",")
            im_part = self.number()
            self.expect(",")
            inner = self.element(g)
            self.expect(")")
            if isinstance(re_part, float) or isinstance(im_part, float):
                factor: object = complex(float(re_part), float(im_part))
            else:
                factor = CyclotomicNumber.gaussian(re_part, im_part)
            return inner.scale(factor)
        raise self.fail("unknown element form", keyword)

    def bisection(self, g: FiniteGroupoid) -> Bisection:
        self.expect("(")
        start = self.current
        arrows = self.int_list()
        self.expect(")")
        for x in arrows:
            if not 0 <= x < g.num_arrows:
                raise UnknownIdError(
                    f"arrow {x} does not exist (line {start.line}, column {start.column})", ident=x
                )
        return Bisection.of(g, arrows)

    def phases(self, g: FiniteGroupoid) -> CircleFunction:
        self.expect("(")
        values: Dict[int, CircleScalar] = {}
        if not self.accept(")"):
            while True:
                unit = self.unit_ref(g)
                self.expect(":")
                token = self.current
                angle = self.number()
                if isinstance(angle, float):
                    raise SpecParseError("phase angles are exact fractions p/q", token.line, token.column)
                values[unit] = CircleScalar(angle)
                if not self.accept(","):
                    break
            self.expect(")")
        return CircleFunction(values)

    def unit_ref(self, g: FiniteGroupoid) -> int:
        token = self.current
        if token.kind == "name" and re.fullmatch(r"u\d+", token.text):
            self.advance()
            index = int(token.text[1:])
            if index >= len(g.units):
                raise UnknownIdError(
                    f"unit {token.text} does not exist (groupoid has {len(g.units)} units)", ident=token.text
                )
            return g.units[index]
        unit = self.integer()
        if not g.is_unit(unit):
            raise UnknownIdError(f"arrow {unit} is not a unit", ident=unit)
        return unit


def parse_spec(text: str) -> GroupoidSpec:
    parser = _Parser(text)
    spec = parser.spec()
    parser.finish()
    logger.debug(f"Parsed groupoid spec {spec.render()}")
    return spec


def parse_element(text: str, g: FiniteGroupoid) -> AlgebraElement:
    parser = _Parser(text)
    element = parser.element(g)
    parser.finish()
    return element
