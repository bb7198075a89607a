"""The group-spec expression language.

Grammar (whitespace-insensitive, names case-sensitive):

    spec := atom | "Direct(" spec "," spec ")" | "Wr(" spec "," spec ")"
    atom := "Triv" | "C(" n ")" | "D(" evenOrder ")" | "Q(" pow2 ")"
          | "S(" n ")" | "A(" n ")" | "E(" p "," k ")"
          | "GL(" n "," p ")" | "SL(" n "," p ")" | "UT(" n "," p ")"
          | "Tr2(" p ")" | "AGL(" n "," p ")" | "ASL(" n "," p ")"
          | "FibQ(" p ")" | "SL25xF11" | "AutS6" | "IterWr(" p "," depth ")"

In Wr the right operand acts on its own points; a cyclic right operand is
its own regular representation, so Wr(H, C(n)) is the standard wreath
product.  Syntax errors carry the byte offset and the expected tokens;
semantic errors (non-prime field, odd dihedral order, ...) name the
offending parameter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import constructors as make
from .errors import PgtError
from .numtheory import is_prime


class SpecError(PgtError):
    """Any group-spec rejection; exit code 2 territory."""


class SpecSyntaxError(SpecError):
    def __init__(self, offset, expected, found):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        super().__init__(
            f"at byte {offset}: expected {' or '.join(self.expected)}, found {found}"
        )


class SpecSemanticError(SpecError):
    def __init__(self, message, parameter=None):
        self.parameter = parameter
        super().__init__(message)


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple


@dataclass(frozen=True)
class Direct:
    left: object
    right: object


@dataclass(frozen=True)
class Wr:
    left: object
    right: object


# family name -> number of integer arguments
_ARITIES = {
    "Triv": 0,
    "C": 1,
    "D": 1,
    "Q": 1,
    "S": 1,
    "A": 1,
    "E": 2,
    "GL": 2,
    "SL": 2,
    "UT": 2,
    "Tr2": 1,
    "AGL": 2,
    "ASL": 2,
    "FibQ": 1,
    "SL25xF11": 0,
    "AutS6": 0,
    "IterWr": 2,
}

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<int>\d+)|(?P<punct>[(),]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            offset = len(text) - len(stripped)
            raise SpecSyntaxError(offset, ["a name", "an integer", "'('", "')'", "','"], repr(text[offset]))
        if match.lastgroup == "name":
            tokens.append(("name", match.group("name"), match.start("name")))
        elif match.lastgroup == "int":
            tokens.append(("int", int(match.group("int")), match.start("int")))
        else:
            tokens.append(("punct", match.group("punct"), match.start("punct")))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, expected):
        kind, value, offset = self.peek()
        found = "end of input" if kind == "end" else repr(str(value))
        raise SpecSyntaxError(offset, expected, found)

    def expect_punct(self, char):
        kind, value, _ = self.peek()
        if kind != "punct" or value != char:
            self.fail([f"'{char}'"])
        return self.advance()

    def parse_int(self):
        kind, value, _ = self.peek()
        if kind != "int":
            self.fail(["an integer"])
        return self.advance()[1]

    def parse_spec(self):
        kind, value, _ = self.peek()
        if kind != "name":
            self.fail(["a family name", "'Direct'", "'Wr'"])
        if value in ("Direct", "Wr"):
            self.advance()
            self.expect_punct("(")
            left = self.parse_spec()
            self.expect_punct(",")
            right = self.parse_spec()
            self.expect_punct(")")
            return Direct(left, right) if value == "Direct" else Wr(left, right)
        if value not in _ARITIES:
            self.fail(sorted(_ARITIES) + ["Direct", "Wr"])
        self.advance()
        arity = _ARITIES[value]
        if arity == 0:
            return Atom(value, ())
        self.expect_punct("(")
        args = [self.parse_int()]
        for _ in range(arity - 1):
            self.expect_punct(",")
            args.append(self.parse_int())
        self.expect_punct(")")
        return Atom(value, tuple(args))


def parse_spec(text):
    """Parse a spec expression into its AST."""
    parser = _Parser(text)
    spec = parser.parse_spec()
    kind, _, offset = parser.peek()
    if kind != "end":
        parser.fail(["end of input"])
    return spec


def render(spec):
    """Canonical text for an AST; parse(render(s)) == s."""
    if isinstance(spec, Atom):
        if not spec.args:
            return spec.name
        return f"{spec.name}({','.join(map(str, spec.args))})"
    if isinstance(spec, Direct):
        return f"Direct({render(spec.left)},{render(spec.right)})"
    return f"Wr({render(spec.left)},{render(spec.right)})"


def _require(condition, message, parameter):
    if not condition:
        raise SpecSemanticError(message, parameter)


def _require_prime(p, where):
    _require(is_prime(p), f"{where}: {p} is not prime (prime fields only)", p)


def _build_atom(atom):
    name, args = atom.name, atom.args
    if name == "Triv":
        return make.cyclic(1)
    if name == "C":
        _require(args[0] >= 1, f"C(n): need n >= 1, got {args[0]}", args[0])
        return make.cyclic(args[0])
    if name == "D":
        _require(
            args[0] >= 2 and args[0] % 2 == 0,
            f"D(m): need an even order >= 2, got {args[0]}",
            args[0],
        )
        return make.dihedral(args[0])
    if name == "Q":
        k = args[0].bit_length() - 1
        _require(args[0] >= 8 and (1 << k) == args[0], f"Q(m): need m = 2^k >= 8, got {args[0]}", args[0])
        return make.quaternion(args[0])
    if name == "S":
        _require(args[0] >= 1, f"S(n): need n >= 1, got {args[0]}", args[0])
        return make.symmetric(args[0])
    if name == "A":
        _require(args[0] >= 1, f"A(n): need n >= 1, got {args[0]}", args[0])
        return make.alternating(args[0])
    if name == "E":
        _require_prime(args[0], "E(p,k)")
        _require(args[1] >= 1, f"E(p,k): need k >= 1, got {args[1]}", args[1])
        return make.elementary_abelian(args[0], args[1])
    if name in ("GL", "SL", "UT"):
        n, p = args
        _require(n >= 1, f"{name}(n,p): need n >= 1, got {n}", n)
        _require_prime(p, f"{name}(n,p)")
        return {"GL": make.gl, "SL": make.sl, "UT": make.ut}[name](n, p)
    if name == "Tr2":
        _require_prime(args[0], "Tr2(p)")
        return make.tr2(args[0])
    if name in ("AGL", "ASL"):
        n, p = args
        _require(n >= 1, f"{name}(n,p): need n >= 1, got {n}", n)
        _require_prime(p, f"{name}(n,p)")
        builder = make.affine_gl if name == "AGL" else make.affine_sl
        return builder(n, p).group
    if name == "FibQ":
        _require_prime(args[0], "FibQ(p)")
        return make.fib_quotient(args[0]).group
    if name == "SL25xF11":
        return make.sl25_on_f11sq().group
    if name == "AutS6":
        return make.aut_sym6().group
    if name == "IterWr":
        p, depth = args
        _require_prime(p, "IterWr(p,d)")
        _require(depth >= 1, f"IterWr(p,d): need depth >= 1, got {depth}", depth)
        return make.iterated_wreath(p, depth)
    raise SpecSemanticError(f"unknown family {name}", name)  # unreachable


def build(spec):
    """Build the permutation group described by an AST or spec text."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Atom):
        return _build_atom(spec)
    if isinstance(spec, Direct):
        return make.direct_product(build(spec.left), build(spec.right))
    if isinstance(spec, Wr):
        return make.wreath(build(spec.left), build(spec.right)).group
    raise SpecSemanticError(f"not a spec node: {spec!r}")
