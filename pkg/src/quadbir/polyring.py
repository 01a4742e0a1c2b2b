"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials live in a named graded ring (every variable has degree 1) and
are stored sparsely as a dict mapping exponent tuples to nonzero Fraction
coefficients.  The zero polynomial is the empty dict.  All operations are
pure and return canonical results, so polynomial identity testing is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

Exponent = tuple  # tuple[int, ...], one entry per ring variable


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


class PolyParseError(ValueError):
    """Malformed polynomial or ideal-file text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponent, b: Exponent) -> bool:
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_quot(b: Exponent, a: Exponent) -> Exponent:
    """Exponent of x^b / x^a (caller guarantees divisibility)."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Exponent) -> int:
    return sum(a)


class MonomialOrder:
    """Total multiplicative monomial order: lex, degrevlex, or block(k).

    block(k) is the elimination order for the first k variables: any
    monomial involving one of them beats any monomial that does not, with
    degrevlex ties inside each block.
    """

    __slots__ = ("kind", "block")

    def __init__(self, kind: str, block: int = 0):
        if kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and block <= 0:
            raise ValueError("block order needs a positive block size")
        self.kind = kind
        self.block = block if kind == "block" else 0

    @staticmethod
    def lex() -> "MonomialOrder":
        return MonomialOrder("lex")

    @staticmethod
    def degrevlex() -> "MonomialOrder":
        return MonomialOrder("degrevlex")

    @staticmethod
    def elimination(k: int) -> "MonomialOrder":
        return MonomialOrder("block", k)

    def key(self) -> Callable[[Exponent], tuple]:
        """Sort key: key(a) > key(b) iff monomial a beats monomial b."""
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "degrevlex":
            return _drl_key
        k = self.block
        return lambda e: (_drl_key(e[:k]), _drl_key(e[k:]))

    def sorted_monomials(self, monomials: Iterable[Exponent]) -> list[Exponent]:
        """Descending (leading monomial first)."""
        return sorted(monomials, key=self.key(), reverse=True)

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder(block={self.block})"
        return f"MonomialOrder({self.kind})"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.block == other.block
        )

    def __hash__(self):
        return hash((self.kind, self.block))


def _drl_key(e: Exponent) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder.degrevlex()
LEX = MonomialOrder.lex()


class Ring:
    """A polynomial ring over QQ with named degree-1 variables."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables: Sequence[str]):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        if not variables:
            raise ValueError("ring needs at least one variable")
        self.variables = variables
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Poly":
        i = self.var_index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Poly"]:
        return [self.var(v) for v in self.variables]

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in ring {self}") from None

    def monomial(self, exponents: Sequence[int]) -> "Poly":
        e = tuple(exponents)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError("bad exponent vector")
        return Poly(self, {e: Fraction(1)})

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"Ring({', '.join(self.variables)})"


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms  # owned by this instance; never mutated afterwards

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_terms(ring: Ring, items: Iterable[tuple[Exponent, Fraction]]) -> "Poly":
        terms: dict = {}
        for e, c in items:
            c = terms.get(e, Fraction(0)) + c
            if c:
                terms[e] = c
            else:
                terms.pop(e, None)
        return Poly(ring, terms)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_deg(e) for e in self.terms}
        return len(degs) == 1

    def is_constant(self) -> bool:
        return all(mono_deg(e) == 0 for e in self.terms)

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def lead_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key())

    def lead_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.lead_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Poly":
        if not self.terms:
            return self
        lc = self.lead_coefficient(order)
        if lc == 1:
            return self
        return Poly(self.ring, {e: c / lc for e, c in self.terms.items()})

    def primitive(self) -> "Poly":
        """Integer-primitive scalar multiple with positive leading content."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        scale = Fraction(den, num)
        return Poly(self.ring, {e: c * scale for e, c in self.terms.items()})

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, {})
        out: dict = {}
        get = out.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.ring, out)

    def __rmul__(self, other):
        return self * other

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: x * c for e, x in self.terms.items()})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return self.ring.const(other)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = self.ring.const(other)
            else:
                return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus and substitution -------------------------------------------

    def diff(self, var: str) -> "Poly":
        """Formal partial derivative with respect to a ring variable."""
        i = self.ring.var_index(var)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            e2 = e[:i] + (k - 1,) + e[i + 1 :]
            s = out.get(e2, Fraction(0)) + c * k
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return Poly(self.ring, out)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring homomorphism sending variable i to images[i].

        All images must live in one common ring, one per variable of this
        polynomial's ring.
        """
        if len(images) != self.ring.nvars:
            raise ValueError(
                f"need {self.ring.nvars} images, got {len(images)}"
            )
        target = images[0].ring
        for p in images:
            if p.ring != target:
                raise RingMismatchError("images live in different rings")
        # cache powers of each image as needed
        powers: list[dict[int, Poly]] = [dict() for _ in images]

        def power(i: int, k: int) -> Poly:
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def graded_parts(self) -> dict[int, "Poly"]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(mono_deg(e), {})[e] = c
        return {d: Poly(self.ring, t) for d, t in sorted(parts.items())}

    # -- display -------------------------------------------------------------

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exponent, Fraction]]:
        return [(e, self.terms[e]) for e in order.sorted_monomials(self.terms)]

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


# ---------------------------------------------------------------------------
# text format: rational coefficients, '*' between factors, '^' for powers.
# '*' may be omitted between a coefficient and a variable ("2x0" == "2*x0").

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))"
)


def _tokenize(text: str, line: int | None) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:].strip()
            if not rest:
                break
            raise PolyParseError(f"unexpected character {rest[0]!r}", line)
        pos = m.end()
        for kind in ("num", "name", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val))
                break
    return tokens


def parse_poly(ring: Ring, text: str, line: int | None = None) -> Poly:
    tokens = _tokenize(text, line)
    if not tokens:
        raise PolyParseError("empty polynomial", line)
    nvars = ring.nvars
    terms: dict = {}
    i = 0
    n = len(tokens)
    while i < n:
        sign = Fraction(1)
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise PolyParseError("dangling sign", line)
        coeff = sign
        exps = [0] * nvars
        saw_factor = False
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if kind == "num":
                coeff *= Fraction(val)
                saw_factor = True
                i += 1
                expect_factor = False
                # allow implicit '*' between coefficient and variable
                continue
            if kind == "name":
                if not expect_factor and tokens[i - 1][0] == "name":
                    raise PolyParseError(
                        f"missing '*' before {val!r}", line
                    )
                j = ring._index.get(val)
                if j is None:
                    raise PolyParseError(f"unknown variable {val!r}", line)
                power = 1
                i += 1
                if i < n and tokens[i] == ("op", "^"):
                    i += 1
                    if i >= n or tokens[i][0] != "num" or "/" in tokens[i][1]:
                        raise PolyParseError("'^' needs an integer exponent", line)
                    power = int(tokens[i][1])
                    i += 1
                exps[j] += power
                saw_factor = True
                expect_factor = False
                continue
            if kind == "op" and val == "*":
                if expect_factor:
                    raise PolyParseError("misplaced '*'", line)
                expect_factor = True
                i += 1
                continue
            break  # '+' or '-' begins the next term
        if not saw_factor:
            raise PolyParseError("empty term", line)
        if expect_factor and tokens[i - 1] == ("op", "*"):
            raise PolyParseError("dangling '*'", line)
        e = tuple(exps)
        s = terms.get(e, Fraction(0)) + coeff
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)
    return Poly(ring, terms)


def _format_coeff(c: Fraction) -> str:
    return str(c) if c.denominator != 1 else str(c.numerator)


def format_poly(p: Poly, order: MonomialOrder = DEGREVLEX) -> str:
    if not p.terms:
        return "0"
    names = p.ring.variables
    pieces = []
    for e, c in p.sorted_terms(order):
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        pieces.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(pieces)
    if text.startswith("+ "):
        return text[2:]
    return "-" + text[2:]


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    """Named arithmetic entry point: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")
