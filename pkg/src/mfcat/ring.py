"""Sparse multivariate polynomials over Q with a Z^g multigrading.

A :class:`GradedRing` names its variables and gives each one a degree
vector of length ``channels``.  Polynomials are immutable dictionaries
``exponent tuple -> Fraction`` with no zero coefficients stored.

>>> R = polynomial_ring("x y")
>>> parse_poly("(x+y)^2", R)
x^2 + 2*x*y + y^2
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    NegativeExponent,
    NoSlicingChannel,
    PolySyntaxError,
    RingMismatch,
    UnknownVariable,
)

Degree = tuple  # tuple[int, ...], one entry per grading channel
Monomial = tuple  # tuple[int, ...], one exponent per variable

_AUTO = "auto"


class _AnyDegree:
    """Degree reported for the zero polynomial (homogeneous of every degree)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_DEGREE"

    def __reduce__(self):
        return (_AnyDegree, ())


ANY_DEGREE = _AnyDegree()


def add_degrees(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def sub_degrees(a: Degree, b: Degree) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def scale_degree(a: Degree, k: int) -> Degree:
    return tuple(k * x for x in a)


def as_degree(value, channels: int) -> Degree:
    """Coerce an int or sequence of ints into a degree vector of the right length."""
    if isinstance(value, int):
        value = (value,)
    value = tuple(int(v) for v in value)
    if len(value) != channels:
        raise ValueError(f"degree {value} has length {len(value)}, expected {channels}")
    return value


@dataclass(frozen=True)
class GradedRing:
    """Q[x_1..x_n] with degree vectors ``degrees[i]`` for each variable."""

    names: tuple
    degrees: tuple
    channels: int = 1
    slicing_channel: int | None = None

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if len(self.names) != len(self.degrees):
            raise ValueError("one degree vector per variable is required")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")
        for deg in self.degrees:
            if len(deg) != self.channels:
                raise ValueError(f"degree {deg} does not have {self.channels} channels")
        c = self.slicing_channel
        if c is not None:
            if not 0 <= c < self.channels:
                raise ValueError(f"slicing channel {c} out of range")
            if any(deg[c] <= 0 for deg in self.degrees):
                raise ValueError(f"variable degrees are not all positive in channel {c}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def zero_degree(self) -> Degree:
        return (0,) * self.channels

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} is not a variable of {self}") from None

    def monomial_degree(self, exps: Monomial) -> Degree:
        out = [0] * self.channels
        for e, deg in zip(exps, self.degrees):
            if e:
                for c in range(self.channels):
                    out[c] += e * deg[c]
        return tuple(out)

    def order_weight(self, exps: Monomial) -> int:
        """Weighted degree used by the canonical and degrevlex orders."""
        c = self.slicing_channel
        if c is None:
            return sum(exps)
        return sum(e * deg[c] for e, deg in zip(exps, self.degrees))

    # construction helpers

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self) -> list:
        return [self.var(n) for n in self.names]

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): Fraction(coeff)} if coeff else {})

    def __call__(self, text) -> "Polynomial":
        if isinstance(text, Polynomial):
            return text.change_ring(self)
        if isinstance(text, (int, Fraction)):
            return self.constant(text)
        return parse_poly(text, self)

    def describe(self) -> dict:
        return {
            "variables": [{"name": n, "degree": list(d)} for n, d in zip(self.names, self.degrees)],
            "channels": self.channels,
            "slicing_channel": self.slicing_channel,
        }

    def __str__(self):
        parts = ", ".join(f"{n}:{d if self.channels > 1 else d[0]}" for n, d in zip(self.names, self.degrees))
        return f"Q[{parts}]"


def polynomial_ring(names, degrees=None, channels=None, slicing_channel=_AUTO) -> GradedRing:
    """Build a graded ring.

    ``names`` is a sequence or whitespace separated string.  ``degrees``
    defaults to 1 for every variable; ints are read as single channel
    degrees.  With ``slicing_channel="auto"`` the first channel in which
    every variable has positive degree is used, if any.
    """
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    if degrees is None:
        degrees = [1] * len(names)
    if isinstance(degrees, Mapping):
        degrees = [degrees[n] for n in names]
    degrees = [(d,) if isinstance(d, int) else tuple(d) for d in degrees]
    if channels is None:
        channels = len(degrees[0]) if degrees else 1
    degrees = tuple(as_degree(d, channels) for d in degrees)
    if slicing_channel == _AUTO:
        slicing_channel = None
        for c in range(channels):
            if all(d[c] > 0 for d in degrees):
                slicing_channel = c
                break
    return GradedRing(names, degrees, channels, slicing_channel)


def _canonical_key(ring: GradedRing):
    def key(exps):
        return (ring.order_weight(exps), exps)

    return key


class Polynomial:
    """Immutable sparse polynomial.  Arithmetic requires a common ring."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: GradedRing, terms: Mapping | None = None):
        self.ring = ring
        self._terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # inspection

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self) -> list:
        """Terms in canonical (descending) order."""
        key = _canonical_key(self.ring)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monomials(self) -> list:
        return [m for m, _ in self.items()]

    def coefficient(self, exps: Monomial) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def variables(self) -> set:
        used = set()
        for m in self._terms:
            used.update(self.ring.names[i] for i, e in enumerate(m) if e)
        return used

    def homogeneous_degree(self):
        """Common multidegree of all terms, ``ANY_DEGREE`` for 0, ``None`` if inhomogeneous."""
        if not self._terms:
            return ANY_DEGREE
        degs = {self.ring.monomial_degree(m) for m in self._terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self, degree=None) -> bool:
        d = self.homogeneous_degree()
        if d is None:
            return False
        if degree is None or d is ANY_DEGREE:
            return True
        return d == tuple(degree)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return self.ring.zero()
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if not c.is_constant() or c.is_zero():
                return NotImplemented
            c = c.constant_value()
        return self.scale(1 / Fraction(c))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise NegativeExponent(f"exponent {n} is not a natural number")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, exps)): c * coeff for m, c in self._terms.items()},
        )

    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                terms[m2] = c * e
        return Polynomial._raw(self.ring, terms)

    def substitute(self, values: Mapping) -> "Polynomial":
        """Replace variables by polynomials (or numbers) of the same ring."""
        result = self.ring.zero()
        subs = {self.ring.index(k): (v if isinstance(v, Polynomial) else self.ring.constant(v))
                for k, v in values.items()}
        for m, c in self._terms.items():
            term = self.ring.constant(c)
            rest = list(m)
            for i, p in subs.items():
                if m[i]:
                    term = term * p ** m[i]
                    rest[i] = 0
            result = result + term.mul_monomial(tuple(rest))
        return result

    def change_ring(self, ring: GradedRing) -> "Polynomial":
        """Re-express in another ring, matching variables by name."""
        if ring == self.ring:
            return self
        index = []
        for i, name in enumerate(self.ring.names):
            index.append(ring.names.index(name) if name in ring.names else None)
        terms = {}
        for m, c in self._terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    if index[i] is None:
                        raise RingMismatch(f"variable {self.ring.names[i]} missing from {ring}")
                    new[index[i]] = e
            terms[tuple(new)] = c
        return Polynomial._raw(ring, terms)

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return format_poly(self)


# ---------------------------------------------------------------- printing

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.items():
        factors = []
        for name, e in zip(p.ring.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ----------------------------------------------------------------- parsing

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)", re.S)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        start = pos
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek() == "end":
            raise PolySyntaxError("empty expression", 0)
        result = self.expr()
        self.take("end")
        return result

    def expr(self):
        # a leading sign is accepted so that printed negatives re-parse
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.peek() == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.take()
            if self.peek() == "-":
                raise NegativeExponent("negative exponents are not allowed", self.tokens[self.i][2])
            exp = self.take("int")[1]
            base = base ** exp
        return base

    def base(self):
        kind, value, pos = self.tokens[self.i]
        if kind == "int":
            self.take()
            num = Fraction(value)
            if self.peek() == "/":
                self.take()
                den = self.take("int")
                if den[1] == 0:
                    raise PolySyntaxError("zero denominator", den[2])
                num = num / den[1]
            return self.ring.constant(num)
        if kind == "id":
            self.take()
            if value not in self.ring.names:
                raise UnknownVariable(f"{value!r} is not a variable of {self.ring} (at offset {pos})")
            return self.ring.var(value)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        found = "end of input" if kind == "end" else repr(value)
        raise PolySyntaxError(f"unexpected {found}", pos)


def parse_poly(text: str, ring: GradedRing) -> Polynomial:
    """Parse ``text`` in the polynomial grammar over ``ring``."""
    return _Parser(text, ring).parse()


# -------------------------------------------------------- monomial bases

def monomial_basis(ring: GradedRing, degree) -> list:
    """All exponent tuples of exactly the given multidegree, in canonical order."""
    if ring.slicing_channel is None:
        raise NoSlicingChannel(f"{ring} has no channel with all variable degrees positive")
    return list(_monomial_basis(ring, as_degree(degree, ring.channels)))


@lru_cache(maxsize=4096)
def _monomial_basis(ring: GradedRing, degree: Degree) -> tuple:
    c = ring.slicing_channel
    n = ring.nvars
    target = degree[c]
    found = []
    if target < 0:
        return ()

    def rec(i, remaining, exps):
        if i == n:
            if remaining == 0:
                found.append(tuple(exps))
            return
        step = ring.degrees[i][c]
        for e in range(remaining // step + 1):
            exps.append(e)
            rec(i + 1, remaining - e * step, exps)
            exps.pop()

    rec(0, target, [])
    found = [m for m in found if ring.monomial_degree(m) == degree]
    key = _canonical_key(ring)
    found.sort(key=key, reverse=True)
    return tuple(found)


def iter_monomials_upto(ring: GradedRing, max_weight: int) -> Iterator:
    """Monomials with ``order_weight <= max_weight`` (all-positive weights assumed)."""
    weights = [d[ring.slicing_channel] if ring.slicing_channel is not None else 1 for d in ring.degrees]

    def rec(i, remaining, exps):
        if i == ring.nvars:
            yield tuple(exps)
            return
        for e in range(remaining // weights[i] + 1):
            exps.append(e)
            yield from rec(i + 1, remaining - e * weights[i], exps)
            exps.pop()

    yield from rec(0, max_weight, [])


def poly_arith(op: str, a: Polynomial, b) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        if isinstance(b, Polynomial) and b.ring != a.ring:
            raise RingMismatch(f"{a.ring} vs {b.ring}")
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    return p.derivative(var)


def homogeneity_check(p: Polynomial):
    """Common multidegree, ``ANY_DEGREE`` for 0, or the string ``"inhomogeneous"``."""
    d = p.homogeneous_degree()
    return "inhomogeneous" if d is None else d
