"""
Exact multivariate Laurent polynomials with Gaussian-integer coefficients.

A polynomial is a map from monomials to nonzero coefficients in Z[i]. A
monomial is stored as a sorted tuple of ``(variable, exponent)`` pairs with
nonzero exponents, so the empty tuple is the constant monomial. Python ints
give arbitrary precision, so nothing can overflow.

Canonical term order: collect the variables occurring in the polynomial,
sort them by name, read each monomial as its exponent vector over that list
(missing exponents are 0) and list terms in descending lexicographic order.
For a single variable this is the usual descending-degree order.

The imaginary unit is written ``i`` in text, so ``i`` cannot be a variable.
"""

from __future__ import annotations

import cmath
import functools
import json
import re
from typing import Iterable, Mapping, Union

__all__ = [
    "GaussInt",
    "LaurentPoly",
    "I",
    "ParseError",
    "poly_add",
    "poly_mul",
    "substitute_scaled",
    "substitute",
    "eval_complex",
    "parse_poly",
]


class ParseError(ValueError):
    """Raised when polynomial text or JSON cannot be read."""


class GaussInt:
    """An element re + im*i of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        if not isinstance(re, int) or not isinstance(im, int):
            raise TypeError("GaussInt parts must be int")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussInt is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussInt":
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, bool):
            return cls(int(value))
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, complex):
            re_, im_ = value.real, value.imag
            if re_.is_integer() and im_.is_integer():
                return cls(int(re_), int(im_))
        raise TypeError(f"cannot convert {value!r} to a Gaussian integer")

    def __add__(self, other):
        try:
            other = GaussInt.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = GaussInt.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussInt.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussInt(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return abs(self.re) + abs(self.im) == 1

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def inverse(self) -> "GaussInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[i]")
        return self.conjugate()

    def __complex__(self):
        return complex(self.re, self.im)

    def __eq__(self, other):
        try:
            other = GaussInt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self):
        return _coeff_text(self.re, self.im)


I = GaussInt(0, 1)
_UNITS = {GaussInt(1): 0, I: 1, GaussInt(-1): 2, GaussInt(0, -1): 3}

Monomial = tuple  # tuple[tuple[str, int], ...]


@functools.lru_cache(maxsize=1 << 16)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        s = exps.get(v, 0) + e
        if s:
            exps[v] = s
        else:
            exps.pop(v, None)
    return tuple(sorted(exps.items()))


def _mono_from_mapping(exps: Mapping[str, int]) -> Monomial:
    for v, e in exps.items():
        _check_var(v)
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError(f"exponent of {v!r} must be int")
    return tuple(sorted((v, e) for v, e in exps.items() if e != 0))


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _check_var(name: str) -> None:
    if not isinstance(name, str) or not _IDENT.match(name) or name == "i":
        raise ValueError(f"invalid variable name {name!r}")


Coefficient = Union[int, GaussInt, complex]


class LaurentPoly:
    """Immutable Laurent polynomial over Z[i].

    Build polynomials with :meth:`var`, :meth:`const`, :meth:`monomial` or
    :func:`parse_poly`, then combine them with ``+``, ``-``, ``*`` and ``**``.
    Integer and :class:`GaussInt` operands are promoted to constants.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, GaussInt] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = GaussInt.coerce(c)
                if not c.is_zero():
                    clean[m] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already canonical and nonzero
        p = object.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # construction

    @classmethod
    def const(cls, c: Coefficient) -> "LaurentPoly":
        return cls({(): GaussInt.coerce(c)})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        _check_var(name)
        return cls._raw({((name, 1),): GaussInt(1)})

    @classmethod
    def monomial(cls, c: Coefficient, exps: Mapping[str, int]) -> "LaurentPoly":
        return cls({_mono_from_mapping(exps): GaussInt.coerce(c)})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls.const(value)

    # inspection

    @property
    def terms(self) -> dict:
        """Copy of the term map ``{monomial: GaussInt}``."""
        return dict(self._terms)

    def variables(self) -> list[str]:
        return sorted({v for m in self._terms for v, _ in m})

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> GaussInt:
        return self._terms.get((), GaussInt(0))

    def coefficient(self, exps: Mapping[str, int]) -> GaussInt:
        return self._terms.get(_mono_from_mapping(exps), GaussInt(0))

    def is_unit_monomial(self) -> bool:
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c.is_unit()

    def degree_range(self, name: str) -> tuple[int, int]:
        """(lowest, highest) exponent of ``name``; (0, 0) for the zero polynomial."""
        exps = [dict(m).get(name, 0) for m in self._terms] or [0]
        return min(exps), max(exps)

    def sorted_terms(self) -> list[tuple[Monomial, GaussInt]]:
        names = self.variables()

        def vector(m):
            d = dict(m)
            return tuple(d.get(v, 0) for v in names)

        return sorted(self._terms.items(), key=lambda t: vector(t[0]), reverse=True)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                c = GaussInt.coerce(other)
            except TypeError:
                return NotImplemented
            if c.is_zero():
                return LaurentPoly._raw({})
            return LaurentPoly._raw({m: v * c for m, v in self._terms.items()})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                prod = c1 * c2
                s = out.get(m)
                out[m] = prod if s is None else s + prod
        return LaurentPoly._raw({m: c for m, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit monomial ``u * x1^e1 * ...``."""
        if not self.is_unit_monomial():
            raise ZeroDivisionError(f"{self} is not invertible")
        ((m, c),) = self._terms.items()
        return LaurentPoly._raw({tuple((v, -e) for v, e in m): c.inverse()})

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k in (0, 1):
            return LaurentPoly._raw({(): GaussInt(1)}) if k == 0 else self
        return _power(self, k)

    def _pow_uncached(self, k: int):
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = LaurentPoly._raw({(): GaussInt(1)})
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    # serialization

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            negative, mag = _split_sign(c)
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def to_json_obj(self) -> list:
        return [{"m": dict(m), "re": c.re, "im": c.im} for m, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "LaurentPoly":
        if not isinstance(obj, list):
            raise ParseError("polynomial JSON must be an array of terms")
        out = LaurentPoly()
        for term in obj:
            try:
                m = term["m"]
                re_, im_ = term["re"], term["im"]
            except (KeyError, TypeError) as exc:
                raise ParseError(f"bad term {term!r}") from exc
            if not isinstance(m, dict) or not all(isinstance(x, int) for x in (re_, im_)):
                raise ParseError(f"bad term {term!r}")
            try:
                out = out + cls.monomial(GaussInt(re_, im_), m)
            except (TypeError, ValueError) as exc:
                raise ParseError(str(exc)) from exc
        return out

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return cls.from_json_obj(obj)


def _coeff_text(re_: int, im_: int) -> str:
    if im_ == 0:
        return str(re_)
    imag = "i" if abs(im_) == 1 else f"{abs(im_)}*i"
    if re_ == 0:
        return ("-" if im_ < 0 else "") + imag
    return f"({re_}{'-' if im_ < 0 else '+'}{imag})"


def _split_sign(c: GaussInt) -> tuple[bool, str]:
    """Leading sign and magnitude text of a coefficient."""
    if c.im == 0:
        return c.re < 0, str(abs(c.re))
    if c.re == 0:
        return c.im < 0, _coeff_text(0, abs(c.im))
    return False, _coeff_text(c.re, c.im)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(p) + LaurentPoly.coerce(q)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(p) * LaurentPoly.coerce(q)


def substitute_scaled(p: LaurentPoly, var: str, scale: Coefficient,
                      target: str, power: int = 1) -> LaurentPoly:
    """Replace every ``var^k`` by ``scale^k * target^(power*k)``.

    ``scale`` must be one of 1, -1, i, -i and ``power`` one of 1, -1, so the
    map is an automorphism of the coefficient ring extended to monomials.
    """
    scale = GaussInt.coerce(scale)
    if scale not in _UNITS:
        raise ValueError("scale must be a unit of Z[i]")
    if power not in (1, -1):
        raise ValueError("power must be 1 or -1")
    _check_var(target)
    out: dict = {}
    for m, c in p._terms.items():
        k = 0
        rest = []
        for v, e in m:
            if v == var:
                k = e
            else:
                rest.append((v, e))
        if k:
            c = c * (scale ** k)
            m = _mono_mul(tuple(rest), ((target, power * k),))
        s = out.get(m)
        out[m] = c if s is None else s + c
    return LaurentPoly({m: c for m, c in out.items()})


def substitute(p: LaurentPoly, var: str, value: LaurentPoly) -> LaurentPoly:
    """Replace ``var`` by the polynomial ``value``.

    Negative powers of ``var`` need ``value`` to be a unit monomial.
    """
    value = LaurentPoly.coerce(value)
    powers: dict[int, LaurentPoly] = {}
    out = LaurentPoly()
    for m, c in p._terms.items():
        k = 0
        rest = []
        for v, e in m:
            if v == var:
                k = e
            else:
                rest.append((v, e))
        if k not in powers:
            powers[k] = value ** k
        out = out + LaurentPoly._raw({tuple(rest): c}) * powers[k]
    return out


def eval_complex(p: LaurentPoly, assignment: Mapping[str, complex]) -> complex:
    """Evaluate at complex values; every variable must be assigned a nonzero value."""
    total = 0j
    for m, c in p._terms.items():
        t = complex(c.re, c.im)
        for v, e in m:
            if v not in assignment:
                raise KeyError(f"variable {v!r} is not assigned")
            x = complex(assignment[v])
            if x == 0:
                raise ZeroDivisionError(f"variable {v!r} is assigned zero")
            t *= x ** e
        total += t
    return total


# text parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        tok = mt.group(1) or mt.group(2) or mt.group(3)
        if mt.group(3) is not None and tok not in "+-*^()":
            raise ParseError(f"unexpected character {tok!r} at offset {mt.start(3)}")
        tokens.append(tok)
        pos = mt.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'}, found {tok!r}")
        self.k += 1
        return tok

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        out = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            out = out + self.term() * sign
        return out

    def term(self) -> LaurentPoly:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> LaurentPoly:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            self.take()
            base = self.expr()
            self.take(")")
        elif tok.isdigit():
            self.take()
            base = LaurentPoly.const(int(tok))
        elif tok == "i":
            self.take()
            base = LaurentPoly.const(I)
        elif _IDENT.match(tok):
            self.take()
            base = LaurentPoly.var(tok)
        else:
            raise ParseError(f"unexpected token {tok!r}")
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            exp = self.take()
            if not exp.isdigit():
                raise ParseError(f"bad exponent {exp!r}")
            try:
                base = base ** (sign * int(exp))
            except ZeroDivisionError as exc:
                raise ParseError(str(exc)) from exc
        return base


def parse_poly(text: str) -> LaurentPoly:
    """Read polynomial text such as ``-a^2*z^-1 + (1-2*i)*A + 3``."""
    parser = _Parser(text)
    if not parser.toks:
        raise ParseError("empty polynomial text")
    out = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at {parser.peek()!r}")
    return out


def variables(polys: Iterable[LaurentPoly]) -> list[str]:
    return sorted({v for p in polys for v in p.variables()})


@functools.lru_cache(maxsize=4096)
def _power(p: LaurentPoly, k: int) -> LaurentPoly:
    return p._pow_uncached(k)
