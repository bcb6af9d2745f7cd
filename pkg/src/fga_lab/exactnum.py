"""Exact coefficient arithmetic: integers, dyadic rationals, and integer
polynomials in named parameters, with 2-adic utilities.

Three coefficient rings are supported:

* ``Integers`` -- arbitrary-precision integers,
* ``Dyadic``   -- rationals with power-of-two denominator, i.e. integers
  with 2 inverted,
* ``ParamPoly``-- multivariate integer polynomials in a fixed tuple of
  named parameters.

Values are immutable and canonical, so structural equality is semantic
equality.  Mixing values from different rings raises ``ValueError``
instead of coercing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

INT = "int"
DYADIC = "dyadic"
PARAM = "parampoly"

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

# Raw value representations (kept canonical at all times):
#   INT    -> int
#   DYADIC -> (num, exp) meaning num / 2**exp, exp >= 0, num odd unless exp == 0
#   PARAM  -> tuple of (exponent tuple, int) pairs, graded-lex sorted, no zeros


def grlex_key(exps):
    """Sort key realizing graded-lex order with earlier variables bigger."""
    return (sum(exps), tuple(-e for e in exps))


def two_adic_valuation(n: int) -> int:
    """Largest e with 2**e dividing n; undefined (error) for n = 0."""
    if n == 0:
        raise ValueError("valuation of zero undefined")
    return (n & -n).bit_length() - 1


def _dyadic_canon(num: int, exp: int):
    if num == 0:
        return (0, 0)
    while num % 2 == 0 and exp > 0:
        num //= 2
        exp -= 1
    return (num, exp)


@dataclass(frozen=True)
class CoeffRing:
    """A coefficient ring tag: one of Integers, Dyadic, ParamPoly(names)."""

    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in (INT, DYADIC, PARAM):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == PARAM:
            if not self.params:
                raise ValueError("ParamPoly needs at least one parameter name")
            if len(set(self.params)) != len(self.params):
                raise ValueError("parameter names must be distinct")
            for p in self.params:
                if not _NAME_RE.match(p):
                    raise ValueError(f"bad parameter name {p!r}")
        elif self.params:
            raise ValueError("only ParamPoly rings carry parameters")

    @staticmethod
    def integers() -> "CoeffRing":
        return CoeffRing(INT)

    @staticmethod
    def dyadic() -> "CoeffRing":
        return CoeffRing(DYADIC)

    @staticmethod
    def parampoly(names) -> "CoeffRing":
        return CoeffRing(PARAM, tuple(names))

    # -- raw-value arithmetic (used by the series layer; values as above) --

    @property
    def rzero(self):
        if self.kind == INT:
            return 0
        if self.kind == DYADIC:
            return (0, 0)
        return ()

    @property
    def rone(self):
        return self.rfrom_int(1)

    def rfrom_int(self, k: int):
        if self.kind == INT:
            return int(k)
        if self.kind == DYADIC:
            return _dyadic_canon(int(k), 0)
        return ((tuple([0] * len(self.params)), int(k)),) if k else ()

    def ris_zero(self, a) -> bool:
        if self.kind == INT:
            return a == 0
        if self.kind == DYADIC:
            return a[0] == 0
        return not a

    def radd(self, a, b):
        if self.kind == INT:
            return a + b
        if self.kind == DYADIC:
            (n1, e1), (n2, e2) = a, b
            e = max(e1, e2)
            return _dyadic_canon(n1 * (1 << (e - e1)) + n2 * (1 << (e - e2)), e)
        acc = dict(a)
        for ex, c in b:
            v = acc.get(ex, 0) + c
            if v:
                acc[ex] = v
            else:
                del acc[ex]
        return tuple(sorted(acc.items(), key=lambda t: grlex_key(t[0])))

    def rneg(self, a):
        if self.kind == INT:
            return -a
        if self.kind == DYADIC:
            return (-a[0], a[1])
        return tuple((ex, -c) for ex, c in a)

    def rmul(self, a, b):
        if self.kind == INT:
            return a * b
        if self.kind == DYADIC:
            return _dyadic_canon(a[0] * b[0], a[1] + b[1])
        acc = {}
        for ex1, c1 in a:
            for ex2, c2 in b:
                ex = tuple(x + y for x, y in zip(ex1, ex2))
                v = acc.get(ex, 0) + c1 * c2
                if v:
                    acc[ex] = v
                elif ex in acc:
                    del acc[ex]
        return tuple(sorted(acc.items(), key=lambda t: grlex_key(t[0])))

    def rscale_int(self, a, m: int):
        if m == 0:
            return self.rzero
        if self.kind == INT:
            return a * m
        if self.kind == DYADIC:
            return _dyadic_canon(a[0] * m, a[1])
        return tuple((ex, c * m) for ex, c in a)

    def rmod2(self, a):
        """Reduce every integer coefficient of a to {0, 1}."""
        if self.kind == DYADIC:
            raise ValueError("cannot reduce dyadic mod 2")
        if self.kind == INT:
            return a % 2
        return tuple((ex, 1) for ex, c in a if c % 2)

    def rdiv_int(self, a, m: int):
        """Exact division by a nonzero integer, or None when not divisible."""
        if m == 0:
            raise ZeroDivisionError("division by zero")
        if self.kind == INT:
            return a // m if a % m == 0 else None
        if self.kind == DYADIC:
            num, exp = a
            if num == 0:
                return (0, 0)
            odd = m
            shift = 0
            while odd % 2 == 0:
                odd //= 2
                shift += 1
            if num % odd != 0:
                return None
            return _dyadic_canon(num // odd, exp + shift)
        out = []
        for ex, c in a:
            if c % m:
                return None
            out.append((ex, c // m))
        return tuple(out)

    def rint_coeffs(self, a):
        """All integer coefficients of a value (for gcd/content scans)."""
        if self.kind == INT:
            return (a,)
        if self.kind == DYADIC:
            raise ValueError("content is defined for integral rings only")
        return tuple(c for _, c in a)

    def rstr(self, a) -> str:
        if self.kind == INT:
            return str(a)
        if self.kind == DYADIC:
            num, exp = a
            return str(num) if exp == 0 else f"{num}/2^{exp}"
        if not a:
            return "0"
        parts = []
        for ex, c in a:
            mono = "*".join(
                p if e == 1 else f"{p}^{e}"
                for p, e in zip(self.params, ex)
                if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return "-" + s[2:] if s.startswith("- ") else s[2:]

    def rparse(self, s: str):
        """Parse the canonical string form back into a raw value."""
        s = s.strip()
        if self.kind == INT:
            return int(s)
        if self.kind == DYADIC:
            if "/" in s:
                num, den = s.split("/")
                m = re.match(r"^2\^(\d+)$", den.strip())
                if not m:
                    raise ValueError(f"bad dyadic string {s!r}")
                return _dyadic_canon(int(num), int(m.group(1)))
            return _dyadic_canon(int(s), 0)
        return self._parse_poly(s)

    def _parse_poly(self, s: str):
        idx = {p: i for i, p in enumerate(self.params)}
        acc = self.rzero
        for sign, body in _split_signed_terms(s):
            coeff = sign
            exps = [0] * len(self.params)
            seen_name = False
            for factor in body.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"bad term in {s!r}")
                if factor[0].isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in idx:
                    raise ValueError(f"unknown parameter {name!r}")
                exps[idx[name]] += int(power) if power else 1
                seen_name = True
            term = ((tuple(exps), coeff),) if coeff else ()
            if not seen_name and not factor[0].isdigit():
                raise ValueError(f"bad term in {s!r}")
            acc = self.radd(acc, term)
        return acc


def _split_signed_terms(s: str):
    s = s.strip()
    if s in ("", "0"):
        return []
    out = []
    sign = 1
    buf = []
    for ch in s:
        if ch in "+-":
            if buf and "".join(buf).strip():
                out.append((sign, "".join(buf).strip()))
            sign = 1 if ch == "+" else -1
            buf = []
        else:
            buf.append(ch)
    if buf and "".join(buf).strip():
        out.append((sign, "".join(buf).strip()))
    return out


@dataclass(frozen=True)
class Coeff:
    """An immutable element of a CoeffRing in canonical form."""

    ring: CoeffRing
    raw: object

    @staticmethod
    def from_int(ring: CoeffRing, k: int) -> "Coeff":
        return Coeff(ring, ring.rfrom_int(k))

    @staticmethod
    def dyadic(num: int, exp: int = 0) -> "Coeff":
        return Coeff(CoeffRing.dyadic(), _dyadic_canon(num, exp))

    @staticmethod
    def parameter(ring: CoeffRing, name: str) -> "Coeff":
        if ring.kind != PARAM or name not in ring.params:
            raise ValueError(f"{name!r} is not a parameter of this ring")
        ex = tuple(1 if p == name else 0 for p in ring.params)
        return Coeff(ring, ((ex, 1),))

    def _samering(self, other: "Coeff"):
        if self.ring != other.ring:
            raise ValueError("mixing coefficients from different rings")

    def is_zero(self) -> bool:
        return self.ring.ris_zero(self.raw)

    def __add__(self, other):
        self._samering(other)
        return Coeff(self.ring, self.ring.radd(self.raw, other.raw))

    def __neg__(self):
        return Coeff(self.ring, self.ring.rneg(self.raw))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._samering(other)
        return Coeff(self.ring, self.ring.rmul(self.raw, other.raw))

    def __str__(self):
        return self.ring.rstr(self.raw)


def mod2_reduce(c: Coeff) -> Coeff:
    """Image of c with every integer coefficient reduced mod 2 to {0, 1}."""
    return Coeff(c.ring, c.ring.rmod2(c.raw))


def exact_div_int(c: Coeff, m: int):
    """c / m when every integer coefficient of c is divisible by m, else None."""
    if m == 0:
        raise ZeroDivisionError("division by zero")
    raw = c.ring.rdiv_int(c.raw, m)
    return None if raw is None else Coeff(c.ring, raw)


def content_of_ints(values) -> int:
    """gcd of an iterable of integers (0 for an empty iterable)."""
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g
