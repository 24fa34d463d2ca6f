"""Exact sparse multivariate polynomial arithmetic over Q or Z/p.

Everything downstream (pfaffians, Groebner bases, unprojection) moves
through the Polynomial type defined here.  Monomials are exponent
tuples, terms are kept sorted in weighted graded reverse lexicographic
order, and coefficients are Fraction (over Q) or int in [0, p) (over
Z/p).  No floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple  # exponent tuple, one slot per ring variable
Coefficient = Union[int, Fraction]

MAX_PRIME = 2**31


class AlgebraError(Exception):
    """Base class for all exact-algebra failures."""


class ParseError(AlgebraError):
    pass


class CoefficientError(AlgebraError):
    """A coefficient does not exist in the target field."""


class RingMismatchError(AlgebraError):
    """Operands built over different RingSpecs."""


class InexactDivisionError(AlgebraError):
    """Multivariate division by a single divisor left a remainder."""


class SubstitutionError(AlgebraError):
    """A substitution is missing an assignment or maps outside the target."""


class GradingError(AlgebraError):
    """A graded substitution assigns an image of the wrong weighted degree."""


class BlockDegreeError(AlgebraError):
    """A polynomial is not homogeneous of degree 1 in the block variables."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: Q when p is None, otherwise Z/p for an odd prime p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None:
            if not (2 < self.p < MAX_PRIME):
                raise CoefficientError(f"prime must satisfy 2 < p < 2^31, got {self.p}")
            if not _is_prime(self.p):
                raise CoefficientError(f"{self.p} is not prime")

    @property
    def zero(self) -> Coefficient:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Coefficient:
        return 1 if self.p is not None else Fraction(1)

    def of(self, value: int | Fraction) -> Coefficient:
        """Canonical image of an integer or rational in this field."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.ratio(value.numerator, value.denominator)
        return value % self.p

    def ratio(self, num: int, den: int) -> Coefficient:
        if self.p is None:
            if den == 0:
                raise CoefficientError("zero denominator")
            return Fraction(num, den)
        if den % self.p == 0:
            raise CoefficientError(f"denominator {den} is zero mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return (a + b) % self.p if self.p is not None else a + b

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a: Coefficient) -> Coefficient:
        return -a % self.p if self.p is not None else -a

    def inv(self, a: Coefficient) -> Coefficient:
        if not a:
            raise CoefficientError("inverse of zero")
        if self.p is None:
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def coerce(self, value: Coefficient, src: "FieldSpec") -> Coefficient:
        """Map a coefficient of src into this field (Q -> Q, Q -> Z/p, same p)."""
        if src == self:
            return value
        if src.p is None:
            return self.of(value)
        raise CoefficientError(f"no canonical map from Z/{src.p} into {self}")

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"


QQ = FieldSpec(None)


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        q.append(d)
    return tuple(q)


def mon_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))

def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring: named weighted variables over a field, grevlex order.

    The monomial order is fixed: compare weighted degrees first, ties broken
    reverse lexicographically (the LAST variable with differing exponent
    decides, smaller exponent wins).
    """

    variables: tuple[str, ...]
    weights: tuple[int, ...]
    field: FieldSpec = QQ

    def __post_init__(self) -> None:
        if len(self.variables) != len(self.weights):
            raise AlgebraError("one weight per variable required")
        if len(set(self.variables)) != len(self.variables):
            raise AlgebraError("duplicate variable names")
        for name in self.variables:
            if not _NAME_RE.fullmatch(name):
                raise AlgebraError(f"invalid variable name {name!r}")
        for w in self.weights:
            if not (isinstance(w, int) and w >= 1):
                raise AlgebraError(f"weights must be positive integers, got {w!r}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r} in ring {self}") from None

    def wdeg(self, mon: Monomial) -> int:
        return sum(e * w for e, w in zip(mon, self.weights))

    def sort_key(self, mon: Monomial):
        """Key whose natural (ascending) order is ascending grevlex."""
        return (self.wdeg(mon), tuple(-e for e in reversed(mon)))

    def zero_mon(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.const(self.field.one)

    def const(self, value: int | Fraction) -> "Polynomial":
        c = self.field.of(value)
        if not c:
            return self.zero()
        return Polynomial(self, ((self.zero_mon(), c),))

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        mon = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((mon, self.field.one),))

    def monomial(self, mon: Monomial, coeff: int | Fraction = 1) -> "Polynomial":
        if len(mon) != self.nvars:
            raise RingMismatchError("monomial length does not match ring")
        return Polynomial.from_terms(self, [(tuple(mon), self.field.of(coeff))])

    def __str__(self) -> str:
        vs = ",".join(f"{n}:{w}" for n, w in zip(self.variables, self.weights))
        return f"ring {self.field} vars {vs} order grevlex"


class Polynomial:
    """Immutable sparse polynomial; terms sorted descending in ring order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: tuple):
        # Internal constructor: terms must already be canonical
        # (sorted descending, nonzero coefficients).  Use from_terms
        # or the RingSpec helpers to build from raw data.
        self.ring = ring
        self.terms = terms
        self._hash = None

    @staticmethod
    def from_terms(ring: RingSpec, items: Iterable[tuple]) -> "Polynomial":
        acc: dict = {}
        field = ring.field
        for mon, coeff in items:
            if len(mon) != ring.nvars:
                raise RingMismatchError("monomial length does not match ring")
            c = field.add(acc.get(mon, field.zero), coeff)
            if c:
                acc[mon] = c
            elif mon in acc:
                del acc[mon]
        return Polynomial.from_dict(ring, acc)

    @staticmethod
    def from_dict(ring: RingSpec, acc: Mapping) -> "Polynomial":
        terms = tuple(
            (mon, acc[mon])
            for mon in sorted(acc, key=ring.sort_key, reverse=True)
            if acc[mon]
        )
        return Polynomial(ring, terms)

    # -- inspection ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.terms)

    def leading_term(self) -> tuple:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Coefficient:
        return self.leading_term()[1]

    def coefficient(self, mon: Monomial) -> Coefficient:
        for m, c in self.terms:
            if m == mon:
                return c
        return self.ring.field.zero

    def constant_value(self) -> Coefficient:
        return self.coefficient(self.ring.zero_mon())

    def is_constant(self) -> bool:
        return not self.terms or self.terms[0][0] == self.ring.zero_mon()

    def degrees_in(self, var_indices: Sequence[int]) -> set[int]:
        """Set of total degrees in the given variables across all terms."""
        return {sum(mon[i] for i in var_indices) for mon, _ in self.terms}

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("operands live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        field = self.ring.field
        acc = dict(self.terms)
        for mon, coeff in other.terms:
            c = field.add(acc.get(mon, field.zero), coeff)
            if c:
                acc[mon] = c
            elif mon in acc:
                del acc[mon]
        return Polynomial.from_dict(self.ring, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.neg(c)) for m, c in self.terms))

    def scale(self, value: int | Fraction) -> "Polynomial":
        field = self.ring.field
        c0 = field.of(value)
        if not c0:
            return self.ring.zero()
        return Polynomial(
            self.ring, tuple((m, field.mul(c, c0)) for m, c in self.terms)
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        field = self.ring.field
        p = field.p
        acc: dict = {}
        if p is not None:
            for ma, ca in self.terms:
                for mb, cb in other.terms:
                    mon = tuple(x + y for x, y in zip(ma, mb))
                    acc[mon] = (acc.get(mon, 0) + ca * cb) % p
        else:
            for ma, ca in self.terms:
                for mb, cb in other.terms:
                    mon = tuple(x + y for x, y in zip(ma, mb))
                    acc[mon] = acc.get(mon, 0) + ca * cb
        return Polynomial.from_dict(self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exp: int) -> "Polynomial":
        if not isinstance(exp, int) or exp < 0:
            raise AlgebraError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.terms)))
        return self._hash

    def __setattr__(self, name, value):
        if name in ("ring", "terms") and hasattr(self, "terms"):
            raise AttributeError("Polynomial is immutable")
        object.__setattr__(self, name, value)

    # -- printing ------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mon, coeff in self.terms:
            body = self._term_str(mon, coeff, first=not parts)
            parts.append(body)
        return "".join(parts)

    def _term_str(self, mon: Monomial, coeff: Coefficient, first: bool) -> str:
        names = self.ring.variables
        factors = []
        for i, e in enumerate(mon):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        negative = coeff < 0  # never true over Z/p: residues are in [0, p)
        mag = -coeff if negative else coeff
        if isinstance(mag, Fraction) and mag.denominator == 1:
            mag_str = str(mag.numerator)
        else:
            mag_str = str(mag)
        if factors and mag == self.ring.field.one:
            body = "*".join(factors)
        elif factors:
            body = mag_str + "*" + "*".join(factors)
        else:
            body = mag_str
        if first:
            return ("-" if negative else "") + body
        return (" - " if negative else " + ") + body

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 60:
            s = s[:57] + "..."
        return f"Polynomial({s})"


# -- grammar -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"malformed token at {stripped[:12]!r}")
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    return tokens


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse a signed sum of terms (see the file-format grammar) into ring.

    Terms look like ``3/2*z1^2*z2``, ``-z3``, ``+ 7``; ``*`` after the
    coefficient is optional, ``^`` introduces integer exponents.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    field = ring.field
    acc: dict = {}
    pos = 0
    n = len(tokens)

    def peek(kind: str) -> str | None:
        if pos < n and tokens[pos][0] == kind:
            return tokens[pos][1]
        return None

    first = True
    while pos < n:
        sign = 1
        saw_sign = False
        while pos < n and tokens[pos][0] == "op" and tokens[pos][1] in "+-":
            if tokens[pos][1] == "-":
                sign = -sign
            saw_sign = True
            pos += 1
        if pos >= n:
            raise ParseError("dangling sign at end of polynomial")
        if not first and not saw_sign:
            raise ParseError(f"expected + or - before {tokens[pos][1]!r}")
        first = False

        coeff = field.one
        mon = list(ring.zero_mon())
        saw_factor = False

        if peek("int") is not None:
            num = int(tokens[pos][1])
            pos += 1
            if peek("op") == "/":
                pos += 1
                if peek("int") is None:
                    raise ParseError("expected integer denominator")
                den = int(tokens[pos][1])
                pos += 1
                coeff = field.ratio(num, den)
            else:
                coeff = field.of(num)
            saw_factor = True
            if peek("op") == "*":
                pos += 1
                if peek("name") is None:
                    raise ParseError("expected variable after '*'")

        while peek("name") is not None:
            name = tokens[pos][1]
            pos += 1
            idx = ring.index(name)
            exp = 1
            if peek("op") == "^":
                pos += 1
                if peek("int") is None:
                    raise ParseError(f"expected integer exponent after {name}^")
                exp = int(tokens[pos][1])
                pos += 1
            mon[idx] += exp
            saw_factor = True
            if peek("op") == "*":
                pos += 1
                if peek("name") is None and peek("int") is None:
                    raise ParseError("expected factor after '*'")

        if not saw_factor:
            raise ParseError(f"expected term, found {tokens[pos][1]!r}")

        key = tuple(mon)
        c = field.mul(coeff, field.of(sign))
        total = field.add(acc.get(key, field.zero), c)
        if total:
            acc[key] = total
        elif key in acc:
            del acc[key]

    return Polynomial.from_dict(ring, acc)


_HEADER_RE = re.compile(
    r"^ring\s+(?P<field>Q|F\d+)\s+vars\s+(?P<vars>\S+)\s+order\s+grevlex\s*$"
)


def ring_header(ring: RingSpec) -> str:
    return str(ring)


def parse_ring_header(line: str) -> RingSpec:
    m = _HEADER_RE.match(line.strip())
    if m is None:
        raise ParseError(f"malformed ring header: {line.strip()!r}")
    token = m.group("field")
    field = QQ if token == "Q" else FieldSpec(int(token[1:]))
    names: list[str] = []
    weights: list[int] = []
    for piece in m.group("vars").split(","):
        if ":" not in piece:
            raise ParseError(f"variable entry {piece!r} needs name:weight")
        name, _, w = piece.partition(":")
        if not w.isdigit():
            raise ParseError(f"weight in {piece!r} must be a positive integer")
        names.append(name)
        weights.append(int(w))
    return RingSpec(tuple(names), tuple(weights), field)


# -- structural operations ----------------------------------------------


class AnyDegree:
    """Degree of the zero polynomial: compatible with every grading."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AnyDegree"


ANY_DEGREE = AnyDegree()


@dataclass(frozen=True)
class NotHomogeneous:
    """Weighted degrees present in a polynomial that mixes degrees."""

    degrees: frozenset

    def __repr__(self) -> str:
        return f"NotHomogeneous({sorted(self.degrees)})"


def weighted_degree(p: Polynomial):
    """Weighted degree of p: an int, ANY_DEGREE for 0, else NotHomogeneous."""
    if not p.terms:
        return ANY_DEGREE
    degs = {p.ring.wdeg(mon) for mon, _ in p.terms}
    if len(degs) == 1:
        return degs.pop()
    return NotHomogeneous(frozenset(degs))


def is_homogeneous(p: Polynomial) -> bool:
    return not isinstance(weighted_degree(p), NotHomogeneous)


def partial_derivative(p: Polynomial, name: str) -> Polynomial:
    """Formal partial derivative of p by the named variable."""
    ring = p.ring
    i = ring.index(name)
    field = ring.field
    acc: dict = {}
    for mon, coeff in p.terms:
        e = mon[i]
        if not e:
            continue
        lowered = list(mon)
        lowered[i] = e - 1
        key = tuple(lowered)
        val = field.add(acc.get(key, field.zero), field.mul(coeff, field.of(e)))
        if val:
            acc[key] = val
        elif key in acc:
            del acc[key]
    return Polynomial.from_dict(ring, acc)


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """The unique q with p == q*d, via multivariate division by d alone."""
    if not d:
        raise InexactDivisionError("division by the zero polynomial")
    p._check(d)
    ring = p.ring
    field = ring.field
    lm_d, lc_d = d.leading_term()
    inv_lc = field.inv(lc_d)
    rest = {m: c for m, c in p.terms}
    quotient: dict = {}
    while rest:
        lm = max(rest, key=ring.sort_key)
        q_mon = mon_div(lm, lm_d)
        if q_mon is None:
            raise InexactDivisionError(
                f"leading term {ring.monomial(lm)} not divisible by divisor's"
            )
        q_coeff = field.mul(rest[lm], inv_lc)
        quotient[q_mon] = q_coeff
        for m, c in d.terms:
            mon = mon_mul(q_mon, m)
            val = field.add(rest.get(mon, field.zero), field.neg(field.mul(q_coeff, c)))
            if val:
                rest[mon] = val
            elif mon in rest:
                del rest[mon]
    return Polynomial.from_dict(ring, quotient)


@dataclass(frozen=True)
class Substitution:
    """Total assignment of source variables to target-ring polynomials.

    Variables absent from ``assignments`` default to the same-named
    variable of the target ring; if the target lacks that name the
    substitution is rejected (strict mode is the only mode).
    """

    assignments: Mapping[str, Polynomial]
    graded: bool = False


def substitute(p: Polynomial, sub: Substitution, target: RingSpec | None = None) -> Polynomial:
    """Apply a Substitution to p, landing in target (default: p's ring)."""
    source = p.ring
    if target is None:
        target = source
        for img in sub.assignments.values():
            if img.ring != source:
                target = img.ring
                break
    images: list[Polynomial] = []
    for name in source.variables:
        if name in sub.assignments:
            img = sub.assignments[name]
            if img.ring != target:
                raise SubstitutionError(
                    f"image of {name} lives in {img.ring}, expected {target}"
                )
        else:
            if name not in target._index:
                raise SubstitutionError(
                    f"variable {name} has no assignment and no target counterpart"
                )
            img = target.var(name)
        images.append(img)
    for name in sub.assignments:
        source.index(name)  # reject assignments to unknown variables
    if sub.graded:
        for name, img in zip(source.variables, images):
            d = weighted_degree(img)
            if isinstance(d, NotHomogeneous):
                raise GradingError(f"image of {name} is not homogeneous: {d}")
            w = source.weights[source.index(name)]
            if d is not ANY_DEGREE and d != w:
                raise GradingError(
                    f"image of {name} has weighted degree {d}, expected {w}"
                )

    field = target.field
    simple: list[int] | None = []
    for img in images:
        if len(img) == 1:
            mon, coeff = img.terms[0]
            if coeff == field.one and sum(mon) == 1:
                simple.append(mon.index(1))
                continue
        simple = None
        break

    acc: dict = {}
    if simple is not None:
        # Pure renaming/permutation of variables: remap exponent vectors.
        for mon, coeff in p.terms:
            new = [0] * target.nvars
            for i, e in enumerate(mon):
                if e:
                    new[simple[i]] += e
            key = tuple(new)
            c = field.add(acc.get(key, field.zero), field.coerce(coeff, source.field))
            if c:
                acc[key] = c
            elif key in acc:
                del acc[key]
        return Polynomial.from_dict(target, acc)

    powers: list[list[Polynomial]] = [[target.one(), img] for img in images]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * cache[1])
        return cache[e]

    for mon, coeff in p.terms:
        term = target.const(field.coerce(coeff, source.field))
        for i, e in enumerate(mon):
            if e:
                term = term * power(i, e)
        for m, c in term.terms:
            val = field.add(acc.get(m, field.zero), c)
            if val:
                acc[m] = val
            elif m in acc:
                del acc[m]
    return Polynomial.from_dict(target, acc)


def linear_coefficient_matrix(
    polys: Sequence[Polynomial], block: Sequence[str]
) -> list[list[Polynomial]]:
    """Write each polynomial as sum(coeff_k * block_k); return the coeff rows.

    Every term of every input must contain exactly one block variable,
    with exponent 1, so that the returned coefficients are block-free.
    """
    if not polys:
        return []
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError("coefficient extraction needs a common ring")
    idx = [ring.index(name) for name in block]
    if len(set(idx)) != len(idx):
        raise BlockDegreeError("block variables must be distinct")
    pos_of = {i: k for k, i in enumerate(idx)}
    rows: list[list[Polynomial]] = []
    for p in polys:
        cols: list[dict] = [dict() for _ in block]
        for mon, coeff in p.terms:
            carriers = [(i, mon[i]) for i in idx if mon[i]]
            total = sum(e for _, e in carriers)
            if total != 1:
                raise BlockDegreeError(
                    f"term {ring.monomial(mon)} has block degree {total}, need 1"
                )
            i = carriers[0][0]
            stripped = tuple(e - 1 if j == i else e for j, e in enumerate(mon))
            cols[pos_of[i]][stripped] = coeff
        rows.append([Polynomial.from_dict(ring, col) for col in cols])
    return rows
