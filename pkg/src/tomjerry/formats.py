"""Skew-symmetric matrices, pfaffians, and the Tom/Jerry format calculus.

A 5x5 skew matrix over a polynomial ring has five maximal pfaffians;
Tom_i and Jerry_ij constrain which entries must lie in a fixed ideal
generated by four variables.  Triples of formats are classified up to
simultaneous row/column permutation, and the constraint table of a
triple is the intersection of the three single-format tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .ring import (
    QQ,
    AlgebraError,
    ParseError,
    Polynomial,
    RingSpec,
    Substitution,
    parse_poly,
    parse_ring_header,
    ring_header,
    substitute,
)


class FormatError(AlgebraError):
    pass


class SkewMatrix:
    """Skew-symmetric matrix: upper-triangle entries, 1-indexed."""

    def __init__(self, ring: RingSpec, size: int, entries: Mapping[tuple, Polynomial]):
        if size < 2:
            raise FormatError("skew matrix needs size >= 2")
        self.ring = ring
        self.size = size
        self.entries: dict[tuple, Polynomial] = {}
        for (i, j), p in entries.items():
            if not (1 <= i < j <= size):
                raise FormatError(f"entry position ({i},{j}) outside upper triangle")
            if p.ring != ring:
                raise FormatError(f"entry ({i},{j}) lives in a different ring")
            if p:
                self.entries[(i, j)] = p

    def entry(self, i: int, j: int) -> Polynomial:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise FormatError(f"position ({i},{j}) out of range")
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.entries.get((i, j), self.ring.zero())
        return -self.entries.get((j, i), self.ring.zero())

    def substitute(self, sub: Substitution, target: RingSpec | None = None) -> "SkewMatrix":
        new = {}
        tgt = target
        for pos, p in self.entries.items():
            q = substitute(p, sub, target)
            tgt = q.ring
            new[pos] = q
        if tgt is None:
            raise FormatError("cannot infer target ring for an empty matrix")
        return SkewMatrix(tgt, self.size, new)

    def conjugate(self, sigma: Sequence[int]) -> "SkewMatrix":
        """P M P^t for the permutation matrix P with new[i][j] = old[sigma_i][sigma_j].

        sigma is 1-indexed: a tuple of length size listing where each new
        index reads from.  Skewness is preserved; entries pick up signs
        when sigma reverses the order of an index pair.
        """
        if sorted(sigma) != list(range(1, self.size + 1)):
            raise FormatError(f"{sigma} is not a permutation of 1..{self.size}")
        new = {}
        for i in range(1, self.size + 1):
            for j in range(i + 1, self.size + 1):
                p = self.entry(sigma[i - 1], sigma[j - 1])
                if p:
                    new[(i, j)] = p
        return SkewMatrix(self.ring, self.size, new)

    def pfaffian(self) -> Polynomial:
        """Pfaffian by recursive first-row expansion with alternating signs."""
        if self.size % 2:
            raise FormatError("pfaffian needs an even-size matrix")
        return self._pf(tuple(range(1, self.size + 1)), {})

    def _pf(self, idx: tuple, memo: dict) -> Polynomial:
        if not idx:
            return self.ring.one()
        got = memo.get(idx)
        if got is not None:
            return got
        first = idx[0]
        acc = self.ring.zero()
        for pos in range(1, len(idx)):
            e = self.entry(first, idx[pos])
            if not e:
                continue
            rest = idx[1:pos] + idx[pos + 1 :]
            term = e * self._pf(rest, memo)
            # column k = pos+1 in the current submatrix, sign (-1)^k
            acc = acc + term if pos % 2 == 1 else acc - term
        memo[idx] = acc
        return acc

    def maximal_pfaffians(self) -> list[Polynomial]:
        """The five pfaffians Pf(M_1)..Pf(M_5) of a 5x5 skew matrix,
        M_i deleting row and column i."""
        if self.size != 5:
            raise FormatError("maximal pfaffians are defined here for size 5")
        memo: dict = {}
        out = []
        for i in range(1, 6):
            idx = tuple(k for k in range(1, 6) if k != i)
            out.append(self._pf(idx, memo))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewMatrix)
            and self.ring == other.ring
            and self.size == other.size
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SkewMatrix(size={self.size}, {len(self.entries)} nonzero entries)"


@dataclass(frozen=True)
class VariableCI:
    """Ideal generated by four distinct ring variables (codimension 4)."""

    names: tuple[str, str, str, str]

    def __post_init__(self) -> None:
        if len(set(self.names)) != 4:
            raise FormatError(f"need 4 distinct variables, got {self.names}")

    def indices(self, ring: RingSpec) -> tuple[int, ...]:
        return tuple(ring.index(n) for n in self.names)

    def generators(self, ring: RingSpec) -> list[Polynomial]:
        return [ring.var(n) for n in self.names]


def lies_in_variable_ideal(p: Polynomial, var_indices: Sequence[int]) -> bool:
    """Membership in an ideal of variables: every term must contain one."""
    return all(any(mon[i] for i in var_indices) for mon, _ in p.terms)


@dataclass(frozen=True)
class FormatKind:
    """tom with one distinguished index, or jerry with two."""

    kind: str  # "tom" | "jerry"
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind == "tom":
            if len(self.indices) != 1 or not 1 <= self.indices[0] <= 5:
                raise FormatError(f"tom takes one index in 1..5, got {self.indices}")
        elif self.kind == "jerry":
            if (
                len(self.indices) != 2
                or not 1 <= self.indices[0] < self.indices[1] <= 5
            ):
                raise FormatError(f"jerry takes i<j in 1..5, got {self.indices}")
        else:
            raise FormatError(f"unknown format kind {self.kind!r}")

    def constrained_positions(self) -> frozenset:
        """Upper-triangle positions whose entry must lie in the ideal."""
        out = []
        for k, l in combinations(range(1, 6), 2):
            if self.kind == "tom":
                i = self.indices[0]
                if k != i and l != i:
                    out.append((k, l))
            else:
                i, j = self.indices
                if k in (i, j) or l in (i, j):
                    out.append((k, l))
        return frozenset(out)

    def relabel(self, image: Mapping[int, int]) -> "FormatKind":
        idx = tuple(sorted(image[i] for i in self.indices))
        return FormatKind(self.kind, idx)

    def __str__(self) -> str:
        return self.kind + "".join(str(i) for i in self.indices)


_FORMAT_RE = re.compile(r"^(tom|jerry)(\d)(\d)?$")


def parse_format(text: str) -> FormatKind:
    m = _FORMAT_RE.match(text.strip().lower())
    if m is None:
        raise FormatError(f"cannot parse format {text!r} (want tom3 or jerry25)")
    digits = tuple(int(d) for d in m.groups()[1:] if d is not None)
    return FormatKind(m.group(1), digits)


@dataclass(frozen=True)
class FormatReport:
    ok: bool
    violations: tuple[tuple, ...]  # positions whose entry escapes the ideal


def format_check(matrix: SkewMatrix, ideal: VariableCI, fmt: FormatKind) -> FormatReport:
    """Does the matrix satisfy the format's membership constraints for the ideal?"""
    if matrix.size != 5:
        raise FormatError("format checks apply to 5x5 matrices")
    idx = ideal.indices(matrix.ring)
    bad = []
    for pos in sorted(fmt.constrained_positions()):
        if not lies_in_variable_ideal(matrix.entry(*pos), idx):
            bad.append(pos)
    return FormatReport(not bad, tuple(bad))


@dataclass(frozen=True)
class TripleFormatSpec:
    """Three formats with the per-position intersection of their constraints.

    table maps each constrained position to the subset of {0,1,2} of
    formats that force membership there.
    """

    formats: tuple[FormatKind, FormatKind, FormatKind]
    table: Mapping[tuple, frozenset]

    def positions_for(self, member: int) -> frozenset:
        return frozenset(pos for pos, who in self.table.items() if member in who)


def triple_constraints(formats: Sequence[FormatKind]) -> TripleFormatSpec:
    if len(formats) != 3:
        raise FormatError("a triple takes exactly three formats")
    table: dict[tuple, frozenset] = {}
    for pos in combinations(range(1, 6), 2):
        who = frozenset(
            k for k, f in enumerate(formats) if pos in f.constrained_positions()
        )
        if who:
            table[pos] = who
    return TripleFormatSpec(tuple(formats), table)


def triple_format_check(
    matrix: SkewMatrix, ideals: Sequence[VariableCI], formats: Sequence[FormatKind]
) -> list[FormatReport]:
    """Check each format of a triple against its own variable ideal."""
    if len(ideals) != len(formats):
        raise FormatError("one ideal per format required")
    return [format_check(matrix, ideal, fmt) for ideal, fmt in zip(ideals, formats)]


# -- classification up to simultaneous permutation -------------------------


@dataclass(frozen=True)
class OrbitClass:
    case: str
    representative: tuple[FormatKind, ...]  # lexicographically least member
    size: int
    members: frozenset  # canonical encodings of every member

    def contains(self, formats: Sequence[FormatKind]) -> bool:
        return _encode(self.case, tuple(formats)) in self.members


def _encode(case: str, formats: tuple[FormatKind, ...]):
    toms = tuple(sorted(f.indices[0] for f in formats if f.kind == "tom"))
    jerries = tuple(sorted(f.indices for f in formats if f.kind == "jerry"))
    expected = {"TTT": (3, 0), "JJJ": (0, 3), "TTJ": (2, 1), "TJJ": (1, 2)}[case]
    if (len(toms), len(jerries)) != expected:
        raise FormatError(f"{[str(f) for f in formats]} does not match case {case}")
    if len(set(jerries)) != len(jerries) or len(set(toms)) != len(toms):
        raise FormatError("formats in a triple must be pairwise distinct")
    return (toms, jerries)


def _decode(obj) -> tuple[FormatKind, ...]:
    toms, jerries = obj
    return tuple(
        [FormatKind("tom", (i,)) for i in toms]
        + [FormatKind("jerry", pair) for pair in jerries]
    )


def _all_objects(case: str):
    if case == "TTT":
        return [(tuple(c), ()) for c in combinations(range(1, 6), 3)]
    if case == "JJJ":
        pairs = list(combinations(range(1, 6), 2))
        return [((), tuple(sorted(c))) for c in combinations(pairs, 3)]
    if case == "TTJ":
        pairs = list(combinations(range(1, 6), 2))
        return [
            (tuple(tt), (p,)) for tt in combinations(range(1, 6), 2) for p in pairs
        ]
    if case == "TJJ":
        pairs = list(combinations(range(1, 6), 2))
        return [
            ((t,), tuple(sorted(c)))
            for t in range(1, 6)
            for c in combinations(pairs, 2)
        ]
    raise FormatError(f"unknown case {case!r} (want TTT, JJJ, TTJ or TJJ)")


def _act(perm: Sequence[int], obj):
    # perm maps old index i to perm[i-1]
    toms, jerries = obj
    new_toms = tuple(sorted(perm[i - 1] for i in toms))
    new_jerries = tuple(
        sorted(tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in jerries)
    )
    return (new_toms, new_jerries)


def enumerate_triple_classes(case: str) -> list[OrbitClass]:
    """Orbits of format triples under simultaneous index permutation.

    Returns one OrbitClass per orbit, ordered by representative; orbit
    sizes sum to the number of triples of the case.
    """
    objects = _all_objects(case)
    perms = list(permutations(range(1, 6)))
    seen: set = set()
    classes: list[OrbitClass] = []
    for obj in sorted(objects):
        if obj in seen:
            continue
        orbit = {_act(p, obj) for p in perms}
        seen |= orbit
        rep = min(orbit)
        classes.append(
            OrbitClass(case, _decode(rep), len(orbit), frozenset(orbit))
        )
    classes.sort(key=lambda c: min(c.members))
    return classes


# -- the Tom(1,2,3) matrix of the triple-unprojection construction ---------

# entry -> list of (coefficient index, z variable); all three formats at once:
# Tom_1 in J1=(z2,z3,z5,z7), Tom_2 in J2=(z1,z2,z4,z5), Tom_3 in J3=(z1,z2,z3,z6)
TOM123_ENTRIES: dict[tuple, tuple] = {
    (1, 2): ((1, "z1"), (2, "z2"), (3, "z3"), (4, "z6")),
    (1, 3): ((5, "z1"), (6, "z2"), (7, "z4"), (8, "z5")),
    (1, 4): ((9, "z1"), (10, "z2")),
    (1, 5): ((11, "z1"), (12, "z2")),
    (2, 3): ((13, "z2"), (14, "z3"), (15, "z5"), (16, "z7")),
    (2, 4): ((17, "z2"), (18, "z3")),
    (2, 5): ((19, "z2"), (20, "z3")),
    (3, 4): ((21, "z2"), (22, "z5")),
    (3, 5): ((23, "z2"), (24, "z5")),
    (4, 5): ((25, "z2"),),
}

TOM123_IDEALS = (
    VariableCI(("z2", "z3", "z5", "z7")),
    VariableCI(("z1", "z2", "z4", "z5")),
    VariableCI(("z1", "z2", "z3", "z6")),
)

TOM123_FORMATS = (
    FormatKind("tom", (1,)),
    FormatKind("tom", (2,)),
    FormatKind("tom", (3,)),
)


def tom123_ring(field=QQ) -> RingSpec:
    """The 32-variable working ring k[z1..z7, c1..c25], all weights 1."""
    names = tuple(f"z{i}" for i in range(1, 8)) + tuple(f"c{i}" for i in range(1, 26))
    return RingSpec(names, (1,) * len(names), field)


def build_tom123(ring: RingSpec) -> tuple[SkewMatrix, tuple[VariableCI, ...]]:
    """The generic matrix satisfying Tom_1, Tom_2 and Tom_3 simultaneously.

    The ring must contain z1..z7 and c1..c25 (extra variables are fine).
    """
    entries = {}
    for pos, combo in TOM123_ENTRIES.items():
        acc = ring.zero()
        for ci, zname in combo:
            acc = acc + ring.var(f"c{ci}") * ring.var(zname)
        entries[pos] = acc
    return SkewMatrix(ring, 5, entries), TOM123_IDEALS


# -- matrix files -----------------------------------------------------------


def read_matrix_file(path: str | Path) -> SkewMatrix:
    """Matrix file: ring header, then "skew N", then "i j <polynomial>" lines."""
    lines = Path(path).read_text().splitlines()
    ring: RingSpec | None = None
    size: int | None = None
    entries: dict[tuple, Polynomial] = {}
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if ring is None:
            ring = parse_ring_header(text)
            continue
        if size is None:
            parts = text.split()
            if len(parts) != 2 or parts[0] != "skew" or not parts[1].isdigit():
                raise ParseError(f"{path}: expected 'skew N', got {text!r}")
            size = int(parts[1])
            continue
        m = re.match(r"^(\d+)\s+(\d+)\s+(.*)$", text)
        if m is None:
            raise ParseError(f"{path}: malformed entry line {text!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if (i, j) in entries:
            raise ParseError(f"{path}: duplicate entry ({i},{j})")
        entries[(i, j)] = parse_poly(m.group(3), ring)
    if ring is None or size is None:
        raise ParseError(f"{path}: missing ring header or skew size line")
    return SkewMatrix(ring, size, entries)


def write_matrix_file(
    path: str | Path, matrix: SkewMatrix, *, comments: Iterable[str] = ()
) -> None:
    lines = [f"# {c}" for c in comments]
    lines.append(ring_header(matrix.ring))
    lines.append(f"skew {matrix.size}")
    for (i, j) in sorted(matrix.entries):
        lines.append(f"{i} {j} {matrix.entries[(i, j)]}")
    Path(path).write_text("\n".join(lines) + "\n")
