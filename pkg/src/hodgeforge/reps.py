"""The formal tensor category of rational torus representations.

Rational representations of the rank-2 torus Res_{Q(i)/Q}Gm are encoded by
their character multisets.  A character (a, b) acts on a point (x, y) as
(x+iy)^a (x-iy)^b and carries Hodge type (a, b); complex conjugation swaps
(a, b) <-> (b, a), and the simple rational objects are exactly the
conjugation orbits.  Everything in this module is pure bookkeeping on
integer pairs; the matrix realizations live elsewhere.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class Character:
    """The character z^a zbar^b; its Hodge type is (a, b)."""

    a: int
    b: int

    @property
    def weight(self) -> int:
        return self.a + self.b

    def swapped(self) -> "Character":
        return Character(self.b, self.a)


@dataclass(frozen=True, order=True)
class SimpleLabel:
    """A conjugation orbit {(p,q), (q,p)}, stored with p >= q.

    The orbit is a 2-dimensional simple object when p > q and the
    1-dimensional norm-power character (the Tate object Q(-p)) when p == q.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < self.q:
            raise ValueError("SimpleLabel requires p >= q; use label() to canonicalize")

    @property
    def weight(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 if self.p == self.q else 2

    def is_tate(self) -> bool:
        return self.p == self.q

    def is_effective(self) -> bool:
        return self.q >= 0

    def characters(self) -> list[tuple[int, int]]:
        if self.p == self.q:
            return [(self.p, self.p)]
        return [(self.p, self.q), (self.q, self.p)]

    def __str__(self):
        if self.p == self.q:
            return f"T({self.p})"
        return f"H({self.p},{self.q})"


def label(p: int, q: int) -> SimpleLabel:
    """Canonical label of the orbit through (p, q)."""
    return SimpleLabel(p, q) if p >= q else SimpleLabel(q, p)


@dataclass(frozen=True)
class HodgeNumbers:
    """Weight k plus the vector (g^{k,0}, ..., g^{0,k}); g[i] = h^{k-i,i}."""

    weight: int
    g: tuple

    def __post_init__(self):
        problems = validate_hodge_vector(self.weight, self.g)
        if problems:
            raise ValueError(problems[0])
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))

    def __getitem__(self, i):
        return self.g[i]

    def total(self) -> int:
        return sum(self.g)

    def __add__(self, other):
        if self.weight != other.weight:
            raise ValueError("cannot add Hodge vectors of different weights")
        return HodgeNumbers(self.weight,
                            tuple(a + b for a, b in zip(self.g, other.g)))


def validate_hodge_vector(weight, g) -> list[str]:
    """All admissibility violations of a raw (weight, vector) pair.

    Returns human-readable messages; an empty list means admissible.
    """
    problems = []
    if not isinstance(weight, int) or weight < 0:
        problems.append(f"weight must be a nonnegative integer, got {weight!r}")
        return problems
    g = list(g)
    if len(g) != weight + 1:
        problems.append(
            f"Hodge vector must have length weight+1 = {weight + 1}, got {len(g)}")
        return problems
    for i, x in enumerate(g):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            problems.append(f"entry g^{weight - i},{i} = {x!r} is not a nonnegative integer")
            return problems
    for i in range(len(g)):
        j = weight - i
        if g[i] != g[j]:
            problems.append(
                f"Hodge symmetry violated: g^{weight - i},{i} = {g[i]} "
                f"but g^{weight - j},{j} = {g[j]}")
            break
    return problems


class RepObject:
    """A finite formal sum of simple objects: a map label -> multiplicity.

    The empty map is the zero object.  Instances are immutable; all
    operations return new objects.
    """

    __slots__ = ("_mult",)

    def __init__(self, mult: dict | None = None):
        clean = {}
        for lab, m in (mult or {}).items():
            if not isinstance(lab, SimpleLabel):
                raise TypeError("multiplicity keys must be SimpleLabel")
            if m < 0:
                raise ValueError("multiplicities must be nonnegative")
            if m:
                clean[lab] = int(m)
        self._mult = clean

    # -- queries ----------------------------------------------------------

    def multiplicity(self, lab: SimpleLabel) -> int:
        return self._mult.get(lab, 0)

    def is_zero(self) -> bool:
        return not self._mult

    def dimension(self) -> int:
        return sum(m * lab.dim for lab, m in self._mult.items())

    def is_pure(self) -> bool:
        weights = {lab.weight for lab in self._mult}
        return len(weights) <= 1

    def weight(self):
        """The common weight, or None for the zero object / mixed sums."""
        weights = {lab.weight for lab in self._mult}
        return weights.pop() if len(weights) == 1 else None

    def is_effective(self) -> bool:
        return all(lab.is_effective() for lab in self._mult)

    def is_irreducible(self) -> bool:
        return len(self._mult) == 1 and next(iter(self._mult.values())) == 1

    def decompose(self) -> list[tuple[SimpleLabel, int]]:
        """Canonical multiplicity list, sorted by (weight, p descending)."""
        return sorted(self._mult.items(), key=lambda kv: (kv[0].weight, -kv[0].p))

    def characters(self) -> Counter:
        """Character multiset of the complexification."""
        out = Counter()
        for lab, m in self._mult.items():
            for ch in lab.characters():
                out[ch] += m
        return out

    # -- category operations ----------------------------------------------

    def direct_sum(self, other: "RepObject") -> "RepObject":
        mult = dict(self._mult)
        for lab, m in other._mult.items():
            mult[lab] = mult.get(lab, 0) + m
        return RepObject(mult)

    __add__ = direct_sum

    def tensor(self, other: "RepObject") -> "RepObject":
        conv = Counter()
        for (a1, b1), m1 in self.characters().items():
            for (a2, b2), m2 in other.characters().items():
                conv[(a1 + a2, b1 + b2)] += m1 * m2
        return _from_characters(conv)

    __mul__ = tensor

    def tate_twist(self, m: int) -> "RepObject":
        return RepObject({label(lab.p + m, lab.q + m): k for lab, k in self._mult.items()})

    def dual(self) -> "RepObject":
        return RepObject({label(-lab.q, -lab.p): k for lab, k in self._mult.items()})

    def sym_power(self, n: int) -> "RepObject":
        return self._plethysm(n, itertools.combinations_with_replacement)

    def ext_power(self, n: int) -> "RepObject":
        """Exterior power; the zero object when n exceeds the dimension."""
        return self._plethysm(n, itertools.combinations)

    def _plethysm(self, n, chooser) -> "RepObject":
        if n < 0:
            raise ValueError("power degree must be nonnegative")
        chars = []
        for ch, m in sorted(self.characters().items()):
            chars.extend([ch] * m)
        out = Counter()
        for combo in chooser(range(len(chars)), n):
            a = sum(chars[i][0] for i in combo)
            b = sum(chars[i][1] for i in combo)
            out[(a, b)] += 1
        return _from_characters(out)

    # -- Hodge-theoretic queries -------------------------------------------

    def hodge_numbers(self) -> HodgeNumbers:
        if self.is_zero():
            raise ValueError("the zero object has no Hodge numbers")
        if not self.is_pure():
            raise ValueError("Hodge numbers require a pure object")
        if not self.is_effective():
            raise ValueError("Hodge numbers require an effective object")
        k = self.weight()
        g = [0] * (k + 1)
        for (a, b), m in self.characters().items():
            g[b] += m
        return HodgeNumbers(k, tuple(g))

    def level(self) -> int:
        if self.is_zero():
            raise ValueError("the zero object has no level")
        if not self.is_pure():
            raise ValueError("level requires a pure object")
        if not self.is_effective():
            raise ValueError("level requires an effective object")
        return max(lab.p - lab.q for lab in self._mult)

    def end_algebra_dim(self) -> int:
        """Dimension over Q of the endomorphism algebra.

        Each isotypic block of multiplicity m contributes m^2 * dim_Q(End),
        and End of a simple is Q(i) for p > q, Q for the norm characters.
        """
        return sum(m * m * (2 if lab.p > lab.q else 1)
                   for lab, m in self._mult.items())

    def classify_two_dimensional(self) -> "Classification":
        return classify_two_dimensional(self)

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RepObject):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(frozenset(self._mult.items()))

    def __repr__(self):
        if self.is_zero():
            return "RepObject(0)"
        parts = [f"{lab}" + (f"^{m}" if m > 1 else "")
                 for lab, m in self.decompose()]
        return "RepObject(" + " + ".join(parts) + ")"

    def to_records(self) -> list[dict]:
        """Serialize as the sorted list of {p, q, mult} records."""
        return [{"p": lab.p, "q": lab.q, "mult": m} for lab, m in self.decompose()]

    @classmethod
    def from_records(cls, records) -> "RepObject":
        mult = {}
        for rec in records:
            lab = label(int(rec["p"]), int(rec["q"]))
            mult[lab] = mult.get(lab, 0) + int(rec["mult"])
        return cls(mult)


def _from_characters(counter: Counter) -> RepObject:
    """Regroup a conjugation-symmetric character multiset into orbits."""
    mult = {}
    for (a, b), m in counter.items():
        if m == 0:
            continue
        if a < b:
            continue
        if a > b and counter[(b, a)] != m:
            raise AssertionError(
                f"character multiset not conjugation-symmetric at {(a, b)}")
        mult[SimpleLabel(a, b)] = m
    return RepObject(mult)


def simple(p: int, q: int) -> RepObject:
    """The simple object with label (p, q) (canonicalized), multiplicity 1."""
    return RepObject({label(p, q): 1})


def zero() -> RepObject:
    return RepObject({})


def unit() -> RepObject:
    return simple(0, 0)


def tate(m: int) -> RepObject:
    """Q(-m), the 1-dimensional object of type (m, m)."""
    return simple(m, m)


def standard() -> RepObject:
    """V = H^1 of the base curve: the simple of type {(1,0), (0,1)}."""
    return simple(1, 0)


def simple_hodge_vector(lab: SimpleLabel, k: int) -> list[int]:
    """Contribution of one copy of lab to a weight-k Hodge vector."""
    if lab.weight != k:
        raise ValueError(f"label {lab} does not have weight {k}")
    g = [0] * (k + 1)
    for (_, b) in lab.characters():
        g[b] += 1
    return g


# -- 2-dimensional classification ------------------------------------------

class ClassKind(Enum):
    IRREDUCIBLE_H = "IRREDUCIBLE_H"
    REDUCIBLE_TATE_SUM = "REDUCIBLE_TATE_SUM"


@dataclass(frozen=True)
class Classification:
    """Outcome for a 2-dimensional pure effective object.

    Irreducible objects are the H(p,q); when the level p-q is 1 the object
    is a Tate twist of the weight-1 structure of an elliptic curve, flagged
    LEVEL_ONE_ELLIPTIC with its twist.  The reducible case is a sum of two
    equal Tate objects.
    """

    kind: ClassKind
    p: int | None = None
    q: int | None = None
    level: int = 0
    elliptic: bool = False
    twist: int | None = None

    def tag(self) -> str:
        if self.kind is ClassKind.REDUCIBLE_TATE_SUM:
            return "REDUCIBLE_TATE_SUM"
        if self.elliptic:
            return "LEVEL_ONE_ELLIPTIC"
        return f"IRREDUCIBLE_H({self.p},{self.q})"


def classify_two_dimensional(obj: RepObject) -> Classification:
    if not obj.is_pure():
        raise ValueError("classification requires a pure object")
    if not obj.is_effective():
        raise ValueError("classification requires an effective object")
    if obj.dimension() != 2:
        raise ValueError(f"classification requires dimension 2, got {obj.dimension()}")
    [(lab, m)] = obj.decompose()
    if lab.is_tate():
        # necessarily two copies of the same Q(-m)
        return Classification(ClassKind.REDUCIBLE_TATE_SUM, p=lab.p, q=lab.q,
                              level=0)
    lvl = lab.p - lab.q
    return Classification(ClassKind.IRREDUCIBLE_H, p=lab.p, q=lab.q, level=lvl,
                          elliptic=(lvl == 1), twist=lab.q if lvl == 1 else None)
