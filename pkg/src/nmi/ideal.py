"""Monomials and monomial ideals given by their minimal generating sets.

Exponent vectors are plain tuples of non-negative ints.  A
:class:`MonomialIdeal` keeps its generators minimalized (an antichain under
componentwise ``<=``) and sorted lexicographically, so two ideals are equal
exactly when their dataclass fields are equal.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from .errors import UnsupportedInput

Exponent = Tuple[int, ...]

ZERO = "zero"
UNIT = "unit"
PROPER = "proper"


def divides(u, v) -> bool:
    """``t^u | t^v``, i.e. ``u <= v`` componentwise."""
    return all(a <= b for a, b in zip(u, v))


def degree(a) -> int:
    return sum(a)


def support(a) -> frozenset:
    """1-based indices of the variables occurring in ``t^a``."""
    return frozenset(i + 1 for i, x in enumerate(a) if x > 0)


def minimalize(vectors):
    """The antichain of ``<=``-minimal elements, in lexicographic order."""
    kept = []
    for v in sorted(set(vectors), key=lambda v: (sum(v), v)):
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    gens: Tuple[Exponent, ...]

    @property
    def kind(self) -> str:
        if not self.gens:
            return ZERO
        if len(self.gens) == 1 and not any(self.gens[0]):
            return UNIT
        return PROPER

    @property
    def is_proper(self) -> bool:
        return self.kind == PROPER

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def degrees(self):
        return sorted({sum(g) for g in self.gens})

    def contains(self, a) -> bool:
        """Ordinary membership ``t^a in I``."""
        return any(divides(g, a) for g in self.gens)

    def __str__(self):
        if self.kind == ZERO:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def make_ideal(num_vars: int, raw_gens=()) -> MonomialIdeal:
    """Build the ideal generated by ``raw_gens``, minimalizing on the way.

    An empty generator collection gives the zero ideal; the zero exponent
    gives the unit ideal.
    """
    vecs = []
    for g in raw_gens:
        g = tuple(int(x) for x in g)
        if len(g) != num_vars:
            raise ValueError(f"exponent {g} has length {len(g)}, expected {num_vars}")
        if any(x < 0 for x in g):
            raise ValueError(f"negative exponent in {g}")
        vecs.append(g)
    return MonomialIdeal(num_vars, minimalize(vecs))


def zero_ideal(num_vars):
    return MonomialIdeal(num_vars, ())


def unit_ideal(num_vars):
    return MonomialIdeal(num_vars, ((0,) * num_vars,))


def _require_same_ring(I1, I2):
    if I1.num_vars != I2.num_vars:
        raise ValueError(f"ideals live in {I1.num_vars} and {I2.num_vars} variables")


def _require_proper(I, what):
    if not I.is_proper:
        raise UnsupportedInput(f"{what} needs a proper nonzero ideal, got the {I.kind} ideal")


def incidence_matrix(I: MonomialIdeal):
    """The ``s x q`` integer matrix whose columns are the minimal generators."""
    _require_proper(I, "incidence_matrix")
    return tuple(tuple(g[i] for g in I.gens) for i in range(I.num_vars))


def product(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    _require_same_ring(I1, I2)
    if I1.kind == ZERO or I2.kind == ZERO:
        return zero_ideal(I1.num_vars)
    sums = [tuple(a + b for a, b in zip(g, h)) for g in I1.gens for h in I2.gens]
    return MonomialIdeal(I1.num_vars, minimalize(sums))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    out = unit_ideal(I.num_vars)
    for _ in range(n):
        out = product(out, I)
    return out


def ideal_sum(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    _require_same_ring(I1, I2)
    return MonomialIdeal(I1.num_vars, minimalize(I1.gens + I2.gens))


def intersection(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    _require_same_ring(I1, I2)
    lcms = [tuple(max(a, b) for a, b in zip(g, h)) for g in I1.gens for h in I2.gens]
    return MonomialIdeal(I1.num_vars, minimalize(lcms))


def is_subideal(I1: MonomialIdeal, I2: MonomialIdeal) -> bool:
    """``I1 ⊆ I2``."""
    _require_same_ring(I1, I2)
    return all(I2.contains(g) for g in I1.gens)


def dual_star(I: MonomialIdeal) -> MonomialIdeal:
    """The dual ``I*`` generated by ``t_1...t_s / t_e`` over the generators ``t_e``.

    A generator using every variable yields the unit ideal; the zero ideal is
    its own dual by convention.
    """
    if not I.is_squarefree:
        raise UnsupportedInput("dual_star is defined for squarefree ideals only")
    if I.kind == ZERO:
        return I
    return MonomialIdeal(I.num_vars, minimalize(tuple(1 - x for x in g) for g in I.gens))


def restrict_to_support(I: MonomialIdeal):
    """Drop variables that occur in no generator.

    Returns the smaller ideal and the list of kept (0-based) variable indices.
    """
    used = sorted({i for g in I.gens for i, x in enumerate(g) if x})
    return MonomialIdeal(len(used), tuple(sorted(tuple(g[i] for i in used) for g in I.gens))), used


class Membership(NamedTuple):
    member: bool
    certificate: Optional[Tuple[int, ...]]  # multiplicity of each generator


def power_membership(I: MonomialIdeal, a, n: int) -> Membership:
    """Decide ``t^a in I^n`` by exhaustive multiset search.

    The certificate lists, for each minimal generator (canonical order), how
    many copies are used; their sum is ``<= a`` and they add up to ``n``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a = tuple(int(x) for x in a)
    if len(a) != I.num_vars:
        raise ValueError("exponent length does not match the ideal")
    q = len(I.gens)
    if n == 0:
        return Membership(True, (0,) * q)
    if I.kind == ZERO:
        return Membership(False, None)
    found = find_multiset(I.gens, a, n)
    if found is None:
        return Membership(False, None)
    counts = [0] * q
    for i in found:
        counts[i] += 1
    return Membership(True, tuple(counts))


def find_multiset(gens, a, n):
    """Indices (non-decreasing) of ``n`` vectors from ``gens`` summing to ``<= a``."""
    order = sorted(range(len(gens)), key=lambda i: (-sum(gens[i]), gens[i]))
    vecs = [gens[i] for i in order]
    degs = [sum(v) for v in vecs]
    # suffix minimum of degrees: cheapest generator still available from position k
    min_deg = degs[:]
    for k in range(len(vecs) - 2, -1, -1):
        min_deg[k] = min(min_deg[k], min_deg[k + 1])
    supp = [[j for j, x in enumerate(v) if x] for v in vecs]
    dead = set()

    def search(r, k, start, total):
        if k == 0:
            return []
        key = (r, k, start)
        if key in dead:
            return None
        for idx in range(start, len(vecs)):
            if total < k * min_deg[idx]:
                break
            v = vecs[idx]
            if all(r[j] >= v[j] for j in supp[idx]):
                rest = tuple(x - y for x, y in zip(r, v))
                sub = search(rest, k - 1, idx, total - degs[idx])
                if sub is not None:
                    return [idx] + sub
        dead.add(key)
        return None

    res = search(tuple(a), n, 0, sum(a))
    if res is None:
        return None
    return sorted(order[i] for i in res)


def max_power(I: MonomialIdeal, a) -> int:
    """Largest ``k`` with ``t^a in I^k`` (the integer program behind rounding checks)."""
    if not I.is_proper:
        raise UnsupportedInput("max_power needs a proper ideal")
    k = 0
    while power_membership(I, a, k + 1).member:
        k += 1
    return k


# -- monomial strings -------------------------------------------------------

_FACTOR = re.compile(r"^\s*t(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, num_vars: int) -> Exponent:
    """Parse ``"t1^2*t3"`` (or ``"1"``) into an exponent vector."""
    text = text.strip()
    a = [0] * num_vars
    if text == "1":
        return tuple(a)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"bad monomial factor {factor!r}")
        i = int(m.group(1))
        if not 1 <= i <= num_vars:
            raise ValueError(f"variable t{i} outside t1..t{num_vars}")
        a[i - 1] += int(m.group(2) or 1)
    return tuple(a)


def monomial_str(a) -> str:
    parts = []
    for i, x in enumerate(a):
        if x == 1:
            parts.append(f"t{i + 1}")
        elif x > 1:
            parts.append(f"t{i + 1}^{x}")
    return "*".join(parts) if parts else "1"


def fraction_vector_str(v) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"
