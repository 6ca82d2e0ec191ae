"""Small permutation-group kernel.

Permutations are 0-indexed image tuples.  The stabilizer chain is a
deterministic Schreier--Sims (no randomization) so every derived quantity --
orders, membership, fixator tests, class labels -- is reproducible bit for bit.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "identity",
    "compose",
    "inverse",
    "sign",
    "cycles",
    "perm_from_cycles",
    "StabilizerChain",
    "group_order",
    "group_elements",
    "contains_alternating",
    "pointwise_stabilizer_trivial_on",
    "identify_sym6_class",
]

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x)): apply q first."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its smallest point."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(c))
    return out


def sign(p: Perm) -> int:
    s = 1
    for c in cycles(p):
        if len(c) % 2 == 0:
            s = -s
    return s


def perm_from_cycles(cyc: Iterable[Iterable[int]], n: int, one_indexed: bool = True) -> Perm:
    img = list(range(n))
    for c in cyc:
        c = [x - 1 for x in c] if one_indexed else list(c)
        for i, x in enumerate(c):
            img[x] = c[(i + 1) % len(c)]
    return tuple(img)


class StabilizerChain:
    """Deterministic Schreier--Sims stabilizer chain.

    ``base_hint`` forces an initial base prefix (points stabilized level by
    level in the given order), which makes pointwise-stabilizer questions a
    matter of reading off orbit sizes at the hinted levels.
    """

    def __init__(self, gens: Sequence[Perm], degree: int,
                 base_hint: Sequence[int] = ()):
        self.n = degree
        self.e = identity(degree)
        self.base: list[int] = []
        self.gens_at: list[list[Perm]] = []   # generators of the level stabilizer
        self.trans: list[dict[int, Perm]] = []  # transversal: point -> u, u(base)=point
        for p in base_hint:
            self._new_level(p)
        todo = [tuple(g) for g in gens]
        for g in todo:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
        self._closure(todo)

    # -- construction -------------------------------------------------------

    def _new_level(self, p: int) -> None:
        self.base.append(p)
        self.gens_at.append([])
        self.trans.append({p: self.e})

    def _orbit(self, i: int) -> None:
        tr = {self.base[i]: self.e}
        queue = [self.base[i]]
        while queue:
            x = queue.pop(0)
            u = tr[x]
            for g in self.gens_at[i]:
                y = g[x]
                if y not in tr:
                    tr[y] = compose(g, u)
                    queue.append(y)
        self.trans[i] = tr

    def sift(self, g: Perm) -> tuple[Perm, int]:
        """Reduce g through the chain; returns (residue, level reached)."""
        for i in range(len(self.base)):
            x = g[self.base[i]]
            u = self.trans[i].get(x)
            if u is None:
                return g, i
            g = compose(inverse(u), g)
        return g, len(self.base)

    def _install(self, h: Perm, lev: int) -> None:
        if lev == len(self.base):
            self._new_level(min(x for x in range((self.n)) if h[x] != x))
        for j in range(lev + 1):
            self.gens_at[j].append(h)
            self._orbit(j)

    def _closure(self, gens: list[Perm]) -> None:
        for g in gens:
            h, lev = self.sift(g)
            if h != self.e:
                self._install(h, lev)
        # verify Schreier generators level by level, deepest first
        i = len(self.base) - 1
        while i >= 0:
            bad = self._check_level(i)
            if bad is None:
                i -= 1
            else:
                h, lev = bad
                self._install(h, lev)
                i = lev
        self._strip_trivial_levels()

    def _check_level(self, i: int):
        tr = self.trans[i]
        for x in sorted(tr):
            u = tr[x]
            for g in self.gens_at[i]:
                sg = compose(inverse(tr[g[x]]), compose(g, u))
                if sg == self.e:
                    continue
                h, lev = self.sift(sg)
                if h != self.e:
                    return h, lev
        return None

    def _strip_trivial_levels(self) -> None:
        # drop hinted levels with trivial orbit from the tail only; interior
        # trivial levels are kept so hinted base prefixes stay addressable.
        while self.base and len(self.trans[-1]) == 1 and not self.gens_at[-1]:
            self.base.pop()
            self.gens_at.pop()
            self.trans.pop()

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        o = 1
        for tr in self.trans:
            o *= len(tr)
        return o

    def contains(self, g: Perm) -> bool:
        h, _ = self.sift(tuple(g))
        return h == self.e

    def stabilizer_order_from(self, level: int) -> int:
        """Order of the pointwise stabilizer of base[:level]."""
        o = 1
        for tr in self.trans[level:]:
            o *= len(tr)
        return o


def group_order(gens: Sequence[Perm], degree: int | None = None) -> int:
    """Order of the generated permutation group.

    Uses sympy's Schreier--Sims implementation: the deterministic chain in
    this module is fine for small degrees but far too slow for the ball
    actions on a few hundred points that the classification pipeline needs.
    """
    from sympy.combinatorics import Permutation, PermutationGroup

    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = len(gens[0])
    gens = [g for g in gens if g != identity(degree)]
    if not gens:
        return 1
    return PermutationGroup([Permutation(list(g)) for g in gens]).order()


def group_elements(gens: Sequence[Perm], degree: int,
                   limit: int | None = None) -> frozenset[Perm]:
    """All elements of the generated group by breadth-first closure."""
    gens = [tuple(g) for g in gens]
    e = identity(degree)
    seen = {e}
    queue = [e]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                if limit is not None and len(seen) >= limit:
                    raise ValueError(f"group exceeds element limit {limit}")
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def contains_alternating(gens: Sequence[Perm], d: int) -> bool:
    """True iff the generated subgroup of Sym(d) contains Alt(d).

    The only subgroups of Sym(d) of index at most 2 are Sym(d) and Alt(d),
    so the test is simply order >= d!/2.
    """
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != d:
            raise ValueError(f"generators must act on exactly {d} points")
    if not gens:
        return d <= 2
    return StabilizerChain(gens, d).order() * 2 >= factorial(d)


def pointwise_stabilizer_trivial_on(gens: Sequence[Perm], degree: int,
                                    inner: Sequence[int]) -> bool:
    """Does the pointwise stabilizer of ``inner`` act trivially elsewhere?

    Delegates to sympy's randomized Schreier--Sims machinery: stabilizing
    many points of a large-degree group is far beyond what the deterministic
    chain above handles in reasonable time.
    """
    from sympy.combinatorics import Permutation, PermutationGroup

    gens = [tuple(g) for g in gens if tuple(g) != identity(degree)]
    if not gens:
        return True
    group = PermutationGroup([Permutation(list(g)) for g in gens])
    return group.pointwise_stabilizer(list(inner)).order() == 1


# -- Sym(6) subgroup class identification -----------------------------------

_SYM6_REPS: list[tuple[str, frozenset[Perm]]] | None = None
_SYM6_ALL: list[Perm] | None = None


def _cycle_type_fingerprint(elements: frozenset[Perm]) -> tuple:
    counts: dict[tuple[int, ...], int] = {}
    for g in elements:
        t = tuple(sorted(len(c) for c in cycles(g)))
        counts[t] = counts.get(t, 0) + 1
    return tuple(sorted(counts.items()))


def _sym6_tables():
    global _SYM6_REPS, _SYM6_ALL
    if _SYM6_REPS is None:
        from ._family_tables import SYM6_CLASSES
        reps = []
        for label, gens in SYM6_CLASSES:
            perms = [perm_from_cycles(g, 6) for g in gens]
            reps.append((label, group_elements(perms, 6)))
        _SYM6_REPS = reps
        import itertools
        _SYM6_ALL = [tuple(p) for p in itertools.permutations(range(6))]
    return _SYM6_REPS, _SYM6_ALL


def identify_sym6_class(gens: Sequence[Perm], d: int) -> str:
    """Class label of the generated subgroup among the subgroups of Sym(6).

    Permutations of fewer than 6 points are embedded fixing the extra points.
    Identification is exact: conjugacy against the stored representatives,
    pre-filtered by order and element cycle-type statistics.
    """
    if d > 6:
        raise ValueError("class labels are defined only for d <= 6")
    emb = []
    for g in gens:
        g = tuple(g)
        if len(g) != d:
            raise ValueError("generator degree mismatch")
        emb.append(g + tuple(range(d, 6)))
    elements = group_elements(emb, 6)
    fp = _cycle_type_fingerprint(elements)
    reps, all6 = _sym6_tables()
    for label, repset in reps:
        if len(repset) != len(elements):
            continue
        if _cycle_type_fingerprint(repset) != fp:
            continue
        for t in all6:
            ti = inverse(t)
            if all(compose(t, compose(g, ti)) in repset for g in elements):
                return label
    raise ValueError("subgroup matches no stored Sym(6) class (internal error)")
