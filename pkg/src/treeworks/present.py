"""Presentations, coset enumeration, and the named example families.

A datum presents its group on the letters of both alphabets with one relator
per geometric square (plus the implicit inversion pairing, and x^2 = 1 for the
self-inverse letters).  Coset enumeration over that presentation computes the
order of finite quotients, which is how virtual-simplicity indices are
certified: kill a relator known to lie in the finite-residual subgroup and
measure the quotient.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .datum import DatumError, DatumSpec, Quad, validate

__all__ = [
    "Presentation",
    "LimitExceeded",
    "QuotientReport",
    "parse_word",
    "word_inverse",
    "presentation_of",
    "coset_enumerate",
    "quotient_report",
    "simple_index",
    "GAMMA45_WITNESSES",
    "named_family",
    "gamma44",
    "gamma33",
    "gamma66",
    "gamma45",
    "gamma_2n2n1",
    "gamma_64n",
]

# A word is a tuple of (side, oriented index) pairs, side in {"a", "b"}.
Syllable = tuple[str, int]
GroupWord = tuple[Syllable, ...]


class LimitExceeded(Exception):
    """Coset limit reached before the table closed (never a wrong answer)."""


# -- words -------------------------------------------------------------------

def word_inverse(datum: DatumSpec, word: Sequence[Syllable]) -> GroupWord:
    out = []
    for side, idx in reversed(word):
        inv = datum.inv_a if side == "a" else datum.inv_b
        out.append((side, inv[idx]))
    return tuple(out)


def parse_word(datum: DatumSpec, text: str) -> GroupWord:
    """Parse a whitespace-separated word; ``[w1,w2]`` expands to a commutator."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            elif ch == "," and depth == 1:
                w1 = parse_word(datum, text[1:i])
                w2 = parse_word(datum, text[i + 1:-1])
                return (w1 + w2 + word_inverse(datum, w1)
                        + word_inverse(datum, w2))
        raise DatumError(f"malformed commutator {text!r}")
    word: list[Syllable] = []
    for token in text.split():
        base = token
        invert = False
        power = 1
        if "^" in base:
            base, exp = base.split("^", 1)
            if exp == "-1":
                invert = True
            elif exp.isdigit():
                power = int(exp)
            else:
                raise DatumError(f"bad exponent in token {token!r}")
        side = base[:1]
        if side not in ("a", "b") or not base[1:].isdigit():
            raise DatumError(f"bad letter token {token!r}")
        idx = int(base[1:])
        d = datum.d1 if side == "a" else datum.d2
        if not 1 <= idx <= d:
            raise DatumError(f"letter index out of range in {token!r}")
        if invert:
            inv = datum.inv_a if side == "a" else datum.inv_b
            idx = inv[idx]
        word.extend([(side, idx)] * power)
    return tuple(word)


# -- presentations -----------------------------------------------------------

@dataclass
class Presentation:
    """Column-indexed presentation ready for coset enumeration.

    One column per oriented letter; the inverse column of a letter is the
    column of its inverse letter, so self-inverse letters are involutions by
    construction and x x^-1 = 1 needs no explicit relator.
    """

    datum: DatumSpec
    ncols: int
    invcol: tuple[int, ...]
    colnames: tuple[str, ...]
    relators: list[tuple[int, ...]]

    def column(self, s: Syllable) -> int:
        side, idx = s
        return idx - 1 if side == "a" else self.datum.d1 + idx - 1

    def word_cols(self, word: Sequence[Syllable]) -> tuple[int, ...]:
        return tuple(self.column(s) for s in word)


def presentation_of(datum: DatumSpec,
                    extra_relators: Sequence[str | Sequence[Syllable]] = ()) -> Presentation:
    """The presentation on both alphabets with one relator per geometric square."""
    d1, d2 = datum.d1, datum.d2
    ncols = d1 + d2
    invcol = tuple([datum.inv_a[i] - 1 for i in range(1, d1 + 1)]
                   + [d1 + datum.inv_b[i] - 1 for i in range(1, d2 + 1)])
    names = tuple([f"a{i}" for i in range(1, d1 + 1)]
                  + [f"b{i}" for i in range(1, d2 + 1)])
    pres = Presentation(datum, ncols, invcol, names, [])
    for orbit in datum.geometric_squares():
        q = min(orbit)
        pres.relators.append(pres.word_cols(
            (("a", q.a), ("b", q.b), ("a", q.ap), ("b", q.bp))))
    for rel in extra_relators:
        word = parse_word(datum, rel) if isinstance(rel, str) else tuple(rel)
        pres.relators.append(pres.word_cols(word))
    return pres


# -- Todd-Coxeter ------------------------------------------------------------

class _Table:
    def __init__(self, ncols: int, invcol: Sequence[int], max_cosets: int):
        self.ncols = ncols
        self.invcol = list(invcol)
        self.max_cosets = max_cosets
        self.rows: list[list[int | None]] = [[None] * ncols]
        self.p = [0]
        self.live = 1
        self.deductions: deque[tuple[int, int]] = deque()

    def rep(self, a: int) -> int:
        r = a
        while self.p[r] != r:
            r = self.p[r]
        while self.p[a] != r:
            self.p[a], a = r, self.p[a]
        return r

    def alive(self, a: int) -> bool:
        return self.p[a] == a

    def define(self, a: int, x: int) -> int:
        if self.live >= self.max_cosets:
            raise LimitExceeded(f"coset limit {self.max_cosets} exceeded")
        b = len(self.rows)
        self.rows.append([None] * self.ncols)
        self.p.append(b)
        self.live += 1
        self.rows[a][x] = b
        self.rows[b][self.invcol[x]] = a
        self.deductions.append((a, x))
        return b

    def _merge(self, a: int, b: int, queue: deque) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.p[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: deque[int] = deque()
        self._merge(a, b, queue)
        while queue:
            e = queue.popleft()
            for x in range(self.ncols):
                f = self.rows[e][x]
                if f is None:
                    continue
                # detach the inverse arrow before transferring
                self.rows[f][self.invcol[x]] = None
                e1, f1 = self.rep(e), self.rep(f)
                t = self.rows[e1][x]
                if t is not None:
                    self._merge(f1, t, queue)
                else:
                    t = self.rows[f1][self.invcol[x]]
                    if t is not None:
                        self._merge(e1, t, queue)
                    else:
                        self.rows[e1][x] = f1
                        self.rows[f1][self.invcol[x]] = e1
                        self.deductions.append((e1, x))

    def scan_and_fill(self, a: int, word: Sequence[int]) -> None:
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j and self.rows[f][word[i]] is not None:
                f = self.rows[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.rows[b][self.invcol[word[j]]] is not None:
                b = self.rows[b][self.invcol[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.rows[f][word[i]] = b
                self.rows[b][self.invcol[word[i]]] = f
                self.deductions.append((f, word[i]))
                return
            self.define(f, word[i])

    def scan(self, a: int, word: Sequence[int]) -> None:
        """Like scan_and_fill, but never defines new cosets (lookahead)."""
        f, i = a, 0
        b, j = a, len(word) - 1
        while i <= j and self.rows[f][word[i]] is not None:
            f = self.rows[f][word[i]]
            i += 1
        if i > j:
            if f != b:
                self.coincidence(f, b)
            return
        while j >= i and self.rows[b][self.invcol[word[j]]] is not None:
            b = self.rows[b][self.invcol[word[j]]]
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif j == i:
            self.rows[f][word[i]] = b
            self.rows[b][self.invcol[word[i]]] = f
            self.deductions.append((f, word[i]))


def coset_enumerate(pres: Presentation,
                    subgroup_gens: Sequence[str | Sequence[Syllable]] = (),
                    max_cosets: int = 10 ** 6,
                    _return_table: bool = False):
    """Index of the subgroup in the presented group, by coset enumeration.

    Relator-scanning style with immediate deduction processing: every live
    coset is scanned through every relator (defining cosets as needed), and
    every new table entry is then scanned through all relator rotations
    passing through it, so collapses propagate without flooding the table
    first.  Returns the exact index when the table closes; raises
    LimitExceeded otherwise.  Deterministic coset numbering, so results are
    reproducible.
    """
    ncols = pres.ncols
    invcol = list(pres.invcol)
    relators = [tuple(r) for r in pres.relators]
    # rotations[x] = cyclic rotations, starting with column x, of every
    # relator and every inverse relator
    rotations: list[list[tuple[int, ...]]] = [[] for _ in range(ncols)]
    seen = set()
    for rel in relators:
        inv_rel = tuple(invcol[x] for x in reversed(rel))
        for word in (rel, inv_rel):
            for i, x in enumerate(word):
                rot = word[i:] + word[:i]
                if rot not in seen:
                    seen.add(rot)
                    rotations[x].append(rot)

    rows: list[list[int]] = [[-1] * ncols]
    p = [0]
    live = 1
    # deduction stack; entries are e * ncols + x to avoid tuple churn
    dstack = deque()

    def rep(a: int) -> int:
        r = a
        while p[r] != r:
            r = p[r]
        while p[a] != r:
            p[a], a = r, p[a]
        return r

    def coincidence(a: int, b: int) -> None:
        nonlocal live
        queue: deque[int] = deque()
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        p[b] = a
        live -= 1
        queue.append(b)
        while queue:
            e = queue.popleft()
            re = rows[e]
            for x in range(ncols):
                f = re[x]
                if f < 0:
                    continue
                if rows[f][invcol[x]] == e:
                    rows[f][invcol[x]] = -1
                e1, f1 = rep(e), rep(f)
                t = rows[e1][x]
                if t >= 0:
                    t, f1 = rep(t), rep(f1)
                    if t != f1:
                        if f1 > t:
                            f1, t = t, f1
                        p[t] = f1
                        live -= 1
                        queue.append(t)
                else:
                    t = rows[f1][invcol[x]]
                    if t >= 0:
                        t, e1 = rep(t), rep(e1)
                        if t != e1:
                            if e1 > t:
                                e1, t = t, e1
                            p[t] = e1
                            live -= 1
                            queue.append(t)
                    else:
                        rows[e1][x] = f1
                        rows[f1][invcol[x]] = e1
                        dstack.append(e1 * ncols + x)

    def scan_fill(a: int, word: tuple[int, ...]) -> None:
        nonlocal live
        f, i = a, 0
        b, j = a, len(word) - 1
        while True:
            while i <= j:
                t = rows[f][word[i]]
                if t < 0:
                    break
                f = t
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                t = rows[b][invcol[word[j]]]
                if t < 0:
                    break
                b = t
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            x = word[i]
            if j == i:
                rows[f][x] = b
                rows[b][invcol[x]] = f
                dstack.append(f * ncols + x)
                return
            if live >= max_cosets:
                raise LimitExceeded(f"coset limit {max_cosets} exceeded")
            c = len(rows)
            rows.append([-1] * ncols)
            p.append(c)
            live += 1
            rows[f][x] = c
            rows[c][invcol[x]] = f
            dstack.append(f * ncols + x)

    def drain() -> None:
        # process deductions, scanning every relator rotation through the new
        # edge; the scan loop is written out inline since it dominates runtime
        while dstack:
            d = dstack.popleft()
            e, x0 = divmod(d, ncols)
            if p[e] != e or rows[e][x0] < 0:
                continue
            for word in rotations[x0]:
                if p[e] != e:
                    break
                f, i = e, 0
                b, j = e, len(word) - 1
                while i <= j:
                    t = rows[f][word[i]]
                    if t < 0:
                        break
                    f = t
                    i += 1
                if i > j:
                    if f != b:
                        coincidence(f, b)
                    continue
                while j >= i:
                    t = rows[b][invcol[word[j]]]
                    if t < 0:
                        break
                    b = t
                    j -= 1
                if j < i:
                    coincidence(f, b)
                elif j == i:
                    x = word[i]
                    rows[f][x] = b
                    rows[b][invcol[x]] = f
                    dstack.append(f * ncols + x)

    for sg in subgroup_gens:
        word = parse_word(pres.datum, sg) if isinstance(sg, str) else tuple(sg)
        scan_fill(0, pres.word_cols(word))
        drain()
    a = 0
    while a < len(rows):
        if p[a] == a:
            for rel in relators:
                if p[a] != a:
                    break
                scan_fill(a, rel)
                drain()
            if p[a] == a:
                ra = rows[a]
                for x in range(ncols):
                    if ra[x] < 0:
                        if live >= max_cosets:
                            raise LimitExceeded(
                                f"coset limit {max_cosets} exceeded")
                        c = len(rows)
                        rows.append([-1] * ncols)
                        p.append(c)
                        live += 1
                        ra[x] = c
                        rows[c][invcol[x]] = a
                        dstack.append(a * ncols + x)
                        drain()
        a += 1
    if _return_table:
        table = _Table(ncols, invcol, max_cosets)
        table.rows = rows
        table.p = p
        table.live = live
        return live, table
    return live


# -- quotient structure ------------------------------------------------------

def _smith_invariants(rows: list[list[int]], nvars: int) -> list[int]:
    """Nontrivial invariant factors of the integer matrix (0 denotes Z)."""
    m = [list(r) for r in rows]
    invariants = []
    r = 0
    cols = list(range(nvars))
    while r < len(m) and cols:
        # find a nonzero entry of least absolute value
        best = None
        for i in range(r, len(m)):
            for jj, j in enumerate(cols):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, jj, v)
        if best is None:
            break
        i0, jj0, _ = best
        j0 = cols[jj0]
        m[r], m[i0] = m[i0], m[r]
        reduced = True
        while reduced:
            reduced = False
            piv = m[r][j0]
            for i in range(r, len(m)):
                if i != r and m[i][j0]:
                    q = m[i][j0] // piv
                    for j in cols:
                        m[i][j] -= q * m[r][j]
                    if m[i][j0]:
                        m[r], m[i] = m[i], m[r]
                        reduced = True
                        break
            if reduced:
                continue
            piv = m[r][j0]
            for jj, j in enumerate(cols):
                if j != j0 and m[r][j]:
                    q = m[r][j] // piv
                    for i in range(r, len(m)):
                        m[i][j] -= q * m[i][j0]
                    if m[r][j]:
                        reduced = True
        d = abs(m[r][j0])
        invariants.append(d)
        cols.remove(j0)
        r += 1
    invariants += [0] * len(cols)
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(invariants) - 1):
            a, b = invariants[i], invariants[i + 1]
            if a and b and b % a != 0:
                g = gcd(a, b)
                invariants[i], invariants[i + 1] = g, a * b // g
                changed = True
            elif a == 0 and b != 0:
                invariants[i], invariants[i + 1] = b, a
                changed = True
    return [d for d in invariants if d != 1]


@dataclass
class QuotientReport:
    order: int
    abelian_invariants: list[int]
    exponent: int | None

    def structure_hint(self) -> str:
        parts = [f"C{d}" if d else "Z" for d in self.abelian_invariants]
        ab = " x ".join(parts) if parts else "1"
        return f"order {self.order}, abelianization {ab}, exponent {self.exponent}"


def quotient_report(datum: DatumSpec, extra_relators: Sequence[str],
                    max_cosets: int = 10 ** 6,
                    exponent_limit: int = 20000) -> QuotientReport:
    """Order plus structure data of the quotient by the added relators.

    The abelianization comes from the integer Smith form of the relator
    exponent matrix; the exponent (when the quotient is small enough) from
    the regular permutation representation read off the closed coset table.
    """
    pres = presentation_of(datum, extra_relators)
    order, table = coset_enumerate(pres, (), max_cosets, _return_table=True)

    # abelianization over generators = inverse-pair classes
    d1, d2 = datum.d1, datum.d2
    classes: dict[tuple[str, int], int] = {}
    signs: dict[tuple[str, int], int] = {}
    involutive_keys: list[tuple[str, int]] = []
    for side, d, inv in (("a", d1, datum.inv_a), ("b", d2, datum.inv_b)):
        for i in range(1, d + 1):
            rep = min(i, inv[i])
            key = (side, rep)
            if key not in classes:
                classes[key] = len(classes)
                if inv[rep] == rep:
                    involutive_keys.append(key)
            signs[(side, i)] = 1 if i == rep else -1
    nvars = len(classes)
    rows = []
    for key in involutive_keys:
        row = [0] * nvars
        row[classes[key]] = 2
        rows.append(row)
    for rel in pres.relators:
        row = [0] * nvars
        for col in rel:
            if col < d1:
                side, idx = "a", col + 1
            else:
                side, idx = "b", col - d1 + 1
            inv = datum.inv_a if side == "a" else datum.inv_b
            rep = min(idx, inv[idx])
            row[classes[(side, rep)]] += signs[(side, idx)]
        rows.append(row)
    invariants = _smith_invariants(rows, nvars)

    exponent = None
    if order <= exponent_limit:
        live = [i for i in range(len(table.rows)) if table.alive(i)]
        index = {c: i for i, c in enumerate(live)}
        perms = []
        for x in range(table.ncols):
            perms.append(tuple(index[table.rep(table.rows[c][x])] for c in live))
        from . import permgrp
        elements = permgrp.group_elements(perms, len(live), limit=order + 1)
        exponent = 1
        for g in elements:
            o = 1
            h = g
            e = permgrp.identity(len(live))
            while h != e:
                h = permgrp.compose(g, h)
                o += 1
            exponent = lcm(exponent, o)
    return QuotientReport(order, invariants, exponent)


def simple_index(datum: DatumSpec, witness_relators: Sequence[str],
                 max_cosets: int = 10 ** 6) -> int:
    """Index of the finite-residual subgroup, from known witness relators.

    Each witness is assumed (by the source construction, not computed here)
    to lie in the finite residual; the index is the largest of the quotient
    orders obtained by killing each witness separately.  Witnesses whose
    enumeration exceeds ``max_cosets`` are skipped; if none converge, the
    last ``LimitExceeded`` is re-raised.
    """
    best = 0
    converged = False
    failure: LimitExceeded | None = None
    for w in witness_relators:
        pres = presentation_of(datum, [w])
        try:
            best = max(best, coset_enumerate(pres, (), max_cosets))
            converged = True
        except LimitExceeded as exc:
            failure = exc
    if not converged and failure is not None:
        raise failure
    return best


# -- named families ----------------------------------------------------------

def _from_squares(d1, d2, tau1, tau2, squares) -> DatumSpec:
    stub = DatumSpec(d1, d2, tau1, tau2, ())
    R = set()
    for q in squares:
        R |= stub.orbit(Quad(*q))
    datum = DatumSpec(d1, d2, tau1, tau2, R)
    report = validate(datum)
    if not report.valid:
        raise DatumError("family construction produced an invalid datum: "
                         + "; ".join(i.message for i in report.issues[:4]))
    return datum


def _parse_square_tokens(d1, d2, tau1, tau2, text: str) -> tuple[int, int, int, int]:
    from .datum import _parse_letter_token, involution
    inv_a = involution(d1, tau1)
    inv_b = involution(d2, tau2)
    t = text.split()
    return (_parse_letter_token(t[0], "a", d1, inv_a, 0),
            _parse_letter_token(t[1], "b", d2, inv_b, 0),
            _parse_letter_token(t[2], "a", d1, inv_a, 0),
            _parse_letter_token(t[3], "b", d2, inv_b, 0))


_G44_SQUARES = ["a1 b1 a2^-1 b1", "a1 b2 a2 b2^-1",
                "a1 b2^-1 a2^-1 b1^-1", "a1 b1^-1 a2^-1 b2"]

_G33_SQUARES = ["a1 b1 a1 b1", "a1 b2 a1 b2", "a1 b3 a2 b3",
                "a2 b1 a2 b1", "a2 b2 a3 b2", "a3 b1 a3 b3"]

_G33_MIRROR_SQUARES = ["a1 b1 a1 b1", "a1 b2 a1 b2", "a1 b3 a3 b3",
                       "a2 b1 a2 b1", "a2 b2 a2 b3", "a3 b1 a3 b2"]


def gamma44() -> DatumSpec:
    """The torsion-free (4,4)-group that is not residually finite."""
    sq = [_parse_square_tokens(4, 4, 0, 0, s) for s in _G44_SQUARES]
    return _from_squares(4, 4, 0, 0, sq)


def gamma33() -> DatumSpec:
    """The (3,3)-group with all generators of order 2 used in the (4,5) family."""
    sq = [_parse_square_tokens(3, 3, 3, 3, s) for s in _G33_SQUARES]
    return _from_squares(3, 3, 3, 3, sq)


def gamma66(k: int) -> DatumSpec:
    """The k-th virtually simple (6,6)-group, 1 <= k <= 160."""
    from ._family_tables import GAMMA66_EXTRA
    if k not in GAMMA66_EXTRA:
        raise DatumError(f"no (6,6) family member numbered {k}")
    tau1, tau2, extras = GAMMA66_EXTRA[k]
    sq = [_parse_square_tokens(6, 6, tau1, tau2, s)
          for s in _G44_SQUARES + list(extras)]
    return _from_squares(6, 6, tau1, tau2, sq)


def gamma45(k: int) -> DatumSpec:
    """The k-th virtually simple (4,5)-group, 1 <= k <= 60."""
    from ._family_tables import GAMMA45_EXTRA
    if k not in GAMMA45_EXTRA:
        raise DatumError(f"no (4,5) family member numbered {k}")
    base = _G33_SQUARES if k <= 28 else _G33_MIRROR_SQUARES
    sq = [_parse_square_tokens(4, 5, 4, 5, s)
          for s in base + list(GAMMA45_EXTRA[k])]
    return _from_squares(4, 5, 4, 5, sq)


# Commutator words known to lie in the finite residual of every member of
# the (4,5) family, in both orientations (a member uses whichever orientation
# matches the embedded (3,3)-block; trying all four and skipping the ones
# that do not converge is always safe).
GAMMA45_WITNESSES = (
    "[b2 b1 b3 b1 b3 b2, b1 b3]",
    "[b2 b1 b3 b1 b3 b2, b1 b3 a2]",
    "[a2 a1 a3 a1 a3 a2, a1 a3]",
    "[a2 a1 a3 a1 a3 a2, a1 a3 b2]",
)


def gamma_2n2n1(n: int) -> DatumSpec:
    """The virtually simple (2n,2n+1)-group with all generators of order 2."""
    if n < 2:
        raise DatumError("gamma_2n2n1 requires n >= 2")
    from ._family_tables import GAMMA45_EXTRA
    d1, d2 = 2 * n, 2 * n + 1
    sq = [_parse_square_tokens(4, 5, 4, 5, s)
          for s in _G33_SQUARES + list(GAMMA45_EXTRA[9])]
    sq = [tuple(q) for q in sq]
    for k in range(3, n + 1):
        sq.append((2 * k, 2 * k + 1, 1, 2 * k))
        sq.append((2 * k - 1, 2 * k, 2 * k - 1, 1))
        sq.append((2 * k - 1, 2 * k + 1, 2, 2 * k + 1))
    stub = DatumSpec(d1, d2, d1, d2, ())
    R = set()
    for q in sq:
        R |= stub.orbit(Quad(*q))
    covered = {(q.a, q.b) for q in R}
    for j in range(1, d1 + 1):
        for k in range(1, d2 + 1):
            if (j, k) not in covered:
                R |= stub.orbit(Quad(j, k, j, k))
    datum = DatumSpec(d1, d2, d1, d2, R)
    report = validate(datum)
    if not report.valid:
        raise DatumError("gamma_2n2n1 construction invalid: "
                         + "; ".join(i.message for i in report.issues[:4]))
    return datum


def gamma_64n(n: int) -> DatumSpec:
    """The torsion-free (6,4n)-group whose degree-6 projection grows with n."""
    if n < 2:
        raise DatumError("gamma_64n requires n >= 2")
    d2 = 4 * n
    A1, A2, A3, A3i, A2i, A1i = 1, 2, 3, 4, 5, 6

    def b(i):   # oriented index of b_i
        return i

    def bi(i):  # oriented index of b_i^-1
        return d2 + 1 - i

    sq = [
        (A1, b(1), A2i, b(1)),
        (A1, b(2), A2, bi(2)),
        (A1, bi(2), A2i, bi(1)),
        (A1, bi(1), A2i, b(2)),
        (A3, b(2), A3i, bi(1)),
        (A3, b(3), A3i, bi(2)),
        (A3, b(1), A3i, bi(2 * n)),
        (A2, b(3), A2i, b(3)),
        (A2, b(2 * n), A2i, b(2 * n)),
    ]
    for j in range(2, n + 1):
        sq.append((A1, b(2 * j), A1, bi(2 * j - 1)))
        sq.append((A1i, b(2 * j), A3i, bi(2 * j - 1)))
        sq.append((A3, b(2 * j), A1i, bi(2 * j - 1)))
    for j in range(2, n):
        sq.append((A2, b(2 * j + 1), A2, bi(2 * j)))
        sq.append((A2i, b(2 * j + 1), A3i, bi(2 * j)))
        sq.append((A3, b(2 * j + 1), A2i, bi(2 * j)))
    return _from_squares(6, d2, 0, 0, sq)


_FAMILIES = {
    "Gamma44": (gamma44, 0),
    "Gamma33": (gamma33, 0),
    "Gamma66": (gamma66, 1),
    "Gamma45": (gamma45, 1),
    "Gamma2n2n1": (gamma_2n2n1, 1),
    "Gamma64n": (gamma_64n, 1),
}


def named_family(name: str, arg: int | None = None) -> DatumSpec:
    """Materialize one of the example families by name (and parameter)."""
    if name not in _FAMILIES:
        raise DatumError(f"unknown family {name!r}; known: {sorted(_FAMILIES)}")
    fn, nargs = _FAMILIES[name]
    if nargs == 0:
        if arg is not None:
            raise DatumError(f"family {name} takes no parameter")
        return fn()
    if arg is None:
        raise DatumError(f"family {name} needs a parameter")
    return fn(arg)
