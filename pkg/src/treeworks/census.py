"""Enumeration of (d1,d2)-data up to equivalence, and census tables.

The generator is "orderly": partial square sets are extended corner by
corner in canonical order, and a branch is abandoned as soon as some
equivalence move would map the partial filling to something smaller.
Every emitted datum is therefore the canonical representative of its
equivalence class, and they come out in increasing canonical order.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

from .datum import (DatumSpec, encode, equivalent_sameside, format_datum,
                    involution, mirror, relabelings)
from .action import letters_on_ball
from .classify import (ClassifyError, GroupDescriptor, LabelledGraph, NoRelation,
                       alpha_inverse, burger_mozes_nondiscrete, classify_projection,
                       detect_K_and_X, possibly_irreducible, s_values)
from . import permgrp

__all__ = [
    "enumerate_data", "CensusRow", "census", "census_classes", "verdict",
    "projection_label", "projection_census", "predict_possible_projections",
    "write_census_csv", "write_classes_jsonl",
]

JSONL_SCHEMA = 1


def _tau_values(d: int) -> list[int]:
    """Possible numbers of self-inverse letters for a degree-d alphabet."""
    return list(range(d % 2, d + 1, 2))


# -- the orderly generator ---------------------------------------------------

_LIVE, _DEAD = 0, 1


def _equivalence_moves(d1, d2, tau1, tau2):
    """Non-identity relabeling pairs, plus side-swapping pairs when legal.

    Each move is (kind, map1, map2, pre1, pre2) with 1-indexed image arrays;
    kind "plain" relabels in place, kind "mirror" composes a side swap with a
    relabeling (only available when the two sides have identical shape).
    """
    alphas = relabelings(d1, tau1)
    betas = relabelings(d2, tau2)
    ident = (tuple(range(d1 + 1)), tuple(range(d2 + 1)))

    def inverse(p):
        q = [0] * len(p)
        for i in range(1, len(p)):
            q[p[i]] = i
        return tuple(q)

    moves = []
    for al in alphas:
        for be in betas:
            if (al, be) == ident:
                continue
            moves.append(("plain", al, be, inverse(al), inverse(be)))
    if d1 == d2 and tau1 == tau2:
        for al in alphas:
            for be in betas:
                moves.append(("mirror", al, be, inverse(al), inverse(be)))
    return moves


def _block_stream(d1, d2, tau1, tau2, torsion_free, shard=None):
    """DFS over one (tau1, tau2) block, yielding canonical data."""
    ia = involution(d1, tau1)
    ib = involution(d2, tau2)
    n = d1 * d2
    F: list[tuple[int, int] | None] = [None] * n   # corner (a,b) -> (a',b')
    cov2: list[tuple[int, int] | None] = [None] * n  # corner (b,a') -> (b',a)
    cov3 = [False] * n                              # corner (a',b') used
    cov4 = [False] * n                              # corner (b',a) used
    quads: list[tuple[int, int, int, int]] = []

    moves = _equivalence_moves(d1, d2, tau1, tau2)
    nmoves = len(moves)
    status = [_LIVE] * nmoves
    ptr = [0] * nmoves

    def image_at(m: int, c: int):
        """Value of the m-th move's image datum at corner index c, or None."""
        kind, m1, m2, p1, p2 = moves[m]
        x, y = divmod(c, d2)
        if kind == "plain":
            v = F[(p1[x + 1] - 1) * d2 + (p2[y + 1] - 1)]
            if v is None:
                return None
            return (m1[v[0]], m2[v[1]])
        # side swap: the image's corner (x, y) comes from this datum's
        # second-position corner (b, a'), whose quad continues with (b', a)
        v = cov2[(p1[x + 1] - 1) * d1 + (p2[y + 1] - 1)]
        if v is None:
            return None
        return (m1[v[0]], m2[v[1]])

    def advance(m: int) -> bool:
        """Push the m-th comparison forward; False means prune this branch."""
        p = ptr[m]
        while p < n:
            fv = F[p]
            if fv is None:
                break
            gv = image_at(m, p)
            if gv is None:
                break
            if gv < fv:
                ptr[m] = p
                return False
            if gv > fv:
                status[m] = _DEAD
                break
            p += 1
        ptr[m] = p
        return True

    def orbit(a, b, ap, bp):
        return {(a, b, ap, bp), (ap, bp, a, b),
                (ia[ap], ib[b], ia[a], ib[bp]),
                (ia[a], ib[bp], ia[ap], ib[b])}

    def rec(start: int, depth: int) -> Iterator[DatumSpec]:
        c = start
        while c < n and F[c] is not None:
            c += 1
        if c == n:
            yield DatumSpec(d1, d2, tau1, tau2, quads)
            return
        a, b = divmod(c, d2)
        a += 1
        b += 1
        for ap in range(1, d1 + 1):
            for bp in range(1, d2 + 1):
                if depth == 0 and shard is not None:
                    idx = (ap - 1) * d2 + (bp - 1)
                    if idx % shard[1] != shard[0]:
                        continue
                orb = sorted(orbit(a, b, ap, bp))
                if torsion_free and len(orb) < 4:
                    continue
                added = []
                ok = True
                for qa, qb, qap, qbp in orb:
                    c1 = (qa - 1) * d2 + (qb - 1)
                    k2 = (qb - 1) * d1 + (qap - 1)
                    c3 = (qap - 1) * d2 + (qbp - 1)
                    k4 = (qbp - 1) * d1 + (qa - 1)
                    if F[c1] is not None or cov2[k2] is not None \
                            or cov3[c3] or cov4[k4]:
                        ok = False
                        break
                    F[c1] = (qap, qbp)
                    cov2[k2] = (qbp, qa)
                    cov3[c3] = True
                    cov4[k4] = True
                    added.append((c1, k2, c3, k4))
                if ok:
                    saved_status = status[:]
                    saved_ptr = ptr[:]
                    canonical = True
                    for m in range(nmoves):
                        if status[m] == _LIVE and not advance(m):
                            canonical = False
                            break
                    if canonical:
                        quads.extend(orb)
                        yield from rec(c + 1, depth + 1)
                        del quads[len(quads) - len(orb):]
                    status[:] = saved_status
                    ptr[:] = saved_ptr
                for c1, k2, c3, k4 in reversed(added):
                    F[c1] = None
                    cov2[k2] = None
                    cov3[c3] = False
                    cov4[k4] = False

    yield from rec(0, 0)


def enumerate_data(d1: int, d2: int, torsion_free: bool = False,
                   taus: tuple[int, int] | None = None,
                   resume_after: bytes | None = None,
                   shard: tuple[int, int] | None = None
                   ) -> Iterator[DatumSpec]:
    """All (d1,d2)-data up to equivalence, one canonical representative each.

    Emission order is the canonical byte order, so it is deterministic and a
    run can be resumed by passing the encoding of the last datum seen as
    ``resume_after``.  ``shard=(i, k)`` restricts the search to the i-th of k
    deterministic slices of the search forest (their union is the full
    stream).  ``taus`` pins the numbers of self-inverse letters per side;
    when the two degrees coincide the pair is normalized so the smaller
    count comes first, matching the canonical representatives.
    """
    if d1 < 3 or d2 < 3:
        raise ValueError("degrees must be at least 3")
    if torsion_free:
        if d1 % 2 or d2 % 2:
            return
        blocks = [(0, 0)]
    elif taus is not None:
        t1, t2 = taus
        if (d1 - t1) % 2 or not 0 <= t1 <= d1:
            raise ValueError(f"impossible self-inverse count {t1} for degree {d1}")
        if (d2 - t2) % 2 or not 0 <= t2 <= d2:
            raise ValueError(f"impossible self-inverse count {t2} for degree {d2}")
        if d1 == d2 and t1 > t2:
            t1, t2 = t2, t1
        blocks = [(t1, t2)]
    else:
        blocks = [(t1, t2)
                  for t1 in _tau_values(d1) for t2 in _tau_values(d2)
                  if d1 != d2 or t1 <= t2]
    for t1, t2 in sorted(blocks):
        for datum in _block_stream(d1, d2, t1, t2, torsion_free, shard):
            if resume_after is not None and encode(datum) <= resume_after:
                continue
            yield datum


# -- census ------------------------------------------------------------------

@dataclass
class CensusRow:
    """Counts of equivalence classes by irreducibility verdict."""

    d1: int
    d2: int
    constraint: str
    total: int = 0
    reducible: int = 0
    irreducible: int = 0
    undetermined: int = 0

    def add(self, v: str) -> None:
        self.total += 1
        if v == "reducible":
            self.reducible += 1
        elif v == "irreducible":
            self.irreducible += 1
        else:
            self.undetermined += 1

    def as_csv_row(self) -> list:
        return [self.d1, self.d2, self.constraint, self.total,
                self.reducible, self.irreducible, self.undetermined]


def verdict(datum: DatumSpec) -> str:
    """One of "reducible", "irreducible", "?".

    A datum whose radius-2 ball fixator is trivial on some side has discrete
    projections and is reducible.  When a side of degree >= 6 carries an
    alternating-or-bigger local action, the ball-2 order bound certifies a
    nondiscrete projection, and one nondiscrete projection forces the other,
    so the group is irreducible.  Everything else stays "?".
    """
    _, _, both = possibly_irreducible(datum)
    if not both:
        return "reducible"
    for side, deg in ((1, datum.d1), (2, datum.d2)):
        if deg >= 6:
            try:
                if burger_mozes_nondiscrete(datum, side):
                    return "irreducible"
            except ClassifyError:
                pass
    return "?"


def census_classes(d1: int, d2: int, torsion_free: bool = False,
                   taus: tuple[int, int] | None = None,
                   threads: int | None = None
                   ) -> Iterator[tuple[DatumSpec, str]]:
    """(canonical datum, verdict) pairs, in canonical order.

    With ``threads`` > 1 the search forest is split into that many shards
    evaluated concurrently; results are merged back into canonical order, so
    the output bytes never depend on the worker count.
    """
    if not threads or threads <= 1:
        for datum in enumerate_data(d1, d2, torsion_free, taus):
            yield datum, verdict(datum)
        return

    def run_shard(i: int):
        return [(encode(dat), dat, verdict(dat))
                for dat in enumerate_data(d1, d2, torsion_free, taus,
                                          shard=(i, threads))]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(run_shard, range(threads)))
    merged = sorted((row for part in parts for row in part),
                    key=lambda row: row[0])
    for _, datum, v in merged:
        yield datum, v


def census(d1: int, d2: int, torsion_free: bool = False,
           taus: tuple[int, int] | None = None,
           threads: int | None = None) -> CensusRow:
    """Total/reducible/irreducible/undetermined counts up to equivalence."""
    if torsion_free:
        constraint = "torsion-free"
    elif taus is not None:
        constraint = f"tau={taus[0]},{taus[1]}"
    else:
        constraint = "none"
    row = CensusRow(d1, d2, constraint)
    for _, v in census_classes(d1, d2, torsion_free, taus, threads):
        row.add(v)
    return row


def write_census_csv(rows: Iterable[CensusRow], out: TextIO) -> None:
    out.write("d1,d2,constraint,total,reducible,irreducible,undetermined\n")
    for row in rows:
        out.write(",".join(str(v) for v in row.as_csv_row()) + "\n")


def write_classes_jsonl(classes: Iterable[tuple[DatumSpec, str]],
                        out: TextIO) -> None:
    """One JSON object per equivalence class: datum text, encoding, verdict."""
    for datum, v in classes:
        out.write(json.dumps({
            "schema": JSONL_SCHEMA,
            "canonical": encode(datum).hex(),
            "datum": format_datum(datum),
            "verdict": v,
        }) + "\n")


# -- projection tables -------------------------------------------------------

def projection_label(datum: DatumSpec, side: int) -> str:
    """Table key for one side: the classified closure, else the local action.

    When the classification pipeline reaches a verdict the descriptor string
    is used.  Otherwise the side is keyed by the conjugacy class of its local
    action inside Sym(6) (degrees up to 6), or by the order of the local
    action for larger degrees.
    """
    report = classify_projection(datum, side)
    if report.descriptor.variant != "Undetermined":
        return str(report.descriptor)
    deg = datum.d1 if side == 1 else datum.d2
    points, perms = letters_on_ball(datum, side, 1)
    local = [tuple(p[i] - 1 for i in range(1, deg + 1)) for p in perms]
    if deg <= 6:
        return permgrp.identify_sym6_class(local, deg)
    return f"local-order-{permgrp.group_order(local)}"


def projection_census(d1: int, d2: int, torsion_free: bool = False,
                      taus: tuple[int, int] | None = None,
                      threads: int | None = None) -> dict[tuple[str, str], int]:
    """Counts of projection-pair keys over possibly-irreducible classes.

    A class appears once per distinct ordering of its two side keys: when the
    degrees coincide, a datum inequivalent to its side swap contributes to
    both (k1, k2) and (k2, k1), keeping the table symmetric.
    """
    cells: dict[tuple[str, str], int] = {}
    for datum, v in census_classes(d1, d2, torsion_free, taus, threads):
        if v == "reducible":
            continue
        k1 = projection_label(datum, 1)
        k2 = projection_label(datum, 2)
        cells[(k1, k2)] = cells.get((k1, k2), 0) + 1
        if d1 == d2:
            if not equivalent_sameside(datum, mirror(datum)):
                cells[(k2, k1)] = cells.get((k2, k1), 0) + 1
    return cells


# -- a priori projection prediction ------------------------------------------

def _candidate_graphs(nletters: int, tau: int, simplified: bool
                      ) -> Iterator[LabelledGraph]:
    """All labelled graphs a projection's parity graph could possibly be.

    Simplified flavor: one vertex per letter pair, no loops, all degrees
    even.  Full flavor: one vertex per oriented letter, invariant under the
    inversion (edges, loops and labels alike), all degrees even with a loop
    counting once.
    """
    if simplified:
        reps = tuple(range(1, nletters // 2 + 1))
        pairs = [(u, v) for i, u in enumerate(reps) for v in reps[i + 1:]]
        for emask in range(1 << len(pairs)):
            edges = tuple(p for i, p in enumerate(pairs) if (emask >> i) & 1)
            if any(sum(1 for e in edges if v in e) % 2 for v in reps):
                continue
            for lmask in range(1 << len(reps)):
                labels = {v: -1 if (lmask >> i) & 1 else 1
                          for i, v in enumerate(reps)}
                yield LabelledGraph(reps, edges, labels, True)
        return

    inv = involution(nletters, tau)
    verts = tuple(range(1, nletters + 1))
    # orbits of unordered vertex pairs (loops included) under the inversion
    orbits: list[tuple[tuple[int, int], ...]] = []
    seen = set()
    for u in verts:
        for v in verts[u - 1:]:
            e = (u, v)
            if e in seen:
                continue
            img = tuple(sorted((inv[u], inv[v])))
            orb = (e,) if img == e else (e, img)
            seen.update(orb)
            orbits.append(orb)
    vorbits = []
    vseen = set()
    for u in verts:
        if u not in vseen:
            o = (u,) if inv[u] == u else (u, inv[u])
            vseen.update(o)
            vorbits.append(o)
    for emask in range(1 << len(orbits)):
        edges = tuple(sorted(e for i, orb in enumerate(orbits)
                             if (emask >> i) & 1 for e in orb))
        if any(sum(1 for e in edges if v in e) % 2 for v in verts):
            continue
        for lmask in range(1 << len(vorbits)):
            labels = {}
            for i, orb in enumerate(vorbits):
                for v in orb:
                    labels[v] = -1 if (lmask >> i) & 1 else 1
            yield LabelledGraph(verts, edges, labels, False)


def predict_possible_projections(d1: int, d2: int, torsion_free: bool = False,
                                 side: int = 2, k_max: int | None = None
                                 ) -> set[str]:
    """A priori finite list of closures the chosen projection could have.

    The parity graph of the side-``side`` projection has one vertex per
    letter of the other alphabet, carries the inversion as an automorphism
    and has even vertex degrees; in the torsion-free case the simplified
    graph (half as many vertices, loopless) can be used instead.  Running
    the sign-invariant pipeline over every such graph bounds the possible
    projection closures, independently of any particular datum.
    """
    deg, other = (d2, d1) if side == 2 else (d1, d2)
    if deg < 6 or deg % 2:
        raise ValueError("prediction requires an even projected degree >= 6")
    if k_max is None:
        k_max = 2 * deg + 2
    if torsion_free and other % 2:
        return set()
    taus = [0] if torsion_free else _tau_values(other)
    out: set[str] = set()
    for tau in taus:
        for g in _candidate_graphs(other, tau, simplified=torsion_free):
            smat = s_values(g, k_max)
            try:
                found = detect_K_and_X(smat)
            except ClassifyError:
                continue
            if isinstance(found, NoRelation):
                continue
            _, X = found
            if 0 in X:
                out.add(str(GroupDescriptor("Plain", X)))
                continue
            Y = alpha_inverse(X, deg)
            if Y is None:
                out.add(str(GroupDescriptor("Plain", X)))
                continue
            sigmas = []
            for v in g.vertices:
                s = 1
                for r in Y:
                    s *= smat.rows[v][r]
                sigmas.append(s)
            if all(s < 0 for s in sigmas):
                out.add(str(GroupDescriptor("Star", Y)))
            else:
                out.add(str(GroupDescriptor("Plain", X)))
                out.add(str(GroupDescriptor("Star", Y)))
                out.add(str(GroupDescriptor("PrimeStar", Y)))
                out.add(str(GroupDescriptor("DoubleStar", Y)))
    return out
