"""Classification of projection closures.

Given a datum, each projection of the group to one tree has a closure that is
either discrete or (for even degree >= 6 with alternating local action) one of
the four group families G(X,X), G(X,X)*, G'(X,X)*, G(X*,X*) over a finite set
X.  The pipeline here decides which: local-action checks, the ball-2
nondiscreteness bound, sign invariants s_k computed by a parity path count in
a labelled graph, detection of the minimal relation (K, X), the alpha map, and
two affine sign systems separating the four families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

from . import permgrp
from .action import letters_on_ball, local_action_permutation
from .datum import DatumError, DatumSpec, mirror

__all__ = [
    "ClassifyError",
    "LabelledGraph",
    "SignMatrix",
    "GroupDescriptor",
    "ProjectionReport",
    "build_graph",
    "s_values",
    "s_values_bruteforce",
    "detect_K_and_X",
    "NoRelation",
    "alpha",
    "alpha_inverse",
    "possibly_irreducible",
    "burger_mozes_bound",
    "burger_mozes_nondiscrete",
    "solve_affine_gf2",
    "choose_among_four",
    "star_vs_prime",
    "classify_projection",
]


class ClassifyError(ValueError):
    """A hypothesis of the classification machinery failed."""


def _working_datum(datum: DatumSpec, side: int) -> DatumSpec:
    """Datum whose left alphabet labels the graph for the requested side.

    The projection to tree t is analysed through rectangles one square wide in
    the other direction, so the graph vertices are the opposite alphabet's
    letters: for side 2 that is the datum's own a-alphabet, for side 1 the
    mirrored datum's.
    """
    if side == 2:
        return datum
    if side == 1:
        return mirror(datum)
    raise DatumError(f"side must be 1 or 2, got {side}")


# -- labelled graphs ---------------------------------------------------------

@dataclass(frozen=True)
class LabelledGraph:
    """Parity graph on one alphabet with +-1 vertex labels.

    ``vertices`` are oriented letters (full graph) or pair representatives
    (simplified graph, available when the alphabet has no self-inverse
    letters).  ``edges`` are (u, v) with u <= v; u == v is a loop.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    labels: dict[int, int]
    simplified: bool

    def degree(self, v: int) -> int:
        """Number of incident edges, a loop counting once."""
        return sum(1 for e in self.edges if v in e)


def build_graph(datum: DatumSpec, side: int, simplified: bool | None = None) -> LabelledGraph:
    """The labelled graph governing the sign invariants of one projection.

    Full graph: vertices are the oriented letters x of the opposite alphabet,
    with an edge (x, y) iff the number of quads with bottom x and top-slot
    inverse(y) is odd, and label sigma(x) = sign of the local action of x.
    The simplified graph merges each letter with its inverse (requires that
    alphabet to be fixed-point-free) using the same parity rule summed over
    the merged top letters.
    """
    work = _working_datum(datum, side)
    d, inv = work.d1, work.inv_a
    if simplified is None:
        simplified = work.tau1 == 0
    labels = {}
    for x in range(1, d + 1):
        labels[x] = permgrp.sign(local_action_permutation(work, x, 2))
    counts: dict[tuple[int, int], int] = {}
    for q in work.R:
        counts[(q.a, q.ap)] = counts.get((q.a, q.ap), 0) + 1

    if not simplified:
        edges = []
        for x in range(1, d + 1):
            for y in range(x, d + 1):
                if counts.get((x, inv[y]), 0) % 2:
                    edges.append((x, y))
        return LabelledGraph(tuple(range(1, d + 1)), tuple(edges), labels, False)

    if work.tau1 != 0:
        raise ClassifyError("simplified graph requires a fixed-point-free alphabet")
    reps = tuple(x for x in range(1, d + 1) if x < inv[x])
    edges = []
    for x in reps:
        for y in reps:
            if y < x:
                continue
            n = counts.get((x, y), 0) + counts.get((x, inv[y]), 0)
            if n % 2:
                edges.append((x, y))
    return LabelledGraph(reps, tuple(edges), {x: labels[x] for x in reps}, True)


# -- sign invariants ---------------------------------------------------------

@dataclass
class SignMatrix:
    """Rows s_k(x) in {-1,+1} for each graph vertex x, k = 0..k_max."""

    vertices: tuple[int, ...]
    k_max: int
    rows: dict[int, tuple[int, ...]]

    def row(self, x: int) -> tuple[int, ...]:
        return self.rows[x]


def _adjacency(g: LabelledGraph):
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        if v != u:
            incident[v].append(i)
    return incident


def s_values(g: LabelledGraph, k_max: int) -> SignMatrix:
    """Sign invariants via a parity dynamic program over (edge, vertex) states.

    s_k(x) is the product, over all non-repeating paths of length k from x
    (no edge used twice in a row), of the label of the endpoint; only the
    parity of the number of paths ending at each vertex matters.
    """
    incident = _adjacency(g)
    rows = {}
    for x in g.vertices:
        row = [g.labels[x]]
        # state parity: (edge index, vertex reached through it) -> 0/1
        cur: dict[tuple[int, int], int] = {}
        for e in incident[x]:
            u, v = g.edges[e]
            y = v if u == x else u
            key = (e, y)
            cur[key] = cur.get(key, 0) ^ 1
        for _ in range(k_max):
            val = 1
            endpoint_parity: dict[int, int] = {}
            for (e, y), p in cur.items():
                if p:
                    endpoint_parity[y] = endpoint_parity.get(y, 0) ^ 1
            for y, p in endpoint_parity.items():
                if p and g.labels[y] < 0:
                    val = -val
            row.append(val)
            nxt: dict[tuple[int, int], int] = {}
            for (e, y), p in cur.items():
                if not p:
                    continue
                for e2 in incident[y]:
                    if e2 == e:
                        continue
                    u2, v2 = g.edges[e2]
                    z = v2 if u2 == y else u2
                    key = (e2, z)
                    nxt[key] = nxt.get(key, 0) ^ 1
            cur = nxt
        rows[x] = tuple(row)
    return SignMatrix(g.vertices, k_max, rows)


def s_values_bruteforce(g: LabelledGraph, k_max: int) -> SignMatrix:
    """Literal enumeration of non-repeating paths (test oracle)."""
    incident = _adjacency(g)
    rows = {}
    for x in g.vertices:
        row = [g.labels[x]]
        paths = [([], x)]  # (edge sequence, endpoint)
        for _ in range(k_max):
            nxt = []
            for es, y in paths:
                for e in incident[y]:
                    if es and e == es[-1]:
                        continue
                    u, v = g.edges[e]
                    z = v if u == y else u
                    nxt.append((es + [e], z))
            paths = nxt
            val = 1
            for _, y in paths:
                val *= g.labels[y]
            row.append(val)
        rows[x] = tuple(row)
    return SignMatrix(g.vertices, k_max, rows)


# -- (K, X) detection --------------------------------------------------------

@dataclass(frozen=True)
class NoRelation:
    k_max: int


def _gf2_echelon(rows: list[int]) -> list[int]:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return basis


def detect_K_and_X(m: SignMatrix, k_max: int | None = None):
    """Least K with a sign relation among the columns 0..K, and its support X.

    Rows are viewed as vectors over the two-element field (-1 -> 1).  K is the
    least k at which the row space of columns 0..k has dimension <= k; the
    visible image of s then misses some coordinate pattern.  At that point the
    orthogonal relation vector must be unique (otherwise the hypotheses of the
    classification are violated) and its support is X, with max X = K.
    """
    if k_max is None:
        k_max = m.k_max
    bit_rows = []
    for x in m.vertices:
        r = 0
        for k, v in enumerate(m.rows[x][: k_max + 1]):
            if v < 0:
                r |= 1 << k
        bit_rows.append(r)
    for k in range(k_max + 1):
        mask = (1 << (k + 1)) - 1
        basis = _gf2_echelon([r & mask for r in bit_rows])
        dim = len(basis)
        if dim <= k:
            if dim < k:
                raise ClassifyError(
                    f"relation space at k={k} has dimension {k + 1 - dim} > 1; "
                    "classification hypotheses violated")
            # unique nonzero c with c . row = 0 for all rows
            c = _gf2_nullvector(basis, k + 1)
            X = frozenset(i for i in range(k + 1) if (c >> i) & 1)
            if max(X) != k:
                raise ClassifyError(
                    f"relation support {sorted(X)} does not reach K={k}")
            return k, X
    return NoRelation(k_max)


def _gf2_nullvector(basis: list[int], width: int) -> int:
    """The unique nonzero vector orthogonal to a corank-1 row space."""
    rows: list[int] = []
    pivot_of: dict[int, int] = {}  # pivot column -> row index
    for r in basis:
        for p, j in pivot_of.items():
            if (r >> p) & 1:
                r ^= rows[j]
        if r == 0:
            continue
        p = r.bit_length() - 1
        for j in pivot_of.values():
            if (rows[j] >> p) & 1:
                rows[j] ^= r
        pivot_of[p] = len(rows)
        rows.append(r)
    free = [i for i in range(width) if i not in pivot_of]
    assert len(free) == 1, "row space is not corank 1"
    f = free[0]
    # after full reduction each row is its pivot bit plus possibly bit f,
    # so orthogonality forces c_p = r_f with c_f = 1.
    c = 1 << f
    for p, j in pivot_of.items():
        if (rows[j] >> f) & 1:
            c |= 1 << p
    for r in rows:
        assert bin(r & c).count("1") % 2 == 0
    return c


# -- the alpha map -----------------------------------------------------------

def alpha(X: Iterable[int], d: int) -> frozenset[int]:
    """Image of a finite radius set under the sphere-parity transform.

    Even degree: alpha(X) = {x+1 : x in X} symmetric-difference
    {x-1 : x in X, x >= 2}; odd degree: {x+1 : x in X} union ({0} if 1 in X).
    """
    X = frozenset(X)
    up = frozenset(x + 1 for x in X)
    if d % 2 == 0:
        down = frozenset(x - 1 for x in X if x >= 2)
        return up ^ down
    return up | (frozenset({0}) if 1 in X else frozenset())


def alpha_inverse(X: Iterable[int], d: int) -> frozenset[int] | None:
    """Preimage of X under alpha, or None if X is not in the image."""
    X = frozenset(X)
    if not X:
        return None
    K = max(X)
    if K == 0:
        return None
    universe = list(range(K))
    for r in range(len(universe) + 1):
        for Y in itertools.combinations(universe, r):
            if alpha(Y, d) == X:
                return frozenset(Y)
    return None


# -- descriptors -------------------------------------------------------------

def _fmt_set(X: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(X)) + "}"


@dataclass(frozen=True)
class GroupDescriptor:
    """Which member of the classification the projection closure is.

    Variants: Plain(X) = G(X,X); Star(Y) = G(Y,Y)*; PrimeStar(Y) = G'(Y,Y)*;
    DoubleStar(Y) = G(Y*,Y*); plus Discrete and Undetermined(reason).
    """

    variant: str
    X: frozenset[int] | None = None
    reason: str | None = None

    def __str__(self) -> str:
        if self.variant == "Plain":
            return _fmt_set(self.X)
        if self.variant == "Star":
            return _fmt_set(self.X) + "^*"
        if self.variant == "PrimeStar":
            return _fmt_set(self.X) + "'^*"
        if self.variant == "DoubleStar":
            return _fmt_set(self.X) + "^{**}"
        if self.variant == "Discrete":
            return "discrete"
        return f"undetermined({self.reason})"


# -- irreducibility and nondiscreteness tests --------------------------------

def possibly_irreducible(datum: DatumSpec, side: int | None = None):
    """Is the fixator of the radius-2 ball nontrivial (at radius 3)?

    With no side given, returns (side1, side2, overall) where overall requires
    both sides to pass.
    """
    if side is not None:
        points, perms = letters_on_ball(datum, side, 3)
        inner = [i for i, p in enumerate(points) if len(p) <= 2]
        return not permgrp.pointwise_stabilizer_trivial_on(perms, len(points), inner)
    s1 = possibly_irreducible(datum, 1)
    s2 = possibly_irreducible(datum, 2)
    return s1, s2, s1 and s2


def burger_mozes_bound(d: int) -> int:
    """Order threshold on the ball-2 image certifying nondiscreteness."""
    return factorial(d) // 2 * (factorial(d - 1) // 2) ** d


def burger_mozes_nondiscrete(datum: DatumSpec, side: int) -> bool:
    """Nondiscreteness of a projection with degree >= 6 and alternating local action.

    Under those hypotheses the closure is nondiscrete iff the image of the
    vertex stabilizer in the ball-2 automorphisms has order at least
    d!/2 * ((d-1)!/2)^d.
    """
    work = _working_datum(datum, side)
    d = work.d2
    if d < 6:
        raise ClassifyError(f"nondiscreteness bound requires degree >= 6, got {d}")
    local = [local_action_permutation(work, j, 2) for j in range(1, work.d1 + 1)]
    if not permgrp.contains_alternating(local, d):
        raise ClassifyError("local action does not contain the alternating group")
    _, perms = letters_on_ball(datum, side, 2)
    return permgrp.group_order(perms) >= burger_mozes_bound(d)


# -- sign systems ------------------------------------------------------------

def solve_affine_gf2(equations: Sequence[tuple[Sequence[int], int]],
                     nvars: int) -> list[int] | None:
    """Solve a GF(2) affine system; each equation is (variable list, rhs bit).

    Returns one solution as a 0/1 list (free variables set to 0), or None.
    """
    rows = []
    for vars_, rhs in equations:
        v = 0
        for i in vars_:
            v ^= 1 << i
        rows.append((v, rhs & 1))
    pivots: dict[int, tuple[int, int]] = {}
    for v, r in rows:
        # reduce highest pivot first; each pivot row only carries lower bits
        for p in sorted(pivots, reverse=True):
            if (v >> p) & 1:
                pv, pr = pivots[p]
                v ^= pv
                r ^= pr
        if v == 0:
            if r:
                return None
            continue
        p = v.bit_length() - 1
        pivots[p] = (v, r)
    sol = [0] * nvars
    # each pivot row's non-pivot bits are all below its pivot, so solving in
    # increasing pivot order sees only already-final values.
    for p in sorted(pivots):
        pv, pr = pivots[p]
        acc = pr
        for i in range(p):
            if (pv >> i) & 1:
                acc ^= sol[i]
        sol[p] = acc
    return sol


def _sigma_products(work: DatumSpec, smat: SignMatrix, Y: frozenset[int]) -> dict[int, int]:
    """Sigma_j = product over r in Y of s_r(a_j), for every oriented letter j."""
    d, inv = work.d1, work.inv_a
    out = {}
    for j in range(1, d + 1):
        key = j if j in smat.rows else (inv[j] if inv[j] in smat.rows else None)
        if key is None:
            # simplified matrix indexed by pair representatives
            key = min(j, inv[j])
        row = smat.rows[key]
        v = 1
        for r in Y:
            v *= row[r]
        out[j] = v
    return out


def _mu_nu(work: DatumSpec):
    """mu[j][k], nu[j][k] with a_j b_k = b_nu a_mu, from the corner tables."""
    c1 = work.corner_tables()[0]
    inv_a, inv_b = work.inv_a, work.inv_b
    mu = {}
    nu = {}
    for j in range(1, work.d1 + 1):
        mu[j] = {}
        nu[j] = {}
        for k in range(1, work.d2 + 1):
            q = c1[(j, k)]
            nu[j][k] = inv_b[q.bp]
            mu[j][k] = inv_a[q.ap]
    return mu, nu


def choose_among_four(datum: DatumSpec, side: int, X: frozenset[int],
                      Y: frozenset[int], smat: SignMatrix,
                      evidence: dict | None = None) -> GroupDescriptor:
    """Decide among G(X,X), G(Y,Y)*, G'(Y,Y)*, G(Y*,Y*) with alpha(Y) = X.

    Solvability of the sign system (*) selects the starred pair (separated by
    ``star_vs_prime``); failing that, solvability of the row-relaxed system
    (**) selects G(Y*,Y*); if both fail the answer is G(X,X).  If every
    Sigma_j is -1 the starred case follows at once and it is the plain star.
    """
    work = _working_datum(datum, side)
    sigma = _sigma_products(work, smat, Y)
    mu, nu = _mu_nu(work)
    ev = evidence if evidence is not None else {}
    ev["sigma_products"] = {j: sigma[j] for j in sorted(sigma)}

    def bit(v: int) -> int:
        return 0 if v > 0 else 1

    if all(sigma[j] < 0 for j in sigma):
        ev["corollary_all_minus"] = True
        ev["system_star_solvable"] = True
        return GroupDescriptor("Star", Y)

    # system (*): x_k x_{nu[j][k]} Sigma_{mu[j][k]} = Sigma_j
    eqs = []
    for j in range(1, work.d1 + 1):
        for k in range(1, work.d2 + 1):
            eqs.append(([k - 1, nu[j][k] - 1], bit(sigma[j]) ^ bit(sigma[mu[j][k]])))
    sol = solve_affine_gf2(eqs, work.d2)
    ev["system_star_solvable"] = sol is not None
    if sol is not None:
        ev["system_star_witness"] = [1 - 2 * b for b in sol]
        return star_vs_prime(datum, side, Y, sigma, evidence=ev)

    # system (**): per-row free constants z_j
    eqs2 = []
    nz = work.d2
    for j in range(1, work.d1 + 1):
        for k in range(1, work.d2 + 1):
            eqs2.append(([k - 1, nu[j][k] - 1, nz + j - 1], bit(sigma[mu[j][k]])))
    sol2 = solve_affine_gf2(eqs2, work.d2 + work.d1)
    ev["system_doublestar_solvable"] = sol2 is not None
    if sol2 is not None:
        ev["system_doublestar_witness"] = [1 - 2 * b for b in sol2[:work.d2]]
        return GroupDescriptor("DoubleStar", Y)
    return GroupDescriptor("Plain", X)


def star_vs_prime(datum: DatumSpec, side: int, Y: frozenset[int],
                  sigma: dict[int, int], evidence: dict | None = None) -> GroupDescriptor:
    """Separate G(Y,Y)* from G'(Y,Y)* by a one-column rectangle witness.

    Search for a word a_{j1}..a_{jm} carrying some b_k to b_k^{-1} (a
    rectangle m x 1 whose left and right edges are b_k and its inverse); the
    product of the Sigma values of its bottom and top letters is +1 exactly in
    the starred-without-prime case.
    """
    work = _working_datum(datum, side)
    c1 = work.corner_tables()[0]
    inv_a, inv_b = work.inv_a, work.inv_b
    ev = evidence if evidence is not None else {}
    for k0 in range(1, work.d2 + 1):
        target = inv_b[k0]
        if target == k0:
            continue
        # BFS over (current edge letter, accumulated sign)
        start = (k0, 1)
        seen = {start: []}
        queue = [start]
        while queue:
            beta, s = queue.pop(0)
            word = seen[(beta, s)]
            for j in range(1, work.d1 + 1):
                q = c1[(j, beta)]
                nbeta = inv_b[q.bp]
                ns = s * sigma[j] * sigma[inv_a[q.ap]]
                key = (nbeta, ns)
                if key not in seen:
                    seen[key] = word + [j]
                    queue.append(key)
        reached = [s for (beta, s) in seen if beta == target]
        if not reached:
            continue
        if len(set(reached)) > 1:
            raise ClassifyError(
                "rectangle witnesses with both signs found; hypotheses violated")
        s = reached[0]
        ev["prime_witness_start"] = k0
        ev["prime_witness_word"] = seen[(target, s)]
        ev["prime_witness_sign"] = s
        return GroupDescriptor("Star" if s > 0 else "PrimeStar", Y)
    raise ClassifyError("no one-column rectangle witness found")


# -- the full pipeline -------------------------------------------------------

@dataclass
class ProjectionReport:
    side: int
    degree: int
    descriptor: GroupDescriptor
    evidence: dict

    def as_dict(self) -> dict:
        def clean(v):
            if isinstance(v, frozenset):
                return sorted(v)
            if isinstance(v, dict):
                return {str(k): clean(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [clean(x) for x in v]
            return v
        return {
            "side": self.side,
            "degree": self.degree,
            "descriptor": str(self.descriptor),
            "evidence": clean(self.evidence),
        }


def classify_projection(datum: DatumSpec, side: int,
                        k_max: int | None = None) -> ProjectionReport:
    """Full decision pipeline for the closure of one projection.

    Hypothesis failures (odd or small degree, local action without the
    alternating group, exhausted search radius) yield Undetermined with the
    failing step recorded in the evidence, never a guess.
    """
    work = _working_datum(datum, side)
    d = work.d2
    ev: dict = {"assumption": "image of the sign map is spanned by generator rows"}
    local = [local_action_permutation(work, j, 2) for j in range(1, work.d1 + 1)]
    order = permgrp.group_order(local, d)
    ev["local_action_order"] = order
    if d <= 6:
        ev["local_action_class"] = permgrp.identify_sym6_class(local, d)

    def undet(reason: str) -> ProjectionReport:
        return ProjectionReport(side, d, GroupDescriptor("Undetermined", reason=reason), ev)

    if d % 2 == 1:
        return undet("odd degree")
    if d < 6:
        return undet("degree < 6")
    alt = order * 2 >= factorial(d)
    ev["contains_alternating"] = alt
    if not alt:
        return undet("local action does not contain Alt(d)")

    _, ball2 = letters_on_ball(datum, side, 2)
    ball2_order = permgrp.group_order(ball2)
    bound = burger_mozes_bound(d)
    ev["ball2_order"] = ball2_order
    ev["nondiscreteness_bound"] = bound
    if ball2_order < bound:
        return ProjectionReport(side, d, GroupDescriptor("Discrete"), ev)

    if k_max is None:
        k_max = 2 * d + 2
    graph = build_graph(datum, side)
    ev["graph_simplified"] = graph.simplified
    ev["graph_edges"] = list(graph.edges)
    ev["graph_labels"] = dict(graph.labels)
    smat = s_values(graph, k_max)
    ev["s_matrix"] = {x: smat.rows[x] for x in smat.vertices}
    try:
        res = detect_K_and_X(smat, k_max)
    except ClassifyError as e:
        return undet(str(e))
    if isinstance(res, NoRelation):
        return undet(f"no sign relation up to k_max={k_max}")
    K, X = res
    ev["K"] = K
    ev["X"] = X
    if 0 in X:
        return ProjectionReport(side, d, GroupDescriptor("Plain", X), ev)
    Y = alpha_inverse(X, d)
    if Y is None:
        return undet(f"relation support {sorted(X)} outside the alpha image")
    ev["Y"] = Y
    try:
        desc = choose_among_four(datum, side, X, Y, smat, evidence=ev)
    except ClassifyError as e:
        return undet(str(e))
    return ProjectionReport(side, d, desc, ev)
