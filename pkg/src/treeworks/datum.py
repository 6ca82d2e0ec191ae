"""Combinatorial data for groups acting simply transitively on products of two trees.

A (d1,d2)-datum consists of two alphabets of oriented letters (the "a" side
with d1 letters and the "b" side with d2 letters), an inversion involution on
each alphabet, and a set R of d1*d2 quads (a, b, a', b') -- the readings of the
geometric squares of the associated square complex.  This module defines the
datum type, its validation, serialization, equivalence/canonical forms, and the
count of vertex-fixing automorphisms of the associated 4-vertex complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "DatumError",
    "DatumSyntaxError",
    "Letter",
    "Quad",
    "DatumSpec",
    "ValidationReport",
    "CanonicalForm",
    "involution",
    "expand_square",
    "parse_datum",
    "format_datum",
    "validate",
    "is_torsion_free",
    "lookup_square",
    "relabelings",
    "apply_relabeling",
    "mirror",
    "encode",
    "canonical_form",
    "equivalent",
    "equivalent_sameside",
    "vertex_fixing_automorphisms",
]


class DatumError(ValueError):
    """A structurally invalid datum or datum operation."""


class DatumSyntaxError(DatumError):
    """A parse error in the datum text format, with a line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def involution(d: int, tau: int) -> tuple[int, ...]:
    """Inversion table for an alphabet of d letters with tau self-inverse ones.

    Returns a tuple inv with inv[i] = index of the inverse of letter i
    (1-indexed; inv[0] is unused).  Letters in the middle band
    (d-tau)/2 < i <= (d+tau)/2 are self-inverse; the rest pair i <-> d+1-i.
    """
    if d < 1:
        raise DatumError(f"degree must be >= 1, got {d}")
    if tau < 0 or tau > d or (d - tau) % 2 != 0:
        raise DatumError(f"torsion count tau={tau} invalid for degree d={d}")
    lo = (d - tau) // 2
    hi = (d + tau) // 2
    return tuple(i if lo < i <= hi else d + 1 - i for i in range(d + 1))


class Letter(NamedTuple):
    """An oriented letter: side 'a' or 'b' plus a 1-based index."""

    side: str
    index: int

    def token(self) -> str:
        return f"{self.side}{self.index}"


class Quad(NamedTuple):
    """One element of R: the four oriented letters (a, b, a', b') of a square.

    Reading convention (counterclockwise from the bottom-left corner):
    bottom edge a (left to right), right edge b (bottom to top), top edge a'
    (right to left), left edge b' (top to bottom); so a b a' b' = 1 in the
    group, i.e. a * b = b'^-1 * a'^-1.
    """

    a: int
    b: int
    ap: int
    bp: int


class DatumSpec:
    """A (d1,d2)-datum: degrees, torsion counts, and the quad set R."""

    __slots__ = ("d1", "d2", "tau1", "tau2", "inv_a", "inv_b", "R",
                 "_corner", "_squares", "_hash")

    def __init__(self, d1: int, d2: int, tau1: int, tau2: int,
                 quads: Iterable[tuple[int, int, int, int]]):
        self.d1 = d1
        self.d2 = d2
        self.tau1 = tau1
        self.tau2 = tau2
        self.inv_a = involution(d1, tau1)
        self.inv_b = involution(d2, tau2)
        R = frozenset(Quad(*q) for q in quads)
        for q in R:
            if not (1 <= q.a <= d1 and 1 <= q.ap <= d1
                    and 1 <= q.b <= d2 and 1 <= q.bp <= d2):
                raise DatumError(f"letter index out of range in quad {q}")
        self.R = R
        self._corner = None
        self._squares = None
        self._hash = None

    # -- structural helpers -------------------------------------------------

    def key(self) -> tuple:
        return (self.d1, self.d2, self.tau1, self.tau2, self.R)

    def __eq__(self, other) -> bool:
        return isinstance(other, DatumSpec) and self.key() == other.key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        return (f"DatumSpec(d1={self.d1}, d2={self.d2}, tau1={self.tau1}, "
                f"tau2={self.tau2}, |R|={len(self.R)})")

    def sigma(self, q: Quad) -> Quad:
        ia, ib = self.inv_a, self.inv_b
        return Quad(ia[q.ap], ib[q.b], ia[q.a], ib[q.bp])

    def rho(self, q: Quad) -> Quad:
        return Quad(q.ap, q.bp, q.a, q.b)

    def orbit(self, q: Quad) -> frozenset[Quad]:
        """The orbit of q under the symmetries sigma and rho (size 1, 2 or 4)."""
        ia, ib = self.inv_a, self.inv_b
        return frozenset((
            q,
            Quad(q.ap, q.bp, q.a, q.b),
            Quad(ia[q.ap], ib[q.b], ia[q.a], ib[q.bp]),
            Quad(ia[q.a], ib[q.bp], ia[q.ap], ib[q.b]),
        ))

    def geometric_squares(self) -> list[frozenset[Quad]]:
        """Partition R into symmetry orbits, sorted by their smallest quad."""
        if self._squares is None:
            seen: set[Quad] = set()
            out = []
            for q in sorted(self.R):
                if q in seen:
                    continue
                o = self.orbit(q)
                seen |= o
                out.append(o)
            self._squares = out
        return self._squares

    def corner_tables(self):
        """Four dicts mapping corner pairs to quads, one per corner position.

        Position 1: (a, b); position 2: (b, a'); position 3: (a', b');
        position 4: (b', a).  On a valid datum each map is a bijection.
        """
        if self._corner is None:
            c1, c2, c3, c4 = {}, {}, {}, {}
            for q in self.R:
                c1[(q.a, q.b)] = q
                c2[(q.b, q.ap)] = q
                c3[(q.ap, q.bp)] = q
                c4[(q.bp, q.a)] = q
            self._corner = (c1, c2, c3, c4)
        return self._corner


def expand_square(datum: DatumSpec, q: Quad | tuple) -> frozenset[Quad]:
    """The geometric square (symmetry orbit) containing the quad q."""
    return datum.orbit(Quad(*q))


# -- validation --------------------------------------------------------------

@dataclass(frozen=True)
class Issue:
    code: str
    message: str


@dataclass
class ValidationReport:
    d1: int
    d2: int
    tau1: int
    tau2: int
    quad_count: int
    square_count: int
    issues: list[Issue]

    @property
    def valid(self) -> bool:
        return not self.issues

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "d1": self.d1,
            "d2": self.d2,
            "tau1": self.tau1,
            "tau2": self.tau2,
            "quad_count": self.quad_count,
            "square_count": self.square_count,
            "issues": [{"code": i.code, "message": i.message} for i in self.issues],
        }


_POSITION_NAMES = {1: "(a,b)", 2: "(b,a')", 3: "(a',b')", 4: "(b',a)"}


def validate(datum: DatumSpec) -> ValidationReport:
    """Check the two datum conditions and report every violation found.

    Condition (1): in each of the four corner positions, every (letter, letter)
    pair is covered by exactly one quad.  Condition (2): R is closed under the
    square symmetries sigma and rho.
    """
    issues: list[Issue] = []
    want = datum.d1 * datum.d2
    if len(datum.R) != want:
        issues.append(Issue(
            "cardinality",
            f"|R| = {len(datum.R)}, expected d1*d2 = {want}"))

    for pos, (fst, snd) in ((1, ("a", "b")), (2, ("b", "ap")),
                            (3, ("ap", "bp")), (4, ("bp", "a"))):
        cover: dict[tuple[int, int], int] = {}
        for q in datum.R:
            c = (getattr(q, fst), getattr(q, snd))
            cover[c] = cover.get(c, 0) + 1
        dfst = datum.d1 if fst in ("a", "ap") else datum.d2
        dsnd = datum.d1 if snd in ("a", "ap") else datum.d2
        for i in range(1, dfst + 1):
            for j in range(1, dsnd + 1):
                n = cover.get((i, j), 0)
                if n == 0:
                    issues.append(Issue(
                        "corner-missing",
                        f"corner position {_POSITION_NAMES[pos]}: "
                        f"pair ({i},{j}) covered by no quad"))
                elif n > 1:
                    issues.append(Issue(
                        "corner-duplicated",
                        f"corner position {_POSITION_NAMES[pos]}: "
                        f"pair ({i},{j}) covered by {n} quads"))

    for q in datum.R:
        for img in (datum.sigma(q), datum.rho(q)):
            if img not in datum.R:
                issues.append(Issue(
                    "not-symmetry-closed",
                    f"quad {tuple(q)} has symmetry image {tuple(img)} not in R"))
    return ValidationReport(datum.d1, datum.d2, datum.tau1, datum.tau2,
                            len(datum.R), len(datum.geometric_squares()), issues)


def is_torsion_free(datum: DatumSpec) -> bool:
    """True iff no letter is self-inverse and every square orbit has size 4."""
    if datum.tau1 != 0 or datum.tau2 != 0:
        return False
    return all(len(o) == 4 for o in datum.geometric_squares())


def lookup_square(datum: DatumSpec, corner: tuple[int, int], position: int = 1) -> Quad:
    """The unique quad having the given corner pair in the given position."""
    tables = datum.corner_tables()
    try:
        return tables[position - 1][corner]
    except KeyError:
        raise DatumError(
            f"no quad with corner {corner} in position {_POSITION_NAMES[position]}")


# -- text format -------------------------------------------------------------

def _parse_letter_token(token: str, side: str, d: int, inv: tuple[int, ...],
                        line: int) -> int:
    base = token
    invert = False
    if token.endswith("^-1"):
        base = token[:-3]
        invert = True
    if len(base) < 2 or base[0] != side or not base[1:].isdigit():
        raise DatumSyntaxError(line, f"expected a letter token '{side}<i>', got {token!r}")
    idx = int(base[1:])
    if not 1 <= idx <= d:
        raise DatumSyntaxError(line, f"letter index out of range in {token!r} (d = {d})")
    return inv[idx] if invert else idx


def parse_datum(text: str) -> DatumSpec:
    """Parse the line-oriented datum format and close R under the symmetries.

    Format: a header line ``datum d1=<n> d2=<n> tau1=<n> tau2=<n>`` followed by
    lines ``square <a> <b> <a'> <b'>`` with tokens like ``a1`` or ``b3^-1``;
    ``#`` starts a comment.  Each listed square is expanded to its full
    symmetry orbit.
    """
    header = None
    squares: list[tuple[list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "datum":
            if header is not None:
                raise DatumSyntaxError(lineno, "duplicate header line")
            fields = {}
            for p in parts[1:]:
                if "=" not in p:
                    raise DatumSyntaxError(lineno, f"malformed header field {p!r}")
                k, v = p.split("=", 1)
                if k not in ("d1", "d2", "tau1", "tau2") or not v.lstrip("-").isdigit():
                    raise DatumSyntaxError(lineno, f"malformed header field {p!r}")
                fields[k] = int(v)
            missing = {"d1", "d2", "tau1", "tau2"} - set(fields)
            if missing:
                raise DatumSyntaxError(lineno, f"header missing {sorted(missing)}")
            header = fields
        elif parts[0] == "square":
            if header is None:
                raise DatumSyntaxError(lineno, "square line before header")
            if len(parts) != 5:
                raise DatumSyntaxError(lineno, "square line needs exactly 4 letters")
            squares.append((parts[1:], lineno))
        else:
            raise DatumSyntaxError(lineno, f"unknown directive {parts[0]!r}")
    if header is None:
        raise DatumSyntaxError(1, "missing header line")

    d1, d2, tau1, tau2 = header["d1"], header["d2"], header["tau1"], header["tau2"]
    if d1 < 3 or d2 < 3:
        raise DatumSyntaxError(1, f"degrees must be >= 3, got ({d1},{d2})")
    try:
        inv_a = involution(d1, tau1)
        inv_b = involution(d2, tau2)
    except DatumError as e:
        raise DatumSyntaxError(1, str(e))

    quads: set[Quad] = set()
    stub = DatumSpec(d1, d2, tau1, tau2, ())
    for tokens, lineno in squares:
        a = _parse_letter_token(tokens[0], "a", d1, inv_a, lineno)
        b = _parse_letter_token(tokens[1], "b", d2, inv_b, lineno)
        ap = _parse_letter_token(tokens[2], "a", d1, inv_a, lineno)
        bp = _parse_letter_token(tokens[3], "b", d2, inv_b, lineno)
        quads |= stub.orbit(Quad(a, b, ap, bp))
    return DatumSpec(d1, d2, tau1, tau2, quads)


def _letter_token(side: str, idx: int, inv: tuple[int, ...]) -> str:
    if inv[idx] == idx or idx <= inv[idx]:
        return f"{side}{idx}"
    return f"{side}{inv[idx]}^-1"


def format_datum(datum: DatumSpec, comment: str | None = None) -> str:
    """Serialize a datum in the text format, one line per geometric square."""
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"datum d1={datum.d1} d2={datum.d2} "
                 f"tau1={datum.tau1} tau2={datum.tau2}")
    for orbit in datum.geometric_squares():
        q = min(orbit)
        lines.append("square "
                     + " ".join((_letter_token("a", q.a, datum.inv_a),
                                 _letter_token("b", q.b, datum.inv_b),
                                 _letter_token("a", q.ap, datum.inv_a),
                                 _letter_token("b", q.bp, datum.inv_b))))
    return "\n".join(lines) + "\n"


# -- equivalence and canonical forms ----------------------------------------

def relabelings(d: int, tau: int) -> list[tuple[int, ...]]:
    """All permutations of the oriented letters commuting with the inversion.

    Each is returned as a 1-indexed image tuple.  The group permutes the
    non-self-inverse letter pairs (with optional flips) and, independently,
    the self-inverse letters; its order is p! * 2^p * tau! with p = (d-tau)/2.
    """
    inv = involution(d, tau)
    p = (d - tau) // 2
    pairs = list(range(1, p + 1))            # representatives i, inverse d+1-i
    fixed = list(range(p + 1, p + tau + 1))  # self-inverse band
    out = []
    for pair_img in itertools.permutations(pairs):
        for flips in itertools.product((0, 1), repeat=p):
            for fixed_img in itertools.permutations(fixed):
                img = [0] * (d + 1)
                for i, (j, fl) in enumerate(zip(pair_img, flips), start=1):
                    img[i] = inv[j] if fl else j
                    img[d + 1 - i] = j if fl else inv[j]
                for i, j in zip(fixed, fixed_img):
                    img[i] = j
                out.append(tuple(img))
    return out


def apply_relabeling(datum: DatumSpec, alpha: tuple[int, ...],
                     beta: tuple[int, ...]) -> DatumSpec:
    """The datum obtained by relabeling both alphabets (same taus)."""
    quads = [(alpha[q.a], beta[q.b], alpha[q.ap], beta[q.bp]) for q in datum.R]
    return DatumSpec(datum.d1, datum.d2, datum.tau1, datum.tau2, quads)


def mirror(datum: DatumSpec) -> DatumSpec:
    """Swap the roles of the two trees: (a,b,a',b') becomes (b,a',b',a)."""
    quads = [(q.b, q.ap, q.bp, q.a) for q in datum.R]
    return DatumSpec(datum.d2, datum.d1, datum.tau2, datum.tau1, quads)


def encode(datum: DatumSpec) -> bytes:
    """Deterministic byte encoding: header then the sorted quads."""
    head = bytes((datum.d1, datum.d2, datum.tau1, datum.tau2))
    return head + b"".join(bytes(q) for q in sorted(datum.R))


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    """Minimal encoding over the equivalence class, plus the side-swap flag.

    Equality and hashing use the encoding bytes only: the swap flag records
    how the minimum was reached, which may differ between equivalent inputs.
    """

    encoding: bytes
    swapped: bool

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalForm) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def hex(self) -> str:
        return self.encoding.hex()


def canonical_form(datum: DatumSpec) -> CanonicalForm:
    """Minimum of encode() over every equivalence of the datum.

    Equivalences relabel each alphabet by a permutation commuting with its
    inversion; when d1 = d2 the two sides may additionally be exchanged.
    Two data are equivalent iff their canonical forms are equal.
    """
    alphas = relabelings(datum.d1, datum.tau1)
    betas = relabelings(datum.d2, datum.tau2)
    best = None
    best_swapped = False
    for cand, swapped in ((datum, False),) + (
            ((mirror(datum), True),) if datum.d1 == datum.d2 else ()):
        c_alphas = alphas if not swapped else relabelings(cand.d1, cand.tau1)
        c_betas = betas if not swapped else relabelings(cand.d2, cand.tau2)
        for alpha in c_alphas:
            for beta in c_betas:
                enc = encode(apply_relabeling(cand, alpha, beta))
                if best is None or enc < best:
                    best = enc
                    best_swapped = swapped
    return CanonicalForm(best, best_swapped)


def equivalent(d1: DatumSpec, d2: DatumSpec) -> bool:
    """Direct equivalence test (search over relabelings, and the side swap)."""
    if equivalent_sameside(d1, d2):
        return True
    if d1.d1 == d1.d2 and equivalent_sameside(mirror(d1), d2):
        return True
    return False


def equivalent_sameside(d1: DatumSpec, d2: DatumSpec) -> bool:
    """Equivalence by same-side relabelings only (no tree swap)."""
    if (d1.d1, d1.d2, d1.tau1, d1.tau2) != (d2.d1, d2.d2, d2.tau1, d2.tau2):
        return False
    target = d2.R
    for alpha in relabelings(d1.d1, d1.tau1):
        for beta in relabelings(d1.d2, d1.tau2):
            if all(Quad(alpha[q.a], beta[q.b], alpha[q.ap], beta[q.bp]) in target
                   for q in d1.R):
                return True
    return False


# -- vertex-fixing automorphisms of the 4-vertex complex ---------------------

@dataclass
class AutReport:
    """Automorphisms of the squared complex fixing all four vertices.

    Each automorphism is a quadruple (alpha1, beta1, alpha2, beta2) of letter
    permutations acting independently on the four parallel edge families
    (bottom/right/top/left of the squares); the count includes the identity.
    """

    count: int
    quadruples: list[tuple[tuple[int, ...], ...]]

    @property
    def group_name(self) -> str:
        if self.count == 1:
            return "C2xC2"
        if self.count == 2:
            return "C2xC2xC2"
        return f"order-{4 * self.count}"


def vertex_fixing_automorphisms(datum: DatumSpec) -> AutReport:
    """Count the complex automorphisms fixing the four vertices.

    In the four-vertex complex the letter/inverse pairing is not part of the
    structure, so the four permutations are arbitrary.  A quadruple
    (alpha1, beta1, alpha2, beta2) is an automorphism iff it maps the quad set
    to itself slotwise: (alpha1(a), beta1(b), alpha2(a'), beta2(b')) in R for
    every quad.  Fixing (alpha1, beta1) forces (alpha2, beta2) via the corner
    tables, so the search backtracks over beta1 for each alpha1.
    """
    d1, d2 = datum.d1, datum.d2
    c1 = datum.corner_tables()[0]
    by_b = [[] for _ in range(d2 + 1)]
    for q in datum.R:
        by_b[q.b].append(q)
    found = []
    for perm in itertools.permutations(range(1, d1 + 1)):
        alpha1 = (0,) + perm
        beta1 = [0] * (d2 + 1)
        used1 = [False] * (d2 + 1)
        alpha2 = [0] * (d1 + 1)
        rev2 = [0] * (d1 + 1)
        beta2 = [0] * (d2 + 1)
        rev2b = [0] * (d2 + 1)

        def place(b: int) -> None:
            if b > d2:
                found.append(
                    (alpha1, tuple(beta1), tuple(alpha2), tuple(beta2))
                )
                return
            for c in range(1, d2 + 1):
                if used1[c]:
                    continue
                trail = []
                ok = True
                for q in by_b[b]:
                    img = c1[(alpha1[q.a], c)]
                    if alpha2[q.ap] == 0 and rev2[img.ap] == 0:
                        alpha2[q.ap] = img.ap
                        rev2[img.ap] = q.ap
                        trail.append((alpha2, rev2, q.ap, img.ap))
                    elif alpha2[q.ap] != img.ap:
                        ok = False
                        break
                    if beta2[q.bp] == 0 and rev2b[img.bp] == 0:
                        beta2[q.bp] = img.bp
                        rev2b[img.bp] = q.bp
                        trail.append((beta2, rev2b, q.bp, img.bp))
                    elif beta2[q.bp] != img.bp:
                        ok = False
                        break
                if ok:
                    used1[c] = True
                    beta1[b] = c
                    place(b + 1)
                    used1[c] = False
                    beta1[b] = 0
                for fwd, rev, src, dst in trail:
                    fwd[src] = 0
                    rev[dst] = 0

        place(1)
    return AutReport(len(found), found)
