"""Rectangle filling and word actions on tree balls.

The product of the two trees is the Cayley complex of the group: vertices of
one tree are addressed by reduced words in the opposite alphabet.  Filling a
rectangle of squares from its bottom and right edges computes the relation
bottom * right = left * top, which drives every ball-action computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .datum import DatumError, DatumSpec, Quad, mirror

__all__ = [
    "Word",
    "BallAction",
    "fill_rectangle",
    "word_action_on_ball",
    "local_action_permutation",
    "sphere_paths",
    "ball_paths",
    "letters_on_ball",
]

Word = tuple[int, ...]
Path = tuple[int, ...]


def fill_rectangle(datum: DatumSpec, bottom: Sequence[int],
                   right: Sequence[int]) -> tuple[Word, Word]:
    """Fill the |bottom| x |right| rectangle determined by its two edge words.

    ``bottom`` is a word in a-letters read left to right, ``right`` a word in
    b-letters read bottom to top.  Returns (top, left) with the same reading
    directions, satisfying bottom * right = left * top in the group.  Words
    may be unreduced; the grid width/height equal the literal word lengths.
    """
    c1 = datum.corner_tables()[0]
    inv_a, inv_b = datum.inv_a, datum.inv_b
    m = len(bottom)
    n = len(right)
    # top_row[j]: current top label (left to right) above column j;
    # starts as the bottom word and is rewritten row by row.
    top_row = list(bottom)
    left_word = []
    for i in range(n):
        lab = right[i]
        for j in range(m - 1, -1, -1):
            q = c1[(top_row[j], lab)]
            top_row[j] = inv_a[q.ap]
            lab = inv_b[q.bp]
        left_word.append(lab)
    return tuple(top_row), tuple(left_word)


def sphere_paths(d: int, inv: tuple[int, ...], k: int) -> list[Path]:
    """All reduced paths of length exactly k in the d-regular labelled tree."""
    if k == 0:
        return [()]
    paths: list[Path] = [(x,) for x in range(1, d + 1)]
    for _ in range(k - 1):
        paths = [p + (x,) for p in paths for x in range(1, d + 1)
                 if x != inv[p[-1]]]
    return paths


def ball_paths(d: int, inv: tuple[int, ...], n: int) -> list[Path]:
    """All reduced paths of length at most n, in breadth-first sorted order."""
    out: list[Path] = []
    for k in range(n + 1):
        out.extend(sorted(sphere_paths(d, inv, k)))
    return out


@dataclass
class BallAction:
    """The permutation a word induces on the radius-n ball of one tree.

    ``mapping`` sends every reduced path of length <= n (a vertex address) to
    its image path of the same length.
    """

    side: int
    radius: int
    mapping: dict[Path, Path]

    def apply(self, path: Sequence[int]) -> Path:
        return self.mapping[tuple(path)]

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())

    def fixes_ball(self, r: int) -> bool:
        return all(k == v for k, v in self.mapping.items() if len(k) <= r)

    def restrict(self, r: int) -> "BallAction":
        if r > self.radius:
            raise DatumError(f"cannot restrict radius {self.radius} to {r}")
        return BallAction(self.side, r,
                          {k: v for k, v in self.mapping.items() if len(k) <= r})

    def compose(self, other: "BallAction") -> "BallAction":
        """self after other (apply ``other`` first)."""
        if self.side != other.side or self.radius != other.radius:
            raise DatumError("ball actions not composable")
        return BallAction(self.side, self.radius,
                          {k: self.mapping[v] for k, v in other.mapping.items()})

    def as_permutation(self, points: Sequence[Path]) -> tuple[int, ...]:
        """Image array over the given point ordering (0-indexed)."""
        index = {p: i for i, p in enumerate(points)}
        return tuple(index[self.mapping[p]] for p in points)


def _oriented_side_data(datum: DatumSpec, side: int) -> DatumSpec:
    """The datum whose side-2 machinery computes the requested side's action.

    Side 2 actions (a-words on the second tree) use the datum itself; side 1
    actions use the mirrored datum, which presents the same group with the
    roles of the trees exchanged.
    """
    if side == 2:
        return datum
    if side == 1:
        return mirror(datum)
    raise DatumError(f"side must be 1 or 2, got {side}")


def word_action_on_ball(datum: DatumSpec, word: Sequence[int], side: int,
                        n: int) -> BallAction:
    """Action of a word on the radius-n ball of the tree it stabilizes.

    For side 2 the word is over a-letters and acts on the second tree (paths
    of b-letters); for side 1 the word is over b-letters and acts on the first
    tree.  Computed vertex by vertex: alongside each image path we carry the
    residual word obtained by filling one more one-column rectangle per step.
    """
    work = _oriented_side_data(datum, side)
    c1 = work.corner_tables()[0]
    inv_a, inv_b = work.inv_a, work.inv_b
    d = work.d2
    mapping: dict[Path, Path] = {(): ()}
    # frontier entries: (path, image path, residual word over the acting side)
    frontier = [((), (), tuple(word))]
    for _ in range(n):
        new_frontier = []
        for path, image, residual in frontier:
            last = inv_b[path[-1]] if path else 0
            for x in range(1, d + 1):
                if x == last:
                    continue
                # fill the 1-column rectangle: bottom = residual, right = [x]
                lab = x
                new_res = list(residual)
                for j in range(len(new_res) - 1, -1, -1):
                    q = c1[(new_res[j], lab)]
                    new_res[j] = inv_a[q.ap]
                    lab = inv_b[q.bp]
                child = path + (x,)
                child_img = image + (lab,)
                mapping[child] = child_img
                new_frontier.append((child, child_img, tuple(new_res)))
        frontier = new_frontier
    return BallAction(side, n, mapping)


def local_action_permutation(datum: DatumSpec, letter: int, side: int) -> tuple[int, ...]:
    """The permutation a letter induces on the edge labels at its fixed vertex.

    Returns a 0-indexed image tuple over the d oriented letters of the
    opposite alphabet: entry i-1 is the image index of letter i, so a side-2
    letter a maps the direction b to the inverse of the left edge of the
    square with bottom a and right b.
    """
    work = _oriented_side_data(datum, side)
    c1 = work.corner_tables()[0]
    inv_b = work.inv_b
    return tuple(inv_b[c1[(letter, b)].bp] - 1 for b in range(1, work.d2 + 1))


def letters_on_ball(datum: DatumSpec, side: int, n: int
                    ) -> tuple[list[Path], list[tuple[int, ...]]]:
    """Point list of the radius-n ball plus one permutation per acting letter.

    The acting letters are the opposite alphabet's oriented letters 1..d in
    order; points are the reduced paths of length <= n in breadth-first sorted
    order, shared by all returned permutations.
    """
    work = _oriented_side_data(datum, side)
    points = ball_paths(work.d2, work.inv_b, n)
    perms = []
    for g in range(1, work.d1 + 1):
        act = word_action_on_ball(datum, (g,), side, n)
        perms.append(act.as_permutation(points))
    return points, perms
