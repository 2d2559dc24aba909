"""Homology-level Kirby calculus on framed-link linking matrices.

A surgery diagram is tracked only through its symmetric linking matrix
(framings on the diagonal) plus a gray/black tag per component: gray
components form the plumbing part, black ones are auxiliary surgery
curves.  Blow-ups and blow-downs act on the matrix exactly as the
geometric moves act on homology, so determinants, inertia and Smith
invariant factors transform on the nose; nothing here sees crossings,
so all statements are about the homology of the presented manifold.

Blowing down a component j with framing eps in {+1, -1} deletes it and
sets m[i][k] -= eps * m[i][j] * m[j][k] (the k = i case subtracts
eps * m[i][j]^2 from the framing).  Blowing up along an integer vector
v with sign s appends a component framed -s linking v and twists the
rest by m[i][k] -= s * v[i] * v[k]; the result is congruent to the
block sum with <-s>, and the two moves are mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .lattice import SymmetricIntMatrix, determinant, smith_invariant_factors
from .plumbing import PlumbingGraph, intersection_matrix

GRAY = "gray"
BLACK = "black"


class FramingNotUnit(ValueError):
    """blow_down needs framing +1 or -1."""


class NotLinked(ValueError):
    """The move needs a geometric linking that is not there."""


class AmbiguousTarget(ValueError):
    """Several components qualify; the caller must name the target."""


class IterationCap(RuntimeError):
    """reduce exceeded its step cap."""


@dataclass(frozen=True)
class Component:
    id: str
    tag: str

    def __post_init__(self):
        if self.tag not in (GRAY, BLACK):
            raise ValueError("tag must be 'gray' or 'black', got %r" % (self.tag,))


class FramedLinkMatrix:
    """Tagged components plus their symmetric linking matrix.

    The empty diagram (no components) is legal; it is where a full
    reduction of a unit form terminates.
    """

    __slots__ = ("_components", "_matrix")

    def __init__(
        self,
        components: Iterable[Union[Component, Tuple[str, str]]],
        matrix: Union[SymmetricIntMatrix, Iterable[Sequence[int]]],
    ):
        comps = tuple(
            c if isinstance(c, Component) else Component(str(c[0]), c[1])
            for c in components
        )
        if not isinstance(matrix, SymmetricIntMatrix):
            matrix = SymmetricIntMatrix(matrix)
        if matrix.dim != len(comps):
            raise ValueError("matrix dimension must match component count")
        if len({c.id for c in comps}) != len(comps):
            raise ValueError("component ids must be unique")
        self._components = comps
        self._matrix = matrix

    @property
    def components(self) -> Tuple[Component, ...]:
        return self._components

    @property
    def matrix(self) -> SymmetricIntMatrix:
        return self._matrix

    @property
    def dim(self) -> int:
        return len(self._components)

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(c.id for c in self._components)

    def index_of(self, key: Union[int, str]) -> int:
        if isinstance(key, int):
            if not 0 <= key < self.dim:
                raise ValueError("component index %d out of range" % key)
            return key
        for i, c in enumerate(self._components):
            if c.id == key:
                return i
        raise ValueError("no component with id %r" % (key,))

    def framing(self, key: Union[int, str]) -> int:
        i = self.index_of(key)
        return self._matrix[i, i]

    def linking(self, a: Union[int, str], b: Union[int, str]) -> int:
        return self._matrix[self.index_of(a), self.index_of(b)]

    @classmethod
    def from_plumbing(cls, g: PlumbingGraph, tag: str = GRAY) -> "FramedLinkMatrix":
        comps = [Component(vid, tag) for vid in g.vertex_ids]
        return cls(comps, intersection_matrix(g))

    def augmented(
        self,
        links: Sequence[int],
        framing: int,
        new_id: Optional[str] = None,
        tag: str = BLACK,
    ) -> "FramedLinkMatrix":
        """Adjoin one component with the given links and framing.

        This is plain matrix bordering (no twist); it models drawing a
        new curve into the diagram, not a Kirby move.
        """
        comps = list(self._components)
        comps.append(Component(new_id or self._fresh_id(), tag))
        return FramedLinkMatrix(comps, self._matrix.bordered(links, framing))

    def _fresh_id(self) -> str:
        used = {c.id for c in self._components}
        k = len(used)
        while "k%d" % k in used:
            k += 1
        return "k%d" % k

    def to_json_dict(self) -> dict:
        return {
            "components": [
                {"id": c.id, "tag": c.tag} for c in self._components
            ],
            "matrix": self._matrix.to_lists(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FramedLinkMatrix":
        if not isinstance(data, dict):
            raise ValueError("framed link JSON must be an object")
        try:
            comps = [(c["id"], c["tag"]) for c in data["components"]]
            matrix = data["matrix"]
        except (KeyError, TypeError) as exc:
            raise ValueError("malformed framed link JSON: %s" % exc) from None
        return cls(comps, matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FramedLinkMatrix):
            return NotImplemented
        return self._components == other._components and self._matrix == other._matrix

    def __repr__(self) -> str:
        return "FramedLinkMatrix(%r, %r)" % (
            [(c.id, c.tag) for c in self._components],
            self._matrix.to_lists(),
        )


def blow_down(link: FramedLinkMatrix, j: Union[int, str]) -> FramedLinkMatrix:
    """Delete a +-1-framed component, twisting everything it links."""
    j = link.index_of(j)
    eps = link.framing(j)
    if eps not in (1, -1):
        raise FramingNotUnit(
            "component %r has framing %d, need +1 or -1"
            % (link.components[j].id, eps)
        )
    m = link.matrix
    keep = [i for i in range(link.dim) if i != j]
    rows = [
        [m[i, k] - eps * m[i, j] * m[j, k] for k in keep] for i in keep
    ]
    return FramedLinkMatrix([link.components[i] for i in keep], rows)


def blow_up(
    link: FramedLinkMatrix,
    links: Sequence[int],
    sign: int,
    new_id: Optional[str] = None,
    tag: str = BLACK,
) -> FramedLinkMatrix:
    """Adjoin a (-sign)-framed component along the vector links.

    The result is congruent to link (+) <-sign>; blowing the new
    component back down recovers the input bit for bit.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if len(links) != link.dim:
        raise ValueError("linking vector length must equal dim")
    v = [int(x) for x in links]
    m = link.matrix
    n = link.dim
    rows = [
        [m[i, k] - sign * v[i] * v[k] for k in range(n)] + [v[i]]
        for i in range(n)
    ]
    rows.append(v + [-sign])
    comps = list(link.components)
    comps.append(Component(new_id or link._fresh_id(), tag))
    return FramedLinkMatrix(comps, rows)


def unlink_blowup(
    link: FramedLinkMatrix,
    i: Union[int, str],
    j: Union[int, str],
    new_id: Optional[str] = None,
    tag: str = BLACK,
) -> FramedLinkMatrix:
    """Blow up with sign +1 along e_i + e_j, splitting one geometric
    linking between components i and j.

    Requires linking(i, j) >= 1.  Framings of i and j drop by 1, their
    mutual linking drops by 1, and the new -1-framed component links
    each of them once.
    """
    i = link.index_of(i)
    j = link.index_of(j)
    if i == j:
        raise ValueError("need two distinct components")
    if link.linking(i, j) < 1:
        raise NotLinked(
            "components %r and %r have linking %d, need >= 1"
            % (link.components[i].id, link.components[j].id, link.linking(i, j))
        )
    v = [0] * link.dim
    v[i] = 1
    v[j] = 1
    return blow_up(link, v, +1, new_id=new_id, tag=tag)


def reduce_with_trace(
    link: FramedLinkMatrix, max_steps: Optional[int] = None
) -> Tuple[FramedLinkMatrix, List[dict]]:
    """Greedily blow down +-1-framed components, recording each move.

    The lowest-index unit-framed component goes first, so the result
    is deterministic.  Each trace entry holds the move name, the
    component id and the matrix after the move.  max_steps defaults to
    10 * dim, which a blow-down-only reduction can never reach since
    every step deletes a component.
    """
    cap = 10 * link.dim if max_steps is None else max_steps
    cur = link
    steps: List[dict] = []
    while True:
        j = next(
            (i for i in range(cur.dim) if cur.framing(i) in (1, -1)), None
        )
        if j is None:
            return cur, steps
        if len(steps) >= cap:
            raise IterationCap(
                "reduction did not terminate within %d steps" % cap
            )
        cid = cur.components[j].id
        cur = blow_down(cur, j)
        steps.append(
            {
                "move": "blow_down",
                "component": cid,
                "matrix_after": cur.matrix.to_lists(),
            }
        )


def reduce(
    link: FramedLinkMatrix, max_steps: Optional[int] = None
) -> FramedLinkMatrix:
    """Terminal diagram of the greedy blow-down reduction."""
    return reduce_with_trace(link, max_steps)[0]


def gray_plumbing(link: FramedLinkMatrix) -> PlumbingGraph:
    """The plumbing graph spanned by the gray components.

    Off-diagonal gray linkings must be 0 or +-1; a +-1 becomes an
    edge (on a tree, edge signs are orientation choices, so the sign
    is dropped).  Raises ValueError when the gray part is not a
    connected plumbing pattern.
    """
    idx = [i for i, c in enumerate(link.components) if c.tag == GRAY]
    vertices = [(link.components[i].id, link.framing(i)) for i in idx]
    edges = []
    for a, b in combinations(idx, 2):
        l = link.linking(a, b)
        if l == 0:
            continue
        if abs(l) != 1:
            raise ValueError(
                "gray linking %d between %r and %r is not a plumbing edge"
                % (l, link.components[a].id, link.components[b].id)
            )
        edges.append((link.components[a].id, link.components[b].id))
    return PlumbingGraph(vertices, edges)


@dataclass
class SearchHit:
    """One surgery-curve candidate: its linking vector (in vertex
    order) and the trace of the reduction that reached [[0]]."""

    vector: Tuple[int, ...]
    trace: List[dict] = field(repr=False)


def surgery_search(
    g: PlumbingGraph, max_link: int, max_support: int
) -> List[SearchHit]:
    """All -1-framed curve candidates presenting a homology S^1 x S^2.

    Enumerates integer linking vectors with entries in
    [-max_link, max_link] and at most max_support nonzero entries, and
    keeps those whose augmented matrix has determinant 0, cokernel Z
    (Smith factors 1, ..., 1, 0) and whose greedy reduction terminates
    at the single 0-framed component.  Candidates are homology-level
    only; hits are returned in lexicographic vector order.  Candidate
    evaluations share nothing and may run concurrently.
    """
    if max_link < 1:
        raise ValueError("max_link must be >= 1")
    if max_support < 1:
        raise ValueError("max_support must be >= 1")
    base = FramedLinkMatrix.from_plumbing(g)
    n = base.dim
    nonzero = [v for v in range(-max_link, max_link + 1) if v]
    hits: List[SearchHit] = []
    for size in range(0, min(max_support, n) + 1):
        for positions in combinations(range(n), size):
            for values in product(nonzero, repeat=size):
                vec = [0] * n
                for pos, val in zip(positions, values):
                    vec[pos] = val
                aug = base.augmented(vec, -1)
                if determinant(aug.matrix) != 0:
                    continue
                factors = smith_invariant_factors(aug.matrix)
                if factors.count(0) != 1 or any(
                    f != 1 for f in factors if f
                ):
                    continue
                terminal, trace = reduce_with_trace(aug)
                if terminal.dim == 1 and terminal.framing(0) == 0:
                    hits.append(SearchHit(tuple(vec), trace))
    hits.sort(key=lambda h: h.vector)
    return hits


def family_step(
    link: FramedLinkMatrix, target: Union[int, str, None] = None
) -> FramedLinkMatrix:
    """One iteration step: unlink the black curve from a gray component.

    The diagram must carry exactly one black component, framed -1.
    With target=None the target is the unique gray -2-framed component
    the black curve links exactly once (NotLinked when none,
    AmbiguousTarget when several); an explicit target may be any gray
    component the black curve links.  After the unlinking blow-up the
    old black curve is retagged gray and the new -1-framed curve
    becomes the black one, so the gray part gains one vertex.
    """
    blacks = [i for i, c in enumerate(link.components) if c.tag == BLACK]
    if len(blacks) != 1:
        raise ValueError(
            "need exactly one black component, found %d" % len(blacks)
        )
    b = blacks[0]
    if link.framing(b) != -1:
        raise ValueError(
            "black component %r must be framed -1, has %d"
            % (link.components[b].id, link.framing(b))
        )
    if target is None:
        cands = [
            i
            for i, c in enumerate(link.components)
            if c.tag == GRAY
            and link.framing(i) == -2
            and link.linking(b, i) == 1
        ]
        if not cands:
            raise NotLinked(
                "no gray -2-framed component linked once by the black curve"
            )
        if len(cands) > 1:
            raise AmbiguousTarget(
                "components %s all qualify; the caller must name the target"
                % ", ".join(repr(link.components[i].id) for i in cands)
            )
        t = cands[0]
    else:
        t = link.index_of(target)
        if link.components[t].tag != GRAY:
            raise ValueError("target %r is not gray" % (link.components[t].id,))
    out = unlink_blowup(link, b, t, tag=BLACK)
    comps = list(out.components)
    comps[b] = Component(comps[b].id, GRAY)
    return FramedLinkMatrix(comps, out.matrix)
