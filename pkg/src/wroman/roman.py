"""Roman labelings and the domination predicates they are checked against."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ArityMismatchError, GraphError
from .graph import WeightedGraph, check_vertex_set


@dataclass(frozen=True)
class RomanLabeling:
    """A label in ``{0, 1, 2}`` for every vertex, stored densely."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if any(x not in (0, 1, 2) for x in labels):
            raise GraphError(f"labels must be 0, 1 or 2: {labels}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def parse(cls, text: str) -> RomanLabeling:
        """Read the comma-separated form, e.g. ``"2,0,1"``."""
        text = text.strip()
        return cls(tuple(int(t) for t in text.split(",")) if text else ())

    @classmethod
    def from_sets(cls, n: int, ones: Iterable[int] = (), twos: Iterable[int] = ()) -> RomanLabeling:
        labels = [0] * n
        for v in ones:
            labels[v] = 1
        for v in twos:
            labels[v] = 2
        return cls(tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __str__(self) -> str:
        return ",".join(map(str, self.labels))

    def part(self, label: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == label)

    @property
    def V0(self) -> frozenset[int]:
        return self.part(0)

    @property
    def V1(self) -> frozenset[int]:
        return self.part(1)

    @property
    def V2(self) -> frozenset[int]:
        return self.part(2)


def _as_labeling(G: WeightedGraph, f) -> RomanLabeling:
    if not isinstance(f, RomanLabeling):
        f = RomanLabeling(tuple(f))
    if len(f) != G.n:
        raise ArityMismatchError(f"labeling has {len(f)} entries for {G.n} vertices")
    return f


def is_wrdf(G: WeightedGraph, f: RomanLabeling | Sequence[int]) -> bool:
    """True iff every vertex labelled 0 has a neighbour labelled 2."""
    f = _as_labeling(G, f)
    adj = G.adjacency
    return all(
        any(f.labels[u] == 2 for u in adj[v])
        for v, x in enumerate(f.labels)
        if x == 0
    )


def labeling_weight(G: WeightedGraph, f: RomanLabeling | Sequence[int]) -> Fraction:
    f = _as_labeling(G, f)
    return sum((x * w for x, w in zip(f.labels, G.weights)), Fraction(0))


def is_dominating(G: WeightedGraph, D: Iterable[int]) -> bool:
    """True iff every vertex lies in ``D`` or has a neighbour in ``D``."""
    D = check_vertex_set(G, D)
    adj = G.adjacency
    return all(v in D or not adj[v].isdisjoint(D) for v in G.vertices())
