"""Quivers: type-A paths under any orientation, and star-shaped quivers.

Vertices are ``1..n`` so that intervals ``[a, b]`` read directly as vertex
ranges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BadLength, BadOrientation, NotAPath, QuiverError

_ARROW_CHARS = {"<": "<", ">": ">", "←": "<", "→": ">"}


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic connected quiver without loops or multiple arrows."""

    n: int
    arrows: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if self.n < 1:
            raise QuiverError("a quiver needs at least one vertex")
        seen = set()
        for s, t in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise QuiverError(f"arrow {s}->{t} leaves the vertex range 1..{self.n}")
            if s == t:
                raise QuiverError(f"loop at vertex {s}")
            if (s, t) in seen or (t, s) in seen:
                raise QuiverError(f"multiple arrows between {s} and {t}")
            seen.add((s, t))
        if not self._connected():
            raise QuiverError("underlying graph is not connected")
        if self._has_cycle():
            raise QuiverError("quiver has an oriented cycle")

    def _connected(self) -> bool:
        nbrs = {v: set() for v in self.vertices}
        for s, t in self.arrows:
            nbrs[s].add(t)
            nbrs[t].add(s)
        stack, seen = [1], {1}
        while stack:
            v = stack.pop()
            for w in nbrs[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.n

    def _has_cycle(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        done = 0
        while ready:
            v = ready.pop()
            done += 1
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        return done != self.n

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arrow(self, s: int, t: int) -> bool:
        return (s, t) in self.arrows

    def name(self, v: int) -> str:
        return self.names[v - 1] if self.names else str(v)

    def is_path(self) -> bool:
        """True iff the underlying graph is the path 1 - 2 - ... - n."""
        if len(self.arrows) != self.n - 1:
            return False
        return all(self.has_arrow(i, i + 1) or self.has_arrow(i + 1, i) for i in range(1, self.n))

    def orientation(self) -> "PathOrientation":
        if not self.is_path():
            raise NotAPath("quiver is not a path 1 - 2 - ... - n")
        return PathOrientation("".join(">" if self.has_arrow(i, i + 1) else "<" for i in range(1, self.n)))

    def to_json(self) -> dict:
        return {"n": self.n, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls(int(data["n"]), tuple(tuple(a) for a in data["arrows"]))


@dataclass(frozen=True)
class PathOrientation:
    """Edge directions of a path: character ``i`` (0-based) joins vertices i+1 and i+2.

    ``'<'`` is the arrow ``(i+2) -> (i+1)``, ``'>'`` the arrow ``(i+1) -> (i+2)``.
    """

    bits: str

    def __post_init__(self):
        try:
            norm = "".join(_ARROW_CHARS[c] for c in self.bits)
        except KeyError as exc:
            raise BadOrientation(f"orientation characters must be '<' or '>', got {exc.args[0]!r}") from None
        object.__setattr__(self, "bits", norm)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    @classmethod
    def linear(cls, n: int) -> "PathOrientation":
        """Unique sink at 1, unique source at n."""
        return cls("<" * (n - 1))

    @classmethod
    def zigzag(cls, n: int, s: int) -> "PathOrientation":
        """Unique source at ``s``, arrows running down to both ends."""
        if not 1 <= s <= n:
            raise BadOrientation(f"source position {s} outside 1..{n}")
        return cls("<" * (s - 1) + ">" * (n - s))

    @classmethod
    def alternating(cls, n: int) -> "PathOrientation":
        """Alternating orientation starting with a sink at vertex 1."""
        return cls("".join("<" if i % 2 == 0 else ">" for i in range(n - 1)))

    @classmethod
    def all_orientations(cls, n: int) -> Iterable["PathOrientation"]:
        for code in range(2 ** (n - 1)):
            yield cls("".join(">" if (code >> i) & 1 else "<" for i in range(n - 1)))


def path_quiver(n: int, orientation: PathOrientation | str | Sequence[str]) -> Quiver:
    if n < 1:
        raise QuiverError("n must be at least 1")
    if not isinstance(orientation, PathOrientation):
        orientation = PathOrientation("".join(orientation))
    if len(orientation) != n - 1:
        raise BadLength(f"orientation has {len(orientation)} edges, a path on {n} vertices needs {n - 1}")
    arrows = tuple((i + 1, i + 2) if c == ">" else (i + 2, i + 1) for i, c in enumerate(orientation.bits))
    return Quiver(n, arrows)


@dataclass(frozen=True)
class StarShape:
    """Star(l1, ..., lr) with the center as unique source or unique sink."""

    ray_lengths: tuple[int, ...]
    center_role: str = "source"

    def __post_init__(self):
        object.__setattr__(self, "ray_lengths", tuple(int(x) for x in self.ray_lengths))
        if any(x < 1 for x in self.ray_lengths):
            raise QuiverError("ray lengths must be at least 1")
        if self.center_role not in ("source", "sink"):
            raise QuiverError("center_role must be 'source' or 'sink'")

    @property
    def r(self) -> int:
        return len(self.ray_lengths)

    @property
    def vertex_count(self) -> int:
        return 1 + sum(self.ray_lengths)

    def vertex(self, ray: int, pos: int) -> int:
        """Quiver vertex of v_{ray,pos} (both 1-based); the center is vertex 1."""
        if pos == 0:
            return 1
        return 1 + sum(self.ray_lengths[: ray - 1]) + pos

    def vertex_names(self) -> tuple[str, ...]:
        names = ["c"]
        for i, length in enumerate(self.ray_lengths, start=1):
            names.extend(f"v{i},{j}" for j in range(1, length + 1))
        return tuple(names)

    def dynkin_type(self) -> str | None:
        """``'A_n'``, ``'D_n'`` or ``'E_n'`` when the underlying graph is Dynkin, else None."""
        n = self.vertex_count
        lengths = sorted(self.ray_lengths)
        if len(lengths) <= 2:
            return f"A_{n}"
        if len(lengths) == 3:
            if lengths[:2] == [1, 1]:
                return f"D_{n}"
            if lengths[:2] == [1, 2] and n in (6, 7, 8):
                return f"E_{n}"
        return None


def star_quiver(shape: StarShape) -> Quiver:
    arrows = []
    for i, length in enumerate(shape.ray_lengths, start=1):
        for j in range(length):
            s, t = shape.vertex(i, j), shape.vertex(i, j + 1)
            arrows.append((s, t) if shape.center_role == "source" else (t, s))
    return Quiver(shape.vertex_count, tuple(arrows), names=shape.vertex_names())


def sources_and_sinks(q: Quiver) -> tuple[set[int], set[int]]:
    heads = {t for _, t in q.arrows}
    tails = {s for s, _ in q.arrows}
    return {v for v in q.vertices if v not in heads}, {v for v in q.vertices if v not in tails}
