"""Maximum bipartite matching (Hopcroft-Karp) and Koenig vertex covers.

Both sides are indexed ``0..n-1``.  ``adj[u]`` lists the right vertices
adjacent to left vertex ``u``; neighbours are scanned in the given order, so
results are fully determined by the input (no hashing, no randomness).
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

UNMATCHED = -1
_INF = float("inf")


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[list[int], list[int]]:
    """Return ``(match_left, match_right)`` for a maximum matching.

    ``match_left[u]`` is the right partner of ``u`` or ``UNMATCHED``; likewise
    for ``match_right``.
    """
    n_left = len(adj)
    match_left = [UNMATCHED] * n_left
    match_right = [UNMATCHED] * n_right
    dist = [_INF] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_left[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_right[v]
                if w == UNMATCHED:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def augment(root: int) -> bool:
        # iterative layered DFS; stack holds (left vertex, next neighbour position)
        stack = [[root, 0]]
        path_right: list[int] = []
        while stack:
            frame = stack[-1]
            u, pos = frame
            nbrs = adj[u]
            advanced = False
            while pos < len(nbrs):
                v = nbrs[pos]
                pos += 1
                w = match_right[v]
                if w == UNMATCHED:
                    frame[1] = pos
                    path_right.append(v)
                    # flip the alternating path
                    for (lu, _), rv in zip(stack, path_right):
                        match_left[lu] = rv
                        match_right[rv] = lu
                    return True
                if dist[w] == dist[u] + 1:
                    frame[1] = pos
                    path_right.append(v)
                    stack.append([w, 0])
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
                if path_right:
                    path_right.pop()
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] == UNMATCHED:
                augment(u)
    return match_left, match_right


def koenig_cover(
    adj: Sequence[Sequence[int]], match_left: Sequence[int], match_right: Sequence[int]
) -> tuple[set[int], set[int]]:
    """Minimum vertex cover ``(left_part, right_part)`` from a maximum matching.

    Z is the set of vertices reachable from unmatched left vertices along
    alternating paths; the cover is ``(L \\ Z) | (R & Z)``.
    """
    n_left = len(adj)
    seen_left = [False] * n_left
    seen_right = [False] * len(match_right)
    queue = deque(u for u in range(n_left) if match_left[u] == UNMATCHED)
    for u in queue:
        seen_left[u] = True
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if seen_right[v] or match_left[u] == v:
                continue
            seen_right[v] = True
            w = match_right[v]
            if w != UNMATCHED and not seen_left[w]:
                seen_left[w] = True
                queue.append(w)
    left = {u for u in range(n_left) if not seen_left[u]}
    right = {v for v in range(len(match_right)) if seen_right[v]}
    return left, right
