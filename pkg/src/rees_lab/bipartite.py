"""Bipartite matching (Hopcroft-Karp), Koenig vertex covers, and a small
integer max-flow solver (Dinic) for the normalized-matching flow check."""

from __future__ import annotations

from collections import deque
from typing import Sequence

INF = float("inf")


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[int, list[int], list[int]]:
    """Maximum matching of a bipartite graph.

    adj[u] lists the right-neighbours of left vertex u.  Returns
    (size, match_left, match_right) with -1 for unmatched vertices.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        q = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = -1
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = -1
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_l[u] == -1 and dfs(u):
                size += 1
    return size, match_l, match_r


def koenig_cover(adj: Sequence[Sequence[int]], match_l: list[int],
                 match_r: list[int]) -> tuple[set[int], set[int]]:
    """Minimum vertex cover from a maximum matching (Koenig's theorem):
    alternate from unmatched left vertices; cover is (L - reached) plus
    (R intersect reached)."""
    n_left = len(adj)
    seen_l = [False] * n_left
    seen_r = [False] * len(match_r)
    q = deque(u for u in range(n_left) if match_l[u] == -1)
    for u in q:
        seen_l[u] = True
    while q:
        u = q.popleft()
        for v in adj[u]:
            if not seen_r[v]:
                seen_r[v] = True
                w = match_r[v]
                if w != -1 and not seen_l[w]:
                    seen_l[w] = True
                    q.append(w)
    cover_l = {u for u in range(n_left) if not seen_l[u]}
    cover_r = {v for v in range(len(match_r)) if seen_r[v]}
    return cover_l, cover_r


class Dinic:
    """Max flow with integer capacities and shortest augmenting layers."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for e in self.head[u]:
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == -1:
                        level[v] = level[u] + 1
                        q.append(v)
            if level[t] == -1:
                return flow
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 62)
                if not pushed:
                    break
                flow += pushed
