"""Integer max-flow (Dinic) and minimum flow with lower bounds.

Kept in-house rather than calling scipy's ``maximum_flow``: the lower-bound
routine needs to resume from a non-zero flow and to read residual
reachability, and capacities here are unbounded Python ints.
"""

from __future__ import annotations

from collections import deque
from typing import List, Sequence, Tuple


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: List[List[int]] = [[] for _ in range(n)]
        self.to: List[int] = []
        self.cap: List[int] = []  # residual capacity; arc e ^ 1 is the reverse

    def add_arc(self, u: int, v: int, cap: int) -> int:
        e = len(self.to)
        self.to.extend((v, u))
        self.cap.extend((cap, 0))
        self.head[u].append(e)
        self.head[v].append(e + 1)
        return e

    def flow_on(self, e: int) -> int:
        return self.cap[e ^ 1]

    def _levels(self, s: int, t: int) -> List[int]:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        to, cap = self.to, self.cap
        while q:
            u = q.popleft()
            for e in self.head[u]:
                if cap[e] > 0 and level[to[e]] < 0:
                    level[to[e]] = level[u] + 1
                    q.append(to[e])
        return level

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._levels(s, t)
            if level[t] < 0:
                return total
            it = [0] * self.n
            while True:
                # iterative DFS for one augmenting path in the level graph
                path: List[int] = []
                u = s
                while u != t:
                    lst = head[u]
                    advanced = False
                    while it[u] < len(lst):
                        e = lst[it[u]]
                        v = to[e]
                        if cap[e] > 0 and level[v] == level[u] + 1:
                            path.append(e)
                            u = v
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        if u == s:
                            break
                        level[u] = -1  # dead end
                        e = path.pop()
                        u = to[e ^ 1]
                        it[u] += 1
                if u != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                total += push

    def reachable(self, s: int) -> List[bool]:
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    q.append(v)
        return seen


class Infeasible(ValueError):
    pass


def min_flow_with_lower_bounds(
    n: int, arcs: Sequence[Tuple[int, int, int, int]], s: int, t: int
) -> Tuple[int, List[bool]]:
    """Minimum s-t flow subject to low <= f(a) <= cap on every arc.

    Two phases: a feasible circulation via a super source and sink, then the
    flow is pushed back from t to s as far as the residual network allows.
    Returns the value and the set of nodes reachable from t in the final
    residual network; arcs leaving the complement into that set carry exactly
    their lower bound and form a minimum cut.
    """
    big = sum(c for _, _, _, c in arcs) + 1
    net = FlowNetwork(n + 2)
    ss, tt = n, n + 1
    excess = [0] * n
    for u, v, low, cap in arcs:
        net.add_arc(u, v, cap - low)
        excess[v] += low
        excess[u] -= low
    back = net.add_arc(t, s, big)
    need = 0
    for v in range(n):
        if excess[v] > 0:
            net.add_arc(ss, v, excess[v])
            need += excess[v]
        elif excess[v] < 0:
            net.add_arc(v, tt, -excess[v])
    if net.max_flow(ss, tt) != need:
        raise Infeasible("lower bounds admit no feasible flow")
    value = net.flow_on(back)
    net.cap[back] = 0
    net.cap[back ^ 1] = 0
    value -= net.max_flow(t, s)
    return value, net.reachable(t)
