"""Breadth-first search helpers over integer adjacency lists."""

from collections import deque
import math


def bfs_distances(nbrs, source):
    dist = [-1] * len(nbrs)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in nbrs[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def component_labels(nbrs):
    """Label each vertex with the index of its component (ordered by smallest vertex)."""
    label = [-1] * len(nbrs)
    count = 0
    for s in range(len(nbrs)):
        if label[s] >= 0:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if label[v] < 0:
                    label[v] = count
                    queue.append(v)
        count += 1
    return label


def two_coloring(nbrs):
    """Return a 0/1 colouring if the graph is bipartite, else None.

    A self-loop is an odd cycle of length one, so any looped vertex makes the
    result None.
    """
    color = [-1] * len(nbrs)
    for s in range(len(nbrs)):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return tuple(color)


def diameter(nbrs):
    """Largest shortest-path distance; ``math.inf`` when disconnected.

    Runs one BFS per source. An empty graph has diameter 0.
    """
    best = 0
    for s in range(len(nbrs)):
        dist = bfs_distances(nbrs, s)
        m = max(dist)
        if min(dist) < 0:
            return math.inf
        if m > best:
            best = m
    return best
