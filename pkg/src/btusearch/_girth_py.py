"""Pure-Python girth kernel.

Same contract as the compiled kernel in _girth_c: given the r one-line
images of an (m, r) incidence flattened into one 1-based int sequence,
return the length of the shortest cycle of the bipartite row/column
graph, or 0 if the graph is a forest.
"""

from __future__ import annotations

from collections import deque


def girth_from_images(flat, m: int, r: int) -> int:
    # Inverse images: for column vertex j, its row neighbours.
    inv = [0] * (r * m)
    for t in range(r):
        base = t * m
        for i in range(m):
            inv[base + flat[base + i] - 1] = i

    nv = 2 * m
    dist = [-1] * nv
    parent = [-1] * nv
    best = 0  # 0 = no cycle found yet

    for s in range(m):  # every cycle passes through a row vertex
        if best == 4:
            break
        for v in range(nv):
            dist[v] = -1
        dist[s] = 0
        parent[s] = -1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best and 2 * du >= best:
                continue
            if u < m:
                base_u = u
                neighbours = [flat[t * m + base_u] - 1 + m for t in range(r)]
            else:
                base_u = u - m
                neighbours = [inv[t * m + base_u] for t in range(r)]
            for w in neighbours:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = du + dist[w] + 1
                    if best == 0 or cycle < best:
                        best = cycle
    return best
