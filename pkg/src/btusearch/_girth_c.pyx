# Compiled girth kernel; see _girth_py for the reference implementation.
# The BFS runs without the GIL so candidate sweeps can use real threads.

from libc.stdlib cimport calloc, free


cdef int _girth(const int* flat, int m, int r) noexcept nogil:
    cdef int nv = 2 * m
    cdef int* inv = <int*> calloc(r * m, sizeof(int))
    cdef int* dist = <int*> calloc(nv, sizeof(int))
    cdef int* parent = <int*> calloc(nv, sizeof(int))
    cdef int* queue = <int*> calloc(nv, sizeof(int))
    if inv == NULL or dist == NULL or parent == NULL or queue == NULL:
        free(inv); free(dist); free(parent); free(queue)
        return -1

    cdef int t, i, s, v, u, w, du, cycle, head, tail, best
    for t in range(r):
        for i in range(m):
            inv[t * m + flat[t * m + i] - 1] = i

    best = 0
    for s in range(m):
        if best == 4:
            break
        for v in range(nv):
            dist[v] = -1
        dist[s] = 0
        parent[s] = -1
        head = 0
        tail = 0
        queue[tail] = s
        tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if best != 0 and 2 * du >= best:
                continue
            for t in range(r):
                if u < m:
                    w = flat[t * m + u] - 1 + m
                else:
                    w = inv[t * m + (u - m)]
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    cycle = du + dist[w] + 1
                    if best == 0 or cycle < best:
                        best = cycle

    free(inv); free(dist); free(parent); free(queue)
    return best


def girth_from_images(const int[::1] flat, int m, int r):
    cdef int out
    with nogil:
        out = _girth(&flat[0], m, r)
    if out < 0:
        raise MemoryError("girth kernel allocation failed")
    return out
