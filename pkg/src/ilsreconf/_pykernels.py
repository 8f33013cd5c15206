"""Pure-Python solution-graph kernels (fallback for the compiled ``_kernels``).

States of ``{0..d}^n`` are numbered in mixed radix with coordinate 0 most
significant, so index order is lexicographic order. Rows are integer
``(coeffs, rhs)`` meaning ``coeffs . x >= rhs``.
"""

from array import array
from collections import deque


def weights(n, d):
    w = [1] * n
    for j in range(n - 2, -1, -1):
        w[j] = w[j + 1] * (d + 1)
    return w


def decode(idx, n, d):
    x = [0] * n
    for j in range(n - 1, -1, -1):
        idx, x[j] = divmod(idx, d + 1)
    return x


def feasible_mask(coeffs, rhs, n, d):
    """``bytearray`` of length ``(d+1)**n``; entry 1 iff the state satisfies every row."""
    total = (d + 1) ** n
    mask = bytearray(total)
    m = len(rhs)
    if m == 0:
        return bytearray(b"\x01") * total
    cols = [[coeffs[i][j] for i in range(m)] for j in range(n)]
    lhs = [0] * m
    x = [0] * n
    for idx in range(total):
        ok = 1
        for i in range(m):
            if lhs[i] < rhs[i]:
                ok = 0
                break
        mask[idx] = ok
        # odometer step, updating row sums incrementally
        j = n - 1
        while j >= 0:
            col = cols[j]
            if x[j] < d:
                x[j] += 1
                for i in range(m):
                    lhs[i] += col[i]
                break
            for i in range(m):
                lhs[i] -= col[i] * d
            x[j] = 0
            j -= 1
    return mask


def bfs_tree(mask, n, d, src, target=-1):
    """Distances and BFS parents from ``src`` (``-1`` where unreached).

    Neighbours are expanded in lexicographic order, so parents are deterministic.
    Stops early once ``target`` is dequeued.
    """
    total = len(mask)
    dist = array("q", [-1]) * total
    parent = array("q", [-1]) * total
    w = weights(n, d)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        du = dist[u] + 1
        x = decode(u, n, d)
        # smaller neighbours: coordinate 0 first, values ascending
        for j in range(n):
            base = u - x[j] * w[j]
            for v in range(x[j]):
                y = base + v * w[j]
                if mask[y] and dist[y] < 0:
                    dist[y] = du
                    parent[y] = u
                    queue.append(y)
        # larger neighbours: last coordinate first, values ascending
        for j in range(n - 1, -1, -1):
            base = u - x[j] * w[j]
            for v in range(x[j] + 1, d + 1):
                y = base + v * w[j]
                if mask[y] and dist[y] < 0:
                    dist[y] = du
                    parent[y] = u
                    queue.append(y)
    return dist, parent


def component_labels(mask, n, d):
    """Component id per state (``-1`` if infeasible) and the component count.

    Components are numbered in order of their lexicographically smallest state.
    """
    total = len(mask)
    label = array("q", [-1]) * total
    w = weights(n, d)
    count = 0
    for s in range(total):
        if not mask[s] or label[s] >= 0:
            continue
        label[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            x = decode(u, n, d)
            for j in range(n):
                base = u - x[j] * w[j]
                for v in range(d + 1):
                    y = base + v * w[j]
                    if mask[y] and label[y] < 0:
                        label[y] = count
                        stack.append(y)
        count += 1
    return label, count


def degrees(mask, n, d):
    """Number of feasible neighbours of each feasible state (0 elsewhere)."""
    total = len(mask)
    deg = array("q", [0]) * total
    w = weights(n, d)
    for u in range(total):
        if not mask[u]:
            continue
        x = decode(u, n, d)
        c = 0
        for j in range(n):
            base = u - x[j] * w[j]
            for v in range(d + 1):
                if v != x[j] and mask[base + v * w[j]]:
                    c += 1
        deg[u] = c
    return deg


def eccentricity(mask, n, d, src):
    dist, _ = bfs_tree(mask, n, d, src)
    return max(dist)
