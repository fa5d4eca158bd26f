"""Hot inner loops: Jacobi rotations, BFS sweeps, domination search, canonical labeling.

Every function here takes plain numpy arrays and returns arrays or scalars so
it can be compiled by numba.  Bitsets are ``np.uint64`` words; keep every
operand of a bit operation ``uint64`` (mixing with int64 makes numba promote
to float).
"""

import numpy as np

from ._accel import jit

ONE = np.uint64(1)
ZERO = np.uint64(0)


# ---------------------------------------------------------------------------
# symmetric eigenvalues


@jit
def off_diagonal_norms(a):
    n = a.shape[0]
    total = 0.0
    largest = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                v = abs(a[i, j])
                total += v * v
                if v > largest:
                    largest = v
    return np.sqrt(total), largest


@jit
def jacobi_eigenvalues(a, tol, max_sweeps):
    """Cyclic Jacobi on a copy of ``a``.

    Returns ``(diagonal, off_norm, max_off, sweeps)``; the caller decides
    whether ``off_norm < tol`` counts as converged.
    """
    a = a.copy()
    n = a.shape[0]
    sweeps = 0
    off, largest = off_diagonal_norms(a)
    while off >= tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off, largest = off_diagonal_norms(a)
    diag = np.empty(n)
    for i in range(n):
        diag[i] = a[i, i]
    return diag, off, largest, sweeps


# ---------------------------------------------------------------------------
# breadth-first sweeps


@jit
def girth_and_diameter(a):
    """All-roots BFS over a 0/1 matrix.

    Returns ``(girth, diameter)`` with girth 0 for a forest and diameter -1
    for a disconnected graph.
    """
    n = a.shape[0]
    girth = 0
    diameter = 0
    connected = True
    dist = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for root in range(n):
        for v in range(n):
            dist[v] = -1
        dist[root] = 0
        parent[root] = -1
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for w in range(n):
                if a[u, w] == 0:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if girth == 0 or cycle < girth:
                        girth = cycle
        if tail < n:
            connected = False
        else:
            far = dist[queue[tail - 1]]
            if far > diameter:
                diameter = far
    if not connected:
        diameter = -1
    return girth, diameter


@jit
def bfs_distances(a, root):
    n = a.shape[0]
    dist = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    dist[root] = 0
    queue[0] = root
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for w in range(n):
            if a[u, w] != 0 and dist[w] < 0:
                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1
    return dist


# ---------------------------------------------------------------------------
# domination


@jit
def popcount64(x):
    count = 0
    while x != ZERO:
        x &= x - ONE
        count += 1
    return count


@jit
def _full_mask(n):
    if n == 64:
        return ~ZERO
    return (ONE << np.uint64(n)) - ONE


@jit
def greedy_dominating_set(closed, order):
    """Repeatedly take the vertex covering most undominated vertices."""
    n = closed.shape[0]
    full = _full_mask(n)
    dominated = ZERO
    chosen = ZERO
    while dominated != full:
        best_v = -1
        best_gain = -1
        for i in range(n):
            v = order[i]
            gain = popcount64(closed[v] & ~dominated)
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen |= ONE << np.uint64(best_v)
        dominated |= closed[best_v]
    return chosen


@jit
def minimum_dominating_set(closed, order):
    """Exact minimum dominating set by branch and bound.

    ``closed[v]`` is the closed neighbourhood of v as a bitset, ``order`` the
    candidate preference (descending degree).  Branches on the lowest-index
    undominated vertex; bounded above by the greedy solution and below by
    ``ceil(undominated / max closed-neighbourhood size)``.
    """
    n = closed.shape[0]
    full = _full_mask(n)
    best_mask = greedy_dominating_set(closed, order)
    best = popcount64(best_mask)
    cover = 1
    for v in range(n):
        c = popcount64(closed[v])
        if c > cover:
            cover = c

    dom = np.zeros(n + 1, np.uint64)
    chosen = np.zeros(n + 1, np.uint64)
    cand = np.empty((n + 1, n), np.int64)
    ncand = np.zeros(n + 1, np.int64)
    ptr = np.zeros(n + 1, np.int64)
    depth = 0
    setup = True
    while depth >= 0:
        if setup:
            setup = False
            d = dom[depth]
            if d == full:
                if depth < best:
                    best = depth
                    best_mask = chosen[depth]
                depth -= 1
                continue
            undominated = full & ~d
            if depth + (popcount64(undominated) + cover - 1) // cover >= best:
                depth -= 1
                continue
            u = 0
            while ((undominated >> np.uint64(u)) & ONE) == ZERO:
                u += 1
            k = 0
            nb = closed[u]
            for i in range(n):
                v = order[i]
                if ((nb >> np.uint64(v)) & ONE) != ZERO:
                    cand[depth, k] = v
                    k += 1
            ncand[depth] = k
            ptr[depth] = 0
        if ptr[depth] < ncand[depth] and depth + 1 < best:
            v = cand[depth, ptr[depth]]
            ptr[depth] += 1
            dom[depth + 1] = dom[depth] | closed[v]
            chosen[depth + 1] = chosen[depth] | (ONE << np.uint64(v))
            depth += 1
            setup = True
        else:
            depth -= 1
    return best_mask


# ---------------------------------------------------------------------------
# canonical labeling


@jit
def _row_less(sig, i, j):
    k = sig.shape[1]
    for c in range(k):
        if sig[i, c] < sig[j, c]:
            return True
        if sig[i, c] > sig[j, c]:
            return False
    return False


@jit
def refine_colors(a):
    """Iterated degree refinement to a stable, isomorphism-invariant colouring.

    Colours are ranks ``0..k-1``; each round orders vertices by (old colour,
    neighbour-colour counts), so the refinement never reorders old classes.
    """
    n = a.shape[0]
    sig = np.zeros((n, 2), np.int64)
    for v in range(n):
        for w in range(n):
            sig[v, 0] += a[v, w]
    classes = 0
    color = np.zeros(n, np.int64)
    while True:
        idx = np.arange(n)
        # insertion sort of vertex indices by signature row
        for i in range(1, n):
            cur = idx[i]
            j = i - 1
            while j >= 0 and _row_less(sig, cur, idx[j]):
                idx[j + 1] = idx[j]
                j -= 1
            idx[j + 1] = cur
        rank = 0
        color[idx[0]] = 0
        for i in range(1, n):
            if _row_less(sig, idx[i - 1], idx[i]):
                rank += 1
            color[idx[i]] = rank
        new_classes = rank + 1
        if new_classes == classes:
            return color
        classes = new_classes
        sig = np.zeros((n, classes + 1), np.int64)
        for v in range(n):
            sig[v, 0] = color[v]
            for w in range(n):
                if a[v, w] != 0:
                    sig[v, 1 + color[w]] += 1


@jit
def canonical_permutation(a):
    """Vertex order giving the lexicographically least upper-triangle code.

    Only orders compatible with the refined colour classes are searched
    (position i receives a vertex of the i-th smallest colour), which keeps
    the result canonical.  Bits are compared column by column in graph6
    order, pruning any branch whose prefix already exceeds the best code.
    """
    n = a.shape[0]
    color = refine_colors(a)
    target = np.sort(color)
    npairs = n * (n - 1) // 2
    code = np.zeros(npairs, np.uint8)
    best = np.zeros(npairs, np.uint8)
    have_best = False
    perm = np.zeros(n, np.int64)
    best_perm = np.arange(n)
    used = np.zeros(n, np.bool_)
    ptr = np.zeros(n + 1, np.int64)
    less = np.zeros(n + 1, np.bool_)
    level = 0
    while level >= 0:
        if level == n:
            if not have_best or less[n]:
                for i in range(npairs):
                    best[i] = code[i]
                for i in range(n):
                    best_perm[i] = perm[i]
                have_best = True
                # the current path now equals the best code
                for i in range(n + 1):
                    less[i] = False
            level -= 1
            used[perm[level]] = False
            continue
        advanced = False
        while ptr[level] < n:
            v = ptr[level]
            ptr[level] += 1
            if used[v] or color[v] != target[level]:
                continue
            base = level * (level - 1) // 2
            is_less = less[level]
            pruned = False
            for i in range(level):
                bit = a[perm[i], v]
                code[base + i] = bit
                if have_best and not is_less:
                    if bit > best[base + i]:
                        pruned = True
                        break
                    if bit < best[base + i]:
                        is_less = True
            if pruned:
                continue
            perm[level] = v
            used[v] = True
            less[level + 1] = is_less
            ptr[level + 1] = 0
            level += 1
            advanced = True
            break
        if not advanced:
            level -= 1
            if level >= 0:
                used[perm[level]] = False
    return best_perm
