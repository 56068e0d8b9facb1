"""Pure-Python kernels over the flat integer encoding of a graph.

Encoding (see ``canon.encode``): ``P`` ports per vertex; for vertex ``i`` and
port ``p`` the slot ``i*P + p`` of ``nbr`` holds ``-2`` (port unused), ``-1``
(semi-edge) or the neighbour index; ``nq`` holds the neighbour port and
``glu`` the index of the gluing in the permutation table ``T``.

``T`` is a ``canon.PermTables`` instance with flat lists ``comp``, ``inv``,
``img`` and ``maskimg``.
"""

ABSENT = -2
SEMI = -1


def bfs_code(nbr, nq, glu, lab, P, nv, root, rootrot, rotmode, T, best):
    """Port-ordered BFS encoding from ``root`` with root rotation ``rootrot``.

    In rotation mode every BFS-tree edge is normalised to the gluing ``T.s01``
    by choosing the rotation of the newly reached vertex.  Returns
    ``(code, order, rho)``, or None as soon as the code exceeds ``best``.
    """
    NP = T.nperm
    comp, inv, img = T.comp, T.inv, T.img
    pos = [-1] * nv
    rho = [T.ident] * nv
    order = [root]
    pos[root] = 0
    rho[root] = rootrot
    code = []
    deciding = best is not None
    bi = 0
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        rv = rho[v]
        rvinv = inv[rv]
        base = v * P
        chunk = [lab[v]]
        for x in range(P):
            p = img[rvinv * P + x]
            w = nbr[base + p]
            if w == ABSENT:
                chunk += (0, 0, 0, 0)
            elif w == SEMI:
                chunk += (1, 0, 0, 0)
            else:
                g = glu[base + p]
                if pos[w] < 0:
                    pos[w] = len(order)
                    order.append(w)
                    if rotmode:
                        rho[w] = comp[comp[T.s01 * NP + rv] * NP + inv[g]]
                rw = rho[w]
                ng = comp[comp[rw * NP + g] * NP + rvinv]
                chunk += (2, pos[w], img[rw * P + nq[base + p]], ng)
        if deciding:
            for c in chunk:
                b = best[bi]
                bi += 1
                if c < b:
                    deciding = False
                    break
                if c > b:
                    return None
        code += chunk
    return code, order, rho


def hinge_classes(nbr, nq, glu, pmask, P, nv, T):
    """Union-find over (vertex, face-mask) states linked by transport.

    Returns ``parent`` of length ``nv * 2**P`` with ``-1`` for states that are
    not faces (empty mask or ports outside the vertex).
    """
    M = 1 << P
    maskimg = T.maskimg
    parent = [-1] * (nv * M)
    for v in range(nv):
        pm = pmask[v]
        sub = pm
        while sub:
            parent[v * M + sub] = v * M + sub
            sub = (sub - 1) & pm

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for v in range(nv):
        pm = pmask[v]
        base = v * P
        for p in range(P):
            w = nbr[base + p]
            if w < 0:
                continue
            g = glu[base + p]
            free = pm & ~(1 << p)
            sub = free
            while sub:
                a = find(v * M + sub)
                b = find(w * M + maskimg[g * M + sub])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
                sub = (sub - 1) & free
    for s in range(nv * M):
        if parent[s] >= 0:
            parent[s] = find(s)
    return parent


def longest_hinge(nbr, nq, glu, pmask, P, nv, T, limit):
    """Longest state-simple hinge path, exploring at most ``limit + 1`` steps.

    Returns ``(length, path)`` where ``path`` is a list of states
    ``v * 2**P + mask``; ``length > limit`` signals an unbounded star.
    """
    M = 1 << P
    maskimg = T.maskimg
    best_len = 0
    best_path = []
    onpath = set()
    path = []
    cap = limit + 1

    def dfs(v, mask, depth):
        nonlocal best_len, best_path
        if depth > best_len:
            best_len = depth
            best_path = list(path)
            if best_len >= cap:
                return True
        if depth >= cap:
            return False
        base = v * P
        for p in range(P):
            if (mask >> p) & 1:
                continue
            w = nbr[base + p]
            if w < 0:
                continue
            nm = maskimg[glu[base + p] * M + mask]
            st = w * M + nm
            if st in onpath:
                continue
            onpath.add(st)
            path.append(st)
            if dfs(w, nm, depth + 1):
                return True
            path.pop()
            onpath.discard(st)
        return False

    for v in range(nv):
        pm = pmask[v]
        sub = pm
        while sub:
            if sub != pm:
                st = v * M + sub
                onpath.add(st)
                path.append(st)
                done = dfs(v, sub, 0)
                path.pop()
                onpath.discard(st)
                if done:
                    break
            sub = (sub - 1) & pm
        if best_len >= cap:
            break
    return best_len, best_path
