"""Pure-Python implementations of the hot graph kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Arrays are passed as buffer objects (``array.array('q')`` for integers,
``bytearray`` for flags) and output buffers are filled in place.
"""


def csr_from_arcs(n, tails, heads, indptr, indices):
    """Counting-sort arcs by tail into CSR form, keeping input order per tail.

    ``indptr`` must have length ``n + 1`` and ``indices`` length ``len(tails)``.
    """
    counts = [0] * (n + 1)
    for t in tails:
        counts[t + 1] += 1
    for v in range(n):
        counts[v + 1] += counts[v]
    for v in range(n + 1):
        indptr[v] = counts[v]
    pos = counts[:n]
    for t, h in zip(tails, heads):
        indices[pos[t]] = h
        pos[t] += 1


def reach(indptr, indices, sources, mark):
    """Mark every vertex reachable from ``sources`` (BFS). Returns the count."""
    queue = []
    for s in sources:
        if not mark[s]:
            mark[s] = 1
            queue.append(s)
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for i in range(indptr[u], indptr[u + 1]):
            w = indices[i]
            if not mark[w]:
                mark[w] = 1
                queue.append(w)
    return len(queue)


def component_labels(indptr, indices, active, labels):
    """Label connected components of the subgraph induced by ``active``.

    Labels are handed out in order of the smallest vertex of each component;
    inactive vertices keep whatever ``labels`` held (callers pass -1).
    """
    n = len(active)
    seen = bytearray(n)
    count = 0
    for root in range(n):
        if not active[root] or seen[root]:
            continue
        seen[root] = 1
        labels[root] = count
        stack = [root]
        while stack:
            u = stack.pop()
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                if active[w] and not seen[w]:
                    seen[w] = 1
                    labels[w] = count
                    stack.append(w)
        count += 1
    return count


def scc_labels(indptr, indices, active, labels):
    """Iterative Tarjan SCC on the subdigraph induced by ``active``.

    Labels come out in reverse topological order of the condensation
    (sink components first). Returns the number of components.
    """
    n = len(active)
    index = [-1] * n
    low = [0] * n
    it = [0] * n
    onstack = bytearray(n)
    stack = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if not active[root] or index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = 1
        it[root] = indptr[root]
        call = [root]
        while call:
            v = call[-1]
            i = it[v]
            end = indptr[v + 1]
            descended = False
            while i < end:
                w = indices[i]
                i += 1
                if not active[w]:
                    continue
                if index[w] < 0:
                    it[v] = i
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = 1
                    it[w] = indptr[w]
                    call.append(w)
                    descended = True
                    break
                if onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            it[v] = i
            call.pop()
            if call:
                u = call[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    onstack[w] = 0
                    labels[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return ncomp


def augment_b_matching(n_a, ends_a, ends_b, adj_indptr, adj_edges, cap, member, load):
    """Grow ``member``/``load`` into a maximum b-matching in place.

    Vertices ``0..n_a-1`` form side A. ``adj_edges`` lists incident edge ids
    per vertex. Phases of shortest augmenting paths (Hopcroft-Karp style):
    a layered BFS from every loose A vertex, then blocking-flow DFS with
    current-arc pointers. Edges have unit capacity, vertices capacity ``cap``.
    Returns the number of augmentations performed.
    """
    n = len(cap)
    augmented = 0
    while True:
        dist = [-1] * n
        queue = []
        for a in range(n_a):
            if load[a] < cap[a]:
                dist[a] = 0
                queue.append(a)
        limit = -1
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if limit >= 0 and du >= limit:
                continue
            if u < n_a:
                for i in range(adj_indptr[u], adj_indptr[u + 1]):
                    e = adj_edges[i]
                    if member[e]:
                        continue
                    w = ends_b[e]
                    if dist[w] < 0:
                        dist[w] = du + 1
                        if load[w] < cap[w]:
                            if limit < 0:
                                limit = du + 1
                        else:
                            queue.append(w)
            else:
                for i in range(adj_indptr[u], adj_indptr[u + 1]):
                    e = adj_edges[i]
                    if not member[e]:
                        continue
                    w = ends_a[e]
                    if dist[w] < 0:
                        dist[w] = du + 1
                        queue.append(w)
        if limit < 0:
            return augmented

        ptr = [adj_indptr[v] for v in range(n)]
        for s in range(n_a):
            if dist[s] != 0:
                continue
            while load[s] < cap[s]:
                path = []
                stack = [s]
                found = False
                while stack:
                    u = stack[-1]
                    if u >= n_a and dist[u] == limit:
                        if load[u] < cap[u]:
                            found = True
                            break
                        dist[u] = -2
                        stack.pop()
                        path.pop()
                        continue
                    du = dist[u]
                    i = ptr[u]
                    end = adj_indptr[u + 1]
                    nxt = -1
                    while i < end:
                        e = adj_edges[i]
                        if u < n_a:
                            usable = not member[e]
                            w = ends_b[e]
                        else:
                            usable = member[e]
                            w = ends_a[e]
                        if usable and dist[w] == du + 1:
                            nxt = w
                            break
                        i += 1
                    ptr[u] = i
                    if nxt < 0:
                        dist[u] = -2
                        stack.pop()
                        if path:
                            path.pop()
                        continue
                    stack.append(nxt)
                    path.append(adj_edges[i])
                if not found:
                    break
                for e in path:
                    member[e] = 0 if member[e] else 1
                load[s] += 1
                load[stack[-1]] += 1
                augmented += 1


def alt_arcs(ends_a, ends_b, member, tails, heads):
    """Alternating digraph: matched edge ``b -> a``, free edge ``a -> b``."""
    for e in range(len(member)):
        if member[e]:
            tails[e] = ends_b[e]
            heads[e] = ends_a[e]
        else:
            tails[e] = ends_a[e]
            heads[e] = ends_b[e]


def unit_cost(n_a, cap, ends_a, ends_b, mark):
    """``b(V - Z) + |E[Z]|`` for ``Z = (mark & A) | (B - mark)``."""
    cost = 0
    for v in range(len(cap)):
        if (v < n_a) != bool(mark[v]):
            cost += cap[v]
    for e in range(len(ends_a)):
        if mark[ends_a[e]] and not mark[ends_b[e]]:
            cost += 1
    return cost


def renumber(key, nkeys, out):
    """Renumber ``key`` values by order of first occurrence; returns the count."""
    seen = [-1] * nkeys
    count = 0
    for v in range(len(key)):
        k = key[v]
        c = seen[k]
        if c < 0:
            c = seen[k] = count
            count += 1
        out[v] = c
    return count


# component categories used by order_arc_candidates
CONSISTENT, LOOSE_A, INACTIVE_A, LOOSE_B, INACTIVE_B = 0, 1, 2, 3, 4


def order_arc_candidates(comp_of, ends_a, ends_b, member, v0, cat, out_s, out_t):
    """Generating arcs of the component order, possibly with repeats.

    Edges inside V0 contribute condensation arcs of the reverse alternating
    digraph; edges touching an inconsistent component contribute the arcs
    attaching it below (A-hooked) or above (B-hooked) its neighbours.
    """
    cnt = 0
    for e in range(len(member)):
        a = ends_a[e]
        b = ends_b[e]
        ca = comp_of[a]
        cb = comp_of[b]
        if ca == cb:
            continue
        if v0[a] and v0[b]:
            if member[e]:
                out_s[cnt] = ca
                out_t[cnt] = cb
            else:
                out_s[cnt] = cb
                out_t[cnt] = ca
            cnt += 1
            continue
        for c, d in ((ca, cb), (cb, ca)):
            kc = cat[c]
            kd = cat[d]
            inc_a_c = kc == LOOSE_A or kc == INACTIVE_A
            inc_a_d = kd == LOOSE_A or kd == INACTIVE_A
            inc_b_c = kc == LOOSE_B or kc == INACTIVE_B
            inc_b_d = kd == LOOSE_B or kd == INACTIVE_B
            if inc_a_c and kd == CONSISTENT:
                out_s[cnt] = c
                out_t[cnt] = d
                cnt += 1
            if inc_b_c and not inc_b_d:
                out_s[cnt] = d
                out_t[cnt] = c
                cnt += 1
            if kc == INACTIVE_A and inc_a_d:
                out_s[cnt] = c
                out_t[cnt] = d
                cnt += 1
            if kc == INACTIVE_B and inc_b_d:
                out_s[cnt] = d
                out_t[cnt] = c
                cnt += 1
    return cnt


def topo_order(indptr, indices, out):
    """Kahn's algorithm, FIFO seeded in ascending id order; returns how many
    vertices were ordered (fewer than n means a cycle)."""
    n = len(indptr) - 1
    indeg = [0] * n
    for i in range(indptr[n]):
        indeg[indices[i]] += 1
    tail = 0
    for v in range(n):
        if indeg[v] == 0:
            out[tail] = v
            tail += 1
    head = 0
    while head < tail:
        u = out[head]
        head += 1
        for i in range(indptr[u], indptr[u + 1]):
            w = indices[i]
            indeg[w] -= 1
            if indeg[w] == 0:
                out[tail] = w
                tail += 1
    return tail


def compose_keys(cap, ext_a, loose_labels_a, n_la, loose_labels_b, n_lb, scc, key, vcat):
    """Raw group key and category per vertex.

    Inactive vertices of a unit get their own id as key; loose-unit vertices
    and consistent vertices get offset component labels. Returns the key
    space size.
    """
    n = len(cap)
    for v in range(n):
        if loose_labels_a[v] >= 0:
            key[v] = n + loose_labels_a[v]
            vcat[v] = LOOSE_A
        elif loose_labels_b[v] >= 0:
            key[v] = n + n_la + loose_labels_b[v]
            vcat[v] = LOOSE_B
        elif scc[v] >= 0:
            key[v] = n + n_la + n_lb + scc[v]
            vcat[v] = CONSISTENT
        else:
            key[v] = v
            vcat[v] = INACTIVE_A if ext_a[v] else INACTIVE_B
    return n + n_la + n_lb + max(scc, default=-1) + 1


def scatter(index, values, out):
    """``out[index[i]] = values[i]`` for every ``i``."""
    for i, v in zip(index, values):
        out[i] = v


def dedupe_arcs(k, src, dst, cnt, out_s, out_t):
    """Sort the first ``cnt`` arcs by (source, target) and drop repeats.

    Returns the number of distinct arcs written to ``out_s`` / ``out_t``.
    """
    arcs = sorted(set(zip(src[:cnt], dst[:cnt])))
    for i, (s, t) in enumerate(arcs):
        out_s[i] = s
        out_t[i] = t
    return len(arcs)
