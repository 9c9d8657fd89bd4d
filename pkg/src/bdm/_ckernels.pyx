# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; same signatures and semantics."""

from libc.stdlib cimport malloc, free


cdef inline void _oom(void* p) except *:
    if p == NULL:
        raise MemoryError()


def csr_from_arcs(Py_ssize_t n, const long long[:] tails, const long long[:] heads,
                  long long[:] indptr, long long[:] indices):
    cdef Py_ssize_t m = tails.shape[0]
    cdef Py_ssize_t i, v
    cdef long long t
    cdef long long* pos
    for v in range(n + 1):
        indptr[v] = 0
    for i in range(m):
        indptr[tails[i] + 1] += 1
    for v in range(n):
        indptr[v + 1] += indptr[v]
    pos = <long long*>malloc((n + 1) * sizeof(long long))
    _oom(pos)
    try:
        for v in range(n):
            pos[v] = indptr[v]
        for i in range(m):
            t = tails[i]
            indices[pos[t]] = heads[i]
            pos[t] += 1
    finally:
        free(pos)


def reach(const long long[:] indptr, const long long[:] indices, sources, unsigned char[:] mark):
    cdef Py_ssize_t n = mark.shape[0]
    cdef long long* queue = <long long*>malloc((n + 1) * sizeof(long long))
    cdef Py_ssize_t head = 0, tail = 0
    cdef long long u, w, i, s
    _oom(queue)
    try:
        for s in sources:
            if not mark[s]:
                mark[s] = 1
                queue[tail] = s
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                if not mark[w]:
                    mark[w] = 1
                    queue[tail] = w
                    tail += 1
    finally:
        free(queue)
    return tail


def component_labels(const long long[:] indptr, const long long[:] indices,
                     const unsigned char[:] active, long long[:] labels):
    cdef Py_ssize_t n = active.shape[0]
    cdef long long* stack = <long long*>malloc((n + 1) * sizeof(long long))
    cdef unsigned char* seen = <unsigned char*>malloc(n + 1)
    cdef Py_ssize_t top, root
    cdef long long u, w, i, count = 0
    _oom(stack)
    _oom(seen)
    try:
        for root in range(n):
            seen[root] = 0
        for root in range(n):
            if not active[root] or seen[root]:
                continue
            seen[root] = 1
            labels[root] = count
            stack[0] = root
            top = 1
            while top > 0:
                top -= 1
                u = stack[top]
                for i in range(indptr[u], indptr[u + 1]):
                    w = indices[i]
                    if active[w] and not seen[w]:
                        seen[w] = 1
                        labels[w] = count
                        stack[top] = w
                        top += 1
            count += 1
    finally:
        free(stack)
        free(seen)
    return count


def scc_labels(const long long[:] indptr, const long long[:] indices,
               const unsigned char[:] active, long long[:] labels):
    cdef Py_ssize_t n = active.shape[0]
    cdef long long* index = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* low = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* it = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* stack = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* call = <long long*>malloc((n + 1) * sizeof(long long))
    cdef unsigned char* onstack = <unsigned char*>malloc(n + 1)
    cdef Py_ssize_t sp = 0, cp = 0, root
    cdef long long v, w, u, i, end, counter = 0, ncomp = 0
    cdef bint descended
    _oom(index); _oom(low); _oom(it); _oom(stack); _oom(call); _oom(onstack)
    try:
        for root in range(n):
            index[root] = -1
            onstack[root] = 0
        for root in range(n):
            if not active[root] or index[root] >= 0:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root
            sp += 1
            onstack[root] = 1
            it[root] = indptr[root]
            call[0] = root
            cp = 1
            while cp > 0:
                v = call[cp - 1]
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
                        index[w] = counter
                        low[w] = counter
                        counter += 1
                        stack[sp] = w
                        sp += 1
                        onstack[w] = 1
                        it[w] = indptr[w]
                        call[cp] = w
                        cp += 1
                        descended = True
                        break
                    if onstack[w] and index[w] < low[v]:
                        low[v] = index[w]
                if descended:
                    continue
                it[v] = i
                cp -= 1
                if cp > 0:
                    u = call[cp - 1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        onstack[w] = 0
                        labels[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    finally:
        free(index); free(low); free(it); free(stack); free(call); free(onstack)
    return ncomp


def augment_b_matching(long long n_a, const long long[:] ends_a, const long long[:] ends_b,
                       const long long[:] adj_indptr, const long long[:] adj_edges,
                       const long long[:] cap, unsigned char[:] member, long long[:] load):
    cdef Py_ssize_t n = cap.shape[0]
    cdef long long* dist = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* queue = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* ptr = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* stack = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* path = <long long*>malloc((n + 1) * sizeof(long long))
    cdef Py_ssize_t head, tail, sp, pp, k
    cdef long long u, w, e, i, end, du, limit, s, nxt, augmented = 0
    cdef bint found, usable
    _oom(dist); _oom(queue); _oom(ptr); _oom(stack); _oom(path)
    try:
        while True:
            head = 0
            tail = 0
            for u in range(n):
                dist[u] = -1
            for u in range(n_a):
                if load[u] < cap[u]:
                    dist[u] = 0
                    queue[tail] = u
                    tail += 1
            limit = -1
            while head < tail:
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
                                queue[tail] = w
                                tail += 1
                else:
                    for i in range(adj_indptr[u], adj_indptr[u + 1]):
                        e = adj_edges[i]
                        if not member[e]:
                            continue
                        w = ends_a[e]
                        if dist[w] < 0:
                            dist[w] = du + 1
                            queue[tail] = w
                            tail += 1
            if limit < 0:
                return augmented

            for u in range(n):
                ptr[u] = adj_indptr[u]
            for s in range(n_a):
                if dist[s] != 0:
                    continue
                while load[s] < cap[s]:
                    sp = 0
                    pp = 0
                    stack[sp] = s
                    sp += 1
                    found = False
                    while sp > 0:
                        u = stack[sp - 1]
                        if u >= n_a and dist[u] == limit:
                            if load[u] < cap[u]:
                                found = True
                                break
                            dist[u] = -2
                            sp -= 1
                            pp -= 1
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
                            sp -= 1
                            if pp > 0:
                                pp -= 1
                            continue
                        stack[sp] = nxt
                        sp += 1
                        path[pp] = adj_edges[i]
                        pp += 1
                    if not found:
                        break
                    for k in range(pp):
                        e = path[k]
                        member[e] = 0 if member[e] else 1
                    load[s] += 1
                    load[stack[sp - 1]] += 1
                    augmented += 1
    finally:
        free(dist); free(queue); free(ptr); free(stack); free(path)


def alt_arcs(const long long[:] ends_a, const long long[:] ends_b,
             const unsigned char[:] member, long long[:] tails, long long[:] heads):
    cdef Py_ssize_t e, m = member.shape[0]
    for e in range(m):
        if member[e]:
            tails[e] = ends_b[e]
            heads[e] = ends_a[e]
        else:
            tails[e] = ends_a[e]
            heads[e] = ends_b[e]


def unit_cost(long long n_a, const long long[:] cap, const long long[:] ends_a,
              const long long[:] ends_b, const unsigned char[:] mark):
    cdef Py_ssize_t v, e
    cdef long long cost = 0
    for v in range(cap.shape[0]):
        if (v < n_a) != (mark[v] != 0):
            cost += cap[v]
    for e in range(ends_a.shape[0]):
        if mark[ends_a[e]] and not mark[ends_b[e]]:
            cost += 1
    return cost


def renumber(const long long[:] key, Py_ssize_t nkeys, long long[:] out):
    cdef long long* seen = <long long*>malloc((nkeys + 1) * sizeof(long long))
    cdef Py_ssize_t v
    cdef long long k, c, count = 0
    _oom(seen)
    try:
        for v in range(nkeys):
            seen[v] = -1
        for v in range(key.shape[0]):
            k = key[v]
            c = seen[k]
            if c < 0:
                c = count
                seen[k] = c
                count += 1
            out[v] = c
    finally:
        free(seen)
    return count


cdef enum:
    CONSISTENT = 0
    LOOSE_A = 1
    INACTIVE_A = 2
    LOOSE_B = 3
    INACTIVE_B = 4


def order_arc_candidates(const long long[:] comp_of, const long long[:] ends_a,
                         const long long[:] ends_b, const unsigned char[:] member,
                         const unsigned char[:] v0, const long long[:] cat,
                         long long[:] out_s, long long[:] out_t):
    cdef Py_ssize_t e, cnt = 0
    cdef long long a, b, ca, cb, c, d, kc, kd
    cdef int r
    cdef bint inc_a_d, inc_b_c, inc_b_d
    for e in range(member.shape[0]):
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
        for r in range(2):
            if r == 0:
                c = ca
                d = cb
            else:
                c = cb
                d = ca
            kc = cat[c]
            kd = cat[d]
            inc_a_d = kd == LOOSE_A or kd == INACTIVE_A
            inc_b_c = kc == LOOSE_B or kc == INACTIVE_B
            inc_b_d = kd == LOOSE_B or kd == INACTIVE_B
            if (kc == LOOSE_A or kc == INACTIVE_A) and kd == CONSISTENT:
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


def topo_order(const long long[:] indptr, const long long[:] indices, long long[:] out):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef long long* indeg = <long long*>malloc((n + 1) * sizeof(long long))
    cdef Py_ssize_t v, head = 0, tail = 0
    cdef long long u, w, i
    _oom(indeg)
    try:
        for v in range(n):
            indeg[v] = 0
        for i in range(indptr[n]):
            indeg[indices[i]] += 1
        for v in range(n):
            if indeg[v] == 0:
                out[tail] = v
                tail += 1
        while head < tail:
            u = out[head]
            head += 1
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                indeg[w] -= 1
                if indeg[w] == 0:
                    out[tail] = w
                    tail += 1
    finally:
        free(indeg)
    return tail


def compose_keys(const long long[:] cap, const unsigned char[:] ext_a,
                 const long long[:] loose_labels_a, long long n_la,
                 const long long[:] loose_labels_b, long long n_lb,
                 const long long[:] scc, long long[:] key, long long[:] vcat):
    cdef Py_ssize_t v, n = cap.shape[0]
    cdef long long top = -1
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
            if scc[v] > top:
                top = scc[v]
        else:
            key[v] = v
            vcat[v] = INACTIVE_A if ext_a[v] else INACTIVE_B
    return n + n_la + n_lb + top + 1


def scatter(const long long[:] index, const long long[:] values, long long[:] out):
    cdef Py_ssize_t i
    for i in range(index.shape[0]):
        out[index[i]] = values[i]


def dedupe_arcs(long long k, const long long[:] src, const long long[:] dst, Py_ssize_t cnt,
                long long[:] out_s, long long[:] out_t):
    cdef long long* bucket = <long long*>malloc((k + 1) * sizeof(long long))
    cdef long long* order = <long long*>malloc((cnt + 1) * sizeof(long long))
    cdef long long* order2 = <long long*>malloc((cnt + 1) * sizeof(long long))
    cdef Py_ssize_t i, c, out = 0
    cdef long long j, acc, s, t
    try:
        _oom(bucket)
        _oom(order)
        _oom(order2)
        # stable counting sort by target, then by source
        for c in range(k + 1):
            bucket[c] = 0
        for i in range(cnt):
            bucket[dst[i]] += 1
        acc = 0
        for c in range(k):
            j = bucket[c]
            bucket[c] = acc
            acc += j
        for i in range(cnt):
            order[bucket[dst[i]]] = i
            bucket[dst[i]] += 1
        for c in range(k + 1):
            bucket[c] = 0
        for i in range(cnt):
            bucket[src[i]] += 1
        acc = 0
        for c in range(k):
            j = bucket[c]
            bucket[c] = acc
            acc += j
        for i in range(cnt):
            j = order[i]
            order2[bucket[src[j]]] = j
            bucket[src[j]] += 1
        for i in range(cnt):
            j = order2[i]
            s = src[j]
            t = dst[j]
            if out > 0 and out_s[out - 1] == s and out_t[out - 1] == t:
                continue
            out_s[out] = s
            out_t[out] = t
            out += 1
    finally:
        free(bucket)
        free(order)
        free(order2)
    return out
