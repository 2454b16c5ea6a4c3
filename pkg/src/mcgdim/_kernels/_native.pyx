# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_python.py``; same signatures, same outputs."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset, memcpy


def bounded_multisets(weights, long budget, int max_len=-1):
    cdef int k = len(weights)
    cdef long *w = <long *>malloc((k + 1) * sizeof(long))
    cdef int cap = 64
    cdef int *stack = <int *>malloc(cap * sizeof(int))
    cdef long *totals = <long *>malloc((cap + 1) * sizeof(long))
    cdef int depth = 0, i, j
    cdef list out = []
    try:
        for i in range(k):
            w[i] = weights[i]
        totals[0] = 0
        out.append(((), 0))
        # stack[d] holds the index chosen at depth d; advance like an odometer
        if k == 0 or max_len == 0 or w[0] > budget:
            return out
        stack[0] = 0
        depth = 1
        while depth > 0:
            i = stack[depth - 1]
            if i < k and totals[depth - 1] + w[i] <= budget:
                totals[depth] = totals[depth - 1] + w[i]
                out.append((tuple([stack[j] for j in range(depth)]), totals[depth]))
                if depth != max_len and totals[depth] + w[i] <= budget:
                    if depth == cap:
                        raise MemoryError("multiset depth exceeds 64")
                    stack[depth] = i
                    depth += 1
                    continue
                stack[depth - 1] = i + 1
            else:
                depth -= 1
                if depth > 0:
                    stack[depth - 1] += 1
        return out
    finally:
        free(w)
        free(stack)
        free(totals)


cdef bint _dihedral_min(int *word, int n) nogil:
    cdef int s, i, a, b, o
    for s in range(n):
        for o in range(2):
            for i in range(n):
                if o == 0:
                    a = word[(s + i) % n]
                else:
                    a = word[(s + n - i) % n]
                b = word[i]
                if a != b:
                    if a < b:
                        return False
                    break
    return True


def dihedral_words(weights, long budget):
    cdef int k = len(weights)
    cdef long *w = <long *>malloc((k + 1) * sizeof(long))
    cdef int cap = 64
    cdef int *word = <int *>malloc(cap * sizeof(int))
    cdef long *totals = <long *>malloc((cap + 1) * sizeof(long))
    cdef int depth, i, j
    cdef list out = []
    try:
        for i in range(k):
            w[i] = weights[i]
        if k == 0 or w[0] > budget:
            return out
        totals[0] = 0
        word[0] = 0
        depth = 1
        while depth > 0:
            i = word[depth - 1]
            if i < k and totals[depth - 1] + w[i] <= budget:
                totals[depth] = totals[depth - 1] + w[i]
                if _dihedral_min(word, depth):
                    out.append((tuple([word[j] for j in range(depth)]), totals[depth]))
                if totals[depth] + w[word[0]] <= budget:
                    if depth == cap:
                        raise MemoryError("word length exceeds 64")
                    word[depth] = word[0]
                    depth += 1
                    continue
                word[depth - 1] = i + 1
            else:
                depth -= 1
                if depth > 0:
                    word[depth - 1] += 1
        # the odometer walks words in lexicographic order; match the recursive fallback
        return out
    finally:
        free(w)
        free(word)
        free(totals)


cdef int _closure(const int[::1] table, int n, int *gens, int ngens,
                  uint64_t *mask, int *elems) nogil:
    cdef int count = 1, head = 0, e, s, p, row
    memset(mask, 0, ((n + 63) // 64) * sizeof(uint64_t))
    mask[0] = 1
    elems[0] = 0
    while head < count:
        e = elems[head]
        head += 1
        row = e * n
        for s in range(ngens):
            p = table[row + gens[s]]
            if not (mask[p >> 6] >> (p & 63)) & 1:
                mask[p >> 6] |= (<uint64_t>1) << (p & 63)
                elems[count] = p
                count += 1
    return count


cdef object _to_int(uint64_t *mask, int words):
    return int.from_bytes((<char *>mask)[:words * 8], "little")


def subgroup_closure(const int[::1] table, int n, gens):
    cdef int ngens = len(gens), i
    cdef int words = (n + 63) // 64
    cdef int *g = <int *>malloc((ngens + 1) * sizeof(int))
    cdef uint64_t *mask = <uint64_t *>malloc(words * sizeof(uint64_t))
    cdef int *elems = <int *>malloc(n * sizeof(int))
    try:
        for i in range(ngens):
            g[i] = gens[i]
        _closure(table, n, g, ngens, mask, elems)
        return _to_int(mask, words)
    finally:
        free(g)
        free(mask)
        free(elems)


def all_subgroups(const int[::1] table, int n):
    cdef int words = (n + 63) // 64
    cdef uint64_t *mask = <uint64_t *>malloc(words * sizeof(uint64_t))
    cdef uint64_t *done = <uint64_t *>malloc(words * sizeof(uint64_t))
    cdef int *elems = <int *>malloc(n * sizeof(int))
    cdef int *members = <int *>malloc(n * sizeof(int))
    cdef int *gens = <int *>malloc((n + 1) * sizeof(int))
    cdef int nmem, ngens, x, m, p, i, qi
    cdef bytes key
    cdef dict gens_of = {}
    cdef list queue = []
    cdef list hgens
    try:
        memset(mask, 0, words * sizeof(uint64_t))
        mask[0] = 1
        key = (<char *>mask)[:words * 8]
        gens_of[key] = []
        queue.append(key)
        qi = 0
        while qi < len(queue):
            key = queue[qi]
            qi += 1
            hgens = gens_of[key]
            memcpy(done, <char *>key, words * sizeof(uint64_t))
            nmem = 0
            for x in range(n):
                if (done[x >> 6] >> (x & 63)) & 1:
                    members[nmem] = x
                    nmem += 1
            ngens = len(hgens)
            for i in range(ngens):
                gens[i] = hgens[i]
            for x in range(n):
                if (done[x >> 6] >> (x & 63)) & 1:
                    continue
                for i in range(nmem):
                    p = table[members[i] * n + x]
                    done[p >> 6] |= (<uint64_t>1) << (p & 63)
                gens[ngens] = x
                _closure(table, n, gens, ngens + 1, mask, elems)
                k2 = (<char *>mask)[:words * 8]
                if k2 not in gens_of:
                    gens_of[k2] = hgens + [x]
                    queue.append(k2)
        out = [int.from_bytes(k, "little") for k in gens_of]
        out.sort(key=lambda v: (bin(v).count("1"), v))
        return out
    finally:
        free(mask)
        free(done)
        free(elems)
        free(members)
        free(gens)
