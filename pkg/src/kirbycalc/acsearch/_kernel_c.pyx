# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py: identical API and semantics, C inner loops.

Letters are ints (generator i -> 2*i, inverse -> 2*i+1).  Keep this file in
lock step with the pure module; the test suite cross-checks the two on
random words.
"""

from itertools import permutations

cdef enum:
    CAP = 4096


cdef Py_ssize_t _load(tuple t, int* buf) except -1:
    cdef Py_ssize_t n = len(t), k
    if n > CAP:
        raise ValueError("word too long for the compiled kernel")
    for k in range(n):
        buf[k] = t[k]
    return n


cdef tuple _dump(int* buf, Py_ssize_t n):
    cdef Py_ssize_t k
    out = []
    for k in range(n):
        out.append(buf[k])
    return tuple(out)


cdef Py_ssize_t _reduce(int* src, Py_ssize_t n, int* dst):
    cdef Py_ssize_t top = 0, k
    cdef int a
    for k in range(n):
        a = src[k]
        if top > 0 and dst[top - 1] == (a ^ 1):
            top -= 1
        else:
            dst[top] = a
            top += 1
    return top


def reduce_word(seq):
    cdef int src[CAP]
    cdef int dst[CAP]
    cdef tuple t = tuple(seq)
    cdef Py_ssize_t n = _load(t, src)
    return _dump(dst, _reduce(src, n, dst))


def invert_word(word):
    cdef int buf[CAP]
    cdef tuple t = tuple(word)
    cdef Py_ssize_t n = len(t), k
    if n > CAP:
        raise ValueError("word too long for the compiled kernel")
    for k in range(n):
        buf[k] = <int> t[n - 1 - k] ^ 1
    return _dump(buf, n)


cdef Py_ssize_t _core_bounds(int* buf, Py_ssize_t n, Py_ssize_t* start):
    # returns core length; start receives the offset
    cdef Py_ssize_t i = 0, j = n - 1
    while i < j and buf[i] == (buf[j] ^ 1):
        i += 1
        j -= 1
    start[0] = i
    return j - i + 1


def cyclic_core(word):
    cdef int buf[CAP]
    cdef tuple t = tuple(word)
    cdef Py_ssize_t n = _load(t, buf)
    cdef Py_ssize_t start = 0
    cdef Py_ssize_t m = _core_bounds(buf, n, &start)
    if n == 0:
        return ()
    return _dump(buf + start, m)


def multiply_relator(r, s, conj):
    """Freely reduced r * conj * s * conj^-1."""
    cdef int src[CAP]
    cdef int dst[CAP]
    cdef tuple tr = tuple(r), ts = tuple(s), tc = tuple(conj)
    cdef Py_ssize_t nr = len(tr), ns = len(ts), nc = len(tc), k, n = 0
    if nr + ns + 2 * nc > CAP:
        raise ValueError("word too long for the compiled kernel")
    for k in range(nr):
        src[n] = tr[k]; n += 1
    for k in range(nc):
        src[n] = tc[k]; n += 1
    for k in range(ns):
        src[n] = ts[k]; n += 1
    for k in range(nc):
        src[n] = <int> tc[nc - 1 - k] ^ 1; n += 1
    return _dump(dst, _reduce(src, n, dst))


def conjugate_relator(r, conj):
    """Cyclically reduced conj * r * conj^-1."""
    cdef int src[CAP]
    cdef int dst[CAP]
    cdef tuple tr = tuple(r), tc = tuple(conj)
    cdef Py_ssize_t nr = len(tr), nc = len(tc), k, n = 0
    if nr + 2 * nc > CAP:
        raise ValueError("word too long for the compiled kernel")
    for k in range(nc):
        src[n] = tc[k]; n += 1
    for k in range(nr):
        src[n] = tr[k]; n += 1
    for k in range(nc):
        src[n] = <int> tc[nc - 1 - k] ^ 1; n += 1
    cdef Py_ssize_t m = _reduce(src, n, dst)
    cdef Py_ssize_t start = 0
    m = _core_bounds(dst, m, &start)
    if m <= 0:
        return ()
    return _dump(dst + start, m)


cdef Py_ssize_t _least_rot(int* w, Py_ssize_t n):
    # index of the lexicographically least rotation (brute force, short words)
    cdef Py_ssize_t best = 0, k, i
    cdef int a, b
    if n < 2:
        return 0
    for k in range(1, n):
        for i in range(n):
            a = w[(best + i) % n]
            b = w[(k + i) % n]
            if b < a:
                best = k
                break
            if b > a:
                break
    return best


def least_rotation(word):
    cdef int buf[CAP]
    cdef tuple t = tuple(word)
    cdef Py_ssize_t n = _load(t, buf)
    cdef Py_ssize_t k = _least_rot(buf, n)
    cdef int out[CAP]
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[(k + i) % n]
    return _dump(out, n)


cdef tuple _canon_c(int* core, Py_ssize_t n, int fold_inversion):
    # least rotation over the (relabeled) core, optionally also its inverse
    cdef int inv[CAP]
    cdef int a[CAP]
    cdef Py_ssize_t i, kf, kb
    cdef int better
    if n == 0:
        return ()
    kf = _least_rot(core, n)
    if not fold_inversion:
        for i in range(n):
            a[i] = core[(kf + i) % n]
        return _dump(a, n)
    for i in range(n):
        inv[i] = core[n - 1 - i] ^ 1
    kb = _least_rot(inv, n)
    better = 0   # 0: forward, 1: inverse
    for i in range(n):
        if inv[(kb + i) % n] < core[(kf + i) % n]:
            better = 1
            break
        if inv[(kb + i) % n] > core[(kf + i) % n]:
            break
    if better:
        for i in range(n):
            a[i] = inv[(kb + i) % n]
    else:
        for i in range(n):
            a[i] = core[(kf + i) % n]
    return _dump(a, n)


def canon_relator(word):
    """Least rotation over the cyclic core and its inverse."""
    cdef int buf[CAP]
    cdef tuple t = tuple(word)
    cdef Py_ssize_t n = _load(t, buf)
    cdef Py_ssize_t start = 0
    cdef Py_ssize_t m = _core_bounds(buf, n, &start)
    if n == 0 or m <= 0:
        return ()
    return _canon_c(buf + start, m, 1)


def relabel_word(word, perm):
    cdef tuple t = tuple(word), tp = tuple(perm)
    cdef int buf[CAP]
    cdef Py_ssize_t n = len(t), k
    cdef int a
    if n > CAP:
        raise ValueError("word too long for the compiled kernel")
    for k in range(n):
        a = t[k]
        buf[k] = (<int> tp[a >> 1] << 1) | (a & 1)
    return _dump(buf, n)


cdef tuple _minimized_form(relators, int n_gens, int fold_inversion):
    cdef int core[CAP]
    cdef int rel[CAP]
    cdef Py_ssize_t m, k, start
    cdef int a
    cdef int pbuf[64]
    if n_gens > 64:
        raise ValueError("too many generators for the compiled kernel")
    cores = []
    for r in relators:
        t = tuple(r)
        m = _load(t, core)
        for k in range(m):
            if not 0 <= core[k] < 2 * n_gens:
                raise ValueError(
                    f"letter {core[k]} out of range for {n_gens} generators")
        start = 0
        m = _core_bounds(core, m, &start)
        if len(t) == 0:
            cores.append(())
        else:
            cores.append(_dump(core + start, m))
    best = None
    for perm in permutations(range(n_gens)):
        for k in range(n_gens):
            pbuf[k] = perm[k]
        rels = []
        for c in cores:
            m = len(c)
            for k in range(m):
                a = c[k]
                rel[k] = (pbuf[a >> 1] << 1) | (a & 1)
            rels.append(_canon_c(rel, m, fold_inversion))
        rels.sort()
        form = tuple(rels)
        if best is None or form < best:
            best = form
    return best if best is not None else ()


def canonical_form(relators, n_gens):
    """Sorted canonical relators (rotation and inversion quotiented),
    minimized over generator relabelings."""
    return _minimized_form(relators, n_gens, 1)


cdef bytes _serialize(form, int n_gens):
    out = bytearray()
    out.append(n_gens)
    for rel in form:
        if len(rel) > 254:
            raise ValueError("relator too long for key serialization")
        out.append(len(rel))
        out.extend(rel)
    return bytes(out)


def canonical_key(relators, n_gens):
    """Stable byte key: equal exactly up to relator order, relator
    inversion, cyclic rotation, and generator relabeling."""
    return _serialize(_minimized_form(relators, n_gens, 1), n_gens)


def search_key(relators, n_gens):
    """Dedup key for the move search: quotients relator order, rotation and
    relabeling but NOT inversion, which is itself a move."""
    return _serialize(_minimized_form(relators, n_gens, 0), n_gens)


def is_trivial_encoded(relators, n_gens):
    """True when the relators are, up to order and inversion, exactly the
    generators, each once."""
    if len(relators) != n_gens:
        return False
    seen = set()
    for r in relators:
        if len(r) != 1:
            return False
        seen.add(r[0] >> 1)
    return len(seen) == n_gens
