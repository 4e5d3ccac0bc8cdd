"""Pure-Python word kernel for the trivialization search.

Letters are ints: generator i is 2*i, its inverse 2*i+1, so xor 1 inverts a
letter.  The compiled twin (_kernel_c) implements the same API; keep the two
in lock step.
"""

from itertools import permutations


def reduce_word(seq):
    stack = []
    for a in seq:
        if stack and stack[-1] == a ^ 1:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def invert_word(word):
    return tuple(a ^ 1 for a in reversed(word))


def cyclic_core(word):
    i, j = 0, len(word) - 1
    while i < j and word[i] == word[j] ^ 1:
        i += 1
        j -= 1
    return tuple(word[i:j + 1])


def multiply_relator(r, s, conj):
    """Freely reduced r * conj * s * conj^-1."""
    return reduce_word(r + conj + s + invert_word(conj))


def conjugate_relator(r, conj):
    """Cyclically reduced conj * r * conj^-1."""
    return cyclic_core(reduce_word(conj + r + invert_word(conj)))


def least_rotation(word):
    n = len(word)
    if n < 2:
        return tuple(word)
    doubled = word + word
    best = 0
    for k in range(1, n):
        if doubled[k:k + n] < doubled[best:best + n]:
            best = k
    return tuple(doubled[best:best + n])


def canon_relator(word):
    """Least rotation over the cyclic core and its inverse."""
    core = cyclic_core(word)
    if not core:
        return ()
    a = least_rotation(core)
    b = least_rotation(invert_word(core))
    return a if a <= b else b


def relabel_word(word, perm):
    return tuple((perm[a >> 1] << 1) | (a & 1) for a in word)


def _minimized_form(relators, n_gens, fold_inversion):
    for r in relators:
        for a in r:
            if not 0 <= a < 2 * n_gens:
                raise ValueError(f"letter {a} out of range for {n_gens} generators")
    cores = [cyclic_core(r) for r in relators]
    best = None
    for perm in permutations(range(n_gens)):
        if fold_inversion:
            rels = (canon_relator(relabel_word(c, perm)) for c in cores)
        else:
            rels = (least_rotation(relabel_word(c, perm)) for c in cores)
        form = tuple(sorted(rels))
        if best is None or form < best:
            best = form
    return best if best is not None else ()


def canonical_form(relators, n_gens):
    """Sorted canonical relators (rotation and inversion quotiented),
    minimized over generator relabelings."""
    return _minimized_form(relators, n_gens, True)


def _serialize(form, n_gens):
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
    return _serialize(canonical_form(relators, n_gens), n_gens)


def search_key(relators, n_gens):
    """Dedup key for the move search: quotients relator order, rotation and
    relabeling but NOT inversion, which is itself a move."""
    return _serialize(_minimized_form(relators, n_gens, False), n_gens)


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
