# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same contracts, Python-int arithmetic."""
from math import gcd


cpdef list trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


cpdef object horner_hom(list c, object num, object den):
    cdef Py_ssize_t n = len(c)
    cdef Py_ssize_t i
    if not n:
        return 0
    cdef object acc = c[n - 1]
    cdef object dpow = 1
    for i in range(n - 2, -1, -1):
        dpow = dpow * den
        acc = acc * num + c[i] * dpow
    return acc


cpdef int sign_at(list c, object num, object den):
    cdef object v = horner_hom(c, num, den)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cpdef list mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if not na or not nb:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object x
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return out


cpdef object content(list c):
    cdef object g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            break
    return g


cpdef list primitive(c):
    cdef list t = trim(list(c))
    if not t:
        return t
    cdef object g = content(t)
    if t[len(t) - 1] < 0:
        g = -g
    return [x // g for x in t]


cpdef list derivative(list c):
    cdef Py_ssize_t i
    return [i * c[i] for i in range(1, len(c))]


cpdef list prem(a, b):
    cdef list r = trim(list(a))
    cdef list bb = trim(list(b))
    if not bb:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    cdef Py_ssize_t db = len(bb) - 1, k = len(r) - len(bb) + 1
    cdef Py_ssize_t steps = 0, shift, j
    cdef object lb = bb[db], lr
    if k <= 0:
        return r
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[len(r) - 1]
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - lr * bb[j]
        r = trim(r)
        steps += 1
    cdef object pad = lb ** (k - steps)
    r = [x * pad for x in r]
    if lb < 0 and k % 2:
        r = [-x for x in r]
    return r


cpdef list sturm_chain(list c):
    cdef list p0 = primitive(c)
    cdef list chain = [p0]
    cdef list p1 = primitive(derivative(p0))
    cdef list r
    if not p1:
        return chain
    chain.append(p1)
    while True:
        r = prem(chain[len(chain) - 2], chain[len(chain) - 1])
        if not r:
            break
        r = [-x for x in r]
        g = content(r)
        chain.append([x // g for x in r])
    return chain


cpdef int variations(list chain, object num, object den):
    cdef int count = 0, last = 0, s
    cdef object v
    for c in chain:
        v = horner_hom(c, num, den)
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


cpdef list grid_signs(list c, nums, object den):
    return [sign_at(c, n, den) for n in nums]
