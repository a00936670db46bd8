"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints, index = degree, no trailing zeros
(the empty list is the zero polynomial).  Every function here has a twin in
``_ckernels.pyx`` with an identical contract.
"""
from math import gcd


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def horner_hom(c, num, den):
    """Return sum c[i] * num**i * den**(n-i), n = len(c) - 1.

    For den > 0 this has the sign of p(num/den).
    """
    n = len(c)
    if not n:
        return 0
    acc = c[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow *= den
        acc = acc * num + c[i] * dpow
    return acc


def sign_at(c, num, den):
    v = horner_hom(c, num, den)
    return (v > 0) - (v < 0)


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def content(c):
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def primitive(c):
    """Divide by the content; the leading coefficient is made positive."""
    c = trim(list(c))
    if not c:
        return c
    g = content(c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def derivative(c):
    return [i * c[i] for i in range(1, len(c))]


def prem(a, b):
    """Pseudo-remainder of a by b with a positive multiplier.

    Returns r with |lc(b)|**k * a = q*b + r, k = deg a - deg b + 1, so r has
    the sign of the true remainder.
    """
    a = trim(list(a))
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    db = len(b) - 1
    lb = b[-1]
    k = len(a) - len(b) + 1
    if k <= 0:
        return a
    r = a
    steps = 0
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        r = trim(r)
        steps += 1
    # pad the multiplier up to lb**k so the result is the canonical prem
    r = [x * lb ** (k - steps) for x in r]
    if lb < 0 and k % 2:
        r = [-x for x in r]
    return r


def sturm_chain(c):
    """Signed primitive remainder sequence of c and c'."""
    p0 = primitive(c)
    chain = [p0]
    p1 = primitive(derivative(p0))
    if not p1:
        return chain
    chain.append(p1)
    while True:
        r = prem(chain[-2], chain[-1])
        if not r:
            break
        r = [-x for x in r]
        g = content(r)
        chain.append([x // g for x in r])
    return chain


def variations(chain, num, den):
    """Sign variations of the chain at num/den (den > 0), zeros skipped."""
    count = 0
    last = 0
    for c in chain:
        v = horner_hom(c, num, den)
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


def grid_signs(c, nums, den):
    """Signs of p(n/den) for every n in nums."""
    return [sign_at(c, n, den) for n in nums]
