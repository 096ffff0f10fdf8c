"""Pure-Python eliminative counting kernel (fallback for the compiled one).

Tables are dense coefficient lists of a multilinear polynomial mod p: index
``mask`` holds the coefficient of the monomial with support ``mask``. The
highest variable is substituted first, which halves the table; the last
remaining variable and the pivot are then counted in closed form.
"""


def _zero_set(c0, c1, p, inv, torus):
    """Zero set of c0 + c1*y over F_p (or F_p^*): (kind, point)."""
    if c1:
        y0 = (p - c0) * inv[c1] % p
        if torus and y0 == 0:
            return 0, -1
        return 1, y0
    if c0 == 0:
        return 2, -1
    return 0, -1


def _leaf2(b1, a1, b0, a0, p, inv, torus):
    dom = p - 1 if torus else p
    k1, y1 = _zero_set(b1, a1, p, inv, torus)
    k0, y0 = _zero_set(b0, a0, p, inv, torus)
    n1 = (0, 1, dom)[k1]
    n0 = (0, 1, dom)[k0]
    if k1 == 0 or k0 == 0:
        both = 0
    elif k1 == 2:
        both = n0
    elif k0 == 2:
        both = n1
    else:
        both = 1 if y1 == y0 else 0
    if torus:
        return (dom - (n1 + n0 - both)) + dom * both
    return (p - n1) + p * both


def _leaf1(g1, g0, p, torus):
    if torus:
        if g1:
            return 1 if g0 else 0
        return p - 1 if g0 == 0 else 0
    if g1:
        return 1
    return p if g0 == 0 else 0


def count_tables(g1, g0, k, p, torus=False):
    """Zeros of x*G1 + G0 with G1, G0 given as dense tables over k variables."""
    g1 = [int(x) % p for x in g1]
    g0 = [int(x) % p for x in g0]
    if len(g1) != 1 << k or len(g0) != 1 << k:
        raise ValueError("table size must be 2**k")
    if k == 0:
        return _leaf1(g1[0], g0[0], p, torus)
    inv = [0] + [pow(a, -1, p) for a in range(1, p)]
    start = 1 if torus else 0

    def rec(t1, t0, size):
        if size == 2:
            return _leaf2(t1[0], t1[1], t0[0], t0[1], p, inv, torus)
        h = size >> 1
        lo1, hi1 = t1[:h], t1[h:]
        lo0, hi0 = t0[:h], t0[h:]
        if start:
            cur1 = [(a + b) % p for a, b in zip(lo1, hi1)]
            cur0 = [(a + b) % p for a, b in zip(lo0, hi0)]
        else:
            cur1, cur0 = lo1, lo0
        total = 0
        for v in range(start, p):
            if v > start:
                cur1 = [(a + b) % p for a, b in zip(cur1, hi1)]
                cur0 = [(a + b) % p for a, b in zip(cur0, hi0)]
            total += rec(cur1, cur0, h)
        return total

    return rec(g1, g0, 1 << k)
