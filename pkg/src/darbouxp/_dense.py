"""Dense recursive polynomials over F_p, used only inside gcd.

A level-0 element is an int in range(p). A level-L element is a list of
level-(L-1) elements, lowest degree first, with no trailing zeros; the
zero polynomial at level >= 1 is the empty list.
"""
from __future__ import annotations


def is_zero(a, L):
    return a == 0 if L == 0 else not a


def _trim(a, L):
    if L == 1:
        while a and a[-1] == 0:
            a.pop()
    else:
        while a and not a[-1]:
            a.pop()
    return a


def add(a, b, L, p):
    if L == 0:
        return (a + b) % p
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if L == 1:
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
    else:
        for i, c in enumerate(b):
            out[i] = add(out[i], c, L - 1, p)
    return _trim(out, L)


def neg(a, L, p):
    if L == 0:
        return (-a) % p
    if L == 1:
        return [(-c) % p for c in a]
    return [neg(c, L - 1, p) for c in a]


def sub(a, b, L, p):
    return add(a, neg(b, L, p), L, p)


def scale(a, c, L, p):
    """Multiply by a field scalar."""
    if L == 0:
        return a * c % p
    if c % p == 0:
        return []
    if L == 1:
        return [x * c % p for x in a]
    return [scale(x, c, L - 1, p) for x in a]


def mul(a, b, L, p):
    if L == 0:
        return a * b % p
    if not a or not b:
        return []
    if L == 1:
        if len(a) > 8 and len(b) > 8:
            return _kronecker_mul(a, b, p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([c % p for c in out], 1)
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = add(out[i + j], mul(x, y, L - 1, p), L - 1, p)
    return _trim(out, L)


def _kronecker_mul(a, b, p):
    # pack coefficient lists into big ints; each product coefficient is
    # below min(len) * p^2, so w bytes per slot can never overflow
    bound = min(len(a), len(b)) * (p - 1) ** 2
    w = max(1, (bound.bit_length() + 7) // 8)
    A = int.from_bytes(b"".join(c.to_bytes(w, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes(w, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (A * B).to_bytes(n * w, "little")
    out = [int.from_bytes(raw[i * w : (i + 1) * w], "little") % p for i in range(n)]
    return _trim(out, 1)


def div_exact(a, b, L, p):
    """Quotient a / b when b divides a, else None."""
    if L == 0:
        return a * pow(b, -1, p) % p
    if not a:
        return []
    if len(a) < len(b):
        return None
    a = list(a)
    db = len(b) - 1
    lcb = b[-1]
    if L == 1:
        inv = pow(lcb, -1, p)
        q = [0] * (len(a) - db)
        for shift in range(len(a) - 1 - db, -1, -1):
            c = a[shift + db] * inv % p
            q[shift] = c
            if c:
                for k in range(db + 1):
                    a[shift + k] = (a[shift + k] - c * b[k]) % p
        if any(a[:db]):
            return None
        return _trim(q, 1)
    q = [0 if L == 1 else []] * (len(a) - db)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        c = div_exact(a[-1], lcb, L - 1, p)
        if c is None:
            return None
        q[shift] = c
        for k in range(db + 1):
            a[shift + k] = sub(a[shift + k], mul(c, b[k], L - 1, p), L - 1, p)
        _trim(a, L)
    if a:
        return None
    return _trim(q, L)


def _univariate_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            c = a[-1] * inv % p
            shift = len(a) - 1 - db
            for k in range(db + 1):
                a[shift + k] = (a[shift + k] - c * b[k]) % p
            _trim(a, 1)
        a, b = b, a
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def content(a, L, p):
    """gcd of the coefficients of a (a level-(L-1) element)."""
    g = 0 if L == 1 else []
    for c in a:
        if is_zero(c, L - 1):
            continue
        g = gcd(g, c, L - 1, p)
        if _is_unit(g, L - 1):
            break
    return g


def _is_unit(a, L):
    if L == 0:
        return a != 0
    return len(a) == 1 and _is_unit(a[0], L - 1)


def primitive(a, L, p):
    c = content(a, L, p)
    if _is_unit(c, L - 1):
        return a
    return [div_exact(x, c, L - 1, p) for x in a]


def _prem(a, b, L, p):
    # sparse pseudo-remainder; coefficients at level L-1
    a = list(a)
    db = len(b) - 1
    lcb = b[-1]
    while a and len(a) - 1 >= db:
        lca = a[-1]
        shift = len(a) - 1 - db
        a = [mul(x, lcb, L - 1, p) for x in a]
        for k in range(db + 1):
            a[shift + k] = sub(a[shift + k], mul(lca, b[k], L - 1, p), L - 1, p)
        _trim(a, L)
    return a


def gcd(a, b, L, p):
    """A gcd of a and b, defined up to a nonzero scalar."""
    if L == 0:
        return 1 if (a or b) else 0
    if is_zero(a, L):
        return b
    if is_zero(b, L):
        return a
    if L == 1:
        return _univariate_gcd(a, b, p)
    ca, cb = content(a, L, p), content(b, L, p)
    c = gcd(ca, cb, L - 1, p)
    if len(a) == 1 or len(b) == 1:
        return [c]
    a = [div_exact(x, ca, L - 1, p) for x in a]
    b = [div_exact(x, cb, L - 1, p) for x in b]
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _prem(a, b, L, p)
        if not r:
            break
        if len(r) == 1:
            return [c]
        a, b = b, primitive(r, L, p)
    return [mul(c, x, L - 1, p) for x in b]


def from_sparse(terms, var_order, p):
    """Build a dense element with var_order[-1] as the outermost level."""
    L = len(var_order)
    root = [] if L else 0
    if L == 0:
        return sum(terms.values()) % p
    for m, c in terms.items():
        node = root
        for depth in range(L - 1, 0, -1):
            e = m[var_order[depth]]
            while len(node) <= e:
                node.append([])
            node = node[e]
        e = m[var_order[0]]
        while len(node) <= e:
            node.append(0)
        node[e] = (node[e] + c) % p
    return _normalize(root, L)


def _normalize(a, L):
    if L == 1:
        return _trim(a, 1)
    return _trim([_normalize(x, L - 1) for x in a], L)


def to_sparse(a, var_order, nvars):
    out = {}
    L = len(var_order)

    def walk(node, depth, exps):
        if depth == 0:
            if node:
                m = [0] * nvars
                for v, e in zip(var_order, exps):
                    m[v] = e
                out[tuple(m)] = node
            return
        for e, child in enumerate(node):
            walk(child, depth - 1, (e,) + exps)

    if L == 0:
        if a:
            out[(0,) * nvars] = a
    else:
        walk(a, L, ())
    return out
