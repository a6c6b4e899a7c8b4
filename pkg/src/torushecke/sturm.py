"""Exact real root isolation and algebraic sign evaluation.

Sturm chains over Fraction decide, with no floating point anywhere, how many
distinct real roots a rational polynomial has in an interval.  A real
algebraic number is carried as an isolating interval of its minimal
polynomial; the sign of another polynomial at that number is read off after
shrinking the interval until the second polynomial cannot vanish inside it.
"""

from fractions import Fraction


def fpoly_trim(c):
    c = [Fraction(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def fpoly_eval(c, x):
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def fpoly_deriv(c):
    return tuple(i * c[i] for i in range(1, len(c)))


def _fpoly_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and any(x != 0 for x in a):
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, x in enumerate(b):
            a[shift + i] -= q * x
        a.pop()
    return fpoly_trim(a)


def sturm_chain(coeffs):
    p = fpoly_trim(coeffs)
    if len(p) <= 1:
        return (p,) if p else ((),)
    chain = [p, fpoly_deriv(p)]
    while len(chain[-1]) > 0:
        r = _fpoly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-x for x in r))
    return tuple(chain)


def _sign_changes(chain, x):
    signs = []
    for p in chain:
        v = fpoly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for i in range(1, len(signs)) if signs[i] != signs[i - 1])


def count_roots_between(chain, lo, hi):
    """Distinct real roots in (lo, hi]; endpoints must satisfy lo < hi."""
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def cauchy_bound(coeffs):
    p = fpoly_trim(coeffs)
    if len(p) <= 1:
        return Fraction(1)
    lead = abs(p[-1])
    return 1 + max(abs(a) / lead for a in p[:-1])


def count_real_roots(coeffs):
    p = fpoly_trim(coeffs)
    if len(p) <= 1:
        return 0
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    return count_roots_between(chain, -b, b)


def _nonroot_split(p, lo, hi):
    # p has at most deg p roots, so one of deg+1 interior sample points is clean
    n = len(p)
    for j in range(1, n + 2):
        t = lo + (hi - lo) * Fraction(j, n + 2)
        if fpoly_eval(p, t) != 0:
            return t
    raise ArithmeticError("could not find a non-root split point")


def isolate_real_roots(coeffs):
    """Disjoint intervals (lo, hi], ascending, one distinct real root each.

    Endpoints are never roots.  Rational roots get intervals like any other
    root; callers that need the rational value can bisect further.
    """
    p = fpoly_trim(coeffs)
    if len(p) <= 1:
        return []
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots_between(chain, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = _nonroot_split(p, lo, hi)
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort(key=lambda iv: iv[0])
    return out


def refine_interval(coeffs, interval, rounds=1):
    """Halve an isolating interval, keeping the single root inside."""
    p = fpoly_trim(coeffs)
    chain = sturm_chain(p)
    lo, hi = interval
    for _ in range(rounds):
        if fpoly_eval(p, lo) == 0 or count_roots_between(chain, lo, hi) != 1:
            raise ValueError("not an isolating interval")
        mid = _nonroot_split(p, lo, hi)
        if count_roots_between(chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _fpoly_gcd(a, b):
    a, b = fpoly_trim(a), fpoly_trim(b)
    while b:
        a, b = b, _fpoly_rem(a, b)
    return a


def sign_at_root(g_coeffs, f_coeffs, interval):
    """Sign of g at the unique root of f in the isolating interval.

    Exact trichotomy: -1, 0, or 1.  Zero is detected through the gcd, so the
    refinement loop below never chases a shared root.
    """
    f = fpoly_trim(f_coeffs)
    g = fpoly_trim(g_coeffs)
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if not g:
        return 0
    if len(g) == 1:
        return 1 if g[0] > 0 else -1
    f_chain = sturm_chain(f)
    if count_roots_between(f_chain, lo, hi) != 1:
        raise ValueError("not an isolating interval for f")
    h = _fpoly_gcd(f, g)
    if len(h) > 1 and count_roots_between(sturm_chain(h), lo, hi) > 0:
        return 0
    g_chain = sturm_chain(g)
    # no zero of g in (lo, hi] means g keeps one sign there, and the root
    # of f sits in that half-open interval by the Sturm convention
    while count_roots_between(g_chain, lo, hi) > 0:
        mid = _nonroot_split(f, lo, hi)
        if count_roots_between(f_chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    v = fpoly_eval(g, hi)
    return 1 if v > 0 else -1
