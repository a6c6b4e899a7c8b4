"""Narrow class number oracle via cycles of reduced indefinite forms.

Integer binary quadratic forms a x^2 + b x y + c y^2 of positive nonsquare
discriminant D = b^2 - 4ac fall into finitely many reduced representatives,
and the reduction-step permutation rho partitions them into cycles.  The
number of cycles is the narrow class number of discriminant D.  Everything
here is integer arithmetic; isqrt stands in for the real square root.
"""

from math import isqrt

from .errors import ValidationError


def is_reduced(form, D):
    a, b, c = form
    if b <= 0 or b * b >= D:
        return False
    return (2 * abs(a) - b) ** 2 < D and (2 * abs(a) + b) ** 2 > D


def reduced_forms(D):
    """All reduced forms of discriminant D, sorted."""
    if D <= 0 or isqrt(D) ** 2 == D:
        raise ValidationError("discriminant must be positive and nonsquare")
    s = isqrt(D)
    out = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        m = (D - b * b) // 4
        if m <= 0:
            continue
        for a in _divisor_pairs(m):
            for sa in (a, -a):
                c = (-m) // sa
                form = (sa, b, c)
                if is_reduced(form, D):
                    out.append(form)
    return sorted(set(out))


def _divisor_pairs(m):
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


def rho_step(form, D):
    """One reduction step; permutes the reduced forms of discriminant D."""
    a, b, c = form
    m = 2 * abs(c)
    r = (-b) % m
    s = isqrt(D)
    bp = r + m * ((s - r) // m)
    cp = (bp * bp - D) // (4 * c)
    return (c, bp, cp)


def hplus_form_cycles(D):
    """Narrow class number of discriminant D: count rho-cycles."""
    forms = reduced_forms(D)
    seen = set()
    cycles = 0
    for f in forms:
        if f in seen:
            continue
        cycles += 1
        g = f
        while g not in seen:
            seen.add(g)
            g = rho_step(g, D)
            if not is_reduced(g, D):
                raise ArithmeticError(f"rho left the reduced set at {g}")
    return cycles
