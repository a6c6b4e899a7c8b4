"""Finite fields, polynomial factorization mod a prime, and p-power characters.

Polynomials over F_ell are coefficient tuples in little-endian order with no
trailing zeros (the zero polynomial is the empty tuple).  Factorization runs
squarefree decomposition, then distinct-degree splitting by modular Frobenius
powers, then equal-degree splitting.  Equal-degree splitting prefers a
deterministic exhaustive scan over monic candidates whenever ell**d is small,
and otherwise uses randomized splitting with a seed derived from the input,
so results are reproducible either way.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceeded, CharacterUndefined, GeneratorError

EXHAUSTIVE_SPLIT_CAP = 10**6
GENERATOR_FIELD_CAP = 10**9


# ---------------------------------------------------------------------------
# integer helpers

def factor_int(n):
    """Prime factorization by trial division; n must be positive."""
    if n <= 0:
        raise ValueError("positive integers only")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def primes_stream(start=2):
    n = max(2, start)
    while True:
        if is_prime(n):
            yield n
        n += 1


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_ell

def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b, ell):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % ell
    return poly_trim(out)


def poly_sub(a, b, ell):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % ell
    return poly_trim(out)


def poly_mul(a, b, ell):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % ell
    return poly_trim(out)


def poly_divmod(a, b, ell):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], ell - 2, ell)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * inv) % ell
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % ell
    return poly_trim(q), poly_trim(a)


def poly_mod(a, b, ell):
    return poly_divmod(a, b, ell)[1]


def poly_gcd(a, b, ell):
    while b:
        a, b = b, poly_mod(a, b, ell)
    if a:
        inv = pow(a[-1], ell - 2, ell)
        a = tuple((c * inv) % ell for c in a)
    return a


def poly_powmod(a, e, mod, ell):
    result = (1,)
    a = poly_mod(a, mod, ell)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, a, ell), mod, ell)
        a = poly_mod(poly_mul(a, a, ell), mod, ell)
        e >>= 1
    return result


def poly_monic(a, ell):
    if not a:
        return a
    inv = pow(a[-1], ell - 2, ell)
    return tuple((c * inv) % ell for c in a)


def poly_deriv(a, ell):
    return poly_trim([(i * a[i]) % ell for i in range(1, len(a))])


def poly_eval(a, x, ell):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % ell
    return acc


def poly_is_irreducible(f, ell):
    """Rabin test: x^(ell^n) = x mod f, and no proper Frobenius fixes."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    for q in factor_int(n):
        e = ell ** (n // q)
        g = poly_powmod(x, e, f, ell)
        if poly_gcd(poly_sub(g, x, ell), f, ell) != (1,):
            return False
    g = poly_powmod(x, ell ** n, f, ell)
    return poly_sub(g, x, ell) == ()


# ---------------------------------------------------------------------------
# factorization mod ell

def factor_poly_mod_ell(coeffs, ell):
    """Factor a nonzero polynomial over F_ell.

    Returns a list of (monic irreducible tuple, multiplicity), sorted by
    (degree, balanced coefficient tuple).  The leading coefficient is
    discarded after monic normalization, so only monic factors are reported.
    """
    f = poly_trim(tuple(c % ell for c in coeffs))
    if not f:
        raise ValueError("zero polynomial")
    f = poly_monic(f, ell)
    factors = {}
    _factor_with_multiplicity(f, ell, 1, factors)
    items = [(g, m) for g, m in factors.items()]
    items.sort(key=lambda gm: (len(gm[0]), _balanced_tuple(gm[0], ell)))
    return items


def _balanced_tuple(g, ell):
    half = ell // 2
    return tuple(((c + half) % ell) - half for c in g)


def _factor_with_multiplicity(f, ell, mult, out):
    """Recursive multiplicity peel.

    The quotient f / gcd(f, f') is squarefree and carries exactly the
    irreducible factors whose multiplicity is prime to ell; after stripping
    those by trial division, what remains is an ell-th power and recursion
    picks it up through the zero-derivative branch.
    """
    if len(f) <= 1:
        return
    d = poly_deriv(f, ell)
    if d == ():
        # f(x) = h(x)**ell with h read off every ell-th coefficient
        root = poly_trim([f[i] for i in range(0, len(f), ell)])
        _factor_with_multiplicity(root, ell, mult * ell, out)
        return
    g = poly_gcd(f, d, ell)
    w, _ = poly_divmod(f, g, ell)
    rem = f
    for irr in _factor_squarefree(w, ell):
        e = 0
        while True:
            q, r = poly_divmod(rem, irr, ell)
            if r != ():
                break
            e += 1
            rem = q
        out[irr] = out.get(irr, 0) + mult * e
    _factor_with_multiplicity(rem, ell, mult, out)


def _factor_squarefree(f, ell):
    """Irreducible factors of a squarefree monic polynomial."""
    if len(f) <= 1:
        return []
    out = []
    x = (0, 1)
    h = x
    v = f
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = poly_powmod(h, ell, v, ell)
        g = poly_gcd(poly_sub(h, x, ell), v, ell)
        if g != (1,):
            out.extend(_equal_degree_split(g, d, ell))
            v, _ = poly_divmod(v, g, ell)
            h = poly_mod(h, v, ell)
    if len(v) > 1:
        out.append(v)
    return out


def _equal_degree_split(g, d, ell):
    """Split a product of distinct degree-d irreducibles."""
    n = len(g) - 1
    if n == d:
        return [g]
    if ell ** d <= EXHAUSTIVE_SPLIT_CAP:
        return _split_exhaustive(g, d, ell)
    return _split_randomized(g, d, ell)


def _split_exhaustive(g, d, ell):
    """Trial-divide by every monic degree-d polynomial in lexicographic order.

    Deterministic fallback; viable because ell**d stays at desk scale.
    """
    out = []
    rem = g
    counters = [0] * d
    while len(rem) - 1 > d:
        cand = tuple(counters) + (1,)
        if poly_mod(rem, cand, ell) == ():
            out.append(cand)
            rem, _ = poly_divmod(rem, cand, ell)
        # increment little-endian counter
        i = 0
        while i < d:
            counters[i] += 1
            if counters[i] < ell:
                break
            counters[i] = 0
            i += 1
        else:
            break
    if len(rem) - 1 == d:
        out.append(rem)
    elif len(rem) - 1 > d:
        raise ArithmeticError("exhaustive split failed")
    return out


def _split_randomized(g, d, ell):
    """Equal-degree splitting with a seed tied to the input polynomial."""
    rng = random.Random(hash((g, d, ell)) & 0xFFFFFFFF)
    work = [g]
    out = []
    q = ell ** d
    while work:
        f = work.pop()
        n = len(f) - 1
        if n == d:
            out.append(f)
            continue
        while True:
            a = tuple(rng.randrange(ell) for _ in range(n)) + (1,)
            if ell == 2:
                # trace map splitting in characteristic 2
                t = a
                acc = a
                for _ in range(d - 1):
                    acc = poly_powmod(acc, 2, f, ell)
                    t = poly_add(t, acc, ell)
                h = poly_gcd(t, f, ell)
            else:
                b = poly_powmod(a, (q - 1) // 2, f, ell)
                h = poly_gcd(poly_sub(b, (1,), ell), f, ell)
            if h not in ((1,), ()) and len(h) < len(f):
                work.append(h)
                work.append(poly_divmod(f, h, ell)[0])
                break
    return out


def distinct_roots(coeffs, ell):
    """Roots in F_ell of a polynomial, each listed once, ascending."""
    roots = []
    for g, _ in factor_poly_mod_ell(coeffs, ell):
        if len(g) == 2:
            roots.append((-g[0]) % ell)
    return sorted(roots)


# ---------------------------------------------------------------------------
# extension fields

# Fixed table of monic irreducible moduli for small extensions; entries are
# the lexicographically least primitive polynomials, so x generates the
# multiplicative group.  Little-endian coefficient tuples including the
# leading 1.
PRIMITIVE_MODULUS_TABLE = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
}


@dataclass(frozen=True)
class FqField:
    """The field with ell**f elements, as F_ell[t] / (modulus)."""

    ell: int
    f: int
    modulus: tuple

    @property
    def order(self):
        return self.ell ** self.f

    def element(self, coords):
        coords = tuple(c % self.ell for c in coords)
        if len(coords) > self.f:
            coords = poly_mod(coords, self.modulus, self.ell)
        coords = coords + (0,) * (self.f - len(coords))
        return FqElement(self, coords)

    def from_int(self, n):
        """Integer encoding by base-ell digits; inverse of FqElement.encode()."""
        digits = []
        n = int(n)
        for _ in range(self.f):
            digits.append(n % self.ell)
            n //= self.ell
        return self.element(tuple(digits))

    def zero(self):
        return self.element((0,) * self.f)

    def one(self):
        return self.element((1,) + (0,) * (self.f - 1))

    def gen(self):
        return self.element((0, 1) + (0,) * (self.f - 2)) if self.f >= 2 else self.element((1,))


@dataclass(frozen=True)
class FqElement:
    field: FqField
    coords: tuple

    def encode(self):
        n = 0
        for c in reversed(self.coords):
            n = n * self.field.ell + c
        return n

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __mul__(self, other):
        fld = self.field
        prod = poly_mul(self.coords, other.coords, fld.ell)
        return fld.element(poly_mod(prod, fld.modulus, fld.ell))

    def __add__(self, other):
        return self.field.element(poly_add(self.coords, other.coords, self.field.ell))

    def __sub__(self, other):
        return self.field.element(poly_sub(self.coords, other.coords, self.field.ell))

    def __pow__(self, e):
        fld = self.field
        if e < 0:
            return self.inverse() ** (-e)
        acc = fld.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.order - 2)


@lru_cache(maxsize=None)
def extension_field(ell, f):
    """F_{ell^f} with a deterministic modulus.

    Uses the fixed primitive table for the tabulated range and otherwise the
    first irreducible monic polynomial in lexicographic coefficient order.
    """
    if f == 1:
        return FqField(ell, 1, PRIMITIVE_MODULUS_TABLE.get((ell, 1), (_least_primitive_root_neg(ell), 1)))
    key = (ell, f)
    if key in PRIMITIVE_MODULUS_TABLE:
        return FqField(ell, f, PRIMITIVE_MODULUS_TABLE[key])
    counters = [0] * f
    while True:
        cand = tuple(counters) + (1,)
        if poly_is_irreducible(cand, ell):
            return FqField(ell, f, cand)
        i = 0
        while i < f:
            counters[i] += 1
            if counters[i] < ell:
                break
            counters[i] = 0
            i += 1
        else:
            raise ArithmeticError("no irreducible polynomial found")


def _least_primitive_root_neg(ell):
    # modulus (c, 1) represents t + c, i.e. t = -c; pick c with -c primitive
    g = find_generator_int(ell)
    return (-g) % ell


@lru_cache(maxsize=None)
def find_generator_int(ell):
    """Least generator of F_ell^* by ascending scan with verified order."""
    if ell == 2:
        return 1
    fac = factor_int(ell - 1)
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // q, ell) != 1 for q in fac):
            return g
    raise ArithmeticError("no generator found")


@lru_cache(maxsize=None)
def find_generator(field: FqField) -> FqElement:
    """Deterministic generator of the multiplicative group.

    Candidates are scanned in ascending integer encoding starting from 2,
    and each candidate's order is verified against the factored group order.
    Fields larger than the cap are refused so trial division stays honest.
    """
    q = field.order
    if q > GENERATOR_FIELD_CAP:
        raise CapExceeded(f"field order {q} exceeds generator search cap")
    if q == 2:
        # trivial multiplicative group: its generator is the identity
        return field.one()
    fac = factor_int(q - 1)
    for enc in range(2, q):
        x = field.from_int(enc)
        if x.is_zero():
            continue
        if all(not (x ** ((q - 1) // r) - field.one()).is_zero() for r in fac):
            return x
    raise GeneratorError("multiplicative group has no generator?")


def element_order_divides(x: FqElement, e: int) -> bool:
    return (x ** e - x.field.one()).is_zero()


def verify_generator(g: FqElement):
    q = g.field.order
    if q > GENERATOR_FIELD_CAP:
        raise CapExceeded(f"field order {q} exceeds generator search cap")
    fac = factor_int(q - 1)
    for r in fac:
        if element_order_divides(g, (q - 1) // r):
            raise GeneratorError(f"element {g.coords} has order dividing (q-1)/{r}")


def pth_character(x: FqElement, p: int, g: FqElement) -> int:
    """Order-p character value of x, under the generator convention g.

    With zeta = g**((q-1)/p), returns the k in F_p with
    x**((q-1)/p) = zeta**k.  Requires p | q - 1 and x != 0.
    """
    fld = x.field
    q = fld.order
    if (q - 1) % p != 0:
        raise CharacterUndefined(f"p={p} does not divide q-1={q - 1}")
    if x.is_zero():
        raise CharacterUndefined("character of zero")
    verify_generator(g)
    e = (q - 1) // p
    zeta = g ** e
    y = x ** e
    acc = fld.one()
    for k in range(p):
        if (y - acc).is_zero():
            return k
        acc = acc * zeta
    raise ArithmeticError("character value not found; generator invalid?")
