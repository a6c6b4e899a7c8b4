"""Splitting of rational primes in Z[theta] and reduction to residue fields.

Only primes coprime to disc(min_poly) are handled; that single exclusion
removes both ramified primes and primes dividing the index of Z[theta] in
the maximal order, so factoring the minimal polynomial mod ell tells the
whole story there.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import RamifiedOrIndexPrime
from .field import FieldDescriptor, poly_discriminant, reduce_mod_min_poly
from .galois import FqField, factor_poly_mod_ell, poly_trim
from .ideals import ideal_from_generators


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of Z[theta] over ell, cut out by (ell, g_poly(theta))."""

    ell: int
    f: int
    g_poly: tuple

    @property
    def norm(self):
        return self.ell ** self.f

    def label(self):
        return f"({self.ell}, deg {self.f})"


@lru_cache(maxsize=None)
def _min_poly_disc(min_poly):
    return poly_discriminant(min_poly)


@lru_cache(maxsize=None)
def factor_prime(ell, F: FieldDescriptor):
    """Primes of Z[theta] above ell, in (residue degree, balanced coeff) order."""
    disc = _min_poly_disc(F.min_poly)
    if disc % ell == 0:
        raise RamifiedOrIndexPrime(
            f"{ell} divides disc(min_poly) = {disc}; excluded from prime handling"
        )
    fbar = poly_trim(tuple(c % ell for c in F.min_poly))
    factors = factor_poly_mod_ell(fbar, ell)
    out = []
    for g, mult in factors:
        if mult != 1:
            raise ArithmeticError("repeated factor despite ell coprime to disc")
        out.append(PrimeIdeal(ell=ell, f=len(g) - 1, g_poly=g))
    return tuple(out)


def prime_to_ideal(v: PrimeIdeal, F: FieldDescriptor):
    # g_poly can have degree = n for inert primes; reduce, never truncate
    n = F.degree
    ell_elt = (v.ell,) + (0,) * (n - 1)
    g_elt = reduce_mod_min_poly(v.g_poly, F.min_poly)
    return ideal_from_generators([ell_elt, g_elt], F)


@lru_cache(maxsize=None)
def residue_field(v: PrimeIdeal):
    """kappa_v presented as F_ell[t] / (g_poly), so theta maps to t."""
    return FqField(v.ell, v.f, v.g_poly)


def residue_image(x, v: PrimeIdeal):
    """Reduction O_F -> kappa_v sending theta to the class of t."""
    kappa = residue_field(v)
    return kappa.element(tuple(c % v.ell for c in x))


def balanced_coeffs(g, ell):
    """Coefficients folded into (-ell/2, ell/2]; the scan's tiebreak order."""
    half = ell // 2
    return tuple(((c + half) % ell) - half for c in g)


def prime_sort_key(v: PrimeIdeal):
    return (v.ell, v.f, balanced_coeffs(v.g_poly, v.ell))
