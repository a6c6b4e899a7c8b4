"""Unit group machinery: fundamental units, congruence unit subgroups, indices.

The subgroup of totally positive units congruent to 1 modulo an ideal is
computed as a kernel lattice: exponent vectors over (zeta, eps_1..eps_r) that
die in the congruence-sign group.  Its Hermite basis gives deterministic free
generators, the lattice index gives [O^x : E], and the Smith invariants of
the quotient give every delta_p at once.
"""

from dataclasses import dataclass
from math import isqrt

from .abgroup import KernelLattice, kernel_of_map
from .congruence import CongruenceSignGroup, residue_sign_group
from .errors import TorsionObstruction
from .field import (
    FieldDescriptor,
    element_mul,
    element_pow,
    element_unit_inverse,
    is_totally_positive,
)
from .ideals import IdealHNF


def pell_fundamental(d):
    """Least positive (x, y) with x*x - d*y*y = +-1, by continued fractions."""
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError("d must not be a perfect square")
    m, den, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    period = 0
    while True:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        period += 1
        if a == 2 * a0:
            break
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    norm = -1 if period % 2 else 1
    return h, k, norm


def fundamental_unit_real_quadratic(d):
    """Power-basis coordinates of the fundamental unit of Q(sqrt d).

    For d = 1 mod 4 the order has basis 1, (1+sqrt d)/2 and the unit solves
    X^2 - d*Y^2 = +-4 with minimal Y; otherwise the plain Pell solution is
    already fundamental for Z[sqrt d].
    """
    if d <= 1:
        raise ValueError("d must exceed 1")
    x, y, _ = pell_fundamental(d)
    if d % 4 != 1:
        return (x, y)
    for Y in range(1, 2 * y + 1):
        for s in (-4, 4):
            t = d * Y * Y + s
            if t < 0:
                continue
            X = isqrt(t)
            if X * X != t:
                continue
            if (X - Y) % 2:
                raise ArithmeticError("parity violation in the +-4 norm equation")
            return ((X - Y) // 2, Y)
    raise ArithmeticError("no +-4 solution below the Pell bound")


def unit_generators(F: FieldDescriptor):
    """(zeta, eps_1, ..., eps_r): generators of the unit group of the order."""
    return (F.torsion_generator,) + F.fundamental_units


def unit_power_product(exponents, F: FieldDescriptor):
    """zeta^a0 * prod eps_i^(a_i) for an exponent vector over unit_generators."""
    gens = unit_generators(F)
    acc = F.one()
    for g, e in zip(gens, exponents):
        if e == 0:
            continue
        base = g if e > 0 else element_unit_inverse(g, F)
        acc = element_mul(acc, element_pow(base, abs(e), F), F)
    return acc


@dataclass(frozen=True)
class UnitImage:
    """Image data of O^x inside the congruence-sign group of a modulus."""

    csg: CongruenceSignGroup
    map_columns: tuple
    kernel: KernelLattice

    @property
    def index(self):
        return self.kernel.index

    @property
    def image_invariant_factors(self):
        return self.kernel.image_invariant_factors

    def delta_p(self, p):
        return sum(1 for d in self.image_invariant_factors if d % p == 0)


def unit_image_in_modulus(F: FieldDescriptor, modulus: IdealHNF):
    csg = residue_sign_group(F, modulus)
    gens = unit_generators(F)
    cols = tuple(csg.element_vector(g) for g in gens)
    kern = kernel_of_map(cols, csg.full_relation_columns, len(gens), csg.width)
    return UnitImage(csg=csg, map_columns=cols, kernel=kern)


@dataclass(frozen=True)
class EUnits:
    """Totally positive units congruent to 1 mod the modulus.

    exponent_vectors are columns over (zeta, eps_1..eps_r) generating the
    free part; torsion_order is the order of the torsion subgroup inside
    (trivial whenever the field has a real place).
    """

    modulus: IdealHNF
    exponent_vectors: tuple
    values: tuple
    torsion_order: int
    index: int
    image_invariant_factors: tuple

    @property
    def rank(self):
        return len(self.exponent_vectors)


def e_units(F: FieldDescriptor, modulus: IdealHNF, p=None):
    """Compute E(modulus) with verified generators.

    When p is given and the subgroup has torsion of order divisible by p the
    cohomology model downstream is invalid and the computation refuses.
    """
    ui = unit_image_in_modulus(F, modulus)
    K = ui.kernel.hnf
    w = F.torsion_order
    r = F.unit_rank
    zeta_entry = K[0][0]
    if w % zeta_entry:
        raise ArithmeticError("kernel misses zeta^w = 1; lattice is wrong")
    torsion_order = w // zeta_entry
    if p is not None and torsion_order % p == 0:
        raise TorsionObstruction(
            f"E(modulus) contains p-torsion (order {torsion_order}, p={p}); "
            "the free cohomology model does not apply"
        )
    vectors = []
    values = []
    for j in range(1, r + 1):
        col = tuple(K[i][j] for i in range(r + 1))
        eta = unit_power_product(col, F)
        if not is_totally_positive(eta, F):
            raise ArithmeticError(f"generator {eta} is not totally positive")
        one = F.one()
        diff = tuple(a - b for a, b in zip(eta, one))
        if not modulus.contains(diff):
            raise ArithmeticError(f"generator {eta} is not 1 mod the modulus")
        vectors.append(col)
        values.append(eta)
    return EUnits(
        modulus=modulus,
        exponent_vectors=tuple(vectors),
        values=tuple(values),
        torsion_order=torsion_order,
        index=ui.index,
        image_invariant_factors=ui.image_invariant_factors,
    )


def compute_rp(F: FieldDescriptor, p):
    """Dimension of Hom(O^x, F_p): the unit rank, plus one if p | torsion order."""
    return F.unit_rank + (1 if F.torsion_order % p == 0 else 0)


def delta_p_of(F: FieldDescriptor, modulus: IdealHNF, p):
    return unit_image_in_modulus(F, modulus).delta_p(p)


@dataclass(frozen=True)
class InvariantsRecord:
    """The numeric invariants a verification run pins for one (F, modulus, p)."""

    p: int
    r: int
    r_p: int
    delta_p: int
    index: int
    t_p: int = None
    h_plus: int = None

    def expected_tp(self):
        return self.r_p - self.delta_p
