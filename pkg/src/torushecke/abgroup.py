"""Finite abelian group machinery over integer exponent lattices.

A concrete abelian group given by generators and a multiplication callable
is closed into a polycyclic normal form: generator i gets a relative order
m_i over the subgroup of its predecessors, every element gets a unique
exponent vector in the box prod [0, m_i), and the relations span a full-rank
sublattice L of Z^k with Z^k / L isomorphic to the group.  Everything
downstream (quotients, kernels, discrete logs) is Smith or Hermite normal
form on that lattice.
"""

from dataclasses import dataclass

from .intlinalg import (
    IntMatrix,
    hnf_columns,
    hnf_reduce,
    kernel_basis,
    smith_normal_form,
    snf_diagonal,
)


@dataclass(frozen=True)
class PolycyclicClosure:
    """Enumerated abelian group with discrete logs over adjoined generators."""

    generators: tuple
    elements: tuple
    dlog: dict
    relative_orders: tuple
    relation_columns: tuple

    @property
    def order(self):
        n = 1
        for m in self.relative_orders:
            n *= m
        return n

    @property
    def ngens(self):
        return len(self.relative_orders)


def closure_from_stream(candidates, mul, identity):
    """Polycyclic closure of a finite abelian group from a candidate stream.

    Candidates already inside the span are skipped; each adjoined generator
    g_i gets its relative order m_i = min{e : g_i^e in previous span}, and
    every element a unique exponent vector in the box prod [0, m_i).  mul
    must be commutative/associative and elements hashable.  Total cost is
    one membership probe per candidate plus O(|G|) multiplications.
    """
    gens = []
    dlog = {identity: ()}
    relations = []
    rel_orders = []
    for cand in candidates:
        if cand in dlog:
            continue
        i = len(gens)
        gens.append(cand)
        dlog = {h: vec + (0,) for h, vec in dlog.items()}
        e = 1
        power = cand
        while power not in dlog:
            e += 1
            power = mul(power, cand)
        landing = dlog[power]
        rel = [0] * (i + 1)
        rel[i] = e
        for j in range(i + 1):
            rel[j] -= landing[j]
        relations.append(tuple(rel))
        rel_orders.append(e)
        current = list(dlog.items())
        ga = identity
        for a in range(1, e):
            ga = mul(ga, cand)
            for h, vec in current:
                v = list(vec)
                v[i] = a
                dlog[mul(ga, h)] = tuple(v)
    k = len(gens)
    dlog = {h: vec + (0,) * (k - len(vec)) for h, vec in dlog.items()}
    relations = [tuple(rel) + (0,) * (k - len(rel)) for rel in relations]
    return PolycyclicClosure(
        generators=tuple(gens),
        elements=tuple(dlog),
        dlog=dlog,
        relative_orders=tuple(rel_orders),
        relation_columns=tuple(relations),
    )


@dataclass(frozen=True)
class ExponentGroup:
    """Z^k modulo a full-rank relation lattice, in column HNF."""

    ngens: int
    hnf: tuple

    @classmethod
    def from_columns(cls, columns, k):
        if k == 0:
            return cls(ngens=0, hnf=())
        h = hnf_columns(list(columns), k)
        return cls(ngens=k, hnf=tuple(tuple(r) for r in h))

    @property
    def order(self):
        n = 1
        for i in range(self.ngens):
            n *= self.hnf[i][i]
        return n

    def reduce(self, vec):
        return hnf_reduce(self.hnf, vec)

    def add(self, u, v):
        return self.reduce(tuple(a + b for a, b in zip(u, v)))

    def neg(self, u):
        return self.reduce(tuple(-a for a in u))

    def scale(self, c, u):
        return self.reduce(tuple(c * a for a in u))

    def is_identity(self, u):
        return all(a == 0 for a in self.reduce(u))

    def invariant_factors(self):
        m = IntMatrix.from_rows([list(r) for r in self.hnf])
        return tuple(d for d in snf_diagonal(m) if d > 1)

    def element_order(self, u):
        # order divides the group order; peel prime factors off the exponent
        n = self.order
        u = self.reduce(u)
        e = n
        d = 2
        rest = n
        primes = []
        while d * d <= rest:
            if rest % d == 0:
                primes.append(d)
                while rest % d == 0:
                    rest //= d
            d += 1
        if rest > 1:
            primes.append(rest)
        for q in primes:
            while e % q == 0 and self.is_identity(self.scale(e // q, u)):
                e //= q
        return e


@dataclass(frozen=True)
class QuotientStructure:
    """Z^k / (relations + subgroup) with a computable projection map."""

    factors: tuple
    _u_rows: tuple
    _row_indices: tuple

    @property
    def order(self):
        n = 1
        for d in self.factors:
            n *= d
        return n

    def project(self, vec):
        out = []
        for pos, i in enumerate(self._row_indices):
            row = self._u_rows[i]
            out.append(sum(row[j] * vec[j] for j in range(len(vec))) % self.factors[pos])
        return tuple(out)

    def is_trivial_class(self, vec):
        return all(c == 0 for c in self.project(vec))


def quotient_structure(relation_columns, extra_columns, k):
    """Structure of Z^k modulo the lattice spanned by all given columns."""
    if k == 0:
        return QuotientStructure(factors=(), _u_rows=(), _row_indices=())
    cols = list(relation_columns) + list(extra_columns)
    rows = [[col[i] for col in cols] for i in range(k)]
    m = IntMatrix.from_rows(rows)
    u, d, _ = smith_normal_form(m)
    factors = []
    row_indices = []
    for i in range(k):
        di = d[i, i] if i < d.cols else 0
        if di == 0:
            raise ArithmeticError("quotient is infinite; relation lattice not full rank")
        if di > 1:
            factors.append(di)
            row_indices.append(i)
    u_rows = tuple(tuple(u[i, j] for j in range(k)) for i in range(k))
    return QuotientStructure(
        factors=tuple(factors), _u_rows=u_rows, _row_indices=tuple(row_indices)
    )


@dataclass(frozen=True)
class KernelLattice:
    """Kernel of Z^s -> Z^k / relations, as a column-HNF sublattice of Z^s."""

    hnf: tuple
    index: int
    image_invariant_factors: tuple

    def basis_columns(self):
        s = len(self.hnf)
        return [tuple(self.hnf[i][j] for i in range(s)) for j in range(s)]

    def contains(self, vec):
        return all(c == 0 for c in hnf_reduce(self.hnf, vec))


def kernel_of_map(map_columns, relation_columns, s, k):
    """Kernel lattice of the map sending basis vector j to map_columns[j].

    map_columns live in Z^k; the target group is Z^k modulo the relation
    columns.  The integer kernel of the stacked matrix [map | relations]
    projects onto exactly the exponent vectors that die in the group.
    """
    if k == 0:
        # trivial target: everything is in the kernel
        hnf = tuple(tuple(1 if i == j else 0 for j in range(s)) for i in range(s))
        return KernelLattice(hnf=hnf, index=1, image_invariant_factors=())
    cols = list(map_columns) + list(relation_columns)
    rows = [[col[i] for col in cols] for i in range(k)]
    m = IntMatrix.from_rows(rows)
    kern = kernel_basis(m)
    projected = [tuple(vec[j] for j in range(s)) for vec in kern]
    h = hnf_columns(projected, s)
    hnf = tuple(tuple(r) for r in h)
    index = 1
    for i in range(s):
        index *= hnf[i][i]
    quot = IntMatrix.from_rows([list(r) for r in hnf])
    inv = tuple(d for d in snf_diagonal(quot) if d > 1)
    return KernelLattice(hnf=hnf, index=index, image_invariant_factors=inv)
