"""Constructors for the concrete algebras used throughout the test corpus.

All constructors return immutable Algebra objects with human-readable
labels.  The Cayley-Dickson doubling and its conjugation twists are
generic plumbing for experiments; nothing in the acceptance suite depends
on them.
"""

from __future__ import annotations

from itertools import product

from .algebra import Algebra, make_algebra
from .errors import AlreadyUnital, DomainError, ResourceLimit
from .field import Field, PrimeField, Rationals

GROUP_ALGEBRA_CAP = 6


def make_group_algebra_z2n(n: int, cap: int = GROUP_ALGEBRA_CAP) -> Algebra:
    """Group algebra of (Z/2)^n over GF(2): basis e_x, products e_x e_y = e_{x+y}.

    Commutative, associative, unital with unity e_0; dimension 2^n.
    Basis index of the bit vector x is x+1 when x is read as a binary mask.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if n > cap:
        raise ResourceLimit(f"group algebra dimension 2^{n} exceeds cap 2^{cap}")
    field = PrimeField(2)
    dim = 2**n
    products = {(x + 1, y + 1): [((x ^ y) + 1, 1)] for x in range(dim) for y in range(dim)}
    labels = ["e_(" + ",".join(str((x >> b) & 1) for b in range(n)) + ")" for x in range(dim)]
    unity = [1] + [0] * (dim - 1)
    return make_algebra(field, dim, products, unity=unity, labels=labels)


def make_a_flex(field: Field | None = None) -> Algebra:
    """Five-dimensional non-unital algebra: e1e1=e5, e1e2=e3, e1e3=e4, e2e5=-e4."""
    f = field or Rationals()
    one = f.one()
    products = {
        (1, 1): [(5, one)],
        (1, 2): [(3, one)],
        (1, 3): [(4, one)],
        (2, 5): [(4, f.neg(one))],
    }
    return make_algebra(f, 5, products, labels=[f"e{i}" for i in range(1, 6)])


def make_a_alt(field: Field | None = None) -> Algebra:
    """Five-dimensional non-unital algebra: f1f1=f5, f1f3=f4, f2f1=f3, f2f5=-f4."""
    f = field or Rationals()
    one = f.one()
    products = {
        (1, 1): [(5, one)],
        (1, 3): [(4, one)],
        (2, 1): [(3, one)],
        (2, 5): [(4, f.neg(one))],
    }
    return make_algebra(f, 5, products, labels=[f"f{i}" for i in range(1, 6)])


def make_spin_factor(n: int, field: Field | None = None) -> Algebra:
    """Spin factor F*1 + F^n: (a+v)(b+w) = (ab + <v,w>) + (aw + bv).

    Unital and commutative; basis index 1 is the unity, indices 2..n+1 the
    orthonormal vector part.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    f = field or Rationals()
    one = f.one()
    dim = n + 1
    products = {(1, 1): [(1, one)]}
    for i in range(2, dim + 1):
        products[(1, i)] = [(i, one)]
        products[(i, 1)] = [(i, one)]
        products[(i, i)] = [(1, one)]
    labels = ["1"] + [f"v{i}" for i in range(1, n + 1)]
    unity = [one] + [f.zero()] * n
    return make_algebra(f, dim, products, unity=unity, labels=labels)


def make_matrix_algebra(n: int, field: Field | None = None) -> Algebra:
    """Full matrix algebra on matrix units: E_ij E_kl = delta_jk E_il."""
    if not 1 <= n <= 6:
        raise ResourceLimit("matrix algebra supported for 1 <= n <= 6")
    f = field or Rationals()
    one = f.one()

    def idx(i, j):
        return (i - 1) * n + j

    products = {}
    for i, j, l in product(range(1, n + 1), repeat=3):
        products[(idx(i, j), idx(j, l))] = [(idx(i, l), one)]
    labels = [f"E{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    unity = [one if (k - 1) % (n + 1) == 0 else f.zero() for k in range(1, n * n + 1)]
    return make_algebra(f, n * n, products, unity=unity, labels=labels)


def make_chain3(field: Field | None = None) -> Algebra:
    """dim 3, a*a = b, b*a = c, all else zero; nilpotent of index 4.

    The smallest convenient negative control: it is not mixing, since
    (aa)a = c lies outside the span of {a, b, a(aa)} = {a, b, 0}.
    """
    f = field or Rationals()
    one = f.one()
    return make_algebra(f, 3, {(1, 1): [(2, one)], (2, 1): [(3, one)]},
                        labels=["a", "b", "c"])


def make_nilpotent3(field: Field | None = None) -> Algebra:
    """dim 3, a*a = b only, so every triple product vanishes."""
    f = field or Rationals()
    return make_algebra(f, 3, {(1, 1): [(2, f.one())]}, labels=["a", "b", "c"])


def make_nonmixing7(field: Field | None = None) -> Algebra:
    """dim 7 negative control that fails mixing and both sliding identities.

    Products u*v = m1, m1*z = w1, v*u = m2, z*m2 = w2, all else zero.  At
    the triple (u, v, z) every bounded monomial lands in span{u,v,z,m1,m2},
    but (uv)z = w1 and z(vu) = w2 escape it.
    """
    f = field or Rationals()
    one = f.one()
    products = {
        (1, 2): [(4, one)],
        (4, 3): [(6, one)],
        (2, 1): [(5, one)],
        (3, 5): [(7, one)],
    }
    return make_algebra(f, 7, products,
                        labels=["u", "v", "z", "m1", "m2", "w1", "w2"])


def make_unital_hull(algebra: Algebra) -> Algebra:
    """Adjoin an identity as new basis vector 1, shifting old indices up."""
    if algebra.unity is not None:
        raise AlreadyUnital("algebra already declares a unity")
    f = algebra.field
    one = f.one()
    dim = algebra.dim + 1
    products = {(1, 1): [(1, one)]}
    for i in range(2, dim + 1):
        products[(1, i)] = [(i, one)]
        products[(i, 1)] = [(i, one)]
    for (i, j), terms in algebra.sc.items():
        products[(i + 1, j + 1)] = [(k + 1, c) for k, c in terms]
    labels = ["e"] + [algebra.label(i) for i in range(1, algebra.dim + 1)]
    unity = [one] + [f.zero()] * (dim - 1)
    return make_algebra(f, dim, products, unity=unity, labels=labels)


# -- Cayley-Dickson plumbing -------------------------------------------------


def _cd_tables(level: int, gammas, f: Field):
    """Multiplication and conjugation of the doubling construction.

    Product of pairs: (a, b)(c, d) = (ac + g * conj(d) b, d a + b conj(c)).
    Returns (mul, conj) where mul maps basis pairs to coordinate vectors and
    conj is a sign vector on the basis.
    """
    dim = 2**level
    one = f.one()

    def mul_vec(level, x, y):
        # x, y are coordinate lists of length 2**level; returns their product
        n = 2**level
        if level == 0:
            return [f.mul(x[0], y[0])]
        h = n // 2
        g = gammas[level - 1]
        a, b = x[:h], x[h:]
        c, d = y[:h], y[h:]
        conj_d = conj_vec(level - 1, d)
        conj_c = conj_vec(level - 1, c)
        left = vec_add(level - 1, mul_vec(level - 1, a, c),
                       vec_scale(level - 1, g, mul_vec(level - 1, conj_d, b)))
        right = vec_add(level - 1, mul_vec(level - 1, d, a),
                        mul_vec(level - 1, b, conj_c))
        return left + right

    def conj_vec(level, x):
        if level == 0:
            return list(x)
        h = 2**level // 2
        a = conj_vec(level - 1, x[:h])
        return a + [f.neg(c) for c in x[h:]]

    def vec_add(level, x, y):
        return [f.add(u, v) for u, v in zip(x, y)]

    def vec_scale(level, c, x):
        return [f.mul(c, v) for v in x]

    def basis_vec(i):
        return [one if k == i else f.zero() for k in range(dim)]

    mul = {}
    for i in range(dim):
        for j in range(dim):
            mul[(i, j)] = mul_vec(level, basis_vec(i), basis_vec(j))
    conj_signs = conj_vec(level, [one] * dim)
    return mul, conj_signs


def make_cayley_dickson(level: int, gammas, field: Field | None = None) -> Algebra:
    """Doubling algebra of dimension 2^level with parameters gammas.

    Level 0 is the field itself; (-1, -1) at level 2 gives a quaternion
    type algebra.  Not tied to any concrete example in the test corpus.
    """
    if not 0 <= level <= 4:
        raise DomainError("level must be between 0 and 4")
    f = field or Rationals()
    gammas = [g if not isinstance(g, int) else f.from_int(g) for g in gammas]
    if len(gammas) != level:
        raise DomainError(f"need exactly {level} gamma parameters")
    if any(f.is_zero(g) for g in gammas):
        raise DomainError("gamma parameters must be nonzero")
    dim = 2**level
    mul, _ = _cd_tables(level, gammas, f)
    products = {}
    for (i, j), vec in mul.items():
        terms = [(k + 1, c) for k, c in enumerate(vec) if not f.is_zero(c)]
        if terms:
            products[(i + 1, j + 1)] = terms
    unity = [f.one()] + [f.zero()] * (dim - 1)
    labels = [f"u{i}" for i in range(dim)]
    return make_algebra(f, dim, products, unity=unity, labels=labels)


def twist_conjugation(algebra: Algebra, side: str, level: int, gammas,
                      field: Field | None = None) -> Algebra:
    """Replace x*y of a doubling algebra by conj(x)y, x conj(y), or both.

    The twisted products generally lose the unity, so none is declared.
    """
    if side not in ("left", "right", "both"):
        raise DomainError("side must be left, right, or both")
    f = field or algebra.field
    gammas = [g if not isinstance(g, int) else f.from_int(g) for g in gammas]
    _, conj_signs = _cd_tables(level, gammas, f)
    dim = algebra.dim

    def twisted(i, j):
        ci = conj_signs[i - 1]
        cj = conj_signs[j - 1]
        terms = algebra.sc.get((i, j), ())
        factor = f.one()
        if side in ("left", "both"):
            factor = f.mul(factor, ci)
        if side in ("right", "both"):
            factor = f.mul(factor, cj)
        return [(k, f.mul(factor, c)) for k, c in terms]

    products = {}
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            terms = twisted(i, j)
            if terms:
                products[(i, j)] = terms
    return make_algebra(f, dim, products, labels=algebra.labels)


def registry(include_heavy: bool = False) -> dict:
    """Named example algebras for sweeps and the gen subcommand."""
    algs = {
        "z2n1": make_group_algebra_z2n(1),
        "z2n2": make_group_algebra_z2n(2),
        "aflex": make_a_flex(),
        "aalt": make_a_alt(),
        "chain3": make_chain3(),
        "nilpotent3": make_nilpotent3(),
        "nonmix7": make_nonmixing7(),
        "spin1": make_spin_factor(1),
        "spin2": make_spin_factor(2),
        "spin3": make_spin_factor(3),
        "matrix2": make_matrix_algebra(2),
        "hull-aflex": make_unital_hull(make_a_flex()),
        "hull-aalt": make_unital_hull(make_a_alt()),
    }
    if include_heavy:
        algs["z2n3"] = make_group_algebra_z2n(3)
        algs["matrix4"] = make_matrix_algebra(4)
    return algs
