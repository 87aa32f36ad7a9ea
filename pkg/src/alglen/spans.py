"""Span engine: Lin_k(S) ladders, difference sequences, and exact lengths.

The engine grows the span of words level by level using products of stored
new-part representatives instead of raw words; bilinearity makes the two
spans identical while the cost stays polynomial in the rank.  Two
termination rules are supported:

* general mode stops once the current span V satisfies V*V <= V (then no
  longer word can leave it);
* mixing mode stops at the first zero difference, which is only valid for
  algebras where a mixing or sliding identity has been verified, and is
  enforced by callers.
"""

from __future__ import annotations

import bisect
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from .algebra import Algebra, Element
from .errors import DimensionMismatch, NotFiniteField, ResourceLimit
from .field import Field, PrimeField
from .words import GeneratorSet, generator_set

DEFAULT_MAX_LEVEL = 64
DEFAULT_SUBSPACE_BUDGET = 2_000_000


class SpanBasis:
    """Reduced row-echelon basis of a subspace, grown by insertion."""

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        """Residue of vec modulo the current row space."""
        if len(vec) != self.dim:
            raise DimensionMismatch("vector length does not match basis dimension")
        f = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not f.is_zero(c):
                v = [f.sub(x, f.mul(c, r)) for x, r in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.reduce(vec))

    def insert(self, vec):
        """Insert vec; returns (added, normalized residue or None)."""
        f = self.field
        v = self.reduce(vec)
        lead = next((i for i, x in enumerate(v) if not f.is_zero(x)), None)
        if lead is None:
            return False, None
        inv = f.inv(v[lead])
        v = [f.mul(inv, x) for x in v]
        for idx, row in enumerate(self.rows):
            c = row[lead]
            if not f.is_zero(c):
                self.rows[idx] = [f.sub(x, f.mul(c, y)) for x, y in zip(row, v)]
        pos = bisect.bisect_left(self.pivots, lead)
        self.rows.insert(pos, v)
        self.pivots.insert(pos, lead)
        return True, tuple(v)

    def row_tuples(self) -> tuple:
        return tuple(tuple(r) for r in self.rows)

    def copy(self) -> "SpanBasis":
        c = SpanBasis(self.field, self.dim)
        c.rows = [list(r) for r in self.rows]
        c.pivots = list(self.pivots)
        return c

    def __eq__(self, other):
        return isinstance(other, SpanBasis) and self.field == other.field \
            and self.dim == other.dim and self.row_tuples() == other.row_tuples()

    def __repr__(self):
        return f"SpanBasis(rank={self.rank}, dim={self.dim})"


@dataclass
class DiffSequence:
    """Dimension growth record of the span ladder of one generator set."""

    d: tuple
    length_of_set: int
    stabilized_by: str
    generating: bool
    total_rank: int
    dim: int

    def as_dict(self):
        return {
            "d": list(self.d),
            "length_of_set": self.length_of_set,
            "stabilized_by": self.stabilized_by,
            "generating": self.generating,
            "total_rank": self.total_rank,
            "dim": self.dim,
        }


class SpanLadder:
    """Incremental Lin_k(S) computation with per-level new-part bases."""

    def __init__(self, algebra: Algebra, gens):
        self.algebra = algebra
        self.field = algebra.field
        elements = gens.elements if isinstance(gens, GeneratorSet) else tuple(gens)
        self.gens = elements
        self.basis = SpanBasis(self.field, algebra.dim)
        self.level_reps: list[list] = []  # level_reps[k] spans Lin_k/Lin_{k-1}
        self.d: list[int] = []
        self._spanning: list = []  # append-only spanning set of the current span
        self._pending: list = []  # (u, v) spanning pairs not yet verified closed
        self._paired = 0  # prefix of _spanning already paired up
        # level 0
        d0 = 0
        if algebra.unity is not None:
            added, _ = self.basis.insert(algebra.unity)
            if added:
                self._spanning.append(tuple(algebra.unity))
                d0 = 1
        self.d.append(d0)
        self.level_reps.append(list(self._spanning))

    @property
    def level(self) -> int:
        return len(self.d) - 1

    def _record(self, new_reps):
        self.d.append(len(new_reps))
        self.level_reps.append(new_reps)
        self._spanning.extend(new_reps)

    def step_general(self) -> int:
        """Advance one level using all split products of new-part bases."""
        m = self.level + 1
        new_reps = []
        if m == 1:
            candidates = self.gens
        else:
            candidates = (
                self.algebra.multiply(u, v)
                for i in range(1, m)
                for u in self.level_reps[i]
                for v in self.level_reps[m - i]
            )
        for vec in candidates:
            added, res = self.basis.insert(vec)
            if added:
                new_reps.append(res)
        self._record(new_reps)
        return len(new_reps)

    def step_mixing(self) -> int:
        """Advance one level using only single-letter products on both sides."""
        m = self.level + 1
        new_reps = []
        if m == 1:
            candidates = list(self.gens)
        else:
            prev = self.level_reps[m - 1]
            candidates = [self.algebra.multiply(u, s) for u in prev for s in self.gens]
            candidates += [self.algebra.multiply(s, u) for u in prev for s in self.gens]
        for vec in candidates:
            added, res = self.basis.insert(vec)
            if added:
                new_reps.append(res)
        self._record(new_reps)
        return len(new_reps)

    def is_closed(self) -> bool:
        """True when the span absorbs products of its own spanning set.

        Only sound as a stabilization certificate once the generators are
        inside the span, i.e. from level 1 on (or at level 0 when every
        generator already reduces to zero).
        """
        if self.level == 0 and any(not self.basis.contains(s) for s in self.gens):
            return False
        n = len(self._spanning)
        if n > self._paired:
            for i in range(n):
                for j in range(n):
                    if i >= self._paired or j >= self._paired:
                        self._pending.append((self._spanning[i], self._spanning[j]))
            self._paired = n
        still = []
        for u, v in self._pending:
            if not self.basis.contains(self.algebra.multiply(u, v)):
                still.append((u, v))
        self._pending = still
        return not still

    def lin_basis(self) -> SpanBasis:
        return self.basis


def solve_coordinates(field: Field, vectors, target):
    """Unique coefficients of target in the listed vectors, with a status.

    Returns ("ok", coeffs) when the vectors are independent and the target
    lies in their span, ("dependent", None) when the list is dependent, and
    ("outside", None) otherwise.
    """
    t = len(vectors)
    dim = len(target)
    basis = SpanBasis(field, t + 1)
    for i in range(dim):
        basis.insert([vec[i] for vec in vectors] + [target[i]])
    pivots = set(basis.pivots)
    if len(pivots & set(range(t))) != t:
        return "dependent", None
    if t in pivots:
        return "outside", None
    coeffs = [field.zero()] * t
    for row, p in zip(basis.rows, basis.pivots):
        coeffs[p] = row[t]
    return "ok", coeffs


def span_ladder_up_to(algebra: Algebra, gens, k: int, mode: str = "general") -> SpanLadder:
    """Ladder advanced to level k (or to stabilization, whichever is first)."""
    ladder = SpanLadder(algebra, gens)
    step = ladder.step_mixing if mode == "mixing" else ladder.step_general
    for _ in range(k):
        if mode == "general" and ladder.is_closed():
            break
        step()
    return ladder


def diff_sequence(algebra: Algebra, gens, mode: str = "general",
                  max_level: int | None = None) -> DiffSequence:
    """Full difference sequence of one generator set, until stabilization.

    Mixing mode stops at the first zero difference and must only be used
    after a mixing or sliding verdict; general mode stops on the closure
    criterion, which is sound for every algebra.
    """
    if mode not in ("general", "mixing"):
        raise ValueError(f"unknown mode {mode!r}")
    ladder = SpanLadder(algebra, gens)
    stabilized = None
    if mode == "mixing":
        cap = algebra.dim + 2
        while True:
            if ladder.level >= cap:
                raise ResourceLimit(
                    "mixing-mode run exceeded dim+2 levels; the mixing "
                    "hypothesis is violated or the engine is inconsistent")
            grew = ladder.step_mixing()
            if ladder.level >= 1 and grew == 0:
                stabilized = "mixing-criterion"
                break
    else:
        cap = max_level if max_level is not None else max(DEFAULT_MAX_LEVEL, algebra.dim + 2)
        while True:
            if ladder.is_closed():
                stabilized = "closure-criterion"
                break
            if ladder.level >= cap:
                raise ResourceLimit(f"general-mode run exceeded {cap} levels")
            ladder.step_general()

    d = list(ladder.d)
    while len(d) > 1 and d[-1] == 0:
        d.pop()
    length = max((k for k, dk in enumerate(d) if dk != 0), default=0)
    total = sum(d)
    assert total == ladder.basis.rank and total <= algebra.dim
    _check_first_difference(algebra, ladder.gens, d)
    return DiffSequence(
        d=tuple(d),
        length_of_set=length,
        stabilized_by=stabilized,
        generating=(total == algebra.dim),
        total_rank=total,
        dim=algebra.dim,
    )


def _check_first_difference(algebra, elements, d):
    # d_1 must equal rank(S) resp. rank(S + {e}) - 1; recomputed independently
    probe = SpanBasis(algebra.field, algebra.dim)
    if algebra.unity is not None:
        probe.insert(algebra.unity)
    base = probe.rank
    for s in elements:
        probe.insert(s)
    d1 = d[1] if len(d) > 1 else 0
    assert d1 == probe.rank - base, "first difference disagrees with rank of S"


def length_of_set(algebra: Algebra, gens, mode: str = "general",
                  max_level: int | None = None) -> int:
    return diff_sequence(algebra, gens, mode=mode, max_level=max_level).length_of_set


# -- subspace enumeration over prime fields --------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspace_rows(p: int, n: int):
    """Canonical RREF representative rows of every subspace of GF(p)^n.

    Rank ascending, pivot columns lexicographic, then free entries counted
    lexicographically in row-major order.  Rows are tuples of ints.
    """
    for r in range(n + 1):
        if r == 0:
            yield ()
            continue
        for pivots in combinations(range(n), r):
            free = [(i, j) for i in range(r) for j in range(pivots[i] + 1, n)
                    if j not in pivots]
            for values in product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(r)]
                for i in range(r):
                    rows[i][pivots[i]] = 1
                for (i, j), val in zip(free, values):
                    rows[i][j] = val
                yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(field: Field, n: int, must_contain: Element | None = None,
                        budget: int | None = DEFAULT_SUBSPACE_BUDGET):
    """Every subspace of GF(p)^n exactly once, as SpanBasis objects."""
    if not isinstance(field, PrimeField):
        raise NotFiniteField("subspace enumeration needs a prime field")
    p = field.p
    if budget is not None and count_subspaces(n, p) > budget:
        raise ResourceLimit(f"{count_subspaces(n, p)} subspaces exceed budget {budget}")
    target = tuple(must_contain) if must_contain is not None else None
    for rows in enumerate_subspace_rows(p, n):
        basis = SpanBasis(field, n)
        for row in rows:
            basis.insert(list(row))
        if target is not None and not basis.contains(target):
            continue
        yield basis


# -- exact algebra length over prime fields ---------------------------------


def _generic_subspace_length(algebra, rows, mode):
    gens = [algebra.element(r) for r in rows]
    seq = diff_sequence(algebra, gens, mode=mode)
    return seq.length_of_set, seq.generating


def exact_algebra_length(algebra: Algebra, mode: str = "general",
                         budget: int | None = DEFAULT_SUBSPACE_BUDGET,
                         threads: int = 1, use_kernel: bool | None = None):
    """Maximum of l(S) over generating sets, with an achieving witness.

    The maximum over all generating sets equals the maximum over RREF bases
    of subspaces (containing the unity when there is one), because the span
    ladder of S depends on S only through Lin_1(S).  Prime fields only.
    """
    field = algebra.field
    if not isinstance(field, PrimeField):
        raise NotFiniteField("exact length needs a prime field")
    p, n = field.p, algebra.dim
    if budget is not None and count_subspaces(n, p) > budget:
        raise ResourceLimit(f"{count_subspaces(n, p)} subspaces exceed budget {budget}")

    unity = tuple(algebra.unity) if algebra.unity is not None else None
    check = SpanBasis(field, n)
    candidates = []
    for rows in enumerate_subspace_rows(p, n):
        if unity is not None:
            check.rows = [list(r) for r in rows]
            check.pivots = [next(j for j, x in enumerate(r) if x) for r in rows]
            if not check.contains(unity):
                continue
        candidates.append(rows)

    from . import kernels
    if use_kernel is None:
        use_kernel = kernels.kernel_ok(algebra)
    if use_kernel:
        results = kernels.batch_subspace_lengths(algebra, candidates, mode, threads)
    else:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(
                    lambda rows: _generic_subspace_length(algebra, rows, mode),
                    candidates, chunksize=max(1, len(candidates) // (threads * 4))))
        else:
            results = [_generic_subspace_length(algebra, rows, mode) for rows in candidates]

    best = None
    for idx, (length, generating) in enumerate(results):
        if generating and (best is None or length > best[0]):
            best = (length, idx)
    assert best is not None  # the whole space always generates
    length, idx = best
    rows = candidates[idx]
    witness = generator_set([algebra.element(r) for r in rows])
    return length, witness
