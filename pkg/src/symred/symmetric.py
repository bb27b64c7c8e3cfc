"""Symmetric polynomials and their elementary-symmetric coordinates.

Provides the two classical generator families (power sums ``p_k`` and
elementary symmetric polynomials ``e_k``), the Newton-identity conversions
between them, and the constructive rewrite of a symmetric polynomial F as a
polynomial G in e_1..e_n.  The rewrite repeatedly cancels the graded-lex
leading term a*x^gamma of the residual against the product
``a * e_1^(g1-g2) * e_2^(g2-g3) * ... * e_n^(gn)``, which has exactly that
leading term, so the residual's leading monomial strictly decreases and the
loop terminates.

A polynomial G obtained this way from an F of total degree d satisfies:

* every monomial has weighted degree <= d, where z_i carries weight i;
* no variable z_j with j > min(n, d) occurs;
* variables z_i with i > floor(d/2) occur at most linearly, and no two of
  them (counted with multiplicity) share a monomial.

The last two facts make G split as ``G = G1(z_1..z_k) + sum_i tail_i * z_i``
with k = floor(d/2) and the sum over i > k, where tail_i uses only
z_1..z_{d-i}.  ``structural_split`` computes that split.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .poly import MultiPoly, monomial_key

E_FROM_P = "e-from-p"
P_FROM_E = "p-from-e"


class NotSymmetricError(ValueError):
    """Input polynomial is not invariant under coordinate permutations."""


class InternalInvariantError(RuntimeError):
    """A structural invariant the algorithms guarantee was violated."""


def is_symmetric(poly: MultiPoly) -> bool:
    """True iff the polynomial is invariant under all coordinate permutations.

    Checked on the n-1 adjacent transpositions, which generate the full
    permutation group.
    """
    for i in range(1, poly.n):
        if poly.permute_adjacent(i).terms != poly.terms:
            return False
    return True


def elementary_symmetric(k: int, n: int) -> MultiPoly:
    """The k-th elementary symmetric polynomial in n variables."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    terms = {}
    for combo in itertools.combinations(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = Fraction(1)
    return MultiPoly(n, terms)


def power_sum(k: int, n: int) -> MultiPoly:
    """The k-th power sum x1^k + ... + xn^k."""
    if k < 1:
        raise ValueError(f"power sum index must be >= 1, got {k}")
    terms = {}
    for i in range(n):
        exps = [0] * n
        exps[i] = k
        terms[tuple(exps)] = Fraction(1)
    return MultiPoly(n, terms)


RingElement = Union[Fraction, int, MultiPoly]


def newton_convert(
    direction: str, values: Sequence[RingElement], up_to: int
) -> list[RingElement]:
    """Convert between the families e_1..e_r and p_1..p_r via Newton's identities.

    The identity ``k(-1)^k e_k + sum_{i=1..k} (-1)^(i+k) p_i e_{k-i} = 0``
    is solved for its highest-index unknown.  Inputs may be exact rationals
    or symbolic MultiPoly values; the output matches.

    For ``p-from-e`` the given sequence is e_1..e_n and any e_j beyond it is
    taken to be zero, which is exactly the recurrence for power sums past the
    variable count.  For ``e-from-p`` all of p_1..p_up_to must be supplied.
    """
    if up_to < 1:
        raise ValueError("up_to must be >= 1")
    vals = list(values)
    if not vals:
        raise ValueError("no input values given")
    if isinstance(vals[0], MultiPoly):
        ring_zero: RingElement = MultiPoly.zero(vals[0].n)
        ring_one: RingElement = MultiPoly.constant(vals[0].n, 1)
    else:
        vals = [Fraction(v) for v in vals]
        ring_zero = Fraction(0)
        ring_one = Fraction(1)

    def given(seq, j):
        return seq[j - 1] if 1 <= j <= len(seq) else ring_zero

    if direction == P_FROM_E:
        p: list[RingElement] = []
        for k in range(1, up_to + 1):
            # p_k = -k(-1)^k e_k - sum_{i=1..k-1} (-1)^(i+k) p_i e_{k-i}
            acc = given(vals, k) * (k if k % 2 == 1 else -k)
            for i in range(1, k):
                sign = -1 if (i + k) % 2 == 0 else 1
                acc = acc + p[i - 1] * given(vals, k - i) * sign
            p.append(acc)
        return p
    if direction == E_FROM_P:
        if len(vals) < up_to:
            raise ValueError(
                f"e-from-p needs p_1..p_{up_to}, got only {len(vals)} values"
            )
        e: list[RingElement] = []
        for k in range(1, up_to + 1):
            # e_k = -(1/k) sum_{i=1..k} (-1)^i p_i e_{k-i}, with e_0 = 1
            acc = ring_zero
            for i in range(1, k + 1):
                e_prev = ring_one if i == k else e[k - i - 1]
                term = vals[i - 1] * e_prev
                acc = acc + (term * (-1 if i % 2 == 1 else 1))
            e.append(acc * Fraction(1, k))
        return e
    raise ValueError(f"direction must be {E_FROM_P!r} or {P_FROM_E!r}")


@dataclass(frozen=True)
class GPoly:
    """A symmetric polynomial rewritten in elementary-symmetric coordinates.

    ``inner`` lives in variables z_1..z_n standing for e_1..e_n;
    ``source_degree`` is the total degree of the original polynomial, which
    bounds the weighted degree (weight of z_i is i) of every monomial.
    """

    inner: MultiPoly
    source_degree: int
    n: int

    def check_structure(self) -> None:
        """Raise InternalInvariantError if a structural guarantee fails."""
        d = self.source_degree
        half = d // 2
        for exps in self.inner.terms:
            weight = sum((i + 1) * e for i, e in enumerate(exps))
            if weight > d:
                raise InternalInvariantError(
                    f"monomial {exps} has weighted degree {weight} > {d}"
                )
            heavy = sum(e for i, e in enumerate(exps) if i + 1 > half)
            if heavy > 1:
                raise InternalInvariantError(
                    f"monomial {exps} repeats variables above index {half}"
                )
            top = self.inner.max_variable_index()
            if top > min(self.n, d):
                raise InternalInvariantError(
                    f"variable z_{top} exceeds min(n, d) = {min(self.n, d)}"
                )

    def expand(self) -> MultiPoly:
        """Substitute e_1..e_n back in, recovering the original polynomial."""
        images = [elementary_symmetric(k, self.n) for k in range(1, self.n + 1)]
        return self.inner.substitute(images)


def decompose_to_elementary(poly: MultiPoly) -> GPoly:
    """Rewrite a symmetric polynomial exactly as a polynomial in e_1..e_n.

    Fails fast with NotSymmetricError on non-symmetric input; no partial
    output is produced.
    """
    if not is_symmetric(poly):
        raise NotSymmetricError("input is not a symmetric polynomial")
    n = poly.n
    degree = poly.degree
    if degree is None:
        return GPoly(MultiPoly.zero(n), 0, n)

    elem = [elementary_symmetric(k, n) for k in range(1, n + 1)]
    power_cache: dict[tuple[int, int], MultiPoly] = {}

    def elem_power(i: int, e: int) -> MultiPoly:
        key = (i, e)
        if key not in power_cache:
            power_cache[key] = elem[i] ** e
        return power_cache[key]

    step_bound = comb(n + degree, degree)  # monomials of degree <= degree
    residual = poly
    g_terms: dict[tuple[int, ...], Fraction] = {}
    steps = 0
    while not residual.is_zero:
        steps += 1
        if steps > step_bound:
            raise InternalInvariantError(
                f"elementary decomposition exceeded {step_bound} reduction steps"
            )
        gamma, coeff = residual.lex_leading()
        if any(gamma[i] < gamma[i + 1] for i in range(n - 1)):
            raise InternalInvariantError(
                f"leading exponent {gamma} of a symmetric residual not sorted"
            )
        z_exps = tuple(
            gamma[i] - (gamma[i + 1] if i + 1 < n else 0) for i in range(n)
        )
        g_terms[z_exps] = g_terms.get(z_exps, Fraction(0)) + coeff
        subtrahend = MultiPoly.constant(n, coeff)
        for i, e in enumerate(z_exps):
            if e:
                subtrahend = subtrahend * elem_power(i, e)
        residual = residual - subtrahend

    result = GPoly(MultiPoly(n, g_terms), degree, n)
    result.check_structure()
    return result


@dataclass(frozen=True)
class StructuralSplit:
    """Split of G into a low-index head and linear tail in the high variables.

    ``head`` uses only z_1..z_k with k = floor(d/2); each ``tail[i]`` (i > k)
    uses only z_1..z_{d-i}, and ``head + sum_i tail[i] * z_i`` reassembles G
    exactly.
    """

    head: MultiPoly
    tail: dict[int, MultiPoly]
    source_degree: int
    n: int

    def reassemble(self) -> MultiPoly:
        total = self.head
        for i, factor in self.tail.items():
            total = total + factor * MultiPoly.variable(self.n, i)
        return total


def structural_split(g: GPoly) -> StructuralSplit:
    """Separate monomials by whether they touch a variable z_i with i > floor(d/2)."""
    g.check_structure()
    d = g.source_degree
    n = g.n
    half = d // 2
    head: dict[tuple[int, ...], Fraction] = {}
    tail: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for exps, coeff in g.inner.terms.items():
        high = [i + 1 for i, e in enumerate(exps) if e and i + 1 > half]
        if not high:
            head[exps] = coeff
            continue
        if len(high) != 1 or exps[high[0] - 1] != 1:
            raise InternalInvariantError(
                f"monomial {exps} is not linear in the high variables"
            )
        i = high[0]
        reduced = list(exps)
        reduced[i - 1] = 0
        bucket = tail.setdefault(i, {})
        bucket[tuple(reduced)] = coeff
    tail_polys = {i: MultiPoly(n, terms) for i, terms in sorted(tail.items())}
    for i, factor in tail_polys.items():
        if factor.max_variable_index() > d - i:
            raise InternalInvariantError(
                f"tail factor of z_{i} uses a variable above z_{d - i}"
            )
    return StructuralSplit(MultiPoly(n, head), tail_polys, d, n)


def random_symmetric_poly(rng, n: int, max_weighted_degree: int,
                          max_terms: int = 4, coeff_bound: int = 5) -> MultiPoly:
    """Random symmetric polynomial built by expanding a random G through the e_k.

    Deterministic given the rng state; used by tests and the experiment
    drivers to produce inputs that are symmetric by construction.
    """
    images = [elementary_symmetric(k, n) for k in range(1, n + 1)]
    total = MultiPoly.zero(n)
    for _ in range(rng.randint(1, max_terms)):
        coeff = Fraction(rng.randint(1, coeff_bound) * rng.choice((-1, 1)))
        term = MultiPoly.constant(n, coeff)
        budget = rng.randint(1, max_weighted_degree)
        while budget >= 1:
            i = rng.randint(1, min(n, budget))
            term = term * images[i - 1]
            budget -= i
            if rng.random() < 0.4:
                break
        total = total + term
    if total.is_zero:
        total = MultiPoly.constant(n, 1) + power_sum(2, n)
    return total


def sorted_terms(poly: MultiPoly):
    """Terms in descending graded-lex order (display helper)."""
    return sorted(poly.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)
