"""Exact polynomial arithmetic over the rationals.

Two representations live here:

* ``MultiPoly`` -- a sparse multivariate polynomial: a map from exponent
  tuples (one entry per variable) to ``Fraction`` coefficients.  Zero
  coefficients are never stored, so structural equality is polynomial
  equality.
* ``UniPoly`` -- a dense univariate polynomial stored leading coefficient
  first, ``(a_0, a_1, ..., a_n)`` meaning ``a_0 t^n + ... + a_n`` with
  ``a_0 != 0`` (the zero polynomial is the empty tuple).

Everything is immutable after construction and all operations are pure, so
values can be shared freely across threads.

Monomials are compared degree first, then lexicographically on the exponent
sequence ("graded lex"): m > m' iff deg m > deg m', or the degrees agree and
the first nonzero entry of (m - m') is positive.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


class DimensionMismatch(ValueError):
    """Operands or points do not agree on the number of variables."""


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def monomial_key(exponents: Exponents) -> tuple[int, Exponents]:
    """Sort key realizing the graded-lex order (bigger key = bigger monomial)."""
    return (sum(exponents), exponents)


class MultiPoly:
    """Sparse exact multivariate polynomial in variables x1..xn."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, Scalar] | None = None):
        if n < 0:
            raise ValueError("variable count must be >= 0")
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise DimensionMismatch(
                        f"monomial {exps} has {len(exps)} exponents, expected {n}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in monomial {exps}")
                c = _as_fraction(coeff)
                if c != 0:
                    clean[exps] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "MultiPoly":
        return cls(n, {(0,) * n: _as_fraction(value)})

    @classmethod
    def variable(cls, n: int, index: int) -> "MultiPoly":
        """The polynomial x_index (1-based index)."""
        if not 1 <= index <= n:
            raise DimensionMismatch(f"variable index {index} out of range 1..{n}")
        exps = [0] * n
        exps[index - 1] = 1
        return cls(n, {tuple(exps): Fraction(1)})

    # -- basic structure ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def lex_leading(self) -> tuple[Exponents, Fraction]:
        """Largest term under the graded-lex order; raises on the zero polynomial."""
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        exps = max(self.terms, key=monomial_key)
        return exps, self.terms[exps]

    # -- arithmetic ----------------------------------------------------

    def _check_same_n(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise DimensionMismatch(
                f"variable counts differ: {self.n} vs {other.n}"
            )

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_n(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return MultiPoly.zero(self.n)
            return MultiPoly(self.n, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_n(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = MultiPoly.constant(self.n, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        vals = [_as_fraction(v) for v in point]
        if len(vals) != self.n:
            raise DimensionMismatch(
                f"point has {len(vals)} coordinates, expected {self.n}"
            )
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def evaluate_float(self, point: Sequence[float]) -> float:
        """Fast inexact value at a float point (search plumbing)."""
        if len(point) != self.n:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, expected {self.n}"
            )
        total = 0.0
        for exps, coeff in self.terms.items():
            term = float(coeff)
            for v, e in zip(point, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose: replace variable x_i by images[i-1] (all in m variables)."""
        if len(images) != self.n:
            raise DimensionMismatch(
                f"{len(images)} images given, expected {self.n}"
            )
        if not images:
            return MultiPoly(0, dict(self.terms))
        m = images[0].n
        for img in images:
            if img.n != m:
                raise DimensionMismatch("images must share one variable count")
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def img_power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        total = MultiPoly.zero(m)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(m, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * img_power(i, e)
            total = total + term
        return total

    def permute_adjacent(self, i: int) -> "MultiPoly":
        """Swap variables x_i and x_{i+1} (1-based); used by symmetry checks."""
        if not 1 <= i < self.n:
            raise DimensionMismatch(f"no adjacent pair at {i} for n={self.n}")
        j = i - 1
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            e[j], e[j + 1] = e[j + 1], e[j]
            out[tuple(e)] = coeff
        return MultiPoly(self.n, out)

    def max_variable_index(self) -> int:
        """Largest 1-based index of a variable that actually occurs (0 if none)."""
        best = 0
        for exps in self.terms:
            for i in range(self.n - 1, best - 1, -1):
                if exps[i]:
                    best = max(best, i + 1)
                    break
        return best

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {format_poly(self)!r})"


def format_poly(poly: MultiPoly, var: str = "x") -> str:
    """Render a MultiPoly as parseable text, terms in descending graded-lex order.

    Coefficients are exact fractions; the output round-trips through the CLI
    grammar (``3*x1^2*x2 - 1/2*x2 + 4``).
    """
    if poly.is_zero:
        return "0"
    pieces: list[str] = []
    for exps in sorted(poly.terms, key=monomial_key, reverse=True):
        coeff = poly.terms[exps]
        vars_part = "*".join(
            f"{var}{i + 1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exps)
            if e
        )
        mag = abs(coeff)
        if not vars_part:
            body = str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{mag}*{vars_part}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


class UniPoly:
    """Dense exact univariate polynomial, leading coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "UniPoly":
        """Monic polynomial with the given roots (repeats allowed)."""
        f = cls((1,))
        for r in roots:
            f = f * cls((1, -_as_fraction(r)))
        return f

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return None if not self.coeffs else len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        lead = self.coeffs[0]
        if lead == 1:
            return self
        return UniPoly(c / lead for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        pad = len(a) - len(b)
        return UniPoly(
            [a[i] + (b[i - pad] if i >= pad else 0) for i in range(len(a))]
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return UniPoly(k * c for k in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Exact polynomial long division: self = q*divisor + r, deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or len(self.coeffs) < len(divisor.coeffs):
            return UniPoly.zero(), self
        rem = list(self.coeffs)
        dlen = len(divisor.coeffs)
        lead = divisor.coeffs[0]
        q = [Fraction(0)] * (len(rem) - dlen + 1)
        for i in range(len(q)):
            factor = rem[i] / lead
            q[i] = factor
            if factor:
                for j, d in enumerate(divisor.coeffs):
                    rem[i + j] -= factor * d
        return UniPoly(q), UniPoly(rem[len(q):])

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[1]

    def derivative(self) -> "UniPoly":
        n = self.degree
        if n is None or n == 0:
            return UniPoly.zero()
        return UniPoly(c * (n - i) for i, c in enumerate(self.coeffs[:-1]))

    def evaluate(self, t: Scalar) -> Fraction:
        v = _as_fraction(t)
        total = Fraction(0)
        for c in self.coeffs:
            total = total * v + c
        return total

    def evaluate_float(self, t: float) -> float:
        total = 0.0
        for c in self.coeffs:
            total = total * t + float(c)
        return total

    def trailing_zero_multiplicity(self) -> int:
        """Multiplicity of the root t = 0 (0 for the zero polynomial too)."""
        count = 0
        for c in reversed(self.coeffs):
            if c != 0:
                break
            count += 1
        return count

    def shift_down(self, m: int) -> "UniPoly":
        """Exact division by t^m; requires an m-fold root at 0."""
        if m == 0:
            return self
        if self.trailing_zero_multiplicity() < m:
            raise ValueError(f"polynomial has no {m}-fold root at t = 0")
        return UniPoly(self.coeffs[: len(self.coeffs) - m])

    def shift_up(self, m: int) -> "UniPoly":
        """Multiply by t^m."""
        if self.is_zero:
            return self
        return UniPoly(self.coeffs + (Fraction(0),) * m)

    def __repr__(self) -> str:
        if self.is_zero:
            return "UniPoly(0)"
        n = len(self.coeffs) - 1
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = n - i
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        return "UniPoly(" + " + ".join(parts) + ")"


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor over the rationals (Euclid)."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()
