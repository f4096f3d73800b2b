"""Exact scalar arithmetic: rationals, multivariate polynomials, rational
functions, and prime fields.

Every value is immutable and every operation is exact; there is no floating
point and no tolerance anywhere.  Zero tests decide equality with the
canonical zero element of the field.

Three fields are provided:

* ``QQ`` -- the rationals, represented by :class:`fractions.Fraction`;
* ``FunctionField(names)`` -- quotients of multivariate polynomials over
  the rationals in the named parameters (:class:`RatFunc`);
* ``GF(p)`` -- the prime field of ``p`` elements (:class:`FpElem`).

Monomials are ordered graded-lexicographically over the declared parameter
order.  The canonical form of a :class:`RatFunc` has a primitive integer
denominator whose lowest monomial carries a positive coefficient, so that
e.g. ``(1+alpha)/(1-alpha)`` is already canonical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping


class FieldMismatchError(ValueError):
    """Operands belong to different fields (or incompatible parameter lists)."""


class SpecializationError(ArithmeticError):
    """A denominator vanishes at the requested parameter assignment."""

    def __init__(self, polynomial, assignment=None):
        self.polynomial = polynomial
        self.assignment = dict(assignment or {})
        msg = f"denominator {polynomial} vanishes"
        if assignment:
            msg += f" at {self.assignment}"
        super().__init__(msg)


class ReductionError(ArithmeticError):
    """A rational cannot be reduced modulo p (p divides its denominator)."""


class ScalarSyntaxError(ValueError):
    """A scalar expression string cannot be parsed."""

    def __init__(self, msg: str, position: int):
        self.position = position
        super().__init__(f"{msg} (at column {position + 1})")


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class Poly:
    """A multivariate polynomial over Q with a fixed, ordered variable list.

    Terms are stored as a map from exponent vector to nonzero Fraction
    coefficient; the zero polynomial has an empty term map.  Two polynomials
    compare equal iff they share the variable list and the term maps agree.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], Fraction]):
        vs = tuple(variables)
        self.vars = vs
        clean: dict[tuple[int, ...], Fraction] = {}
        nv = len(vs)
        for exps, coeff in terms.items():
            c = _as_fraction(coeff)
            if not c:
                continue
            e = tuple(exps)
            if len(e) != nv:
                raise ValueError(f"exponent vector {e} does not match {nv} variables")
            clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, variables: Iterable[str], value) -> Poly:
        vs = tuple(variables)
        c = _as_fraction(value)
        if not c:
            return cls(vs, {})
        return cls(vs, {(0,) * len(vs): c})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> Poly:
        vs = tuple(variables)
        idx = vs.index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(vs)))
        return cls(vs, {exps: Fraction(1)})

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value() == 1

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise FieldMismatchError(
                    f"polynomials over {self.vars} and {other.vars} cannot be combined"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.vars, other)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return other == self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __neg__(self) -> Poly:
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return other + self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return (-other) + self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return other * self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division of polynomial by zero")
            return Poly(self.vars, {e: v / c for e, v in self.terms.items()})
        if isinstance(other, Poly):
            return RatFunc(self, other)
        if isinstance(other, RatFunc):
            return RatFunc(self, Poly.constant(self.vars, 1)) / other
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(o, self)

    # -- structure ---------------------------------------------------------

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_grlex_key)

    def trailing_coefficient(self) -> Fraction:
        """Coefficient of the grlex-smallest monomial (0 for the zero poly)."""
        if not self.terms:
            return Fraction(0)
        return self.terms[min(self.terms, key=_grlex_key)]

    def coeff_content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple[Fraction, Poly]:
        """Split as content * primitive part; the primitive part has positive
        trailing coefficient and coprime integer coefficients."""
        if not self.terms:
            return Fraction(0), self
        content = self.coeff_content()
        if self.trailing_coefficient() < 0:
            content = -content
        return content, self / content

    def degree_in(self, name: str) -> int:
        idx = self.vars.index(name)
        if not self.terms:
            return 0
        return max(e[idx] for e in self.terms)

    def used_variables(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    # -- division ----------------------------------------------------------

    def exact_div(self, other: Poly) -> Poly | None:
        """Exact multivariate division; None when ``other`` does not divide."""
        o = self._coerce(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self
        quo = Poly.constant(self.vars, 0)
        lead_o = o.leading_monomial()
        c_o = o.terms[lead_o]
        while rem:
            lead_r = rem.leading_monomial()
            diff = tuple(a - b for a, b in zip(lead_r, lead_o))
            if any(d < 0 for d in diff):
                return None
            t = Poly(self.vars, {diff: rem.terms[lead_r] / c_o})
            quo = quo + t
            rem = rem - t * o
        return quo

    # -- evaluation / substitution ------------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        missing = [v for v in self.used_variables() if v not in assignment]
        if missing:
            raise KeyError(f"assignment misses parameters {missing}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for name, exp in zip(self.vars, e):
                if exp:
                    term *= _as_fraction(assignment[name]) ** exp
            total += term
        return total

    def substitute(self, values: Mapping[str, object], zero):
        """Evaluate with values from an arbitrary commutative ring.

        ``zero`` supplies the additive identity of the target ring; values
        must support + and *.
        """
        total = zero
        for e, c in self.terms.items():
            term = zero + c
            for name, exp in zip(self.vars, e):
                for _ in range(exp):
                    term = term * values[name]
            total = total + term
        return total

    def rename(self, variables: Iterable[str]) -> Poly:
        """Re-embed into another variable list covering every used variable."""
        vs = tuple(variables)
        pos: list[int | None] = []
        used = set(self.used_variables())
        for v in self.vars:
            if v in vs:
                pos.append(vs.index(v))
            elif v in used:
                raise FieldMismatchError(f"variable {v} missing from {vs}")
            else:
                pos.append(None)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            new = [0] * len(vs)
            for p, x in zip(pos, e):
                if p is not None:
                    new[p] = x
            out[tuple(new)] = c
        return Poly(vs, out)

    # -- printing ----------------------------------------------------------

    def _term_str(self, exps: tuple[int, ...], coeff: Fraction, first: bool) -> str:
        factors = []
        for name, e in zip(self.vars, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        c = coeff
        sign = "-" if c < 0 else ("" if first else "+")
        if not first and c < 0:
            sign = "-"
        c = abs(c)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        return sign + body

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # ascending total degree; earlier-declared variables first inside a degree
        order = sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e)))
        parts = []
        for i, e in enumerate(order):
            parts.append(self._term_str(e, self.terms[e], i == 0))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _poly_gcd_univariate(a: Poly, b: Poly) -> Poly:
    """Primitive gcd of two polynomials in (at most) one shared variable."""
    if not a:
        return b.primitive()[1] if b else b
    if not b:
        return a.primitive()[1]
    used = set(a.used_variables()) | set(b.used_variables())
    if len(used) > 1:
        raise ValueError("univariate gcd called on multivariate input")
    if not used:
        return Poly.constant(a.vars, 1)
    name = used.pop()
    idx = a.vars.index(name)

    def to_coeffs(p: Poly) -> list[Fraction]:
        deg = p.degree_in(name)
        cs = [Fraction(0)] * (deg + 1)
        for e, c in p.terms.items():
            cs[e[idx]] += c
        return cs

    def trim(cs):
        while cs and not cs[-1]:
            cs.pop()
        return cs

    def remainder(x, y):
        r = x[:]
        while True:
            trim(r)
            if len(r) < len(y):
                return r
            f = r[-1] / y[-1]
            shift = len(r) - len(y)
            for i, c in enumerate(y):
                r[shift + i] -= f * c
            r.pop()

    x = trim(to_coeffs(a))
    y = trim(to_coeffs(b))
    while y:
        x, y = y, trim(remainder(x, y))
    poly = Poly(
        a.vars,
        {
            tuple(d if i == idx else 0 for i in range(len(a.vars))): c
            for d, c in enumerate(x)
            if c
        },
    )
    return poly.primitive()[1]


def _cancel(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Remove common polynomial factors where this is cheaply decidable."""
    if not num:
        return num, Poly.constant(den.vars, 1)
    # common monomial factor
    def min_exps(p: Poly):
        it = iter(p.terms)
        m = list(next(it))
        for e in it:
            m = [min(a, b) for a, b in zip(m, e)]
        return m

    common = [min(a, b) for a, b in zip(min_exps(num), min_exps(den))]
    if any(common):
        def strip(p: Poly):
            return Poly(
                p.vars,
                {tuple(a - b for a, b in zip(e, common)): c for e, c in p.terms.items()},
            )

        num, den = strip(num), strip(den)
    used = set(num.used_variables()) | set(den.used_variables())
    if len(used) <= 1:
        g = _poly_gcd_univariate(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
    else:
        q = num.exact_div(den)
        if q is not None:
            return q, Poly.constant(num.vars, 1)
        q = den.exact_div(num)
        if q is not None:
            return Poly.constant(num.vars, 1), q
    return num, den


class RatFunc:
    """A quotient of polynomials over a common variable list, kept canonical.

    The denominator is a primitive integer polynomial whose grlex-lowest
    coefficient is positive; common factors are cancelled (fully in the
    univariate case, by monomial/content and exact-division checks in the
    multivariate case).  Equality is decided by cross multiplication, so it
    is exact regardless of cancellation completeness.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.vars != num.vars:
            raise FieldMismatchError("numerator and denominator variable lists differ")
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not num:
            self.num = num
            self.den = Poly.constant(num.vars, 1)
            return
        if not den.is_one():
            num, den = _cancel(num, den)
        content, den = den.primitive()
        self.num = num / content
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_poly(cls, p: Poly) -> RatFunc:
        return cls(p, Poly.constant(p.vars, 1))

    @classmethod
    def constant(cls, variables: Iterable[str], value) -> RatFunc:
        return cls.from_poly(Poly.constant(variables, value))

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    def is_poly(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_poly():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def total_size(self) -> int:
        """Degree measure used for pivot selection."""
        return self.num.total_degree() + self.den.total_degree()

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            if other.vars != self.vars:
                raise FieldMismatchError(
                    f"rational functions over {self.vars} and {other.vars} cannot be combined"
                )
            return other
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise FieldMismatchError(
                    f"operands over {self.vars} and {other.vars} cannot be combined"
                )
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(self.vars, other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, self.den)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        dv = self.den.evaluate(assignment)
        if not dv:
            raise SpecializationError(str(self.den), assignment)
        return self.num.evaluate(assignment) / dv

    def substitute(self, values: Mapping[str, object], zero):
        den = self.den.substitute(values, zero)
        if isinstance(den, (int, Fraction)) and not den:
            raise SpecializationError(str(self.den))
        return self.num.substitute(values, zero) / den

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


class FpElem:
    """An element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> FpElem | None:
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise FieldMismatchError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElem(other, self.p)
        return None

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __neg__(self) -> FpElem:
        return FpElem(-self.value, self.p)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value - o.value, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> FpElem:
        if not self.value:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElem(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> FpElem:
        if n < 0:
            return self.inverse() ** (-n)
        return FpElem(pow(self.value, n, self.p), self.p)

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"FpElem({self.value}, {self.p})"


def reduce_mod_p(x, p: int) -> FpElem:
    """Image of a rational under the canonical map into F_p.

    Raises :class:`ReductionError` when p divides the denominator.
    """
    x = _as_fraction(x)
    if x.denominator % p == 0:
        raise ReductionError(f"{x} has denominator divisible by {p}")
    inv = pow(x.denominator % p, p - 2, p)
    return FpElem(x.numerator * inv, p)


def poly_eval(f, assignment: Mapping[str, Fraction]) -> Fraction:
    """Exact value of a Poly or RatFunc at a rational parameter point."""
    if isinstance(f, (int, Fraction)):
        return _as_fraction(f)
    assignment = {k: _as_fraction(v) for k, v in assignment.items()}
    return f.evaluate(assignment)


# ---------------------------------------------------------------------------
# field handles


class RationalField:
    """The field Q; scalars are fractions.Fraction."""

    names: tuple[str, ...] = ()

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, Poly):
            if value.is_constant():
                return value.constant_value()
            raise FieldMismatchError(f"{value} is not rational")
        if isinstance(value, RatFunc):
            if value.is_constant():
                return value.constant_value()
            raise FieldMismatchError(f"{value} is not rational")
        return _as_fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class FunctionField:
    """Frac(Q[names]) with a fixed parameter order; scalars are RatFunc."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate parameter names in {self.names}")

    @property
    def zero(self):
        return RatFunc.constant(self.names, 0)

    @property
    def one(self):
        return RatFunc.constant(self.names, 1)

    def var(self, name: str) -> RatFunc:
        return RatFunc.from_poly(Poly.variable(self.names, name))

    def coerce(self, value):
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, RatFunc):
            if value.vars == self.names:
                return value
            return RatFunc(value.num.rename(self.names), value.den.rename(self.names))
        if isinstance(value, Poly):
            return RatFunc.from_poly(value.rename(self.names))
        return RatFunc.constant(self.names, _as_fraction(value))

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.names == self.names

    def __hash__(self):
        return hash(("FunctionField", self.names))

    def __repr__(self):
        return f"QQ({','.join(self.names)})"


class PrimeField:
    """F_p; scalars are FpElem."""

    names: tuple[str, ...] = ()

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def zero(self):
        return FpElem(0, self.p)

    @property
    def one(self):
        return FpElem(1, self.p)

    def coerce(self, value):
        if isinstance(value, FpElem):
            if value.p != self.p:
                raise FieldMismatchError(f"mixed moduli {self.p} and {value.p}")
            return value
        if isinstance(value, int):
            return FpElem(value, self.p)
        return reduce_mod_p(_as_fraction(value), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_for(params: Iterable[str]):
    params = tuple(params)
    return FunctionField(params) if params else QQ


def scalar_degree(x) -> int:
    if isinstance(x, RatFunc):
        return x.total_size()
    if isinstance(x, Poly):
        return x.total_degree()
    return 0


def scalar_to_str(x) -> str:
    """Canonical expression string; parse_scalar round-trips it."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return str(x)


# ---------------------------------------------------------------------------
# expression parser
#
# syntax: integers, parameter names, + - * / ^ and parentheses, e.g.
# "(1+alpha)/(1-alpha)" or "-2" or "t2_3^2".

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
_NAME_CONT = _NAME_START | set("0123456789_")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take_name(self) -> str:
        start = self.pos
        self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos] in _NAME_CONT:
            self.pos += 1
        return self.text[start : self.pos]

    def take_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])


def parse_scalar(text: str, field):
    """Parse an arithmetic expression into an element of ``field``."""
    toks = _Tokens(text)

    def atom():
        ch = toks.peek()
        if ch is None:
            raise ScalarSyntaxError("unexpected end of expression", toks.pos)
        if ch == "(":
            toks.pos += 1
            value = expr()
            if toks.peek() != ")":
                raise ScalarSyntaxError("missing closing parenthesis", toks.pos)
            toks.pos += 1
            return value
        if ch.isdigit():
            return field.coerce(toks.take_int())
        if ch in _NAME_START:
            start = toks.pos
            name = toks.take_name()
            if name not in field.names:
                raise ScalarSyntaxError(f"unknown parameter '{name}'", start)
            return field.var(name)
        raise ScalarSyntaxError(f"unexpected character {ch!r}", toks.pos)

    def power():
        base = atom()
        if toks.peek() == "^":
            toks.pos += 1
            ch = toks.peek()
            if ch is None or not ch.isdigit():
                raise ScalarSyntaxError("exponent must be a non-negative integer", toks.pos)
            return base ** toks.take_int()
        return base

    def factor():
        sign = 1
        while toks.peek() in ("+", "-"):
            if toks.peek() == "-":
                sign = -sign
            toks.pos += 1
        value = power()
        return value if sign > 0 else -value

    def term():
        value = factor()
        while toks.peek() in ("*", "/"):
            op = toks.peek()
            toks.pos += 1
            rhs = factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ZeroDivisionError(f"division by zero in expression {text!r}")
                value = value / rhs
        return value

    def expr():
        value = term()
        while toks.peek() in ("+", "-"):
            op = toks.peek()
            toks.pos += 1
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    result = expr()
    if toks.peek() is not None:
        raise ScalarSyntaxError(f"trailing input {toks.text[toks.pos:]!r}", toks.pos)
    return field.coerce(result)
