"""Exact coefficient arithmetic: the rationals, prime fields, and their
quadratic extensions.

A ``Field`` owns the raw canonical representation of its elements and does
all arithmetic on those raw values (``Fraction`` for the rationals, an int
in ``[0, p)`` for a prime field, a pair of such ints for a quadratic
extension).  Polynomials store raw values directly for speed;
``FieldElement`` is the boxed form used at API boundaries.  Everything here
is immutable and pure, so values can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    InfiniteFieldError,
    MismatchedFieldError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def quadratic_modulus(p: int) -> tuple[int, int]:
    """Coefficients (b, c) of the lexicographically smallest monic
    irreducible quadratic t^2 + b*t + c over F_p.

    A degree-2 polynomial is irreducible iff it has no root, so an
    exhaustive root check is a complete test.
    """
    for b in range(p):
        for c in range(p):
            if all((a * a + b * a + c) % p for a in range(p)):
                return (b, c)
    raise AssertionError(f"no irreducible quadratic over F_{p}")


class Field:
    """Abstract field; subclasses implement arithmetic on raw values."""

    char: int
    size: int | None  # None for infinite fields

    # subclasses set these raw constants
    zero_raw = None
    one_raw = None

    def element(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.zero_raw)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.one_raw)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero_raw

    def power(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one_raw
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def elements(self):
        """Iterate every element exactly once, in canonical order."""
        raise InfiniteFieldError(f"{self} is infinite")

    # -- hooks -----------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError


class RationalField(Field):
    char = 0
    size = None
    zero_raw = Fraction(0)
    one_raw = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("inverse of 0")
        return 1 / a

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MismatchedFieldError(f"cannot coerce {value.field} into {self}")
            return value.value
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """F_p for a prime p < 2**31; raw values are ints in [0, p)."""

    def __init__(self, p: int):
        if not (2 <= p < 2**31) or not is_prime(p):
            raise ValueError(f"{p} is not a supported prime")
        self.p = p
        self.char = p
        self.size = p
        self.zero_raw = 0
        self.one_raw = 1

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MismatchedFieldError(f"cannot coerce {value.field} into {self}")
            return value.value
        if isinstance(value, bool):
            raise TypeError("bool is not a field value")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZeroError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def elements(self):
        for a in range(self.p):
            yield FieldElement(self, a)

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


class QuadraticField(Field):
    """F_{p^2} = F_p[t] / (t^2 + b*t + c); raw values are pairs (a0, a1)
    standing for a0 + a1*t with a0, a1 in [0, p).
    """

    def __init__(self, p: int, modulus: tuple[int, int] | None = None):
        self.base = PrimeField(p)
        self.p = p
        if modulus is None:
            modulus = quadratic_modulus(p)
        b, c = modulus[0] % p, modulus[1] % p
        if any((a * a + b * a + c) % p == 0 for a in range(p)):
            raise ValueError(f"t^2 + {b}*t + {c} is reducible over F_{p}")
        self.modulus = (b, c)
        self.char = p
        self.size = p * p
        self.zero_raw = (0, 0)
        self.one_raw = (1, 0)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, (0, 1))

    def add(self, a, b):
        p = self.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def mul(self, a, b):
        p = self.p
        mb, mc = self.modulus
        # (a0 + a1 t)(b0 + b1 t) with t^2 = -mb*t - mc
        t2 = a[1] * b[1]
        return ((a[0] * b[0] - mc * t2) % p, (a[0] * b[1] + a[1] * b[0] - mb * t2) % p)

    def neg(self, a):
        p = self.p
        return ((-a[0]) % p, (-a[1]) % p)

    def inv(self, a):
        if a == (0, 0):
            raise DivisionByZeroError("inverse of 0")
        p = self.p
        mb, mc = self.modulus
        # the norm a * conj(a) with conj(a0 + a1 t) = (a0 - a1*b) - a1 t
        norm = (a[0] * a[0] - a[0] * a[1] * mb + a[1] * a[1] * mc) % p
        ninv = pow(norm, p - 2, p)
        return ((a[0] - a[1] * mb) * ninv % p, (-a[1]) * ninv % p)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.value
            if value.field == self.base:
                return (value.value, 0)
            raise MismatchedFieldError(f"cannot coerce {value.field} into {self}")
        if isinstance(value, tuple) and len(value) == 2:
            return (value[0] % self.p, value[1] % self.p)
        if isinstance(value, (int, Fraction)):
            return (self.base.coerce(value), 0)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def elements(self):
        for a1 in range(self.p):
            for a0 in range(self.p):
                yield FieldElement(self, (a0, a1))

    def format(self, a) -> str:
        a0, a1 = a
        if a1 == 0:
            return str(a0)
        tpart = "t" if a1 == 1 else f"{a1}*t"
        if a0 == 0:
            return tpart
        return f"{a0}+{tpart}"

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("Fp2", self.p, self.modulus))

    def __repr__(self):
        return f"F{self.p}^2"


QQ = RationalField()


class FieldElement:
    """Boxed field value; immutable, with exact operator arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce_other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MismatchedFieldError(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce_other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce_other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce_other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce_other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce_other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce_other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.power(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, MismatchedFieldError, DivisionByZeroError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field!r}({self})"


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def enumerate_field(field: Field):
    """Yield every element of a finite field exactly once."""
    return field.elements()


def field_from_name(name: str) -> Field:
    """Resolve a field name as written in problem files: Q, F<p>, F<p>^2."""
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("F"):
        body = name[1:]
        if body.endswith("^2"):
            return QuadraticField(int(body[:-2]))
        return PrimeField(int(body))
    raise ValueError(f"unknown field name {name!r}")


def field_from_flag(text: str) -> Field:
    """Resolve the --field flag syntax: "p" or "p^2" (also accepts Q/F names)."""
    text = text.strip()
    if text and (text[0].isdigit()):
        if text.endswith("^2"):
            return QuadraticField(int(text[:-2]))
        return PrimeField(int(text))
    return field_from_name(text)
