"""
Coeficientes exactos: cuerpos primos F_p y los racionales Q.

Los escalares son elementos de los dominios de sympy (``GF(p)`` y ``QQ``),
de modo que toda la aritmetica densa y polinomial se delega en sympy.
Serializacion: ``Fp:<p>:<residuo>`` y ``Q:<num>/<den>``.
"""

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Union
import re

from sympy import Poly, Symbol, isprime
from sympy.polys.domains import GF, QQ

from mot2.errors import FieldError

# Elemento de GF(p) o de QQ; se trata como valor opaco del dominio.
Scalar = Any

X = Symbol("x")

_FP_RE = re.compile(r"^(?:fp:|f|gf\(?)\s*(\d+)\)?$", re.IGNORECASE)


@dataclass(frozen=True)
class Field:
    """Prime field F_p (p > 0) or the rationals (p == 0)."""

    p: int = 0

    def __post_init__(self):
        if self.p < 0 or (self.p and not isprime(self.p)):
            raise FieldError(f"F_p needs a prime modulus, got p={self.p}")

    # ---------------------------------
    # Construccion
    # ---------------------------------
    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def parse(cls, spec: str) -> "Field":
        raw = str(spec or "").strip()
        if raw.upper() in ("Q", "QQ"):
            return cls.rationals()
        m = _FP_RE.match(raw)
        if not m:
            raise FieldError(f"Field spec invalido: '{raw}'. Usa Fp:<p>, F<p> o Q.")
        return cls.prime(int(m.group(1)))

    @property
    def spec(self) -> str:
        return f"Fp:{self.p}" if self.p else "Q"

    @property
    def is_prime_field(self) -> bool:
        return self.p > 0

    @property
    def characteristic(self) -> int:
        return self.p

    @cached_property
    def domain(self):
        return GF(self.p, symmetric=False) if self.p else QQ

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def __repr__(self) -> str:
        return f"Field({self.spec})"

    # ---------------------------------
    # Escalares
    # ---------------------------------
    def __call__(self, value: Union[int, Fraction, str, Scalar]) -> Scalar:
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, Fraction):
            num = self.domain.convert(value.numerator)
            den = self.domain.convert(value.denominator)
            return self.domain.quo(num, den)
        if isinstance(value, int):
            return self.domain.convert(value)
        return self.domain.convert(value)

    def is_zero(self, x: Scalar) -> bool:
        return x == self.domain.zero

    def is_invertible_integer(self, n: int) -> bool:
        return n != 0 if not self.p else n % self.p != 0

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise FieldError("cannot invert zero")
        return self.domain.quo(self.domain.one, x)

    def residue(self, x: Scalar) -> int:
        return int(self.domain.to_int(x)) % self.p

    def as_fraction(self, x: Scalar) -> Fraction:
        if self.p:
            return Fraction(self.residue(x))
        return Fraction(int(self.domain.numer(x)), int(self.domain.denom(x)))

    def format(self, x: Scalar) -> str:
        if self.p:
            return f"Fp:{self.p}:{self.residue(x)}"
        q = self.as_fraction(x)
        return f"Q:{q.numerator}/{q.denominator}"

    def parse_scalar(self, text: str) -> Scalar:
        field, value = parse_scalar(text)
        if field != self:
            raise FieldError(f"scalar '{text}' does not live in {self.spec}")
        return value

    def elements(self) -> List[Scalar]:
        """All elements of F_p (only meaningful for prime fields)."""
        if not self.p:
            raise FieldError("Q has no finite element list")
        return [self.domain.convert(i) for i in range(self.p)]

    # ---------------------------------
    # Polinomios (sympy Poly sobre el dominio)
    # ---------------------------------
    def poly(self, coeffs_high_to_low: Sequence[Scalar]) -> Poly:
        dom = self.domain
        return Poly([dom.to_sympy(c) for c in coeffs_high_to_low] or [0], X, domain=dom)

    def poly_coeffs(self, f: Poly) -> List[Scalar]:
        """Coefficients of ``f`` as domain elements, low degree first."""
        dom = self.domain
        return [dom.from_sympy(c) for c in reversed(f.all_coeffs())]


def parse_scalar(text: str):
    raw = str(text).strip()
    if raw.startswith("Fp:"):
        parts = raw.split(":")
        if len(parts) != 3:
            raise FieldError(f"bad F_p scalar '{raw}'")
        field = Field.prime(int(parts[1]))
        return field, field.domain.convert(int(parts[2]) % field.p)
    if raw.startswith("Q:"):
        body = raw[2:]
        num, _, den = body.partition("/")
        try:
            q = Fraction(int(num), int(den or "1"))
        except (ValueError, ZeroDivisionError):
            raise FieldError(f"bad rational scalar '{raw}'")
        field = Field.rationals()
        return field, field(q)
    raise FieldError(f"unknown scalar tag in '{raw}'")


def format_scalars(field: Field, values: Iterable[Scalar]) -> List[str]:
    return [field.format(v) for v in values]
