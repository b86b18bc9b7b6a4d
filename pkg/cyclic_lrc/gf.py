"""
Finite fields GF(p^m) and univariate polynomials over them.

Field arithmetic and polynomial arithmetic are delegated to galois; this module
fixes the canonical choice of modulus and primitive element so that every
artifact built on top of it is reproducible.
"""

import logging
from functools import lru_cache
from typing import Sequence, Union

import galois
import numpy as np

from cyclic_lrc.errors import FieldError, FieldMismatchError, ZeroInverseError

logger = logging.getLogger(__name__)

FIELD_ORDER_CAP = 2 ** 20

# Elements are 0-dimensional galois field arrays, polynomials are galois.Poly
FieldElement = galois.FieldArray
Poly = galois.Poly


class FiniteField:
    """
    The field GF(p^m) in polynomial basis.

    The modulus is the smallest monic irreducible polynomial of degree m over GF(p) and the
    primitive element is the smallest element of multiplicative order q - 1. "Smallest" is by the
    integer representation of the coefficient vector, the highest degree coefficient being the
    most significant digit. For m = 1 the modulus is x and elements are the residues mod p.
    """

    def __init__(self, p: int, m: int):
        if not galois.is_prime(p):
            raise FieldError(f'characteristic {p} is not prime')
        if m < 1:
            raise FieldError(f'extension degree must be positive, got {m}')
        if p ** m > FIELD_ORDER_CAP:
            raise FieldError(f'field order {p}^{m} exceeds the cap of {FIELD_ORDER_CAP}')

        self.p = p
        self.m = m
        self.order = p ** m
        prime_field = galois.GF(p)
        if m == 1:
            self.modulus = galois.Poly([1, 0], field=prime_field)
            self.gf = prime_field
        else:
            self.modulus = galois.irreducible_poly(p, m, method='min')
            self.gf = galois.GF(self.order, irreducible_poly=self.modulus)
        self.primitive_element = self.gf.primitive_element
        logger.debug('Built GF(%d^%d) with modulus %s and primitive element %s',
                     p, m, self.modulus, int(self.primitive_element))

    def __repr__(self) -> str:
        return f'FiniteField(p={self.p}, m={self.m})'

    @property
    def zero(self) -> FieldElement:
        return self.gf(0)

    @property
    def one(self) -> FieldElement:
        return self.gf(1)

    def modulus_coefficients(self) -> list:
        """
        Returns:
            list: the modulus coefficients over GF(p), lowest degree first
        """
        return [int(c) for c in self.modulus.coeffs[::-1]]

    def element(self, value: Union[int, Sequence[int]]) -> FieldElement:
        """
        Builds a field element.
        Args:
            value: either the integer representation or a coefficient vector
                over GF(p), lowest degree first
        Returns:
            FieldElement: the element
        """
        if isinstance(value, (int, np.integer)):
            if not 0 <= value < self.order:
                raise FieldError(f'{value} is not an element of GF({self.order})')
            return self.gf(int(value))
        coefficients = list(value)
        if len(coefficients) > self.m or any(not 0 <= c < self.p for c in coefficients):
            raise FieldError(f'{coefficients} is not a coefficient vector over GF({self.p}) '
                             f'of length {self.m}')
        return self.gf(sum(int(c) * self.p ** i for i, c in enumerate(coefficients)))

    def coefficients(self, a: FieldElement) -> list:
        """
        Returns the polynomial basis coefficients of an element, lowest degree first.
        Args:
            a: the element
        Returns:
            list: m integers in [0, p - 1]
        """
        self.check(a)
        value = int(a)
        return [(value // self.p ** i) % self.p for i in range(self.m)]

    def check(self, *elements) -> None:
        """
        Raises FieldMismatchError unless every argument is an array over this field.
        """
        for a in elements:
            if type(a) is not self.gf:  # pylint: disable=unidiomatic-typecheck
                raise FieldMismatchError(f'{a!r} is not an element of GF({self.order})')

    def nth_root_of_unity(self, n: int) -> FieldElement:
        """
        Returns alpha = gamma^((q - 1) / n), an element of multiplicative order exactly n.
        """
        if n < 1 or (self.order - 1) % n:
            raise FieldError(f'{n} does not divide q - 1 = {self.order - 1}')
        return self.primitive_element ** ((self.order - 1) // n)


@lru_cache(maxsize=None)
def field_new(p: int, m: int) -> FiniteField:
    """
    Returns the canonical field GF(p^m). Fields are immutable and cached.
    """
    return FiniteField(p, m)


def field_for_order(q: int) -> FiniteField:
    """
    Returns the canonical field of order q.
    Args:
        q: a prime power
    Returns:
        FiniteField: GF(q)
    """
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f'{q} is not a prime power')
    primes, exponents = galois.factors(q)
    return field_new(int(primes[0]), int(exponents[0]))


def find_field_for_length(n: int) -> FiniteField:
    """
    Returns the field of smallest order q with q = 1 mod n, so that GF(q) holds the n-th
    roots of unity.
    """
    if n < 2:
        raise FieldError(f'code length must be at least 2, got {n}')
    for q in range(n + 1, FIELD_ORDER_CAP + 1, n):
        if galois.is_prime_power(q):
            logger.debug('Length %d lives in GF(%d)', n, q)
            return field_for_order(q)
    raise FieldError(f'no field of order at most {FIELD_ORDER_CAP} contains {n}-th roots of unity')


def nth_root_of_unity(field: FiniteField, n: int) -> FieldElement:
    return field.nth_root_of_unity(n)


def _same_field(a, b) -> None:
    if type(a) is not type(b):  # pylint: disable=unidiomatic-typecheck
        raise FieldMismatchError(f'operands over different fields: {type(a).name} and {type(b).name}')


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    if a == 0:
        raise ZeroInverseError('zero has no multiplicative inverse')
    return np.reciprocal(a)


def power(a: FieldElement, exponent: int) -> FieldElement:
    """
    Raises an element to an integer power. Negative exponents invert first.
    """
    if exponent < 0:
        return inv(a) ** (-exponent)
    return a ** exponent


def multiplicative_order(a: FieldElement) -> int:
    if a == 0:
        raise FieldError('zero has no multiplicative order')
    return int(a.multiplicative_order())


# Polynomials

def poly(coefficients: Sequence, field: FiniteField) -> Poly:
    """
    Builds a polynomial from coefficients given lowest degree first.
    Args:
        coefficients: field elements or their integer representations
        field: the coefficient field
    Returns:
        Poly: the polynomial, the zero polynomial for an empty list
    """
    if len(coefficients) == 0:
        return galois.Poly.Zero(field.gf)
    values = [int(c) for c in coefficients]
    return galois.Poly(values[::-1], field=field.gf)


def poly_coefficients(f: Poly, length: int = None) -> list:
    """
    Returns the integer coefficients of f, lowest degree first. The zero polynomial has no
    coefficients unless padding to `length` is requested.
    """
    values = [] if f == 0 else [int(c) for c in f.coeffs[::-1]]
    if length is not None:
        if len(values) > length:
            raise FieldError(f'polynomial of degree {f.degree} does not fit in {length} coefficients')
        values += [0] * (length - len(values))
    return values


def _same_ring(f: Poly, g: Poly) -> None:
    if f.field is not g.field:
        raise FieldMismatchError(f'polynomials over different fields: {f.field.name} and {g.field.name}')


def poly_mul(f: Poly, g: Poly) -> Poly:
    _same_ring(f, g)
    return f * g


def poly_mod(f: Poly, g: Poly) -> Poly:
    _same_ring(f, g)
    if g == 0:
        raise ZeroDivisionError('polynomial reduction modulo zero')
    return f % g


def poly_eval(f: Poly, beta: FieldElement) -> FieldElement:
    if type(beta) is not f.field:  # pylint: disable=unidiomatic-typecheck
        raise FieldMismatchError(f'cannot evaluate a polynomial over {f.field.name} at {beta!r}')
    return f(beta)


def x_n_minus_one(n: int, field: FiniteField) -> Poly:
    """
    Returns x^n - 1 over the field.
    """
    return galois.Poly.Degrees([n, 0], coeffs=[1, -1 % field.p], field=field.gf)
