"""
Defines the construction parameters, defining sets and the cyclic LRC built from them.

A code is given by t pairwise coprime lengths n_i with local distances rho_i. Partition i
contributes the local defining set D_i, the exponents j * n_i + s * b_i + l, and the optional
global set D_g adds further roots to raise the global distance.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Dict, Iterator, Optional, Sequence, Tuple

import galois
import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cyclic_lrc.errors import FieldError, ParameterError
from cyclic_lrc.gf import (FiniteField, Poly, field_for_order, find_field_for_length,
                           poly_coefficients)

logger = logging.getLogger(__name__)


class ConstructionParams(BaseModel):
    """
    The parameters (t, n_i, rho_i, b_i, l, D_g, q) of the construction.
    The offsets b_i default to 1 and the global shift l (`shift`) to 0.
    """
    model_config = ConfigDict(frozen=True)

    n_list: Tuple[int, ...]
    rho: Tuple[int, ...]
    b: Tuple[int, ...] = Field(default=(), validate_default=True)
    shift: int = 0
    dg: Tuple[int, ...] = ()
    q: Optional[int] = None

    @field_validator('b', mode='before')
    @classmethod
    def _default_offsets(cls, value, info):
        if value is None or len(value) == 0:
            return tuple(1 for _ in info.data.get('n_list', ()))
        return value

    @field_validator('dg')
    @classmethod
    def _sorted_exponents(cls, value):
        return tuple(sorted(set(value)))

    @model_validator(mode='after')
    def _check(self):
        t = len(self.n_list)
        if t == 0:
            raise ValueError('at least one local length n_i is required')
        if len(self.rho) != t or len(self.b) != t:
            raise ValueError(f'expected {t} values for rho and b, got {len(self.rho)} and {len(self.b)}')
        for i, (n_i, rho_i, b_i) in enumerate(zip(self.n_list, self.rho, self.b), start=1):
            if n_i < 2:
                raise ValueError(f'n_{i} = {n_i} must be at least 2')
            if not 2 <= rho_i <= n_i:
                raise ValueError(f'rho_{i} = {rho_i} must lie in [2, n_{i} = {n_i}]')
            if gcd(n_i, b_i) != 1:
                raise ValueError(f'b_{i} = {b_i} is not coprime to n_{i} = {n_i}')
        for i in range(t):
            for j in range(i + 1, t):
                if gcd(self.n_list[i], self.n_list[j]) != 1:
                    raise ValueError(f'n_{i + 1} = {self.n_list[i]} and n_{j + 1} = {self.n_list[j]} '
                                     f'are not coprime')
        n = prod(self.n_list)
        if any(not 0 <= e < n for e in self.dg):
            raise ValueError(f'D_g exponents must lie in [0, {n - 1}], got {list(self.dg)}')
        if self.q is not None:
            if self.q < 2 or not galois.is_prime_power(self.q):
                raise ValueError(f'q = {self.q} is not a prime power')
            if (self.q - 1) % n:
                raise ValueError(f'n = {n} does not divide q - 1 = {self.q - 1}')
        return self

    @property
    def t(self) -> int:
        return len(self.n_list)

    @property
    def n(self) -> int:
        return prod(self.n_list)

    @property
    def locality(self) -> Tuple[int, ...]:
        """
        The repair-set localities r_i = n_i - rho_i + 1.
        """
        return tuple(n_i - rho_i + 1 for n_i, rho_i in zip(self.n_list, self.rho))

    def without_dg(self) -> 'ConstructionParams':
        return self.model_copy(update={'dg': ()})


@dataclass(frozen=True)
class DefiningSet:
    """
    A set of exponents e in [0, n - 1], standing for the roots alpha^e.
    """
    n: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(sorted(set(self.exponents)))
        if any(not 0 <= e < self.n for e in exponents):
            raise ParameterError(f'exponents must lie in [0, {self.n - 1}], got {list(exponents)}')
        object.__setattr__(self, 'exponents', exponents)

    @classmethod
    def of(cls, n: int, exponents) -> 'DefiningSet':
        return cls(n=n, exponents=tuple(int(e) % n for e in exponents))

    def __contains__(self, exponent: int) -> bool:
        return exponent % self.n in self.exponents

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def union(self, *others: 'DefiningSet') -> 'DefiningSet':
        exponents = set(self.exponents)
        for other in others:
            if other.n != self.n:
                raise ParameterError(f'cannot merge defining sets mod {self.n} and mod {other.n}')
            exponents.update(other.exponents)
        return DefiningSet(self.n, tuple(exponents))

    def mask(self) -> np.ndarray:
        """
        Returns:
            np.ndarray: boolean array of length n, True at the exponents of the set
        """
        mask = np.zeros(self.n, dtype=bool)
        mask[list(self.exponents)] = True
        return mask

    def is_full(self) -> bool:
        return len(self.exponents) == self.n


def local_defining_set(params: ConstructionParams, i: int) -> DefiningSet:
    """
    Returns D_i = { j * n_i + s * b_i + l mod n : 0 <= j < n / n_i, 0 <= s <= rho_i - 2 }.
    Args:
        params: the construction parameters
        i: partition index, 1 <= i <= t
    Returns:
        DefiningSet: the local defining set
    """
    if not 1 <= i <= params.t:
        raise ParameterError(f'partition index {i} outside [1, {params.t}]')
    n = params.n
    n_i, rho_i, b_i = params.n_list[i - 1], params.rho[i - 1], params.b[i - 1]
    exponents = {(j * n_i + s * b_i + params.shift) % n
                 for j in range(n // n_i)
                 for s in range(rho_i - 1)}
    return DefiningSet(n, tuple(exponents))


def local_union(params: ConstructionParams) -> DefiningSet:
    """
    Returns the union of the local defining sets D_1, ..., D_t.
    """
    local_sets = [local_defining_set(params, i) for i in range(1, params.t + 1)]
    return local_sets[0].union(*local_sets[1:])


def full_defining_set(params: ConstructionParams) -> DefiningSet:
    return local_union(params).union(DefiningSet(params.n, params.dg))


def dg_overlap(params: ConstructionParams) -> Tuple[int, ...]:
    """
    Returns the exponents of D_g already contained in some D_i. They add no root.
    """
    base = local_union(params)
    return tuple(e for e in params.dg if e in base)


def defining_set_sources(params: ConstructionParams) -> Dict[str, DefiningSet]:
    """
    Returns the defining set split by source: D_1, ..., D_t, D_g and their union D.
    """
    sources = {f'D_{i}': local_defining_set(params, i) for i in range(1, params.t + 1)}
    sources['D_g'] = DefiningSet(params.n, params.dg)
    sources['D'] = full_defining_set(params)
    return sources


def defining_set_table(params: ConstructionParams) -> pd.DataFrame:
    """
    Renders the annotated defining set as a table with one row per source and one column per
    exponent, a '0' marking a root alpha^i.
    """
    rows = {label: ['0' if e in exponents else '' for e in range(params.n)]
            for label, exponents in defining_set_sources(params).items()}
    return pd.DataFrame.from_dict(rows, orient='index', columns=list(range(params.n)))


@dataclass(frozen=True, eq=False)
class CyclicLRC:
    """
    A cyclic code of length n over GF(q) given by its defining set.
    The generator matrix has rows x^i * g(x), 0 <= i < k.
    """
    params: ConstructionParams
    field: FiniteField
    n: int
    alpha: galois.FieldArray
    defining_set: DefiningSet
    generator_poly: Poly
    k: int
    generator_matrix: galois.FieldArray

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def is_zero_code(self) -> bool:
        return self.k == 0

    @cached_property
    def root_evaluations(self) -> galois.FieldArray:
        """
        The |D| x n matrix with entries alpha^(e * j); a word is a codeword iff it is annihilated.
        """
        exponents = np.outer(np.array(self.defining_set.exponents, dtype=np.int64),
                             np.arange(self.n, dtype=np.int64))
        return self.alpha ** exponents

    @cached_property
    def parity_check_matrix(self) -> galois.FieldArray:
        """
        A basis of the dual code, as rows.
        """
        if self.k == 0:
            return self.field.gf.Identity(self.n)
        return self.generator_matrix.null_space()


def build_code(params: ConstructionParams, field: Optional[FiniteField] = None) -> CyclicLRC:
    """
    Builds the cyclic LRC of the construction.
    Args:
        params: the construction parameters
        field: optional field override; by default GF(q) for the given q, otherwise the
            smallest field holding the n-th roots of unity
    Returns:
        CyclicLRC: the code
    """
    n = params.n
    if field is None:
        field = field_for_order(params.q) if params.q is not None else find_field_for_length(n)
    if (field.order - 1) % n:
        raise FieldError(f'n = {n} does not divide q - 1 = {field.order - 1}')

    overlap = dg_overlap(params)
    if overlap:
        logger.warning('D_g exponents %s already lie in the local defining sets', list(overlap))

    alpha = field.nth_root_of_unity(n)
    defining_set = full_defining_set(params)
    if len(defining_set):
        roots = alpha ** np.array(defining_set.exponents, dtype=np.int64)
        generator_poly = galois.Poly.Roots(roots, field=field.gf)
    else:
        generator_poly = galois.Poly.One(field.gf)

    k = n - len(defining_set)
    if k == 0:
        logger.warning('The defining set covers [0, %d]: the code is the zero code', n - 1)
    g_coefficients = field.gf(poly_coefficients(generator_poly))
    generator_matrix = field.gf.Zeros((k, n))
    for i in range(k):
        generator_matrix[i, i:i + g_coefficients.size] = g_coefficients

    logger.info('Built [%d, %d] cyclic code over GF(%d) with |D| = %d', n, k, field.order,
                len(defining_set))
    return CyclicLRC(params=params, field=field, n=n, alpha=alpha, defining_set=defining_set,
                     generator_poly=generator_poly, k=k, generator_matrix=generator_matrix)


def systematic_generator(code: CyclicLRC) -> galois.FieldArray:
    """
    Returns the reduced row echelon form [I | P] of the generator matrix.
    """
    if code.k == 0:
        return code.generator_matrix
    return code.generator_matrix.row_reduce()


def parity_check_matrix(code: CyclicLRC) -> galois.FieldArray:
    """
    Returns an (n - k) x n matrix H with G @ H.T = 0.
    """
    return code.parity_check_matrix


def as_vector(code: CyclicLRC, values, length: int, what: str = 'vector') -> galois.FieldArray:
    """
    Converts integers or field elements to a field vector of the given length.
    """
    if isinstance(values, galois.FieldArray):
        code.field.check(values)
        vector = values
    else:
        vector = code.field.gf(np.asarray([int(v) for v in values], dtype=np.int64))
    if vector.shape != (length,):
        raise ParameterError(f'{what} must have length {length}, got {vector.size}')
    return vector


def encode(code: CyclicLRC, message: Sequence) -> galois.FieldArray:
    """
    Encodes a message of k symbols as the coefficients of m(x) * g(x) mod (x^n - 1).
    """
    message = as_vector(code, message, code.k, 'message')
    if code.k == 0:
        return code.field.gf.Zeros(code.n)
    # deg m(x) g(x) < n, so no reduction by x^n - 1 takes place
    return message @ code.generator_matrix


def is_codeword(code: CyclicLRC, word: Sequence) -> bool:
    """
    True iff the word polynomial vanishes at alpha^e for every e in the defining set.
    """
    word = as_vector(code, word, code.n, 'word')
    if len(code.defining_set) == 0:
        return True
    return bool(np.all(code.root_evaluations @ word == 0))
