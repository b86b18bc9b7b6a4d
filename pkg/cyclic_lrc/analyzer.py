"""
Defines the CyclicLrcAnalyzer class, which builds a code and collects everything known about it.
"""

from typing import Optional

import pandas as pd

from cyclic_lrc.bounds import bound_report
from cyclic_lrc.construction import (ConstructionParams, CyclicLRC, build_code, defining_set_sources,
                                     defining_set_table)
from cyclic_lrc.distance import (DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_TRIALS, min_distance_bracket,
                                 min_distance_exact)
from cyclic_lrc.gf import poly_coefficients
from cyclic_lrc.locality import (DEFAULT_LOCAL_BUDGET, DEFAULT_RANK_TEST_MAX_DISTANCE,
                                 verify_availability)
from cyclic_lrc.models import CodeReport, DistanceResult, FieldInfo


def code_parameters(code: CyclicLRC) -> dict:
    """
    Function to summarise a code as (n, k, r_i, rho_i).
    Args:
        code (CyclicLRC): the code
    Returns:
        dict: length, dimension, localities and local distances
    """
    return {'n': code.n, 'k': code.k, 'r': list(code.params.locality),
            'rho': list(code.params.rho)}


class CyclicLrcAnalyzer:
    """
    Class to build a cyclic LRC from its parameters and report its bounds, availability and
    distance.
    """

    def __init__(self, params: ConstructionParams, exact_distance: bool = False,
                 budget: int = DEFAULT_BUDGET, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                 local_budget: int = DEFAULT_LOCAL_BUDGET,
                 max_rank_distance: int = DEFAULT_RANK_TEST_MAX_DISTANCE):
        self.params = params
        self.code: CyclicLRC = build_code(params)
        self.exact_distance = exact_distance
        self.budget = budget
        self.trials = trials
        self.seed = seed
        self.local_budget = local_budget
        self.max_rank_distance = max_rank_distance
        self._report: Optional[CodeReport] = None

    def _distance(self) -> DistanceResult:
        if self.exact_distance:
            return min_distance_exact(self.code, budget=self.budget, trials=self.trials,
                                      seed=self.seed)
        return min_distance_bracket(self.code, trials=self.trials, seed=self.seed)

    def _collect_report(self) -> CodeReport:
        field = self.code.field
        return CodeReport(
            params=self.params,
            field=FieldInfo(p=field.p, m=field.m, q=field.order,
                            modulus=field.modulus_coefficients(),
                            primitive_element=int(field.primitive_element)),
            n=self.code.n,
            k=self.code.k,
            defining_set={label: list(exponents)
                          for label, exponents in defining_set_sources(self.params).items()},
            generator_poly=poly_coefficients(self.code.generator_poly),
            bounds=bound_report(self.params),
            availability=verify_availability(self.code, budget=self.local_budget,
                                             max_rank_distance=self.max_rank_distance),
            distance=self._distance(),
        )

    def get_report(self) -> CodeReport:
        """
        Method to return the full report, computed once
        Returns:
            CodeReport: the report
        """
        if self._report is None:
            self._report = self._collect_report()
        return self._report

    def get_dictionary(self) -> dict:
        return self.get_report().model_dump(mode='json', by_alias=True)

    def get_json(self) -> str:
        return self.get_report().model_dump_json(indent=4, by_alias=True)

    def get_dataframe(self) -> pd.DataFrame:
        """
        Method to return the annotated defining set as a pandas DataFrame
        Returns:
            pandas.DataFrame: one row per source D_1, ..., D_t, D_g and D
        """
        return defining_set_table(self.params)

    def get_groups_dataframe(self) -> pd.DataFrame:
        """
        Method to return the verified repair groups as a pandas DataFrame
        Returns:
            pandas.DataFrame: one row per repair group, ordered by (partition, group)
        """
        availability = self.get_report().availability
        return pd.DataFrame([group.model_dump() for group in availability.groups])


def analyze_code(params: ConstructionParams, **options) -> dict:
    """
    Function to build and analyze a code.
    Creates a new CyclicLrcAnalyzer object and returns the report as a dictionary.
    Args:
        params (ConstructionParams): the construction parameters
        options: keyword arguments of CyclicLrcAnalyzer
    Returns:
        dict: the report as a dictionary
    """
    return CyclicLrcAnalyzer(params, **options).get_dictionary()
