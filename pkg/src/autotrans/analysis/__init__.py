from .dfao import Dfao, dfao_eval, repunit_rows, row_set_stats, thue_morse
from .periodicity import (
    PeriodicityReport,
    brute_force_preperiod,
    find_preperiod,
    in_of_row,
    stable_preperiod,
    u_row,
)
from .suites import SUITES, SuiteReport, UnknownSuiteError, run_suites, verify_suite

__all__ = [
    "Dfao",
    "PeriodicityReport",
    "SUITES",
    "SuiteReport",
    "UnknownSuiteError",
    "brute_force_preperiod",
    "dfao_eval",
    "find_preperiod",
    "in_of_row",
    "repunit_rows",
    "row_set_stats",
    "run_suites",
    "stable_preperiod",
    "thue_morse",
    "u_row",
    "verify_suite",
]
