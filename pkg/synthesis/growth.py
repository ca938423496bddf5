"""
Growth of the asymptotic family.

Counts the shortcuts of asymptotic_config for several m and fits the exponent
of total count ≈ C·m^e by least squares on log-log data.
"""

import logging

import numpy as np
import pandas as pd
from sklearn.linear_model import LinearRegression

import config
from geometry.errors import DomainError
from synthesis.constructions import asymptotic_report

log = logging.getLogger(__name__)


def count_table(ms=None):
    """One row per m: point count, family sizes, total and the family-2 bound."""
    ms = config.GROWTH_SAMPLE_M if ms is None else ms
    rows = []
    for m in ms:
        report = asymptotic_report(m)
        rows.append({
            'm': m,
            'points': report.points,
            'family_one': report.family_one,
            'family_two': report.family_two,
            'total': report.total,
            'family_two_bound': report.family_two_bound,
        })
    return pd.DataFrame(rows)


def fit_growth_exponent(ms=None):
    """
    Slope of log(total shortcut count) against log m.

    Args:
        ms (iterable[int]): At least two distinct values of m (default config.GROWTH_SAMPLE_M)

    Returns:
        float: fitted exponent
    """
    table = count_table(ms)
    if table['m'].nunique() < 2:
        raise DomainError("the growth fit needs at least two distinct values of m")

    X = np.log(table[['m']].to_numpy(dtype=float))
    y = np.log(table['total'].to_numpy(dtype=float))
    model = LinearRegression().fit(X, y)
    exponent = float(model.coef_[0])
    log.info("growth exponent over m=%s: %.4f", list(table['m']), exponent)
    return exponent
