"""Exact Coxeter group computations: reducedness, admissible sequences, omega forms.

Generators are 0-based here; the command-line tool uses 1-based letters.
"""

import json as _json

from ._core import (
    Group,
    all_coxeter_words,
    demazure_product,
    enumerate_admissible,
    find_w0_sequence,
    growth_lengths,
    is_admissible,
    is_reduced,
    length,
    omega,
    phi,
    power_word,
    presets,
    reduced_word,
    _run,
    _verify_all,
)


def run(suite, group, cox_word=None, **options):
    """Run one suite and return its report as a dict."""
    return _json.loads(_run(suite, group, cox_word, options))


def verify_all(groups=None, serial=False, **budgets):
    """Run every check on the given groups (default: the whole catalog)."""
    if groups is None:
        groups = [Group.preset(n) for n in presets()]
    return _json.loads(_verify_all(list(groups), budgets, serial))
