from __future__ import annotations

import logging
from typing import Dict, List, Tuple

import numpy as np

from ..arith import GaussianRational, RatFunc, RationalPoint, eval_shifted, ord_at
from ..duality import Intertwiner, pairing
from ..errors import OracleSizeError
from ..family import FamilyModule, casimir_at
from .jantzen import JantzenAnalysis, assemble_analysis

LOGGER = logging.getLogger(__name__)

MAX_ORACLE_WINDOW = 12


def gram_matrix(family: FamilyModule, phi: Intertwiner) -> np.ndarray:
    weights = family.window.weights
    gram = np.empty((len(weights), len(weights)), dtype=object)
    for i, j in np.ndindex(gram.shape):
        gram[i, j] = pairing(family, phi, weights[i], weights[j])
    return gram


def local_elementary_divisors(gram: np.ndarray, point: RationalPoint) -> List[Tuple[int, RatFunc]]:
    """Diagonalize over the local ring at x; returns (row index, divisor) per pivot.

    Each pivot has minimal order among the remaining entries (diagonal entries
    first), so every row and column operation divides by it with a quotient
    regular at x.
    """
    work = gram.copy()
    rows = list(range(work.shape[0]))
    cols = list(range(work.shape[1]))
    divisors: List[Tuple[int, RatFunc]] = []
    while rows and cols:
        candidates = [(ord_at(work[i, j], point), i != j, i, j) for i in rows for j in cols if not work[i, j].is_zero]
        if not candidates:
            break
        _, _, pi, pj = min(candidates)
        pivot = work[pi, pj]
        for r in rows:
            if r != pi and not work[r, pj].is_zero:
                work[r, :] = work[r, :] - work[pi, :] * (work[r, pj] / pivot)
        for c in cols:
            if c != pj and not work[pi, c].is_zero:
                work[:, c] = work[:, c] - work[:, pj] * (work[pi, c] / pivot)
        divisors.append((pi, pivot))
        rows.remove(pi)
        cols.remove(pj)
    return divisors


def filtration_oracle(
    family: FamilyModule,
    phi: Intertwiner,
    point: RationalPoint,
    max_window: int = MAX_ORACLE_WINDOW,
) -> JantzenAnalysis:
    """Jantzen data straight from the Gram matrix of the pairing, for small windows."""
    if family.window.bound > max_window:
        raise OracleSizeError(f"oracle supports windows up to {max_window}, got {family.window.bound}")
    weights = family.window.weights
    divisors = local_elementary_divisors(gram_matrix(family, phi), point)
    raw_orders: Dict[int, int] = {}
    raw_values: Dict[int, GaussianRational] = {}
    for row, divisor in divisors:
        order = int(ord_at(divisor, point))
        raw_orders[weights[row]] = order
        raw_values[weights[row]] = eval_shifted(divisor, point, order)
    LOGGER.debug("oracle at x=%s found %d divisors", point, len(divisors))
    return assemble_analysis(point, family.window.bound, raw_orders, raw_values, casimir_at(family, point))
