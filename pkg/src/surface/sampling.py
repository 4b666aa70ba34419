"""Rejection sampling of one-puncture maps."""

from typing import Optional, Tuple

import numpy as np
from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt

from ..configuration.model import make_rng, sample_pairing
from ..utils import config, get_logger
from ..utils.errors import DomainError, RetryBudgetExceeded
from .maps import CombinatorialMap, map_from_pairing

logger = get_logger(__name__)


class ExtraPunctures(Exception):
    """A drawn map has more than one boundary walk."""


def require_one_puncture_size(n: int) -> int:
    """Genus of a one-puncture map on n triangles; n must be 2 mod 4."""
    if not isinstance(n, (int, np.integer)) or n < 2 or n % 4 != 2:
        raise DomainError(f"N = {n} is not 2 mod 4; no one-puncture surface exists")
    return (n + 2) // 4


def rejection_sample(n: int, rng: np.random.Generator,
                     max_attempts: int) -> Tuple[CombinatorialMap, int]:
    """Draw uniform pairings until the glued surface has one puncture.

    Returns the accepted map and the number of pairings drawn. The accepted
    map is uniform over one-puncture maps on n triangles.
    """
    require_one_puncture_size(n)
    attempts = 0

    def draw() -> CombinatorialMap:
        nonlocal attempts
        attempts += 1
        candidate = map_from_pairing(sample_pairing(n, rng=rng))
        if candidate.n_punctures != 1:
            raise ExtraPunctures(candidate.n_punctures)
        return candidate

    retrying = Retrying(
        stop=stop_after_attempt(max_attempts),
        retry=retry_if_exception_type(ExtraPunctures),
    )
    try:
        accepted = retrying(draw)
    except RetryError as exc:
        raise RetryBudgetExceeded(max_attempts, f"no one-puncture map on N={n}") from exc
    return accepted, attempts


def sample_one_puncture(n: int, seed: Optional[int] = None,
                        max_attempts: Optional[int] = None) -> CombinatorialMap:
    """Uniform one-puncture map on n triangles (genus (n + 2) / 4)."""
    genus = require_one_puncture_size(n)
    sampling = config.get_sampling_config()
    seed = int(sampling["default_seed"] if seed is None else seed)
    max_attempts = int(sampling["max_attempts"] if max_attempts is None else max_attempts)

    surface_map, attempts = rejection_sample(n, make_rng(seed), max_attempts)
    logger.debug("One-puncture map accepted", n_triangles=n, genus=genus,
                 attempts=attempts, seed=seed)
    return surface_map
