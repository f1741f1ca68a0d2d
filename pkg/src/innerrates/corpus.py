"""Fixed test corpora of m-primary monomial ideals."""

from __future__ import annotations

import random

from .toric import MonomialIdeal

DEFAULT_SEED = 20240611


def random_ideal(rng: random.Random, max_exp: int = 6, max_mixed: int = 4) -> MonomialIdeal:
    gens = [(rng.randint(1, max_exp), 0), (0, rng.randint(1, max_exp))]
    for _ in range(rng.randint(0, max_mixed)):
        gens.append((rng.randint(1, max_exp), rng.randint(1, max_exp)))
    return MonomialIdeal(tuple(gens))


def reference_ideals() -> dict:
    """Small ideals whose invariants are known by hand."""
    out = {
        "(x^2,y^2)": MonomialIdeal(((2, 0), (0, 2))),
        "(x^2,xy,y^2)": MonomialIdeal(((2, 0), (1, 1), (0, 2))),
        "(x^2,y^2,xy^2,x^2y)": MonomialIdeal(((2, 0), (0, 2), (1, 2), (2, 1))),
        "(x^3,xy,y^2)": MonomialIdeal(((3, 0), (1, 1), (0, 2))),
    }
    for n in range(1, 7):
        out[f"I_{n}"] = MonomialIdeal.power_of_maximal(n)
    return out


def default_corpus(count: int = 24, seed: int = DEFAULT_SEED, max_exp: int = 6) -> list:
    """``count`` distinct pseudo-random ideals with exponents <= ``max_exp``."""
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < count:
        I = random_ideal(rng, max_exp)
        if I.generators not in seen:
            seen.add(I.generators)
            out.append(I)
    return out


def full_corpus() -> list:
    """Random corpus followed by the hand-worked ideals, without repeats."""
    out, seen = [], set()
    for I in default_corpus() + list(reference_ideals().values()):
        if I.generators not in seen:
            seen.add(I.generators)
            out.append(I)
    return out
