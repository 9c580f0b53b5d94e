"""Computation context: seed, redraw count and resource budget.

Every genericity-dependent operation draws random linear forms from a
generator seeded through the context and recomputes the result with
independent draws; disagreement raises UnluckyDrawError.
"""

from dataclasses import dataclass, field
import random

from .errors import UnluckyDrawError

COEFF_RANGE = 1000  # random linear-form coefficients are drawn from [-1000, 1000]


@dataclass(frozen=True)
class Budget:
    max_basis: int = 4000
    max_degree: int = 80
    max_length: int = 100000


@dataclass(frozen=True)
class Context:
    seed: int = 0
    redraws: int = 2
    budget: Budget = field(default_factory=Budget)

    def draw_rngs(self):
        """One independent RNG per redraw, derived deterministically from the seed."""
        master = random.Random(self.seed)
        return [random.Random(master.randrange(2**63)) for _ in range(max(1, self.redraws))]


DEFAULT_CONTEXT = Context()


def with_redraws(ctx: Context, compute):
    """Run compute(rng) once per redraw and require identical results."""
    results = [compute(rng) for rng in ctx.draw_rngs()]
    first = results[0]
    for other in results[1:]:
        if other != first:
            raise UnluckyDrawError(f"generic redraws disagree: {first!r} vs {other!r}")
    return first
