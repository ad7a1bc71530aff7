from pathlib import Path

from ghforge import GHMatrix

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def mutate_one_entry(matrix, rng):
    """Copy of ``matrix`` with one random entry changed to a different value."""
    k, q = matrix.order, matrix.field.q
    entries = matrix.entries.copy()
    r, c = rng.randrange(k), rng.randrange(k)
    entries[r, c] = (int(entries[r, c]) + rng.randrange(1, q)) % q
    return GHMatrix(matrix.field, entries, matrix.claimed_lambda, "external")
