import numpy as np
import pytest

from clasificacion.models.RationalMatrix_model import RationalMatrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_matrix(rng):
    """Matriz entera aleatoria con entradas en [-bound, bound]."""

    def build(rows, cols=None, bound=3):
        cols = rows if cols is None else cols
        values = rng.integers(-bound, bound + 1, size=rows * cols)
        return RationalMatrix.from_flat(rows, cols, (int(v) for v in values))

    return build


@pytest.fixture
def quick_analysis(settings):
    """Menos puntos de prueba para los casos grandes."""
    settings.PVKIT_INVARIANT_POINTS = 3
    return settings
