import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rts96.case import build_system  # noqa: E402
from rts96.clearing import reduce_zonal  # noqa: E402
from rts96.timeseries import generate_year, synth_wind  # noqa: E402


@pytest.fixture(scope="session")
def case():
    return build_system()


@pytest.fixture(scope="session")
def series42(case):
    return generate_year(case, 42, synth_wind(42))


@pytest.fixture(scope="session")
def zcase(case):
    return reduce_zonal(case)
