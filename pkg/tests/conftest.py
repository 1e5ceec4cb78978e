import sys
from pathlib import Path

import numpy as np
import pytest

from arcdesign import ContractionDesign
from arcdesign.reference import load_reference_design

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def ex1_contraction():
    return load_reference_design("contraction_12x8_k3")


@pytest.fixture(scope="session")
def ex1_augmented():
    return load_reference_design("augmented_12x8_k3")


@pytest.fixture(scope="session")
def ex2_contraction():
    return load_reference_design("contraction_24x16_k5")


@pytest.fixture(scope="session")
def ex2_augmented():
    return load_reference_design("augmented_24x16_k5")


@pytest.fixture(scope="session")
def latin3():
    return ContractionDesign.from_cells(np.array([[1, 2, 3], [2, 3, 1], [3, 1, 2]]), v=3)
