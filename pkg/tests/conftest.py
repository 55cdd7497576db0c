import math

import pytest

from trifig import AngleAssignment, Figure
from trifig.figure import serialize_figure

ROOT3 = math.sqrt(3.0)


@pytest.fixture
def incenter_figure():
    """Equilateral triangle fanned from its incenter."""
    return Figure([("A", "B", "I"), ("B", "C", "I"), ("C", "A", "I")],
                  name="incenter")


@pytest.fixture
def incenter_angles():
    return AngleAssignment.from_rows([(30.0, 30.0, 120.0)] * 3)


@pytest.fixture
def incenter_coords():
    return {"A": (0.0, 0.0), "B": (1.0, 0.0), "C": (0.5, ROOT3 / 2.0),
            "I": (0.5, ROOT3 / 6.0)}


@pytest.fixture
def incenter_doc(tmp_path, incenter_figure, incenter_angles):
    path = tmp_path / "incenter.json"
    path.write_text(serialize_figure(incenter_figure, incenter_angles.values))
    return path
