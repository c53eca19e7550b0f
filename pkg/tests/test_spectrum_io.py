import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdist.ensemble import Level, Spectrum
from qdist.spectrum_io import SpectrumFormatError, dumps, loads, read_spectrum, write_spectrum


def test_read_fixture(fixtures):
    stat, sp = read_spectrum(fixtures / "fermi_two_level.json")
    assert stat == "fermi"
    assert sp.levels == (Level(0.0, 2), Level(1.0, 2))


def test_canonical_writer(tmp_path):
    sp = Spectrum.from_levels([(1.0, 2), (0.0, 3), (1.0, 1)])
    path = tmp_path / "s.json"
    write_spectrum(path, "bose", sp)
    text = path.read_text()
    assert text == dumps("bose", sp)
    assert text.endswith("\n")
    assert json.loads(text)["levels"] == [
        {"degeneracy": 3, "energy": 0.0},
        {"degeneracy": 3, "energy": 1.0},
    ]


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        "[]",
        '{"statistics": "fermi"}',
        '{"statistics": "fermi", "levels": [], "extra": 1}',
        '{"statistics": "anyon", "levels": [{"energy": 0, "degeneracy": 1}]}',
        '{"statistics": "fermi", "levels": []}',
        '{"statistics": "fermi", "levels": [{"energy": 0, "degeneracy": 1.5}]}',
        '{"statistics": "fermi", "levels": [{"energy": 0, "degeneracy": 0}]}',
        '{"statistics": "fermi", "levels": [{"energy": 0, "degeneracy": true}]}',
        '{"statistics": "fermi", "levels": [{"energy": "x", "degeneracy": 2}]}',
        '{"statistics": "fermi", "levels": [{"energy": 0, "degeneracy": 2, "spin": 1}]}',
    ],
)
def test_rejects_malformed(doc):
    with pytest.raises(SpectrumFormatError):
        loads(doc)


levels = st.lists(
    st.tuples(
        st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
        st.integers(min_value=1, max_value=1000),
    ),
    min_size=1,
    max_size=12,
)


@settings(max_examples=100)
@given(st.sampled_from(["fermi", "bose"]), levels)
def test_round_trip(stat, pairs):
    sp = Spectrum.from_levels(pairs)
    text = dumps(stat, sp)
    stat2, sp2 = loads(text)
    assert (stat2, sp2) == (stat, sp)
    assert dumps(stat2, sp2) == text
