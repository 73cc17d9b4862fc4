import math
import os
from pathlib import Path

import pytest

import dproc

FIXTURES = Path(os.environ.get("DPROC_FIXTURES", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


@pytest.fixture(scope="module")
def ad1():
    return dproc.load_spec(str(FIXTURES / "ad1.dproc"))


@pytest.fixture(scope="module")
def ad2():
    return dproc.load_spec(str(FIXTURES / "ad2.dproc"))


def test_spec_properties(ad1):
    assert ad1.name == "AD1"
    assert ad1.activities == ["1", "2", "3", "4", "5", "6"]
    assert ad1.constraints[1] == "resp(1, 2)"
    assert ad1.stakeholders == ["S1", "S2"]
    assert ad1.preferences == ["participation(5)", "participation(6)"]
    assert dproc.parse_spec(str(ad1)) == ad1


def test_example_traces():
    spec = dproc.load_spec(str(FIXTURES / "evening.dproc"))
    for strategy in ("brute", "leaf"):
        result = dproc.unique_traces(spec, strategy=strategy)
        assert len(result) == 10
        assert result.traces[0] == []
        assert result.traces[-1] == ["1", "2", "4", "3", "5"]


def test_ad_traces(ad1, ad2):
    t1 = dproc.unique_traces(ad1, workers=4).traces
    t2 = dproc.unique_traces(ad2).traces
    assert len(t1) == 16
    assert t2 == [t for t in t1 if "6" in t]


def test_check(ad1):
    assert dproc.check(ad1, [1, 2, 5])
    assert not dproc.check(ad1, ["2", "1"])
    with pytest.raises(dproc.UnknownActivity):
        dproc.check(ad1, [9])


def test_workload():
    assert dproc.enumeration_workload(7) == 13700


def test_utilities(ad1):
    assert dproc.good_counts(ad1) == ([12, 8], 16)
    u = dproc.utility_vector(ad1)
    assert u[0] == pytest.approx(0.90531, abs=5e-6)
    assert u[1] == pytest.approx(math.log(9) / math.log(17))
    assert dproc.utility(389, 459) == pytest.approx(0.97308, abs=5e-6)
    assert dproc.utility_vector_from_counts([11, 3], 459) == pytest.approx([0.40529, 0.22610], abs=5e-6)
    with pytest.raises(dproc.DegenerateProcess):
        dproc.utility(0, 0)


def test_compare_vectors():
    report = dproc.compare_vectors(
        [
            ("PH1", [0.40529, 0.22610, 0.97308, 0.99750, 0.99605]),
            ("PH2a", [0.34826, 0.85454, 1.0, 0.99989, 0.99999]),
            ("PH2b", [0.39651, 0.86908, 1.0, 0.99990, 0.99999]),
        ]
    )
    assert len(report["rows"]) == 31
    assert [s["h"] for s in report["systems"]] == pytest.approx([0.97640, 0.66778, 0.61753], abs=5e-6)
    assert report["summary"]["any"]["winner_label"] == "PH2b"
    assert (report["summary"]["any"]["freq_num"], report["summary"]["any"]["freq_den"]) == (20, 31)
    assert dproc.h_distance([1.0, 1.0]) == 0.0


def test_compare_specs(ad1, ad2):
    report = dproc.compare_specs([ad1, ad2])
    assert report["rows"][-1]["winner_label"] == "AD2"


def test_errors():
    with pytest.raises(dproc.ParseError):
        dproc.parse_spec("process p {")
    with pytest.raises(dproc.ArityError):
        dproc.parse_spec("process p { activities { 1; } constraints { resp(1); } }")
    with pytest.raises(dproc.Error):
        dproc.parse_spec("process p { activities { 1; } constraints { participation(4); } }")
    big = dproc.parse_spec("process p { activities { 1; 2; 3; } constraints { } }")
    with pytest.raises(dproc.AlphabetTooLarge):
        dproc.unique_traces(big, strategy="brute", max_alphabet=2)
    with pytest.raises(ValueError):
        dproc.unique_traces(big, strategy="fast")
