from powergeom import errata
from powergeom.exponents import Convention
from powergeom.presets import PRESETS, get, identify, preset_sum
from powergeom.truncation import analyze

import pytest


def fired(name, conv=Convention.PLAIN, dim=4):
    rep = analyze(preset_sum(name), dim, conv)
    return {e.id: e for e in rep.errata}


def test_ledger_entries_are_well_formed():
    ids = [e["id"] for e in errata.entries()]
    assert len(ids) == len(set(ids))
    for e in errata.entries():
        assert e["preset"] in (None, *PRESETS)
        assert e["summary"]


def test_p3_normal_signs():
    f = fired("painleve3")
    assert f["P3-N3"].computed == [1, 0, 0, 0]
    assert f["P3-N5"].computed == [-1, 1, 2, 3]
    assert "P1-DIM" not in f


def test_p1_dimension_wording():
    assert fired("painleve1")["P1-DIM"].computed == 2


def test_p5_errata_in_both_conventions():
    for conv in Convention:
        f = fired("painleve5", conv)
        assert f["P5-N6"].computed == [-1, 0, 1, 2]
        g4 = f["P5-G4"].computed
        assert g4["not_on_facet"] == ["Q9", "Q10", "Q11"]
        assert set(f["P5-G3"].computed["missing_from_listing"]) >= {"Q8"}
        mix = f["P5-CONV"].computed
        assert mix["count-dependent"]["support_matches_printed"]
        assert not mix["plain"]["support_matches_printed"]
        assert mix["plain"]["printed_plane_is_facet"]


def test_map_label_only_in_2d():
    assert "MAP-2D" in fired("painleve3", dim=2)
    assert "MAP-2D" not in fired("painleve3", dim=3)


def test_identify_up_to_sign():
    assert identify(-preset_sum("painleve4")) == "painleve4"
    assert identify(preset_sum("painleve4") + preset_sum("painleve1")) is None
    with pytest.raises(KeyError, match="unknown preset"):
        get("painleve6")
