import io

import pytest

from ehpspec.errors import CatalogError
from ehpspec.molecules import (
    MoleculeSpec,
    builtin_catalog,
    context_for,
    find,
    load_catalog,
    save_catalog,
)
from ehpspec.units import kinetic_scale


def test_builtin_catalog():
    names = [m.name for m in builtin_catalog()]
    assert names == ["VH", "TiH", "TiC", "CuLi"]
    assert find("culi") == MoleculeSpec("CuLi", 6.259494, 1.00818)
    with pytest.raises(KeyError):
        find("H2")


def test_physical_contexts():
    assert context_for(find("TiH")).mu == pytest.approx(9.1973019e8, rel=1e-8)
    assert context_for(find("TiC")).mu == pytest.approx(8.948005221e9, rel=1e-10)
    culi = find("CuLi")
    assert kinetic_scale(context_for(culi), culi.alpha) == pytest.approx(3.393975e-4, rel=1e-6)


def test_round_trip():
    text = save_catalog(builtin_catalog())
    assert load_catalog(text) == builtin_catalog()
    assert load_catalog(io.StringIO(text)) == builtin_catalog()


def test_round_trip_path(tmp_path):
    f = tmp_path / "cat.txt"
    f.write_text("# comment\n\nXY 1.5 0.7  # trailing\n")
    assert load_catalog(f) == [MoleculeSpec("XY", 1.5, 0.7)]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("AB 1.0\n", "line 1"),
        ("AB 1.0 0.5\nCD x 0.5\n", "line 2"),
        ("AB 1.0 0.5\n\nCD -1 0.5\n", "line 3"),
        ("AB 1.0 0\n", "AB"),
    ],
)
def test_malformed_lines(text, fragment):
    with pytest.raises(CatalogError) as exc:
        load_catalog(text)
    assert fragment in str(exc.value)


def test_empty_and_invalid_entries():
    assert load_catalog("") == []
    with pytest.raises(CatalogError, match="X"):
        load_catalog("X -1 1.0\n")


def test_catalog_table_values():
    assert find("VH").mu_amu == 0.988005
    assert find("CuLi").alpha == 1.00818
    assert len(builtin_catalog()) == 4
