import pytest

from poisson_atlas import catalog_names, get_entry, run_entry
from poisson_atlas.catalog import RunConfig
from poisson_atlas.errors import AtlasError

FAST = RunConfig(trials=4)


def test_names_cover_the_worked_examples():
    names = catalog_names()
    for required in (
        "kleinian-a1",
        "torus-so3",
        "laurent-inv",
        "uqsl2",
        "uqsl2-equitable",
        "uqsl2-4hom",
        "whitney",
        "kleinian-an(2)",
        "kleinian-an(3)",
        "kleinian-an(4)",
        "kleinian-an(5)",
        "kleinian-d(4)",
        "kleinian-e6",
        "kleinian-e7",
        "kleinian-e8",
        "c-theta",
        "d-phi",
        "weyl-a2",
        "weyl-b2",
        "weyl-g2",
        "kirillov-kostant-sl2",
        "abelian(3)",
    ):
        assert required in names


def test_unknown_entry_rejected():
    with pytest.raises(AtlasError):
        get_entry("no-such-example")
    with pytest.raises(AtlasError):
        get_entry("kleinian-an(1)")


def test_e8_potential():
    entry = get_entry("kleinian-e8")
    # graded-lex puts the highest-degree term first
    assert str(entry.presentation.bracket_spec.potential) == "z^5 + y^3 + x^2"


def test_abelian_zero_table():
    entry = get_entry("abelian(3)")
    table = entry.presentation.pair_table()
    assert all(p.is_zero for p in table.values())


def test_every_fact_cites_a_source():
    for name in catalog_names():
        entry = get_entry(name)
        assert entry.checks, name
        for key, cite, fn in entry.checks:
            assert cite, (name, key)


@pytest.mark.parametrize(
    "name",
    ["kleinian-a1", "torus-so3", "whitney", "weyl-a2", "c-theta", "uqsl2-4hom"],
)
def test_run_entry_green(name):
    report = run_entry(get_entry(name), FAST)
    failures = [(r.key, r.detail) for r in report.results if not r.ok]
    assert report.ok, failures


def test_torus_facts_have_expected_keys():
    report = run_entry(get_entry("torus-so3"), FAST)
    keys = {r.key for r in report.results}
    assert {"ideal_points", "leaf_partition", "homogeneity", "twist"} <= keys


def test_flagged_notes_present():
    assert any("label swap" in n for n in get_entry("d-phi").notes)
    assert any("g in J^2" in n or "g^2" in n for n in get_entry("c-theta").notes)
    assert any("m3" in n for n in get_entry("weyl-b2").notes)
    assert any(
        "normalization slip" in n for n in get_entry("kleinian-an(3)").notes
    )
