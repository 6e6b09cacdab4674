import pytest

from poisson_atlas import Scaled, parse_presentation, serialize_presentation
from poisson_atlas.brackets import Exact
from poisson_atlas.errors import ParseError
from poisson_atlas.scalars import Scalar

UQSL2 = """
# U_q(sl2) Poisson presentation
vars x, y, z laurent(z);
bracket scaled a = 2*z; f = x*y + z + z^(-1);
relation f - 2;
point (0, 0, 1);
point (0, 0, -1);
auto phi { x -> x; y -> -y; z -> -z; };
grading z;
"""


def test_parse_uqsl2():
    pf = parse_presentation(UQSL2)
    assert pf.varset.names == ("x", "y", "z")
    assert pf.varset.laurent == (False, False, True)
    assert isinstance(pf.bracket_spec, Scaled)
    assert len(pf.points) == 2
    assert "phi" in pf.autos
    assert pf.grading is not None
    pres = pf.presentation("uqsl2")
    assert len(pres.relations) == 1


def test_exact_needs_three_variables():
    with pytest.raises(ParseError):
        parse_presentation("vars x; bracket exact f = x;")


def test_unknown_variable_reports_location():
    with pytest.raises(ParseError) as err:
        parse_presentation("vars x, y, z;\nbracket exact f = z^2 - x*w;")
    assert err.value.line == 2


def test_laurent_violation_rejected():
    with pytest.raises(ParseError):
        parse_presentation("vars x, y, z; bracket exact f = z^(-1) + x*y;")


def test_point_with_sqrt_literal():
    pf = parse_presentation(
        "vars x, y, z laurent(z);"
        "bracket scaled a = 2*z; f = x*y + z^2 + z^(-2);"
        "point (0, 0, sqrt(-1));"
    )
    assert pf.points[0].values[2] == Scalar(0, 1, -1)


def test_rationals_and_negative_exponents():
    pf = parse_presentation(
        "vars u, v, w; bracket exact F = w^4/4 - u*v; relation F - 1/2;"
    )
    assert isinstance(pf.bracket_spec, Exact)


def test_table_bracket():
    pf = parse_presentation(
        "vars x1, x2 laurent(x1, x2);"
        "bracket table { [x1,x2] = x1*x2; };"
    )
    pres = pf.presentation()
    pair = pres.bracket_spec.pair(pf.varset, 0, 1)
    assert str(pair) == "x1*x2"


def test_embed_with_sub_presentation():
    text = (
        "vars x, y, z; bracket exact f = z^2 - x*y; relation f;"
        "embed sub(u, v, w) { bracket exact F = w^4/4 - u*v; relation F;"
        " u -> x^2/8; v -> y^2/8; w -> z/2; };"
    )
    pf = parse_presentation(text)
    clause = pf.embeds["sub"]
    sp = clause.sub_presentation()
    assert sp.varset.names == ("u", "v", "w")
    assert len(sp.relations) == 1


def test_serialize_round_trip():
    pf = parse_presentation(UQSL2)
    text = serialize_presentation(pf)
    pf2 = parse_presentation(text)
    assert pf2.varset == pf.varset
    assert pf2.bracket_spec == pf.bracket_spec
    assert pf2.relations == pf.relations
    assert pf2.points == pf.points
    assert pf2.autos.keys() == pf.autos.keys()
    for name in pf.autos:
        assert pf2.autos[name].images == pf.autos[name].images
    assert pf2.grading == pf.grading


def test_catalog_entries_serialize_and_reparse():
    from poisson_atlas import get_entry

    for name in ("torus-so3", "kleinian-a1", "uqsl2", "whitney"):
        entry = get_entry(name)
        pf = entry.presentation_file()
        text = serialize_presentation(pf)
        pf2 = parse_presentation(text)
        assert pf2.varset == pf.varset
        assert pf2.bracket_spec == pf.bracket_spec
        assert pf2.points == pf.points
        for auto in pf.autos:
            assert pf2.autos[auto].images == pf.autos[auto].images
        for emb in pf.embeds:
            assert pf2.embeds[emb].images == pf.embeds[emb].images
            assert pf2.embeds[emb].sub_bracket == pf.embeds[emb].sub_bracket


def test_missing_bracket_clause():
    with pytest.raises(ParseError):
        parse_presentation("vars x, y, z; relation x;")


def test_syntax_error_location():
    with pytest.raises(ParseError) as err:
        parse_presentation("vars x, y z;")
    assert err.value.line == 1
