import json

from hypothesis import given
from hypothesis import strategies as st

from gfsums.engine import SYMBOLIC, closed_form, generating_function, split_alternating
from gfsums.errors import SingularWeight
from gfsums.render import (
    closed_form_from_json,
    closed_form_to_json,
    dumps,
    render_latex,
    render_split_text,
    render_text,
    split_from_json,
    split_to_json,
)

weights = st.sampled_from(["1", "-1", "2", "1/2", "3", "1/16", "i", "-2/3+1/7*i", SYMBOLIC])


@given(st.integers(1, 3), st.integers(0, 3), weights, st.sampled_from(["shifted", "standard"]))
def test_json_round_trip(n, r, w, basis):
    if basis == "standard" and n != 1:
        basis = "shifted"
    try:
        cf = closed_form(n, r, w, basis)
    except SingularWeight:
        return
    data = json.loads(dumps(cf))
    assert closed_form_from_json(data) == cf
    assert closed_form_to_json(cf) == data


def test_json_schema_keys():
    data = closed_form_to_json(generating_function(2, 0, "1/16"))
    assert set(data) == {"n", "r", "w", "basis", "head", "tail", "meta"}
    assert data["meta"] == {"singular": False, "extension": False, "infinite": True, "divergent": False}
    assert data["head"][0] == {"j": 0, "coeff": "3552/3553"}


@given(st.integers(1, 3), st.integers(0, 3))
def test_split_round_trip(n, r):
    s = split_alternating(n, r)
    assert split_from_json(json.loads(dumps(s))) == s
    assert split_to_json(s)["n"] == n


def test_text_j2():
    text = render_text(closed_form(1, 2, 1, "standard"))
    assert text.endswith("= -5·G0 - 8·G1 + (k^2 - 2*k + 5)·Gk + (k^2 - 4*k + 8)·G(k+1)")


def test_text_w3_content_factored():
    text = render_text(closed_form(1, 1, 3, "standard"))
    assert "3^(k+2)/121·(11*k + 1)·Gk" in text
    assert "3^(k+1)/121·(11*k - 10)·G(k+1)" in text


def test_latex_and_split_text():
    assert render_latex(closed_form(2, 0, 1)).startswith(r"\sum_{j=0}^{k} G_{j}^{2} = \frac{3}{2}G_{0}^{2}")
    lines = render_split_text(split_alternating(1, 0)).splitlines()
    assert lines[0].endswith("= 3/5·G0 - 1/5·G1 + (-1)^K·2/5·G(2K) + (-1)^K·1/5·G(2K+1)")
    assert len(lines) == 2


def test_symbolic_text_mentions_denominator():
    assert "w^3 - 2*w^2 - 2*w + 1" in render_text(closed_form(2, 0, SYMBOLIC))
