"""Smoke tests for the Python bindings."""

import pytest

import prepro


def test_mckay_counts():
    spec = prepro.CyclicGroupSpec.parse("5:1,1,3")
    p = prepro.mckay_presentation(spec)
    assert len(p.quiver.vertices) == 5
    assert len(p.quiver.arrows) == 15
    assert len(p.relations) == 15


def test_air_grading_set():
    spec = prepro.CyclicGroupSpec.parse("5:1,1,3")
    p = prepro.mckay_presentation(spec)
    g = prepro.air_grading(spec)
    labels = {a.label for a in p.quiver.arrows if g[a.id] == 1}
    assert labels == {"x1^4", "x2^4", "x3^2", "x3^3", "x3^4"}


def test_koszul_dims_binomials():
    q = prepro.Quiver()
    v = q.add_vertex("*")
    x = q.add_arrow(v, v, "x")
    y = q.add_arrow(v, v, "y")
    comm = prepro.PathVector([("1", [x, y]), ("-1", [y, x])])
    p = prepro.QuadraticPresentation(q, [comm])
    assert prepro.koszul_dims(p, 3) == [(0, 1), (1, 2), (2, 1), (3, 0)]
    assert prepro.graded_dims(p, 4) == [1, 2, 3, 4, 5]
    assert prepro.koszulity_probe(p).ok


def test_classification_verdicts():
    assert (
        prepro.classify_group(prepro.CyclicGroupSpec.parse("5:1,1,3")).verdict
        == "preprojective-grading-exists"
    )
    rec = prepro.classify_group(prepro.CyclicGroupSpec.parse("3:1,2,1,2"))
    assert rec.verdict == "no-preprojective-structure"
    assert rec.embeds == "yes"


def test_grading_search_diagonal():
    spec = prepro.CyclicGroupSpec.parse("3:1,2,1,2")
    p = prepro.mckay_presentation(spec)
    w = prepro.skew_superpotential(spec)
    res = prepro.grading_search(p, w, l_max=12)
    assert res.assignments == 4096
    assert res.finite_count == 0
    assert len(res.valid) > 0
    for grading, verdict in res.valid:
        assert verdict.gorenstein_parameter == 1
        assert verdict.degree0_finiteness.kind == "infinite"


def test_preprojective_of_the_plane():
    q = prepro.Quiver()
    v = q.add_vertex("*")
    x = q.add_arrow(v, v, "x")
    y = q.add_arrow(v, v, "y")
    comm = prepro.PathVector([("1", [x, y]), ("-1", [y, x])])
    p = prepro.QuadraticPresentation(q, [comm])
    pp = prepro.build_preprojective(p, 2)
    assert len(pp.new_arrows) == 1
    w = prepro.preprojective_superpotential(pp)
    assert w.degree == 3
    assert w.form.term_count() == 6


def test_shuffle_is_a_superpotential():
    spec = prepro.CyclicGroupSpec.parse("3:1,2")
    p = prepro.mckay_presentation(spec)
    w = prepro.skew_superpotential(spec)
    tp = prepro.tensor_presentation(p, p)
    shuffled = prepro.shuffle_product(p.quiver, w, p.quiver, w, tp)
    ok, reason = prepro.check_superpotential(tp.presentation.quiver, shuffled.form)
    assert ok, reason
    g = prepro.lift_grading_sum(
        prepro.air_grading(spec), prepro.air_grading(spec), tp.map
    )
    assert prepro.gorenstein_parameter(tp.presentation, shuffled, g) == 2


def test_json_round_trip():
    p = prepro.mckay_presentation(prepro.CyclicGroupSpec.parse("3:1,2"))
    text = p.to_json()
    back = prepro.QuadraticPresentation.from_json(text)
    assert back.to_json() == text


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        prepro.CyclicGroupSpec.parse("nonsense")
    with pytest.raises(RuntimeError):
        prepro.skew_superpotential(prepro.CyclicGroupSpec.parse("5:1,1"))
