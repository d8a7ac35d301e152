import pytest

from flagcoh import checker, veronese
from flagcoh.dynkin import DynkinDiagram, MarkedDiagram, coxeter_number
from flagcoh.linalg import row_reduce


@pytest.mark.parametrize("n", range(2, 10))
def test_construction(n):
    q = veronese.build_quadric(n)
    codim = veronese.vertex_codimension(q)
    assert codim == veronese.expected_codimension(n)
    assert veronese.verify_disjoint(q)
    assert veronese.listed_equations_span_vertex(q)
    assert veronese.target_quadric_dimension(n) == 3 * (n // 2) + 1


@pytest.mark.parametrize("n", range(2, 10))
def test_gram_symmetric_and_pullback_vanishes(n):
    q = veronese.build_quadric(n)
    g = q.gram
    assert all(g[i][j] == g[j][i] for i in range(len(g)) for j in range(len(g)))
    # pulled back along Z_ij = x_i x_j the quadric is identically zero
    import itertools
    from fractions import Fraction

    for pt in itertools.product([Fraction(-1), Fraction(2), Fraction(1, 3)], repeat=min(n + 1, 4)):
        x = list(pt) + [Fraction(5, 7)] * (n + 1 - len(pt))
        v = [x[i] * x[j] for i, j in q.coords]
        assert sum(v[a] * g[a][b] * v[b] for a in range(len(v)) for b in range(len(v))) == 0


@pytest.mark.parametrize("n", range(2, 10))
def test_cohomological_obstruction_does_not_apply(n):
    # the maps P^n -> Q^d built here must not be excluded by the e.d. test
    d = veronese.target_quadric_dimension(n)
    src = checker.SpaceData(ed=n, gd=n, dim=n, label=f"P{n}")
    tgt = MarkedDiagram.single(DynkinDiagram("B", (d + 1) // 2), 1) if d % 2 else MarkedDiagram.single(
        DynkinDiagram("D", (d + 2) // 2), 1
    )
    assert coxeter_number(tgt.diagram) > n
    assert not checker.no_nonconstant_morphisms_cohomological(src, tgt).holds


def test_rejects_small_n():
    with pytest.raises(ValueError):
        veronese.build_quadric(1)


def test_vertex_equations_rank():
    q = veronese.build_quadric(5)
    assert len(veronese.vertex_equations(q)) == row_reduce(q.gram).rank
