import pytest

from localcolor.cdcolor import (cd_coloring, choose_params, refined_coloring,
                                refined_palette_bound)
from localcolor.cliques import enumerate_maximal_cliques
from localcolor.graph import GraphError
from localcolor.io import gen_complete, gen_hyper_line, gen_line_of, gen_random
from localcolor.verify import brute_force_max_clique, is_proper_vertex


def test_choose_params():
    assert choose_params(81, 1) == 9
    assert choose_params(81, 3) == 3
    assert choose_params(5, 10) == 2


def test_k9_t3_x1_uses_nine_colors():
    g = gen_complete(9)
    cover = enumerate_maximal_cliques(g)
    col, report = cd_coloring(g, cover, t=3, x=1, audit=True)
    assert is_proper_vertex(g, col).ok
    assert col.colors_used() == 9
    assert report.leaf_count() <= (3 * cover.D) ** 1


def test_cd_decomposition_bounds():
    g = gen_random(40, 10, seed=4)
    cover = enumerate_maximal_cliques(g)
    t, x = 2, 2
    col, report = cd_coloring(g, cover, t, x, audit=True)
    assert is_proper_vertex(g, col).ok
    assert report.leaf_count() <= (t * cover.D) ** x
    for level in report.levels:
        assert level.max_diversity <= cover.D


def test_cd_leaf_cliques_via_oracle():
    # reconstruct leaves from the flattened colors and check their max
    # cliques against the brute-force oracle
    g = gen_complete(16)
    cover = enumerate_maximal_cliques(g)
    t, x = 2, 2
    col, report = cd_coloring(g, cover, t, x, audit=True)
    leaf_radix = col.palette_size // (cover.D * (t - 1) + 1) ** x
    leaves = {}
    for v, c in col.assignment.items():
        leaves.setdefault(c // leaf_radix, []).append(v)
    assert len(leaves) <= (t * cover.D) ** x
    from localcolor.graph import induced_subgraph
    for vs in leaves.values():
        assert brute_force_max_clique(induced_subgraph(g, vs)) <= \
            cover.S / t ** x + 2


def test_refined_line_graph_bounds():
    g, cover = gen_line_of(60, 25, seed=1)
    assert cover.D == 2
    for x in (1, 2, 3):
        col, report = refined_coloring(g, cover, x)
        assert is_proper_vertex(g, col).ok
        assert col.palette_size <= 2 ** (x + 1) * cover.S


def test_refined_hyper_line_graph_bounds():
    g, cover = gen_hyper_line(30, 3, 40, seed=2)
    assert cover.D <= 3
    for x in (1, 2):
        col, report = refined_coloring(g, cover, x)
        assert is_proper_vertex(g, col).ok
        assert col.palette_size <= refined_palette_bound(cover.D, cover.S, x)


def test_refined_small_s_fallback():
    g = gen_complete(5)  # S=5 falls below the recursion threshold
    cover = enumerate_maximal_cliques(g)
    col, report = refined_coloring(g, cover, 2)
    assert is_proper_vertex(g, col).ok
    assert col.palette_size <= cover.D * (cover.S - 1) + 1


def test_bad_params_rejected():
    g = gen_complete(4)
    cover = enumerate_maximal_cliques(g)
    with pytest.raises(GraphError):
        cd_coloring(g, cover, t=1, x=1)
    with pytest.raises(GraphError):
        refined_coloring(g, cover, 0)
