"""The extremal example graphs move by exactly the stated amounts."""

import pytest

from coeven import families
from coeven.domination import coeven_domination_number
from coeven.transforms import contract_edge, contract_vertex, remove_edge, remove_vertex


def value(g):
    return coeven_domination_number(g).value


@pytest.mark.parametrize(
    "make, transform, element, base, after",
    [
        (families.pendant_triangle_hub, remove_vertex, 0, 2, 5),      # upper: +deg-1 with deg 4
        (families.cherry_hub, remove_vertex, 0, 10, 6),               # lower: -deg-1 with deg 3
        (families.kite_with_tail, remove_vertex, 3, 4, 4),            # unchanged value
        (families.edge_removal_upper, remove_edge, (0, 1), 6, 8),     # +2
        (families.triangle_bridge, remove_edge, (0, 3), 4, 2),        # -2
        (families.fan_apex, contract_vertex, 0, 2, 6),                # upper with deg 5
        (families.spider_of_cherries, contract_vertex, 0, 10, 6),     # lower with deg 3
        (lambda: families.double_star(3, 3), contract_edge, (0, 1), 6, 6),
        (lambda: families.double_star(2, 2), contract_edge, (0, 1), 6, 4),
        (families.leaf_triangle_edge, contract_edge, (0, 1), 5, 4),
    ],
)
def test_extremal_relations(make, transform, element, base, after):
    g = make()
    assert value(g) == base
    assert value(transform(g, element).graph) == after


def test_degrees_match_the_stated_bounds():
    assert families.pendant_triangle_hub().degree(0) == 4
    assert families.cherry_hub().degree(0) == 3
    assert families.fan_apex().degree(0) == 5
    assert families.spider_of_cherries().degree(0) == 3


def test_basic_families():
    assert families.path(1).n == 1 and families.path(4).num_edges() == 3
    assert families.cycle(5).degrees() == [2] * 5
    assert families.complete(5).num_edges() == 10
    assert families.star(3).degree(0) == 3
    assert families.double_star(2, 3).n == 7
    with pytest.raises(ValueError):
        families.cycle(2)


def test_named_registry_builds():
    for name, make in families.NAMED.items():
        assert make().n > 0, name
