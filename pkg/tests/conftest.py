"""Shared graph fixtures used across the test modules.

The five named graphs are the recurring hand-checked examples: a mixed
order-8 graph exercising both arc layers, the three order-8 graphs realizing
the antipodal-transfer cases i/ii/iii, and the order-16 graph with transfer
around the whole quarter orbit.
"""

from mixedcirc import GraphSpec, validate_spec


def two_arc_layer_graph() -> GraphSpec:
    # order 8, one undirected class, arcs from both admissible layers
    return validate_spec(8, [4], [1, 2], {1: 1, 2: -1})


def pst_case_i_graph() -> GraphSpec:
    return validate_spec(8, [1], [2], {2: -1})


def pst_case_ii_graph() -> GraphSpec:
    return validate_spec(8, [2], [1], {1: 1})


def pst_case_iii_graph() -> GraphSpec:
    return validate_spec(8, [2, 4], [1], {1: -1})


def mst_example_graph() -> GraphSpec:
    return validate_spec(16, [1], [2, 4], {2: 1, 4: -1})


def all_specs(n_values):
    """Every valid spec at each listed order, enumeration order."""
    from mixedcirc import enumerate_specs

    for n in n_values:
        yield from enumerate_specs(n)
