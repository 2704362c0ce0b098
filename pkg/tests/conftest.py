import pytest

from reltutte import PointedGraph, parse_graph_text


def G(text: str):
    """Build a graph from the flat text format (tests shorthand)."""
    return parse_graph_text(text)


@pytest.fixture
def triangle():
    return G(
        """
        edge e1 a b color=lam
        edge e2 b c color=lam
        edge e3 c a color=lam
        """
    )


@pytest.fixture
def parallel_pair():
    # one regular edge next to one zero edge
    return G(
        """
        edge m 1 2 color=mu
        edge h 1 2 color=z0 zero
        """
    )


@pytest.fixture
def figure_left():
    # triangle: pointed edge, one regular edge, one zero edge
    return PointedGraph(
        G(
            """
            edge ep a b color=nu pointed
            edge m b c color=mu
            edge h c a color=z0 zero
            """
        )
    )


@pytest.fixture
def figure_right():
    # three parallel edges: pointed, regular, zero
    return PointedGraph(
        G(
            """
            edge ep 1 2 color=nu pointed
            edge m 1 2 color=mu
            edge h 1 2 color=z0 zero
            """
        )
    )


@pytest.fixture
def trivial_patch():
    # pointed edge plus a single parallel zero edge
    return PointedGraph(
        G(
            """
            edge ep 1 2 color=nu pointed
            edge h 1 2 color=z0 zero
            """
        )
    )
