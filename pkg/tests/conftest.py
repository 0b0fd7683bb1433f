import pytest

from swbounds.report import prepare_graph, standard_corpus


@pytest.fixture(scope="session")
def corpus():
    """The standard corpus: families up to 12 vertices plus 100 ER(15, 0.3)."""
    return standard_corpus()


@pytest.fixture(scope="session")
def prepared_corpus(corpus):
    """Every corpus graph with moments, eigendecomposition, and clique number."""
    return [prepare_graph(entry) for entry in corpus]
