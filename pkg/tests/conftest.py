from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import strategies as st

from kfree.generators import cycle_graph, graph_from_mask
from kfree.graph import Graph
from kfree.graph6 import parse_graph6

ROOT = Path(__file__).resolve().parent.parent
SAMPLES = ROOT / "files" / "graphs" / "samples.g6"


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    """Grafo rotulado uniforme sobre as máscaras de arestas de um n sorteado."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def petersen() -> Graph:
    return parse_graph6("IheA@GUAo")


@pytest.fixture
def samples_path() -> Path:
    return SAMPLES
