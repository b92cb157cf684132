import pytest
from hypothesis import strategies as st

from coauthor_homophily.graph import NEGATIVE, POSITIVE, PaperRecord, build_reciprocated_graph

P, N = POSITIVE, NEGATIVE

# Two same-label triangles joined by a single cross-label edge.
BRIDGED_TRIANGLES = [
    ("1", "2", P, P), ("2", "3", P, P), ("1", "3", P, P),
    ("4", "5", N, N), ("5", "6", N, N), ("4", "6", N, N),
    ("1", "4", P, N),
]

# Three cross-label pairs plus one same-label edge on each side.
CROSS_PAIRS = [
    ("1", "4", P, N), ("2", "5", P, N), ("3", "6", P, N),
    ("1", "3", P, P), ("4", "5", N, N),
]


@pytest.fixture
def bridged_triangles():
    return build_reciprocated_graph(BRIDGED_TRIANGLES)


@pytest.fixture
def cross_pairs():
    return build_reciprocated_graph(CROSS_PAIRS)


labels = st.sampled_from([P, N])


@st.composite
def paper_lists(draw, min_papers=1, max_papers=25, min_size=2, max_size=8, both_labels=False):
    """Lists of :class:`PaperRecord` with sizes in ``[min_size, max_size]``."""
    n = draw(st.integers(min_papers, max_papers))
    papers = [
        PaperRecord(f"p{k}", tuple(draw(st.lists(labels, min_size=min_size, max_size=max_size))))
        for k in range(n)
    ]
    if both_labels:
        present = {lab for p in papers for lab in p.author_labels}
        if len(present) < 2:
            # force a mixed pair so both classes exist
            papers.append(PaperRecord(f"p{n}", (P, N)))
    return papers


@st.composite
def uniform_paper_lists(draw, max_papers=25, max_size=8):
    k = draw(st.integers(2, max_size))
    papers = draw(paper_lists(min_papers=1, max_papers=max_papers, min_size=k, max_size=k))
    present = {lab for p in papers for lab in p.author_labels}
    if len(present) < 2:
        papers.append(PaperRecord("mixed", (P,) + (N,) * (k - 1)))
    return papers


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
