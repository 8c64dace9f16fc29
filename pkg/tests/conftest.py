import hypothesis.strategies as st

from twosc.core import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    """Arbitrary labeled simple graphs, uniform over the edge bitmask."""
    n = draw(st.integers(min_n, max_n))
    nbits = n * (n - 1) // 2
    packed = draw(st.integers(0, (1 << nbits) - 1)) if nbits else 0
    adj = [0] * n
    pos = 0
    for u in range(n):
        for v in range(u + 1, n):
            if packed >> pos & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos += 1
    return Graph(tuple(adj))
