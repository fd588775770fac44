"""Named graph families used throughout the tests and the command line.

Vertex numbering is fixed and documented per generator so that every
construction downstream is reproducible.

``gnp`` draws from SplitMix64 so seeds mean the same thing in any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    z = z ^ (z >> 31)
    uniform = (z >> 11) / 2**53

The initial state is the seed.  Pairs ``(i, j)``, ``i < j``, are visited with
``i`` as the outer loop and ``j`` as the inner loop; the edge is present when
``uniform < p``.
"""

from __future__ import annotations

from .errors import ParameterError
from .graph import Graph

__all__ = [
    "path",
    "cycle",
    "complete",
    "grid",
    "spider",
    "fig3a",
    "fig3b",
    "fig3c",
    "gnp",
    "SplitMix64",
    "generate",
    "parse_generator",
    "KINDS",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) / 9007199254740992.0


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def path(n: int) -> Graph:
    """Path ``0 - 1 - ... - (n-1)``."""
    _positive("n", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _positive("n", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive("n", n)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid(w: int, h: int) -> Graph:
    """``w`` x ``h`` grid; vertex ``(x, y)`` has index ``y * w + x``."""
    _positive("w", w)
    _positive("h", h)
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    return Graph.from_edges(w * h, edges)


def spider(k: int, k_prime: int) -> Graph:
    """A path of length ``6k`` with a path of length ``3k + 3k'`` hung at its middle.

    Vertices ``0..6k`` are the long path (its middle is ``3k``), and
    ``6k+1 .. 9k+3k'`` continue the branch outward from the middle, so the
    branch tip is at distance ``3k + 3k'`` from vertex ``3k``.
    """
    _positive("k", k)
    _positive("k_prime", k_prime)
    spine = 6 * k
    branch = 3 * k + 3 * k_prime
    n = spine + 1 + branch
    edges = [(i, i + 1) for i in range(spine)]
    prev = 3 * k
    for i in range(spine + 1, n):
        edges.append((prev, i))
        prev = i
    return Graph.from_edges(n, edges)


def _two_cycles(size: int) -> list[tuple[int, int]]:
    inner = [(i, (i + 1) % size) for i in range(size)]
    outer = [(size + i, size + (i + 1) % size) for i in range(size)]
    return inner + outer


def fig3a() -> Graph:
    """Two hexagons ``0..5`` (inner) and ``6..11`` (outer) joined by spokes 0-6, 2-8, 4-10."""
    return Graph.from_edges(12, _two_cycles(6) + [(0, 6), (2, 8), (4, 10)])


def fig3b() -> Graph:
    """Inner hexagon ``0..5``, outer hexagon ``a..f = 6..11``.

    Chords 1-c, 2-b, 4-f, 5-e; vertex 12 subdivides 0-a and vertex 13
    subdivides 3-d.
    """
    a, b, c, d, e, f = range(6, 12)
    x, y = 12, 13
    extra = [(1, c), (2, b), (4, f), (5, e), (0, x), (x, a), (3, y), (y, d)]
    return Graph.from_edges(14, _two_cycles(6) + extra)


def fig3c() -> Graph:
    """Octagons ``x0..x7 = 0..7`` and ``y0..y7 = 8..15`` with crossed rungs."""
    X = list(range(8))
    Y = list(range(8, 16))
    cross = [
        (X[0], Y[1]), (Y[0], X[1]), (X[2], Y[3]), (Y[2], X[3]),
        (X[4], Y[5]), (Y[4], X[5]), (X[6], Y[7]), (X[7], Y[6]),
    ]
    return Graph.from_edges(16, _two_cycles(8) + cross)


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) driven by :class:`SplitMix64` (see module docstring)."""
    _positive("n", n)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must be in [0, 1], got {p!r}")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.uniform() < p:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


KINDS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "grid": grid,
    "spider": spider,
    "fig3a": fig3a,
    "fig3b": fig3b,
    "fig3c": fig3c,
    "gnp": gnp,
}


def generate(kind: str, *args, **kwargs) -> Graph:
    try:
        fn = KINDS[kind]
    except KeyError:
        raise ParameterError(f"unknown generator {kind!r}; choose from {sorted(KINDS)}") from None
    try:
        return fn(*args, **kwargs)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {kind}: {exc}") from None


def _number(tok: str):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        return float(tok)
    except ValueError:
        raise ParameterError(f"not a number: {tok!r}") from None


def parse_generator(text: str) -> Graph:
    """Build a graph from ``kind[:params]``.

    Examples: ``cycle:5``, ``grid:5x5``, ``grid:3,4``, ``spider:2,1``,
    ``fig3b``, ``gnp:40,0.1,seed=7``.
    """
    kind, _, rest = text.strip().partition(":")
    args = []
    kwargs = {}
    if rest:
        for tok in rest.replace("x", ",").split(","):
            tok = tok.strip()
            if not tok:
                raise ParameterError(f"empty parameter in {text!r}")
            if "=" in tok:
                key, _, val = tok.partition("=")
                kwargs[key.strip()] = _number(val.strip())
            else:
                args.append(_number(tok))
    return generate(kind, *args, **kwargs)
