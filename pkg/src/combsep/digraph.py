"""Metatile-generating digraph of a comb and its cycle structure.

Nodes are bit strings describing the gaps remaining in the metatile
under construction (0 = empty cell, 1 = filled), starting at the next
empty cell and ending at the last filled cell; the zero node is the
empty string.  Every node has one outgoing square arc and one outgoing
comb arc.  The structure of the simple cycles determines which
recursion theorem applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
import json


@dataclass(frozen=True)
class Arc:
    src: tuple[int, ...]
    dst: tuple[int, ...]
    kind: str  # "S" or "C"
    inc: int
    combs: int

    def label(self) -> str:
        return f"{self.kind}[{self.inc}]" if self.inc else self.kind


@dataclass(frozen=True)
class Digraph:
    comb_pattern: tuple[int, ...]
    nodes: tuple[tuple[int, ...], ...]  # breadth-first order from the zero node
    arcs: tuple[Arc, ...]

    @property
    def q(self) -> int:
        return len(self.comb_pattern) - 1

    def out_arcs(self, node: tuple[int, ...]) -> list[Arc]:
        return [a for a in self.arcs if a.src == node]

    def bfs_index(self, node: tuple[int, ...]) -> int:
        return self.nodes.index(node)


def _strip(bits: list[int]) -> tuple[int, ...]:
    """Drop the completed prefix of 1s and the empty tail beyond the last 1."""
    i = 0
    while i < len(bits) and bits[i] == 1:
        i += 1
    rest = bits[i:]
    while rest and rest[-1] == 0:
        rest.pop()
    return tuple(rest)


def _square_successor(state: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    inc = 1 if not state else 0  # square extends the metatile only from the zero node
    bits = [1] + list(state[1:])
    return _strip(bits), inc


def _comb_successor(
    state: tuple[int, ...], pattern: tuple[int, ...]
) -> tuple[tuple[int, ...], int]:
    d = len(state)
    inc = len(pattern) - d  # q + 1 - d
    width = max(len(pattern), d)
    bits = [
        (state[j] if j < d else 0) | (pattern[j] if j < len(pattern) else 0)
        for j in range(width)
    ]
    return _strip(bits), inc


def build_digraph(c) -> Digraph:
    """Breadth-first closure from the zero node under the two tile moves."""
    pattern = c.pattern
    zero: tuple[int, ...] = ()
    order = [zero]
    seen = {zero}
    arcs = []
    frontier = [zero]
    while frontier:
        nxt = []
        for state in frontier:
            sq_dst, sq_inc = _square_successor(state)
            arcs.append(Arc(state, sq_dst, "S", sq_inc, 0))
            cb_dst, cb_inc = _comb_successor(state, pattern)
            arcs.append(Arc(state, cb_dst, "C", cb_inc, 1))
            for dst in (sq_dst, cb_dst):
                if dst not in seen:
                    seen.add(dst)
                    order.append(dst)
                    nxt.append(dst)
        frontier = nxt
    return Digraph(pattern, tuple(order), tuple(arcs))


@dataclass(frozen=True)
class Cycle:
    arcs: tuple[Arc, ...]

    @property
    def length(self) -> int:
        return sum(a.inc for a in self.arcs)

    @property
    def combs(self) -> int:
        return sum(a.combs for a in self.arcs)

    @property
    def node_set(self) -> frozenset:
        return frozenset(a.src for a in self.arcs)

    def word(self) -> str:
        return "".join(a.label() for a in self.arcs)


class StructureClass(str, Enum):
    NO_INNER_CYCLES = "NoInnerCycles"
    COMMON_NODE = "CommonNode"
    FOUR_INNER_TWO_ERRANT = "FourInnerTwoErrant"
    OTHER = "Other"


@dataclass(frozen=True)
class CycleStructure:
    tag: StructureClass
    inner: tuple[Cycle, ...]
    outer: tuple[Cycle, ...] = ()
    circuits: tuple[Cycle, ...] = ()
    node: tuple[int, ...] | None = None  # common or pseudo-common node
    errant: tuple[Cycle, ...] = ()  # errant loops, aligned with inner[0], inner[1]

    @property
    def inner_lengths(self) -> tuple[int, ...]:
        return tuple(cy.length for cy in self.inner)


def simple_cycles(g: Digraph) -> list[Cycle]:
    """All simple cycles, distinguishing parallel arcs.

    Exhaustive DFS anchored at each node in BFS order; a cycle is only
    reported from its smallest-index node, so each arc cycle appears
    once up to rotation.
    """
    index = {node: i for i, node in enumerate(g.nodes)}
    out = {node: [] for node in g.nodes}
    for a in g.arcs:
        out[a.src].append(a)
    cycles: list[Cycle] = []

    def dfs(start, node, path, on_path):
        for a in out[node]:
            if index[a.dst] < index[start]:
                continue
            if a.dst == start:
                cycles.append(Cycle(tuple(path + [a])))
            elif a.dst not in on_path:
                on_path.add(a.dst)
                dfs(start, a.dst, path + [a], on_path)
                on_path.discard(a.dst)

    for start in g.nodes:
        dfs(start, start, [], {start})
    return cycles


def _simple_paths(g: Digraph, src, dst) -> list[tuple[Arc, ...]]:
    """Simple paths src -> dst (no repeated intermediate node, dst visited once)."""
    out = {node: [] for node in g.nodes}
    for a in g.arcs:
        out[a.src].append(a)
    paths: list[tuple[Arc, ...]] = []

    def dfs(node, path, visited):
        for a in out[node]:
            if a.dst == dst:
                paths.append(tuple(path + [a]))
            elif a.dst not in visited and a.dst != src:
                visited.add(a.dst)
                dfs(a.dst, path + [a], visited)
                visited.discard(a.dst)

    if src == dst:
        return []
    dfs(src, [], {src})
    return paths


def enumerate_cycles(g: Digraph) -> dict:
    """Partition simple cycles and list candidate common-node data."""
    zero = ()
    all_cycles = simple_cycles(g)
    inner = [cy for cy in all_cycles if zero not in cy.node_set]
    through_zero = [cy for cy in all_cycles if zero in cy.node_set]
    return {"inner": inner, "zero": through_zero}


def common_circuits(g: Digraph, node) -> list[Cycle]:
    """Concatenations of a simple path zero->node and one node->zero."""
    outward = _simple_paths(g, (), node)
    inward = _simple_paths(g, node, ())
    return [Cycle(a + b) for a in outward for b in inward]


def outer_cycles(g: Digraph, node, through_zero) -> list[Cycle]:
    return [cy for cy in through_zero if node not in cy.node_set]


def classify_structure(g: Digraph) -> CycleStructure:
    """Pick the applicable recursion class from the cycle structure."""
    parts = enumerate_cycles(g)
    inner = parts["inner"]
    through_zero = parts["zero"]
    if not inner:
        return CycleStructure(StructureClass.NO_INNER_CYCLES, ())
    # common node: a node on every inner cycle, first in BFS order
    shared = frozenset.intersection(*(cy.node_set for cy in inner))
    if shared:
        node = min(shared, key=g.bfs_index)
        return CycleStructure(
            StructureClass.COMMON_NODE,
            tuple(inner),
            tuple(outer_cycles(g, node, through_zero)),
            tuple(common_circuits(g, node)),
            node,
        )
    structure = _match_four_inner_two_errant(g, inner, through_zero)
    if structure is not None:
        return structure
    return CycleStructure(StructureClass.OTHER, tuple(inner))


def _match_four_inner_two_errant(g, inner, through_zero):
    """Test the 4-inner-cycle, 2-errant-loop hypothesis and label the data.

    Inner cycles 1 and 2 pass through the pseudo-common node; errant
    loop 3 sits on a node of cycle 1 and errant loop 4 on a node of
    cycle 2.  Common circuit i must leave the pseudo-common node by the
    same arc as cycle i.
    """
    if len(inner) != 4:
        return None
    loops = [cy for cy in inner if len(cy.arcs) == 1]
    big = [cy for cy in inner if len(cy.arcs) > 1]
    if len(loops) != 2 or len(big) != 2:
        return None
    loop_nodes = {next(iter(cy.node_set)) for cy in loops}
    shared = frozenset.intersection(*(cy.node_set for cy in big)) - loop_nodes
    if not shared:
        return None
    node = min(shared, key=g.bfs_index)
    # attach each errant loop to the unique non-loop inner cycle its node lies on
    attachment = []
    for loop in loops:
        ln = next(iter(loop.node_set))
        hosts = [i for i, cy in enumerate(big) if ln in cy.node_set]
        if len(hosts) != 1:
            return None
        attachment.append(hosts[0])
    if sorted(attachment) != [0, 1]:
        return None
    errant = [None, None]
    for loop, host in zip(loops, attachment):
        errant[host] = loop
    circuits = common_circuits(g, node)
    if len(circuits) != 2:
        return None
    # match circuit i to inner cycle i by the arc leaving the node
    def exit_arc(cycle_arcs):
        for a in cycle_arcs:
            if a.src == node:
                return a
        return None

    ordered = []
    for cy in big:
        matches = [c for c in circuits if exit_arc(c.arcs) == exit_arc(cy.arcs)]
        if len(matches) != 1:
            return None
        ordered.append(matches[0])
    if ordered[0] == ordered[1]:
        return None
    return CycleStructure(
        StructureClass.FOUR_INNER_TWO_ERRANT,
        tuple(big),
        tuple(outer_cycles(g, node, through_zero)),
        tuple(ordered),
        node,
        tuple(errant),
    )


def enumerate_metatiles(g: Digraph, max_len: int) -> list[tuple[int, int, str]]:
    """First-return walks at the zero node with total length <= max_len.

    Returns (length, comb count, arc word) triples sorted by length then
    word.  Terminates because comb arcs always add length and square
    arcs strictly shrink the gap string.
    """
    out = {node: [] for node in g.nodes}
    for a in g.arcs:
        out[a.src].append(a)
    found: list[tuple[int, int, str]] = []

    def walk(node, length, combs, word):
        for a in out[node]:
            new_len = length + a.inc
            if new_len > max_len:
                continue
            if a.dst == ():
                found.append((new_len, combs + a.combs, word + a.label()))
            else:
                walk(a.dst, new_len, combs + a.combs, word + a.label())

    walk((), 0, 0, "")
    return sorted(found)


def node_label(node: tuple[int, ...]) -> str:
    """Paper-style label: leading zero runs of length >= 2 rendered 0^k."""
    if not node:
        return "0"
    zeros = 0
    while zeros < len(node) and node[zeros] == 0:
        zeros += 1
    rest = "".join(map(str, node[zeros:]))
    if zeros >= 2:
        return f"0^{zeros}{rest}"
    return "0" * zeros + rest


def export_dot(g: Digraph) -> str:
    """Deterministic DOT text with paper-style node and arc labels."""
    lines = ["digraph metatiles {", "  rankdir=LR;"]
    for node in g.nodes:
        lines.append(f'  "{node_label(node)}";')
    for a in g.arcs:
        lines.append(
            f'  "{node_label(a.src)}" -> "{node_label(a.dst)}" '
            f'[label="{a.label()}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: Digraph) -> str:
    """JSON dump of nodes, arcs, and cycle data."""
    cs = classify_structure(g)
    parts = enumerate_cycles(g)

    def cyc(cy: Cycle) -> dict:
        return {"length": cy.length, "combs": cy.combs, "word": cy.word()}

    doc = {
        "nodes": [node_label(n) for n in g.nodes],
        "arcs": [
            {
                "src": node_label(a.src),
                "dst": node_label(a.dst),
                "kind": a.kind,
                "inc": a.inc,
                "combs": a.combs,
            }
            for a in g.arcs
        ],
        "inner_cycles": [cyc(c) for c in parts["inner"]],
        "outer_cycles": [cyc(c) for c in cs.outer],
        "common_circuits": [cyc(c) for c in cs.circuits],
        "class": cs.tag.value,
    }
    return json.dumps(doc, indent=2) + "\n"
