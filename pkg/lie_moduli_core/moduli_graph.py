"""
The moduli space of four dimensional Lie algebras as a static graph of
jump and smooth deformations.

Nodes are singletons, special points, the three special lines of the big
family, and the generic members of the three families. Each node has a
level; every edge goes from a node to one at the same or a higher level.
A family edge marked onto_family reaches every member of the target family
(d1 jumps onto the whole small family, d2* onto the whole big family).
"""
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from .catalog import (on_repeated_line, on_sum_line, on_trace_free_line, on_zero_line, parse_point_spec,
                      spec_form)
from .classifier import classify
from .cochains import parse_cochain
from .exceptions import UnknownPointSpecError
from .points import D1_FAMILY, D3_BIG, D3_SMALL, ModuliPoint
from . import config as core_config

JUMP = 'jump'
SMOOTH = 'smooth'

POINT = 'point'
LINE = 'line'
FAMILY = 'family'


class GraphNode:
    """
    A stratum of the moduli space.

    :param family: the family node this stratum lies in, for points and lines.
    :param representative: point-spec of a member, used for standard forms.
    """

    def __init__(self, name: str, level: int, kind: str = POINT,
                 family: Optional[str] = None, representative: Optional[str] = None):
        self.name: str = name
        self.level: int = level
        self.kind: str = kind
        self.family: Optional[str] = family
        self.representative: str = representative or name

    def to_dict(self) -> Dict[str, object]:
        return {'name': self.name, 'level': self.level, 'kind': self.kind, 'family': self.family,
                'representative': self.representative}

    def __repr__(self) -> str:
        return f"GraphNode({self.name}, level={self.level}, kind={self.kind})"


class EdgeWitness:
    """
    source_spec + perturbation classifies into the target stratum.
    """

    def __init__(self, source_spec: str, perturbation: str, target_spec: str):
        self.source_spec: str = source_spec
        self.perturbation: str = perturbation
        self.target_spec: str = target_spec

    def deformed_point(self) -> ModuliPoint:
        d = spec_form(self.source_spec).perturb(parse_cochain(self.perturbation, 4))
        return classify(d)

    def __repr__(self) -> str:
        return f"EdgeWitness({self.source_spec} + {self.perturbation} -> {self.target_spec})"


class Edge:
    def __init__(self, source: str, target: str, kind: str = JUMP,
                 onto_family: bool = False, witness: Optional[EdgeWitness] = None):
        if kind not in (JUMP, SMOOTH):
            raise ValueError(f"Unknown edge kind: {kind}")
        self.source: str = source
        self.target: str = target
        self.kind: str = kind
        self.onto_family: bool = onto_family
        self.witness: Optional[EdgeWitness] = witness

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {'source': self.source, 'target': self.target, 'kind': self.kind,
                                  'onto_family': self.onto_family}
        if self.witness is not None:
            out['witness'] = f"{self.witness.source_spec} + {self.witness.perturbation}"
        return out

    def __repr__(self) -> str:
        onto = ', onto' if self.onto_family else ''
        return f"Edge({self.source} -> {self.target}, {self.kind}{onto})"


NODES: List[GraphNode] = [
    GraphNode('d1', 0),
    GraphNode('d2*', 1),
    GraphNode('d3*', 1),
    GraphNode(D3_SMALL, 2, FAMILY, representative='d3(1:3)'),
    GraphNode('d3(1:0)', 2, family=D3_SMALL),
    GraphNode('d3(0:1)', 2, family=D3_SMALL),
    GraphNode('d3(1:1)', 2, family=D3_SMALL),
    GraphNode('d3(1:2)', 2, family=D3_SMALL),
    GraphNode('d3(1:-2)', 2, family=D3_SMALL),
    GraphNode(D3_BIG, 3, FAMILY, representative='d3(1:2:5)'),
    GraphNode('d3(l:m:l+m)', 3, LINE, family=D3_BIG, representative='d3(1:2:3)'),
    GraphNode('d3(l:m:0)', 3, LINE, family=D3_BIG, representative='d3(1:3:0)'),
    GraphNode('d3(l:m:-l-m)', 3, LINE, family=D3_BIG, representative='d3(1:2:-3)'),
    GraphNode('d3(l:l:m)', 3, LINE, family=D3_BIG, representative='d3(1:1:3)'),
    GraphNode('d3(1:1:0)', 3, family=D3_BIG),
    GraphNode('d3(1:-1:0)', 3, family=D3_BIG),
    GraphNode('d3(1:0:0)', 3, family=D3_BIG),
    GraphNode('d3(1:1:1)', 3, family=D3_BIG),
    GraphNode('d3(1:1:2)', 3, family=D3_BIG),
    GraphNode('d3(1:1:-2)', 3, family=D3_BIG),
    GraphNode('d1#', 3),
    GraphNode(D1_FAMILY, 4, FAMILY, representative='d1(1:2)'),
    GraphNode('d1(1:-1)', 4, family=D1_FAMILY),
    GraphNode('d1(1:0)', 4, family=D1_FAMILY),
    GraphNode('d1(1:1)', 4, family=D1_FAMILY),
    GraphNode('d3', 5),
    GraphNode('d2#', 5),
]

_FAMILY_NODES = (D3_SMALL, D3_BIG, D1_FAMILY)


def _jump(source: str, target: str, onto_family: bool = False, witness: Optional[Tuple[str, str, str]] = None) -> Edge:
    return Edge(source, target, JUMP, onto_family, EdgeWitness(*witness) if witness else None)


def _smooth(source: str, *targets: str) -> List[Edge]:
    return [Edge(source, target, SMOOTH) for target in targets]


def _d1_edges() -> List[Edge]:
    """d1 jumps to every stratum except d3*."""
    witnesses = {
        'd2*': ('d1', 'psi^{14}_3', 'd2*'),
        'd3(0:1)': ('d1', 'psi^{14}_1', 'd3(0:1)'),
        'd3(1:0)': ('d1', 'psi^{14}_1 + psi^{34}_3', 'd3(1:0)'),
    }
    return [_jump('d1', node.name, node.name in _FAMILY_NODES, witnesses.get(node.name))
            for node in NODES if node.name not in ('d1', 'd3*')]


EDGES: List[Edge] = [
    *_d1_edges(),

    _jump('d2*', D3_BIG, onto_family=True),
    _jump('d2*', D1_FAMILY, onto_family=True),
    _jump('d2*', 'd1(1:-1)'),
    _jump('d2*', 'd1(1:0)'),
    _jump('d2*', 'd3(1:-1:0)'),
    _jump('d2*', 'd3(1:1:0)'),
    _jump('d2*', 'd2#'),
    _jump('d2*', 'd3'),

    _jump('d3*', 'd3(1:1:1)', witness=('d3*', 'psi^{24}_1 + psi^{34}_2', 'd3(1:1:1)')),
    _jump('d3*', 'd3(1:1)', witness=('d3*', 'psi^{34}_2', 'd3(1:1)')),
    *_smooth('d3*', D3_SMALL, D3_BIG),

    _jump(D3_SMALL, 'd3(l:l:m)', witness=('d3(1:3)', 'psi^{14}_2', 'd3(1:1:3)')),
    *_smooth(D3_SMALL, D3_BIG),
    _jump('d3(1:0)', 'd3(1:1:0)', witness=('d3(1:0)', 'psi^{24}_1', 'd3(1:1:0)')),
    _jump('d3(1:0)', 'd1(1:0)'),
    _jump('d3(1:0)', 'd2#'),
    *_smooth('d3(1:0)', D3_SMALL, D3_BIG, D1_FAMILY),
    _jump('d3(0:1)', 'd3(1:0:0)', witness=('d3(0:1)', 'psi^{24}_1', 'd3(1:0:0)')),
    _jump('d3(0:1)', 'd2#'),
    *_smooth('d3(0:1)', D3_SMALL, D3_BIG),
    _jump('d3(1:1)', 'd3(1:1:1)', witness=('d3(1:1)', 'psi^{24}_1', 'd3(1:1:1)')),
    *_smooth('d3(1:1)', D3_SMALL, D3_BIG),
    _jump('d3(1:2)', 'd3(1:1:2)', witness=('d3(1:2)', 'psi^{14}_2', 'd3(1:1:2)')),
    _jump('d3(1:2)', 'd1#'),
    _jump('d3(1:2)', 'd1(1:1)'),
    *_smooth('d3(1:2)', D3_SMALL, D3_BIG, D1_FAMILY),
    _jump('d3(1:-2)', 'd3(1:1:-2)', witness=('d3(1:-2)', 'psi^{24}_1', 'd3(1:1:-2)')),
    *_smooth('d3(1:-2)', D3_SMALL, D3_BIG),

    # Each point of the line jumps to the matching point of the d1 family.
    _jump('d3(l:m:l+m)', D1_FAMILY),
    *_smooth('d3(l:m:l+m)', D3_BIG),
    _jump('d3(l:m:0)', 'd2#'),
    *_smooth('d3(l:m:0)', D3_BIG),
    *_smooth('d3(l:m:-l-m)', D3_BIG),
    *_smooth('d3(l:l:m)', D3_BIG),
    _jump('d3(1:1:0)', 'd1(1:0)', witness=('d3(1:1:0)', 'psi^{13}_1 + psi^{23}_2', 'd1(1:0)')),
    _jump('d3(1:1:0)', 'd2#'),
    *_smooth('d3(1:1:0)', D3_BIG, D1_FAMILY),
    _jump('d3(1:-1:0)', 'd1(1:-1)'),
    _jump('d3(1:-1:0)', 'd3'),
    _jump('d3(1:-1:0)', 'd2#'),
    *_smooth('d3(1:-1:0)', D3_BIG, D1_FAMILY),
    _jump('d3(1:0:0)', 'd2#'),
    *_smooth('d3(1:0:0)', D3_BIG),
    *_smooth('d3(1:1:1)', D3_BIG),
    _jump('d3(1:1:2)', 'd1(1:1)'),
    *_smooth('d3(1:1:2)', D3_BIG, D1_FAMILY),
    *_smooth('d3(1:1:-2)', D3_BIG),

    _jump('d1#', 'd1(1:1)', witness=('d1#', 'psi^{24}_3 - psi^{34}_2 + 2*psi^{14}_1 + 2*psi^{34}_3', 'd1(1:1)')),
    *_smooth('d1#', D1_FAMILY),

    _jump('d1(1:-1)', 'd3', witness=('d1(1:-1)', '1/2*psi^{23}_4', 'd3')),
    *_smooth('d1(1:-1)', D1_FAMILY),
    _jump('d1(1:0)', 'd2#', witness=('d1(1:0)', '1/2*psi^{13}_2', 'd2#')),
    *_smooth('d1(1:0)', D1_FAMILY),
    *_smooth('d1(1:1)', D1_FAMILY),
]


@lru_cache(maxsize=None)
def _node_point(spec: str) -> ModuliPoint:
    return parse_point_spec(spec)


_LINES = (
    ('d3(l:m:l+m)', on_sum_line),
    ('d3(l:m:0)', on_zero_line),
    ('d3(l:m:-l-m)', on_trace_free_line),
    ('d3(l:l:m)', on_repeated_line),
)


class DeformationGraph:
    """Immutable view over a node and edge list."""

    def __init__(self, nodes: Sequence[GraphNode] = NODES, edges: Sequence[Edge] = EDGES):
        self.nodes: Dict[str, GraphNode] = {node.name: node for node in nodes}
        self.edges: Tuple[Edge, ...] = tuple(edges)
        for edge in self.edges:
            for end in (edge.source, edge.target):
                if end not in self.nodes:
                    raise ValueError(f"Edge {edge!r} refers to unknown node {end}")

    def node(self, name: str) -> GraphNode:
        if name not in self.nodes:
            raise UnknownPointSpecError(f"{name!r} is not a node of the moduli graph")
        return self.nodes[name]

    def node_for_point(self, point: ModuliPoint) -> str:
        """The most special stratum containing point."""
        if point.dimension != 4:
            raise UnknownPointSpecError(f"The moduli graph covers dimension 4, got {point.label}")
        for node in self.nodes.values():
            if node.kind == POINT and node.family is not None and _node_point(node.name) == point:
                return node.name
        if point.family == D3_BIG:
            for name, on_line in _LINES:
                if on_line(point):
                    return name
        if point.family in self.nodes:
            return point.family
        raise UnknownPointSpecError(f"{point.label} is not a node of the moduli graph")

    def _resolve(self, where: Union[str, ModuliPoint]) -> str:
        if isinstance(where, ModuliPoint):
            return self.node_for_point(where)
        return self.node(where).name

    def out_edges(self, where: Union[str, ModuliPoint], kind: Optional[str] = None) -> List[Edge]:
        name = self._resolve(where)
        return [e for e in self.edges if e.source == name and (kind is None or e.kind == kind)]

    def jump_targets(self, where: Union[str, ModuliPoint]) -> List[str]:
        return [e.target for e in self.out_edges(where, JUMP)]

    def smooth_targets(self, where: Union[str, ModuliPoint]) -> List[str]:
        return [e.target for e in self.out_edges(where, SMOOTH)]

    def members(self, family: str) -> List[str]:
        return [node.name for node in self.nodes.values() if node.family == family]

    def covers(self, source: str, target: str) -> bool:
        """source deforms to target directly, possibly through an onto_family edge."""
        for edge in self.out_edges(source):
            if edge.target == target:
                return True
            if edge.onto_family and self.nodes[target].family == edge.target:
                return True
        return False

    def reachable(self, where: Union[str, ModuliPoint]) -> Set[str]:
        """Every stratum reached by a chain of deformations, members of onto families included."""
        start = self._resolve(where)
        seen: Set[str] = set()
        stack = [start]
        while stack:
            current = stack.pop()
            for edge in self.out_edges(current):
                targets = [edge.target] + (self.members(edge.target) if edge.onto_family else [])
                for target in targets:
                    if target not in seen:
                        seen.add(target)
                        stack.append(target)
        return seen

    def check_closure(self) -> List[Tuple[str, str, str]]:
        """
        (source, via, missing) for each jump source -> via where via deforms
        to something source does not. An onto_family jump checks every member.
        """
        problems = []
        for edge in self.edges:
            if edge.kind != JUMP:
                continue
            vias = [edge.target] + (self.members(edge.target) if edge.onto_family else [])
            for via in vias:
                for onward in self.out_edges(via):
                    if onward.target != edge.source and not self.covers(edge.source, onward.target):
                        problems.append((edge.source, via, onward.target))
        return problems

    def check_levels(self) -> List[Edge]:
        """Edges going down in level."""
        return [e for e in self.edges if self.nodes[e.target].level < self.nodes[e.source].level]

    def verify_edge_witnesses(self) -> List[Tuple[Edge, str]]:
        """
        Re-classifies every witness. Returns (edge, node reached) for the
        ones that land outside the edge's target or start outside its source.
        """
        failures = []
        for edge in self.edges:
            if edge.witness is None:
                continue
            start = self.node_for_point(_node_point(edge.witness.source_spec))
            reached = self.node_for_point(edge.witness.deformed_point())
            target_ok = reached == edge.target or (edge.onto_family and self.nodes[reached].family == edge.target)
            if start != edge.source or not target_ok:
                print(f"WARN: witness {edge.witness!r} reached {reached} from {start}, expected {edge!r}")
                failures.append((edge, reached))
            elif core_config.LOG_LEVEL == "DEBUG":
                print(f"DEBUG: witness {edge.witness!r} confirmed")
        return failures

    def neighbors(self, where: Union[str, ModuliPoint]) -> Dict[str, object]:
        name = self._resolve(where)
        return {
            'node': self.nodes[name].to_dict(),
            'jump': [e.to_dict() for e in self.out_edges(name, JUMP)],
            'smooth': [e.to_dict() for e in self.out_edges(name, SMOOTH)],
        }

    def to_dict(self) -> Dict[str, object]:
        return {'nodes': [n.to_dict() for n in self.nodes.values()], 'edges': [e.to_dict() for e in self.edges]}

    def emit_graph_dot(self, name: str = core_config.DEFAULT_DOT_GRAPH_NAME) -> str:
        """
        DOT digraph, levels drawn bottom to top. Jump edges are solid and bold,
        smooth ones dashed; onto_family jumps are labelled 'onto'.
        """
        lines = [f'digraph "{name}" {{', '  rankdir=BT;', '  node [shape=box, fontname="Helvetica"];']
        for level in sorted({node.level for node in self.nodes.values()}):
            members = ' '.join(f'"{n.name}";' for n in self.nodes.values() if n.level == level)
            lines.append(f'  {{ rank=same; {members} }}')
        for node in self.nodes.values():
            shape = 'ellipse' if node.kind == FAMILY else ('box' if node.kind == POINT else 'hexagon')
            lines.append(f'  "{node.name}" [shape={shape}];')
        for edge in self.edges:
            if edge.kind == JUMP:
                attrs = 'style=bold' + (', label="onto"' if edge.onto_family else '')
            else:
                attrs = 'style=dashed'
            lines.append(f'  "{edge.source}" -> "{edge.target}" [{attrs}];')
        lines.append('}')
        return '\n'.join(lines) + '\n'


DEFAULT_GRAPH = DeformationGraph()


def jump_targets(point: Union[str, ModuliPoint]) -> List[str]:
    return DEFAULT_GRAPH.jump_targets(point)


def smooth_targets(point: Union[str, ModuliPoint]) -> List[str]:
    return DEFAULT_GRAPH.smooth_targets(point)


def emit_graph_dot(name: str = core_config.DEFAULT_DOT_GRAPH_NAME) -> str:
    return DEFAULT_GRAPH.emit_graph_dot(name)


def verify_edge_witnesses() -> List[Tuple[Edge, str]]:
    return DEFAULT_GRAPH.verify_edge_witnesses()
