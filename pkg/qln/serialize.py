"""
Serialization formats.

JSON is the machine format, text is for people, DOT only for graphs.
Orders are written as Hasse covers [greater, lesser]; DOT arrows point
from greater to lesser.
"""

import json
import re
from typing import Any, Dict, Iterable, List, Optional, Union

from errors import ParseError, RangeMismatch
from gluing import AdmissibleSequence, BlockDecomposition
from nakayama import AlgebraSpec, BasicModule, IntervalModule, make_algebra, make_module
from poset import PartialOrder
from tilting import TiltPoset
from trees import BinaryTree

INLINE_PATTERN = re.compile(r'^\s*(\d+)\s*:\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)$')


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + '\n'


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e


# -- algebras ---------------------------------------------------------------

def algebra_to_dict(algebra: AlgebraSpec) -> Dict[str, Any]:
    return {'vertices': algebra.n, 'relations': list(algebra.relations)}


def algebra_from_dict(data: Dict[str, Any]) -> AlgebraSpec:
    try:
        return make_algebra(int(data['vertices']), [int(r) for r in data.get('relations', [])])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid algebra description: {e}") from e


def parse_inline(spec: str) -> AlgebraSpec:
    """``n:l1,l2`` with an empty relation list allowed (``n:``)."""
    match = INLINE_PATTERN.match(spec)
    if not match:
        raise ParseError(f"inline algebra must look like 'n:l1,l2', got {spec!r}")
    relations = [int(r) for r in match.group(2).split(',') if r.strip()]
    return make_algebra(int(match.group(1)), relations)


def load_algebra(text: str) -> AlgebraSpec:
    return algebra_from_dict(load_json(text))


# -- modules ----------------------------------------------------------------

def module_to_list(module: BasicModule) -> List[List[int]]:
    return module.to_list()


def parse_interval(data: Any, algebra: Optional[AlgebraSpec] = None) -> IntervalModule:
    if not (isinstance(data, list) and len(data) == 2 and all(isinstance(x, int) for x in data)):
        raise ParseError(f"an interval is a pair [a, b], got {data!r}")
    module = IntervalModule(data[0], data[1])
    if algebra is not None:
        algebra.check_module(module)
    return module


def parse_modules(text: str, algebra: Optional[AlgebraSpec] = None) -> BasicModule:
    """JSON interval list; with an algebra every summand must be a module over it."""
    data = load_json(text)
    if not isinstance(data, list):
        raise ParseError("a module list is a JSON array of intervals")
    intervals = [parse_interval(item) for item in data]
    if algebra is None:
        return BasicModule.of(intervals)
    return make_module(algebra, ((m.top, m.socle) for m in intervals))


def module_text(module: BasicModule) -> str:
    return str(module)


# -- orders -----------------------------------------------------------------

def order_to_dict(order: PartialOrder) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    if order.lo == 1:
        data['n'] = order.hi
    else:
        data['range'] = [order.lo, order.hi]
    data['covers'] = [[greater, lesser] for greater, lesser in order.covers()]
    return data


def order_from_dict(data: Dict[str, Any]) -> PartialOrder:
    try:
        if 'range' in data:
            lo, hi = (int(x) for x in data['range'])
        else:
            lo, hi = 1, int(data['n'])
        covers = [(int(g), int(l)) for g, l in data.get('covers', [])]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid order description: {e}") from e
    if lo > hi:
        raise RangeMismatch(f"empty order range [{lo},{hi}]")
    return PartialOrder.from_covers(lo, hi, covers)


def parse_order(text: str, n: int) -> PartialOrder:
    """JSON order, or text covers ``g>l g>l`` on [1, n]."""
    stripped = text.strip()
    if stripped.startswith('{'):
        order = order_from_dict(load_json(stripped))
        if (order.lo, order.hi) != (1, n):
            raise RangeMismatch(f"order on [{order.lo},{order.hi}] does not match the vertices [1,{n}]")
        return order
    covers = []
    for token in stripped.replace(',', ' ').split():
        parts = token.split('>')
        if len(parts) < 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"order covers look like '2>1', got {token!r}")
        # a chain token 3>2>1 lists consecutive covers
        covers.extend((int(g), int(l)) for g, l in zip(parts, parts[1:]))
    return PartialOrder.from_covers(1, n, covers)


# -- trees and sequences ----------------------------------------------------

def tree_to_dict(tree: BinaryTree) -> Dict[str, Any]:
    return tree.to_dict()


def parse_tree(text: str) -> BinaryTree:
    data = load_json(text)
    try:
        return BinaryTree.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid tree: {e}") from e


def sequence_to_list(sequence: AdmissibleSequence) -> List[Dict[str, Any]]:
    return sequence.to_list()


def parse_sequence(text: str) -> AdmissibleSequence:
    data = load_json(text)
    try:
        return AdmissibleSequence.from_list(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid admissible sequence: {e}") from e


def decomposition_text(decomposition: BlockDecomposition) -> str:
    return str(decomposition)


# -- DOT --------------------------------------------------------------------

def _quote(value: Union[int, str]) -> str:
    return '"' + str(value).replace('"', '\\"') + '"'


def emit_dot(graph: Union[TiltPoset, PartialOrder], name: str = '') -> str:
    """Directed graph text with stable node identifiers."""
    lines: List[str] = []

    def write_line(text: str, indent: int = 0) -> None:
        lines.append('  ' * indent + text)

    if isinstance(graph, TiltPoset):
        write_line(f"digraph {name or 'tilt'} {{")
        for index, element in enumerate(graph.elements):
            write_line(f"{_quote(index)} [label={_quote(element)}];", 1)
        for source, target, module in graph.edges:
            write_line(f"{_quote(source)} -> {_quote(target)} [label={_quote(module)}];", 1)
    else:
        write_line(f"digraph {name or 'order'} {{")
        for vertex in graph.vertices():
            write_line(f"{_quote(vertex)};", 1)
        for greater, lesser in graph.covers():
            write_line(f"{_quote(greater)} -> {_quote(lesser)};", 1)
    write_line('}')
    return '\n'.join(lines) + '\n'


def lines_text(items: Iterable[Any]) -> str:
    return ''.join(f"{item}\n" for item in items)
