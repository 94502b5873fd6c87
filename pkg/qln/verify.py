"""
Bundled verification suite.

Every check compares two independent computations (or a computation and a
known value) and reports a CheckResult; ``run_verify`` exits clean only if
all of them pass. Per-algebra checks can fan out over a process pool.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

import config
from counting import (
    catalan,
    classify_decomposition,
    count_qhs_nodal,
    count_tilt_recursive,
    fiber_matches_order,
    last_relation,
    lemma_subcounts,
    sink_restriction,
    sink_removed,
)
from errors import QLNError
from gluing import (
    admissible_from_tilting,
    admissible_sequences,
    admissible_validate_assemble,
    block_decomposition,
    gluing_conditions,
)
from homological import homdims, is_tilting
from nakayama import (
    AlgebraSpec,
    IntervalModule,
    all_algebras,
    make_algebra,
    make_module,
    path_algebra,
    radical_square_zero,
    subalgebra,
)
from poset import PartialOrder
from qhs import (
    brauer_humphreys_holds,
    char_tilting,
    enumerate_qhs,
    labeling_is_adapted,
    minimal_adapted_order,
    order_from_tilting,
    total_order_oracle,
)
from tilting import enumerate_tilting, tilt_hasse
from trees import tilting_to_tree

RUNNING_EXAMPLE = (10, (5, 6, 7, 9))
RUNNING_EXAMPLE_COVERS = '2>1 2>3 4>2 4>5 5>6 7>6 8>7 8>9 9>10'
RUNNING_EXAMPLE_BLOCKS = 'path[1,5] bang[5,7] path[7,9] path[9,10]'
RUNNING_EXAMPLE_COUNT = 266


class CheckResult(NamedTuple):
    criterion: str
    subject: str
    passed: bool
    detail: str = ''

    def __str__(self) -> str:
        status = 'ok' if self.passed else 'FAIL'
        suffix = f": {self.detail}" if self.detail else ''
        return f"{status} [{self.criterion}] {self.subject}{suffix}"


class VerifyReport(NamedTuple):
    max_n: int
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        return f"{len(self.results) - len(self.failures)}/{len(self.results)} checks passed (max n = {self.max_n})"


def _run(criterion: str, subject: str, check: Callable[[], Optional[str]]) -> CheckResult:
    """A check returns None on success or a failure description."""
    try:
        problem = check()
    except QLNError as e:
        return CheckResult(criterion, subject, False, f"{e.name}: {e}")
    return CheckResult(criterion, subject, problem is None, problem or '')


def _expect(actual, expected, what: str) -> Optional[str]:
    if actual != expected:
        return f"{what}: expected {expected}, got {actual}"
    return None


# ---------------------------------------------------------------------------
# global checks
# ---------------------------------------------------------------------------

def check_catalan(max_n: int) -> List[CheckResult]:
    """Path algebras have C_n tilting modules."""
    results = []
    for n in range(1, min(max_n, 10) + 1):
        algebra = path_algebra(n)

        def check(algebra=algebra, n=n) -> Optional[str]:
            expected = catalan(n)
            counts = {'recursion': count_tilt_recursive(algebra)}
            if n <= 9:
                counts['mutation'] = len(enumerate_tilting(algebra))
            if n <= 7:
                counts['exhaustive'] = len(enumerate_tilting(algebra, strategy='exhaustive'))
            wrong = {k: v for k, v in counts.items() if v != expected}
            return f"expected {expected}, got {wrong}" if wrong else None

        results.append(_run('catalan', algebra.label, check))
    return results


def check_radical_square_zero(max_n: int) -> List[CheckResult]:
    """n tilting modules, mutation quiver a path."""
    results = []
    for n in range(2, min(max_n, 10) + 1):
        algebra = radical_square_zero(n)

        def check(algebra=algebra, n=n) -> Optional[str]:
            poset = tilt_hasse(algebra)
            if len(poset.elements) != n:
                return f"expected {n} tilting modules, got {len(poset.elements)}"
            if not nx.is_isomorphic(poset.to_graph().to_undirected(), nx.path_graph(n)):
                return "mutation quiver is not a path"
            return None

        results.append(_run('radical-square-zero', algebra.label, check))
    return results


def check_known_values(max_n: int) -> List[CheckResult]:
    results = []
    if max_n >= 3:
        results.append(_run('fibers', '3:2', lambda: _expect(
            _fiber_sizes(make_algebra(3, [2])), (2, 1), 'fiber sizes')))
        results.append(_run('fibers', '3:', lambda: _expect(
            _fiber_sizes(path_algebra(3)), (2, 1, 2), 'fiber sizes')))
    if max_n >= 5:
        results.append(_run('examples', 'binary tree 5:', _check_tree_example))
    if max_n >= 10:
        n, relations = RUNNING_EXAMPLE
        algebra = make_algebra(n, relations)
        results.append(_run('recursion', algebra.label, lambda: _expect(
            count_tilt_recursive(algebra), RUNNING_EXAMPLE_COUNT, 'count')))
        results.append(_run('examples', algebra.label, lambda: _check_running_example(algebra)))
    return results


def _fiber_sizes(algebra: AlgebraSpec) -> Tuple[int, ...]:
    sizes = {}
    for tilting in enumerate_tilting(algebra):
        index = classify_decomposition(algebra, tilting)
        sizes[index] = sizes.get(index, 0) + 1
    return tuple(sizes[i] for i in sorted(sizes))


def _check_tree_example() -> Optional[str]:
    tilting = make_module(path_algebra(5), [(1, 1), (1, 3), (3, 3), (1, 5), (5, 5)])
    tree = tilting_to_tree(1, 5, tilting)
    _, order = order_from_tilting(path_algebra(5), tilting)
    return (_expect(tree.edges(), [(2, 1), (2, 3), (4, 2), (4, 5)], 'tree edges')
            or _expect(str(order), '2>1 2>3 4>2 4>5', 'minimal adapted order'))


def _check_running_example(algebra: AlgebraSpec) -> Optional[str]:
    decomposition = block_decomposition(algebra)
    problem = _expect(str(decomposition), RUNNING_EXAMPLE_BLOCKS, 'blocks')
    if problem:
        return problem
    sequence = None
    for candidate in admissible_sequences(algebra):
        order, _ = admissible_validate_assemble(algebra, candidate)
        if str(order) == RUNNING_EXAMPLE_COVERS:
            sequence = candidate
            break
    if sequence is None:
        return f"no admissible sequence assembles to {RUNNING_EXAMPLE_COVERS}"
    order, tilting = admissible_validate_assemble(algebra, sequence)
    _, extracted = order_from_tilting(algebra, tilting)
    return (_expect(str(extracted), RUNNING_EXAMPLE_COVERS, 'extracted order')
            or _expect(admissible_from_tilting(algebra, tilting), sequence, 'sequence round trip'))


def check_nodal(max_n: int) -> List[CheckResult]:
    """count_qhs_nodal against enumeration of the glued algebra, and N against the sink-free base."""
    limit = min(max_n, 9)
    results = []
    for b in range(1, limit):
        for base in all_algebras(b):
            for k in range(0, limit - b):
                for m in range(1, limit - b - k + 1):
                    def check(base=base, k=k, m=m) -> Optional[str]:
                        nodal = count_qhs_nodal(base, k, m)
                        problem = _expect(nodal.count, len(enumerate_qhs(nodal.glued)), 'nodal count')
                        if problem is None and nodal.sink_free is not None:
                            problem = _expect(nodal.below_predecessor, nodal.sink_free, 'sink-free count')
                        return problem

                    results.append(_run('nodal', f"{base.label} k={k} m={m}", check))
    return results


def check_lemma_subcounts(max_n: int) -> List[CheckResult]:
    results = []
    bound = min(6, max_n - 1)
    for k in range(1, bound + 1):
        for m in range(1, bound + 1):
            results.append(_run('sub-counts', f"k={k} m={m}", lambda k=k, m=m: _expect(
                lemma_subcounts(k, m), (1, k, catalan(m + 1), catalan(m)), 'sub-counts')))
    return results


# ---------------------------------------------------------------------------
# per-algebra checks
# ---------------------------------------------------------------------------

def _check_strategies(algebra: AlgebraSpec) -> Optional[str]:
    mutation = enumerate_tilting(algebra)
    exhaustive = enumerate_tilting(algebra, strategy='exhaustive')
    if mutation != exhaustive:
        return f"mutation found {len(mutation)}, exhaustive found {len(exhaustive)}"
    return None


def _check_extraction(algebra: AlgebraSpec, tiltings: Iterable) -> Optional[str]:
    for tilting in tiltings:
        labeled, order = order_from_tilting(algebra, tilting, check_branches=True)
        if char_tilting(algebra, order).module != tilting:
            return f"characteristic module of the order of {tilting} differs"
        if not labeling_is_adapted(labeled, order):
            return f"labeling of {tilting} is not adapted to {order}"
        if not order.hasse_is_tree():
            return f"Hasse diagram of {order} is not a tree"
    return None


def _check_oracle(algebra: AlgebraSpec, structures: frozenset) -> Optional[str]:
    oracle = total_order_oracle(algebra)
    if len(oracle.classes) != len(enumerate_tilting(algebra)):
        return f"{len(oracle.classes)} classes for {len(enumerate_tilting(algebra))} tilting modules"
    for order in oracle.classes.values():
        module = char_tilting(algebra, order).module
        if not is_tilting(algebra, module):
            return f"characteristic module {module} is not tilting"
    if frozenset(oracle.classes.values()) != structures:
        return "oracle classes differ from extracted structures"
    for order in structures:
        if not brauer_humphreys_holds(algebra, order):
            return f"reciprocity fails for {order}"
    return None


def _check_decomposition(algebra: AlgebraSpec) -> Optional[str]:
    tiltings = enumerate_tilting(algebra)
    ell = last_relation(algebra)
    seen = 0
    for tilting in tiltings:
        index = classify_decomposition(algebra, tilting)
        if not ell <= index <= algebra.n:
            return f"{tilting} classified outside [{ell},{algebra.n}]"
        _, order = order_from_tilting(algebra, tilting)
        if not fiber_matches_order(algebra, index, order):
            return f"{tilting} in fiber {index} but its order {order} disagrees"
        seen += 1
    if seen != len(tiltings):
        return "fibers do not cover the tilting set"
    return None


def _check_sink_restriction(algebra: AlgebraSpec) -> Optional[str]:
    n = algebra.n
    if homdims(algebra, algebra.simple(n))[1] > 1:
        return None
    with_sink = [t for t in enumerate_tilting(algebra) if IntervalModule(n, n) in t]
    images = {sink_restriction(algebra, t) for t in with_sink}
    if len(images) != len(with_sink):
        return "restriction is not injective"
    if images != set(enumerate_tilting(sink_removed(algebra))):
        return "restriction is not onto the tilting modules without the sink"
    return None


def _side_structure(side: AlgebraSpec, order: PartialOrder, offset: int) -> PartialOrder:
    """Minimal adapted order of a restricted order, in global numbering."""
    return minimal_adapted_order(side, order.shift(-offset)).shift(offset)


def _check_gluing(algebra: AlgebraSpec, structures: frozenset) -> Optional[str]:
    n = algebra.n
    for v in block_decomposition(algebra).cuts:
        left, right = subalgebra(algebra, 1, v), subalgebra(algebra, v, n)
        image = {
            (_side_structure(left, o.restrict(1, v), 0), _side_structure(right, o.restrict(v, n), v - 1))
            for o in structures
        }
        if len(image) != len(structures):
            return f"restriction at {v} is not injective"
        pairs = [
            (lo, ro.shift(v - 1))
            for lo in enumerate_qhs(left)
            for ro in enumerate_qhs(right)
        ]
        delta_pairs = {p for p in pairs if gluing_conditions(p[0], p[1], v)[0]}
        nabla_pairs = {p for p in pairs if gluing_conditions(p[0], p[1], v)[1]}
        if image != delta_pairs:
            return f"image at {v} differs from the (Delta) pairs"
        if image != nabla_pairs:
            return f"image at {v} differs from the (nabla) pairs"
    return None


def _check_hasse(algebra: AlgebraSpec) -> Optional[str]:
    poset = tilt_hasse(algebra)
    if poset.mutation_edges() != poset.hasse_edges_from_order(algebra):
        return "mutation quiver differs from the transitive reduction of the tilting order"
    return None


def check_algebra(n: int, relations: Tuple[int, ...], max_n: int,
                  sample: Optional[int] = None, seed: int = 0) -> List[CheckResult]:
    """All per-algebra checks for one algebra."""
    algebra = make_algebra(n, relations)
    label = algebra.label
    results = [_run('recursion', label, lambda: _expect(
        count_tilt_recursive(algebra), len(enumerate_tilting(algebra)), 'recursive count'))]

    tiltings = sorted(enumerate_tilting(algebra))
    if sample is not None and sample < len(tiltings):
        tiltings = random.Random(f"{seed}:{label}").sample(tiltings, sample)
    structures = enumerate_qhs(algebra)

    results.append(_run('qhs-count', label, lambda: _expect(
        len(structures), len(enumerate_tilting(algebra)), 'structure count')))
    if n <= min(max_n, 7):
        results.append(_run('strategies', label, lambda: _check_strategies(algebra)))
        results.append(_run('extraction', label, lambda: _check_extraction(algebra, tiltings)))
        results.append(_run('gluing', label, lambda: _check_gluing(algebra, structures)))
        if n >= 2:
            results.append(_run('decomposition', label, lambda: _check_decomposition(algebra)))
            results.append(_run('sink-restriction', label, lambda: _check_sink_restriction(algebra)))
    if n <= min(max_n, 6):
        results.append(_run('oracle', label, lambda: _check_oracle(algebra, structures)))
    if n <= min(max_n, 5):
        results.append(_run('hasse', label, lambda: _check_hasse(algebra)))
    return results


def _check_algebra_job(job: Tuple[int, Tuple[int, ...], int, Optional[int], int]) -> List[CheckResult]:
    return check_algebra(*job)


def run_verify(max_n: int, seed: int = 0, workers: Optional[int] = None,
               sample: Optional[int] = None) -> VerifyReport:
    """Run every check bounded by ``max_n``."""
    workers = workers or config.WORKERS
    config.log('Verify', f"max_n={max_n} workers={workers} {config.EngineConfig.describe()}")
    jobs = [
        (algebra.n, algebra.relations, max_n, sample, seed)
        for n in range(1, max_n + 1)
        for algebra in all_algebras(n)
    ]
    results: List[CheckResult] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_check_algebra_job, jobs):
                results.extend(chunk)
    else:
        for job in jobs:
            results.extend(_check_algebra_job(job))
            config.log('Verify', f"checked {job[0]}:{','.join(map(str, job[1]))}")

    results.extend(check_catalan(max_n))
    results.extend(check_radical_square_zero(max_n))
    results.extend(check_known_values(max_n))
    results.extend(check_nodal(max_n))
    results.extend(check_lemma_subcounts(max_n))
    report = VerifyReport(max_n, tuple(results))
    config.log('Verify', report.summary())
    return report
