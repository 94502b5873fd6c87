#!/usr/bin/env python3
"""
qln - quasi-hereditary structures of quadratic linear Nakayama algebras.

Usage:
    python cli.py tilt count --inline 5:
    python cli.py qhs count --inline 10:5,6,7,9
    python cli.py tilt hasse --inline 3:2 --format dot
    python cli.py verify --max-n 7
"""

import csv
import io
from functools import wraps
from typing import Any, Callable, Optional, Sequence

import click

import config
from counting import classify_decomposition, count_tilt_recursive, decomposition_fibers
from errors import QLNError, RangeMismatch
from gluing import (
    PATH,
    admissible_from_tilting,
    admissible_validate_assemble,
    block_decomposition,
    single_tree,
)
from nakayama import AlgebraSpec, all_algebras, indecomposables
from qhs import char_tilting, enumerate_qhs, order_from_tilting, total_order_oracle
from serialize import (
    decomposition_text,
    dump_json,
    emit_dot,
    lines_text,
    load_algebra,
    load_json,
    module_to_list,
    order_to_dict,
    parse_inline,
    parse_interval,
    parse_modules,
    parse_order,
    parse_sequence,
    parse_tree,
    sequence_to_list,
    tree_to_dict,
)
from store import CSV_HEADER, CountRecord, init_db
from tilting import enumerate_tilting, left_mutation, tilt_hasse
from trees import tree_tilting_bijection, tree_to_order
from verify import run_verify

FORMATS = ['json', 'text', 'dot']


def domain_errors(f: Callable) -> Callable:
    """Decorator turning domain errors into 'error: Name: message' and exit code 1."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except QLNError as e:
            click.echo(f"error: {e.name}: {e}", err=True)
            click.get_current_context().exit(1)
    return decorated_function


def algebra_options(f: Callable) -> Callable:
    """--algebra FILE | --inline SPEC plus --format."""
    f = click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json',
                     show_default=True, help='Output format.')(f)
    f = click.option('--inline', 'inline', help="Inline algebra 'n:l1,l2'.")(f)
    f = click.option('--algebra', 'algebra_file', type=click.File('r'),
                     help='Algebra JSON file.')(f)
    return f


def load_input(algebra_file, inline: Optional[str]) -> AlgebraSpec:
    if (algebra_file is None) == (inline is None):
        raise click.UsageError("give exactly one of --algebra FILE or --inline SPEC")
    if inline is not None:
        return parse_inline(inline)
    return load_algebra(algebra_file.read())


def read_value(value: str) -> str:
    """Option values starting with '@' name a file to read."""
    if value.startswith('@'):
        with open(value[1:], 'r', encoding='utf-8') as handle:
            return handle.read()
    return value


def require(value: Optional[str], flag: str) -> str:
    if value is None:
        raise click.UsageError(f"{flag} is required")
    return read_value(value)


def emit(fmt: str, payload: Any, text: str, dot: Optional[str] = None) -> None:
    if fmt == 'json':
        click.echo(dump_json(payload), nl=False)
    elif fmt == 'text':
        click.echo(text, nl=False)
    elif dot is None:
        raise click.UsageError("dot output is only available for graphs")
    else:
        click.echo(dot, nl=False)


@click.group()
@click.option('--verbose', is_flag=True, help='Progress logging on stderr.')
def cli(verbose: bool):
    """Tilting modules and quasi-hereditary structures of quadratic linear Nakayama algebras."""
    if verbose:
        config.VERBOSE = True


# ============== Modules ==============

@cli.command()
@algebra_options
@domain_errors
def indecs(algebra_file, inline, fmt):
    """List the indecomposable modules."""
    algebra = load_input(algebra_file, inline)
    modules = indecomposables(algebra)
    emit(fmt, module_to_list(modules), lines_text(modules))


# ============== Tilting ==============

@cli.group()
def tilt():
    """Tilting modules and mutation."""


@tilt.command('list')
@algebra_options
@click.option('--strategy', type=click.Choice(['mutation', 'exhaustive']), default='mutation')
@domain_errors
def tilt_list(algebra_file, inline, fmt, strategy):
    algebra = load_input(algebra_file, inline)
    tiltings = sorted(enumerate_tilting(algebra, strategy=strategy))
    emit(fmt, [module_to_list(t) for t in tiltings], lines_text(tiltings))


@tilt.command('count')
@algebra_options
@click.option('--strategy', type=click.Choice(['recursion', 'mutation', 'exhaustive']),
              default='recursion', show_default=True)
@domain_errors
def tilt_count(algebra_file, inline, fmt, strategy):
    algebra = load_input(algebra_file, inline)
    if strategy == 'recursion':
        count = count_tilt_recursive(algebra)
    else:
        count = len(enumerate_tilting(algebra, strategy=strategy))
    emit(fmt, count, f"{count}\n")


@tilt.command('hasse')
@algebra_options
@domain_errors
def tilt_hasse_command(algebra_file, inline, fmt):
    """Tilting poset: modules and left mutations."""
    algebra = load_input(algebra_file, inline)
    poset = tilt_hasse(algebra)
    payload = {
        'nodes': [module_to_list(t) for t in poset.elements],
        'edges': [[s, t, m.to_list()] for s, t, m in poset.edges],
    }
    text = lines_text(f"{i}: {t}" for i, t in enumerate(poset.elements))
    text += lines_text(f"{s} -> {t} {m}" for s, t, m in poset.edges)
    emit(fmt, payload, text, emit_dot(poset))


@tilt.command('mutate')
@algebra_options
@click.option('--modules', help='Tilting module as a JSON interval list.')
@click.option('--summand', help='Summand to mutate, e.g. [1,2].')
@domain_errors
def tilt_mutate(algebra_file, inline, fmt, modules, summand):
    algebra = load_input(algebra_file, inline)
    tilting = parse_modules(require(modules, '--modules'), algebra)
    module = parse_interval(load_json(require(summand, '--summand')), algebra)
    mutated = left_mutation(algebra, tilting, module)
    emit(fmt, module_to_list(mutated), f"{mutated}\n")


# ============== Quasi-hereditary structures ==============

@cli.group()
def qhs():
    """Quasi-hereditary structures."""


@qhs.command('list')
@algebra_options
@click.option('--strategy', type=click.Choice(['via_tilting', 'total_order_oracle']), default='via_tilting')
@domain_errors
def qhs_list(algebra_file, inline, fmt, strategy):
    algebra = load_input(algebra_file, inline)
    orders = sorted(enumerate_qhs(algebra, strategy=strategy))
    emit(fmt, [order_to_dict(o) for o in orders], lines_text(orders))


@qhs.command('count')
@algebra_options
@click.option('--strategy', type=click.Choice(['recursion', 'via_tilting', 'total_order_oracle']),
              default='recursion', show_default=True)
@domain_errors
def qhs_count(algebra_file, inline, fmt, strategy):
    algebra = load_input(algebra_file, inline)
    if strategy == 'recursion':
        count = count_tilt_recursive(algebra)
    else:
        count = len(enumerate_qhs(algebra, strategy=strategy))
    emit(fmt, count, f"{count}\n")


@qhs.command('of-tilting')
@algebra_options
@click.option('--modules', help='Tilting module as a JSON interval list.')
@click.option('--check-branches', is_flag=True, help='Compare every elimination branch.')
@domain_errors
def qhs_of_tilting(algebra_file, inline, fmt, modules, check_branches):
    """Minimal adapted order and labeling of a tilting module."""
    algebra = load_input(algebra_file, inline)
    tilting = parse_modules(require(modules, '--modules'), algebra)
    labeled, order = order_from_tilting(algebra, tilting, check_branches=check_branches)
    payload = {'order': order_to_dict(order), 'labels': labeled.to_dict()}
    emit(fmt, payload, f"{order}\n", emit_dot(order))


@qhs.command('chtilt')
@algebra_options
@click.option('--order', 'order_value', help="Order as covers '2>1 2>3' or JSON.")
@domain_errors
def qhs_chtilt(algebra_file, inline, fmt, order_value):
    """Characteristic tilting module of an order."""
    algebra = load_input(algebra_file, inline)
    order = parse_order(require(order_value, '--order'), algebra.n)
    labeled = char_tilting(algebra, order)
    payload = {'module': module_to_list(labeled.module), 'labels': labeled.to_dict()}
    emit(fmt, payload, f"{labeled.module}\n")


@qhs.command('oracle')
@algebra_options
@domain_errors
def qhs_oracle(algebra_file, inline, fmt):
    """Quasi-hereditary total orders and their classes."""
    algebra = load_input(algebra_file, inline)
    result = total_order_oracle(algebra)
    payload = {'qh_total_orders': result.qh_total_orders, 'classes': len(result.classes)}
    emit(fmt, payload, f"{result.qh_total_orders} {len(result.classes)}\n")


# ============== Blocks, trees and gluing ==============

@cli.command()
@algebra_options
@domain_errors
def blocks(algebra_file, inline, fmt):
    """Block decomposition at the relation runs."""
    algebra = load_input(algebra_file, inline)
    decomposition = block_decomposition(algebra)
    emit(fmt, decomposition.to_dict(), decomposition_text(decomposition) + '\n')


@cli.group()
def trees():
    """Binary trees and admissible sequences."""


@trees.command('of-tilting')
@algebra_options
@click.option('--modules', help='Tilting module as a JSON interval list.')
@domain_errors
def trees_of_tilting(algebra_file, inline, fmt, modules):
    """The tree of a path algebra, or the admissible sequence in general."""
    algebra = load_input(algebra_file, inline)
    tilting = parse_modules(require(modules, '--modules'), algebra)
    sequence = admissible_from_tilting(algebra, tilting)
    if len(sequence.locals) == 1 and sequence.locals[0].tree is not None:
        tree = single_tree(sequence)
        emit(fmt, tree_to_dict(tree), f"{tree_to_order(tree)}\n", emit_dot(tree_to_order(tree)))
    else:
        text = lines_text(local.order() for local in sequence.locals)
        emit(fmt, sequence_to_list(sequence), text)


@trees.command('to-tilting')
@algebra_options
@click.option('--tree', 'tree_value', help='Binary tree JSON (path algebras).')
@click.option('--sequence', 'sequence_value', help='Admissible sequence JSON.')
@domain_errors
def trees_to_tilting(algebra_file, inline, fmt, tree_value, sequence_value):
    algebra = load_input(algebra_file, inline)
    if (tree_value is None) == (sequence_value is None):
        raise click.UsageError("give exactly one of --tree or --sequence")
    if tree_value is not None:
        decomposition = block_decomposition(algebra)
        if len(decomposition.blocks) != 1 or decomposition.blocks[0].kind != PATH:
            raise RangeMismatch(f"a single tree describes path algebras only, {algebra} has blocks {decomposition}")
        module = tree_tilting_bijection(1, algebra.n, parse_tree(read_value(tree_value)))
    else:
        _, module = admissible_validate_assemble(algebra, parse_sequence(read_value(sequence_value)))
    emit(fmt, module_to_list(module), f"{module}\n")


@cli.command()
@algebra_options
@click.option('--sequence', 'sequence_value', help='Admissible sequence JSON.')
@domain_errors
def glue(algebra_file, inline, fmt, sequence_value):
    """Validate an admissible sequence and assemble the global structure."""
    algebra = load_input(algebra_file, inline)
    sequence = parse_sequence(require(sequence_value, '--sequence'))
    order, module = admissible_validate_assemble(algebra, sequence)
    payload = {'order': order_to_dict(order), 'tilting': module_to_list(module)}
    emit(fmt, payload, f"{order}\n{module}\n", emit_dot(order))


# ============== Counting ==============

@cli.command()
@algebra_options
@click.option('--modules', help='Classify one tilting module instead of all.')
@domain_errors
def decompose(algebra_file, inline, fmt, modules):
    """Fiber index of a tilting module, or all fiber sizes."""
    algebra = load_input(algebra_file, inline)
    if modules is not None:
        index = classify_decomposition(algebra, parse_modules(read_value(modules), algebra))
        emit(fmt, index, f"{index}\n")
        return
    fibers = decomposition_fibers(algebra)
    payload = {str(i): size for i, size in fibers.items()}
    emit(fmt, payload, lines_text(f"{i} {size}" for i, size in fibers.items()))


@cli.command()
@click.option('--max-n', type=click.IntRange(min=1), required=True)
@click.option('--store', is_flag=True, help='Persist rows in the count store.')
@domain_errors
def counts(max_n, store):
    """CSV of tilting and structure counts for every algebra up to --max-n."""
    if store:
        init_db()
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for n in range(1, max_n + 1):
        for algebra in all_algebras(n):
            record = CountRecord(
                label=algebra.label,
                n=n,
                relations=list(algebra.relations),
                tilt_count=count_tilt_recursive(algebra),
                qhs_count=len(enumerate_qhs(algebra)),
            )
            if store:
                CountRecord.upsert(record.label, record.n, record.relations,
                                   record.tilt_count, record.qhs_count)
            writer.writerow(record.to_csv_row())
    click.echo(buffer.getvalue(), nl=False)


@cli.command()
@click.option('--max-n', type=click.IntRange(min=1), default=7, show_default=True)
@click.option('--seed', type=int, default=0, help='Seed for sampled checks.')
@click.option('--sample', type=click.IntRange(min=1), default=None,
              help='Tilting modules sampled per algebra for the extraction check.')
@click.option('--workers', type=click.IntRange(min=1), default=None)
@click.option('--all', 'show_all', is_flag=True, help='Print passing checks too.')
@domain_errors
def verify(max_n, seed, sample, workers, show_all):
    """Run the verification suite; exit 1 on any failure."""
    report = run_verify(max_n, seed=seed, workers=workers, sample=sample)
    shown = report.results if show_all else report.failures
    click.echo(lines_text(shown), nl=False)
    click.echo(report.summary())
    if not report.passed:
        click.get_current_context().exit(1)


def run_command(argv: Sequence[str]) -> int:
    """Run one command line and return its exit code."""
    try:
        result = cli.main(args=list(argv), prog_name='qln', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == '__main__':
    cli()
