"""
Command-line interface for shortwords.

Results go to stdout (text or --json); errors and progress go to stderr.
Exit codes: 0 success, 1 malformed input, 2 violated precondition,
3 resource limit or unfinished search.
"""

import functools
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
import yaml
from rich.markup import escape

from . import __version__
from .config import ToolkitConfig, toolkit_config
from .errors import DegreeMismatchError, InputError, ShortwordsError
from .logging_config import setup_logging, stderr_console
from .output import CommandResult, render
from .perm import (
    PermGroup,
    ProductReplacer,
    coset_action,
    format_perm,
    load_generator_file,
    parse_perm,
)
from .search import (
    LookupOptions,
    ShortGensOptions,
    auto_intermediate_for_element,
    auto_intermediate_for_subgroup,
    get_short_gens,
    lookup_word,
    reduce_gens_for_elt,
    reduce_gens_for_group,
    two_step_get_short_gens,
    two_step_lookup_word,
)
from .structure import (
    center,
    centralizer,
    conjugacy_classes,
    is_maximal_el_ab_normal,
    maximal_elementary_abelian_normals,
    michler_step4,
    normalizer,
    sylow2,
    two_central_involutions,
)
from .structure.tables import class_table_rows

logger = logging.getLogger(__name__)

console = stderr_console

EXIT_UNFINISHED = 3
AUTO = "auto"


# ============================================================================
# Helpers
# ============================================================================


def handle_errors(func: Callable) -> Callable:
    """Print toolkit errors on stderr and exit with their family's code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ShortwordsError as e:
            console.print(f"[red]Error: {escape(str(e))}[/red]")
            sys.exit(e.exit_code)
        except OSError as e:
            console.print(f"[red]Error: {escape(str(e))}[/red]")
            sys.exit(1)

    return wrapper


def _config(ctx: click.Context) -> ToolkitConfig:
    return ctx.obj if isinstance(ctx.obj, ToolkitConfig) else toolkit_config


def _load_group_file(path: Path, degree: int) -> PermGroup:
    """Group generated by a second generator file, which must share the degree."""
    gens = load_generator_file(path)
    if gens.degree != degree:
        raise DegreeMismatchError(f"{path} has degree {gens.degree}, expected {degree}")
    return PermGroup(gens)


def _parse_restriction(text: str | None) -> frozenset[int] | None:
    if not text:
        return None
    try:
        orders = frozenset(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"--order-restriction expects integers like 2,3,6, got {text!r}") from None
    if any(o < 1 for o in orders):
        raise InputError(f"orders must be positive, got {text!r}")
    return orders


def _generators(group: PermGroup) -> list[str]:
    return [format_perm(g) for g in group.generators]


def _emit(result: CommandResult, as_json: bool):
    click.echo(render(result, "json" if as_json else "text"))


def json_option(func: Callable) -> Callable:
    return click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text")(func)


def element_limit_option(func: Callable) -> Callable:
    return click.option(
        "--element-limit",
        type=click.IntRange(min=1),
        help="Largest group enumerated by brute force (default: config)",
    )(func)


GROUP_FILE = click.argument("group_file", type=click.Path(path_type=Path))


# ============================================================================
# Command group
# ============================================================================


@click.group()
@click.version_option(__version__, prog_name="shortwords")
@click.option(
    "--config",
    "config_path",
    type=click.Path(path_type=Path),
    help="YAML settings file (overrides environment)",
)
@click.option("-v", "--verbose", count=True, help="Progress on stderr (-vv for debug)")
@click.pass_context
def cli(ctx, config_path, verbose):
    """shortwords - short words for permutation group elements and subgroups."""
    try:
        config = ToolkitConfig.from_file(config_path) if config_path else toolkit_config
    except (FileNotFoundError, ValueError, yaml.YAMLError) as e:
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        sys.exit(1)

    errors = config.validate()
    if errors:
        console.print("[red]Configuration errors:[/red]")
        for error in errors:
            console.print(f"  - {escape(error)}")
        sys.exit(1)

    level = config.log_level
    if verbose:
        level = "DEBUG" if verbose > 1 else "INFO"
    setup_logging(level, config.logs_dir)
    ctx.obj = config


# ============================================================================
# Groups and elements
# ============================================================================


@cli.command()
@GROUP_FILE
@click.option("--sample", default=0, type=click.IntRange(min=0), help="Also print N random elements")
@click.option("--seed", default=0, type=int, help="Seed for random elements")
@json_option
@handle_errors
def order(group_file, sample, seed, as_json):
    """Print the order of the group generated by GROUP_FILE."""
    group = PermGroup(load_generator_file(group_file))
    fields: dict[str, Any] = {"order": group.order}
    if sample:
        rng = ProductReplacer(group.degree, group.generators, seed=seed)
        fields["base"] = list(group.base)
        fields["samples"] = [format_perm(rng.sample()) for _ in range(sample)]
    _emit(CommandResult("order", fields), as_json)


@cli.command()
@GROUP_FILE
@click.option("--target", type=click.Path(path_type=Path), help="Generators of the target subgroup")
@click.option("--element", help="Element in cycle notation")
@click.option("--exclude", type=click.Path(path_type=Path), help="Generators of the exclude group")
@json_option
@handle_errors
def reduce(group_file, target, element, exclude, as_json):
    """Drop generators not needed to reach a target subgroup or element."""
    gens = load_generator_file(group_file)
    if bool(target) == bool(element):
        raise InputError("give exactly one of --target or --element")

    if element:
        kept, reduced = reduce_gens_for_elt(gens, parse_perm(element, gens.degree))
    else:
        excluded = _load_group_file(exclude, gens.degree) if exclude else None
        kept, reduced = reduce_gens_for_group(
            gens, _load_group_file(target, gens.degree), excluded
        )

    fields = {"kept": list(kept), "names": list(reduced.names)}
    _emit(CommandResult("reduce", fields), as_json)


@cli.command()
@GROUP_FILE
@click.option(
    "--target", required=True, type=click.Path(path_type=Path), help="Generators of the target"
)
@click.option("--exclude", type=click.Path(path_type=Path), help="Generators of the exclude group")
@click.option("--order-restriction", help="Comma-separated element orders, e.g. 2,3,6")
@click.option("--limit", type=click.IntRange(min=1), help="Word-tree levels to search")
@click.option("--no-reduce", is_flag=True, help="Search over all generators")
@click.option("--two-step", "two_step", help="Intermediate subgroup file, or 'auto' for N_G(S)")
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def shortgens(
    ctx, group_file, target, exclude, order_restriction, limit, no_reduce, two_step,
    element_limit, as_json,
):
    """Find short words generating the subgroup given by --target."""
    config = _config(ctx)
    element_limit = element_limit or config.element_limit
    gens = load_generator_file(group_file)
    target_group = _load_group_file(target, gens.degree)

    opts = ShortGensOptions(
        exclude=_load_group_file(exclude, gens.degree) if exclude else None,
        reduce_first=config.reduce_first and not no_reduce,
        reduce_more=config.reduce_more,
        order_restriction=_parse_restriction(order_restriction),
        iteration_limit=limit,
        frontier_cap=config.frontier_cap,
        element_limit=element_limit,
    )

    if two_step:
        if two_step == AUTO:
            intermediate = auto_intermediate_for_subgroup(gens, target_group, element_limit)
        else:
            intermediate = _load_group_file(Path(two_step), gens.degree)
        result = two_step_get_short_gens(gens, intermediate, target_group, opts)
        fields = {
            "status": result.status.value,
            "intermediate_order": result.intermediate_order,
            "step_one": list(result.step_one.rendered) if result.step_one else [],
            "nested": list(result.nested_rendered),
            "words": list(result.rendered),
        }
        finished = result.finished
    else:
        found = get_short_gens(gens, target_group, opts)
        fields = {"status": found.status.value, "words": list(found.rendered)}
        finished = found.finished

    _emit(CommandResult("shortgens", fields), as_json)
    if not finished:
        console.print("[yellow]Couldn't generate the group within the level limit[/yellow]")
        sys.exit(EXIT_UNFINISHED)


@cli.command()
@GROUP_FILE
@click.option("--element", required=True, help="Element in cycle notation, e.g. (2,8,7,6,4,3)")
@click.option("--conjugate", is_flag=True, help="Accept any conjugate of the element")
@click.option("--limit", type=click.IntRange(min=1), help="Word-tree levels to search")
@click.option("--no-reduce", is_flag=True, help="Search over all generators")
@click.option("--two-step", "two_step", help="Intermediate subgroup file, or 'auto' for C_G(x)")
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def lookup(ctx, group_file, element, conjugate, limit, no_reduce, two_step, element_limit, as_json):
    """Find a short word for --element."""
    config = _config(ctx)
    element_limit = element_limit or config.element_limit
    gens = load_generator_file(group_file)
    x = parse_perm(element, gens.degree)

    opts = LookupOptions(
        conjugate_check=conjugate,
        reduce_first=config.reduce_first and not no_reduce,
        iteration_limit=limit,
        frontier_cap=config.frontier_cap,
        element_limit=element_limit,
    )

    if two_step:
        if two_step == AUTO:
            intermediate = auto_intermediate_for_element(gens, x, element_limit)
        else:
            intermediate = _load_group_file(Path(two_step), gens.degree)
        short_opts = ShortGensOptions(
            reduce_first=opts.reduce_first,
            reduce_more=config.reduce_more,
            frontier_cap=config.frontier_cap,
            element_limit=element_limit,
        )
        result = two_step_lookup_word(gens, intermediate, x, opts, short_opts)
        fields: dict[str, Any] = {
            "status": result.status.value,
            "intermediate_order": result.intermediate_order,
            "step_one": list(result.step_one.rendered) if result.step_one else [],
            "nested": list(result.nested_rendered),
            "word": result.rendered[0] if result.rendered else None,
        }
        _emit(CommandResult("lookup", fields), as_json)
        if not result.finished:
            sys.exit(EXIT_UNFINISHED)
        return

    found = lookup_word(gens, x, opts)
    _emit(CommandResult("lookup", {"word": found.rendered}), as_json)


# ============================================================================
# Structure
# ============================================================================


@cli.command()
@GROUP_FILE
@click.option("--no-words", is_flag=True, help="Skip the short-word representative column")
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def classes(ctx, group_file, no_words, element_limit, as_json):
    """Conjugacy classes with centralizer orders and power maps."""
    config = _config(ctx)
    gens = load_generator_file(group_file)
    group = PermGroup(gens)
    table = conjugacy_classes(group, element_limit or config.element_limit)

    rows = []
    if no_words:
        for index, c in enumerate(table.classes, start=1):
            row: dict[str, Any] = {
                "class": c.name,
                "representative": format_perm(c.representative),
                "size": c.size,
                "centralizer": c.centralizer_order,
            }
            for p, pm in sorted(table.power_maps.items()):
                row[f"{p}P"] = table.class_name(pm[index])
            rows.append(row)
    else:
        lookup_opts = LookupOptions(frontier_cap=config.frontier_cap)
        for class_row in class_table_rows(table, gens, lookup_opts):
            row = {
                "class": class_row.name,
                "word": class_row.word,
                "representative": class_row.representative,
                "size": class_row.size,
                "centralizer": class_row.centralizer_order,
            }
            row.update({f"{p}P": name for p, name in class_row.powers.items()})
            rows.append(row)

    fields = {"order": table.group_order, "classes": len(table)}
    _emit(CommandResult("classes", fields, rows), as_json)


@cli.command()
@GROUP_FILE
@click.option(
    "--subgroup", required=True, type=click.Path(path_type=Path), help="Generators of U"
)
@json_option
@click.pass_context
@handle_errors
def cosetaction(ctx, group_file, subgroup, as_json):
    """Permutation action on the right cosets of --subgroup."""
    config = _config(ctx)
    gens = load_generator_file(group_file)
    result = coset_action(
        PermGroup(gens), _load_group_file(subgroup, gens.degree), config.coset_index_limit
    )
    fields = {
        "degree": result.degree,
        "image_order": result.image.order,
        "kernel_order": result.kernel_order,
        "faithful": result.is_faithful,
        "generators": _generators(result.image),
    }
    _emit(CommandResult("cosetaction", fields), as_json)


def _subgroup_fields(group: PermGroup) -> dict[str, Any]:
    return {"order": group.order, "generators": _generators(group)}


@cli.command(name="sylow2")
@GROUP_FILE
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def sylow2_command(ctx, group_file, element_limit, as_json):
    """A Sylow 2-subgroup."""
    group = PermGroup(load_generator_file(group_file))
    result = sylow2(group, element_limit or _config(ctx).element_limit)
    _emit(CommandResult("sylow2", _subgroup_fields(result)), as_json)


@cli.command(name="center")
@GROUP_FILE
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def center_command(ctx, group_file, element_limit, as_json):
    """The center Z(G)."""
    group = PermGroup(load_generator_file(group_file))
    result = center(group, element_limit or _config(ctx).element_limit)
    _emit(CommandResult("center", _subgroup_fields(result)), as_json)


@cli.command(name="centralizer")
@GROUP_FILE
@click.option("--element", required=True, help="Element in cycle notation")
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def centralizer_command(ctx, group_file, element, element_limit, as_json):
    """The centralizer C_G(x) of --element."""
    gens = load_generator_file(group_file)
    x = parse_perm(element, gens.degree)
    result = centralizer(PermGroup(gens), x, element_limit or _config(ctx).element_limit)
    _emit(CommandResult("centralizer", _subgroup_fields(result)), as_json)


@cli.command(name="normalizer")
@GROUP_FILE
@click.option(
    "--subgroup", required=True, type=click.Path(path_type=Path), help="Generators of H"
)
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def normalizer_command(ctx, group_file, subgroup, element_limit, as_json):
    """The normalizer N_G(H) of --subgroup."""
    gens = load_generator_file(group_file)
    h = _load_group_file(subgroup, gens.degree)
    result = normalizer(PermGroup(gens), h, element_limit or _config(ctx).element_limit)
    _emit(CommandResult("normalizer", _subgroup_fields(result)), as_json)


@cli.command()
@GROUP_FILE
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def twocentral(ctx, group_file, element_limit, as_json):
    """Classes of 2-central involutions."""
    group = PermGroup(load_generator_file(group_file))
    found = two_central_involutions(group, element_limit or _config(ctx).element_limit)
    rows = [
        {
            "class": c.name,
            "representative": format_perm(c.representative),
            "size": c.size,
            "centralizer": c.centralizer_order,
        }
        for c in found
    ]
    _emit(CommandResult("twocentral", {"count": len(rows)}, rows), as_json)


@cli.command()
@GROUP_FILE
@click.option(
    "--subgroup",
    type=click.Path(path_type=Path),
    help="Only check whether this subgroup V is maximal",
)
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def maxelab(ctx, group_file, subgroup, element_limit, as_json):
    """Maximal elementary abelian normal subgroups of a 2-group."""
    limit = element_limit or _config(ctx).element_limit
    gens = load_generator_file(group_file)
    group = PermGroup(gens)

    if subgroup:
        v = _load_group_file(subgroup, gens.degree)
        maximal = is_maximal_el_ab_normal(group, v, limit)
        _emit(CommandResult("maxelab", {"maximal": maximal}), as_json)
        return

    found = maximal_elementary_abelian_normals(group, limit)
    rows = [
        {"index": i, "order": w.order, "generators": ";".join(_generators(w)) or "()"}
        for i, w in enumerate(found, start=1)
    ]
    _emit(CommandResult("maxelab", {"count": len(rows)}, rows), as_json)


@cli.command()
@GROUP_FILE
@click.option(
    "--subgroup",
    required=True,
    type=click.Path(path_type=Path),
    help="Elementary abelian normal subgroup V of E",
)
@element_limit_option
@json_option
@click.pass_context
@handle_errors
def step4(ctx, group_file, subgroup, element_limit, as_json):
    """Check V against a Sylow 2-subgroup of the centralizer of a 2-central involution."""
    gens = load_generator_file(group_file)
    report = michler_step4(
        PermGroup(gens),
        _load_group_file(subgroup, gens.degree),
        element_limit or _config(ctx).element_limit,
    )
    _emit(CommandResult("step4", report.to_dict()), as_json)
    if report.terminates:
        console.print("[yellow]V is not maximal: the construction stops here[/yellow]")
