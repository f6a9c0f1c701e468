import json
import sys
import time
from fractions import Fraction

import click
from tabulate import tabulate

from . import bounds, determinantal, quadric, resolutions, rigidity, scan
from .exceptions import ConfigError, CurveDimError, OutOfRange, SearchExhausted
from .models import FamilyP3, FamilyQ, OUTPUT_FORMATS, SCAN_TARGETS, ScanSpec, Settings, unstructure
from .pretty_printing import (
    pprint_decimal,
    pprint_duration,
    pprint_interval,
    pprint_rational,
    pprint_sqrt_decimal,
)
from .version import __version__

EXIT_USAGE = 1
EXIT_OUT_OF_RANGE = 2
EXIT_SEARCH_EXHAUSTED = 3


def exit_code_for(err):
    if isinstance(err, OutOfRange):
        return EXIT_OUT_OF_RANGE
    elif isinstance(err, SearchExhausted):
        return EXIT_SEARCH_EXHAUSTED
    else:
        return EXIT_USAGE


class CurveDimGroup(click.Group):
    """
    A click group that turns library errors into exit codes.

    Usage errors exit 1 rather than click's default 2, which we keep for
    out-of-range queries.
    """

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as err:
            err.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as err:
            err.exit_code = EXIT_USAGE
            raise
        except CurveDimError as err:
            click.echo(click.style(f"Failed: {err}", fg="bright_red"), err=True)
            ctx.exit(exit_code_for(err))


class IntRange(click.ParamType):
    name = "range"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return scan.parse_range(value)
        except ValueError as err:
            self.fail(str(err), param, ctx)


class RowDegrees(click.ParamType):
    name = "rows"

    def convert(self, value, param, ctx):
        try:
            return FamilyP3([int(k) for k in value.split(",")])
        except ValueError as err:
            self.fail(f"Cannot parse row degrees {value!r}: {err}", param, ctx)


def _info(ctx, message, fg="cyan"):
    if ctx.obj["verbose"]:
        click.echo(click.style(message, fg=fg), err=True)


def _emit_json(document):
    click.echo(json.dumps(document, indent=2))


def _emit_table(rows, headers=()):
    click.echo(tabulate(rows, headers=headers))


@click.group(cls=CurveDimGroup)
@click.version_option(version=__version__)
@click.option('--settings-file', '-f', type=click.Path(dir_okay=False), help="YAML settings file.")
@click.option('--verbose', '-v', is_flag=True, help="Print verbose messages.")
@click.option('--json', 'as_json', is_flag=True, help="Print reports as JSON.")
@click.pass_context
def cli(ctx, settings_file, verbose, as_json):
    if settings_file is not None:
        try:
            settings = Settings.from_path(settings_file)
        except FileNotFoundError:
            raise ConfigError(f"Couldn't find settings file {settings_file!r}") from None
    else:
        settings = Settings()

    ctx.obj = {
        'settings': settings,
        'verbose': verbose,
        'json': as_json,
    }

    if settings_file is not None:
        _info(ctx, f"Loaded {settings_file}: {unstructure(settings)}")


@cli.command()
@click.option('-d', 'd', type=int, required=True, help="Degree.")
@click.option('-g', 'g', type=int, required=True, help="Arithmetic genus.")
@click.option('-r', 'r', type=int, default=3, show_default=True, help="Dimension of the ambient P^r.")
@click.option('--surface-degree', '-s', type=int,
              help="Restrict to a surface of this degree instead of mu(d, g) (P^3 only).")
@click.option('--explain', is_flag=True, help="Print the chain of facts behind the bound.")
@click.pass_context
def bound(ctx, d, g, r, surface_degree, explain):
    """
    Lower bound for the dimension of the Hilbert scheme at (d, g) in P^r.
    """
    if surface_degree is not None:
        if r != 3:
            raise click.UsageError("--surface-degree only applies to P^3")
        cert = bounds.certify_surface_restriction(d, g, surface_degree)
    else:
        cert = bounds.lower_bound(d, g, r)

    assert bounds.recompute_value(cert) == cert.value

    if ctx.obj['json']:
        document = unstructure(cert)
        if explain:
            document["explanation"] = bounds.explain(cert)
        _emit_json(document)
        return

    rows = [
        ["value", cert.value],
        ["branch", cert.provenance.value],
    ]
    if cert.s is not None:
        rows.append(["mu" if cert.provenance.value == "high-genus" else "s", cert.s])
    _emit_table(rows)

    if explain:
        click.echo("")
        for i, step in enumerate(bounds.explain(cert), start=1):
            click.echo(f"{i}. {step}")


@cli.command()
@click.option('-d', 'd', type=int, required=True)
@click.option('-r', 'r', type=int, default=3, show_default=True)
@click.pass_context
def pi(ctx, d, r):
    """
    The Castelnuovo bound pi(d, r).
    """
    params = bounds.castelnuovo_params(d, r)
    value = bounds.castelnuovo_pi(d, r)

    if ctx.obj['json']:
        _emit_json({"d": d, "r": r, "m": params.m, "epsilon": params.epsilon, "pi": value})
    else:
        click.echo(value)


@cli.command()
@click.option('-d', 'd', type=int, required=True)
@click.option('-g', 'g', type=int, required=True)
@click.pass_context
def mu(ctx, d, g):
    """
    mu(d, g) by the closed form and by direct search.
    """
    closed_form = bounds.mu_closed_form(d, g)
    minimal_s = bounds.mu_minimal_s(d, g)

    document = {
        "d": d,
        "g": g,
        "mu_closed_form": closed_form,
        "mu_minimal_s": minimal_s,
        "agreement": "ok" if closed_form == minimal_s else "MISMATCH",
    }

    if ctx.obj['json']:
        _emit_json(document)
    else:
        _emit_table(list(document.items()))


def _family_p3_document(family):
    d, g = determinantal.family_p3_invariants(family)
    curve = determinantal.family_p3_curve_class(family)
    oracle = resolutions.curve_class_from_resolution(
        resolutions.mixed_determinantal_resolution(family.row_degrees)
    )

    document = {
        "rows": list(family.row_degrees),
        "s": family.s,
        "t": family.t,
        "d": d,
        "g": g,
        "dim": None,
        "degenerate": curve.is_degenerate,
        "resolution_check": "ok" if (oracle.d, oracle.g) == (d, g) else "MISMATCH",
    }

    if family.is_uniform:
        document["dim"] = determinantal.family_p3_uniform_dimension(
            family.s, family.row_degrees[0]
        )

    if g >= 0:
        analysis = determinantal.ratio_analysis(family)
        document.update(
            ratio=pprint_rational(analysis.ratio),
            ratio_decimal=pprint_decimal(analysis.ratio),
            alpha=pprint_rational(analysis.alpha),
            mixed_bound=pprint_rational(analysis.mixed_bound),
            uniform_bound=(
                None if analysis.uniform_bound is None
                else pprint_rational(analysis.uniform_bound)
            ),
        )

    return document


def _family_q_document(family):
    d, g, dim = determinantal.family_q_invariants(family)
    oracle = resolutions.curve_class_from_resolution(
        resolutions.quadric_determinantal_resolution(family.t)
    )
    return {
        "t": family.t,
        "d": d,
        "g": g,
        "dim": dim,
        "g_over_d_three_halves_decimal": pprint_sqrt_decimal(Fraction(g * g, d ** 3)),
        "resolution_check": "ok" if (oracle.d, oracle.g) == (d, g) else "MISMATCH",
    }


@cli.command()
@click.option('--rows', type=RowDegrees(), help="Row degrees k_1,...,k_s of a family in P^3.")
@click.option('--quadric-t', type=click.IntRange(min=1), help="Size t of a t x (t+1) family on Q.")
@click.pass_context
def family(ctx, rows, quadric_t):
    """
    Invariants of a determinantal family.
    """
    if (rows is None) == (quadric_t is None):
        raise click.UsageError("Pass exactly one of --rows and --quadric-t")

    if rows is not None:
        document = _family_p3_document(rows)
    else:
        document = _family_q_document(FamilyQ(quadric_t))

    if ctx.obj['json']:
        _emit_json(document)
    else:
        _emit_table([
            [key, "-" if value is None else value] for key, value in document.items()
        ])


@cli.command()
@click.option('-d', 'd', type=int, required=True)
@click.option('-g', 'g', type=int, required=True)
@click.option('--max-s', type=click.IntRange(min=1), help="Largest number of rows.")
@click.option('--max-k', type=click.IntRange(min=1), help="Largest row degree.")
@click.pass_context
def family_search(ctx, d, g, max_s, max_k):
    """
    Find every determinantal family in P^3 with the given (d, g).
    """
    settings = ctx.obj['settings'].family_search
    max_s = max_s or settings.max_s
    max_k = max_k or settings.max_k
    _info(ctx, f"Searching rows with s <= {max_s}, k_i <= {max_k}")

    families = determinantal.search_family_p3(d, g, max_s=max_s, max_k=max_k)

    if ctx.obj['json']:
        _emit_json([list(f.row_degrees) for f in families])
        return

    if not families:
        click.echo(click.style(f"No determinantal family has d={d}, g={g}", fg="yellow"), err=True)
        return

    _emit_table(
        [[",".join(map(str, f.row_degrees)), f.s, f.t] for f in families],
        headers=["rows", "s", "t"],
    )


def _caps(ctx, d, k_cap, l_cap):
    settings = ctx.obj['settings'].rigidity
    k_cap = k_cap or settings.k_cap or rigidity.default_cap(d)
    l_cap = l_cap or settings.l_cap or rigidity.default_cap(d)
    _info(ctx, f"Search caps: k <= {k_cap}, l <= {l_cap}", fg="yellow")
    return k_cap, l_cap


@cli.command("rigidity")
@click.option('-d', 'd', type=int, required=True)
@click.option('-g', 'g', type=int, required=True)
@click.option('--k-cap', type=click.IntRange(min=1))
@click.option('--l-cap', type=click.IntRange(min=1))
@click.pass_context
def rigidity_command(ctx, d, g, k_cap, l_cap):
    """
    Certify that curves of degree d and genus g in P^4 are not rigid.
    """
    k_cap, l_cap = _caps(ctx, d, k_cap, l_cap)
    cert = rigidity.rigidity_certificate(d, g, k_cap=k_cap, l_cap=l_cap)
    document = rigidity.certificate_document(cert)

    if ctx.obj['json']:
        _emit_json(document)
    else:
        _emit_table(list(document.items()))


@cli.command()
@click.option('-d', 'd', type=int, required=True)
@click.option('--k-cap', type=click.IntRange(min=1))
@click.option('--l-cap', type=click.IntRange(min=1))
@click.pass_context
def rigidity_threshold(ctx, d, k_cap, l_cap):
    """
    The smallest genus with a non-rigidity certificate in degree d.
    """
    k_cap, l_cap = _caps(ctx, d, k_cap, l_cap)
    g_star = rigidity.rigidity_threshold(d, k_cap=k_cap, l_cap=l_cap)

    document = {
        "d": d,
        "g_star": g_star,
        "ratio_squared": pprint_rational(Fraction(g_star * g_star, d ** 3)),
        "ratio_decimal": pprint_sqrt_decimal(Fraction(g_star * g_star, d ** 3)),
    }

    if ctx.obj['json']:
        _emit_json(document)
    else:
        _emit_table(list(document.items()))


@cli.group("quadric", cls=CurveDimGroup)
def quadric_group():
    """
    Curves on the quadric threefold Q in P^4.
    """
    pass


@quadric_group.command()
@click.option('-d', 'd', type=int, required=True)
@click.option('-g', 'g', type=int, required=True)
@click.pass_context
def witness(ctx, d, g):
    """
    Find k showing the dimension at (d, g) exceeds 3d.
    """
    found = quadric.gb_witness(d, g)

    if ctx.obj['json']:
        _emit_json(unstructure(found))
    else:
        _emit_table([
            ["k", found.k],
            ["bound", found.bound],
            ["expected dimension", 3 * d],
        ])


@quadric_group.command()
@click.option('-d', 'd', type=int, required=True)
@click.pass_context
def threshold(ctx, d):
    """
    The smallest genus where the dimension provably exceeds 3d.
    """
    value = quadric.gb_threshold(d)

    if ctx.obj['json']:
        _emit_json({
            "d": d,
            "gb_threshold": value,
            "ratio_decimal": pprint_sqrt_decimal(Fraction(value * value, d ** 3)),
        })
    else:
        click.echo(value)


@quadric_group.command()
@click.option('-d', 'd', type=int, required=True)
@click.pass_context
def coverage(ctx, d):
    """
    Genera reached by a component of dimension 3d.
    """
    report = quadric.coverage_report(d)

    if ctx.obj['json']:
        _emit_json(quadric.coverage_document(report))
        return

    _emit_table(
        [
            [row.t, row.L, row.R, pprint_interval((row.L, row.R)), "yes" if row.stitched else "no"]
            for row in report.per_t
        ],
        headers=["t", "L", "R", "interval", "stitched"],
    )
    click.echo("")
    click.echo(f"stitched range: t = {report.chain_start_t} .. {report.chain_end_t}, "
               f"g <= {report.paper_max_g}")
    click.echo("closure: " + ", ".join(pprint_interval(i) for i in report.closure_intervals))


@cli.command("scan")
@click.option('--target', type=click.Choice(SCAN_TARGETS), required=True)
@click.option('--d-range', type=IntRange(), required=True, help="e.g. 100:110, 100:200:10 or 3,5,7")
@click.option('--g-range', type=IntRange(), default="0", show_default=True)
@click.option('-r', 'r', type=int, default=3, show_default=True, help="Ambient dimension for the pi target.")
@click.option('--format', 'output_format', type=click.Choice(OUTPUT_FORMATS), default="csv", show_default=True)
@click.option('--workers', type=click.IntRange(min=1))
@click.option('--chunk-size', type=click.IntRange(min=1))
@click.option('--k-cap', type=click.IntRange(min=1))
@click.option('--l-cap', type=click.IntRange(min=1))
@click.pass_context
def scan_command(ctx, target, d_range, g_range, r, output_format, workers, chunk_size, k_cap, l_cap):
    """
    Evaluate one quantity over a grid of (d, g).
    """
    settings = ctx.obj['settings']

    spec = ScanSpec(
        d_values=d_range,
        g_values=g_range,
        target=target,
        output_format=output_format,
        workers=workers or settings.scan.workers,
        r=r,
        chunk_size=chunk_size or settings.scan.chunk_size,
        k_cap=k_cap or settings.rigidity.k_cap,
        l_cap=l_cap or settings.rigidity.l_cap,
    )

    _info(ctx, f"Scanning {len(scan.work_items(spec))} items with {spec.workers} worker(s)")
    start = time.time()

    rows = scan.run_scan(spec)

    _info(ctx, f"Scan finished in {pprint_duration(int(time.time() - start))}", fg="yellow")
    click.echo(scan.render_scan(spec, rows), nl=False)


@cli.command()
@click.argument('path', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def resolve(ctx, path):
    """
    Degree and genus of the curve resolved in PATH.
    """
    res = resolutions.read_resolution(path)
    _info(ctx, resolutions.format_resolution(res).rstrip())

    summary = resolutions.hilbert_summary(res)

    if ctx.obj['json']:
        _emit_json(summary)
    else:
        _emit_table(list(summary.items()))


def main():
    try:
        cli()
    except CurveDimError as err:
        click.echo(click.style(f"Failed: {err}", fg="bright_red"), err=True)
        sys.exit(exit_code_for(err))
