"""
Grid scans: evaluate one quantity over many (d, g) and emit CSV or JSON.

Work is split into chunks of ``spec.chunk_size`` items.  With more than
one worker the chunks go to a process pool; ``Executor.map`` hands the
results back in submission order, so the output never depends on the
worker count.
"""

import csv
import functools
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bounds, quadric, rigidity
from .exceptions import CurveDimError
from .iterators import chunked_iterable
from .pretty_printing import pprint_sqrt_decimal

HEADERS = {
    "p3_bound": ["d", "g", "value", "branch", "mu", "error"],
    "mu": ["d", "g", "mu_closed_form", "mu_minimal_s", "agreement", "error"],
    "pi": ["d", "r", "pi", "error"],
    "rigidity": ["d", "g_star", "ratio_decimal", "error"],
    "quadric": ["d", "gb_threshold", "paper_max_g", "closure_max_contiguous_g", "error"],
}

# Targets whose rows depend on d alone; g ranges are ignored for these.
D_ONLY_TARGETS = {"pi", "rigidity", "quadric"}

_RANGE_RE = re.compile(r"^(?P<start>-?\d+):(?P<stop>-?\d+)(:(?P<step>-?\d+))?$")


def parse_range(text):
    """
    Parses an inclusive integer range.

    Examples:
        "100:110"     -> 100, 101, ..., 110
        "0:20:5"      -> 0, 5, 10, 15, 20
        "3,7,11"      -> 3, 7, 11
        "42"          -> 42
        "5:4"         -> (empty)

    """
    text = text.strip()

    match = _RANGE_RE.match(text)
    if match is not None:
        start = int(match.group("start"))
        stop = int(match.group("stop"))
        step = int(match.group("step") or 1)
        if step < 1:
            raise ValueError(f"Range step must be >= 1, got {step}")
        return tuple(range(start, stop + 1, step))

    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"Cannot parse range {text!r}; expected 'start:stop[:step]', 'a,b,c' or an integer"
        ) from None


def work_items(spec):
    if spec.target in D_ONLY_TARGETS:
        return [(d,) for d in spec.d_values]
    return [(d, g) for d in spec.d_values for g in spec.g_values]


def _error_text(err):
    return f"{type(err).__name__}: {err}"


def _empty_row(target, values):
    row = dict.fromkeys(HEADERS[target])
    row.update(values)
    return row


def p3_bound_row(d, g, **_):
    row = _empty_row("p3_bound", {"d": d, "g": g})
    try:
        cert = bounds.lower_bound_p3(d, g)
    except CurveDimError as err:
        row["error"] = _error_text(err)
    else:
        row.update(value=cert.value, branch=cert.provenance.value, mu=cert.s)
    return row


def mu_row(d, g, **_):
    row = _empty_row("mu", {"d": d, "g": g})
    try:
        closed_form = bounds.mu_closed_form(d, g)
        minimal_s = bounds.mu_minimal_s(d, g)
    except CurveDimError as err:
        row["error"] = _error_text(err)
    else:
        row.update(
            mu_closed_form=closed_form,
            mu_minimal_s=minimal_s,
            agreement="ok" if closed_form == minimal_s else "MISMATCH",
        )
    return row


def pi_row(d, *, r, **_):
    row = _empty_row("pi", {"d": d, "r": r})
    try:
        row["pi"] = bounds.castelnuovo_pi(d, r)
    except CurveDimError as err:
        row["error"] = _error_text(err)
    return row


def rigidity_row(d, *, k_cap=None, l_cap=None, **_):
    row = _empty_row("rigidity", {"d": d})
    try:
        g_star = rigidity.rigidity_threshold(d, k_cap=k_cap, l_cap=l_cap)
    except CurveDimError as err:
        row["error"] = _error_text(err)
    else:
        row.update(
            g_star=g_star,
            ratio_decimal=pprint_sqrt_decimal(Fraction(g_star * g_star, d ** 3)),
        )
    return row


def quadric_row(d, **_):
    row = _empty_row("quadric", {"d": d})
    try:
        threshold = quadric.gb_threshold(d)
        report = quadric.coverage_report(d)
    except CurveDimError as err:
        row["error"] = _error_text(err)
    else:
        row.update(
            gb_threshold=threshold,
            paper_max_g=report.paper_max_g,
            closure_max_contiguous_g=report.closure_max_contiguous_g,
        )
    return row


ROW_FUNCTIONS = {
    "p3_bound": p3_bound_row,
    "mu": mu_row,
    "pi": pi_row,
    "rigidity": rigidity_row,
    "quadric": quadric_row,
}


def _compute_chunk(target, options, chunk):
    row_function = ROW_FUNCTIONS[target]
    return [row_function(*item, **options) for item in chunk]


def run_scan(spec):
    """
    Returns the list of rows for ``spec``, in (d, g)-lexicographic order.
    """
    options = {"r": spec.r, "k_cap": spec.k_cap, "l_cap": spec.l_cap}
    compute = functools.partial(_compute_chunk, spec.target, options)
    chunks = chunked_iterable(work_items(spec), size=spec.chunk_size)

    if spec.workers == 1:
        results = map(compute, chunks)
        return [row for chunk_rows in results for row in chunk_rows]

    with ProcessPoolExecutor(max_workers=spec.workers) as executor:
        return [
            row
            for chunk_rows in executor.map(compute, chunks)
            for row in chunk_rows
        ]


def render_csv(target, rows):
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=HEADERS[target], lineterminator="\r\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def render_json(target, rows):
    return json.dumps(
        [{key: row[key] for key in HEADERS[target]} for row in rows],
        indent=2,
    ) + "\n"


def render_scan(spec, rows):
    if spec.output_format == "json":
        return render_json(spec.target, rows)
    return render_csv(spec.target, rows)
