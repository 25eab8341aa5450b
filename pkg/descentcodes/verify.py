# SPDX-License-Identifier: Apache-2.0
"""Verification harness: every closed form checked against a brute-force oracle.

Each identity is a worker computing the reports of one parameter point, plus a function
listing the points of a sweep. Points are listed sorted and results are yielded in point
order, so the output does not depend on the number of joblib workers.

Identities:

- ``dm``: DM(C_(a,b)) = [a+b over b]
- ``cardinality``: closed-form #C_(a,b,m) = enumerated count, and #C_(a,b,m) <= #C_(a,b,0)
- ``congruence``: sum_m #C_(a,b,m) q^m = [a+b over b] mod q^(a+b) - 1
- ``sphere``: #dS(C_(g,g,m)) = (g+1) #C_(g,g,m)
- ``rpoly``: closed-form R_r = brute-force R_r, and R_r = R_(2g+2-r) mod q^(2g) - 1
- ``runs``: the run decompositions of DM and of the sphere sizes
- ``roots``: [a+b over b] at primitive d-th roots of unity
- ``decoder``: decoding round trips and pairwise disjoint spheres
- ``lattice``: lattice-path weight distribution = q-binomial
- ``sphere-run``: #dS({x}) = ||x||
- ``vt``: VT codes are single-deletion-correcting and Levenshtein's decoder inverts deletions
"""

import dataclasses
import json
import logging
import time
from collections import Counter, defaultdict, namedtuple
from dataclasses import dataclass
from typing import Optional, Tuple

import jsonschema
import pandas as pd

from descentcodes.codes import (
    CodeSpec,
    VTSpec,
    cardinality_closed_form,
    decode_single_deletion,
    decode_vt_single_deletion,
    enumerate_vt,
    is_single_deletion_correcting,
    r_poly_closed_form,
    sphere_cardinality,
)
from descentcodes.exceptions import DescentCodesError, InvalidArgumentError
from descentcodes.numtheory import divisors
from descentcodes.qpoly import (
    QPoly,
    ResiduePoly,
    eval_at_root_of_unity,
    lattice_path_weight_distribution,
    primitive_root_indices,
    q_binomial,
    q_binomial_limit_at_primitive_root,
    reduce_mod,
)
from descentcodes.utils import parallel_map
from descentcodes.words import (
    Word,
    dm_distribution,
    enumerate_code,
    enumerate_constant_weight,
    enumerate_words,
    major_index,
    run_number,
    run_weighted_dm,
    single_deletions,
)

L = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepBounds:
    """Upper bounds of the parameter sweeps, one per family of identities."""

    max_polynomial_length: int = 16
    max_counting_length: int = 18
    max_gamma: int = 8
    max_ab: int = 8
    max_decoder_length: int = 12
    max_lattice_length: int = 16
    max_sphere_run_length: int = 14
    max_vt_modulus: int = 12
    tolerance: float = 1e-6

    def __post_init__(self):
        minimums = {
            "max_polynomial_length": 2,
            "max_counting_length": 2,
            "max_gamma": 1,
            "max_ab": 1,
            "max_decoder_length": 2,
            "max_lattice_length": 0,
            "max_sphere_run_length": 1,
            "max_vt_modulus": 2,
        }
        for name, minimum in minimums.items():
            if getattr(self, name) < minimum:
                raise InvalidArgumentError(f"{name} must be at least {minimum}")
        if not self.tolerance > 0:
            raise InvalidArgumentError(f"tolerance must be positive, got {self.tolerance}")


DEFAULT_BOUNDS = SweepBounds()


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one parameter point.

    `expected` and `actual` are rendered values; `elapsed` is the wall time in milliseconds
    spent computing them, shared enumerations included. `tolerance` is set for numeric
    checks only.
    """

    identity_name: str
    parameter_point: Tuple[Tuple[str, int], ...]
    expected: str
    actual: str
    passed: bool
    elapsed: float
    tolerance: Optional[float] = None

    def to_dict(self):
        """JSON-ready dict; see REPORT_SCHEMA."""
        return {
            "identity_name": self.identity_name,
            "parameter_point": dict(self.parameter_point),
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed, 3),
            "tolerance": self.tolerance,
        }


REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "identity_name": {"type": "string"},
        "parameter_point": {"type": "object", "additionalProperties": {"type": "integer"}},
        "expected": {"type": "string"},
        "actual": {"type": "string"},
        "passed": {"type": "boolean"},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "tolerance": {"type": ["number", "null"]},
    },
    "required": [
        "identity_name",
        "parameter_point",
        "expected",
        "actual",
        "passed",
        "elapsed_ms",
        "tolerance",
    ],
    "additionalProperties": False,
}


def report_to_json(report):
    """Serialize a report to one schema-checked JSON line."""
    data = report.to_dict()
    jsonschema.validate(data, REPORT_SCHEMA)
    return json.dumps(data)


def format_report(report):
    """Human-readable one-line rendering."""
    point = " ".join(f"{name}={value}" for name, value in report.parameter_point)
    status = "PASS" if report.passed else "FAIL"
    return (
        f"{status} {report.identity_name:<22} {point:<30} "
        f"expected={report.expected} actual={report.actual} ({report.elapsed:.1f} ms)"
    )


def _elapsed_ms(start):
    return (time.perf_counter() - start) * 1000.0


def _report(name, point, expected, actual, start, passed=None, tolerance=None):
    if passed is None:
        passed = expected == actual
    return VerificationReport(
        identity_name=name,
        parameter_point=tuple(point),
        expected=str(expected),
        actual=str(actual),
        passed=bool(passed),
        elapsed=_elapsed_ms(start),
        tolerance=tolerance,
    )


def _check_dm(point):
    alpha, beta = point
    start = time.perf_counter()
    expected = q_binomial(alpha + beta, beta)
    actual = dm_distribution(enumerate_constant_weight(alpha, beta))
    return [_report("dm", [("alpha", alpha), ("beta", beta)], expected, actual, start)]


def _residue_counts(alpha, beta):
    """Count the words of C_(alpha, beta) per class m of the major index."""
    length = alpha + beta
    return Counter(major_index(w) % length for w in enumerate_constant_weight(alpha, beta))


def _check_cardinality(point):
    alpha, beta = point
    start = time.perf_counter()
    counts = _residue_counts(alpha, beta)
    enumeration_ms = _elapsed_ms(start)

    reports = []
    largest = cardinality_closed_form(CodeSpec(alpha, beta, 0))
    for m in range(alpha + beta):
        start = time.perf_counter() - enumeration_ms / 1000.0
        params = [("alpha", alpha), ("beta", beta), ("m", m)]
        closed_form = cardinality_closed_form(CodeSpec(alpha, beta, m))
        reports.append(_report("cardinality", params, counts[m], closed_form, start))
        reports.append(
            _report(
                "cardinality-max",
                params,
                f"<={largest}",
                closed_form,
                start,
                passed=closed_form <= largest,
            )
        )
    return reports


def _check_congruence(point):
    alpha, beta = point
    length = alpha + beta
    start = time.perf_counter()
    expected = reduce_mod(q_binomial(length, beta), length)
    actual = ResiduePoly.from_counts(length, _residue_counts(alpha, beta))
    return [_report("congruence", [("alpha", alpha), ("beta", beta)], expected, actual, start)]


def _check_sphere(point):
    (gamma,) = point
    reports = []
    for m in range(2 * gamma):
        start = time.perf_counter()
        spec = CodeSpec(gamma, gamma, m)
        expected = (gamma + 1) * cardinality_closed_form(spec)
        actual = sphere_cardinality(spec).sphere
        reports.append(_report("sphere", [("gamma", gamma), ("m", m)], expected, actual, start))
    return reports


def _run_classes(alpha, beta):
    """Brute-force R_r for every r, from a single enumeration of C_(alpha, beta)."""
    by_runs = defaultdict(Counter)
    for w in enumerate_constant_weight(alpha, beta):
        by_runs[run_number(w)][major_index(w)] += 1
    return {r: QPoly.from_terms(terms) for r, terms in by_runs.items()}


def _check_r_poly(point):
    alpha, beta = point
    length = alpha + beta
    start = time.perf_counter()
    oracle = _run_classes(alpha, beta)
    enumeration_ms = _elapsed_ms(start)

    reports = []
    for r in range(2, length + 1):
        start = time.perf_counter() - enumeration_ms / 1000.0
        params = [("alpha", alpha), ("beta", beta), ("r", r)]
        expected = oracle.get(r, QPoly())
        actual = r_poly_closed_form(alpha, beta, r)
        reports.append(_report("rpoly", params, expected, actual, start))

    if alpha == beta:
        for r in range(2, length + 1):
            start = time.perf_counter()
            expected = reduce_mod(r_poly_closed_form(alpha, beta, r), length)
            actual = reduce_mod(r_poly_closed_form(alpha, beta, length + 2 - r), length)
            params = [("gamma", alpha), ("r", r)]
            reports.append(_report("rpoly-symmetry", params, expected, actual, start))
    return reports


def _check_run_decomposition(point):
    alpha, beta = point
    length = alpha + beta
    params = [("alpha", alpha), ("beta", beta)]
    start = time.perf_counter()
    words = list(enumerate_constant_weight(alpha, beta))
    closed_forms = {r: r_poly_closed_form(alpha, beta, r) for r in range(2, length + 1)}
    weighted = sum((r * poly for r, poly in closed_forms.items()), QPoly())

    total = sum(closed_forms.values(), QPoly())
    reports = [
        _report("runs-dm", params, dm_distribution(words), total, start),
        _report("runs-weighted", params, run_weighted_dm(words), weighted, start),
    ]

    start = time.perf_counter()
    spheres = {m: sphere_cardinality(CodeSpec(alpha, beta, m)).sphere for m in range(length)}
    actual = ResiduePoly.from_counts(length, spheres)
    reports.append(_report("runs-sphere", params, reduce_mod(weighted, length), actual, start))

    if alpha == beta:
        for m in range(length):
            start = time.perf_counter()
            code = list(enumerate_code(CodeSpec(alpha, beta, m)))
            expected = reduce_mod(dm_distribution(code) * (alpha + 1), length)
            actual = reduce_mod(run_weighted_dm(code), length)
            reports.append(
                _report("runs-class", [("gamma", alpha), ("m", m)], expected, actual, start)
            )
    return reports


def _check_roots(point):
    alpha, beta, tolerance = point
    length = alpha + beta
    polynomial = q_binomial(length, beta)
    reports = []
    for d in divisors(length):
        limit = q_binomial_limit_at_primitive_root(alpha, beta, d)
        for k in primitive_root_indices(d):
            start = time.perf_counter()
            value = eval_at_root_of_unity(polynomial, d, k)
            reports.append(
                _report(
                    "roots",
                    [("alpha", alpha), ("beta", beta), ("d", d), ("k", k)],
                    limit,
                    f"{value.real:.9g}{value.imag:+.9g}j",
                    start,
                    passed=abs(value - limit) <= tolerance,
                    tolerance=tolerance,
                )
            )
    return reports


def _check_decoder(point):
    alpha, beta = point
    reports = []
    for m in range(alpha + beta):
        start = time.perf_counter()
        spec = CodeSpec(alpha, beta, m)
        code = list(enumerate_code(spec))
        rounds = 0
        recovered = 0
        for codeword in code:
            for position in range(1, spec.length + 1):
                rounds += 1
                if decode_single_deletion(codeword.delete(position), spec) == codeword:
                    recovered += 1
        params = [("alpha", alpha), ("beta", beta), ("m", m)]
        expected, actual = f"{rounds}/{rounds}", f"{recovered}/{rounds}"
        reports.append(_report("decoder", params, expected, actual, start))
        start = time.perf_counter()
        reports.append(
            _report(
                "single-deletion-correcting",
                params,
                True,
                is_single_deletion_correcting(code),
                start,
            )
        )
    return reports


def _check_lattice(point):
    (i,) = point
    reports = []
    for j in range(i + 1):
        start = time.perf_counter()
        expected = q_binomial(i, j)
        actual = lattice_path_weight_distribution(i, j)
        reports.append(_report("lattice", [("i", i), ("j", j)], expected, actual, start))
    return reports


def _check_sphere_run(point):
    (length,) = point
    start = time.perf_counter()
    total = 0
    mismatches = 0
    for w in enumerate_words(length):
        total += 1
        if len(single_deletions(w)) != run_number(w):
            mismatches += 1
    return [
        _report(
            "sphere-run",
            [("length", length)],
            f"0 mismatches of {total}",
            f"{mismatches} mismatches of {total}",
            start,
        )
    ]


def _check_vt(point):
    (modulus,) = point
    reports = []
    for m in range(modulus):
        start = time.perf_counter()
        spec = VTSpec(modulus - 1, modulus, m)
        code = list(enumerate_vt(spec))
        params = [("l", modulus), ("m", m)]
        words = [Word.from_symbols(y) for y in code]
        reports.append(
            _report("vt-single-deletion", params, True, is_single_deletion_correcting(words), start)
        )

        start = time.perf_counter()
        rounds = 0
        recovered = 0
        for y in code:
            for position in range(len(y)):
                rounds += 1
                if decode_vt_single_deletion(y[:position] + y[position + 1 :], spec) == y:
                    recovered += 1
        expected, actual = f"{rounds}/{rounds}", f"{recovered}/{rounds}"
        reports.append(_report("vt-decoder", params, expected, actual, start))
    return reports


def _total_length_points(bound):
    return [(alpha, beta) for alpha in range(1, bound) for beta in range(1, bound - alpha + 1)]


def _square_points(bound):
    return [(alpha, beta) for alpha in range(1, bound + 1) for beta in range(1, bound + 1)]


_Identity = namedtuple("_Identity", ["worker", "points", "bound"])

IDENTITIES = {
    "dm": _Identity(
        _check_dm, lambda b: _total_length_points(b.max_polynomial_length), "max_polynomial_length"
    ),
    "cardinality": _Identity(
        _check_cardinality,
        lambda b: _total_length_points(b.max_counting_length),
        "max_counting_length",
    ),
    "congruence": _Identity(
        _check_congruence,
        lambda b: _total_length_points(b.max_polynomial_length),
        "max_polynomial_length",
    ),
    "sphere": _Identity(
        _check_sphere, lambda b: [(g,) for g in range(1, b.max_gamma + 1)], "max_gamma"
    ),
    "rpoly": _Identity(_check_r_poly, lambda b: _square_points(b.max_ab), "max_ab"),
    "runs": _Identity(_check_run_decomposition, lambda b: _square_points(b.max_ab), "max_ab"),
    "roots": _Identity(
        _check_roots,
        lambda b: [(alpha, beta, b.tolerance) for alpha, beta in _square_points(b.max_ab)],
        "max_ab",
    ),
    "decoder": _Identity(
        _check_decoder, lambda b: _total_length_points(b.max_decoder_length), "max_decoder_length"
    ),
    "lattice": _Identity(
        _check_lattice,
        lambda b: [(i,) for i in range(b.max_lattice_length + 1)],
        "max_lattice_length",
    ),
    "sphere-run": _Identity(
        _check_sphere_run,
        lambda b: [(n,) for n in range(1, b.max_sphere_run_length + 1)],
        "max_sphere_run_length",
    ),
    "vt": _Identity(
        _check_vt, lambda b: [(n,) for n in range(2, b.max_vt_modulus + 1)], "max_vt_modulus"
    ),
}


def _run_point(task):
    """Worker entry point; an integrity failure becomes a failed report instead of an abort."""
    identity, point = task
    start = time.perf_counter()
    try:
        return IDENTITIES[identity].worker(point)
    except DescentCodesError as e:
        params = [(f"p{i}", value) for i, value in enumerate(point) if isinstance(value, int)]
        return [_report(identity, params, "no error", f"{type(e).__name__}: {e}", start, False)]


def stream_reports(identity, bounds=DEFAULT_BOUNDS, n_jobs=1, display_progress=False):
    """Generate the reports of `identity` (or of every identity for 'all'), in point order.

    Args:
        identity(str): a key of IDENTITIES, or 'all'
        bounds(SweepBounds): sweep bounds
        n_jobs(int): joblib workers
        display_progress(bool): show a progress bar
    """
    if identity == "all":
        for name in IDENTITIES:
            yield from stream_reports(name, bounds, n_jobs, display_progress)
        return
    if identity not in IDENTITIES:
        raise InvalidArgumentError(f"Unknown identity '{identity}'")

    entry = IDENTITIES[identity]
    points = entry.points(bounds)
    L.info(
        "Verifying '%s' on %d points (%s=%s)",
        identity,
        len(points),
        entry.bound,
        getattr(bounds, entry.bound),
    )
    tasks = [(identity, point) for point in points]
    for reports in parallel_map(_run_point, tasks, n_jobs, display_progress):
        for report in reports:
            L.debug("%s %s: %s", report.identity_name, report.parameter_point, report.passed)
            if not report.passed:
                L.warning(
                    "Identity '%s' failed at %s: expected %s, got %s",
                    report.identity_name,
                    report.parameter_point,
                    report.expected,
                    report.actual,
                )
            yield report


def _verify(identity, n_jobs, display_progress, **bounds):
    bounds = dataclasses.replace(DEFAULT_BOUNDS, **bounds)
    return list(stream_reports(identity, bounds, n_jobs, display_progress))


def verify_dm_identity(
    max_total_length=DEFAULT_BOUNDS.max_polynomial_length, n_jobs=1, display_progress=False
):
    """DM(C_(alpha, beta)) against [alpha + beta over beta] for alpha + beta <= max_total_length."""
    return _verify("dm", n_jobs, display_progress, max_polynomial_length=max_total_length)


def verify_cardinality(
    max_total_length=DEFAULT_BOUNDS.max_counting_length, n_jobs=1, display_progress=False
):
    """Closed-form #C_(alpha, beta, m) against enumeration, with the maximality of m = 0."""
    return _verify("cardinality", n_jobs, display_progress, max_counting_length=max_total_length)


def verify_congruence(
    max_total_length=DEFAULT_BOUNDS.max_polynomial_length, n_jobs=1, display_progress=False
):
    """Class sizes of C_(alpha, beta) against the q-binomial reduced mod q^(alpha+beta) - 1."""
    return _verify("congruence", n_jobs, display_progress, max_polynomial_length=max_total_length)


def verify_sphere_theorem(max_gamma=DEFAULT_BOUNDS.max_gamma, n_jobs=1, display_progress=False):
    """#dS(C_(gamma, gamma, m)) against (gamma + 1) #C_(gamma, gamma, m)."""
    return _verify("sphere", n_jobs, display_progress, max_gamma=max_gamma)


def verify_r_poly(max_ab=DEFAULT_BOUNDS.max_ab, n_jobs=1, display_progress=False):
    """Closed-form R_r against enumeration, and the symmetry r <-> 2 gamma + 2 - r."""
    return _verify("rpoly", n_jobs, display_progress, max_ab=max_ab)


def verify_run_decomposition(max_ab=DEFAULT_BOUNDS.max_ab, n_jobs=1, display_progress=False):
    """Run decompositions of DM(C_(alpha, beta)) and of the deletion sphere sizes."""
    return _verify("runs", n_jobs, display_progress, max_ab=max_ab)


def verify_root_of_unity(
    max_ab=DEFAULT_BOUNDS.max_ab,
    tolerance=DEFAULT_BOUNDS.tolerance,
    n_jobs=1,
    display_progress=False,
):
    """Limits of [alpha + beta over beta] at primitive roots against numeric evaluation."""
    return _verify("roots", n_jobs, display_progress, max_ab=max_ab, tolerance=tolerance)


def verify_decoder(
    max_total_length=DEFAULT_BOUNDS.max_decoder_length, n_jobs=1, display_progress=False
):
    """Decode every single deletion of every codeword, and check sphere disjointness."""
    return _verify("decoder", n_jobs, display_progress, max_decoder_length=max_total_length)


def verify_lattice_paths(
    max_length=DEFAULT_BOUNDS.max_lattice_length, n_jobs=1, display_progress=False
):
    """Lattice-path weight distributions against q-binomials."""
    return _verify("lattice", n_jobs, display_progress, max_lattice_length=max_length)


def verify_sphere_run(
    max_length=DEFAULT_BOUNDS.max_sphere_run_length, n_jobs=1, display_progress=False
):
    """Single-word deletion sphere sizes against run numbers."""
    return _verify("sphere-run", n_jobs, display_progress, max_sphere_run_length=max_length)


def verify_vt_codes(max_modulus=DEFAULT_BOUNDS.max_vt_modulus, n_jobs=1, display_progress=False):
    """VT codes: sphere disjointness and Levenshtein decoding."""
    return _verify("vt", n_jobs, display_progress, max_vt_modulus=max_modulus)


def summarize(reports):
    """Per-identity table with columns identity, passed, failed, elapsed_ms."""
    frame = pd.DataFrame(
        {
            "identity": [r.identity_name for r in reports],
            "passed": [r.passed for r in reports],
            "elapsed_ms": [r.elapsed for r in reports],
        },
        columns=["identity", "passed", "elapsed_ms"],
    )
    summary = (
        frame.groupby("identity", sort=False)
        .agg(
            passed=("passed", "sum"),
            total=("passed", "size"),
            elapsed_ms=("elapsed_ms", "sum"),
        )
        .reset_index()
    )
    summary["failed"] = summary["total"] - summary["passed"]
    return summary[["identity", "passed", "failed", "elapsed_ms"]]
