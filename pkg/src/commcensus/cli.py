"""Command line interface.

Every invocation prints exactly one structured document to stdout (JSON by
default, sorted keys, floats at 12 significant digits; --format csv
flattens the row table). Logs go to stderr, controlled by the COMMCENSUS_LOG
environment variable. Exit codes: 0 success, 2 domain error, 3 search
exhaustion, 1 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any

from .census import (
    InfiniteCensusError,
    construct_family,
    count_algebras,
    pi_of_V,
    selectivity_check,
    short_interval_delta,
    verify_chebotarev_interval,
)
from .errors import DomainError, NotRealizableError, SearchExhaustedError
from .quadratic import QuadField, QuadOrder, field_from_d, order_from_disc
from .quaternion import RamSet, coarea_general, coarea_rational, zeta_k2_real_quadratic
from .spectra import DEFAULT_TOL, SpectrumSpec, spectrum_from_inputs

log = logging.getLogger("commcensus")

MAX_CLASS_ROWS = 200


@dataclass
class Report:
    """The one document an invocation prints."""

    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    warnings: list[str] = field(default_factory=list)


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _jsonable(obj):
    if isinstance(obj, float):
        return _sig12(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(report: Report, fmt: str) -> None:
    doc = {
        "command": report.command,
        "inputs": _jsonable(report.inputs),
        "result": _jsonable(report.result),
        "warnings": report.warnings,
    }
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return
    # csv: the row table if the command has one, key,value rows otherwise
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = report.result.get("classes")
    if rows:
        keys = sorted(rows[0])
        writer.writerow(keys)
        for row in rows:
            writer.writerow([_csv_cell(row.get(k)) for k in keys])
    else:
        writer.writerow(["key", "value"])
        for key in sorted(report.result):
            writer.writerow([key, _csv_cell(report.result[key])])
    sys.stdout.write(buf.getvalue())


def _csv_cell(value):
    if isinstance(value, float):
        return f"{_sig12(value):.12g}"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={v}" for k, v in sorted(value.items(), key=lambda kv: str(kv[0])))
    return value


def _field_doc(fld: QuadField) -> dict:
    return {"d": fld.d, "disc": fld.disc}


def _order_doc(order: QuadOrder) -> dict:
    return {
        "field": _field_doc(order.field),
        "conductor": order.conductor,
        "order_disc": order.order_disc,
    }


def _verdict_doc(verdict) -> dict:
    doc: dict[str, Any] = {"finite": verdict.finite}
    if verdict.square_witness is not None:
        doc["square_witness_indices"] = list(verdict.square_witness)
    if verdict.sign_witness is not None:
        doc["sign_witness"] = {str(k): v for k, v in sorted(verdict.sign_witness.items())}
    return doc


def _class_row(cls) -> dict:
    return {
        "ram": list(cls.ram.finite_primes),
        "coarea_exact": str(cls.coarea),
        "coarea": cls.coarea.value,
        "is_division": cls.is_division,
    }


def _parse_int_list(text: str | None) -> list[int]:
    if text is None or text.strip() == "":
        return []
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _parse_float_list(text: str | None) -> list[float]:
    if text is None or text.strip() == "":
        return []
    return [float(tok) for tok in text.split(",") if tok.strip() != ""]


def _spectrum_inputs(args) -> dict[str, Any]:
    return {
        "lengths": _parse_float_list(getattr(args, "lengths", None)),
        "traces": _parse_int_list(getattr(args, "traces", None)),
        "radicands": _parse_int_list(getattr(args, "radicands", None)),
        "tol": getattr(args, "tol", DEFAULT_TOL),
    }


def _build_spectrum(args) -> tuple[SpectrumSpec, dict[str, Any]]:
    inputs = _spectrum_inputs(args)
    spec = spectrum_from_inputs(
        lengths=inputs["lengths"],
        traces=inputs["traces"],
        radicands=inputs["radicands"],
        tol=inputs["tol"],
    )
    return spec, inputs


def _census_fields(args) -> tuple[tuple[QuadField, ...], dict[str, Any]]:
    """Fields for census commands: radicands are taken as fields directly,
    traces and lengths go through the spectrum pipeline (same fields)."""
    inputs = _spectrum_inputs(args)
    if inputs["traces"] or inputs["lengths"]:
        spec, _ = _build_spectrum(args)
        return spec.fields(), inputs
    if not inputs["radicands"]:
        raise DomainError("provide --radicands, --traces, or --lengths")
    seen: dict[QuadField, None] = {}
    for r in inputs["radicands"]:
        seen.setdefault(field_from_d(r), None)
    return tuple(seen), inputs


def cmd_spectra(args) -> Report:
    spec, inputs = _build_spectrum(args)
    rows = [
        {
            "trace": c.trace,
            "length": c.length,
            "field": _field_doc(c.field),
            "order": _order_doc(c.order),
        }
        for c in spec.classes
    ]
    return Report("spectra", inputs, {"classes": rows, "traces": list(spec.traces())})


def cmd_count(args) -> Report:
    fields, inputs = _census_fields(args)
    report = count_algebras(fields)
    result = {
        "fields": [_field_doc(f) for f in report.fields],
        "verdict": _verdict_doc(report.verdict),
        "nonsplit_primes": list(report.nonsplit),
        "classes": [_class_row(c) for c in report.classes],
        "count_total": report.count_total,
        "count_division": report.count_division,
        "eventual_pi": report.eventual_pi,
    }
    return Report("count", inputs, result)


def cmd_pi(args) -> Report:
    spec, inputs = _build_spectrum(args)
    inputs["volume"] = args.volume
    value, classes = pi_of_V(spec, args.volume)
    warnings = []
    rows = [_class_row(c) for c in classes[:MAX_CLASS_ROWS]]
    if len(classes) > MAX_CLASS_ROWS:
        warnings.append(
            f"class table truncated to {MAX_CLASS_ROWS} of {len(classes)} rows"
        )
    result = {"pi": value, "volume": args.volume, "classes": rows}
    return Report("pi", inputs, result, warnings)


def cmd_interval(args) -> Report:
    spec, inputs = _build_spectrum(args)
    inputs["V"] = args.V
    inputs["W"] = args.W
    rep = short_interval_delta(spec, args.V, args.W)
    result = {
        "traces": list(rep.traces),
        "V": rep.volume,
        "W": rep.window,
        "count_at_v": rep.count_at_v,
        "count_at_v_plus_w": rep.count_at_v_plus_w,
        "delta": rep.delta,
        "bound": rep.bound,
        "meets_bound": rep.meets_bound,
    }
    return Report("interval", inputs, result)


def cmd_family(args) -> Report:
    inputs = {"n": args.n, "search_bound": args.search_bound}
    fam = construct_family(args.n, args.search_bound)
    census = fam.census
    result = {
        "n": fam.n,
        "primes": list(fam.primes),
        "d4": fam.d4,
        "fields": [_field_doc(f) for f in fam.fields],
        "nonsplit_primes": list(census.nonsplit),
        "count_total": census.count_total,
        "count_division": census.count_division,
        "eventual_pi": census.eventual_pi,
    }
    return Report("family", inputs, result)


def cmd_volume(args) -> Report:
    if args.ramified is not None:
        primes = _parse_int_list(args.ramified)
        inputs = {"ramified": primes}
        coarea = coarea_rational(RamSet(tuple(primes)))
        result = {
            "ram": primes,
            "coarea_exact": str(coarea),
            "coarea": coarea.value,
        }
        return Report("volume", inputs, result)
    if args.disc is None:
        raise DomainError("provide --ramified, or --disc with the general form")
    degree = args.degree
    zeta2 = args.zeta2
    if zeta2 is None:
        if degree != 2:
            raise DomainError("--zeta2 is required unless --degree 2")
        zeta2 = zeta_k2_real_quadratic(args.disc)
    norms = _parse_int_list(args.norms)
    inputs = {"degree": degree, "disc": args.disc, "zeta2": zeta2, "norms": norms}
    value = coarea_general(degree, args.disc, zeta2, norms)
    return Report("volume", inputs, {"coarea": value, "zeta2": zeta2})


def cmd_chebotarev(args) -> Report:
    radicands = _parse_int_list(args.radicands)
    if not radicands:
        raise DomainError("provide --radicands naming the fields")
    seen: dict[QuadField, None] = {}
    for r in radicands:
        seen.setdefault(field_from_d(r), None)
    fields = tuple(seen)
    inputs = {"radicands": radicands, "X": args.X, "Y": args.Y}
    rep = verify_chebotarev_interval(fields, args.X, args.Y, workers=args.threads)
    result = {
        "fields": [_field_doc(f) for f in rep.fields],
        "X": rep.x,
        "Y": rep.y,
        "actual": rep.actual,
        "predicted": rep.predicted,
        "ratio": rep.ratio,
        "density": rep.density,
        "theta": rep.theta,
    }
    return Report("chebotarev", inputs, result)


def cmd_selectivity(args) -> Report:
    primes = _parse_int_list(args.ramified)
    order = order_from_disc(args.order_disc)
    inputs = {"ramified": primes, "order_disc": args.order_disc}
    verdict = selectivity_check(RamSet(tuple(primes)), order)
    result = {
        "order": _order_doc(order),
        "ram": primes,
        "selective_possible": verdict.selective_possible,
        "condition1": verdict.condition1,
        "condition2": verdict.condition2,
        "condition3": verdict.condition3,
        "certificate_prime": verdict.certificate_prime,
        "conductor_primes": [
            {"p": p, "splitting": s.value} for p, s in verdict.conductor_primes
        ],
    }
    return Report("selectivity", inputs, result)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker bound for segmented scans",
    )


def _add_spectrum_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--lengths", help="comma separated geodesic lengths")
    sub.add_argument("--traces", help="comma separated integer traces")
    sub.add_argument("--radicands", help="comma separated field radicands")
    sub.add_argument("--tol", type=float, default=DEFAULT_TOL)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commcensus",
        description="Census of commensurability classes with prescribed geodesic lengths",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("spectra", help="resolve lengths/traces/radicands to geodesic classes")
    _add_spectrum_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_spectra)

    p = subs.add_parser("count", help="total census over the embedding fields")
    _add_spectrum_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = subs.add_parser("pi", help="classes with coarea below a volume bound")
    _add_spectrum_flags(p)
    p.add_argument("--volume", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_pi)

    p = subs.add_parser("interval", help="census growth over (V, V+W]")
    _add_spectrum_flags(p)
    p.add_argument("--V", type=float, required=True)
    p.add_argument("--W", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_interval)

    p = subs.add_parser("family", help="four fields forcing a census count of 2**n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--search-bound", type=int, default=10**6, dest="search_bound")
    _add_common(p)
    p.set_defaults(func=cmd_family)

    p = subs.add_parser("volume", help="coarea of a maximal order unit group")
    p.add_argument("--ramified", help="comma separated finite ramified primes")
    p.add_argument("--degree", type=int, default=2, help="base field degree (general form)")
    p.add_argument("--disc", type=int, help="base field discriminant (general form)")
    p.add_argument("--zeta2", type=float, help="zeta_k(2); computed for degree 2 if omitted")
    p.add_argument("--norms", help="comma separated ramified prime norms (general form)")
    _add_common(p)
    p.set_defaults(func=cmd_volume)

    p = subs.add_parser("chebotarev", help="inert-prime density check on [X, X+Y]")
    p.add_argument("--radicands", required=True)
    p.add_argument("--X", type=int, required=True)
    p.add_argument("--Y", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_chebotarev)

    p = subs.add_parser("selectivity", help="selectivity conditions for (algebra, order)")
    p.add_argument("--ramified", required=True)
    p.add_argument("--order-disc", type=int, required=True, dest="order_disc")
    _add_common(p)
    p.set_defaults(func=cmd_selectivity)

    return parser


def _error_doc(command: str, exc: Exception) -> dict:
    doc: dict[str, Any] = {
        "command": command,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    if isinstance(exc, NotRealizableError):
        if exc.index is not None:
            doc["error"]["index"] = exc.index
        if exc.value is not None:
            doc["error"]["value"] = _jsonable(exc.value)
    if isinstance(exc, InfiniteCensusError):
        doc["error"]["verdict"] = _jsonable(_verdict_doc(exc.verdict))
    if isinstance(exc, SearchExhaustedError) and exc.bound is not None:
        doc["error"]["bound"] = exc.bound
    return doc


def main(argv=None) -> int:
    level = os.environ.get("COMMCENSUS_LOG", "warning").upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    try:
        report = args.func(args)
    except SearchExhaustedError as exc:
        log.error("search exhausted: %s", exc)
        sys.stdout.write(json.dumps(_error_doc(command, exc), sort_keys=True, indent=2) + "\n")
        return 3
    except DomainError as exc:
        log.error("domain error: %s", exc)
        sys.stdout.write(json.dumps(_error_doc(command, exc), sort_keys=True, indent=2) + "\n")
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        log.exception("internal error")
        sys.stdout.write(json.dumps(_error_doc(command, exc), sort_keys=True, indent=2) + "\n")
        return 1
    _emit(report, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
