"""Command-line entry point.

Exit codes: 0 success, 1 invalid model/sector input, 2 failed verification,
3 unreadable input file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .errors import QesError
from .matrix import build_tridiagonal
from .model import Model, load_model, validate
from .qes import format_terms, reduced_direct, sl2_expansion, sl2_matrix
from .sectors import (
    canonicalize,
    enumerate_sectors,
    format_monomial,
    format_sector,
    parse_monomial,
    parse_sector,
    quantum_numbers,
    sector_basis,
)
from .spectral import DEFAULT_TOL, full_spectrum
from .verify import verify_model

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


def _fmt_real(x: float) -> str:
    return format(x, ".17g")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _resolve_sector(model: Model, args):
    if args.sector and args.monomial:
        raise QesError("give either --sector or --monomial, not both")
    if args.sector:
        return parse_sector(model, args.sector)
    if args.monomial:
        return canonicalize(model, parse_monomial(model, args.monomial))
    raise QesError("this command needs --sector or --monomial")


def _raw_model(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_validate(args, out) -> int:
    model = validate(_raw_model(args.model))
    lhs = sum(k * f for k, f in zip(model.n, model.nu))
    out.write(_dump({
        "model": model.to_json(),
        "constraint": {"sum_n_nu": str(lhs), "sum_m_mu": str(lhs), "holds": True},
    }) + "\n")
    return EXIT_OK


def cmd_sector(args, out) -> int:
    model = load_model(args.model)
    sector = _resolve_sector(model, args)
    basis = sector_basis(model, sector)
    qn = quantum_numbers(model, basis[0])
    out.write(_dump({
        "sector": format_sector(sector),
        "r": sector.r,
        "dim": sector.dim,
        "basis": [format_monomial(st) for st in basis],
        "quantum_numbers": {"e0": str(qn.e0), "alpha": list(qn.alpha), "beta": list(qn.beta)},
    }) + "\n")
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    model = load_model(args.model)
    sector = _resolve_sector(model, args)
    result = full_spectrum(model, sector, args.tol)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda", "total"])
        for total, lam in result:
            writer.writerow([_fmt_real(lam), _fmt_real(total)])
        out.write(buf.getvalue())
    else:
        payload = result.to_json()
        payload["sector"]["text"] = format_sector(sector)
        out.write(_dump(payload) + "\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    model = load_model(args.model)
    sector = _resolve_sector(model, args)
    terms = sl2_expansion(model, sector)
    direct = reduced_direct(model, sector)
    via_sl2 = sl2_matrix(terms, sector.r)
    equal = direct.same_matrix(via_sl2)
    if args.format == "json":
        out.write(_dump({
            "sector": format_sector(sector),
            "terms": [str(t) for t in terms],
            "direct": direct.to_json(),
            "sl2": via_sl2.to_json(),
            "equal": equal,
        }) + "\n")
    else:
        out.write(f"sector {format_sector(sector)} (r={sector.r})\n")
        out.write(f"H1_red = {format_terms(terms)}\n")
        out.write(json.dumps({"direct": direct.to_json(), "sl2": via_sl2.to_json()}) + "\n")
        out.write(f"EQUAL: {'yes' if equal else 'no'}\n")
    return EXIT_OK if equal else EXIT_VERIFY


def cmd_enumerate(args, out) -> int:
    model = load_model(args.model)
    if args.max_photons is None:
        raise QesError("enumerate needs --max-photons")
    sectors = enumerate_sectors(model, args.max_photons)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["sector", "r", "dim"])
        for sec in sectors:
            writer.writerow([format_sector(sec), sec.r, sec.dim])
        out.write(buf.getvalue())
    else:
        out.write(_dump([{"sector": format_sector(s), "r": s.r, "dim": s.dim} for s in sectors]) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    model = load_model(args.model)
    report = verify_model(
        model,
        max_r=6 if args.max_r is None else args.max_r,
        max_photons=12 if args.max_photons is None else args.max_photons,
        seed=args.seed,
    )
    out.write(_dump(report.to_json()) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {
    "validate": cmd_validate,
    "sector": cmd_sector,
    "spectrum": cmd_spectrum,
    "reduce": cmd_reduce,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qesoptics",
        description="Exact sectors, spectra and sl(2) forms of photon-conversion Hamiltonians.",
    )
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("model", help="model JSON file")
    parser.add_argument("--sector", help='sector label, e.g. "N=0,0;M=1"')
    parser.add_argument("--monomial", help='monomial, e.g. "i=4;j=0" (canonicalized)')
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL)
    parser.add_argument("--max-photons", type=int, default=None)
    parser.add_argument("--max-r", type=int, default=None)
    parser.add_argument("--format", choices=["json", "csv"], default=None)
    parser.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command == "reduce" else "json"
    try:
        return COMMANDS[args.command](args, out)
    except (OSError, json.JSONDecodeError) as exc:
        err.write(f"error: cannot read input: {exc}\n")
        return EXIT_IO
    except (QesError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
