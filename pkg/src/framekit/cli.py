"""Command-line front end.

A thin client over the library: reads a JSON model file, runs the requested
analysis or utility, and writes a JSON (or CSV) report. Exit codes:

* 0 - success
* 2 - input parse or validation failure
* 3 - solver failure (ill-conditioned, no buckling mode, ...)
* 4 - I/O failure

Failures emit a machine-readable ``{"error": ..., "detail": ...}`` object
on stderr. ``framekit serve`` runs the same operations as an HTTP service.
"""

from __future__ import annotations

import argparse
import sys

from . import beam3d, fem1d, modelio
from .errors import FrameKitError, ModelValidationError, SchemaError
from .fem2d import quad8_rectangle, tri6_rectangle
from .model import validate_model
from .solve import SolverSettings, solve_elastic_critical_load, solve_linear_static


def _emit_error(name: str, detail: str) -> None:
    sys.stderr.write(modelio.dump_json(modelio.error_report(name, detail)))


def _read_model(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    model = modelio.model_from_dict(modelio.parse_json(text))
    violations = validate_model(model)
    if violations:
        raise ModelValidationError(violations)
    return model


def _write_report(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _settings_from(args) -> SolverSettings:
    return SolverSettings(
        condition_limit=args.condition_limit,
        eig_positivity_floor=args.eig_floor,
        complex_tolerance=args.complex_tol,
    )


def _cmd_static(args) -> int:
    model = _read_model(args.model)
    settings = _settings_from(args)
    solution = solve_linear_static(model, settings)
    report = modelio.static_report(model, solution, settings)
    if args.format == "csv":
        _write_report(args.out, modelio.static_csv(report))
    else:
        _write_report(args.out, modelio.dump_json(report))
    return 0


def _cmd_buckle(args) -> int:
    if args.format == "csv":
        raise SchemaError("CSV export covers displacement/reaction tables only; "
                          "buckling reports are JSON")
    model = _read_model(args.model)
    settings = _settings_from(args)
    result = solve_elastic_critical_load(model, settings)
    _write_report(args.out, modelio.dump_json(
        modelio.buckling_report(model, result, settings)))
    return 0


def _cmd_mesh1d(args) -> int:
    mesh = fem1d.uniform_mesh(args.x_min, args.x_max, args.num_elements)
    _write_report(args.out, modelio.dump_json(modelio.mesh1d_report(mesh)))
    return 0


def _cmd_mesh2d(args) -> int:
    build = tri6_rectangle if args.kind == "tri6" else quad8_rectangle
    x_lo, y_lo, x_hi, y_hi = args.bounds
    mesh = build(x_lo, y_lo, x_hi, y_hi, args.nx, args.ny)
    _write_report(args.out, modelio.dump_json(modelio.mesh2d_report(mesh)))
    return 0


def _cmd_element(args) -> int:
    if args.kind == "elastic":
        matrix = beam3d.elastic_stiffness(
            args.E, args.nu, args.A, args.L, args.Iy, args.Iz, args.J
        )
    elif args.kind == "geometric":
        matrix = beam3d.geometric_stiffness(
            args.L, args.A, args.I_rho,
            args.Fx2, args.Mx2, args.My1, args.Mz1, args.My2, args.Mz2,
        )
    else:  # transformation
        matrix = beam3d.transformation_matrix(args.xi, args.xj, args.local_z)
    _write_report(args.out, modelio.dump_json(modelio.matrix_report(args.kind, matrix)))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _add_solver_flags(sub) -> None:
    sub.add_argument("--model", required=True, help="path to the JSON model file")
    sub.add_argument("--out", default=None, help="report path (default: stdout)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--condition-limit", type=float, default=1e16,
                     help="reject systems at or beyond this condition number")
    sub.add_argument("--eig-floor", type=float, default=1e-10,
                     help="smallest eigenvalue considered a buckling mode")
    sub.add_argument("--complex-tol", type=float, default=1e-8,
                     help="relative imaginary part tolerated in eigenvalues")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="3D frame statics and buckling, 1D/2D FEM utilities.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    static = commands.add_parser("static", help="linear-elastic analysis")
    _add_solver_flags(static)
    static.set_defaults(handler=_cmd_static)

    buckle = commands.add_parser("buckle", help="elastic critical-load analysis")
    _add_solver_flags(buckle)
    buckle.set_defaults(handler=_cmd_buckle)

    mesh1d = commands.add_parser("mesh1d", help="uniform 1D mesh")
    mesh1d.add_argument("--x-min", type=float, required=True)
    mesh1d.add_argument("--x-max", type=float, required=True)
    mesh1d.add_argument("--num-elements", type=int, required=True)
    mesh1d.add_argument("--out", default=None)
    mesh1d.set_defaults(handler=_cmd_mesh1d)

    mesh2d = commands.add_parser("mesh2d", help="structured 2D rectangle mesh")
    mesh2d.add_argument("--kind", choices=("tri6", "quad8"), required=True)
    mesh2d.add_argument("--nx", type=int, required=True)
    mesh2d.add_argument("--ny", type=int, required=True)
    mesh2d.add_argument("--bounds", type=float, nargs=4, default=(0.0, 0.0, 1.0, 1.0),
                        metavar=("XLO", "YLO", "XHI", "YHI"),
                        help="rectangle corners (default: unit square)")
    mesh2d.add_argument("--out", default=None)
    mesh2d.set_defaults(handler=_cmd_mesh2d)

    element = commands.add_parser("element", help="print a single element matrix")
    element.add_argument("--kind", choices=("elastic", "geometric", "transformation"),
                         required=True)
    element.add_argument("--E", type=float, default=None)
    element.add_argument("--nu", type=float, default=None)
    element.add_argument("--A", type=float, default=None)
    element.add_argument("--L", type=float, default=None)
    element.add_argument("--Iy", type=float, default=None)
    element.add_argument("--Iz", type=float, default=None)
    element.add_argument("--J", type=float, default=None)
    element.add_argument("--I-rho", dest="I_rho", type=float, default=None)
    element.add_argument("--Fx2", type=float, default=0.0)
    element.add_argument("--Mx2", type=float, default=0.0)
    element.add_argument("--My1", type=float, default=0.0)
    element.add_argument("--Mz1", type=float, default=0.0)
    element.add_argument("--My2", type=float, default=0.0)
    element.add_argument("--Mz2", type=float, default=0.0)
    element.add_argument("--xi", type=float, nargs=3, default=None,
                         metavar=("X", "Y", "Z"), help="start point (transformation)")
    element.add_argument("--xj", type=float, nargs=3, default=None,
                         metavar=("X", "Y", "Z"), help="end point (transformation)")
    element.add_argument("--local-z", dest="local_z", type=float, nargs=3, default=None,
                         metavar=("X", "Y", "Z"))
    element.add_argument("--out", default=None)
    element.set_defaults(handler=_cmd_element)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def _check_element_args(args) -> None:
    required = {
        "elastic": ("E", "nu", "A", "L", "Iy", "Iz", "J"),
        "geometric": ("L", "A", "I_rho"),
        "transformation": ("xi", "xj"),
    }[args.kind]
    missing = [name for name in required if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + name.replace("_", "-") for name in missing)
        raise SchemaError(f"element --kind {args.kind} requires {flags}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if getattr(args, "command", None) == "element":
            _check_element_args(args)
        return args.handler(args)
    except (SchemaError, ModelValidationError) as exc:
        _emit_error(exc.name, str(exc))
        return 2
    except FrameKitError as exc:
        _emit_error(exc.name, str(exc))
        return 3
    except OSError as exc:
        _emit_error("io-failure", str(exc))
        return 4


if __name__ == "__main__":
    sys.exit(main())
