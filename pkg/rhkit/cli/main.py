"""
Command-line front end of rhkit.

    rhkit shock solve --upstream state.json --eos eos.json --mach 2 --normal 1,0,0 --dn 0
    rhkit shock hugoniot --upstream state.json --ratios 1.01:5.99:200
    rhkit shock check --pair pair.json
    rhkit shock gap-demo --rho2 2
    rhkit tensor check --field trig_mix --samples 8
    rhkit riemann solve --left left.json --right right.json --samples 400 --t 0.2
    rhkit kinematics decompose --matrix "[[1,0,0,0],[0.5,1,0,0],[0,0,1,0],[0,0,0,1]]"
    rhkit schema shock-solve

Results go to stdout (JSON, or CSV with 17 significant digits); diagnostics
go to stderr. Exit codes: 0 success, 1 usage error, 2 physics/domain error
or failed residual check.
"""

import argparse
import json
import logging
from pathlib import Path
import sys
from typing import Optional, Sequence, TextIO

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError
import yaml

from rhkit.cli.config import RunConfig, load_config, load_environment
from rhkit.cli.schemas import (
    SCHEMAS,
    ClosureOutput,
    ContactOutput,
    DetIdentityOutput,
    ErrorDetail,
    ErrorOutput,
    GapDemoOutput,
    HugoniotOutput,
    HugoniotPointOutput,
    KinematicsOutput,
    LaxOutput,
    PairInput,
    PairOutput,
    ResidualsOutput,
    RiemannOutput,
    RiemannSampleOutput,
    RiemannStarOutput,
    ShockCheckOutput,
    ShockReport,
    ShockSolveOutput,
    StateInput,
    StateOutput,
    TensorCheckOutput,
)
from rhkit.eos import Eos, IdealGas, load_eos
from rhkit.errors import InvalidInputError, RHKitError
from rhkit.kinematics import CONTACT_THRESHOLD, SurfaceFrame, decompose_tangent_map
from rhkit.riemann import ExactRiemannSolver
from rhkit.shock import (
    DownDensity,
    DownPressure,
    Mach,
    ShockPair,
    ShockSolver,
    contact_conditions,
    det_jump_identity,
    lax_admissible,
    reference_surface_term,
    rh_residuals,
    spacetime_surface_term,
)
from rhkit.shock.conditions import Scales
from rhkit.tensors import BUILTIN_FIELDS, FluidState, ResidualEvaluator, builtin_field
from rhkit.tensors import load_field_spec
from rhkit.tensors.residuals import DEFAULT_STEP, STENCILS
from rhkit.utils import setup_logging

logger = logging.getLogger("rhkit.cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

CSV_FLOAT_FORMAT = "%.17g"


# ====================================================
# 📋 ARGUMENT TYPES
# ====================================================


def _floats(text: str):
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _vector3(text: str) -> np.ndarray:
    values = _floats(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected 3 comma-separated numbers, got {text!r}")
    return np.asarray(values)


def _ratios(text: str) -> np.ndarray:
    """``start:stop:count`` (inclusive linspace) or a comma-separated list."""
    if ":" not in text:
        return np.asarray(_floats(text))
    parts = text.split(":")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except (ValueError, IndexError):
        raise argparse.ArgumentTypeError(f"expected start:stop:count, got {text!r}")
    if len(parts) != 3 or count < 1:
        raise argparse.ArgumentTypeError(f"expected start:stop:count (count >= 1), got {text!r}")
    return np.linspace(start, stop, count)


def _points(text: str) -> np.ndarray:
    """Semicolon-separated ``t,x1,x2,x3`` points."""
    points = [_floats(chunk) for chunk in text.split(";") if chunk.strip()]
    if not points or any(len(point) != 4 for point in points):
        raise argparse.ArgumentTypeError(f"expected t,x1,x2,x3[;t,x1,x2,x3...], got {text!r}")
    return np.asarray(points)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _json_matrix(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"matrix is not valid JSON: {exc}")


# ====================================================
# 🔧 INPUT / OUTPUT HELPERS
# ====================================================


def _read_document(path: str):
    """Read a JSON or YAML document."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    with open(path, "r", encoding="utf-8") as file:
        return yaml.safe_load(file)


def _resolve_eos(args, config: RunConfig) -> Eos:
    path = args.eos or config.eos_path
    if path is None:
        return IdealGas()
    return load_eos(path)


def _load_state(path: str, eos: Eos) -> FluidState:
    return StateInput.model_validate(_read_document(path)).to_state(eos)


def _output_format(args, config: RunConfig, default: str) -> str:
    return args.format or config.output_format or default


def _emit_json(model: BaseModel, out: TextIO):
    out.write(model.model_dump_json(indent=2))
    out.write("\n")


def _emit_csv(table: pd.DataFrame, out: TextIO):
    table.to_csv(out, index=False, float_format=CSV_FLOAT_FORMAT)


def _state_output(state: FluidState, eos: Eos) -> StateOutput:
    return StateOutput(**state.to_dict(), p=state.pressure(eos))


def _pair_output(pair: ShockPair, eos: Eos) -> PairOutput:
    data = pair.to_dict()
    data["up"] = _state_output(pair.up, eos)
    data["down"] = _state_output(pair.down, eos)
    return PairOutput(**data)


def _residuals_output(pair: ShockPair, eos: Eos) -> ResidualsOutput:
    residuals = rh_residuals(pair, eos)
    return ResidualsOutput(**residuals.to_dict(), norm=residuals.norm())


def _check(passed: bool, what: str, value: float, tol: float) -> bool:
    if not passed:
        logger.warning(f"Check failed: {what} = {value:.3e} (tolerance {tol:.1e})")
    return passed


def _mach2_upstream(eos: Eos) -> FluidState:
    """rho = 1, p = 1 moving at twice its sound speed along x1."""
    rest = FluidState.from_pressure(1.0, [0.0, 0.0, 0.0], 1.0, eos)
    return rest.with_velocity([2.0 * rest.sound_speed(eos), 0.0, 0.0])


# ====================================================
# 🚀 SHOCK COMMANDS
# ====================================================


def _strength(args):
    if args.mach is not None:
        return Mach(args.mach)
    if args.p2 is not None:
        return DownPressure(args.p2)
    return DownDensity(args.rho2)


def shock_solve(args, config: RunConfig, out: TextIO) -> int:
    """Solve the downstream state and report every jump condition."""
    eos = _resolve_eos(args, config)
    up = _load_state(args.upstream, eos)
    solver = ShockSolver(eos, logger=logger)
    pair = solver.solve_downstream(up, SurfaceFrame.from_direction(args.normal), _strength(args))
    if args.dn is not None and args.dn != pair.frame.D_n:
        delta = args.dn - pair.frame.D_n
        logger.info(f"Boosting the solved pair by {delta:.12g} along n so that D_n = {args.dn}")
        pair = pair.boosted(delta)

    residuals = _residuals_output(pair, eos)
    spacetime = spacetime_surface_term(pair, eos)
    reference = reference_surface_term(pair, eos)
    closure = pair.closure_residuals()
    lemma, ratio = det_jump_identity(
        pair.F_up, pair.velocity_jump, -pair.w, pair.u_up, pair.u_down
    )
    lax = lax_admissible(pair, eos)

    checks = [
        ("rh_residuals", residuals.norm),
        ("spacetime_term", float(np.linalg.norm(spacetime))),
        ("reference_term", float(np.linalg.norm(reference))),
        ("closure", max(closure.values())),
    ]
    passed = True
    for name, value in checks:
        tol = config.tolerance(name)
        passed &= _check(value < tol, name, value, tol)
    if not lax.admissible:
        logger.warning(f"Shock is not Lax admissible: {lax.reason}")

    c_down = pair.down.sound_speed(eos)
    _emit_json(
        ShockSolveOutput(
            pair=_pair_output(pair, eos),
            rho2=pair.down.rho,
            p2=pair.down.pressure(eos),
            u1=pair.u_up,
            u2=pair.u_down,
            mach_up=pair.u_up / pair.up.sound_speed(eos),
            mach_down=pair.u_down / c_down,
            residuals=residuals,
            spacetime_term=spacetime.tolist(),
            spacetime_term_norm=float(np.linalg.norm(spacetime)),
            reference_term=reference.tolist(),
            reference_term_norm=float(np.linalg.norm(reference)),
            closure=ClosureOutput(**closure),
            det_identity=DetIdentityOutput(lemma=lemma, ratio=ratio),
            lax=LaxOutput(**lax.to_dict()),
            passed=bool(passed),
        ),
        out,
    )
    return EXIT_OK if passed else EXIT_FAILED


def shock_hugoniot(args, config: RunConfig, out: TextIO) -> int:
    """Sample the Hugoniot locus of the upstream state."""
    eos = _resolve_eos(args, config)
    up = _load_state(args.upstream, eos)
    solver = ShockSolver(eos, logger=logger)
    points = solver.hugoniot_locus(up, SurfaceFrame.from_direction(args.normal), args.ratios)
    table = pd.DataFrame(
        [point.to_dict() for point in points], columns=["rho2", "p2", "u2", "s2", "D_n"]
    ).rename(columns={"D_n": "Dn"})

    if _output_format(args, config, "csv") == "csv":
        _emit_csv(table, out)
    else:
        rows = [HugoniotPointOutput(**row) for row in table.to_dict(orient="records")]
        _emit_json(HugoniotOutput(points=rows), out)
    return EXIT_OK


def shock_check(args, config: RunConfig, out: TextIO) -> int:
    """Check the jump conditions of a user-supplied pair."""
    eos = _resolve_eos(args, config)
    document = PairInput.model_validate(_read_document(args.pair))
    frame = SurfaceFrame.from_direction(document.n, D_n=document.D_n)
    pair = ShockPair.from_states(
        document.up.to_state(eos), document.down.to_state(eos), frame, F_up=document.F_up
    )
    spacetime = spacetime_surface_term(pair, eos)
    spacetime_norm = float(np.linalg.norm(spacetime))
    lax = LaxOutput(**lax_admissible(pair, eos).to_dict())
    report = dict(
        pair=_pair_output(pair, eos),
        spacetime_term=spacetime.tolist(),
        spacetime_term_norm=spacetime_norm,
        lax=lax,
    )

    is_contact = bool(abs(pair.u_up) < CONTACT_THRESHOLD)
    if is_contact:
        logger.info("Relative velocity vanishes: checking contact conditions")
        contact = contact_conditions(pair, eos, tol=config.tolerance("contact"))
        passed = contact["is_contact"]
        output = ShockCheckOutput(
            is_contact=True, contact=ContactOutput(**contact), passed=passed, **report
        )
    else:
        residuals = _residuals_output(pair, eos)
        reference = reference_surface_term(pair, eos)
        passed = True
        for name, value in (("rh_residuals", residuals.norm), ("spacetime_term", spacetime_norm)):
            tol = config.tolerance(name)
            passed &= _check(value < tol, name, value, tol)
        output = ShockCheckOutput(
            is_contact=False,
            residuals=residuals,
            reference_term=reference.tolist(),
            reference_term_norm=float(np.linalg.norm(reference)),
            closure=ClosureOutput(**pair.closure_residuals()),
            passed=bool(passed),
            **report,
        )
    _emit_json(output, out)
    return EXIT_OK if output.passed else EXIT_FAILED


def shock_gap_demo(args, config: RunConfig, out: TextIO) -> int:
    """Build a pair the reference-space variation accepts although [p + rho u^2] != 0."""
    eos = _resolve_eos(args, config)
    up = _load_state(args.upstream, eos) if args.upstream else _mach2_upstream(eos)
    frame = SurfaceFrame.from_direction(args.normal, D_n=args.dn)
    solver = ShockSolver(eos, logger=logger)
    pair = solver.construct_crh2_pair(up, frame, args.rho2)

    reference = reference_surface_term(pair, eos)
    spacetime = spacetime_surface_term(pair, eos)
    reference_norm = float(np.linalg.norm(reference))
    spacetime_norm = float(np.linalg.norm(spacetime))
    scales = Scales.upstream(pair, eos)
    momentum_flux = [
        state.pressure(eos) + state.rho * u**2
        for state, u in ((pair.up, pair.u_up), (pair.down, pair.u_down))
    ]
    momentum_jump = (momentum_flux[1] - momentum_flux[0]) / scales.p

    reference_tol = config.tolerance("reference_term")
    gap_tol = config.tolerance("gap_spacetime")
    passed = _check(
        reference_norm < reference_tol, "reference_term", reference_norm, reference_tol
    )
    if not spacetime_norm > gap_tol:
        logger.warning(
            f"No variational gap: N*[T] norm {spacetime_norm:.3e} is below {gap_tol:.1e} "
            "(rho2 is on the Hugoniot locus)"
        )
        passed = False

    _emit_json(
        GapDemoOutput(
            pair=_pair_output(pair, eos),
            rho2=pair.down.rho,
            density_ratio=pair.down.rho / pair.up.rho,
            momentum_jump=momentum_jump,
            reference_term=reference.tolist(),
            reference_term_norm=reference_norm,
            spacetime_term=spacetime.tolist(),
            spacetime_term_norm=spacetime_norm,
            passed=bool(passed),
        ),
        out,
    )
    return EXIT_OK if passed else EXIT_FAILED


# ====================================================
# 🚀 TENSOR, RIEMANN AND KINEMATICS COMMANDS
# ====================================================


def _random_points(seed: int, count: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    t = rng.uniform(0.0, 0.2, size=count)
    x = rng.uniform(-0.5, 0.5, size=(count, 3))
    return np.column_stack((t, x))


def tensor_check(args, config: RunConfig, out: TextIO) -> int:
    """Residual table of a smooth field and the F* - Div T equivalence gap."""
    eos = _resolve_eos(args, config)
    seed = config.seed if args.seed is None else args.seed
    if args.field_spec:
        field = load_field_spec(args.field_spec)
    else:
        field = builtin_field(args.field, seed=seed, eos=eos)
    points = args.points if args.points is not None else _random_points(seed, args.samples)

    evaluator = ResidualEvaluator(eos, step=args.step, order=args.order, logger=logger)
    table = evaluator.residual_table(field, points)
    max_table_gap = float(table["table_gap"].max())
    max_thermo_gap = float(table["thermo_gap"].max())
    tol = config.tolerance("table_gap")
    passed = _check(max_table_gap < tol, "table_gap", max_table_gap, tol)

    if _output_format(args, config, "csv") == "csv":
        _emit_csv(table, out)
    else:
        _emit_json(
            TensorCheckOutput(
                field=field.name,
                order=args.order,
                step=args.step,
                rows=table.to_dict(orient="records"),
                max_table_gap=max_table_gap,
                max_thermo_gap=max_thermo_gap,
                passed=bool(passed),
            ),
            out,
        )
    return EXIT_OK if passed else EXIT_FAILED


def _sod_states(eos: Eos):
    left = FluidState.from_pressure(1.0, [0.0, 0.0, 0.0], 1.0, eos)
    right = FluidState.from_pressure(0.125, [0.0, 0.0, 0.0], 0.1, eos)
    return left, right


def riemann_solve(args, config: RunConfig, out: TextIO) -> int:
    """Exact Riemann solution sampled at time t, with an RH check of every shock."""
    eos = _resolve_eos(args, config)
    solver = ExactRiemannSolver(eos, logger=logger)
    sod_left, sod_right = _sod_states(eos)
    left = _load_state(args.left, eos) if args.left else sod_left
    right = _load_state(args.right, eos) if args.right else sod_right

    solution = solver.solve_star(left, right)
    x = np.linspace(args.x_min, args.x_max, args.samples)
    table = solver.sample_grid(solution, left, right, x, args.t, x0=args.x0)

    tol = config.tolerance("rh_residuals")
    passed = True
    shocks = []
    for pair in solver.shock_pairs(solution, left, right):
        residuals = _residuals_output(pair, eos)
        lax = lax_admissible(pair, eos)
        passed &= _check(residuals.norm < tol, "rh_residuals", residuals.norm, tol)
        if not (lax.admissible and lax.entropy_jump > 0.0):
            logger.warning(f"Riemann shock fails the entropy condition: {lax.reason}")
            passed = False
        shocks.append(
            ShockReport(
                pair=_pair_output(pair, eos), residuals=residuals, lax=LaxOutput(**lax.to_dict())
            )
        )

    if _output_format(args, config, "csv") == "csv":
        _emit_csv(table, out)
    else:
        _emit_json(
            RiemannOutput(
                solution=RiemannStarOutput(**solution.to_dict()),
                t=args.t,
                x0=args.x0,
                samples=[RiemannSampleOutput(**row) for row in table.to_dict(orient="records")],
                shocks=shocks,
                passed=bool(passed),
            ),
            out,
        )
    return EXIT_OK if passed else EXIT_FAILED


def kinematics_decompose(args, config: RunConfig, out: TextIO) -> int:
    """Blocks of a 4x4 tangent map, velocity and deformation gradient."""
    matrix = args.matrix if args.matrix is not None else _read_document(args.matrix_file)
    blocks, motion = decompose_tangent_map(matrix)
    _emit_json(
        KinematicsOutput(
            mu=blocks.mu,
            w=blocks.w.tolist(),
            r=blocks.r.tolist(),
            B3=blocks.B3.tolist(),
            v=motion.v.tolist(),
            F=motion.F.tolist(),
            det_F=motion.det_F,
            four_velocity=motion.four_velocity.tolist(),
        ),
        out,
    )
    return EXIT_OK


def print_schema(args, config: RunConfig, out: TextIO) -> int:
    """JSON Schema of a CLI document."""
    schema = SCHEMAS[args.name].model_json_schema()
    out.write(json.dumps(schema, indent=2, sort_keys=True))
    out.write("\n")
    return EXIT_OK


# ====================================================
# 📋 PARSER
# ====================================================


class RHKitArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="YAML/JSON run configuration")
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Log level of the stderr diagnostics",
    )
    common.add_argument("--eos", type=str, default=None, help="EOS file (ideal gas by default)")
    return common


def _format_option(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format", choices=["json", "csv"], default=None, help="Output format (default csv)"
    )


def build_parser() -> RHKitArgumentParser:
    """Parser of every rhkit subcommand."""
    parser = RHKitArgumentParser(
        prog="rhkit", description="Space-time variational Rankine-Hugoniot toolkit"
    )
    common = _common_options()
    areas = parser.add_subparsers(dest="area", metavar="{shock,tensor,riemann,kinematics,schema}")
    areas.required = True

    # shock
    shock = areas.add_parser("shock", help="Jump conditions across a shock")
    shock_commands = shock.add_subparsers(dest="command")
    shock_commands.required = True

    solve = shock_commands.add_parser("solve", parents=[common], help="Solve the downstream state")
    solve.add_argument("--upstream", required=True, help="Upstream state JSON")
    strength = solve.add_mutually_exclusive_group(required=True)
    strength.add_argument("--mach", type=float, help="Upstream normal Mach number")
    strength.add_argument("--p2", type=float, help="Downstream pressure")
    strength.add_argument("--rho2", type=float, help="Downstream density")
    solve.add_argument("--normal", type=_vector3, default=np.array([1.0, 0.0, 0.0]))
    solve.add_argument("--dn", type=float, default=None, help="Boost the result to this D_n")
    solve.set_defaults(handler=shock_solve)

    hugoniot = shock_commands.add_parser(
        "hugoniot", parents=[common], help="Sample the Hugoniot locus"
    )
    hugoniot.add_argument("--upstream", required=True, help="Upstream state JSON")
    hugoniot.add_argument(
        "--ratios", type=_ratios, default=_ratios("1.01:5.99:200"), help="start:stop:count or list"
    )
    hugoniot.add_argument("--normal", type=_vector3, default=np.array([1.0, 0.0, 0.0]))
    _format_option(hugoniot)
    hugoniot.set_defaults(handler=shock_hugoniot)

    check = shock_commands.add_parser("check", parents=[common], help="Check a state pair")
    check.add_argument("--pair", required=True, help="Pair JSON (up, down, n, D_n, F_up)")
    check.set_defaults(handler=shock_check)

    gap = shock_commands.add_parser(
        "gap-demo", parents=[common], help="Reference-space conditions without normal momentum"
    )
    gap.add_argument("--rho2", type=float, default=2.0, help="Downstream density")
    gap.add_argument("--upstream", default=None, help="Upstream state JSON (Mach-2 default)")
    gap.add_argument("--normal", type=_vector3, default=np.array([1.0, 0.0, 0.0]))
    gap.add_argument("--dn", type=float, default=0.0, help="Normal speed of the surface")
    gap.set_defaults(handler=shock_gap_demo)

    # tensor
    tensor = areas.add_parser("tensor", help="Bulk equations on smooth fields")
    tensor_commands = tensor.add_subparsers(dest="command")
    tensor_commands.required = True
    tensor_check_parser = tensor_commands.add_parser(
        "check", parents=[common], help="Residual table of a smooth field"
    )
    source = tensor_check_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--field", choices=BUILTIN_FIELDS, help="Built-in manufactured field")
    source.add_argument("--field-spec", default=None, help="JSON/YAML field spec")
    tensor_check_parser.add_argument("--points", type=_points, default=None, help="t,x1,x2,x3;...")
    tensor_check_parser.add_argument("--samples", type=_positive_int, default=8)
    tensor_check_parser.add_argument("--seed", type=int, default=None)
    tensor_check_parser.add_argument("--step", type=float, default=DEFAULT_STEP)
    tensor_check_parser.add_argument("--order", type=int, choices=sorted(STENCILS), default=2)
    _format_option(tensor_check_parser)
    tensor_check_parser.set_defaults(handler=tensor_check)

    # riemann
    riemann = areas.add_parser("riemann", help="Exact 1-D Riemann problem")
    riemann_commands = riemann.add_subparsers(dest="command")
    riemann_commands.required = True
    riemann_solve_parser = riemann_commands.add_parser(
        "solve", parents=[common], help="Solve and sample a Riemann problem (Sod by default)"
    )
    riemann_solve_parser.add_argument("--left", default=None, help="Left state JSON")
    riemann_solve_parser.add_argument("--right", default=None, help="Right state JSON")
    riemann_solve_parser.add_argument("--samples", type=_positive_int, default=400)
    riemann_solve_parser.add_argument("--t", type=float, default=0.2, help="Sampling time")
    riemann_solve_parser.add_argument("--x0", type=float, default=0.5, help="Diaphragm position")
    riemann_solve_parser.add_argument("--x-min", type=float, default=0.0)
    riemann_solve_parser.add_argument("--x-max", type=float, default=1.0)
    _format_option(riemann_solve_parser)
    riemann_solve_parser.set_defaults(handler=riemann_solve)

    # kinematics
    kinematics = areas.add_parser("kinematics", help="Space-time tangent maps")
    kinematics_commands = kinematics.add_subparsers(dest="command")
    kinematics_commands.required = True
    decompose = kinematics_commands.add_parser(
        "decompose", parents=[common], help="Split a 4x4 tangent map"
    )
    matrix = decompose.add_mutually_exclusive_group(required=True)
    matrix.add_argument("--matrix", type=_json_matrix, default=None, help="4x4 matrix as JSON")
    matrix.add_argument("--matrix-file", default=None, help="File holding the 4x4 matrix")
    decompose.set_defaults(handler=kinematics_decompose)

    # schema
    schema = areas.add_parser("schema", parents=[common], help="Print a JSON Schema")
    schema.add_argument("name", choices=sorted(SCHEMAS))
    schema.set_defaults(handler=print_schema)

    return parser


# ====================================================
# 🚀 ENTRY POINT
# ====================================================


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one rhkit command.

    Args:
        argv: Argument list (sys.argv[1:] when None)
        out: Stream receiving the machine-readable result (stdout when None)

    Returns:
        Exit code: 0 success, 1 usage error, 2 physics error or failed check
    """
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    load_environment()
    try:
        config = load_config(args.config)
        setup_logging(args.log_level or config.logging.level)
        return args.handler(args, config, out)
    except InvalidInputError as exc:
        sys.stderr.write(f"rhkit: error: {exc}\n")
        return EXIT_USAGE
    except RHKitError as exc:
        logger.error(f"{exc.error_name} in {exc.module}: {exc}")
        _emit_json(ErrorOutput(error=ErrorDetail(**exc.to_dict())), out)
        return EXIT_FAILED
    except (ValidationError, FileNotFoundError, yaml.YAMLError, ValueError) as exc:
        sys.stderr.write(f"rhkit: error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
