import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

# Make the package importable when run as a script: python walk_app/main.py ...
sys.path.append(str(Path(__file__).resolve().parents[1]))

from amplitude.state_vector import StateVector
from closed_form.crosscheck import audit, part_key_of, verify
from closed_form.counting import sequence_count
from closed_form.evaluate import closed_distribution
from clusters.mask import cluster_mask, format_mask
from clusters.profile import UnclassifiableSequence, phase_from_profile, profile
from paths.oracle import OracleLimitError, oracle_state, path_outcome
from paths.sequences import WALK_PREFIX, SequenceError, parse_sequence
from walk.distribution import Distribution, distribution, moments, simulate_distribution
from walk.init_file import InitStateError, load_init_file
from walk.peaks import is_symmetric, local_maxima
from walk.presets import preset_init
from walk_app.emit import distribution_output, exact, render, render_decimal, write_text
from walk_app.schemas_input import RunConfig, WalkCase, WalkDefaults
from walk_app.schemas_output import DistributionOutput, PeakEntry, PeakReport

logger = logging.getLogger("walk_app")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2

COMMANDS = ("simulate", "verify", "profile", "peaks", "closed-form", "oracle")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qwalk",
        description="Exact Hadamard walks with 0, 1 or 2 steps of memory",
    )
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("sequence", nargs="?", help="direction text for 'profile', e.g. RLRRL")
    ap.add_argument("--memory", type=int, default=2, help="memory order 0, 1 or 2")
    ap.add_argument("--steps", type=int, default=None, help="walk steps (verify: upper limit)")
    ap.add_argument("--init", default="single", help="single, symmetric or file:PATH")
    ap.add_argument("--format", default="csv", help="csv or json")
    ap.add_argument("--out", default=None, help="output path; stdout when omitted")
    ap.add_argument("--precision", type=int, default=None, help="significant digits in csv")
    ap.add_argument("--max-oracle", type=int, default=None, help="largest n the path oracle may enumerate")
    ap.add_argument("--workers", type=int, default=None, help="oracle worker processes for verify")
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    # only flags the user passed override the WalkDefaults values
    defaults = {
        "precision": args.precision,
        "max_oracle": args.max_oracle,
        "workers": args.workers,
    }
    return RunConfig(
        command=args.command,
        memory=args.memory,
        steps=0 if args.steps is None else args.steps,
        init=args.init,
        out=args.out,
        format=args.format,
        sequence=args.sequence,
        defaults=WalkDefaults(**{k: v for k, v in defaults.items() if v is not None}),
    )


def initial_state(cfg: RunConfig) -> StateVector:
    # file:PATH wins over the named presets
    if cfg.init_file is not None:
        return load_init_file(cfg.init_file, cfg.memory)
    return preset_init(cfg.init, cfg.memory)


def _require_single_memory_two(cfg: RunConfig) -> None:
    if cfg.memory != 2 or cfg.init != "single":
        raise ValueError(f"{cfg.command} is defined for --memory 2 --init single only")


def walk_distribution(cfg: RunConfig) -> Distribution:
    """Distribution after cfg.steps steps, by the evaluator the command names."""
    if cfg.command == "oracle":
        _require_single_memory_two(cfg)
        if cfg.steps < 1:
            raise ValueError("oracle needs --steps of at least 1")
        return distribution(oracle_state(cfg.steps, cfg.defaults.max_oracle))
    if cfg.command == "closed-form":
        _require_single_memory_two(cfg)
        if cfg.steps < 1:
            raise ValueError("closed-form needs --steps of at least 1")
        return closed_distribution(cfg.steps)
    # simulate and peaks both step the simulator
    return simulate_distribution(cfg.memory, initial_state(cfg), cfg.steps)


def peak_report(cfg: RunConfig, dist: Distribution) -> PeakReport:
    precision = cfg.defaults.precision
    mean, variance = moments(dist)
    return PeakReport(
        memory=cfg.memory,
        steps=cfg.steps,
        init=cfg.init,
        peaks=[PeakEntry(k=k, p=exact(p), decimal=render_decimal(p, precision)) for k, p in local_maxima(dist)],
        symmetric=is_symmetric(dist),
        mean=exact(mean),
        variance=exact(variance),
    )


def render_peaks(report: PeakReport, fmt: str) -> str:
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    lines = ["position,probability"]
    lines += [f"{e.k},{e.decimal}" for e in report.peaks]
    lines.append(f"# symmetric={str(report.symmetric).lower()} mean={report.mean} variance={report.variance}")
    return "\n".join(lines) + "\n"


def run_case(case: WalkCase) -> Union[DistributionOutput, PeakReport]:
    """Exact result of one golden case."""
    cfg = RunConfig(command=case.command, memory=case.memory, steps=case.steps, init=case.init, format="json")
    dist = walk_distribution(cfg)
    if case.command == "peaks":
        return peak_report(cfg, dist)
    return distribution_output(dist, case.memory, case.steps)


def profile_lines(text: str) -> List[str]:
    text = parse_sequence(text)
    mask_line = f"mask:    {format_mask(cluster_mask(text))}"
    try:
        p = profile(text, walk_prefix=False)
    except UnclassifiableSequence as exc:
        return [mask_line, f"profile: none ({exc.reason})"]
    walk_path = text.startswith(WALK_PREFIX)
    phase = phase_from_profile(p)
    lines = [
        mask_line,
        f"profile: {p.as_tuple()}",
        f"phase:   {phase:+d}",
    ]
    # sign, final position and part only exist for RL-prefixed walk paths
    if not walk_path:
        return lines
    outcome = path_outcome(text)
    lines += [
        f"sign:    {outcome.sign:+d} ({'match' if outcome.sign == phase else 'MISMATCH'})",
        f"final:   k={outcome.position}, j={outcome.basis}",
        f"count:   {sequence_count(p)}",
        f"part:    {part_key_of(text, outcome)}",
    ]
    return lines


def cmd_verify(cfg: RunConfig) -> int:
    limit = cfg.steps or cfg.defaults.verify_limit
    report = verify(limit, max_steps=cfg.defaults.max_oracle, workers=cfg.defaults.workers)
    # audit the written forms only once the shipped ones agree
    if report.passed:
        report.deviations = audit(limit, max_steps=cfg.defaults.max_oracle)
    # Write the full report when asked; the summary always goes to the terminal
    if cfg.out:
        write_text(report.model_dump_json(indent=2) + "\n", cfg.out)

    if report.passed:
        print(f"verify: n=1..{limit} simulator, oracle and closed form agree")
        if report.deviations and report.deviations.deviations:
            print(f"verify: {len(report.deviations.deviations)} part(s) as written deviate from the oracle; corrected forms ship (see report)")
        return EXIT_OK
    if report.mismatch is not None:
        m = report.mismatch
        print(
            f"verify: mismatch at n={m.n}, k={m.k}, j={m.j}: simulator={m.simulator}, "
            f"oracle={m.oracle}, closed form={m.closed_form}",
            file=sys.stderr,
        )
        if m.parts:
            print(f"verify: failing parts: {', '.join(m.parts)}", file=sys.stderr)
    for defect in report.defects:
        print(f"verify: {defect}", file=sys.stderr)
    return EXIT_MISMATCH


def cmd_simulate(cfg: RunConfig) -> int:
    """simulate, closed-form and oracle: emit the distribution."""
    dist = walk_distribution(cfg)
    write_text(render(dist, cfg.memory, cfg.steps, cfg.format, cfg.defaults.precision), cfg.out)
    return EXIT_OK


def cmd_profile(cfg: RunConfig) -> int:
    if not cfg.sequence:
        raise SequenceError("profile needs a direction sequence")
    write_text("\n".join(profile_lines(cfg.sequence)) + "\n", cfg.out)
    return EXIT_OK


def cmd_peaks(cfg: RunConfig) -> int:
    report = peak_report(cfg, walk_distribution(cfg))
    write_text(render_peaks(report, cfg.format), cfg.out)
    return EXIT_OK


HANDLERS = {
    "simulate": cmd_simulate,
    "closed-form": cmd_simulate,
    "oracle": cmd_simulate,
    "verify": cmd_verify,
    "profile": cmd_profile,
    "peaks": cmd_peaks,
}


def execute(cfg: RunConfig) -> int:
    logger.info("running %s (memory=%d, steps=%d, init=%s)", cfg.command, cfg.memory, cfg.steps, cfg.init)
    return HANDLERS[cfg.command](cfg)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=os.environ.get("QWALK_LOG_LEVEL", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    # argparse exits with code 2 on its own for unknown commands
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return execute(cfg)
    except ValidationError as e:
        print(f"invalid arguments:\n{e}", file=sys.stderr)
    except (InitStateError, SequenceError, OracleLimitError) as e:
        print(f"error: {e}", file=sys.stderr)
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
    return EXIT_INVALID


if __name__ == "__main__":
    # Optional debug attach: set DEBUG_WAIT=1 in env to wait for debugger attach
    if os.environ.get("DEBUG_WAIT") == "1":
        try:
            import debugpy
            print("Waiting for debugger to attach on 5678...")
            debugpy.listen(5678)
            debugpy.wait_for_client()
            print("Debugger attached, continuing...")
        except Exception:
            print("debugpy not available or failed to start; continuing without debugger")

    raise SystemExit(main())
