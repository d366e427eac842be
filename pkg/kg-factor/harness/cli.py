#!/usr/bin/env python3

from typing import List, Optional
import argparse
import math
import signal
import time

import sentry_sdk

from config import HarnessConfig, SimConfig, apply_overrides, load_config_dict
from core import (
    ConfigurationError,
    DegenerateScanError,
    DivergenceError,
    EvanescentContentError,
    GridMismatchError,
    InsufficientSamplesError,
    KGFactorError,
    ValidityThresholdError,
)
from storage import ResultWriter
from utils import log
from workers import ScanWorker, ScanWorkerConfig
from .compare import compare
from .dispersion import dispersion_extract
from .output import (
    RESONANCE_FILE,
    build_metadata,
    write_error_report,
    write_run,
    write_scan,
)
from .results import Alignment
from .runner import run
from .scans import convergence_scan, resonance_scan

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_DIVERGENCE = 3
EXIT_VALIDITY = 4
EXIT_INTERRUPTED = 130

# first matching class wins
EXIT_CODES = (
    (ValidityThresholdError, EXIT_VALIDITY),
    (DivergenceError, EXIT_DIVERGENCE),
    (EvanescentContentError, EXIT_DIVERGENCE),
    (ConfigurationError, EXIT_CONFIG),
    (GridMismatchError, EXIT_CONFIG),
    (DegenerateScanError, EXIT_CONFIG),
    (InsufficientSamplesError, EXIT_CONFIG),
)


def exit_code_for(e: KGFactorError) -> int:
    for error_class, code in EXIT_CODES:
        if isinstance(e, error_class):
            return code
    return EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kg_factor",
                                     description="Klein-Gordon factorization experiments on periodic grids")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        command = commands.add_parser(name, help=help_text)
        command.add_argument("--config", required=True, help="JSON run configuration (path or URI)")
        command.add_argument("--out", required=True, help="output directory (path or URI)")
        command.add_argument("--override", action="append", default=[], metavar="KEY=VALUE",
                             help="set a dotted config key; the value is parsed as JSON when possible")
        command.add_argument("--enforce-validity", action="store_true",
                             help="abort with exit code 4 when the validity ratio reaches its threshold")
        return command

    add_command("simulate", "run one configuration and record series and snapshots")
    add_command("dispersion", "run one configuration and fit per-mode phase rates")
    for name, help_text in (("compare", "L2 error between two runs from the same initial packet"),
                            ("scan", "compare error over a parameter scan, with a fitted exponent")):
        command = add_command(name, help_text)
        command.add_argument("--against", help="configuration of the second leg (defaults to --config)")
        command.add_argument("--against-override", action="append", default=[], metavar="KEY=VALUE",
                             help="override applied to the second leg only")
        command.add_argument("--alignment", default=Alignment.NONE.value,
                             choices=[a.value for a in Alignment])
    commands.choices["scan"].add_argument("--parameter", required=True,
                                          help="k0, m, omega_xi, v0, xi_amplitude or a dotted config key")
    commands.choices["scan"].add_argument("--values", required=True, nargs="+", type=float)
    resonance = add_command("resonance", "backward-component growth over Xi drive frequencies")
    resonance.add_argument("--values", required=True, nargs="+", type=float)
    return parser


def load_config(path: str, overrides: List[str], enforce_validity: bool) -> SimConfig:
    d = apply_overrides(load_config_dict(path), overrides)
    if enforce_validity:
        d["enforce_validity"] = True
    return SimConfig.create_from_dict(d)


class Session:
    """One CLI invocation: harness settings, the scan worker and the output location."""

    def __init__(self, args: argparse.Namespace, harness: HarnessConfig):
        self._args = args
        self._worker = ScanWorker(ScanWorkerConfig.create_from_harness(harness))
        self._started = time.perf_counter()

    def _config(self) -> SimConfig:
        args = self._args
        return load_config(args.config, args.override, args.enforce_validity)

    def _against(self) -> SimConfig:
        args = self._args
        return load_config(args.against or args.config, args.override + args.against_override,
                           args.enforce_validity)

    def _finish(self, writer: ResultWriter, config_echo: dict, extra: Optional[dict] = None) -> None:
        wall_time = time.perf_counter() - self._started
        writer.write_metadata(build_metadata(self._args.command, config_echo, wall_time, extra))

    def simulate(self, writer: ResultWriter) -> None:
        config = self._config()
        result = run(config)
        write_run(writer, result)
        self._finish(writer, config.to_dict())

    def dispersion(self, writer: ResultWriter) -> None:
        config = self._config()
        result = run(config)
        result.dispersion = dispersion_extract(result)
        write_run(writer, result, snapshots=False)
        self._finish(writer, config.to_dict(), {"modes": len(result.dispersion)})

    def compare(self, writer: ResultWriter) -> None:
        config_a, config_b = self._config(), self._against()
        report = compare(config_a, config_b, Alignment(self._args.alignment), self._worker)
        write_error_report(writer, report, "z" if config_a.solver.is_p else "t")
        self._finish(writer, {"a": config_a.to_dict(), "b": config_b.to_dict()},
                     {"field": report.field, "alignment": report.alignment.value,
                      "final_error": report.final_error, "final_ratio": report.final_ratio})

    def scan(self, writer: ResultWriter) -> None:
        config_a, config_b = self._config(), self._against()
        args = self._args
        table = convergence_scan(config_a, config_b, args.parameter, args.values, Alignment(args.alignment),
                                 self._worker)
        write_scan(writer, table)
        exponent = None if math.isnan(table.exponent) else table.exponent
        self._finish(writer, {"a": config_a.to_dict(), "b": config_b.to_dict()},
                     {"parameter": table.parameter, "exponent": exponent})

    def resonance(self, writer: ResultWriter) -> None:
        config = self._config()
        table = resonance_scan(config, self._args.values, self._worker)
        write_scan(writer, table, RESONANCE_FILE)
        self._finish(writer, config.to_dict(), {"peak": table.peak})

    def execute(self) -> None:
        writer = ResultWriter.create(self._args.out)
        getattr(self, self._args.command)(writer)

    def shutdown(self, sig, _):
        log.info(f"Captured signal {sig}, shutting down")
        self._worker.shutdown()
        log.info("Graceful shutdown handled")
        raise KeyboardInterrupt


def init_sentry(sentry_dsn, environment=None):
    if sentry_dsn != "":
        sentry_sdk.init(
            sentry_dsn,
            environment=environment,
        )
        return True
    return False


def handle_shutdown(handler):
    signal.signal(signal.SIGINT, handler)
    signal.signal(signal.SIGTERM, handler)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    harness = HarnessConfig.create_from_env()
    harness.sentry.enabled = init_sentry(harness.sentry.sentry_dsn, harness.sentry.environment)

    session = Session(args, harness)
    handle_shutdown(session.shutdown)
    try:
        session.execute()
    except KGFactorError as e:
        code = exit_code_for(e)
        if code == EXIT_FAILURE:
            log.exception(f"{args.command} failed")
            if harness.sentry.enabled:
                sentry_sdk.capture_exception(e)
        else:
            log.error(f"{args.command} failed: {e}")
        return code
    except KeyboardInterrupt:
        log.warning(f"{args.command} interrupted")
        return EXIT_INTERRUPTED
    except Exception as e:
        log.exception(f"Unexpected error in {args.command}")
        if harness.sentry.enabled:
            sentry_sdk.capture_exception(e)
        return EXIT_FAILURE
    log.info(f"{args.command} finished, results in {args.out}")
    return EXIT_OK
