"""Command-line driver.

    ruinfair run --config FILE [--sweep NAME] [--out DIR]
    ruinfair validate --config FILE

``run`` executes the named sweep (or every sweep in the file) and writes
``sweep_<name>.csv`` and ``manifest_<name>.json`` into the output directory.
Exit codes: 0 on success, 2 on configuration errors, 1 on runtime errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .config import load_scenario
from .errors import ConfigError
from .experiment import emit_csv, emit_manifest, run_sweep

__all__ = ["main"]

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_CONFIG = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ruinfair",
        description="Ruin-driven LTE-U/WiFi duty-cycle sharing experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run sweeps and write CSV + manifest")
    run.add_argument("--config", required=True, help="scenario JSON file")
    run.add_argument("--sweep", default=None, help="sweep name (default: all sweeps)")
    run.add_argument("--out", default=".", help="output directory (default: .)")

    validate = sub.add_parser("validate", help="parse and validate a scenario file")
    validate.add_argument("--config", required=True, help="scenario JSON file")

    return parser


def _cmd_validate(config_path: str) -> int:
    config = load_scenario(config_path)
    print(f"{config_path}: OK ({len(config.sweeps)} sweep(s): {', '.join(sorted(config.sweeps))})")
    return EXIT_OK


def _cmd_run(config_path: str, sweep_name: Optional[str], out_dir: str) -> int:
    config = load_scenario(config_path)
    if sweep_name is not None and sweep_name not in config.sweeps:
        raise ConfigError(
            f"sweeps.{sweep_name}: not defined; available: {sorted(config.sweeps)}"
        )
    names = [sweep_name] if sweep_name is not None else list(config.sweeps)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in names:
        rows = run_sweep(config, name)
        csv_path = emit_csv(rows, out / f"sweep_{name}.csv")
        manifest_path = emit_manifest(config, name, out / f"manifest_{name}.json")
        print(f"wrote {csv_path} and {manifest_path}")
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return _cmd_validate(args.config)
        return _cmd_run(args.config, args.sweep, args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001 (CLI boundary)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
