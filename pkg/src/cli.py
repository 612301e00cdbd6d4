import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import get_settings
from exceptions import BaseMellinError, BaseTorsionError
from torsion.checks import run_acceptance
from torsion.report import load_report_config, run_report, write_report

logger = logging.getLogger("torsion.cli")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        description="Trace-formula contributions along a highest-weight ray tau(m) of a hyperbolic orbifold."
    )
    parser.add_argument("--config", type=Path, default=Path(settings.PATH_TO_MODEL_CONFIG),
                        help="JSON orbifold configuration (default: the model orbifold).")
    parser.add_argument("--out", type=Path, default=None, help="Output path for the report.")
    parser.add_argument("--format", choices=["csv", "json"], default="csv", dest="output_format",
                        help="Report format (default: csv).")
    parser.add_argument("--check", action="store_true",
                        help="Run the acceptance suite and exit nonzero on failure.")
    parser.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS,
                        help=f"Worker processes for the per-m computations (default: {settings.DEFAULT_JOBS}).")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=get_settings().LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    if args.check:
        results = run_acceptance()
        failed = [result.name for result in results if not result.passed]
        if failed:
            logger.error(f"{len(failed)} acceptance check(s) failed: {', '.join(failed)}")
            return 1
        logger.info(f"All {len(results)} acceptance checks passed")
        return 0

    if args.out is None:
        logger.error("--out is required unless --check is given")
        return 2

    try:
        config = load_report_config(args.config)
        report = run_report(config, jobs=args.jobs)
    except (BaseMellinError, BaseTorsionError, ValueError) as error:
        logger.error(f"Report failed: {error}")
        return 1

    write_report(report, args.out, args.output_format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
