#!/usr/bin/env python3
"""
modsurf: modular curve, pants and flip graphs of surfaces at small genus.

Usage:
    python main.py enumerate --n 4 --filter connected
    python main.py modular pants --genus 3 --format dot
    python main.py sample-stats --n 100 --kmax 3 --samples 100000 --seed 7
    python main.py genus --builtin K5 --exact
    python main.py asymptotics flip --from 1 --to 12 --format csv
    python main.py flip-walk --n 6 --steps 1000 --seed 3
"""

import argparse
import logging
import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.orchestrator import FORMATS, Command, ExperimentRunner, RunConfig
from src.utils import config, get_logger, set_global_level
from src.utils.errors import ModsurfError

logger = get_logger(__name__)


def _add_common(parser: argparse.ArgumentParser, command: Command, default_format: str = "json"):
    parser.add_argument("--format", choices=FORMATS[command], default=default_format,
                        help=f"Output format (default: {default_format})")
    parser.add_argument("--output", type=Path, help="Write output to this file instead of stdout")


def _add_seed(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, help="RNG seed (default: sampling.default_seed)")


def _add_workers(parser: argparse.ArgumentParser):
    parser.add_argument("--workers", type=int, help="Worker processes (default: performance.max_workers)")


def create_parser() -> argparse.ArgumentParser:
    """Create command line argument parser."""
    parser = argparse.ArgumentParser(
        description="Modular surface graphs: enumeration, sampling and genus bounds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s enumerate --n 6 --filter simple           # K33 and the prism
  %(prog)s modular curve --genus 10 --format text    # closed-form genus 1
  %(prog)s sample-stats --n 102 --one-puncture       # conditioned circuit counts
  %(prog)s genus --file tree.mg                      # bounds (0, 0)
        """
    )
    parser.add_argument("--config", help="Path to an alternative YAML configuration")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    parser.add_argument("--quiet", "-q", action="store_true", help="Only log errors")
    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_parser = commands.add_parser("enumerate", help="Isomorphism classes of cubic multigraphs")
    enumerate_parser.add_argument("--n", type=int, required=True,
                                  help="Vertex count N, or genus g with --method triangulations")
    enumerate_parser.add_argument("--filter", choices=["all", "connected", "simple"], default="all")
    enumerate_parser.add_argument("--method", choices=["orderly", "brute", "triangulations"],
                                  default="orderly")
    enumerate_parser.add_argument("--oriented", action="store_true",
                                  help="With --method brute, classify maps instead of graphs")
    _add_workers(enumerate_parser)
    _add_common(enumerate_parser, Command.ENUMERATE)

    modular_parser = commands.add_parser("modular", help="Modular curve, pants or flip graph")
    modular_parser.add_argument("kind", choices=["curve", "pants", "flip"])
    modular_parser.add_argument("--genus", type=int, required=True)
    modular_parser.add_argument("--exact", action="store_true", help="Also search for the exact genus")
    modular_parser.add_argument("--max-darts", type=int,
                                help="Rotation-system budget (default: search.max_rotation_systems)")
    modular_parser.add_argument("--max-attempts", type=int, help="Rejection budget of the flip seed map")
    _add_seed(modular_parser)
    _add_workers(modular_parser)
    _add_common(modular_parser, Command.MODULAR)

    stats_parser = commands.add_parser("sample-stats", help="Monte Carlo circuit statistics")
    stats_parser.add_argument("--n", type=int, required=True)
    stats_parser.add_argument("--kmax", type=int, default=3)
    stats_parser.add_argument("--samples", type=int, default=10000)
    stats_parser.add_argument("--one-puncture", action="store_true",
                              help="Condition on one boundary walk by rejection sampling")
    stats_parser.add_argument("--automorphisms", action="store_true",
                              help="Track the share of graphs with nontrivial automorphisms")
    stats_parser.add_argument("--pattern", help="Builtin graph whose copies are counted, e.g. diamond")
    stats_parser.add_argument("--max-attempts", type=int,
                              help="Rejection budget per sample (default: sampling.max_attempts)")
    _add_seed(stats_parser)
    _add_workers(stats_parser)
    _add_common(stats_parser, Command.SAMPLE_STATS)

    genus_parser = commands.add_parser("genus", help="Genus bounds and exact genus of a graph")
    source = genus_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", help="K3..K7, K33, K44, prism, petersen, diamond")
    source.add_argument("--file", type=Path, help="Graph in multigraph format")
    genus_parser.add_argument("--exact", action="store_true")
    genus_parser.add_argument("--max-darts", type=int,
                              help="Rotation-system budget (default: search.max_rotation_systems)")
    _add_common(genus_parser, Command.GENUS)

    asymptotics_parser = commands.add_parser("asymptotics", help="Asymptotic envelope tables")
    asymptotics_parser.add_argument("kind", choices=["pants", "flip", "multigraph_count", "simple_count",
                                                     "triangulation_count", "one_puncture_matchings"])
    asymptotics_parser.add_argument("--from", dest="start", type=int, required=True, help="First g or N")
    asymptotics_parser.add_argument("--to", dest="stop", type=int, help="Last g or N (default: --from)")
    _add_seed(asymptotics_parser)
    _add_workers(asymptotics_parser)
    _add_common(asymptotics_parser, Command.ASYMPTOTICS)

    walk_parser = commands.add_parser("flip-walk", help="Random flips on a one-puncture map")
    walk_parser.add_argument("--n", type=int, required=True, help="Triangle count, 2 mod 4")
    walk_parser.add_argument("--steps", type=int, default=1000)
    walk_parser.add_argument("--max-attempts", type=int)
    _add_seed(walk_parser)
    _add_workers(walk_parser)
    _add_common(walk_parser, Command.FLIP_WALK)

    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Translate parsed flags into a RunConfig."""
    command = Command(args.command)
    seed = getattr(args, "seed", None)
    fields = dict(
        command=command,
        seed=int(config.get_sampling_config()["default_seed"] if seed is None else seed),
        output_path=args.output,
        format=args.format,
        workers=getattr(args, "workers", None),
        max_attempts=getattr(args, "max_attempts", None),
        max_darts=getattr(args, "max_darts", None),
    )
    if command is Command.ENUMERATE:
        fields.update(genus_or_n=args.n,
                      options={"filter": args.filter, "method": args.method, "oriented": args.oriented})
    elif command is Command.MODULAR:
        fields.update(genus_or_n=args.genus, options={"kind": args.kind, "exact": args.exact})
    elif command is Command.SAMPLE_STATS:
        fields.update(genus_or_n=args.n, samples=args.samples, options={
            "k_max": args.kmax, "one_puncture": args.one_puncture,
            "automorphisms": args.automorphisms, "pattern": args.pattern,
        })
    elif command is Command.GENUS:
        fields.update(options={"builtin": args.builtin, "file": str(args.file) if args.file else None,
                               "exact": args.exact})
    elif command is Command.ASYMPTOTICS:
        stop = args.start if args.stop is None else args.stop
        fields.update(genus_or_n=args.start, options={"kind": args.kind, "stop": stop})
    elif command is Command.FLIP_WALK:
        fields.update(genus_or_n=args.n, samples=args.steps)
    return RunConfig.build(**fields)


def main(argv=None) -> int:
    """Main entry point; returns the process exit status."""
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.config:
        config.reload(args.config)
    if args.verbose:
        set_global_level(logging.DEBUG)
    elif args.quiet:
        set_global_level(logging.ERROR)

    try:
        run_config = build_run_config(args)
        text = ExperimentRunner().run(run_config)
        if run_config.output_path is None:
            sys.stdout.write(text)
        return 0

    except KeyboardInterrupt:
        logger.info("Run interrupted by user")
        return 130  # Standard exit code for Ctrl+C

    except ModsurfError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    except Exception as e:
        logger.error(f"Run failed: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
