"""
SurfLab Command Line
Created by Sergie Code

Builds maxfaces and constant mean curvature surfaces from their
Weierstrass/Kenmotsu data, classifies their singular points and verifies
the curvature invariants along the singular curves.

Exit codes: 0 success, 1 property or partial failure, 2 usage or evaluation error.
"""

import argparse
import logging
import sys

from config import Config, active_config
from src.errors import SurfLabError
from src.lab.pipeline import SurfaceLab
from src.surfaces.data import load_surface_config

logger = logging.getLogger(__name__)

COMMANDS = ('build', 'singular', 'invariants', 'verify')


def parse_seed(text):
    """Parse a 're,im' seed into a complex number."""
    try:
        re_part, im_part = text.split(',')
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be 're,im', got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(prog='surflab', description=__doc__.strip().splitlines()[0])
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--config', required=True, help='surface description (JSON)')
    parser.add_argument('--resolution', type=int, default=None, help='grid nodes per axis')
    parser.add_argument('--seed', type=parse_seed, action='append', default=[],
                        help='seed point re,im (repeatable)')
    parser.add_argument('--out', default=None, help='output path')
    parser.add_argument('--method', choices=('jets', 'fd'), default='jets',
                        help='derivative evaluation for invariants')
    return parser


def run(args, settings=Config):
    surface = load_surface_config(args.config)
    lab = SurfaceLab(surface, settings.OUTPUT_FOLDER)

    if args.command == 'build':
        if args.resolution is not None and args.resolution < 2:
            logger.error("resolution must be at least 2")
            return 2
        lab.build(args.resolution, args.out, args.seed)
        return 0

    if args.command == 'singular':
        if not (args.seed or surface.seeds):
            logger.error("singular needs at least one seed")
            return 2
        _, failed = lab.singular(args.seed, args.out)
        return 1 if failed else 0

    if args.command == 'invariants':
        seed = args.seed[0] if args.seed else None
        if seed is None and not surface.seeds:
            logger.error("invariants needs a seed")
            return 2
        lab.invariants(seed, args.out, args.method)
        return 0

    report = lab.verify(args.seed, args.out)
    return 0 if report.passed else 1


def main(argv=None):
    """
    Command-line entry point.

    Args:
        argv (list): arguments without the program name, sys.argv by default

    Returns:
        int: process exit code
    """
    settings = active_config()
    logging.basicConfig(level=settings.LOG_LEVEL)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    try:
        return run(args, settings)
    except SurfLabError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code


if __name__ == '__main__':
    sys.exit(main())
