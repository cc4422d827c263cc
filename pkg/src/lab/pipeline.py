"""
Surface Lab Pipeline
Created by Sergie Code

Orchestrates the pipelines behind the command line: mesh building,
singular-curve reports, invariant tables and the property suite.
"""

import logging
from pathlib import Path

import numpy as np

from config import Config
from src.errors import ConfigError, SurfLabError
from src.export.mesh import build_mesh, write_attributes, write_obj
from src.export.reports import write_invariants_csv, write_json
from src.lab.verification import (CheckResult, VerificationReport, check_curve_invariants,
                                  check_gauss_map_fold, check_path_independence,
                                  check_psi_identity)
from src.singularities.classify import classify
from src.singularities.invariants import annotate_curve
from src.singularities.tracing import find_special_points, trace_singular_curve

logger = logging.getLogger(__name__)

VERIFY_SAMPLES = 64


class SurfaceLab:
    """
    Runs the surface commands for one loaded surface description.

    Args:
        surface (SurfaceConfig): data plus resolution, seeds and base point
        output_folder (str): where default output paths are placed
    """

    def __init__(self, surface, output_folder=None):
        self.surface = surface
        self.data = surface.data
        self.output_folder = Path(output_folder or Config.OUTPUT_FOLDER)
        logger.info(f"SurfaceLab initialized for '{surface.name}' ({self.data.kind})")

    def default_output(self, suffix):
        return self.output_folder / f"{self.surface.name}{suffix}"

    def _seeds(self, seeds):
        seeds = tuple(seeds) if seeds else self.surface.seeds
        return [complex(seed) for seed in seeds]

    def trace_all(self, seeds):
        """Trace every seed; failed seeds are returned with their error."""
        curves, failures = [], []
        for seed in self._seeds(seeds):
            try:
                curves.append(trace_singular_curve(self.data, seed))
            except SurfLabError as exc:
                logger.error(f"Tracing from seed {seed} failed: {exc}")
                failures.append((seed, exc))
        return curves, failures

    def build(self, resolution=None, out=None, seeds=()):
        """
        Build the OBJ mesh and its attribute table.

        Returns:
            Path: the written OBJ file
        """
        resolution = self.surface.resolution if resolution is None else resolution
        if resolution < 2:
            raise ConfigError("resolution must be at least 2")
        out = Path(out) if out else self.default_output('.obj')
        logger.info(f"Starting build: {self.surface.name} -> {out}")
        curves, _ = self.trace_all(seeds)
        mesh = build_mesh(self.data, resolution, self.surface.origin, curves)
        write_obj(mesh, out)
        write_attributes(mesh, out)
        logger.info("Build completed successfully")
        return out

    def curve_report(self, curve):
        samples = []
        for sample in curve.samples:
            entry = {'t': sample.t}
            entry.update(classify(self.data, sample.z).to_dict())
            samples.append(entry)
        special = []
        for point in find_special_points(self.data, curve):
            entry = {'condition': point.condition, 'touching': point.touching}
            entry.update(classify(self.data, point.z).to_dict())
            special.append(entry)
        return {'seed': curve.seed, 'closed': curve.closed, 'period': curve.period,
                'samples': samples, 'special_points': special}

    def singular(self, seeds=(), out=None):
        """
        Trace, classify and report the singular curves through the seeds.

        Returns:
            tuple: (output path, number of failed seeds)
        """
        seeds = self._seeds(seeds)
        if not seeds:
            raise ConfigError("at least one seed is required")
        out = Path(out) if out else self.default_output('.singular.json')
        logger.info(f"Starting singular report for {len(seeds)} seeds")
        entries, failed = [], 0
        for seed in seeds:
            try:
                entries.append(self.curve_report(trace_singular_curve(self.data, seed)))
            except SurfLabError as exc:
                logger.error(f"Seed {seed} failed: {exc}")
                entries.append({'seed': seed, 'error': str(exc)})
                failed += 1
        write_json(entries, out)
        return out, failed

    def invariants(self, seed=None, out=None, method='jets'):
        """
        Write the invariant table of the curve through one seed.

        Returns:
            list: the table rows
        """
        seeds = self._seeds([seed] if seed is not None else ())
        if not seeds:
            raise ConfigError("a seed is required")
        out = Path(out) if out else self.default_output('.invariants.csv')
        curve = trace_singular_curve(self.data, seeds[0])
        rows = annotate_curve(self.data, curve, method=method)
        write_invariants_csv(rows, out)
        return rows

    def _guarded(self, name, check, *args):
        try:
            result = check(*args)
        except SurfLabError as exc:
            logger.error(f"Check {name} could not run: {exc}")
            return [CheckResult(name, False, detail=str(exc))]
        return result if isinstance(result, list) else [result]

    def verify(self, seeds=(), out=None):
        """
        Run the property suite.

        Returns:
            VerificationReport: every check with its worst magnitude
        """
        logger.info(f"Starting verification of '{self.surface.name}'")
        report = VerificationReport(self.surface.name)
        report.checks += self._guarded('path_independence', check_path_independence,
                                       self.data, self.surface.origin)
        curves, failures = self.trace_all(seeds)
        for seed, exc in failures:
            report.checks.append(CheckResult('tracing', False, location=seed, detail=str(exc)))
        for curve in curves:
            points = curve.points
            if len(points) > VERIFY_SAMPLES:
                points = points[np.linspace(0, len(points) - 1, VERIFY_SAMPLES).astype(int)]
            report.checks += self._guarded('curve_invariants', check_curve_invariants,
                                           self.data, points)
            report.checks += self._guarded('gauss_map_fold', check_gauss_map_fold,
                                           self.data, points)
            if self.data.kind == 'maxface':
                report.checks += self._guarded('psi_identity', check_psi_identity,
                                               self.data, points)
        for failure in report.failures:
            logger.error(f"Property {failure.name} failed: magnitude {failure.magnitude:.3e} "
                         f"at {failure.location} ({failure.detail})")
        if out:
            write_json(report.to_dict(), out)
        logger.info(f"Verification {'passed' if report.passed else 'failed'}")
        return report
