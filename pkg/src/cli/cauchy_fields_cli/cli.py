#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Copyright 2024 Google LLC

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
"""CLI interface to the Cauchy fields package
   2024 Google
"""

# Standard library imports
import argparse
import json
import logging
import math
import pkgutil
import sys
from concurrent.futures import ThreadPoolExecutor

# Third-party imports
import numpy as np
import pandas as pd
import toml
from pydantic import ValidationError

# Local imports
from randomfieldutils.cauchy import (
    CauchyFieldError,
    Client,
    ClientOptions,
    ConvergenceError,
    DomainError,
    EmbeddingError,
    GridSpec,
    SheetParams,
)
from randomfieldutils.cauchy.spectral_operations import evaluate_truncated, least_term_count
from .settings import RunConfig, parse_sweep

# Setup logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.DEBUG)

# Load constants of the fields package
constants = toml.loads(pkgutil.get_data("randomfieldutils.cauchy", "constants.toml").decode())

EXIT_OK = constants["EXIT_CODES"]["OK"]
EXIT_INVALID = constants["EXIT_CODES"]["INVALID_PARAMETERS"]
EXIT_CONVERGENCE = constants["EXIT_CODES"]["CONVERGENCE_ERROR"]
EXIT_EMBEDDING = constants["EXIT_CODES"]["EMBEDDING_ERROR"]


def _describe(p):
    if isinstance(p, SheetParams):
        return {"alphas": ",".join(map(repr, p.alphas)), "betas": ",".join(map(repr, p.betas))}
    return {"alpha": p.alpha, "beta": p.beta}


def _emit(rows, config: RunConfig):
    """Writes rows as CSV (17 significant digits) or JSON to --output or stdout."""
    if config.output_format == "json":
        records = [
            {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in row.items()}
            for row in rows
        ]
        text = json.dumps(records, separators=(",", ":")) + "\n"
    else:
        text = pd.DataFrame(rows).to_csv(index=False, float_format="%.17g", na_rep="nan")
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_object(payload: dict, config: RunConfig):
    if config.output_format == "csv":
        _emit([payload], config)
        return
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _sweep(client: Client, task, items):
    """Evaluates task over items on the client's thread pool, keeping input order."""
    with ThreadPoolExecutor(max_workers=client._client_options.threads) as executor:
        return list(executor.map(task, items))


def cmd_spectrum(client: Client, config: RunConfig) -> int:
    """Spectral density table over the omega grid for every parameter set."""
    kernels = config.kernels()
    if not config.omega:
        raise ValueError("spectrum needs --omega")
    q = client._client_options.quadrature_spec()
    max_terms = constants["SERIES"]["MAX_TERMS"]

    def evaluate(item):
        p, w = item
        row = {**_describe(p), "omega": w}
        try:
            if isinstance(p, SheetParams):
                result = client.gsgcc_spectrum(p, np.full(p.dim, w), q)
            else:
                result = client.spectral_density(p, w, q)
            row.update(S=result.value, est_error=result.est_error, method=result.method, error="")
        except ConvergenceError as e:
            row.update(S=math.nan, est_error=math.nan, method="", error=f"ConvergenceError: {e}")
        except DomainError as e:
            row.update(S=math.nan, est_error=math.nan, method="", error=f"DomainError: {e}")
        if config.asymptotes and not isinstance(p, SheetParams):
            row.update(_asymptotes(client, p, w, max_terms))
        return row

    rows = _sweep(client, evaluate, [(p, w) for p in kernels for w in config.omega])
    _emit(rows, config)
    if any(row["error"].startswith("ConvergenceError") for row in rows):
        return EXIT_CONVERGENCE
    return EXIT_INVALID if any(row["error"] for row in rows) else EXIT_OK


def _asymptotes(client: Client, p, w: float, max_terms: int) -> dict:
    values = {"high_freq": math.nan, "low_freq": math.nan}
    if w <= 0:
        return values
    try:
        series = client.high_freq_series(p, max_terms)
        values["high_freq"] = evaluate_truncated(series, w, least_term_count(series, w))
    except (OverflowError, CauchyFieldError) as e:
        logger.debug(f"No high-frequency asymptote at omega={w}: {e}")
    values["low_freq"] = evaluate_truncated(client.low_freq_leading(p), w)
    return values


def cmd_covariance(client: Client, config: RunConfig) -> int:
    """Covariance table over the lag grid; sheet lags are applied along the diagonal."""
    if not config.lag:
        raise ValueError("covariance needs --lag")
    rows = []
    for p in config.kernels():
        for r in config.lag:
            if isinstance(p, SheetParams):
                value = client.gsgcc_cov(p, np.full(p.dim, r))
            else:
                value = client.gfgcc_cov(p, r)
            row = {**_describe(p), "lag": r, "covariance": value}
            if config.powered_exp and not isinstance(p, SheetParams):
                row["powered_exp"] = client.powered_exp_cov(p, r)
            rows.append(row)
    _emit(rows, config)
    return EXIT_OK


def cmd_simulate(client: Client, config: RunConfig) -> int:
    """Simulates one realization and writes it in the binary field format or as a table."""
    p = config.kernels()[0]
    dim = p.dim
    grid = GridSpec(dim=dim, points_per_axis=config.points, spacing=config.spacing, seed=config.seed)
    if isinstance(p, SheetParams):
        field = client.simulate_gsgcc(p, grid)
    else:
        field = client.simulate_gfgcc(p, grid)
    if config.output_format == "binary-field":
        client.write_field(field, config.output or "field.bin")
    else:
        _emit(client.field_to_frame(field).to_dict(orient="records"), config)
    return EXIT_OK


def cmd_estimate(client: Client, config: RunConfig) -> int:
    """Variogram fit of a field file, emitted as JSON."""
    field = client.read_field(config.input)
    fit = client.estimate_variogram(field, config.max_lag)
    payload = fit.model_dump()
    payload["lags_used"] = ",".join(repr(x) for x in fit.lags_used) if config.output_format == "csv" else fit.lags_used
    _emit_object(payload, config)
    return EXIT_OK


def cmd_classify(client: Client, config: RunConfig) -> int:
    """Dependence verdict of each parameter set, emitted as JSON."""
    verdicts = [client.classify_dependence(p).model_dump() for p in config.kernels()]
    if len(verdicts) == 1:
        _emit_object(verdicts[0], config)
    else:
        _emit(verdicts, config)
    return EXIT_OK


def cmd_lamperti(client: Client, config: RunConfig) -> int:
    """Covariance table of the transformed field along t + tau, or a scaling-law report."""
    L = config.lamperti()
    t = np.broadcast_to(np.asarray(config.t, dtype=float), (L.dim,)).copy()
    if config.scaling:
        s = np.broadcast_to(np.asarray(config.s, dtype=float), (L.dim,)) if config.s else math.e * t
        base = client.lamperti_cov(L, t, s)
        rows = []
        for c in config.scaling:
            expected = float(np.prod(c ** (2.0 * L.hurst_vector()))) if L.mode == "SecondMSS" else c ** (2.0 * L.H)
            observed = client.lamperti_cov(L, c * t, c * s) / base
            rows.append({"c": c, "expected": expected, "observed": observed,
                         "rel_error": abs(observed - expected) / expected})
        _emit(rows, config)
        return EXIT_OK
    if not config.tau:
        raise ValueError("lamperti needs --tau or --scaling")

    def evaluate(h):
        tau = np.full(L.dim, h)
        exact, leading = client.increment_var_expansion(L, t, tau)
        return {
            "tau": h,
            "covariance": client.lamperti_cov(L, t + tau, t),
            "correlation": client.lamperti_correlation(L, t, tau),
            "increment_exact": exact,
            "increment_leading": leading,
        }

    _emit(_sweep(client, evaluate, config.tau), config)
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "covariance": cmd_covariance,
    "simulate": cmd_simulate,
    "estimate": cmd_estimate,
    "classify": cmd_classify,
    "lamperti": cmd_lamperti,
}


def _sweep_type(text):
    try:
        return parse_sweep(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_kernel_arguments(parser):
    parser.add_argument("--n", dest="n", type=int, default=1,
                        help="Dimension of the isotropic field (default: 1)")
    parser.add_argument("--alpha", dest="alpha", type=_sweep_type, default=[],
                        help="Fractal index alpha in (0, 2]; comma list allowed")
    parser.add_argument("--beta", dest="beta", type=_sweep_type, default=[],
                        help="Long-memory index beta > 0; comma list allowed")
    parser.add_argument("--alpha-beta-product", dest="alpha_beta_product", type=float, default=None,
                        help="Set beta = product / alpha for each alpha")
    parser.add_argument("--sheet", dest="sheet", action="store_true",
                        help="Use the separable sheet kernel with --alphas and --betas")
    parser.add_argument("--alphas", dest="alphas", type=_sweep_type, default=[],
                        help="Per-axis alphas of the sheet")
    parser.add_argument("--betas", dest="betas", type=_sweep_type, default=[],
                        help="Per-axis betas of the sheet")


def _add_output_arguments(parser, default_format):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--csv", dest="output_format", action="store_const", const="csv",
                       help="CSV output with a header row")
    group.add_argument("--json", dest="output_format", action="store_const", const="json",
                       help="JSON output")
    parser.set_defaults(output_format=default_format)
    parser.add_argument("--output", dest="output", type=str, default=None,
                        help="Output path (default: stdout, field.bin for simulate)")
    parser.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-10,
                        help="Relative quadrature tolerance (default: 1e-10)")
    parser.add_argument("--abs-tol", dest="abs_tol", type=float, default=1e-14,
                        help="Absolute quadrature tolerance (default: 1e-14)")
    parser.add_argument("--debug", dest="debug", action="store_true",
                        help="Verbose logging")


def _get_input_arguments(argv=None):
    """Parse command line arguments.

    Returns:
        argparse.Namespace: The parsed command line arguments
    """
    parser = argparse.ArgumentParser(description="Generalized Cauchy covariance random fields.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    spectrum = subparsers.add_parser("spectrum", help="Spectral density table")
    _add_kernel_arguments(spectrum)
    spectrum.add_argument("--omega", dest="omega", type=_sweep_type, required=True,
                          help="Frequency norms: a:b:logN, a:b:linN or a comma list")
    spectrum.add_argument("--asymptotes", dest="asymptotes", action="store_true",
                          help="Add high- and low-frequency asymptote columns")
    _add_output_arguments(spectrum, "csv")

    covariance = subparsers.add_parser("covariance", help="Covariance table")
    _add_kernel_arguments(covariance)
    covariance.add_argument("--lag", dest="lag", type=_sweep_type, required=True,
                            help="Lag norms (sheet: diagonal lags)")
    covariance.add_argument("--powered-exp", dest="powered_exp", action="store_true",
                            help="Add the powered-exponential exp(-beta r^alpha) column for comparison")
    _add_output_arguments(covariance, "csv")

    simulate = subparsers.add_parser("simulate", help="Exact simulation by circulant embedding")
    _add_kernel_arguments(simulate)
    simulate.add_argument("--points", dest="points", type=int, default=1024,
                          help="Points per axis, a power of two >= 8 (default: 1024)")
    simulate.add_argument("--spacing", dest="spacing", type=float, default=1.0 / 64,
                          help="Lattice spacing (default: 0.015625)")
    simulate.add_argument("--seed", dest="seed", type=int, default=0, help="64-bit seed (default: 0)")
    _add_output_arguments(simulate, "binary-field")

    estimate = subparsers.add_parser("estimate", help="Variogram estimate of a field file")
    estimate.add_argument("--input", dest="input", type=str, required=True, help="Binary field file")
    estimate.add_argument("--max-lag", dest="max_lag", type=int, default=None,
                          help="Largest lag in grid steps (default: 8)")
    _add_output_arguments(estimate, "json")

    classify = subparsers.add_parser("classify", help="Long/short range dependence verdict")
    _add_kernel_arguments(classify)
    _add_output_arguments(classify, "json")

    lamperti = subparsers.add_parser("lamperti", help="Lamperti-transformed field covariances")
    _add_kernel_arguments(lamperti)
    lamperti.add_argument("--mode", dest="mode", choices=["FirstSS", "SecondMSS"], default="FirstSS",
                          help="Transform (default: FirstSS)")
    lamperti.add_argument("--H", dest="H", type=_sweep_type, default=[0.5],
                          help="Hurst index, one per axis for SecondMSS (default: 0.5)")
    lamperti.add_argument("--t", dest="t", type=_sweep_type, default=[1.0],
                          help="Base point with positive coordinates (default: 1)")
    lamperti.add_argument("--s", dest="s", type=_sweep_type, default=None,
                          help="Second point for the scaling report (default: e t)")
    lamperti.add_argument("--tau", dest="tau", type=_sweep_type, default=[],
                          help="Positive diagonal lags")
    lamperti.add_argument("--scaling", dest="scaling", type=_sweep_type, default=[],
                          help="Scale factors c for the self-similarity report")
    _add_output_arguments(lamperti, "csv")

    return parser.parse_args(argv)


def run(argv=None) -> int:
    """Runs one subcommand and returns its exit code."""
    args = _get_input_arguments(argv)
    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)
    try:
        config = RunConfig(**vars(args))
        if config.subcommand != "estimate":
            config.kernels()
        options = ClientOptions(rel_tol=config.rel_tol, abs_tol=config.abs_tol)
        client = Client(client_options=options)
        logger.debug(f"Running {config.subcommand} with {config}")
        return COMMANDS[config.subcommand](client, config)
    except EmbeddingError as e:
        print(f"Embedding failed: {e}", file=sys.stderr)
        return EXIT_EMBEDDING
    except ConvergenceError as e:
        print(f"Quadrature did not converge: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (ValidationError, ValueError, CauchyFieldError, OSError) as e:
        print(f"Invalid parameters: {e}", file=sys.stderr)
        return EXIT_INVALID


def main():
    """Main entry point for the CLI."""
    sys.exit(run())


if __name__ == "__main__":
    main()
