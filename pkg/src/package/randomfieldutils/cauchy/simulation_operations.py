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
"""Random Field Utils Cauchy fields simulation operations
   2024 Google
"""
# Standard library imports
import logging
import pkgutil
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple, Union

# Third-party imports
import numpy as np
import pandas as pd
import toml

# Local imports
from .exceptions import DimensionMismatch, EmbeddingError
from .kernels import cauchy_correlation
from .params import EmbeddingReport, FieldGrid, GridSpec, KernelParams, SheetParams

# Load constants
constants = toml.loads(pkgutil.get_data(__name__, "constants.toml").decode())
# Logger
logger = logging.getLogger(constants["LOGGING"]["FIELDS_LOGGER"])

_HEADER = np.dtype(
    [("magic", "S4"), ("version", "<u2"), ("dim", "<u2"), ("sizes", "<u4", (2,))]
)


def kernel_tag(p: Union[KernelParams, SheetParams]) -> str:
    """Short description of the generating kernel stored with each field."""
    if isinstance(p, SheetParams):
        return f"GSGCC(alphas={list(p.alphas)}, betas={list(p.betas)})"
    return f"GFGCC(alpha={p.alpha}, beta={p.beta}, n={p.dim})"


def _wrapped_lags(size: int, spacing: float) -> np.ndarray:
    k = np.arange(size)
    return spacing * np.minimum(k, size - k)


def _generator(seed: int, stream: Optional[int] = None) -> np.random.Generator:
    """Philox generator for a seed, or for one child stream of it."""
    if stream is None:
        sequence = np.random.SeedSequence(seed)
    else:
        sequence = np.random.SeedSequence(seed, spawn_key=(stream,))
    return np.random.Generator(np.random.Philox(sequence))


class SimulationOperations:
    """Circulant embedding synthesis of generalized Cauchy fields and sheets."""

    def __init__(self, client):
        """Initialize with reference to main client."""
        self._client = client

    def _eigenvalues(self, p, g: GridSpec, padding: int) -> np.ndarray:
        sizes = [padding * g.points_per_axis] * g.dim
        if isinstance(p, SheetParams):
            spectra = [
                np.fft.fft(cauchy_correlation(_wrapped_lags(size, h), alpha, beta)).real
                for size, h, alpha, beta in zip(sizes, g.spacing, p.alphas, p.betas)
            ]
            if g.dim == 1:
                return spectra[0]
            return np.multiply.outer(spectra[0], spectra[1])
        if g.dim == 1:
            return np.fft.fft(cauchy_correlation(_wrapped_lags(sizes[0], g.spacing[0]), p.alpha, p.beta)).real
        rows = _wrapped_lags(sizes[0], g.spacing[0])
        cols = _wrapped_lags(sizes[1], g.spacing[1])
        radius = np.hypot.outer(rows, cols)
        return np.fft.fft2(cauchy_correlation(radius, p.alpha, p.beta)).real

    def _search_embedding(self, p, g: GridSpec) -> Tuple[Optional[np.ndarray], EmbeddingReport]:
        """Doubles the padding until the circulant spectrum is usable.

        Returns the clipped eigenvalues (None if none was found) and the report of the
        last padding tried.
        """
        if p.dim != g.dim:
            raise DimensionMismatch(f"kernel dimension {p.dim} does not match grid dimension {g.dim}")
        tolerance = constants["EMBEDDING"]["NEGATIVE_EIGENVALUE_TOLERANCE"]
        max_clipped = constants["EMBEDDING"]["MAX_CLIPPED_MASS"]
        padding = constants["EMBEDDING"]["INITIAL_PADDING"]
        max_padding = self._client._client_options.max_padding
        while True:
            eigenvalues = self._eigenvalues(p, g, padding)
            low, high = float(eigenvalues.min()), float(eigenvalues.max())
            negative = eigenvalues < 0
            clipped_mass = float(-eigenvalues[negative].sum() / eigenvalues[~negative].sum())
            acceptable = low >= -tolerance * high and clipped_mass <= max_clipped
            report = EmbeddingReport(
                embedding_size=eigenvalues.shape,
                padding_factor=padding,
                min_eigenvalue=low,
                max_eigenvalue=high,
                clipped=bool(negative.any()) and acceptable,
                clipped_mass=clipped_mass if negative.any() else 0.0,
                nonnegative=acceptable,
            )
            logger.debug(f"Embedding {eigenvalues.shape}: min eigenvalue {low:.3e}, clipped mass {clipped_mass:.3e}.")
            if acceptable:
                if report.clipped:
                    logger.warning(
                        f"Clipped negative circulant eigenvalues down to {low:.3e} (mass {clipped_mass:.3e})."
                    )
                return np.where(negative, 0.0, eigenvalues), report
            if padding * 2 > max_padding:
                return None, report
            padding *= 2

    def embedding_diagnostics(self, p: Union[KernelParams, SheetParams], g: GridSpec) -> EmbeddingReport:
        """Reports the embedding size, eigenvalue range and clipping that synthesis would use.

        Never raises for valid inputs; a failed search is reported with nonnegative=False.
        """
        _, report = self._search_embedding(p, g)
        return report

    def _weights(self, p, g: GridSpec):
        eigenvalues, report = self._search_embedding(p, g)
        if eigenvalues is None:
            raise EmbeddingError(
                f"no nonnegative-definite circulant embedding up to padding {report.padding_factor} "
                f"for {kernel_tag(p)} (min eigenvalue {report.min_eigenvalue:.3e})",
                report=report,
            )
        return np.sqrt(eigenvalues / eigenvalues.size), report

    def _synthesize(self, weights: np.ndarray, g: GridSpec, rng: np.random.Generator):
        noise = rng.standard_normal((2,) + weights.shape)
        transform = np.fft.fft if g.dim == 1 else np.fft.fft2
        field = transform(weights * (noise[0] + 1j * noise[1]))
        window = tuple(slice(0, g.points_per_axis) for _ in range(g.dim))
        return np.ascontiguousarray(field.real[window]), np.ascontiguousarray(field.imag[window])

    def _simulate_pair(self, p, g: GridSpec) -> Tuple[FieldGrid, FieldGrid]:
        try:
            logger.info(f"Simulating {kernel_tag(p)} on {g.shape} grid, seed {g.seed}.")
            weights, _ = self._weights(p, g)
            first, second = self._synthesize(weights, g, _generator(g.seed))
            tag = kernel_tag(p)
            return (
                FieldGrid(grid=g, values=first, kernel_tag=tag, realization=0),
                FieldGrid(grid=g, values=second, kernel_tag=tag, realization=1),
            )
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def simulate_gfgcc(self, p: KernelParams, g: GridSpec) -> FieldGrid:
        """Exact stationary Gaussian sample with covariance (1 + ||tau||^alpha)^(-beta).

        Args:
            p (KernelParams): Kernel with n in {1, 2}.
            g (GridSpec): Grid of matching dimension; its seed fixes the sample.

        Returns:
            FieldGrid: The real part of the complex synthesis.

        Raises:
            DimensionMismatch: If p.dim != g.dim.
            EmbeddingError: If no usable embedding exists within the padding cap.
        """
        return self._simulate_pair(p, g)[0]

    def simulate_gfgcc_pair(self, p: KernelParams, g: GridSpec) -> Tuple[FieldGrid, FieldGrid]:
        """Both independent realizations produced by one complex transform."""
        return self._simulate_pair(p, g)

    def simulate_gsgcc(self, p: SheetParams, g: GridSpec) -> FieldGrid:
        """Exact sample of the separable sheet; the embedding spectrum is the outer product of per-axis spectra."""
        return self._simulate_pair(p, g)[0]

    def simulate_gsgcc_pair(self, p: SheetParams, g: GridSpec) -> Tuple[FieldGrid, FieldGrid]:
        return self._simulate_pair(p, g)

    def simulate_batch(self, p: Union[KernelParams, SheetParams], g: GridSpec, count: int) -> List[FieldGrid]:
        """Seeded batch of count realizations for Monte Carlo work.

        Stream k of the seed produces realizations 2k and 2k+1, so the batch is the same
        for any number of worker threads.
        """
        try:
            logger.info(f"Simulating {count} realizations of {kernel_tag(p)}, seed {g.seed}.")
            weights, _ = self._weights(p, g)
            tag = kernel_tag(p)

            def run(stream):
                return self._synthesize(weights, g, _generator(g.seed, stream))

            streams = range((count + 1) // 2)
            with ThreadPoolExecutor(max_workers=self._client._client_options.threads) as executor:
                pairs = list(executor.map(run, streams))
            fields = []
            for stream, pair in zip(streams, pairs):
                for offset, values in enumerate(pair):
                    fields.append(FieldGrid(grid=g, values=values, kernel_tag=tag, realization=2 * stream + offset))
            return fields[:count]
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def write_field(self, field: FieldGrid, path: str) -> None:
        """Writes a field in the flat binary format.

        Layout: 16-byte header (magic, uint16 version, uint16 dim, two uint32 axis sizes),
        then dim float64 spacings, the uint64 seed and the values, all little-endian,
        row-major.
        """
        g = field.grid
        header = np.zeros(1, dtype=_HEADER)
        header["magic"] = constants["FIELD_FORMAT"]["MAGIC"].encode()
        header["version"] = constants["FIELD_FORMAT"]["VERSION"]
        header["dim"] = g.dim
        header["sizes"] = [g.points_per_axis, g.points_per_axis if g.dim == 2 else 1]
        with open(path, "wb") as handle:
            handle.write(header.tobytes())
            handle.write(np.asarray(g.spacing, dtype="<f8").tobytes())
            handle.write(np.asarray([g.seed], dtype="<u8").tobytes())
            handle.write(np.asarray(field.values, dtype="<f8").tobytes(order="C"))
        logger.info(f"Wrote {g.shape} field to {path}.")

    def read_field(self, path: str) -> FieldGrid:
        """Reads a field written by write_field.

        Raises:
            ValueError: If the magic, version or payload size does not match.
        """
        try:
            with open(path, "rb") as handle:
                payload = handle.read()
            header = np.frombuffer(payload[: _HEADER.itemsize], dtype=_HEADER)[0]
            if header["magic"] != constants["FIELD_FORMAT"]["MAGIC"].encode():
                raise ValueError(f"{path} is not a field file")
            if header["version"] != constants["FIELD_FORMAT"]["VERSION"]:
                raise ValueError(f"unsupported field file version {header['version']}")
            dim = int(header["dim"])
            offset = _HEADER.itemsize
            spacing = np.frombuffer(payload, dtype="<f8", count=dim, offset=offset)
            offset += 8 * dim
            seed = int(np.frombuffer(payload, dtype="<u8", count=1, offset=offset)[0])
            offset += 8
            shape = (int(header["sizes"][0]),) * dim
            values = np.frombuffer(payload, dtype="<f8", offset=offset)
            if values.size != int(np.prod(shape)):
                raise ValueError(f"{path} holds {values.size} values, header announces {shape}")
            grid = GridSpec(dim=dim, points_per_axis=shape[0], spacing=tuple(spacing.tolist()), seed=seed)
            return FieldGrid(grid=grid, values=values.reshape(shape).astype(float), kernel_tag=f"file:{path}")
        except Exception as e:
            logger.error(f"Exception: {e}.")
            raise e

    def field_to_frame(self, field: FieldGrid) -> pd.DataFrame:
        """Long-format table of a field with index and coordinate columns, row-major."""
        g = field.grid
        if g.dim == 1:
            index = np.arange(g.points_per_axis)
            return pd.DataFrame({"i": index, "x": index * g.spacing[0], "value": field.values})
        i, j = np.meshgrid(np.arange(g.points_per_axis), np.arange(g.points_per_axis), indexing="ij")
        return pd.DataFrame(
            {
                "i": i.ravel(),
                "j": j.ravel(),
                "x": i.ravel() * g.spacing[0],
                "y": j.ravel() * g.spacing[1],
                "value": field.values.ravel(),
            }
        )
