"""CSV and JSON writers for matrices, spectra, scans and boundary samples."""

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial

from nhgraph.spectra.eigensolver import Spectrum
from nhgraph.stability.boundary import BoundarySample
from nhgraph.stability.perturbation import PerturbationResult
from nhgraph.stability.scan import ScanResult


class DataWriter:
    """Formats numerical results as CSV or JSON text with fixed precision."""

    def __init__(self, digits: int = 12):
        """Initialize the writer.

        Args:
            digits: Significant digits of every float written
        """
        self.digits = digits

    def number(self, value: float) -> str:
        """Format a float with fixed significant digits; -0 prints as 0."""
        value = float(value)
        if value == 0:
            value = 0.0
        return f"{value:.{self.digits}g}"

    def round(self, value: Any) -> Any:
        """Round all floats of a nested structure to the writer precision."""
        if isinstance(value, bool) or value is None or isinstance(value, str):
            return value
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            if not math.isfinite(value):
                return None
            return float(self.number(value))
        if isinstance(value, dict):
            return {str(k): self.round(v) for k, v in value.items()}
        if isinstance(value, (list, tuple, np.ndarray)):
            return [self.round(v) for v in value]
        return value

    def csv_text(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Render rows as CSV with a header line; floats use the writer precision."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([self._cell(v) for v in row])
        return buffer.getvalue()

    def _cell(self, value: Any) -> str:
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (float, np.floating)):
            return self.number(value)
        return str(value)

    def json_text(self, data: Any) -> str:
        """Render a JSON document, indented and with sorted keys."""
        return json.dumps(self.round(data), indent=2, sort_keys=True) + "\n"

    def matrix_csv(self, matrix: np.ndarray, labels: Optional[Sequence[str]] = None) -> str:
        """Dense matrix, one CSV row per matrix row, headed by column labels."""
        m = np.asarray(matrix, dtype=float)
        if labels is None:
            labels = [f"c{j + 1}" for j in range(m.shape[1])]
        return self.csv_text(labels, (list(row) for row in m))

    def polynomial_csv(self, polynomial: Polynomial) -> str:
        """Coefficients as (power, coefficient) rows, highest power first."""
        coef = np.asarray(polynomial.coef, dtype=float)
        rows = [(k, float(coef[k])) for k in range(len(coef) - 1, -1, -1)]
        return self.csv_text(["power", "coefficient"], rows)

    def spectrum_csv(self, spectra: Sequence[Spectrum]) -> str:
        """One row per spectrum: dim, then Re/Im interleaved in sorted order."""
        dim = spectra[0].dim if spectra else 0
        header = ["dim"] + [f"{part}E_{k}" for k in range(1, dim + 1) for part in ("Re", "Im")]
        rows = []
        for s in spectra:
            interleaved: List[Any] = []
            for re, im in zip(s.real_parts, s.imag_parts):
                interleaved.extend([float(re), float(im)])
            rows.append([s.dim] + interleaved)
        return self.csv_text(header, rows)

    def scan_csv(self, result: ScanResult) -> str:
        """Columns z, ReE_1..ReE_n, ImE_1..ImE_n, n_real, near_ep."""
        dim = result.dim
        header = (["z"] + [f"ReE_{k}" for k in range(1, dim + 1)]
                  + [f"ImE_{k}" for k in range(1, dim + 1)] + ["n_real", "near_ep"])
        rows = []
        for z, spectrum, flagged in zip(result.z, result.spectra, result.near_ep):
            rows.append([float(z)] + [float(v) for v in spectrum.real_parts]
                        + [float(v) for v in spectrum.imag_parts] + [spectrum.n_real, bool(flagged)])
        return self.csv_text(header, rows)

    def boundary_csv(self, samples: Sequence[BoundarySample], verified: Optional[Sequence[str]] = None) -> str:
        """Columns y, branch, mu_hat, lambda_hat_max, g, z_max and optionally verified."""
        header = ["y", "branch", "mu_hat", "lambda_hat_max", "g", "z_max"]
        if verified is not None:
            header.append("verified")
        rows = []
        for i, s in enumerate(samples):
            row: List[Any] = [s.y, s.branch.value, s.mu_hat, s.lambda_hat_max, s.g, s.z_max]
            if verified is not None:
                row.append(verified[i])
            rows.append(row)
        return self.csv_text(header, rows)

    def perturbation_csv(self, result: PerturbationResult) -> str:
        """Columns z, ReE_k, ImE_k per root, n_real and the complex level positions."""
        dim = len(result.records[0].roots) if result.records else 0
        header = (["z"] + [f"ReE_{k}" for k in range(1, dim + 1)]
                  + [f"ImE_{k}" for k in range(1, dim + 1)] + ["n_real", "complex_levels"])
        rows = []
        for record in result.records:
            imag = [0.0 if i not in record.complex_indices else float(r.imag)
                    for i, r in enumerate(record.roots)]
            levels = " ".join(str(i + 1) for i in sorted(record.complex_indices))
            rows.append([record.z] + [float(r.real) for r in record.roots] + imag
                        + [record.n_real, levels])
        return self.csv_text(header, rows)

    @staticmethod
    def emit(text: str, path: Optional[Union[str, Path]] = None, stream=None) -> None:
        """Write text to a file, or to stdout when no path is given."""
        if path is None:
            (stream or sys.stdout).write(text)
            return
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
