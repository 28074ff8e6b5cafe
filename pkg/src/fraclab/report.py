"""Report rows, sweep reports and their CSV / JSON / gnuplot emitters."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["Row", "SweepReport", "emit", "render", "load_json", "CSV_HEADER"]

CSV_HEADER = "experiment,p,t,param,raw,normalized,reference,ratio"
FORMATS = ("csv", "json", "gnuplot")


@dataclass(frozen=True)
class Row:
    """One sweep point: the swept parameter and the four measured numbers."""

    param: float
    raw: float
    normalized: float
    reference: float
    ratio: float

    @classmethod
    def build(cls, param, raw, normalized, reference) -> "Row":
        """Fill ``ratio = normalized / reference``; ``0 / 0`` is recorded as 0."""
        if reference == 0.0:
            ratio = 0.0 if normalized == 0.0 else math.inf
        else:
            ratio = normalized / reference
        return cls(float(param), float(raw), float(normalized), float(reference), float(ratio))

    def values(self) -> tuple[float, ...]:
        return (self.param, self.raw, self.normalized, self.reference, self.ratio)


@dataclass
class SweepReport:
    """Rows of one experiment, kept sorted by parameter.

    ``metadata`` holds whatever identifies the run (quadrature settings, seed,
    code version); it must be JSON-serialisable.
    """

    experiment: str
    p: float
    t: float
    rows: list[Row] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rows = sorted(self.rows, key=lambda r: r.param)
        for r in self.rows:
            if not all(math.isfinite(v) for v in r.values()):
                raise ValueError(f"non-finite row in {self.experiment}: {r}")
        self.metadata = dict(self.metadata)
        if self.rows and all(r.reference == 0.0 and r.normalized == 0.0 for r in self.rows):
            self.metadata["degenerate"] = True

    @property
    def degenerate(self) -> bool:
        return bool(self.metadata.get("degenerate", False))

    def column(self, name: str) -> list[float]:
        return [getattr(r, name) for r in self.rows]

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "p": self.p,
            "t": self.t,
            "rows": [list(r.values()) for r in self.rows],
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SweepReport":
        rows = [Row(*map(float, r)) for r in d["rows"]]
        return cls(d["experiment"], float(d["p"]), float(d["t"]), rows, d.get("metadata", {}))

    def __eq__(self, other):
        if not isinstance(other, SweepReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def _fmt(x: float) -> str:
    return f"{x:.16e}"


def _csv_lines(report: SweepReport) -> list[str]:
    lines = []
    for r in report.rows:
        fields = [report.experiment, _fmt(report.p), _fmt(report.t)] + [_fmt(v) for v in r.values()]
        lines.append(",".join(fields))
    return lines


def render(reports, fmt: str) -> str:
    """Render one report or a list of reports to text in the given format."""
    if isinstance(reports, SweepReport):
        reports = [reports]
    if fmt == "csv":
        lines = [CSV_HEADER]
        for rep in reports:
            lines.extend(_csv_lines(rep))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        if len(payload) == 1:
            payload = payload[0]
        return json.dumps(payload, indent=1, allow_nan=False) + "\n"
    if fmt == "gnuplot":
        return _gnuplot(reports)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _gnuplot(reports) -> str:
    out = []
    for k, rep in enumerate(reports):
        out.append(f"# {rep.experiment}  p={rep.p!r}  t={rep.t!r}")
        out.append(f"$data{k} << EOD")
        out.append("# param raw normalized reference ratio")
        for r in rep.rows:
            out.append(" ".join(_fmt(v) for v in r.values()))
        out.append("EOD")
    out.append('set xlabel "parameter"')
    out.append('set ylabel "ratio"')
    out.append("set logscale x")
    plots = [f'$data{k} using 1:5 with linespoints title "{rep.experiment}"' for k, rep in enumerate(reports)]
    if plots:
        out.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(out) + "\n"


def emit(report, fmt: str, path) -> None:
    """Write ``report`` (or a list of reports) to ``path``.

    Raises
    ------
    OSError
        Re-raised with the target path in the message.
    """
    text = render(report, fmt)
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def load_json(path):
    """Read back a JSON report (or list of reports) written by :func:`emit`."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, list):
        return [SweepReport.from_dict(d) for d in data]
    return SweepReport.from_dict(data)
