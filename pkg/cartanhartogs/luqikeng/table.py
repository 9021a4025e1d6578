"""Reproduction of the threshold table for the domains of dimension <= 4."""

import csv
import io
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from ..base.domains import catalog_lookup
from ..config import Config
from ..parallel import MPIEnv
from ..utils import Timer, print_banner_line
from .reference import published_entry, verify_closed_form
from .threshold import threshold


__all__ = ["TableRow", "ThresholdTable"]


class TableRow(NamedTuple):
    """
    One cell mu_{m,index} of the threshold table.

    Attributes
    ----------
    label: str
        name of the base domain
    m: int
        fiber dimension
    index: int
        1 or 2
    value: Optional[Fraction]
        refined root, None for +inf
    printed: Optional[float]
        published value, None for +inf
    reference: Optional[float]
        published value with misprints corrected
    deviation: Optional[float]
        |value - reference|, None if either is +inf
    closed_form: Optional[str]
        published closed form
    closed_form_ok: Optional[bool]
        outcome of verify_closed_form, None without closed form
    """
    label: str
    m: int
    index: int
    value: Any
    printed: Optional[float]
    reference: Optional[float]
    deviation: Optional[float]
    closed_form: Optional[str]
    closed_form_ok: Optional[bool]

    def matches(self, deviation_tol: float) -> bool:
        """Whether the cell agrees with the published one."""
        if self.reference is None or self.value is None:
            return self.reference is None and self.value is None
        if self.closed_form_ok is False:
            return False
        return self.deviation < deviation_tol

    def to_dict(self) -> Dict[str, Any]:
        """Serializable form with exact values as 'p/q' strings."""
        return {"type": self.label, "m": self.m, "index": self.index,
                "value": "inf" if self.value is None else str(self.value),
                "value_decimal": ("inf" if self.value is None
                                  else f"{float(self.value):.9f}"),
                "printed": self.printed, "reference": self.reference,
                "deviation": self.deviation,
                "closed_form": self.closed_form,
                "closed_form_ok": self.closed_form_ok}


class ThresholdTable(MPIEnv):
    """
    Sweep over base domains and fiber dimensions computing thresholds.

    Attributes
    ----------
    _config: 'Config' instance
        parameters of the sweep, groups 'generic' and 'table'
    _timer: 'Timer' instance
        timer of the sweep
    """
    def __init__(self, config: Optional[Config] = None,
                 enable_mpi: bool = False,
                 echo_details: bool = False) -> None:
        """
        :param config: parameters, defaults if None
        :param enable_mpi: whether to distribute cells with MPI
        :param echo_details: whether to report parallelization details
        """
        super().__init__(enable_mpi=enable_mpi, echo_details=echo_details)
        self._config = Config() if config is None else config
        self._config.check_params()
        self._timer = Timer()

    @property
    def config(self) -> Config:
        """Interface for the '_config' attribute."""
        return self._config

    def _cells(self) -> List[Tuple[str, int]]:
        m_max = self._config.table['m_max']
        return [(label, m) for label in self._config.table['types']
                for m in range(1, m_max + 1)]

    def _eval_cell(self, label: str, m: int) -> List[TableRow]:
        spec = catalog_lookup(label)
        report = threshold(spec, m, self._config.generic['tol'])
        rows = []
        for index in (1, 2):
            root = report.roots[index-1] if len(report.roots) >= index \
                else None
            entry = published_entry(spec, m, index)
            if index == 2 and root is None and entry is None:
                continue
            value = None if root is None else root.value
            printed = reference = deviation = None
            closed_form = closed_ok = None
            if entry is not None:
                printed, reference = entry.printed, entry.reference
                closed_form = entry.closed_form
                if value is not None:
                    deviation = abs(float(value) - reference)
                    if entry.expression is not None:
                        check = verify_closed_form(
                            spec, m, index, value,
                            tol=self._config.table['closed_form_tol'])
                        closed_ok = check.ok
            rows.append(TableRow(spec.name, m, index, value, printed,
                                 reference, deviation, closed_form,
                                 closed_ok))
        return rows

    def run(self, verbose: bool = True) -> List[TableRow]:
        """
        Evaluate all cells.

        :param verbose: whether to warn about cells deviating from the
            published ones
        :return: rows ordered by type, m and index, on all processes
        """
        self._timer.tic("table")
        rows_local = []
        for label, m in self.dist_list(self._cells()):
            rows_local.extend(self._eval_cell(label, m))
        rows = self.all_gather(rows_local)
        order = {label: i for i, label in
                 enumerate(self._config.table['types'])}
        rows.sort(key=lambda row: (order.get(row.label, len(order)),
                                   row.m, row.index))
        self._timer.toc("table")
        tol = self._config.table['deviation_tol']
        for row in rows:
            if verbose and not row.matches(tol):
                self.warn(f"{row.label} mu_{{{row.m},{row.index}}} = "
                          f"{row.to_dict()['value_decimal']} deviates from "
                          f"published {row.printed}")
        return rows

    def all_match(self, rows: List[TableRow]) -> bool:
        """Whether every cell agrees with the published table."""
        tol = self._config.table['deviation_tol']
        return all(row.matches(tol) for row in rows)

    @staticmethod
    def to_csv(rows: List[TableRow]) -> str:
        """
        Render rows as CSV.

        :param rows: table rows
        :return: CSV text with header
        """
        buffer = io.StringIO()
        fields = list(rows[0].to_dict().keys()) if rows else \
            ["type", "m", "index", "value"]
        writer = csv.DictWriter(buffer, fieldnames=fields,
                                lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v)
                             for k, v in row.to_dict().items()})
        return buffer.getvalue()

    @staticmethod
    def to_json(rows: List[TableRow]) -> List[Dict[str, Any]]:
        """Render rows as a list of dicts."""
        return [row.to_dict() for row in rows]

    def report(self, rows: List[TableRow]) -> None:
        """
        Print the table on master process.

        :param rows: table rows
        :return: None
        """
        print_banner_line("Positive roots of q_m") if self.is_master else None
        tol = self._config.table['deviation_tol']
        self.print(f"{'type':10s}{'m':>3s}{'i':>3s}{'value':>16s}"
                   f"{'published':>12s}{'deviation':>12s}  status")
        for row in rows:
            value = row.to_dict()["value_decimal"]
            printed = "inf" if row.printed is None else f"{row.printed:g}"
            dev = "" if row.deviation is None else f"{row.deviation:.2e}"
            status = "ok" if row.matches(tol) else "MISMATCH"
            if row.closed_form is not None:
                status += f" [{row.closed_form}]"
            self.print(f"{row.label:10s}{row.m:3d}{row.index:3d}{value:>16s}"
                       f"{printed:>12s}{dev:>12s}  {status}")
        if self.is_master:
            self._timer.report_total_time()
