"""
Output records for computed characters and verification reports.

Characters are flattened into (q-power, partition, coefficient) terms once;
the text, LaTeX and JSON renderers all read that list.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from config import REPORTS_DIR, TOOL_VERSION
from src.frobchar.verification import VerificationReport
from src.symfunc.symmetric import Basis, SymFunc, basis_convert

logger = logging.getLogger(__name__)


@dataclass
class TermRecord:
    q: int
    partition: List[int]
    coeff: str


@dataclass
class OutputRecord:
    formula: str
    n: int
    basis: str
    max_q_degree: Optional[int]
    terms: List[TermRecord]
    meta: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        raw = json.loads(text)
        terms = [TermRecord(q=t["q"], partition=list(t["partition"]), coeff=t["coeff"]) for t in raw["terms"]]
        return cls(
            formula=raw["formula"],
            n=raw["n"],
            basis=raw["basis"],
            max_q_degree=raw["max_q_degree"],
            terms=terms,
            meta=raw.get("meta", {}),
        )


def _term_key(term: TermRecord) -> Tuple[int, Tuple[int, ...]]:
    # q-power ascending, then partitions in reverse lexicographic order
    return term.q, tuple(-part for part in term.partition)


def build_record(
    formula: str,
    value: SymFunc,
    basis: str,
    max_q_degree: Optional[int],
    meta: Optional[Dict[str, Any]] = None,
) -> OutputRecord:
    """
    Flatten ``value`` in ``basis`` into an OutputRecord.

    Args:
        formula: Name shown in the record
        value: Character to print
        basis: One of m, e, h, p, s
        max_q_degree: Truncation order, or None for exact polynomials
        meta: Tool version, timing and cache statistics

    Returns:
        OutputRecord with terms in display order
    """
    converted = basis_convert(value, Basis(basis))
    terms = []
    for lam, coeff in converted:
        for k, c in coeff.items():
            terms.append(TermRecord(q=k, partition=list(lam), coeff=str(Fraction(c))))
    terms.sort(key=_term_key)
    meta = dict(meta or {})
    meta.setdefault("version", TOOL_VERSION)
    return OutputRecord(
        formula=formula, n=value.degree, basis=basis, max_q_degree=max_q_degree, terms=terms, meta=meta
    )


def _q_text(k: int) -> str:
    return "" if k == 0 else ("q" if k == 1 else f"q^{k}")


def render_text(record: OutputRecord) -> str:
    """e.g. ``s[3] + q*s[1,1,1]``."""
    if not record.terms:
        return "0"
    pieces = []
    for term in record.terms:
        c = Fraction(term.coeff)
        factors = []
        if abs(c) != 1:
            factors.append(str(abs(c)))
        if term.q:
            factors.append(_q_text(term.q))
        factors.append(f"{record.basis}[{','.join(str(part) for part in term.partition)}]")
        pieces.append(("-" if c < 0 else "+", "*".join(factors)))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _latex_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def _latex_polynomial(monomials: List[Tuple[int, Fraction]]) -> str:
    parts = []
    for k, c in monomials:
        mag = abs(c)
        if k == 0:
            body = _latex_fraction(mag)
        else:
            power = "q" if k == 1 else f"q^{{{k}}}"
            body = power if mag == 1 else f"{_latex_fraction(mag)} {power}"
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def render_latex(record: OutputRecord) -> str:
    """Group by basis element: ``s_{3} + (q + q^{2}) s_{2,1}``."""
    if not record.terms:
        return "0"
    grouped: Dict[Tuple[int, ...], List[Tuple[int, Fraction]]] = {}
    for term in record.terms:
        grouped.setdefault(tuple(term.partition), []).append((term.q, Fraction(term.coeff)))
    order = sorted(grouped, key=lambda lam: (min(k for k, _ in grouped[lam]), tuple(-x for x in lam)))
    pieces = []
    for lam in order:
        monomials = grouped[lam]
        element = f"{record.basis}_{{{','.join(str(x) for x in lam)}}}"
        if len(monomials) == 1:
            k, c = monomials[0]
            coeff = _latex_polynomial([(k, abs(c))])
            body = element if (k == 0 and abs(c) == 1) else f"{coeff} {element}"
            pieces.append(("-" if c < 0 else "+", body))
        else:
            pieces.append(("+", f"({_latex_polynomial(monomials)}) {element}"))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    if record.max_q_degree is not None:
        text += f" + O(q^{{{record.max_q_degree}}})"
    return text


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "text":
        return render_text(record)
    if fmt == "latex":
        return render_latex(record)
    if fmt == "json":
        return record.to_json()
    raise ValueError(f"Unknown output format {fmt!r}")


# --- Verification reports ---

def verification_table(report: VerificationReport) -> pd.DataFrame:
    rows = [
        {
            "check": outcome.check,
            "n": outcome.n,
            "result": "pass" if outcome.passed else "FAIL",
            "ms": round(outcome.ms, 1),
            "message": outcome.message,
        }
        for outcome in report.details
    ]
    return pd.DataFrame(rows, columns=["check", "n", "result", "ms", "message"])


def render_verification(report: VerificationReport) -> str:
    table = verification_table(report)
    lines = [table.to_string(index=False)]
    failed = int((table["result"] == "FAIL").sum()) if not table.empty else 0
    summary = "all pass" if report.passed else f"{failed} FAILED"
    lines.append(f"{report.check}: {summary} (n <= {report.n_max}, {report.elapsed_ms:.0f} ms)")
    first = report.discrepancy
    if first is not None:
        where = f"s{list(first.partition)}" if first.partition is not None else "graded dimension"
        lines.append(
            f"first discrepancy: n={first.n}, {where}, q^{first.q_power}: {first.lhs} != {first.rhs} [{first.label}]"
        )
    return "\n".join(lines)


def save_verification_report(report: VerificationReport, directory: str = REPORTS_DIR) -> str:
    """Write the report as JSON plus a CSV table; returns the JSON path."""
    os.makedirs(directory, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
    json_path = os.path.join(directory, f"verify_report_{timestamp}.json")
    with open(json_path, "w") as f:
        json.dump(report.to_dict(), f, indent=2)
    verification_table(report).to_csv(os.path.join(directory, f"verify_report_{timestamp}.csv"), index=False)
    logger.info(f"Verification report saved with timestamp {timestamp}")
    return json_path
