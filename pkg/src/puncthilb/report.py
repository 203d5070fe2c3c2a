"""JSON / CSV / Markdown rendering of topology reports."""

from __future__ import annotations

import csv
import io
import json

from .cells import CellRecord, TopologyReport
from .semimodule import minimal_generators

FORMATS = ("json", "csv", "md")


def cell_dict(cell: CellRecord) -> dict:
    m = cell.semimodule
    return {
        "alphas": list(m.alphas),
        "p_basis": list(m.lam.p_basis),
        "shift": m.shift,
        "min_generators": minimal_generators(m),
        "dim": cell.dim,
        "codim": cell.codim,
    }


def report_dict(rep: TopologyReport) -> dict:
    return {
        "semigroup": list(rep.gamma.generators),
        "r": rep.r,
        "dim": rep.dim_hilb,
        "euler": rep.euler,
        "betti_homology": list(rep.betti_hom),
        "betti_cohomology": list(rep.betti_coh),
        "poincare": rep.poincare,
        "cells": [cell_dict(c) for c in rep.cells],
    }


def _join(xs) -> str:
    return " ".join(map(str, xs))


def render_cells(rep: TopologyReport, fmt: str, oracle: str | None = None) -> str:
    if fmt == "json":
        payload = report_dict(rep)
        if oracle is not None:
            payload["oracle"] = oracle
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    rows = [cell_dict(c) for c in rep.cells]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "alphas", "p_basis", "shift", "min_generators", "dim", "codim"])
        for row in rows:
            writer.writerow([rep.r, _join(row["alphas"]), _join(row["p_basis"]), row["shift"],
                             _join(row["min_generators"]), row["dim"], row["codim"]])
        return buf.getvalue()
    if fmt == "md":
        g = ",".join(map(str, rep.gamma.generators))
        lines = [
            f"Gamma = <{g}>, r = {rep.r}: euler {rep.euler}, dim {rep.dim_hilb}, P(T) = {rep.poincare}",
            "",
            "| alphas | p-basis | shift | min generators | dim | codim |",
            "|---|---|---|---|---|---|",
        ]
        for row in rows:
            lines.append(
                f"| {_join(row['alphas'])} | {_join(row['p_basis'])} | {row['shift']} | "
                f"{_join(row['min_generators'])} | {row['dim']} | {row['codim']} |"
            )
        if oracle is not None:
            lines += ["", f"oracle: {oracle}"]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_table(reports: list[TopologyReport], fmt: str) -> str:
    if fmt == "json":
        payload = [
            {k: v for k, v in report_dict(rep).items() if k != "cells"} for rep in reports
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    width = max(len(rep.betti_hom) for rep in reports)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "euler", "dim"] + [f"h_{2 * d}" for d in range(width)]
                        + [f"h^{2 * d}" for d in range(width)])
        for rep in reports:
            hom = list(rep.betti_hom) + [""] * (width - len(rep.betti_hom))
            coh = list(rep.betti_coh) + [""] * (width - len(rep.betti_coh))
            writer.writerow([rep.r, rep.euler, rep.dim_hilb] + hom + coh)
        return buf.getvalue()
    if fmt == "md":
        g = ",".join(map(str, reports[0].gamma.generators))
        out = [f"Gamma = <{g}>", ""]
        out += ["| r | " + " | ".join(str(rep.r) for rep in reports) + " |",
                "|---|" + "---|" * len(reports),
                "| e | " + " | ".join(str(rep.euler) for rep in reports) + " |", ""]
        for label, attr in (("h_", "betti_hom"), ("h^", "betti_coh")):
            out.append("| r | " + " | ".join(f"{label}{2 * d}" for d in range(width)) + " |")
            out.append("|---|" + "---|" * width)
            for rep in reports:
                vals = [str(v) for v in getattr(rep, attr)] + [""] * (width - len(getattr(rep, attr)))
                out.append(f"| {rep.r} | " + " | ".join(vals) + " |")
            out.append("")
        return "\n".join(out)
    raise ValueError(f"unknown format {fmt!r}")
