"""Figure rendering from the squeezeslab CSV tables.

Each figure id maps to one CSV schema (validated against the producing
command's header) and one layout: a main panel plus, for most figures, an
inset with the companion quantity.  Reference lines (standard quantum
limit, incident variance, thick-slab asymptotes, unity) are drawn from the
figure's :class:`FigureSpec`; the defaults repeat the values belonging to
the preset parameter sets so the pictures are self-contained.

Rendering is read-only over the CSV and deterministic: re-running on the
same input reproduces the same image bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

EXPECTED_HEADERS = {
    "fig2": "l,varX_T,varY_T,varX_R,varY_R",
    "fig3": "l,varX_T,varY_T,varX_R,varY_R",
    "fig4": "eta_c,dw_T_rel,dw_R_rel,Lratio_T,Lratio_R,rhoeff_T_rel,rhoeff_R_rel,valid_T,valid_R",
    "fig5": "eta_c,dw_T_rel,dw_R_rel,Lratio_T,Lratio_R,rhoeff_T_rel,rhoeff_R_rel,valid_T,valid_R",
    "fig6": "eta_c,dw_T_rel,dw_R_rel,Lratio_T,Lratio_R,rhoeff_T_rel,rhoeff_R_rel,valid_T,valid_R",
    "fig7": "dw_rel,rho_I,rho_T_k1,rho_T_k2",
}

SQL = 0.25
# Incident squeezed variance e^{-2 rho}/4 for the rho = 0.8 presets.
INCIDENT_VARIANCE = math.exp(-1.6) / 4.0
# Thick-slab reflected limits for eta = 1.5, kappa = 0.0075, rho = 0.8
# (the fig3 preset parameters).
FIG3_ASYMPTOTE_X = 0.2420172412919404
FIG3_ASYMPTOTE_Y = 0.2895388627171416


class SchemaError(ValueError):
    """CSV header does not match the figure's expected schema."""


@dataclass
class FigureSpec:
    figure_id: str
    input_csv: Path
    output_image: Path
    reference_lines: List[Tuple[str, float]] = field(default_factory=list)
    inset_reference_lines: List[Tuple[str, float]] = field(default_factory=list)


def default_spec(figure_id: str, input_csv, output_image) -> FigureSpec:
    """FigureSpec with the reference lines belonging to the preset data."""
    main: List[Tuple[str, float]] = []
    inset: List[Tuple[str, float]] = []
    if figure_id in ("fig2", "fig3"):
        main = [("SQL = 1/4", SQL), ("incident variance", INCIDENT_VARIANCE)]
        inset = [("SQL = 1/4", SQL)]
    if figure_id == "fig3":
        main.append(("thick-slab limit 0.242", FIG3_ASYMPTOTE_X))
        inset.append(("thick-slab limit 0.290", FIG3_ASYMPTOTE_Y))
    if figure_id in ("fig5", "fig6"):
        main = [("unity", 1.0)]
        inset = [("unity", 1.0)]
    return FigureSpec(
        figure_id=figure_id,
        input_csv=Path(input_csv),
        output_image=Path(output_image),
        reference_lines=main,
        inset_reference_lines=inset,
    )


def _load(spec: FigureSpec) -> Dict[str, np.ndarray]:
    if spec.figure_id not in EXPECTED_HEADERS:
        raise SchemaError(f"unknown figure id {spec.figure_id!r}")
    try:
        lines = Path(spec.input_csv).read_text().splitlines()
    except OSError as exc:
        raise SchemaError(f"cannot read {spec.input_csv}: {exc}") from exc
    expected = EXPECTED_HEADERS[spec.figure_id]
    if not lines or lines[0] != expected:
        raise SchemaError(
            f"{spec.input_csv}: header {lines[0] if lines else '<empty>'!r} "
            f"does not match {expected!r}"
        )
    names = expected.split(",")
    columns: Dict[str, list] = {name: [] for name in names}
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != len(names):
            raise SchemaError(f"{spec.input_csv}: row with {len(parts)} fields, expected {len(names)}")
        for name, value in zip(names, parts):
            if name.startswith("valid"):
                columns[name].append(1.0 if value == "true" else 0.0)
            else:
                try:
                    columns[name].append(float(value))
                except ValueError as exc:
                    raise SchemaError(f"{spec.input_csv}: bad number {value!r}") from exc
    if not columns[names[0]]:
        raise SchemaError(f"{spec.input_csv}: no data rows")
    return {name: np.array(vals) for name, vals in columns.items()}


def _draw_references(ax, lines):
    for label, value in lines:
        style = "--" if "SQL" in label else "-"
        color = "black" if "SQL" in label else ("gray" if "incident" in label else "purple")
        ax.axhline(value, ls=style, lw=0.9, color=color, label=label)


def _split_series(x):
    """Indices where a sweep restarts (x decreases): series boundaries."""
    breaks = np.where(np.diff(x) < 0)[0] + 1
    edges = [0, *breaks.tolist(), len(x)]
    return [slice(a, b) for a, b in zip(edges[:-1], edges[1:])]


def _variance_figure(spec: FigureSpec, data, main_col, inset_col, channel_name):
    fig, ax = plt.subplots(figsize=(8, 5))
    l_um = data["l"] * 1e6
    ax.plot(l_um, data[main_col], lw=0.5, color="tab:blue")
    _draw_references(ax, spec.reference_lines)
    ax.set_xlabel("half-thickness l (um)")
    ax.set_ylabel(f"squeezed {channel_name} variance")
    ax.legend(fontsize=7, loc="center right")
    inset = fig.add_axes([0.55, 0.45, 0.32, 0.38])
    inset.plot(l_um, data[inset_col], lw=0.4, color="tab:orange")
    _draw_references(inset, spec.inset_reference_lines)
    inset.set_title(f"orthogonal (anti-squeezed) quadrature {inset_col}", fontsize=7)
    inset.tick_params(labelsize=7)
    return fig


def _sweep_figure(spec: FigureSpec, data, main_col, inset_col, ylabel, mask_valid=None):
    fig, ax = plt.subplots(figsize=(8, 5))
    inset = fig.add_axes([0.55, 0.55, 0.32, 0.3])
    eta = data["eta_c"]
    styles = ["-", ":"]
    for k, block in enumerate(_split_series(eta)):
        style = styles[k % len(styles)]
        for axis, col, valid_col in ((ax, main_col, "valid_T"), (inset, inset_col, "valid_R")):
            y = data[col][block].copy()
            if mask_valid:
                y[data[valid_col][block] < 0.5] = np.nan
            axis.plot(eta[block], y, style, lw=0.8, label=f"series {k + 1}")
    _draw_references(ax, spec.reference_lines)
    _draw_references(inset, spec.inset_reference_lines)
    ax.set_xlabel("refractive index eta_c")
    ax.set_ylabel(ylabel + " (transmitted)")
    ax.legend(fontsize=7)
    inset.set_title(ylabel + " (reflected)", fontsize=7)
    inset.tick_params(labelsize=7)
    return fig


def _spectra_figure(spec: FigureSpec, data):
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(data["dw_rel"], data["rho_I"], "-", lw=1.2, label="incident")
    ax.plot(data["dw_rel"], data["rho_T_k1"], "--", lw=1.0, label="transmitted, low loss")
    ax.plot(data["dw_rel"], data["rho_T_k2"], ":", lw=1.0, label="transmitted, high loss")
    _draw_references(ax, spec.reference_lines)
    ax.set_xlabel("(omega - omega_c) / omega_c")
    ax.set_ylabel("squeeze exponent")
    ax.legend(fontsize=8)
    return fig


def render(spec: FigureSpec) -> Path:
    """Validate the CSV and write the figure image; returns the output path."""
    data = _load(spec)
    if spec.figure_id == "fig2":
        fig = _variance_figure(spec, data, "varX_T", "varY_T", "transmitted")
    elif spec.figure_id == "fig3":
        fig = _variance_figure(spec, data, "varX_R", "varY_R", "reflected")
    elif spec.figure_id == "fig4":
        fig = _sweep_figure(spec, data, "dw_T_rel", "dw_R_rel", "centre shift / carrier")
    elif spec.figure_id == "fig5":
        fig = _sweep_figure(spec, data, "Lratio_T", "Lratio_R", "bandwidth ratio")
    elif spec.figure_id == "fig6":
        fig = _sweep_figure(
            spec, data, "rhoeff_T_rel", "rhoeff_R_rel", "effective squeeze ratio", mask_valid=True
        )
    else:
        fig = _spectra_figure(spec, data)
    out = Path(spec.output_image)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
