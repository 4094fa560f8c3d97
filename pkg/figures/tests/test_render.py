import math

import pytest

from figrender import EXPECTED_HEADERS, SchemaError, default_spec, render
from figrender.cli import main


def write_variance_csv(path, rows=40, l_max=2e-5):
    lines = [EXPECTED_HEADERS["fig2"]]
    for i in range(1, rows + 1):
        l = l_max * i / rows
        phase = math.cos(2e6 * l)
        lines.append(
            f"{l:.17g},{0.15 + 0.05 * phase:.17g},{0.6 - 0.1 * phase:.17g},"
            f"{0.24 - 0.01 * phase:.17g},{0.27 + 0.01 * phase:.17g}"
        )
    path.write_text("\n".join(lines) + "\n")


def write_pulseparams_csv(path, blocks=2, rows=30):
    lines = [EXPECTED_HEADERS["fig4"]]
    for _ in range(blocks):
        for i in range(rows):
            eta = 1.05 + (3.0 - 1.05) * i / (rows - 1)
            lines.append(
                f"{eta:.17g},{1e-8 * math.sin(40 * eta):.17g},{2e-8 * math.cos(40 * eta):.17g},"
                f"{1.0 + 0.1 * math.sin(40 * eta):.17g},{1.0 + 0.5 * math.cos(40 * eta):.17g},"
                f"{1.0 - 1e-4 * (1 + math.sin(40 * eta)):.17g},{1.0 - 2e-4:.17g},"
                f"{'true' if i % 7 else 'false'},true"
            )
    path.write_text("\n".join(lines) + "\n")


def write_spectra_csv(path, rows=50):
    lines = [EXPECTED_HEADERS["fig7"]]
    for i in range(rows):
        x = -0.006 + 0.012 * i / (rows - 1)
        g = math.exp(-((x / 0.002) ** 2))
        lines.append(f"{x:.17g},{1.5 * g:.17g},{1.2 * g:.17g},{0.4 * g:.17g}")
    path.write_text("\n".join(lines) + "\n")


WRITERS = {
    "fig2": write_variance_csv,
    "fig3": write_variance_csv,
    "fig4": write_pulseparams_csv,
    "fig5": write_pulseparams_csv,
    "fig6": write_pulseparams_csv,
    "fig7": write_spectra_csv,
}


@pytest.mark.parametrize("figure_id", sorted(EXPECTED_HEADERS))
def test_render_each_figure(tmp_path, figure_id):
    csv = tmp_path / f"{figure_id}.csv"
    WRITERS[figure_id](csv)
    out = tmp_path / f"{figure_id}.png"
    spec = default_spec(figure_id, csv, out)
    assert render(spec) == out
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_fig3_reference_lines_present(tmp_path):
    spec = default_spec("fig3", tmp_path / "fig3.csv", tmp_path / "fig3.png")
    values = [v for _, v in spec.reference_lines]
    assert 0.25 in values
    assert any(abs(v - 0.242) < 1e-3 for v in values)
    inset_values = [v for _, v in spec.inset_reference_lines]
    assert any(abs(v - 0.290) < 1e-3 for v in inset_values)


def test_rendering_is_idempotent(tmp_path):
    csv = tmp_path / "fig2.csv"
    write_variance_csv(csv)
    out = tmp_path / "fig2.png"
    render(default_spec("fig2", csv, out))
    first = out.read_bytes()
    render(default_spec("fig2", csv, out))
    assert out.read_bytes() == first


def test_malformed_header_rejected(tmp_path):
    bad = tmp_path / "fig2.csv"
    bad.write_text("l,wrong,header\n1,2,3\n")
    with pytest.raises(SchemaError):
        render(default_spec("fig2", bad, tmp_path / "fig2.png"))


def test_cli_exit_codes(tmp_path):
    csv_dir = tmp_path / "csv"
    out_dir = tmp_path / "out"
    csv_dir.mkdir()
    write_variance_csv(csv_dir / "fig2.csv")
    assert main(["--csv-dir", str(csv_dir), "--out-dir", str(out_dir), "--figures", "fig2"]) == 0
    assert (out_dir / "fig2.png").exists()
    # missing input file
    assert main(["--csv-dir", str(csv_dir), "--out-dir", str(out_dir), "--figures", "fig3"]) == 2
    # malformed CSV
    (csv_dir / "fig7.csv").write_text("nope\n")
    assert main(["--csv-dir", str(csv_dir), "--out-dir", str(out_dir), "--figures", "fig7"]) == 2
    # unknown figure id
    assert main(["--csv-dir", str(csv_dir), "--out-dir", str(out_dir), "--figures", "fig9"]) == 2
