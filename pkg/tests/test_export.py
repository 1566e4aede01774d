from __future__ import annotations

import numpy as np
import pytest

from polytone.curve import solve_coefficients
from polytone.export import export_function_csv, export_histogram_csv
from polytone.image import GrayImage, histogram


def parse_rows(csv_text: str):
    lines = csv_text.strip().split("\n")
    assert lines[0] == "v,f"
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        rows.append((float(parts[0]), float(parts[1]), len(parts) == 3))
        if len(parts) == 3:
            assert parts[2] == "node"
    return rows


def test_identity_three_samples():
    poly = solve_coefficients((0, 255), (0, 255), 255)
    rows = parse_rows(export_function_csv(poly, 3))
    assert [(v, f) for v, f, _ in rows] == [(0.0, 0.0), (127.5, 127.5), (255.0, 255.0)]
    assert [marked for _, _, marked in rows] == [True, False, True]


def test_node_rows_hit_targets():
    poly = solve_coefficients((15, 53.9, 134), (0, 127.5, 255), 255)
    rows = parse_rows(export_function_csv(poly, 16))
    node_rows = [(v, f) for v, f, marked in rows if marked]
    assert [v for v, _ in node_rows] == [15.0, 53.9, 134.0]
    np.testing.assert_allclose(
        [f for _, f in node_rows], [0.0, 127.5, 255.0], atol=1e-9
    )


def test_two_samples_give_endpoints_plus_nodes():
    poly = solve_coefficients((15, 53.9, 134), (0, 127.5, 255), 255)
    rows = parse_rows(export_function_csv(poly, 2))
    assert [v for v, _, _ in rows] == [0.0, 15.0, 53.9, 134.0, 255.0]


def test_rows_sorted_and_clamped():
    poly = solve_coefficients((15, 53.9, 134), (0, 127.5, 255), 255)
    rows = parse_rows(export_function_csv(poly, 64))
    positions = [v for v, _, _ in rows]
    assert positions == sorted(positions)
    assert all(0.0 <= f <= 255.0 for _, f, _ in rows)
    # below the first node the clamped curve is flat at the first target
    assert all(f == 0.0 for v, f, _ in rows if v <= 15.0)


def test_sample_count_contract():
    poly = solve_coefficients((15, 53.9, 134), (0, 127.5, 255), 255)
    rows = parse_rows(export_function_csv(poly, 16))
    # 16 grid points plus 3 nodes, none coincident for this function
    assert len(rows) == 19


def test_rejects_too_few_samples():
    poly = solve_coefficients((0, 255), (0, 255), 255)
    with pytest.raises(ValueError):
        export_function_csv(poly, 1)


@pytest.mark.parametrize(
    "levels,max_level",
    [
        ([0, 64, 128, 255], 255),
        ([9] * 100, 255),
        (list(range(10)), 9),
    ],
)
def test_histogram_csv(levels, max_level):
    image = GrayImage(
        width=len(levels), height=1, levels=np.asarray(levels), max_level=max_level
    )
    text = export_histogram_csv(histogram(image))
    lines = text.strip().split("\n")
    assert lines[0] == "level,count"
    assert len(lines) == max_level + 2
    counts = {}
    for line in lines[1:]:
        level, count = line.split(",")
        counts[int(level)] = int(count)
    assert sum(counts.values()) == len(levels)
    for value in set(levels):
        assert counts[value] == levels.count(value)


def test_csv_uses_lf_and_plain_decimal_points():
    poly = solve_coefficients((0, 255), (0, 255), 255)
    text = export_function_csv(poly, 3)
    assert "\r" not in text
    assert text.endswith("\n")
    assert "127.5,127.5" in text
