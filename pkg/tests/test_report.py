from coxflip.gf2 import Gf2Vector
from coxflip.graphs import build_custom, build_family
from coxflip.report import (
    graph_layout,
    render_graph,
    render_orbit_sizes,
    write_orbit_report,
    write_verify_report,
)
from coxflip.verify import run_suite


def test_family_layouts():
    a = graph_layout(build_family("A", 4))
    assert a[1] == (1.0, 0.0) and a[4] == (4.0, 0.0)
    d = graph_layout(build_family("D", 5))
    assert d[5] == (3.0, 1.0)  # branch vertex raised above n-2
    e = graph_layout(build_family("E", 7))
    assert e[7] == (4.0, 1.0)  # branch vertex raised above n-3
    c = graph_layout(build_custom(4, [(1, 2)]))
    assert len(c) == 4


def test_render_graph_with_config(tmp_path):
    g = build_family("D", 4)
    path = render_graph(g, tmp_path / "d4.png", config=Gf2Vector.from_string("1010"))
    assert path.stat().st_size > 0


def test_orbit_report_files(tmp_path):
    g = build_family("A", 3)
    classes = [
        {"label": "O0", "size": "1", "rep": "000"},
        {"label": "O1", "size": "4", "rep": "100"},
        {"label": "O2", "size": "3", "rep": "010"},
    ]
    paths = write_orbit_report(g, classes, tmp_path)
    assert set(paths) == {"csv", "sizes_figure", "graph_figure"}
    text = (tmp_path / "orbits_A3.csv").read_text().splitlines()
    assert text[0] == "label,size,rep"
    assert text[1] == "O0,1,000"
    assert len(text) == 4


def test_verify_report_files(tmp_path):
    result = run_suite("kernel", "A", 2)
    paths = write_verify_report(result, tmp_path)
    body = (tmp_path / "checks_kernel.csv").read_text()
    assert "A2 kernel order,1,1,True" in body
    assert (tmp_path / "checks_kernel.png").stat().st_size > 0


def test_render_orbit_sizes_log_scale(tmp_path):
    classes = [
        {"label": "O0", "size": "1", "rep": "0" * 10},
        {"label": "O1", "size": "527", "rep": "1" + "0" * 9},
    ]
    path = render_orbit_sizes(classes, tmp_path / "sizes.png", "test")
    assert path.stat().st_size > 0
