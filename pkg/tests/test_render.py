from src.projection import sl2_growth
from src.render import matching_svg, render_matching_svg, render_web_svg, web_svg
from src.tableaux import parse_word


def test_web_svg(single_cube_web):
    svg = web_svg(single_cube_web)
    assert svg.startswith("<?xml")
    assert svg.count("<circle") == len(single_cube_web.vertices)
    assert "b6" in svg


def test_render_web_creates_directories(tmp_path, single_cube_web):
    out = tmp_path / "nested" / "web.svg"
    result = render_web_svg(single_cube_web, str(out))
    assert result == {"file": str(out), "num_vertices": 12}
    assert out.read_text().rstrip().endswith("</svg>")


def test_render_matching(tmp_path):
    m = sl2_growth(parse_word("-2 -2 1 2 2 2 1 2", rank=2))
    assert matching_svg(m).count("<path") == 4
    result = render_matching_svg(m, str(tmp_path / "m.svg"))
    assert result["num_edges"] == 4


def test_render_reports_errors(tmp_path, single_cube_web):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    result = render_web_svg(single_cube_web, str(blocker / "web.svg"))
    assert "error" in result
