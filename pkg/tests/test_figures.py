from fractions import Fraction

import pytest

from nonhaus.errors import IoFailure, OriginCountOutOfRange
from nonhaus.figures import SvgScene, render_figure


class TestRenderFigure:
    def test_default_scene_elements(self):
        data = render_figure(SvgScene(k=3)).decode()
        assert data.startswith("<svg")
        assert data.count('class="branch"') == 3
        assert data.count('class="origin"') == 3
        assert data.count('class="zpoint"') == 1
        assert data.count('class="proj"') == 3

    def test_byte_identical(self):
        assert render_figure(SvgScene(k=3)) == render_figure(SvgScene(k=3))
        scene = SvgScene(k=4, lift_x0=Fraction(1))
        assert render_figure(scene) == render_figure(scene)

    def test_lift_annotations(self):
        data = render_figure(SvgScene(k=3, lift_x0=Fraction(1))).decode()
        assert data.count('class="lift"') == 3

    def test_k_validated(self):
        with pytest.raises(OriginCountOutOfRange):
            SvgScene(k=1)

    def test_write_to_file(self, tmp_path):
        out = tmp_path / "figure.svg"
        data = render_figure(SvgScene(k=2), out)
        assert out.read_bytes() == data

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(IoFailure):
            render_figure(SvgScene(k=2), tmp_path / "missing" / "figure.svg")

    def test_pure_ascii(self):
        render_figure(SvgScene(k=6)).decode("ascii")
