#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import xml.etree.ElementTree as ElementTree

import octovector.vectordoc as vectordoc
import tests.test_utils.images as images
import tests.test_utils.documents as documents


def test_format_coordinate():
    assert vectordoc.format_coordinate(1) == "1.00"
    assert vectordoc.format_coordinate(2.346) == "2.35"
    assert vectordoc.format_coordinate(-0.001) == "0.00"


def test_path_data():
    data = vectordoc.path_data(documents.square_path(0, 0, 9, images.RED))
    assert data.startswith("M 0.00,0.00 C 3.00,0.00 6.00,0.00 9.00,0.00")
    assert data.endswith("Z")
    commands = [token for token in data.split() if token.isalpha()]
    assert commands == ["M", "C", "C", "C", "C", "Z"]


def test_fill_attribute():
    assert vectordoc.fill_attribute(images.RED) == "rgb(255,0,0)"
    assert vectordoc.fill_attribute((0.5, 0.2, 0)) == "rgb(128,51,0)"


def test_write_empty_svg(tmp_path):
    output = str(tmp_path / "empty.svg")
    vectordoc.write_svg(vectordoc.VectorDocument(20, 10), output)
    root = ElementTree.parse(output).getroot()
    assert root.get("viewBox") == "0 0 20 10"
    assert root.get("width") == "20"
    assert root.get("height") == "10"
    assert not root.findall("{http://www.w3.org/2000/svg}path")


def test_write_svg_paths_order(tmp_path):
    rng = numpy.random.default_rng(7)
    document = documents.random_document(rng, 30, 30, 3)
    output = str(tmp_path / "paths.svg")
    vectordoc.write_svg(document, output)
    elements = ElementTree.parse(output).getroot().findall("{http://www.w3.org/2000/svg}path")
    assert [element.get("d") for element in elements] == [vectordoc.path_data(path) for path in document.paths]
    assert all(element.get("stroke") == "none" for element in elements)
