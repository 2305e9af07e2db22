#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import numpy
import svgwrite

import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.imagecore.image_io as image_io
import octovector.tracing as tracing
import octovector.vectordoc.vector_document as vector_document

LOGGER_NAME = "SVGWriter"


def format_coordinate(value: float) -> str:
    # + 0.0 turns -0.0 into 0.0
    return f"{round(value, constants.SVG_COORDINATES_DECIMALS) + 0.0:.{constants.SVG_COORDINATES_DECIMALS}f}"


def _point(point) -> str:
    return f"{format_coordinate(point[0])},{format_coordinate(point[1])}"


def path_data(path: tracing.BezierPath) -> str:
    commands = [f"M {_point(path.segments[0].p0)}"]
    for segment in path.segments:
        commands.append(f"C {_point(segment.p1)} {_point(segment.p2)} {_point(segment.p3)}")
    commands.append("Z")
    return " ".join(commands)


def fill_attribute(fill) -> str:
    red, green, blue = image_io.to_bytes(numpy.asarray(fill, dtype=numpy.float64))
    return f"rgb({red},{green},{blue})"


def to_drawing(document: vector_document.VectorDocument, filename: str = "noname.svg") -> svgwrite.Drawing:
    drawing = svgwrite.Drawing(filename, size=(document.width, document.height), profile="full", debug=False)
    drawing["viewBox"] = f"0 0 {document.width} {document.height}"
    for path in document.paths:
        drawing.add(drawing.path(d=path_data(path), fill=fill_attribute(path.fill), stroke="none"))
    return drawing


def write_svg(document: vector_document.VectorDocument, path: str):
    to_drawing(document, path).save()
    logging.get_logger(LOGGER_NAME).debug(f"Wrote {len(document.paths)} paths to {path}")
