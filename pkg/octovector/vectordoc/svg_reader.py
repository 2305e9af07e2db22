#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import re
import xml.etree.ElementTree as ElementTree

import octovector.constants as constants
import octovector.errors as errors
import octovector.tracing as tracing
import octovector.vectordoc.vector_document as vector_document

SVG_NAMESPACE = "{http://www.w3.org/2000/svg}"
SVG_TAG = f"{SVG_NAMESPACE}svg"
PATH_TAG = f"{SVG_NAMESPACE}path"
DEFS_TAG = f"{SVG_NAMESPACE}defs"

MOVE_TO = "M"
CUBIC_TO = "C"
CLOSE_PATH = "Z"

PATH_DATA_TOKEN = re.compile(
    r"\s*(?:(?P<number>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)|(?P<command>[A-Za-z])|(?P<invalid>[^\s,]))[\s,]*"
)
FILL_PATTERN = re.compile(r"^\s*rgb\(\s*(\d{1,3})\s*,\s*(\d{1,3})\s*,\s*(\d{1,3})\s*\)\s*$")
VIEWBOX_PATTERN = re.compile(r"^\s*0[\s,]+0[\s,]+(\d+)[\s,]+(\d+)\s*$")


def _tokenize(data: str, element_index: int) -> list:
    tokens = []
    for match in PATH_DATA_TOKEN.finditer(data):
        if match.group("invalid") is not None:
            raise errors.ImageFormatError(
                f"SVG path {element_index}: unexpected character '{match.group('invalid')}' in path data"
            )
        if match.group("number") is not None:
            tokens.append(float(match.group("number")))
        else:
            command = match.group("command")
            if command not in (MOVE_TO, CUBIC_TO, CLOSE_PATH):
                raise errors.ImageFormatError(f"SVG path {element_index}: unsupported path command '{command}'")
            tokens.append(command)
    return tokens


def _take_point(tokens: list, position: int, element_index: int) -> tuple:
    pair = tokens[position:position + 2]
    if len(pair) != 2 or not all(isinstance(value, float) for value in pair):
        raise errors.ImageFormatError(f"SVG path {element_index}: expected a coordinate pair at token {position}")
    return pair[0], pair[1]


def parse_path_data(data: str, element_index: int) -> list:
    """
    Parse the "M x,y C x,y x,y x,y ... Z" subset
    :return: the CubicSegment list
    """
    tokens = _tokenize(data, element_index)
    if not tokens or tokens[0] != MOVE_TO:
        raise errors.ImageFormatError(f"SVG path {element_index}: path data must start with '{MOVE_TO}'")
    start = _take_point(tokens, 1, element_index)
    position, current, segments = 3, start, []
    while position < len(tokens) and tokens[position] == CUBIC_TO:
        first = _take_point(tokens, position + 1, element_index)
        second = _take_point(tokens, position + 3, element_index)
        end = _take_point(tokens, position + 5, element_index)
        segments.append(tracing.CubicSegment(current, first, second, end))
        current = end
        position += 7
    if position != len(tokens) - 1 or tokens[position] != CLOSE_PATH:
        token = tokens[position] if position < len(tokens) else "end of data"
        raise errors.ImageFormatError(f"SVG path {element_index}: unexpected token '{token}', expected "
                                      f"'{CUBIC_TO}' or a final '{CLOSE_PATH}'")
    if not segments:
        raise errors.ImageFormatError(f"SVG path {element_index}: no cubic segment")
    if max(abs(current[0] - start[0]), abs(current[1] - start[1])) > constants.SVG_ROUND_TRIP_TOLERANCE:
        raise errors.ImageFormatError(f"SVG path {element_index}: last segment ends at {current}, not on the "
                                      f"starting point {start}")
    # snap the closing point on the starting one
    segments[-1] = tracing.CubicSegment(segments[-1].p0, segments[-1].p1, segments[-1].p2, start)
    return segments


def parse_fill(fill: str, element_index: int) -> tuple:
    match = FILL_PATTERN.match(fill or "")
    if match is None or any(int(channel) > 255 for channel in match.groups()):
        raise errors.ImageFormatError(f"SVG path {element_index}: unsupported fill '{fill}'")
    return tuple(int(channel) / constants.PIXEL_MAX_VALUE for channel in match.groups())


def _document_size(root: ElementTree.Element) -> (int, int):
    view_box = VIEWBOX_PATTERN.match(root.get("viewBox", ""))
    if view_box is None:
        raise errors.ImageFormatError(f"Unsupported SVG viewBox: '{root.get('viewBox')}'")
    return int(view_box.group(1)), int(view_box.group(2))


def read_svg(path: str) -> vector_document.VectorDocument:
    """
    Read an SVG document restricted to the subset written by write_svg
    """
    try:
        root = ElementTree.parse(path).getroot()
    except ElementTree.ParseError as err:
        raise errors.ImageFormatError(f"Malformed SVG document {path}: {err}") from err
    if root.tag != SVG_TAG:
        raise errors.ImageFormatError(f"{path} is not an SVG document, root element: {root.tag}")
    width, height = _document_size(root)
    paths = []
    for index, element in enumerate(root):
        if element.tag == DEFS_TAG and not len(element):
            continue
        if element.tag != PATH_TAG:
            raise errors.ImageFormatError(f"SVG element {index}: unsupported element {element.tag}")
        if element.get("stroke", "none") != "none":
            raise errors.ImageFormatError(f"SVG element {index}: strokes are not supported")
        try:
            paths.append(tracing.BezierPath(parse_path_data(element.get("d", ""), index),
                                            parse_fill(element.get("fill"), index)))
        except ValueError as err:
            raise errors.ImageFormatError(f"SVG element {index}: {err}") from err
    return vector_document.VectorDocument(width, height, paths)
