#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import json
import os

import jsonschema

import octobot_commons.json_util as json_util
import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore as imagecore
import octovector.segmentation.mask as mask_import

LOGGER_NAME = "MaskIngestion"

MANIFEST_WIDTH = "width"
MANIFEST_HEIGHT = "height"
MANIFEST_ENTRIES = "entries"
ENTRY_FILE = "file"
ENTRY_CONFIDENCE = "confidence"


def _read_manifest(manifest_path: str) -> dict:
    try:
        manifest = json_util.read_file(manifest_path)
    except (json.JSONDecodeError, UnicodeDecodeError) as err:
        raise errors.ImageFormatError(f"Malformed mask manifest {manifest_path}: {err}") from err
    try:
        jsonschema.validate(instance=manifest, schema=json_util.read_file(constants.MASK_MANIFEST_SCHEMA))
    except jsonschema.ValidationError as err:
        raise errors.ImageFormatError(f"Malformed mask manifest {manifest_path}: {err.message}") from err
    return manifest


def ingest_masks(manifest_path: str, image: imagecore.RasterImage) -> list:
    """
    Load the masks listed in a manifest, in manifest order
    :param manifest_path: the json manifest, mask files are resolved relatively to its folder
    :param image: the image the masks were produced for
    :return: the list of masks
    """
    logger = logging.get_logger(LOGGER_NAME)
    manifest = _read_manifest(manifest_path)
    if (manifest[MANIFEST_WIDTH], manifest[MANIFEST_HEIGHT]) != (image.width, image.height):
        raise errors.DimensionMismatchError(
            f"Mask manifest {manifest_path} is sized {manifest[MANIFEST_WIDTH]}x{manifest[MANIFEST_HEIGHT]} "
            f"while the image is {image.width}x{image.height}"
        )
    root = os.path.dirname(os.path.abspath(manifest_path))
    masks = []
    for index, entry in enumerate(manifest[MANIFEST_ENTRIES]):
        mask_path = os.path.join(root, entry[ENTRY_FILE])
        if not os.path.isfile(mask_path):
            raise FileNotFoundError(f"Mask manifest entry {index}: missing mask file {mask_path}")
        bits = imagecore.load_mask_bits(mask_path)
        if bits.shape != image.shape:
            raise errors.DimensionMismatchError(
                f"Mask manifest entry {index} ({entry[ENTRY_FILE]}) is sized {bits.shape[1]}x{bits.shape[0]} "
                f"while the image is {image.width}x{image.height}"
            )
        masks.append(mask_import.Mask(bits, entry.get(ENTRY_CONFIDENCE, constants.DEFAULT_CONFIDENCE)))
    logger.info(f"Ingested {len(masks)} masks from {manifest_path}")
    return masks
