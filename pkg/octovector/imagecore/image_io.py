#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import os

import numpy
import PIL.Image

import octovector.constants as constants
import octovector.errors as errors
import octovector.imagecore.raster_image as raster_image

SUPPORTED_FORMATS = ("PPM", "PNG")
SUPPORTED_MODES = ("RGB", "RGBA", "L", "P", "1")
FORMAT_BY_EXTENSION = {
    ".ppm": "PPM",
    ".pgm": "PPM",
    ".pnm": "PPM",
    ".png": "PNG",
}


def _decode(path: str, context: str) -> PIL.Image.Image:
    # plain open() first: missing or unreadable files keep raising OSError
    with open(path, "rb") as image_file:
        try:
            with PIL.Image.open(image_file) as image:
                if image.format not in SUPPORTED_FORMATS:
                    raise errors.ImageFormatError(f"{context}: unsupported image format {image.format} ({path})")
                if image.mode not in SUPPORTED_MODES:
                    raise errors.ImageFormatError(f"{context}: unsupported pixel mode {image.mode} ({path})")
                image.load()
                if image.width == 0 or image.height == 0:
                    raise errors.ImageFormatError(f"{context}: zero-dimension image ({path})")
                return image.copy()
        except (PIL.UnidentifiedImageError, OSError, ValueError, SyntaxError) as err:
            raise errors.ImageFormatError(f"{context}: unreadable image {path}: {err}") from err


def to_bytes(values: numpy.ndarray) -> numpy.ndarray:
    # values are non-negative: floor(x + 0.5) rounds half away from zero
    return numpy.floor(numpy.clip(values, 0, 1) * constants.PIXEL_MAX_VALUE + 0.5).astype(numpy.uint8)


def _output_format(path: str) -> str:
    extension = os.path.splitext(path)[1].lower()
    try:
        return FORMAT_BY_EXTENSION[extension]
    except KeyError as err:
        raise errors.ImageFormatError(
            f"Unsupported output extension '{extension}', use one of {', '.join(FORMAT_BY_EXTENSION)}"
        ) from err


def load_image(path: str) -> raster_image.RasterImage:
    image = _decode(path, "Image")
    pixels = numpy.asarray(image.convert("RGB"), dtype=numpy.float64)
    return raster_image.RasterImage(pixels / constants.PIXEL_MAX_VALUE)


def load_mask_bits(path: str, threshold: int = constants.MASK_BINARY_THRESHOLD) -> numpy.ndarray:
    image = _decode(path, "Mask")
    return numpy.asarray(image.convert("L")) > threshold


def save_image(image: raster_image.RasterImage, path: str):
    PIL.Image.fromarray(to_bytes(image.data), "RGB").save(path, format=_output_format(path))


def save_mask_bits(bits: numpy.ndarray, path: str):
    PIL.Image.fromarray(numpy.where(bits, constants.PIXEL_MAX_VALUE, 0).astype(numpy.uint8), "L").save(
        path, format=_output_format(path)
    )


def save_scalar_map(scalar_map: raster_image.ScalarMap, path: str):
    """
    Write a scalar map as a grayscale image, scaled so that its maximum value is white
    """
    max_value = float(scalar_map.data.max()) if scalar_map.data.size else 0
    scaled = scalar_map.data / max_value if max_value > 0 else numpy.zeros(scalar_map.shape)
    PIL.Image.fromarray(to_bytes(scaled), "L").save(path, format=_output_format(path))
