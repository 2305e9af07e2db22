#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

from octovector.imagecore import raster_image
from octovector.imagecore import kernels
from octovector.imagecore import image_ops
from octovector.imagecore import image_io

from octovector.imagecore.raster_image import (
    RasterImage,
    ScalarMap,
    ensure_same_size,
)
from octovector.imagecore.kernels import (
    BinaryKernel,
    make_circular_kernel,
    kernel_radius_for,
    convolve_binary,
)
from octovector.imagecore.image_ops import (
    Component,
    difference_map,
    label_components,
    connected_components,
)
from octovector.imagecore.image_io import (
    load_image,
    load_mask_bits,
    save_image,
    save_mask_bits,
    save_scalar_map,
)

__all__ = [
    "RasterImage",
    "ScalarMap",
    "ensure_same_size",
    "BinaryKernel",
    "make_circular_kernel",
    "kernel_radius_for",
    "convolve_binary",
    "Component",
    "difference_map",
    "label_components",
    "connected_components",
    "load_image",
    "load_mask_bits",
    "save_image",
    "save_mask_bits",
    "save_scalar_map",
]
