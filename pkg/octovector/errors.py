#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.


class OctoVectorError(Exception):
    pass


class ImageFormatError(OctoVectorError):
    pass


class DimensionMismatchError(OctoVectorError):
    pass


class InvalidMaskError(OctoVectorError):
    pass


class ContourError(OctoVectorError):
    pass


class ConfigError(OctoVectorError):
    pass
