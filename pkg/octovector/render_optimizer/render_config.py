#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import octovector.constants as constants
import octovector.errors as errors


class RenderConfig:
    def __init__(self, flatten_steps: int = constants.DEFAULT_FLATTEN_STEPS,
                 smoothing: float = constants.DEFAULT_SMOOTHING):
        if flatten_steps < 2:
            raise errors.ConfigError(f"flatten_steps must be >= 2, got {flatten_steps}")
        if smoothing <= 0:
            raise errors.ConfigError(f"smoothing must be > 0, got {smoothing}")
        self.flatten_steps: int = int(flatten_steps)
        self.smoothing: float = float(smoothing)

    def __eq__(self, other):
        return isinstance(other, RenderConfig) and (self.flatten_steps, self.smoothing) == \
            (other.flatten_steps, other.smoothing)

    def __hash__(self):
        return hash((self.flatten_steps, self.smoothing))

    def __repr__(self):
        return f"{self.__class__.__name__}(flatten_steps={self.flatten_steps}, smoothing={self.smoothing})"
