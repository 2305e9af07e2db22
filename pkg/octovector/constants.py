#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import os
import pathlib

import dotenv

import octovector.enums

# make constants visible
from octovector import (
    PROJECT_NAME,
    AUTHOR,
    VERSION,
    LONG_VERSION,
)

# load environment variables from .env file if exists
DOTENV_PATH = os.getenv("DOTENV_PATH", os.path.curdir)
dotenv.load_dotenv(os.path.join(DOTENV_PATH, ".env"), verbose=False)

# files
CONFIG_FOLDER = os.path.join(pathlib.Path(__file__).parent.absolute(), "config")
DEFAULT_CONFIG_FILE = os.path.join(CONFIG_FOLDER, "default_config.json")
CONFIG_FILE_SCHEMA = os.path.join(CONFIG_FOLDER, "config_schema.json")
MASK_MANIFEST_SCHEMA = os.path.join(CONFIG_FOLDER, "mask_manifest_schema.json")
LOGGING_CONFIG_FILE = os.path.join(CONFIG_FOLDER, "logging_config.ini")
LOGS_FOLDER = os.getenv("LOGS_FOLDER", "logs")

# image io
PIXEL_MAX_VALUE = 255
MASK_BINARY_THRESHOLD = 127
SCALAR_MAP_EXPORT_EXTENSIONS = (".pgm", ".png")

# segmentation
DEFAULT_GRID_SIDE = 32
DEFAULT_TOLERANCE = 0.12
DEFAULT_MIN_AREA_RATIO = 0.0005
DEFAULT_MIN_CONFIDENCE = 0.0
DEFAULT_CONFIDENCE = 1.0
AUTO_SEGMENT_IOU_THRESHOLD = 0.9

# selection
DEFAULT_IMPACT_THRESHOLD = 0.001
DEFAULT_KERNEL_FRACTION = 0.03
MIN_KERNEL_RADIUS = 3
MEAN_SHIFT_BANDWIDTH_FACTOR = 2
MEAN_SHIFT_CONVERGENCE_DISTANCE = 0.01
MEAN_SHIFT_MAX_ITERATIONS = 100
UNCOVERED_PIXEL_ERROR = 3.0

# tracing
DEFAULT_SEGMENTS_PER_PATH = 4
MIN_TRACEABLE_AREA = 16
MIN_CORNER_K = 3
CORNER_K_CONTOUR_DIVIDER = 40

# vector documents
SVG_COORDINATES_DECIMALS = 2
SVG_ROUND_TRIP_TOLERANCE = 0.005

# rendering and optimization
DEFAULT_FLATTEN_STEPS = 16
DEFAULT_SMOOTHING = 0.5
DEFAULT_LAMBDA_XING = 0.01
DEFAULT_LR_POINTS = 1.0
DEFAULT_LR_COLORS = 0.01
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8
RENDER_BACKGROUND = (1.0, 1.0, 1.0)
RENDER_PIXELS_CHUNK_SIZE = int(os.getenv("RENDER_PIXELS_CHUNK_SIZE", "16384"))
LOG_EVERY_ITERATIONS = int(os.getenv("LOG_EVERY_ITERATIONS", "100"))

# pipeline
DEFAULT_PHASE1_ITERS = 500
DEFAULT_PHASE2_ITERS = 500
DEFAULT_OMEGA = 0.784
DEFAULT_PROVIDER = octovector.enums.SegmentationProviders.BUILTIN
DEFAULT_USE_IMPACT_FILTER = True
# fills closer than this to the white render background are not worth a path when nothing lies below
BACKGROUND_FILL_TOLERANCE = 0.5 / PIXEL_MAX_VALUE

# diagnostics
DIAGNOSE_COVERAGE_ALPHA_FILE = "coverage_alpha.pgm"
DIAGNOSE_IMPACT_DECISIONS_FILE = "impact_decisions.json"
DIAGNOSE_MISSING_MAP_FILE = "missing_map.pgm"
