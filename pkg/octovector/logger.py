#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import logging
import os
import sys
import traceback
import logging.config as config

import octobot_commons.logging as common_logging

import octovector.constants as constants

LOG_FILE_NAME = f"{constants.PROJECT_NAME}.log"


def _log_uncaught_exceptions(ex_cls, ex, tb):
    logging.exception("".join(traceback.format_tb(tb)))
    logging.exception("{0}: {1}".format(ex_cls, ex))


def _load_logger_config():
    config.fileConfig(
        constants.LOGGING_CONFIG_FILE,
        defaults={"logfilename": os.path.join(constants.LOGS_FOLDER, LOG_FILE_NAME).replace("\\", "/")},
        disable_existing_loggers=False,
    )


def init_logger():
    try:
        os.makedirs(constants.LOGS_FOLDER, exist_ok=True)
        _load_logger_config()
    except (KeyError, OSError) as err:
        # console only logging when the configuration or the logs folder is not usable
        logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                            format="%(asctime)s %(levelname)-8s %(name)-20s %(message)s")
        logging.getLogger(f"{constants.PROJECT_NAME} Launcher").warning(
            f"Impossible to load the logging configuration from {constants.LOGGING_CONFIG_FILE}: {err}"
        )

    logger = common_logging.get_logger(f"{constants.PROJECT_NAME} Launcher")
    sys.excepthook = _log_uncaught_exceptions
    return logger
