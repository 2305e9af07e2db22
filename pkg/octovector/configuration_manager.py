#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import json

import jsonschema

import octobot_commons.json_util as json_util
import octobot_commons.logging as logging

import octovector.constants as constants
import octovector.errors as errors
import octovector.pipeline as pipeline

LOGGER_NAME = "ConfigurationManager"


def read_config_file(config_path: str) -> dict:
    """
    :raise OSError: when the file can't be read
    :raise ConfigError: when the file is not a json object
    """
    try:
        content = json_util.read_file(config_path)
    except (json.JSONDecodeError, UnicodeDecodeError) as err:
        raise errors.ConfigError(f"Malformed configuration file {config_path}: {err}") from err
    if not isinstance(content, dict):
        raise errors.ConfigError(f"Configuration file {config_path} must contain a json object")
    return content


def get_default_config() -> dict:
    return read_config_file(constants.DEFAULT_CONFIG_FILE)


def validate_config_dict(config_dict: dict, origin: str = "configuration"):
    schema = json_util.read_file(constants.CONFIG_FILE_SCHEMA)
    try:
        jsonschema.validate(instance=config_dict, schema=schema)
    except jsonschema.ValidationError as err:
        path = ".".join(str(element) for element in err.absolute_path)
        raise errors.ConfigError(f"Invalid {origin}{f' at {path}' if path else ''}: {err.message}") from err


def load_pipeline_config(config_path: str = None, overrides: dict = None) -> pipeline.PipelineConfig:
    """
    Merge the default configuration, the optional user configuration file and the overrides, in this order
    :return: the validated PipelineConfig
    """
    logger = logging.get_logger(LOGGER_NAME)
    config_dict = get_default_config()
    if config_path is not None:
        user_config = read_config_file(config_path)
        validate_config_dict(user_config, config_path)
        config_dict.update(user_config)
        logger.debug(f"Loaded configuration from {config_path}")
    config_dict.update(overrides or {})
    validate_config_dict(config_dict)
    return pipeline.PipelineConfig(config_dict).validate()
