#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import argparse
import sys

import octobot_commons.logging as logging

import octovector.commands as commands
import octovector.configuration_manager as configuration_manager
import octovector.constants as constants
import octovector.enums as enums
import octovector.errors as errors
import octovector.logger as octovector_logger

CLI_LOGGER_NAME = "CLI"

# (flag, config key, type, default, help)
SEGMENTATION_ARGUMENTS = (
    ("--grid", enums.PipelineConfigKeys.GRID_SIDE, int, constants.DEFAULT_GRID_SIDE,
     "Side of the automatic segmentation prompt grid."),
    ("--tolerance", enums.PipelineConfigKeys.TOLERANCE, float, constants.DEFAULT_TOLERANCE,
     "Color distance under which a pixel joins a grown region."),
    ("--min-area", enums.PipelineConfigKeys.MIN_AREA, int, None,
     "Mask cleaning area threshold, derived from the image size when not set."),
    ("--min-confidence", enums.PipelineConfigKeys.MIN_CONFIDENCE, float, constants.DEFAULT_MIN_CONFIDENCE,
     "Masks with a lower confidence score are dropped."),
    ("--masks", enums.PipelineConfigKeys.MANIFEST_PATH, str, None,
     "Use the masks listed in this json manifest instead of the automatic segmentation."),
)
SELECTION_ARGUMENTS = (
    ("--impact-threshold", enums.PipelineConfigKeys.IMPACT_THRESHOLD, float, constants.DEFAULT_IMPACT_THRESHOLD,
     "Minimal error reduction for a mask to be kept."),
    ("--kernel-fraction", enums.PipelineConfigKeys.KERNEL_FRACTION, float, constants.DEFAULT_KERNEL_FRACTION,
     "Circular kernel radius as a fraction of the image smallest side."),
    ("--omega", enums.PipelineConfigKeys.OMEGA, float, constants.DEFAULT_OMEGA,
     "Mean color difference above which a region is considered missing from the render."),
    ("--segments", enums.PipelineConfigKeys.SEGMENTS_PER_PATH, int, constants.DEFAULT_SEGMENTS_PER_PATH,
     "Cubic segments per traced path."),
)
OPTIMIZATION_ARGUMENTS = (
    ("--phase1-iters", enums.PipelineConfigKeys.PHASE1_ITERS, int, constants.DEFAULT_PHASE1_ITERS,
     "Optimization iterations before the missing components round."),
    ("--phase2-iters", enums.PipelineConfigKeys.PHASE2_ITERS, int, constants.DEFAULT_PHASE2_ITERS,
     "Optimization iterations after the missing components round."),
    ("--lambda-xing", enums.PipelineConfigKeys.LAMBDA_XING, float, constants.DEFAULT_LAMBDA_XING,
     "Weight of the self-intersection loss."),
    ("--lr-points", enums.PipelineConfigKeys.LR_POINTS, float, constants.DEFAULT_LR_POINTS,
     "Learning rate of the control points."),
    ("--lr-colors", enums.PipelineConfigKeys.LR_COLORS, float, constants.DEFAULT_LR_COLORS,
     "Learning rate of the fill colors."),
)
RENDER_ARGUMENTS = (
    ("--flatten-steps", enums.PipelineConfigKeys.FLATTEN_STEPS, int, constants.DEFAULT_FLATTEN_STEPS,
     "Polyline vertices per cubic segment when rendering."),
    ("--smoothing", enums.PipelineConfigKeys.SMOOTHING, float, constants.DEFAULT_SMOOTHING,
     "Width in pixels of the anti-aliased edge band."),
)


def _add_config_arguments(parser, arguments_groups):
    parser.add_argument("--config", help="Json configuration file, command line flags take precedence.",
                        type=str, default=None)
    parser.set_defaults(**{enums.PipelineConfigKeys.PROVIDER.value: constants.DEFAULT_PROVIDER.value})
    for arguments in arguments_groups:
        for flag, key, arg_type, default, help_message in arguments:
            parser.add_argument(flag, dest=key.value, type=arg_type, default=default, help=help_message)


def _add_pipeline_arguments(parser):
    _add_config_arguments(parser, (SEGMENTATION_ARGUMENTS, SELECTION_ARGUMENTS,
                                   OPTIMIZATION_ARGUMENTS, RENDER_ARGUMENTS))
    parser.add_argument("--no-impact-filter", dest=enums.PipelineConfigKeys.USE_IMPACT_FILTER.value,
                        help="Keep every mask regardless of its impact on the canvas.",
                        action="store_false", default=constants.DEFAULT_USE_IMPACT_FILTER)


def vectorize_parser(parser):
    parser.add_argument("input", help="Raster image to vectorize (PPM or PNG).", type=str)
    parser.add_argument("-o", "--output", help="Output SVG file.", type=str, required=True)
    parser.add_argument("--report", help="Write the json vectorization report to this file.",
                        type=str, default=None)
    parser.add_argument("--render", help="Write the render of the final document to this image file.",
                        type=str, default=None)
    _add_pipeline_arguments(parser)
    parser.set_defaults(func=commands.vectorize)


def metrics_parser(parser):
    parser.add_argument("svg", help="SVG document to evaluate.", type=str)
    parser.add_argument("image", help="Target raster image.", type=str)
    _add_config_arguments(parser, (RENDER_ARGUMENTS, ))
    parser.set_defaults(func=commands.metrics)


def diagnose_parser(parser):
    parser.add_argument("input", help="Raster image to vectorize (PPM or PNG).", type=str)
    parser.add_argument("-o", "--output-dir", help="Folder receiving the diagnostic files.",
                        type=str, required=True)
    _add_pipeline_arguments(parser)
    parser.set_defaults(func=commands.diagnose)


def octovector_parser(parser) -> dict:
    """
    :return: the sub-command parsers by command name
    """
    parser.add_argument("-v", "--version", help=f"Show {constants.PROJECT_NAME} current version.",
                        action="store_true")
    subparsers = parser.add_subparsers(title="Commands", dest="command")
    command_parsers = {}
    for command, help_message, build_parser in (
        (enums.CliCommands.VECTORIZE, "Vectorize a raster image into an SVG document.", vectorize_parser),
        (enums.CliCommands.METRICS, "Print the MSE, path and parameter counts of an SVG document.",
         metrics_parser),
        (enums.CliCommands.DIAGNOSE, "Write the intermediate maps and impact decisions of a vectorization.",
         diagnose_parser),
    ):
        command_parser = subparsers.add_parser(command.value, help=help_message)
        build_parser(command_parser)
        command_parsers[command.value] = command_parser
    return command_parsers


def _config_overrides(parsed_args) -> dict:
    overrides = {
        key.value: getattr(parsed_args, key.value)
        for key in enums.PipelineConfigKeys
        if hasattr(parsed_args, key.value)
    }
    if overrides.get(enums.PipelineConfigKeys.MANIFEST_PATH.value):
        overrides[enums.PipelineConfigKeys.PROVIDER.value] = enums.SegmentationProviders.MANIFEST.value
    return overrides


def _parse_with_config_file(parser, command_parsers: dict, args: list):
    parsed_args = parser.parse_args(args)
    if getattr(parsed_args, "config", None):
        # configuration file values replace flag defaults, explicit flags still win
        file_config = configuration_manager.read_config_file(parsed_args.config)
        configuration_manager.validate_config_dict(file_config, parsed_args.config)
        command_parsers[parsed_args.command].set_defaults(**file_config)
        parsed_args = parser.parse_args(args)
    return parsed_args


def _failure(exit_code: enums.ExitCodes, label: str, err: Exception) -> int:
    print(f"{constants.PROJECT_NAME} {label}: {err}", file=sys.stderr)
    return exit_code.value


def main(args=None) -> int:
    if not args:
        args = sys.argv[1:]
    parser = argparse.ArgumentParser(prog=constants.PROJECT_NAME,
                                     description=f"{constants.PROJECT_NAME} raster image vectorizer")
    command_parsers = octovector_parser(parser)
    try:
        parsed_args = _parse_with_config_file(parser, command_parsers, args)
        if parsed_args.version:
            print(constants.LONG_VERSION)
            return enums.ExitCodes.SUCCESS.value
        if parsed_args.command is None:
            parser.print_usage(sys.stderr)
            return enums.ExitCodes.USAGE_ERROR.value
        octovector_logger.init_logger()
        config = configuration_manager.load_pipeline_config(overrides=_config_overrides(parsed_args))
        # call the appropriate command entry point
        parsed_args.func(parsed_args, config)
    except SystemExit as err:
        # argparse usage errors and help
        return err.code
    except errors.ConfigError as err:
        return _failure(enums.ExitCodes.USAGE_ERROR, "configuration error", err)
    except errors.ImageFormatError as err:
        return _failure(enums.ExitCodes.FORMAT_ERROR, "format error", err)
    except errors.OctoVectorError as err:
        logging.get_logger(CLI_LOGGER_NAME).exception(err, False, f"{parsed_args.command} failed")
        return _failure(enums.ExitCodes.FAILURE, "error", err)
    except OSError as err:
        return _failure(enums.ExitCodes.IO_ERROR, "IO error", err)
    return enums.ExitCodes.SUCCESS.value
