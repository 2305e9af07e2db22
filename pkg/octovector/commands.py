#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import json
import os

import octobot_commons.logging as logging

import octovector.api as api
import octovector.constants as constants
import octovector.enums as enums
import octovector.imagecore as imagecore
import octovector.pipeline as pipeline

COMMANDS_LOGGER_NAME = "Commands"

METRICS_MSE_LABEL = "MSE"
METRICS_PATHS_LABEL = "Paths"
METRICS_PARAMETERS_LABEL = "Num of Parameters"


def _write_json(content, path: str):
    with open(path, "w", encoding="utf-8") as json_file:
        json.dump(content, json_file, indent=2)


def vectorize(command_args, config: pipeline.PipelineConfig):
    logger = logging.get_logger(COMMANDS_LOGGER_NAME)
    image = imagecore.load_image(command_args.input)
    vectorization_pipeline = api.create_vectorization_pipeline(config)
    document, report = api.run_vectorization_pipeline(vectorization_pipeline, image)
    api.save_document(document, command_args.output)
    logger.info(f"Vector document saved to {command_args.output}")
    if command_args.report:
        _write_json(report.to_dict(), command_args.report)
        logger.info(f"Vectorization report saved to {command_args.report}")
    if command_args.render:
        imagecore.save_image(api.render_document(document, config.render_config()), command_args.render)
        logger.info(f"Render saved to {command_args.render}")


def metrics(command_args, config: pipeline.PipelineConfig):
    document_metrics = api.get_document_metrics(
        api.load_document(command_args.svg), imagecore.load_image(command_args.image), config.render_config()
    )
    print(f"{METRICS_MSE_LABEL}: {document_metrics.mse:.6e}")
    print(f"{METRICS_PATHS_LABEL}: {document_metrics.path_count}")
    print(f"{METRICS_PARAMETERS_LABEL}: {document_metrics.parameter_count}")


def diagnose(command_args, config: pipeline.PipelineConfig):
    """
    Run the pipeline and dump its intermediate maps and impact decisions into the output folder
    """
    logger = logging.get_logger(COMMANDS_LOGGER_NAME)
    image = imagecore.load_image(command_args.input)
    vectorization_pipeline = api.create_vectorization_pipeline(config)
    api.run_vectorization_pipeline(vectorization_pipeline, image)
    os.makedirs(command_args.output_dir, exist_ok=True)
    imagecore.save_scalar_map(vectorization_pipeline.coverage_alpha,
                              os.path.join(command_args.output_dir, constants.DIAGNOSE_COVERAGE_ALPHA_FILE))
    _write_json(api.get_vectorization_report(vectorization_pipeline)[enums.ReportKeys.IMPACT_DECISIONS.value],
                os.path.join(command_args.output_dir, constants.DIAGNOSE_IMPACT_DECISIONS_FILE))
    imagecore.save_scalar_map(vectorization_pipeline.missing_map,
                              os.path.join(command_args.output_dir, constants.DIAGNOSE_MISSING_MAP_FILE))
    logger.info(f"Diagnostics saved to {command_args.output_dir}")
